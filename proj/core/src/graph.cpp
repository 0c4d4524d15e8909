#include "kromatic/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kromatic {

std::vector<int> subset_vertices(VertexSubset s) {
  std::vector<int> out;
  while (s) {
    out.push_back(__builtin_ctzll(s) + 1);
    s &= s - 1;
  }
  return out;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(n >= 0 && n <= kMaxVertices ? n : 0, 0) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph vertex count must be in [0, 64], got " + std::to_string(n));
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n)
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
      throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    adj_[u - 1] |= vertex_bit(v);
    adj_[v - 1] |= vertex_bit(u);
  }
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e);
}

Graph Graph::cycle(int n) {
  auto e = path(n).edges();
  if (n >= 3) e.emplace_back(1, n);
  return Graph(n, e);
}

Graph Graph::edgeless(int n) { return Graph(n, {}); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u)
    for (int v = u + 1; v <= n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto a : adj_) twice += subset_size(a);
  return twice / 2;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSubset w) {
  if (w & ~g.all_vertices()) throw std::invalid_argument("induced_subgraph: subset out of range");
  InducedSubgraph r;
  r.vertex_map = subset_vertices(w);
  std::vector<int> index(g.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < r.vertex_map.size(); ++i) index[r.vertex_map[i]] = static_cast<int>(i) + 1;
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges())
    if (index[u] && index[v]) e.emplace_back(index[u], index[v]);
  r.graph = Graph(static_cast<int>(r.vertex_map.size()), e);
  return r;
}

ClanGraph clan_graph(const Graph& g, const Composition& alpha) {
  if (alpha.length() != g.vertex_count()) throw std::invalid_argument("clan_graph: composition length mismatch");
  ClanGraph r;
  for (int v = 1; v <= g.vertex_count(); ++v) r.piece_vertex.insert(r.piece_vertex.end(), alpha[v - 1], v);
  const int m = static_cast<int>(r.piece_vertex.size());
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      int u = r.piece_vertex[a], v = r.piece_vertex[b];
      if (u == v || g.adjacent(u, v)) e.emplace_back(a + 1, b + 1);
    }
  r.graph = Graph(m, e);
  return r;
}

void for_each_independent_set(const Graph& g, const std::function<void(VertexSubset)>& visit) {
  const int n = g.vertex_count();
  // Backtracking: decide vertices in increasing order, only adding a vertex
  // when none of its neighbours is already present.
  std::function<void(int, VertexSubset)> rec = [&](int v, VertexSubset cur) {
    if (v > n) {
      visit(cur);
      return;
    }
    rec(v + 1, cur);
    if (!(g.neighbors(v) & cur)) rec(v + 1, cur | vertex_bit(v));
  };
  rec(1, 0);
}

IntPoly independence_polynomial(const Graph& g) {
  std::vector<BigInt> c(g.vertex_count() + 1, BigInt(0));
  for_each_independent_set(g, [&](VertexSubset s) { c[subset_size(s)] += 1; });
  return IntPoly::from_coefficients(std::move(c));
}

Orientation::Orientation(const Graph& g, std::vector<VertexSubset> out) : out_(std::move(out)) {
  if (static_cast<int>(out_.size()) != g.vertex_count()) throw std::invalid_argument("orientation size mismatch");
  for (auto [u, v] : g.edges())
    if (directed(u, v) == directed(v, u)) throw std::invalid_argument("edge must be directed exactly one way");
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (out_[v - 1] & ~g.neighbors(v)) throw std::invalid_argument("orientation has an arc that is not an edge");
}

bool Orientation::is_acyclic() const {
  // Kahn's algorithm on masks.
  const int n = vertex_count();
  VertexSubset remaining = full_subset(n);
  while (remaining) {
    bool progress = false;
    for (int v = 1; v <= n; ++v) {
      if (!(remaining & vertex_bit(v))) continue;
      bool has_in = false;
      for (int u = 1; u <= n && !has_in; ++u)
        if ((remaining & vertex_bit(u)) && directed(u, v)) has_in = true;
      if (!has_in) {
        remaining &= ~vertex_bit(v);
        progress = true;
      }
    }
    if (!progress) return false;
  }
  return true;
}

void for_each_acyclic_orientation(const Graph& g, const std::function<void(const Orientation&)>& visit) {
  const auto e = g.edges();
  const int n = g.vertex_count();
  if (e.size() >= 63) throw std::invalid_argument("too many edges to enumerate orientations");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << e.size()); ++bits) {
    std::vector<VertexSubset> out(n, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto [u, v] = e[i];
      if ((bits >> i) & 1)
        out[v - 1] |= vertex_bit(u);
      else
        out[u - 1] |= vertex_bit(v);
    }
    Orientation o(g, std::move(out));
    if (o.is_acyclic()) visit(o);
  }
}

std::vector<Orientation> acyclic_orientations(const Graph& g) {
  std::vector<Orientation> out;
  for_each_acyclic_orientation(g, [&](const Orientation& o) { out.push_back(o); });
  return out;
}

std::vector<VertexSubset> source_components(const Orientation& o) {
  if (!o.is_acyclic()) throw std::invalid_argument("source_components: orientation is cyclic");
  const int n = o.vertex_count();
  VertexSubset unvisited = full_subset(n);
  std::vector<VertexSubset> blocks;
  while (unvisited) {
    int first = __builtin_ctzll(unvisited) + 1;
    VertexSubset block = vertex_bit(first), frontier = block;
    while (frontier) {
      int v = __builtin_ctzll(frontier) + 1;
      frontier &= frontier - 1;
      VertexSubset next = o.out(v) & unvisited & ~block;
      block |= next;
      frontier |= next;
    }
    blocks.push_back(block);
    unvisited &= ~block;
  }
  return blocks;
}

void UnitIntervalModel::validate() const {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("unit interval model: bad vertex count");
  if (static_cast<int>(bounds.size()) != n) throw std::invalid_argument("unit interval model: need one bound per vertex");
  for (int i = 1; i <= n; ++i) {
    int h = bounds[i - 1];
    if (h < i || h > n) throw std::invalid_argument("unit interval model: bound h_" + std::to_string(i) + " out of range");
    if (i > 1 && h < bounds[i - 2]) throw std::invalid_argument("unit interval model: bounds must be nondecreasing");
  }
}

Graph unit_interval_graph(const UnitIntervalModel& m) {
  m.validate();
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= m.n; ++i)
    for (int j = i + 1; j <= m.bounds[i - 1]; ++j) e.emplace_back(i, j);
  return Graph(m.n, e);
}

bool is_unit_interval_ordering(const Graph& g) {
  const int n = g.vertex_count();
  auto less = [&](int a, int b) { return a < b && !g.adjacent(a, b); };
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        if (less(a, b) && less(b, c) && !less(a, c)) return false;
  auto comparable = [&](int a, int b) { return less(a, b) || less(b, a); };
  // (2+2): a<b, c<d, with every cross pair incomparable.
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (!less(a, b)) continue;
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          if (!less(c, d) || c == a || c == b || d == a || d == b) continue;
          if (!comparable(a, c) && !comparable(a, d) && !comparable(b, c) && !comparable(b, d)) return false;
        }
    }
  // (3+1): a<b<c and d incomparable to all three.
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (!less(a, b)) continue;
      for (int c = 1; c <= n; ++c) {
        if (!less(b, c)) continue;
        for (int d = 1; d <= n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (!comparable(a, d) && !comparable(b, d) && !comparable(c, d)) return false;
        }
      }
    }
  return true;
}

}  // namespace kromatic
