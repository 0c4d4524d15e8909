#pragma once

// Simple graphs on vertices 1..n (numeric order is the fixed total order),
// induced subgraphs, clan graphs, independence polynomials, acyclic
// orientations and unit interval models.

#include "kromatic/numbers.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace kromatic {

inline constexpr int kMaxVertices = 64;

/// Bit v-1 set iff vertex v is in the subset.
using VertexSubset = std::uint64_t;

inline VertexSubset vertex_bit(int v) { return VertexSubset{1} << (v - 1); }
inline VertexSubset full_subset(int n) {
  return n >= 64 ? ~VertexSubset{0} : (VertexSubset{1} << n) - 1;
}
inline int subset_size(VertexSubset s) { return __builtin_popcountll(s); }
std::vector<int> subset_vertices(VertexSubset s);

/// Univariate integer polynomial in t (independence polynomials).
using IntPoly = QPoly<BigInt>;

class Graph {
 public:
  Graph() = default;
  /// Edges are 1-based unordered pairs; loops, duplicates and out-of-range
  /// endpoints throw std::invalid_argument.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph edgeless(int n);

  int vertex_count() const { return n_; }
  bool adjacent(int u, int v) const { return (adj_[u - 1] >> (v - 1)) & 1; }
  VertexSubset neighbors(int v) const { return adj_[v - 1]; }
  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;
  VertexSubset all_vertices() const { return full_subset(n_); }

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSubset> adj_;
};

struct InducedSubgraph {
  Graph graph;
  /// vertex_map[i] is the host vertex behind new vertex i+1.
  std::vector<int> vertex_map;
};

/// G|_W with vertices renumbered 1..|W| in the inherited order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSubset w);

struct ClanGraph {
  Graph graph;
  /// piece_vertex[i] is the vertex of G that piece i+1 was blown up from.
  std::vector<int> piece_vertex;
};

/// Vertex i becomes a clique of alpha_i pieces; pieces of vertex 1 come
/// first, then those of vertex 2, and so on.
ClanGraph clan_graph(const Graph& g, const Composition& alpha);

/// I_G(t) = Σ_{S independent} t^{|S|}.
IntPoly independence_polynomial(const Graph& g);

/// Visits every independent set of g (as a subset mask), starting with ∅.
void for_each_independent_set(const Graph& g, const std::function<void(VertexSubset)>& visit);

class Orientation {
 public:
  Orientation(const Graph& g, std::vector<VertexSubset> out);

  int vertex_count() const { return static_cast<int>(out_.size()); }
  /// Out-neighbourhood of v.
  VertexSubset out(int v) const { return out_[v - 1]; }
  bool directed(int u, int v) const { return (out_[u - 1] >> (v - 1)) & 1; }
  bool is_acyclic() const;

 private:
  std::vector<VertexSubset> out_;
};

void for_each_acyclic_orientation(const Graph& g, const std::function<void(const Orientation&)>& visit);
std::vector<Orientation> acyclic_orientations(const Graph& g);

/// Ordered blocks: the least unvisited vertex together with every unvisited
/// vertex reachable from it. Throws on a cyclic orientation.
std::vector<VertexSubset> source_components(const Orientation& o);

struct UnitIntervalModel {
  int n = 0;
  std::vector<int> bounds;

  /// Throws unless bounds is nondecreasing with i <= h_i <= n.
  void validate() const;
};

/// Edges {i, j} for i < j <= h_i.
Graph unit_interval_graph(const UnitIntervalModel& m);

/// True iff "i < j and {i,j} not an edge" is a (2+2)- and (3+1)-free partial
/// order, i.e. g with its vertex order is a natural unit interval graph.
bool is_unit_interval_ordering(const Graph& g);

}  // namespace kromatic
