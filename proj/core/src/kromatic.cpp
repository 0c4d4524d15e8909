#include "kromatic/kromatic.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace kromatic {

namespace {

int subset_sign(int n, VertexSubset w) { return (n - subset_size(w)) % 2 == 0 ? 1 : -1; }

IntPoly independence_of(const Graph& g, VertexSubset w) {
  return independence_polynomial(induced_subgraph(g, w).graph);
}

// Σ_W per_subset(W) over all subsets, split across `jobs` threads by a
// fixed stride; partial sums are added in thread order.
SymPoly<BigInt> sum_over_subsets(const Graph& g, int cap, int vars, int jobs,
                                 const std::function<SymPoly<BigInt>(VertexSubset)>& per_subset) {
  const int n = g.vertex_count();
  if (n > 30) throw std::invalid_argument("subset sums are limited to 30 vertices");
  const std::uint64_t total = std::uint64_t{1} << n;
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::uint64_t>(total, 64))));
  std::vector<SymPoly<BigInt>> partial(jobs, SymPoly<BigInt>(vars, cap));
  auto work = [&](int j) {
    for (std::uint64_t w = j; w < total; w += jobs) partial[j] += per_subset(w);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  SymPoly<BigInt> sum(vars, cap);
  for (const auto& p : partial) sum += p;
  return sum;
}

}  // namespace

SymPoly<BigInt> kromatic_function(const Graph& g, int cap, int vars, int jobs) {
  const int n = g.vertex_count();
  return sum_over_subsets(g, cap, vars, jobs, [&](VertexSubset w) {
    auto f = USeries<BigInt>::from_polynomial(independence_of(g, w), cap);
    return BigInt(subset_sign(n, w)) * product_over_variables(f, vars, cap);
  });
}

SymPoly<BigInt> omega_kromatic(const Graph& g, int cap, int vars, int jobs) {
  const int n = g.vertex_count();
  return sum_over_subsets(g, cap, vars, jobs, [&](VertexSubset w) {
    auto i = USeries<BigInt>::from_polynomial(independence_of(g, w), cap);
    auto h = series_reciprocal(series_neg_sub(i));
    return BigInt(subset_sign(n, w)) * product_over_variables(h, vars, cap);
  });
}

void for_each_set_coloring(const Graph& g, int cap, int vars,
                           const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (vars > 31) throw std::invalid_argument("too many colors for brute force");
  const int n = g.vertex_count();
  std::vector<std::uint32_t> sets(n, 0);
  const std::uint32_t all = (std::uint32_t{1} << vars) - 1;
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (v > n) {
      visit(sets);
      return;
    }
    std::uint32_t forbidden = 0;
    for (int u = 1; u < v; ++u)
      if (g.adjacent(u, v)) forbidden |= sets[u - 1];
    for (std::uint32_t s = 1; s <= all; ++s) {
      if (s & forbidden) continue;
      int size = __builtin_popcount(s);
      if (used + size + (n - v) > cap) continue;
      sets[v - 1] = s;
      rec(v + 1, used + size);
    }
    sets[v - 1] = 0;
  };
  rec(1, 0);
}

SymPoly<BigInt> brute_force_kromatic(const Graph& g, int cap, int vars) {
  MonomialPoly<BigInt> dense(vars, cap);
  for_each_set_coloring(g, cap, vars, [&](const std::vector<std::uint32_t>& sets) {
    std::vector<int> a(vars, 0);
    for (auto s : sets)
      for (int i = 0; i < vars; ++i) a[i] += (s >> i) & 1;
    dense.add_term(a, 1);
  });
  return dense.to_symmetric();
}

ClassicalExpansions chromatic_p_expansion_oracles(const Graph& g) {
  ClassicalExpansions out;
  for_each_acyclic_orientation(g, [&](const Orientation& o) {
    std::vector<int> parts;
    for (auto block : source_components(o)) parts.push_back(subset_size(block));
    Partition lam(parts);
    out.source_components[lam] += omega_sign(lam);
  });
  const auto edges = g.edges();
  const int n = g.vertex_count();
  if (edges.size() > 30) throw std::invalid_argument("too many edges for the edge-subset expansion");
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << edges.size()); ++s) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((s >> i) & 1) parent[find(edges[i].first - 1)] = find(edges[i].second - 1);
    std::vector<int> size(n, 0);
    for (int v = 0; v < n; ++v) ++size[find(v)];
    std::vector<int> parts;
    for (int c : size)
      if (c) parts.push_back(c);
    out.edge_subsets[Partition(parts)] += (__builtin_popcountll(s) % 2 == 0) ? 1 : -1;
  }
  std::erase_if(out.source_components, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(out.edge_subsets, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LyndonTable::LyndonTable(const Graph& g, int max_size) {
  auto shared = std::make_shared<const Graph>(g);
  heaps_.resize(max_size + 1);
  supports_.resize(max_size + 1);
  for (int k = 1; k <= max_size; ++k) {
    heaps_[k] = enumerate_lyndon(shared, k);
    for (const auto& h : heaps_[k]) supports_[k].push_back(h.support());
  }
}

long LyndonTable::count(int k, VertexSubset w) const {
  if (k < 1 || k > max_size()) throw std::out_of_range("Lyndon table does not reach size " + std::to_string(k));
  return std::count_if(supports_[k].begin(), supports_[k].end(), [&](VertexSubset s) { return (s & ~w) == 0; });
}

long exponent_d(const LyndonTable& t, VertexSubset w, int k) { return t.count(k, w); }

long exponent_c(const LyndonTable& t, VertexSubset w, int k) {
  if (k % 4 == 2) return -t.count(k, w) - t.count(k / 2, w);
  return k % 2 == 1 ? t.count(k, w) : -t.count(k, w);
}

long exponent_b(const LyndonTable& t, VertexSubset w, int k) {
  long sum = 0;
  for (int m = k;; m /= 2) {
    sum += t.count(m, w);
    if (m % 2) break;
  }
  return sum;
}

long exponent_a(const LyndonTable& t, VertexSubset w, int k) {
  if (k % 2 == 1) return t.count(k, w);
  long sum = 0;
  for (int m = k; m % 2 == 0; m /= 2) sum += t.count(m, w);
  return -sum;
}

long exponent_d(const Graph& g, VertexSubset w, int k) { return exponent_d(LyndonTable(g, k), w, k); }
long exponent_c(const Graph& g, VertexSubset w, int k) { return exponent_c(LyndonTable(g, k), w, k); }
long exponent_b(const Graph& g, VertexSubset w, int k) { return exponent_b(LyndonTable(g, k), w, k); }
long exponent_a(const Graph& g, VertexSubset w, int k) { return exponent_a(LyndonTable(g, k), w, k); }

bool verify_factorization(const Graph& g, VertexSubset w, FactorizationVariant variant, int cap, int vars) {
  using V = FactorizationVariant;
  auto i = USeries<BigInt>::from_polynomial(independence_of(g, w), cap);
  const bool heap_side = variant == V::B || variant == V::D;
  auto lhs = product_over_variables(heap_side ? series_reciprocal(series_neg_sub(i)) : i, vars, cap);

  LyndonTable table(g, cap);
  const Basis basis = (variant == V::A || variant == V::B) ? Basis::PBar : Basis::PBarPrime;
  auto rhs = SymPoly<BigInt>::one(vars, cap);
  for (int k = 1; k <= cap; ++k) {
    long e = 0;
    switch (variant) {
      case V::A: e = exponent_a(table, w, k); break;
      case V::B: e = exponent_b(table, w, k); break;
      case V::C: e = exponent_c(table, w, k); break;
      case V::D: e = exponent_d(table, w, k); break;
    }
    if (e == 0) continue;
    rhs = rhs * pow(SymPoly<BigInt>::one(vars, cap) + basis_element(basis, k, vars, cap), e);
  }
  return lhs == rhs;
}

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::T1_2: return "1.2";
    case Theorem::T1_3: return "1.3";
    case Theorem::T1_4: return "1.4";
    case Theorem::T1_5: return "1.5";
  }
  return "?";
}

TheoremTarget theorem_target(Theorem t) {
  switch (t) {
    case Theorem::T1_2: return {false, Basis::PBar};
    case Theorem::T1_3: return {true, Basis::PBar};
    case Theorem::T1_4: return {false, Basis::PBarPrime};
    case Theorem::T1_5: return {true, Basis::PBarPrime};
  }
  return {false, Basis::PBar};
}

namespace {

// Heaps a part value k may be matched with, and whether repeated copies of
// k must use distinct heaps.
struct Menu {
  std::vector<int> sizes;
  bool distinct;
};

Menu menu_for(Theorem t, int k) {
  Menu m{{}, true};
  switch (t) {
    case Theorem::T1_2:
      if (k % 2 == 1) {
        m.sizes = {k};
      } else {
        m.distinct = false;
        for (int s = k; s % 2 == 0; s /= 2) m.sizes.push_back(s);
      }
      break;
    case Theorem::T1_3:
      for (int s = k;; s /= 2) {
        m.sizes.push_back(s);
        if (s % 2) break;
      }
      break;
    case Theorem::T1_4:
      m.sizes = {k};
      if (k % 2 == 0) m.distinct = false;
      if (k % 4 == 2) m.sizes.push_back(k / 2);
      break;
    case Theorem::T1_5:
      m.sizes = {k};
      break;
  }
  return m;
}

BigInt selections(long available, int r, bool distinct) {
  return distinct ? binomial(BigInt(available), r) : multichoose(BigInt(available), r);
}

}  // namespace

BigInt theorem_coefficient(const LyndonTable& table, int n, const Partition& lambda, Theorem t, Coverage method) {
  if (lambda.largest() > table.max_size()) throw std::invalid_argument("Lyndon table too small for partition");
  std::map<int, int> mult;
  for (int k : lambda.parts()) ++mult[k];
  const VertexSubset all = full_subset(n);

  if (method == Coverage::InclusionExclusion) {
    BigInt total = 0;
    for (VertexSubset w = 0;; ++w) {
      BigInt term = subset_sign(n, w);
      for (auto [k, r] : mult) {
        Menu m = menu_for(t, k);
        long available = 0;
        for (int s : m.sizes) available += table.count(s, w);
        term *= selections(available, r, m.distinct);
        if (term == 0) break;
      }
      total += term;
      if (w == all) break;
    }
    return total;
  }

  // Direct count: distribution of the union of supports, part value by part
  // value, then OR-convolution.
  std::map<VertexSubset, BigInt> dist{{0, 1}};
  for (auto [k, r] : mult) {
    Menu m = menu_for(t, k);
    std::map<VertexSubset, long> groups;
    for (int s : m.sizes)
      for (VertexSubset sup : table.supports(s)) ++groups[sup];
    // state: (union mask, heaps picked so far)
    std::map<std::pair<VertexSubset, int>, BigInt> local{{{0, 0}, 1}};
    for (auto [mask, size] : groups) {
      std::map<std::pair<VertexSubset, int>, BigInt> next;
      for (const auto& [state, ways] : local)
        for (int c = 0; state.second + c <= r; ++c) {
          BigInt choose = selections(size, c, m.distinct);
          if (choose == 0) break;
          next[{c ? state.first | mask : state.first, state.second + c}] += ways * choose;
        }
      local = std::move(next);
    }
    std::map<VertexSubset, BigInt> merged;
    for (const auto& [state, ways] : local) {
      if (state.second != r) continue;
      for (const auto& [d, cnt] : dist) merged[d | state.first] += cnt * ways;
    }
    dist = std::move(merged);
  }
  auto it = dist.find(all);
  return it == dist.end() ? BigInt(0) : it->second;
}

BigInt theorem_coefficient(const Graph& g, const Partition& lambda, Theorem t, Coverage method) {
  LyndonTable table(g, std::max(1, lambda.largest()));
  return theorem_coefficient(table, g.vertex_count(), lambda, t, method);
}

IndependenceMultiset independence_multiset(const Graph& g) {
  IndependenceMultiset ms;
  ms.vertex_count = g.vertex_count();
  for (VertexSubset w = 0;; ++w) {
    ms.entries.push_back({subset_size(w), independence_of(g, w)});
    if (w == g.all_vertices()) break;
  }
  std::sort(ms.entries.begin(), ms.entries.end(), [](const IndependenceEntry& a, const IndependenceEntry& b) {
    if (a.subset_size != b.subset_size) return a.subset_size < b.subset_size;
    return a.polynomial.coefficients() < b.polynomial.coefficients();
  });
  return ms;
}

SymPoly<BigInt> kromatic_from_multiset(const IndependenceMultiset& ms, int cap, int vars) {
  SymPoly<BigInt> sum(vars, cap);
  for (const auto& e : ms.entries) {
    if (!(e.polynomial.coefficient(0) == 1))
      throw std::invalid_argument("independence polynomial must have constant term 1");
    auto f = USeries<BigInt>::from_polynomial(e.polynomial, cap);
    int sign = (ms.vertex_count - e.subset_size) % 2 == 0 ? 1 : -1;
    sum += BigInt(sign) * product_over_variables(f, vars, cap);
  }
  return sum;
}

void SignedExponentMultiset::add(const std::vector<long>& v, const BigInt& c) {
  if (static_cast<int>(v.size()) != K) throw std::invalid_argument("exponent vector length mismatch");
  auto& slot = counts[v];
  slot += c;
  if (slot == 0) counts.erase(v);
}

SignedExponentMultiset direct_signed_exponent_multiset(const Graph& g, int K) {
  LyndonTable table(g, K);
  SignedExponentMultiset s;
  s.K = K;
  for (VertexSubset w = 0;; ++w) {
    std::vector<long> v;
    for (int k = 1; k <= K; ++k) v.push_back(exponent_b(table, w, k));
    s.add(v, subset_sign(g.vertex_count(), w));
    if (w == g.all_vertices()) break;
  }
  return s;
}

std::vector<long> exponents_b_from_series(const IntPoly& independence, int K) {
  auto i = USeries<BigRational>::from_polynomial(independence, K);
  auto g = series_log(series_reciprocal(series_neg_sub(i)));
  std::vector<long> b;
  for (int n = 1; n <= K; ++n) {
    BigRational acc = 0;
    for (int d : divisors(n)) acc += BigRational(mu_hat(d)) * g[n / d] / d;
    b.push_back(lower(acc).get_si());
  }
  return b;
}

std::vector<long> exponent_caps(const Graph& g, int K) {
  auto i = USeries<BigInt>::from_polynomial(independence_polynomial(g), K);
  auto h = series_reciprocal(series_neg_sub(i));
  std::vector<long> caps;
  for (int k = 1; k <= K; ++k) {
    BigInt sum = 0;
    for (int m = k;; m /= 2) {
      sum += h[m];
      if (m % 2) break;
    }
    caps.push_back(sum.get_si());
  }
  return caps;
}

OmegaPbarCoefficients::OmegaPbarCoefficients(const Graph& g, int max_part) : max_part_(max_part) {
  for (VertexSubset w = 0;; ++w) {
    terms_.emplace_back(BigInt(subset_sign(g.vertex_count(), w)), exponents_b_from_series(independence_of(g, w), max_part));
    if (w == g.all_vertices()) break;
  }
}

BigInt OmegaPbarCoefficients::operator()(const Partition& lambda) const {
  if (lambda.largest() > max_part_) throw std::invalid_argument("partition has a part above the prepared range");
  std::map<int, int> mult;
  for (int k : lambda.parts()) ++mult[k];
  BigInt total = 0;
  for (const auto& [sign, b] : terms_) {
    BigInt term = sign;
    for (auto [k, r] : mult) {
      term *= binomial(BigInt(b[k - 1]), r);
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

SignedExponentMultiset recover_signed_exponent_multiset(const std::function<BigInt(const Partition&)>& pbar_coefficient,
                                                        const std::vector<long>& caps) {
  const int K = static_cast<int>(caps.size());
  std::vector<long> dims(K), stride(K);
  long total = 1;
  for (int k = 0; k < K; ++k) {
    if (caps[k] < 0) throw std::invalid_argument("negative exponent cap");
    dims[k] = caps[k] + 1;
    stride[k] = total;
    total *= dims[k];
  }
  auto unpack = [&](long idx) {
    std::vector<long> u(K);
    for (int k = 0; k < K; ++k) u[k] = (idx / stride[k]) % dims[k];
    return u;
  };
  std::vector<BigInt> a(total);
  for (long idx = 0; idx < total; ++idx) {
    auto u = unpack(idx);
    std::vector<int> parts;
    for (int k = 0; k < K; ++k) parts.insert(parts.end(), u[k], k + 1);
    a[idx] = pbar_coefficient(Partition(parts));
  }
  // The system a_u = Σ_{v>=u} c_v ∏_k C(v_k, u_k) is a tensor product of
  // unitriangular binomial matrices; peel one coordinate at a time with
  // c_v = Σ_{u>=v} (−1)^{u−v} C(u, v) a_u.
  for (int k = 0; k < K; ++k) {
    for (long base = 0; base < total; ++base) {
      if ((base / stride[k]) % dims[k] != 0) continue;
      std::vector<BigInt> line(dims[k]);
      for (long x = 0; x < dims[k]; ++x) line[x] = a[base + x * stride[k]];
      for (long v = 0; v < dims[k]; ++v) {
        BigInt c = 0;
        for (long u = v; u < dims[k]; ++u) {
          BigInt term = binomial(BigInt(u), static_cast<int>(v)) * line[u];
          if ((u - v) % 2) c -= term;
          else c += term;
        }
        a[base + v * stride[k]] = c;
      }
    }
  }
  SignedExponentMultiset s;
  s.K = K;
  for (long idx = 0; idx < total; ++idx)
    if (a[idx] != 0) s.add(unpack(idx), a[idx]);
  return s;
}

SignedExponentMultiset recover_signed_exponent_multiset(const SymPoly<BigInt>& f, const std::vector<long>& caps) {
  long degree = 0;
  for (std::size_t k = 0; k < caps.size(); ++k) degree += static_cast<long>(k + 1) * caps[k];
  if (degree > f.cap())
    throw Error("truncation " + std::to_string(f.cap()) + " too small for the exponent box (needs " +
                std::to_string(degree) + ")");
  auto e = lower(extract(f, Basis::PBar));
  return recover_signed_exponent_multiset([&](const Partition& lam) { return e.coefficient(lam); }, caps);
}

std::map<std::vector<BigInt>, BigInt> independence_truncations(const SignedExponentMultiset& s) {
  std::map<std::vector<BigInt>, BigInt> out;
  for (const auto& [v, c] : s.counts) {
    auto h = USeries<BigInt>::one(s.K);
    for (int k = 1; k <= s.K; ++k) {
      auto factor = USeries<BigInt>::one(s.K);
      factor[k] = 1;
      h = h * series_pow(factor, v[k - 1]);
    }
    auto i = series_reciprocal(series_neg_sub(h));
    out[i.coefficients()] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<std::vector<BigInt>, BigInt> independence_truncations(const IndependenceMultiset& ms, int K) {
  std::map<std::vector<BigInt>, BigInt> out;
  for (const auto& e : ms.entries) {
    auto i = USeries<BigInt>::from_polynomial(e.polynomial, K);
    out[i.coefficients()] += (ms.vertex_count - e.subset_size) % 2 == 0 ? 1 : -1;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace kromatic
