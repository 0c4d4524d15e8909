#pragma once

// The Kromatic symmetric function X̄_G and ω(X̄_G): subset formulas,
// brute-force set colorings, classical chromatic oracles, Lyndon-heap
// exponents and the coefficient counters in the p̄ and p̄′ bases.

#include "kromatic/graph.hpp"
#include "kromatic/heaps.hpp"
#include "kromatic/symfunc.hpp"

#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace kromatic {

/// Σ_{W⊆V} (−1)^{|V∖W|} ∏_{i≤M} I_{G|W}(x_i), truncated at degree N.
SymPoly<BigInt> kromatic_function(const Graph& g, int cap, int vars, int jobs = 1);
/// Same with H_{G|W}(t) = 1/I_{G|W}(−t) in place of I_{G|W}.
SymPoly<BigInt> omega_kromatic(const Graph& g, int cap, int vars, int jobs = 1);

/// Calls visit(sets) for every proper set coloring with colors in 1..M and
/// total size <= N; sets[v-1] is the color mask of vertex v (bit i-1 for
/// color i).
void for_each_set_coloring(const Graph& g, int cap, int vars,
                           const std::function<void(const std::vector<std::uint32_t>&)>& visit);

/// Generating function of proper set colorings, by enumeration.
SymPoly<BigInt> brute_force_kromatic(const Graph& g, int cap, int vars);

struct ClassicalExpansions {
  /// Signed counts of acyclic orientations by source-component sizes.
  std::map<Partition, BigInt> source_components;
  /// Σ_{S⊆E} (−1)^{|S|} p_{λ(S)}.
  std::map<Partition, BigInt> edge_subsets;
};

/// Two independent p-expansions of the chromatic symmetric function X_G.
ClassicalExpansions chromatic_p_expansion_oracles(const Graph& g);

/// Lyndon heaps of G up to a size bound, with their supports, answering
/// |L_{G|W}(k)| for any W (Lyndon heaps of G|W are those supported in W).
class LyndonTable {
 public:
  LyndonTable(const Graph& g, int max_size);

  int max_size() const { return static_cast<int>(heaps_.size()) - 1; }
  const std::vector<Heap>& heaps(int k) const { return heaps_.at(k); }
  const std::vector<VertexSubset>& supports(int k) const { return supports_.at(k); }
  long count(int k, VertexSubset w) const;

 private:
  std::vector<std::vector<Heap>> heaps_;
  std::vector<std::vector<VertexSubset>> supports_;
};

long exponent_d(const LyndonTable& t, VertexSubset w, int k);
long exponent_c(const LyndonTable& t, VertexSubset w, int k);
long exponent_b(const LyndonTable& t, VertexSubset w, int k);
long exponent_a(const LyndonTable& t, VertexSubset w, int k);
long exponent_d(const Graph& g, VertexSubset w, int k);
long exponent_c(const Graph& g, VertexSubset w, int k);
long exponent_b(const Graph& g, VertexSubset w, int k);
long exponent_a(const Graph& g, VertexSubset w, int k);

enum class FactorizationVariant {
  A,  ///< ∏ I(x_i) = ∏ (1+p̄_k)^{a(k)}
  B,  ///< ∏ H(x_i) = ∏ (1+p̄_k)^{b(k)}
  C,  ///< ∏ I(x_i) = ∏ (1+p̄′_k)^{c(k)}
  D,  ///< ∏ H(x_i) = ∏ (1+p̄′_k)^{d(k)}
};

/// Both sides of the factorization for G|W at the given truncation.
bool verify_factorization(const Graph& g, VertexSubset w, FactorizationVariant v, int cap, int vars);

enum class Theorem { T1_2, T1_3, T1_4, T1_5 };
enum class Coverage { InclusionExclusion, Direct };

std::string theorem_name(Theorem t);

/// Counts the families of Lyndon heaps described by the theorem, covering
/// every vertex of g.
BigInt theorem_coefficient(const Graph& g, const Partition& lambda, Theorem t,
                           Coverage method = Coverage::InclusionExclusion);
BigInt theorem_coefficient(const LyndonTable& table, int vertex_count, const Partition& lambda, Theorem t,
                           Coverage method = Coverage::InclusionExclusion);

/// The function and basis a theorem describes, and the sign it carries.
struct TheoremTarget {
  bool omega;
  Basis basis;
};
TheoremTarget theorem_target(Theorem t);

struct IndependenceEntry {
  int subset_size;
  IntPoly polynomial;
};

struct IndependenceMultiset {
  int vertex_count = 0;
  /// One entry per W ⊆ V, sorted.
  std::vector<IndependenceEntry> entries;
};

IndependenceMultiset independence_multiset(const Graph& g);
/// Alternating sum of ∏_i I(x_i) over the entries. Throws on a polynomial
/// whose constant term is not 1.
SymPoly<BigInt> kromatic_from_multiset(const IndependenceMultiset& ms, int cap, int vars);

/// Signed family {(b_W(1), …, b_W(K)) with sign (−1)^{|V∖W|}}.
struct SignedExponentMultiset {
  int K = 0;
  std::map<std::vector<long>, BigInt> counts;

  void add(const std::vector<long>& v, const BigInt& c);
  bool operator==(const SignedExponentMultiset& o) const { return K == o.K && counts == o.counts; }
};

/// b_W(k), k ≤ K, from Lyndon enumeration.
SignedExponentMultiset direct_signed_exponent_multiset(const Graph& g, int K);

/// b_W(k) = Σ_{d|k} μ̂(d) g_{k/d} / d where g = log H_{G|W}.
std::vector<long> exponents_b_from_series(const IntPoly& independence, int K);

/// Upper bounds cap_k = Σ_{2^j|k} |H_G(k/2^j)| on every b_W(k).
std::vector<long> exponent_caps(const Graph& g, int K);

/// [p̄_λ]ω(X̄_G) without expanding in monomials: Σ_W (−1)^{|V∖W|} ∏_k C(b_W(k), i_k(λ)),
/// exponents taken from the independence series.
class OmegaPbarCoefficients {
 public:
  explicit OmegaPbarCoefficients(const Graph& g, int max_part);
  BigInt operator()(const Partition& lambda) const;

 private:
  int max_part_;
  std::vector<std::pair<BigInt, std::vector<long>>> terms_;
};

/// Peels the signed exponent family off p̄-coefficients a_u = [p̄_{λ(u)}]F
/// for u in the box ∏_k [0, caps[k-1]], using
/// a_u = Σ_v c_v ∏_k C(v_k, u_k).
SignedExponentMultiset recover_signed_exponent_multiset(const std::function<BigInt(const Partition&)>& pbar_coefficient,
                                                        const std::vector<long>& caps);
/// From a truncated ω-Kromatic function; requires Σ_k k·caps[k-1] <= N.
SignedExponentMultiset recover_signed_exponent_multiset(const SymPoly<BigInt>& f, const std::vector<long>& caps);

/// Degree-≤K truncations of I = 1/H(−t) with H(t) = ∏_k (1+t^k)^{b(k)},
/// aggregated with signs.
std::map<std::vector<BigInt>, BigInt> independence_truncations(const SignedExponentMultiset& s);
/// The same aggregation read directly off an independence multiset.
std::map<std::vector<BigInt>, BigInt> independence_truncations(const IndependenceMultiset& ms, int K);

}  // namespace kromatic
