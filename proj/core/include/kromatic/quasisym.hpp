#pragma once

// The q-analogue X̄_G(q): set colorings weighted by ascents, the clan-graph
// sum, the pyramid-list power sum expansion and the p̄ / p̄′ coefficient
// formulas built on it.

#include "kromatic/heaps.hpp"
#include "kromatic/symfunc.hpp"

#include <map>

namespace kromatic {

enum class AscentScope {
  /// Quadruples (u, v, i, j) with {u, v} an edge.
  Edges,
  /// Quadruples over every vertex pair u < v.
  AllPairs,
};

/// Σ_κ q^{asc(κ)} ∏ x over proper set colorings with colors 1..M and total
/// size <= N. Returned densely since X̄_G(q) need not be symmetric.
MonomialPoly<IntQPoly> brute_force_kromatic_q(const Graph& g, int cap, int vars,
                                              AscentScope scope = AscentScope::Edges);

/// Σ_α X_{Clan_α(G)}(q) / [α]_q! over compositions with positive parts and
/// |α| <= N. Throws ArithmeticError if a division is not exact.
MonomialPoly<IntQPoly> kromatic_q_via_clans(const Graph& g, int cap, int vars);

enum class PyramidSet {
  /// Pyramid lists whose pieces use every vertex.
  AllVertices,
  /// Every pyramid list of the right sizes.
  Unrestricted,
};

/// For each λ with 1 <= |λ| <= N: Σ q^{asc(P_1∘…∘P_ℓ)} over ordered lists of
/// pyramids with |P_i| = λ_i. Requires g to be a natural unit interval graph.
std::map<Partition, IntQPoly> pyramid_p_expansion_q(const Graph& g, int cap,
                                                    PyramidSet set = PyramidSet::AllVertices,
                                                    AscentConvention convention = kAscentConvention);

/// Σ_λ S(λ) p_λ / z_λ in the monomial basis.
SymPoly<RatQPoly> reassemble_pyramid_expansion(const std::map<Partition, IntQPoly>& sums, int cap, int vars);

enum class Proposition { P5_1, P5_2, P5_3, P5_4 };

std::string proposition_name(Proposition p);

struct PropositionTarget {
  bool omega;
  Basis basis;
};
/// 5.1: [p̄′]ω(X̄(q)); 5.2: [p̄′]X̄(q); 5.3: [p̄]ω(X̄(q)); 5.4: [p̄]X̄(q).
PropositionTarget proposition_target(Proposition p);

/// Σ over (λ′, d, n) with (dλ′)^n = λ of S(λ′)/z_{λ′} ∏ m(d_i)(−1)^{n_i+1}/(d_i n_i),
/// m = μ for 5.1/5.2 and μ̂ for 5.3/5.4, with the extra factor
/// (−1)^{|λ′|−ℓ(λ′)} for 5.2/5.4.
RatQPoly proposition_coefficient(const std::map<Partition, IntQPoly>& sums, const Partition& lambda, Proposition p);
RatQPoly proposition_coefficient(const Graph& g, const Partition& lambda, Proposition p, int cap);

/// All decompositions λ = (dλ′)^n as (λ′, d, n).
struct ScaledRepeat {
  Partition base;
  Composition d;
  Composition n;
};
std::vector<ScaledRepeat> scaled_repeat_decompositions(const Partition& lambda);

/// ω applied with q as a scalar.
inline SymPoly<IntQPoly> omega_q(const SymPoly<IntQPoly>& f) { return omega(f); }

}  // namespace kromatic
