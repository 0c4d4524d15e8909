#include "kromatic/quasisym.hpp"

#include "kromatic/kromatic.hpp"

#include <functional>

namespace kromatic {

MonomialPoly<IntQPoly> brute_force_kromatic_q(const Graph& g, int cap, int vars, AscentScope scope) {
  MonomialPoly<IntQPoly> out(vars, cap);
  const int n = g.vertex_count();
  for_each_set_coloring(g, cap, vars, [&](const std::vector<std::uint32_t>& sets) {
    std::vector<int> a(vars, 0);
    for (auto s : sets)
      for (int i = 0; i < vars; ++i) a[i] += (s >> i) & 1;
    int asc = 0;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) {
        if (scope == AscentScope::Edges && !g.adjacent(u, v)) continue;
        for (int i = 0; i < vars; ++i) {
          if (!((sets[u - 1] >> i) & 1)) continue;
          // colors j > i of v
          asc += __builtin_popcount(sets[v - 1] >> (i + 1));
        }
      }
    out.add_term(a, IntQPoly::monomial(asc));
  });
  return out;
}

MonomialPoly<IntQPoly> kromatic_q_via_clans(const Graph& g, int cap, int vars) {
  MonomialPoly<IntQPoly> total(vars, cap);
  for (const auto& alpha : positive_compositions(g.vertex_count(), cap)) {
    ClanGraph clan = clan_graph(g, alpha);
    const Graph& cg = clan.graph;
    const int m = cg.vertex_count();
    MonomialPoly<IntQPoly> term(vars, cap);
    std::vector<int> color(m, 0);
    std::function<void(int)> rec = [&](int p) {
      if (p == m) {
        std::vector<int> a(vars, 0);
        int asc = 0;
        for (int x = 0; x < m; ++x) {
          ++a[color[x] - 1];
          for (int y = x + 1; y < m; ++y)
            if (cg.adjacent(x + 1, y + 1) && color[x] < color[y]) ++asc;
        }
        term.add_term(a, IntQPoly::monomial(asc));
        return;
      }
      for (int c = 1; c <= vars; ++c) {
        bool ok = true;
        for (int x = 0; x < p && ok; ++x) ok = !(cg.adjacent(x + 1, p + 1) && color[x] == c);
        if (!ok) continue;
        color[p] = c;
        rec(p + 1);
      }
    };
    rec(0);
    const IntQPoly denom = q_factorial(alpha);
    for (const auto& [a, c] : term.terms()) {
      auto quotient = divide_exact(c, denom);
      if (!quotient) throw ArithmeticError("clan term not divisible by [alpha]_q!");
      total.add_term(a, *quotient);
    }
  }
  return total;
}

std::map<Partition, IntQPoly> pyramid_p_expansion_q(const Graph& g, int cap, PyramidSet set,
                                                    AscentConvention convention) {
  if (!is_unit_interval_ordering(g))
    throw std::invalid_argument("pyramid expansion needs a natural unit interval graph");
  auto shared = std::make_shared<const Graph>(g);
  std::vector<std::vector<Heap>> pyramids(cap + 1);
  for (int k = 1; k <= cap; ++k) pyramids[k] = enumerate_pyramids(shared, k);

  std::map<Partition, IntQPoly> out;
  for (const auto& lam : partitions_up_to(cap)) {
    if (lam.empty()) continue;
    IntQPoly sum;
    std::function<void(int, const Heap&)> rec = [&](int i, const Heap& acc) {
      if (i == lam.length()) {
        if (set == PyramidSet::AllVertices && acc.support() != g.all_vertices()) return;
        sum += IntQPoly::monomial(ascent_count(acc, convention));
        return;
      }
      for (const auto& p : pyramids[lam[i]]) rec(i + 1, compose(acc, p));
    };
    rec(0, Heap(shared));
    if (!sum.is_zero()) out.emplace(lam, std::move(sum));
  }
  return out;
}

SymPoly<RatQPoly> reassemble_pyramid_expansion(const std::map<Partition, IntQPoly>& sums, int cap, int vars) {
  std::map<Partition, RatQPoly> c;
  for (const auto& [lam, s] : sums)
    if (lam.size() <= cap) c.emplace(lam, scale(lift(s), BigRational(1) / BigRational(z_lambda(lam))));
  return from_power_sums(c, vars, cap);
}

std::string proposition_name(Proposition p) {
  switch (p) {
    case Proposition::P5_1: return "5.1";
    case Proposition::P5_2: return "5.2";
    case Proposition::P5_3: return "5.3";
    case Proposition::P5_4: return "5.4";
  }
  return "?";
}

PropositionTarget proposition_target(Proposition p) {
  switch (p) {
    case Proposition::P5_1: return {true, Basis::PBarPrime};
    case Proposition::P5_2: return {false, Basis::PBarPrime};
    case Proposition::P5_3: return {true, Basis::PBar};
    case Proposition::P5_4: return {false, Basis::PBar};
  }
  return {true, Basis::PBarPrime};
}

std::vector<ScaledRepeat> scaled_repeat_decompositions(const Partition& lambda) {
  std::vector<ScaledRepeat> out;
  for (const auto& base : partitions_up_to(lambda.size())) {
    if (base.empty() != lambda.empty() || base.length() > lambda.length()) continue;
    std::vector<int> d(base.length()), n(base.length());
    std::function<void(int)> rec = [&](int i) {
      if (i == base.length()) {
        Composition cd(d), cn(n);
        if (scale_and_repeat(base, cd, cn) == lambda) out.push_back({base, cd, cn});
        return;
      }
      for (int di = 1; base[i] * di <= lambda.largest(); ++di) {
        int mult = lambda.multiplicity(base[i] * di);
        for (int ni = 1; ni <= mult; ++ni) {
          d[i] = di;
          n[i] = ni;
          rec(i + 1);
        }
      }
    };
    rec(0);
  }
  return out;
}

RatQPoly proposition_coefficient(const std::map<Partition, IntQPoly>& sums, const Partition& lambda, Proposition p) {
  const bool hat = p == Proposition::P5_3 || p == Proposition::P5_4;
  const bool signed_sum = p == Proposition::P5_2 || p == Proposition::P5_4;
  RatQPoly total;
  for (const auto& [base, d, n] : scaled_repeat_decompositions(lambda)) {
    auto it = sums.find(base);
    if (it == sums.end()) continue;
    BigRational factor = BigRational(1) / BigRational(z_lambda(base));
    for (int i = 0; i < base.length(); ++i) {
      BigInt m = hat ? mu_hat(d[i]) : BigInt(mobius(d[i]));
      if (n[i] % 2 == 0) m = -m;
      factor *= BigRational(m) / BigRational(d[i] * n[i]);
    }
    if (signed_sum) factor *= omega_sign(base);
    total += scale(lift(it->second), factor);
  }
  return total;
}

RatQPoly proposition_coefficient(const Graph& g, const Partition& lambda, Proposition p, int cap) {
  if (lambda.size() > cap) throw std::invalid_argument("partition exceeds the truncation");
  return proposition_coefficient(pyramid_p_expansion_q(g, cap), lambda, p);
}

}  // namespace kromatic
