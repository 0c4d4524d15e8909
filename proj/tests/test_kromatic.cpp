#include "doctest.h"

#include "kromatic/kromatic.hpp"

#include <random>

using namespace kromatic;

namespace {

struct Named {
  const char* name;
  Graph g;
};

std::vector<Named> test_graphs() {
  return {{"K1", Graph::complete(1)}, {"K2", Graph::complete(2)}, {"K3", Graph::complete(3)},
          {"P3", Graph::path(3)},     {"P4", Graph::path(4)},     {"C4", Graph::cycle(4)},
          {"paw", Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}})}};
}

BigInt lookup(const std::map<Partition, BigInt>& m, const Partition& lam) {
  auto it = m.find(lam);
  return it == m.end() ? BigInt(0) : it->second;
}

}  // namespace

TEST_CASE("single vertex") {
  Graph k1 = Graph::complete(1);
  CHECK(kromatic_function(k1, 4, 4) == basis_pbar(1, 4, 4));
  CHECK(omega_kromatic(k1, 4, 4) == basis_pbarprime(1, 4, 4));
  SymPoly<BigInt> expected(2, 2);
  expected.add_term(Partition{1}, 1);
  expected.add_term(Partition{1, 1}, 1);
  CHECK(brute_force_kromatic(k1, 2, 2) == expected);
}

TEST_CASE("subset formula agrees with set-coloring enumeration") {
  auto graphs = test_graphs();
  graphs.push_back({"2K1", Graph::edgeless(2)});
  for (const auto& [name, g] : graphs) {
    CAPTURE(name);
    CHECK(kromatic_function(g, 4, 4) == brute_force_kromatic(g, 4, 4));
  }
  CHECK(brute_force_kromatic(Graph::complete(2), 3, 3).coefficient(Partition{1, 1}) == 2);
  // Two isolated vertices: (∏(1+x_i) - 1)^2.
  auto pbar1 = basis_pbar(1, 4, 4);
  CHECK(kromatic_function(Graph::edgeless(2), 4, 4) == pbar1 * pbar1);
}

TEST_CASE("omega of the Kromatic function") {
  for (const auto& [name, g] : test_graphs()) {
    CAPTURE(name);
    CHECK(omega_kromatic(g, 5, 5) == omega(kromatic_function(g, 5, 5)));
  }
  CHECK(omega_kromatic(Graph::complete(2), 4, 4).homogeneous_part(2) ==
        omega(brute_force_kromatic(Graph::complete(2), 4, 4)).homogeneous_part(2));
}

TEST_CASE("threaded evaluation is deterministic") {
  Graph p4 = Graph::path(4);
  CHECK(kromatic_function(p4, 5, 6, 3) == kromatic_function(p4, 5, 6, 1));
  CHECK(omega_kromatic(p4, 5, 5, 4) == omega_kromatic(p4, 5, 5, 1));
}

TEST_CASE("K2 expansion in the p-bar basis") {
  auto e = lower(extract(kromatic_function(Graph::complete(2), 5, 5), Basis::PBar));
  std::map<Partition, BigInt> expected = {
      {Partition{2}, -1},         {Partition{1, 1}, 1},       {Partition{3}, 2},          {Partition{2, 1}, -2},
      {Partition{4}, -4},         {Partition{3, 1}, 4},       {Partition{2, 2}, 1},       {Partition{2, 1, 1}, -1},
      {Partition{5}, 6},          {Partition{4, 1}, -8},      {Partition{3, 2}, -2},      {Partition{3, 1, 1}, 2},
      {Partition{2, 2, 1}, 2},
  };
  CHECK(e.terms == expected);
}

TEST_CASE("classical chromatic expansions") {
  auto k2 = chromatic_p_expansion_oracles(Graph::complete(2));
  std::map<Partition, BigInt> expected{{Partition{2}, -1}, {Partition{1, 1}, 1}};
  CHECK(k2.source_components == expected);
  CHECK(k2.edge_subsets == expected);
  auto two = chromatic_p_expansion_oracles(Graph::edgeless(2));
  CHECK(two.edge_subsets == std::map<Partition, BigInt>{{Partition{1, 1}, 1}});

  for (const auto& [name, g] : test_graphs()) {
    CAPTURE(name);
    const int n = g.vertex_count();
    auto o = chromatic_p_expansion_oracles(g);
    CHECK(o.source_components == o.edge_subsets);
    auto e = lower(extract(kromatic_function(g, n, n), Basis::PBar));
    for (const auto& lam : partitions_of(n)) CHECK(e.coefficient(lam) == lookup(o.edge_subsets, lam));
  }
}

TEST_CASE("Lyndon tables restrict to induced subgraphs") {
  for (const auto& [name, g] : test_graphs()) {
    CAPTURE(name);
    LyndonTable t(g, 5);
    for (VertexSubset w = 0; w <= g.all_vertices(); ++w) {
      auto sub = std::make_shared<const Graph>(induced_subgraph(g, w).graph);
      for (int k = 1; k <= 5; ++k) CHECK(t.count(k, w) == static_cast<long>(enumerate_lyndon(sub, k).size()));
    }
  }
}

TEST_CASE("factorization exponents") {
  Graph k2 = Graph::complete(2);
  const VertexSubset v = k2.all_vertices();
  CHECK(exponent_d(k2, v, 4) == 3);
  CHECK(exponent_b(k2, v, 4) == 6);
  CHECK(exponent_c(k2, v, 2) == -3);
  CHECK(exponent_d(k2, 0, 3) == 0);

  for (const auto& [name, g] : test_graphs()) {
    CAPTURE(name);
    LyndonTable t(g, 6);
    for (VertexSubset w = 0; w <= g.all_vertices(); ++w) {
      auto b = exponents_b_from_series(independence_polynomial(induced_subgraph(g, w).graph), 6);
      for (int k = 1; k <= 6; ++k) CHECK(b[k - 1] == exponent_b(t, w, k));
    }
  }
}

TEST_CASE("four factorizations of the independence and heap series") {
  using V = FactorizationVariant;
  CHECK(verify_factorization(Graph::complete(1), 1, V::A, 5, 5));
  CHECK(verify_factorization(Graph::complete(2), 3, V::D, 5, 5));
  for (const auto& [name, g] : test_graphs()) {
    CAPTURE(name);
    for (V v : {V::A, V::B, V::C, V::D})
      for (VertexSubset w = 0; w <= g.all_vertices(); ++w) CHECK(verify_factorization(g, w, v, 5, 5));
  }
}

TEST_CASE("theorem counters on K2") {
  Graph k2 = Graph::complete(2);
  CHECK(theorem_coefficient(k2, Partition{4}, Theorem::T1_2) == 4);
  CHECK(theorem_coefficient(k2, Partition{2, 2}, Theorem::T1_2) == 1);
  CHECK(theorem_coefficient(k2, Partition{4, 1}, Theorem::T1_2) == 8);
  CHECK(theorem_target(Theorem::T1_5).omega);
  CHECK(theorem_target(Theorem::T1_4).basis == Basis::PBarPrime);
}

TEST_CASE("theorem counters match extraction") {
  for (const auto& [name, g] : test_graphs()) {
    CAPTURE(name);
    auto x = kromatic_function(g, 5, 5);
    auto w = omega_kromatic(g, 5, 5);
    LyndonTable table(g, 5);
    for (Theorem t : {Theorem::T1_2, Theorem::T1_3, Theorem::T1_4, Theorem::T1_5}) {
      CAPTURE(theorem_name(t));
      auto target = theorem_target(t);
      auto e = lower(extract(target.omega ? w : x, target.basis));
      for (const auto& lam : partitions_up_to(5)) {
        if (lam.empty()) continue;
        CAPTURE(lam);
        BigInt c = e.coefficient(lam);
        if (!target.omega) {
          CHECK(sgn(c) * omega_sign(lam) >= 0);
          c *= omega_sign(lam);
        }
        CHECK(c == theorem_coefficient(table, g.vertex_count(), lam, t, Coverage::InclusionExclusion));
        CHECK(c == theorem_coefficient(table, g.vertex_count(), lam, t, Coverage::Direct));
      }
    }
  }
}

TEST_CASE("independence multiset") {
  auto ms = independence_multiset(Graph::complete(2));
  std::vector<IntPoly> polys;
  for (const auto& e : ms.entries) polys.push_back(e.polynomial);
  std::vector<IntPoly> expected{IntPoly(1), IntPoly::from_coefficients({1, 1}), IntPoly::from_coefficients({1, 1}),
                                IntPoly::from_coefficients({1, 2})};
  CHECK(polys == expected);

  auto p3 = independence_multiset(Graph::path(3));
  CHECK(p3.entries.size() == 8);
  bool found = false;
  for (const auto& e : p3.entries) found = found || e.polynomial == IntPoly::from_coefficients({1, 3, 1});
  CHECK(found);

  for (const auto& [name, g] : test_graphs()) {
    CAPTURE(name);
    CHECK(kromatic_from_multiset(independence_multiset(g), 5, 5) == kromatic_function(g, 5, 5));
  }
  IndependenceMultiset bad{1, {{1, IntPoly::from_coefficients({2, 1})}}};
  CHECK_THROWS(kromatic_from_multiset(bad, 3, 3));
}

TEST_CASE("exponent caps") {
  CHECK(exponent_caps(Graph::complete(2), 4) == std::vector<long>{2, 6, 8, 22});
  CHECK(exponent_caps(Graph::path(3), 4) == std::vector<long>{3, 11, 21, 66});
  for (const auto& [name, g] : test_graphs()) {
    auto caps = exponent_caps(g, 4);
    for (const auto& [v, c] : direct_signed_exponent_multiset(g, 4).counts)
      for (int k = 0; k < 4; ++k) CHECK(v[k] <= caps[k]);
  }
}

TEST_CASE("p-bar coefficients of omega by the binomial formula") {
  for (const auto& [name, g] : test_graphs()) {
    CAPTURE(name);
    auto e = lower(extract(omega_kromatic(g, 6, 6), Basis::PBar));
    OmegaPbarCoefficients coef(g, 6);
    for (const auto& lam : partitions_up_to(6)) CHECK(e.coefficient(lam) == coef(lam));
  }
}

TEST_CASE("signed exponent family recovery") {
  SignedExponentMultiset k1;
  k1.K = 1;
  k1.add({0}, -1);
  k1.add({1}, 1);
  CHECK(direct_signed_exponent_multiset(Graph::complete(1), 1) == k1);
  CHECK(recover_signed_exponent_multiset(omega_kromatic(Graph::complete(1), 1, 1), {1}) == k1);

  Graph k2 = Graph::complete(2);
  SignedExponentMultiset k2_family;
  k2_family.K = 2;
  k2_family.add({0, 0}, 1);
  k2_family.add({1, 1}, -2);
  k2_family.add({2, 3}, 1);
  CHECK(direct_signed_exponent_multiset(k2, 2) == k2_family);
  CHECK(recover_signed_exponent_multiset(omega_kromatic(k2, 8, 8), {2, 3}) == k2_family);
  CHECK_THROWS_AS(recover_signed_exponent_multiset(omega_kromatic(k2, 7, 7), {2, 3}), Error);

  for (Graph g : {k2, Graph::path(3)}) {
    OmegaPbarCoefficients coef(g, 4);
    auto recovered =
        recover_signed_exponent_multiset([&](const Partition& lam) { return coef(lam); }, exponent_caps(g, 4));
    CHECK(recovered == direct_signed_exponent_multiset(g, 4));
    CHECK(independence_truncations(recovered) == independence_truncations(independence_multiset(g), 4));
  }
}
