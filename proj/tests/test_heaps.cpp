#include "doctest.h"

#include "kromatic/heaps.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

using namespace kromatic;

namespace {

using Word = std::vector<int>;

std::shared_ptr<const Graph> shared(const Graph& g) { return std::make_shared<const Graph>(g); }

Word parse(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(c - '0');
  return w;
}

// Whole commutation class by breadth-first search over adjacent swaps.
std::set<Word> commutation_class(const Graph& g, const Word& w) {
  std::set<Word> seen{w};
  std::queue<Word> todo;
  todo.push(w);
  while (!todo.empty()) {
    Word cur = todo.front();
    todo.pop();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] == cur[i + 1] || g.adjacent(cur[i], cur[i + 1])) continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) todo.push(next);
    }
  }
  return seen;
}

std::vector<Word> all_words(int n, int len) {
  std::vector<Word> out{{}};
  for (int i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (int c = 1; c <= n; ++c) {
        next.push_back(w);
        next.back().push_back(c);
      }
    out = std::move(next);
  }
  return out;
}

// Pieces with no earlier non-commuting piece are the minimal ones.
int minimal_pieces(const Graph& g, const Word& w) {
  int count = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    bool blocked = false;
    for (std::size_t i = 0; i < j && !blocked; ++i) blocked = w[i] == w[j] || g.adjacent(w[i], w[j]);
    count += !blocked;
  }
  return count;
}

std::vector<Graph> small_graphs() {
  return {Graph::complete(1),       Graph::complete(2), Graph::complete(3), Graph::path(3),
          Graph::path(4),           Graph::cycle(4),    Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}),
          Graph(3, {{1, 3}})};
}

std::vector<std::string> words_of(const std::vector<Heap>& hs) {
  std::vector<std::string> out;
  for (const auto& h : hs) out.push_back(h.to_string());
  return out;
}

}  // namespace

TEST_CASE("canonical words of the P3 examples") {
  Graph p3 = Graph::path(3);
  CHECK(heap_from_word(p3, parse("2113")).to_string() == "2311");
  CHECK(heap_from_word(p3, parse("1132")).to_string() == "3112");
  CHECK(heap_from_word(p3, {}).empty());
  CHECK_THROWS(heap_from_word(p3, parse("14")));
}

TEST_CASE("standard word is the lexicographic maximum of the class") {
  for (const auto& g : small_graphs()) {
    const int n = g.vertex_count();
    for (int len = 0; len <= 5; ++len) {
      std::set<Word> classes;
      for (const auto& w : all_words(n, len)) {
        auto cls = commutation_class(g, w);
        Word best = *cls.rbegin();
        CHECK(standard_word(g, w) == best);
        classes.insert(best);
      }
      auto heaps = enumerate_heaps(shared(g), len);
      std::set<Word> enumerated;
      for (const auto& h : heaps) enumerated.insert(h.word());
      CHECK(enumerated == classes);
      CHECK(enumerated.size() == heaps.size());
    }
  }
}

TEST_CASE("canonical form is invariant on 200 random commutation classes") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    Graph g(n, edges);
    Word w(1 + rng() % 9);
    for (int& c : w) c = 1 + static_cast<int>(rng() % n);
    const Word canon = standard_word(g, w);
    for (const auto& member : commutation_class(g, w)) CHECK(standard_word(g, member) == canon);
  }
}

TEST_CASE("extends_standard") {
  Graph p3 = Graph::path(3);
  CHECK(extends_standard(p3, parse("23"), 1));
  CHECK_FALSE(extends_standard(p3, parse("1"), 3));
  CHECK(extends_standard(p3, parse("31"), 1));
}

TEST_CASE("heap counts follow the trivial-heap series") {
  // Σ |H(n)| t^n = 1 / I(-t), computed by a plain recurrence.
  for (const auto& g : small_graphs()) {
    std::vector<long> ind(g.vertex_count() + 1, 0);
    for (VertexSubset s = 0; s <= g.all_vertices(); ++s) {
      bool ok = true;
      for (int v : subset_vertices(s)) ok = ok && !(g.neighbors(v) & s);
      if (ok) ++ind[subset_size(s)];
    }
    std::vector<long> h(7, 0);
    h[0] = 1;
    for (int m = 1; m <= 6; ++m)
      for (int k = 1; k <= m && k < static_cast<int>(ind.size()); ++k)
        h[m] += (k % 2 ? 1 : -1) * ind[k] * h[m - k];
    for (int m = 0; m <= 6; ++m) CHECK(static_cast<long>(enumerate_heaps(shared(g), m).size()) == h[m]);
  }
}

TEST_CASE("composition and powers") {
  auto k2 = shared(Graph::complete(2));
  auto p3 = shared(Graph::path(3));
  Heap one = Heap::from_word(k2, {1}), two = Heap::from_word(k2, {2});
  CHECK(compose(one, Heap(k2)) == one);
  CHECK(compose(one, two).to_string() == "12");
  CHECK(compose(Heap::from_word(p3, {1}), Heap::from_word(p3, {3})).to_string() == "31");
  CHECK(power(compose(one, two), 2).to_string() == "1212");
  CHECK(power(one, 0).empty());
  CHECK_THROWS(compose(one, Heap::from_word(p3, {1})));
}

TEST_CASE("pyramids and sources") {
  auto p3 = shared(Graph::path(3));
  Heap h = Heap::from_word(p3, parse("2311"));
  CHECK(is_pyramid(h));
  REQUIRE(sources(h).size() == 1);
  CHECK(h.vertex(sources(h).front()) == 2);
  CHECK_FALSE(is_pyramid(Heap::from_word(p3, parse("3112"))));
  CHECK(sources(Heap::from_word(p3, parse("3112"))).size() == 2);
  CHECK(is_pyramid(Heap::from_word(p3, {3})));
  CHECK_FALSE(is_pyramid(Heap(p3)));

  for (const auto& g : small_graphs())
    for (int len = 1; len <= 5; ++len) {
      long expected = 0;
      for (const auto& h : enumerate_heaps(shared(g), len)) expected += minimal_pieces(g, h.word()) == 1;
      CHECK(static_cast<long>(enumerate_pyramids(shared(g), len).size()) == expected);
    }
}

TEST_CASE("pyramid of a piece and subheaps") {
  auto p3 = shared(Graph::path(3));
  Heap h = Heap::from_word(p3, parse("3211"));
  // Piece 2 is the lower 1; its pyramid holds the pieces reachable from it.
  auto v = pyramid_of(h, 2);
  CHECK(subheap(h, v).to_string() == "11");
  CHECK(subheap(h, {0, 1}).to_string() == "32");
}

TEST_CASE("rotation worked example on P3") {
  auto p3 = shared(Graph::path(3));
  Heap h = Heap::from_word(p3, parse("2311"));
  // A_3 on [2311]: piece 1 of the standard word is the 3.
  CHECK(rotate(h, 1).heap.to_string() == "3211");
  Heap r = Heap::from_word(p3, parse("3211"));
  CHECK(rotate(r, 2).heap.to_string() == "3112");
  // A_3 keeps [3211] fixed once 3 is the source.
  CHECK(rotate(r, 0).heap == r);

  CHECK(rotate_to_source(h, 2).heap.to_string() == "1123");
  Heap lyndon = Heap::from_word(p3, parse("1123"));
  CHECK(rotate_to_source(lyndon, 1).heap.to_string() == "1231");
  CHECK(rotate_to_source(lyndon, 0).heap == lyndon);

  CHECK(words_of(rotation_class(h)) == std::vector<std::string>{"1123", "1231", "2311", "3211"});
  CHECK(is_lyndon(lyndon));
  CHECK_FALSE(is_lyndon(Heap::from_word(p3, parse("1231"))));
  CHECK_THROWS(rotate_to_source(Heap::from_word(p3, parse("3112")), 0));
  CHECK_THROWS(rotation_class(Heap::from_word(p3, parse("3112"))));
}

TEST_CASE("periodic pyramids on K2") {
  auto k2 = shared(Graph::complete(2));
  Heap h = Heap::from_word(k2, parse("1212"));
  CHECK(rotation_class(h).size() == 2);
  CHECK_FALSE(is_aperiodic(h));
  CHECK_FALSE(is_aperiodic_direct(h));
  CHECK_FALSE(is_lyndon(h));
  CHECK(rotation_class(Heap::from_word(k2, {2})).size() == 1);
}

TEST_CASE("rotation composes and the class dichotomy holds") {
  for (const auto& g : small_graphs()) {
    if (g.vertex_count() > 4) continue;
    for (int len = 1; len <= 5; ++len)
      for (const auto& h : enumerate_pyramids(shared(g), len)) {
        for (int p = 0; p < len; ++p) {
          auto once = rotate_to_source(h, p);
          for (int q = 0; q < len; ++q) {
            // Rotating the rotated heap at q's image gives the same pyramid.
            auto direct = rotate_to_source(h, q);
            bool found = false;
            for (int r = 0; r < len && !found; ++r)
              found = rotate_to_source(once.heap, r).heap == direct.heap;
            CHECK(found);
          }
        }
        auto cls = rotation_class(h);
        CHECK(len % static_cast<int>(cls.size()) == 0);
        CHECK(is_aperiodic(h) == (static_cast<int>(cls.size()) == len));
        CHECK(is_aperiodic(h) == is_aperiodic_direct(h));
        for (const auto& member : cls) CHECK(rotation_class(member).size() == cls.size());
      }
  }
}

TEST_CASE("Lyndon heaps of K2") {
  auto k2 = shared(Graph::complete(2));
  std::vector<std::vector<std::string>> expected = {
      {"1", "2"},
      {"12"},
      {"112", "122"},
      {"1112", "1122", "1222"},
  };
  for (int n = 1; n <= 4; ++n) CHECK(words_of(enumerate_lyndon(k2, n)) == expected[n - 1]);
  std::vector<long> counts;
  for (int n = 1; n <= 5; ++n) counts.push_back(static_cast<long>(enumerate_lyndon(k2, n).size()));
  CHECK(counts == std::vector<long>{2, 1, 2, 3, 6});
  CHECK(enumerate_heaps(k2, 0).size() == 1);
}

TEST_CASE("Lyndon counts and pyramid counts satisfy the divisor identity") {
  for (const auto& g : small_graphs()) {
    auto sg = shared(g);
    std::vector<long> lyndon(7, 0), pyramids(7, 0);
    std::vector<BigInt> pyramid_big;
    for (int n = 1; n <= 6; ++n) {
      lyndon[n] = static_cast<long>(enumerate_lyndon(sg, n).size());
      pyramids[n] = static_cast<long>(enumerate_pyramids(sg, n).size());
      pyramid_big.emplace_back(pyramids[n]);
    }
    for (int n = 1; n <= 6; ++n) {
      long sum = 0;
      for (int k = 1; k <= n; ++k)
        if (n % k == 0) sum += k * lyndon[k];
      CHECK(sum == pyramids[n]);
    }
    auto by_mobius = lyndon_counts_from_pyramids(pyramid_big);
    for (int n = 1; n <= 6; ++n) CHECK(by_mobius[n - 1] == lyndon[n]);
    for (int n = 1; n <= 6; ++n)
      for (const auto& h : enumerate_lyndon(sg, n)) {
        CHECK(is_lyndon(h));
        CHECK(is_pyramid(h));
      }
  }
  CHECK_THROWS_AS(lyndon_counts_from_pyramids({BigInt(1), BigInt(0)}), ArithmeticError);
}

TEST_CASE("Lyndon factorization") {
  auto k2 = shared(Graph::complete(2));
  auto f = lyndon_factorize(Heap::from_word(k2, parse("1212")));
  CHECK(words_of(f) == std::vector<std::string>{"12", "12"});
  CHECK(words_of(lyndon_factorize(Heap::from_word(k2, parse("21")))) == std::vector<std::string>{"2", "1"});
  Heap l = Heap::from_word(k2, parse("1122"));
  CHECK(words_of(lyndon_factorize(l)) == std::vector<std::string>{"1122"});
  CHECK(lyndon_factorize(Heap(k2)).empty());

  // Every heap up to size 5 has exactly one nonincreasing factorization,
  // and its factors multiply back to it.
  for (const auto& g : {Graph::complete(2), Graph::path(3), Graph::complete(3), Graph(3, {{1, 3}})}) {
    auto sg = shared(g);
    for (int n = 1; n <= 5; ++n)
      for (const auto& h : enumerate_heaps(sg, n)) {
        auto all = lyndon_factorizations(h);
        REQUIRE(all.size() == 1);
        Heap prod(sg);
        for (std::size_t i = 0; i < all[0].size(); ++i) {
          CHECK(is_lyndon(all[0][i]));
          if (i) CHECK_FALSE(all[0][i - 1] < all[0][i]);
          prod = compose(prod, all[0][i]);
        }
        CHECK(prod == h);
      }
  }
}

TEST_CASE("ascent counts") {
  auto k2 = shared(Graph::complete(2));
  CHECK(ascent_count(Heap::from_word(k2, {1})) == 0);
  CHECK(ascent_count(Heap::from_word(k2, parse("12"))) == 1);
  CHECK(ascent_count(Heap::from_word(k2, parse("21"))) == 0);
  CHECK(ascent_count(Heap::from_word(k2, parse("21")), AscentConvention::HigherFirst) == 1);
  auto p3 = shared(Graph::path(3));
  CHECK(ascent_count(Heap::from_word(p3, parse("2311"))) == 1);
}

TEST_CASE("heap accessors") {
  auto p3 = shared(Graph::path(3));
  Heap h = Heap::from_word(p3, parse("2311"));
  CHECK(h.type() == Composition{2, 1, 1});
  CHECK(h.support() == 7);
  CHECK(Heap::from_word(p3, {1}).support() == 1);
  CHECK(Heap::from_word(p3, parse("13")) == Heap::from_word(p3, parse("31")));
  CHECK(Heap::from_word(p3, parse("13")) < Heap::from_word(p3, parse("32")));
}
