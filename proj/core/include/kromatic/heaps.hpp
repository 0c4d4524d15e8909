#pragma once

// Heaps of pieces on a graph, i.e. elements of the free partially
// commutative monoid on V(G) where two letters commute iff they are distinct
// and nonadjacent. A heap is stored by its standard word (the
// lexicographically maximal word of its commutation class).

#include "kromatic/graph.hpp"

#include <memory>
#include <string>
#include <vector>

namespace kromatic {

/// Index of a piece in the standard word of its heap.
using PieceRef = int;

class Heap {
 public:
  /// The empty heap on g.
  explicit Heap(std::shared_ptr<const Graph> g);

  /// Canonicalizes an arbitrary word; letters must lie in 1..n.
  static Heap from_word(std::shared_ptr<const Graph> g, const std::vector<int>& word);
  static Heap from_word(const Graph& g, const std::vector<int>& word);
  /// Trusts that word is already standard.
  static Heap from_standard_word(std::shared_ptr<const Graph> g, std::vector<int> word);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const std::vector<int>& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }
  int vertex(PieceRef p) const { return word_.at(p); }
  Composition type() const;
  VertexSubset support() const;

  /// Letters concatenated ("2311"); separated by spaces when n > 9.
  std::string to_string() const;

  /// Same host graph and same standard word.
  bool operator==(const Heap& other) const;
  /// Lexicographic order of standard words.
  bool operator<(const Heap& other) const { return word_ < other.word_; }

 private:
  Heap(std::shared_ptr<const Graph> g, std::vector<int> word);

  std::shared_ptr<const Graph> graph_;
  std::vector<int> word_;
};

/// Letters a, b commute iff distinct and nonadjacent.
inline bool commute(const Graph& g, int a, int b) { return a != b && !g.adjacent(a, b); }

/// Lex-max word of the class of `word`. When tags is non-null it is permuted
/// alongside the letters so that callers can follow individual pieces.
std::vector<int> standard_word(const Graph& g, const std::vector<int>& word, std::vector<int>* tags = nullptr);

/// True iff appending letter c to the standard word w yields a standard word.
bool extends_standard(const Graph& g, const std::vector<int>& w, int c);

Heap heap_from_word(const Graph& g, const std::vector<int>& word);
Heap compose(const Heap& a, const Heap& b);
/// K∘K∘…∘K (d factors).
Heap power(const Heap& k, int d);

/// Pieces with no incoming arc of the heap's orientation.
std::vector<PieceRef> sources(const Heap& h);
bool is_pyramid(const Heap& h);

/// Pieces reachable from p by directed paths (p included), in word order.
std::vector<PieceRef> pyramid_of(const Heap& h, PieceRef p);

/// Subheap spanned by the given pieces (which must be a downset or upset
/// for the result to be a factor of h).
Heap subheap(const Heap& h, const std::vector<PieceRef>& pieces);

struct TrackedHeap {
  Heap heap;
  PieceRef piece;
};

/// One rotation step A_p: H = U∘V with V the pyramid of p becomes V∘U.
TrackedHeap rotate(const Heap& h, PieceRef p);
/// A_p^∞: rotate until the result is a pyramid whose source is p's image.
TrackedHeap rotate_to_source(const Heap& h, PieceRef p);
/// Distinct results of rotate_to_source over all pieces, sorted.
std::vector<Heap> rotation_class(const Heap& h);

/// Rotation-class cardinality equals |H|.
bool is_aperiodic(const Heap& h);
/// No factorization H = K^d with d >= 2, by direct search over downsets.
bool is_aperiodic_direct(const Heap& h);
bool is_lyndon(const Heap& h);

std::vector<Heap> enumerate_heaps(std::shared_ptr<const Graph> g, int n);
std::vector<Heap> enumerate_pyramids(std::shared_ptr<const Graph> g, int n);
std::vector<Heap> enumerate_lyndon(std::shared_ptr<const Graph> g, int n);

/// |L(k)| = (1/k) Σ_{d|k} μ(k/d) |P(d)| for k = 1..n, from
/// pyramid_counts[d-1] = |P(d)|. Throws ArithmeticError on a non-integral
/// quotient.
std::vector<BigInt> lyndon_counts_from_pyramids(const std::vector<BigInt>& pyramid_counts);

/// Every factorization of h into Lyndon heaps L_1∘…∘L_k with
/// L_1 >= … >= L_k (exhaustive search over downsets).
std::vector<std::vector<Heap>> lyndon_factorizations(const Heap& h);
/// The unique Lyndon factorization; throws Error if the search does not
/// find exactly one.
std::vector<Heap> lyndon_factorize(const Heap& h);

enum class AscentConvention {
  /// Arc a→b between adjacent vertices with vertex(a) < vertex(b).
  LowerFirst,
  /// Arc a→b between adjacent vertices with vertex(a) > vertex(b).
  HigherFirst,
};

/// Convention under which the pyramid expansion reproduces the coloring
/// ascent statistic (pinned by the test suite).
inline constexpr AscentConvention kAscentConvention = AscentConvention::LowerFirst;

int ascent_count(const Heap& h, AscentConvention convention = kAscentConvention);

}  // namespace kromatic
