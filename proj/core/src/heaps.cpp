#include "kromatic/heaps.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace kromatic {

Heap::Heap(std::shared_ptr<const Graph> g) : graph_(std::move(g)) {
  if (!graph_) throw std::invalid_argument("heap needs a host graph");
}

Heap::Heap(std::shared_ptr<const Graph> g, std::vector<int> word) : graph_(std::move(g)), word_(std::move(word)) {}

Heap Heap::from_word(std::shared_ptr<const Graph> g, const std::vector<int>& word) {
  if (!g) throw std::invalid_argument("heap needs a host graph");
  for (int c : word)
    if (c < 1 || c > g->vertex_count())
      throw std::invalid_argument("heap letter " + std::to_string(c) + " out of range");
  auto w = standard_word(*g, word);
  return Heap(std::move(g), std::move(w));
}

Heap Heap::from_word(const Graph& g, const std::vector<int>& word) {
  return from_word(std::make_shared<const Graph>(g), word);
}

Heap Heap::from_standard_word(std::shared_ptr<const Graph> g, std::vector<int> word) {
  return Heap(std::move(g), std::move(word));
}

Composition Heap::type() const {
  std::vector<int> a(graph_->vertex_count(), 0);
  for (int c : word_) ++a[c - 1];
  return Composition(std::move(a));
}

VertexSubset Heap::support() const {
  VertexSubset s = 0;
  for (int c : word_) s |= vertex_bit(c);
  return s;
}

std::string Heap::to_string() const {
  std::string out;
  const bool spaced = graph_->vertex_count() > 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (spaced && i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out;
}

bool Heap::operator==(const Heap& other) const {
  return word_ == other.word_ && (graph_ == other.graph_ || *graph_ == *other.graph_);
}

std::vector<int> standard_word(const Graph& g, const std::vector<int>& word, std::vector<int>* tags) {
  std::vector<int> rest = word;
  std::vector<int> rest_tags = tags ? *tags : std::vector<int>{};
  std::vector<int> out, out_tags;
  out.reserve(word.size());
  while (!rest.empty()) {
    // Greedy: among letters that can be commuted to the front, take the
    // largest. Available letters are pairwise distinct, so the choice is
    // unique.
    int best = -1;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool available = true;
      for (std::size_t j = 0; j < i && available; ++j) available = commute(g, rest[j], rest[i]);
      if (available && (best < 0 || rest[i] > rest[best])) best = static_cast<int>(i);
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + best);
    if (tags) {
      out_tags.push_back(rest_tags[best]);
      rest_tags.erase(rest_tags.begin() + best);
    }
  }
  if (tags) *tags = std::move(out_tags);
  return out;
}

bool extends_standard(const Graph& g, const std::vector<int>& w, int c) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!commute(g, *it, c)) return true;
    if (c > *it) return false;
  }
  return true;
}

Heap heap_from_word(const Graph& g, const std::vector<int>& word) { return Heap::from_word(g, word); }

Heap compose(const Heap& a, const Heap& b) {
  if (!(a.graph_ptr() == b.graph_ptr() || a.graph() == b.graph()))
    throw std::invalid_argument("compose: heaps live on different graphs");
  std::vector<int> w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return Heap::from_standard_word(a.graph_ptr(), standard_word(a.graph(), w));
}

Heap power(const Heap& k, int d) {
  Heap out(k.graph_ptr());
  for (int i = 0; i < d; ++i) out = compose(out, k);
  return out;
}

namespace {

bool dependent(const Graph& g, int a, int b) { return a == b || g.adjacent(a, b); }

void check_piece(const Heap& h, PieceRef p) {
  if (p < 0 || p >= h.size()) throw std::invalid_argument("piece index out of range");
}

}  // namespace

std::vector<PieceRef> sources(const Heap& h) {
  std::vector<PieceRef> out;
  const auto& w = h.word();
  for (int i = 0; i < h.size(); ++i) {
    bool has_in = false;
    for (int j = 0; j < i && !has_in; ++j) has_in = dependent(h.graph(), w[j], w[i]);
    if (!has_in) out.push_back(i);
  }
  return out;
}

bool is_pyramid(const Heap& h) { return sources(h).size() == 1; }

std::vector<PieceRef> pyramid_of(const Heap& h, PieceRef p) {
  check_piece(h, p);
  const auto& w = h.word();
  std::vector<PieceRef> out{p};
  for (int i = p + 1; i < h.size(); ++i)
    for (PieceRef j : out)
      if (dependent(h.graph(), w[j], w[i])) {
        out.push_back(i);
        break;
      }
  return out;
}

Heap subheap(const Heap& h, const std::vector<PieceRef>& pieces) {
  std::vector<PieceRef> sorted = pieces;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> w;
  for (PieceRef p : sorted) {
    check_piece(h, p);
    w.push_back(h.word()[p]);
  }
  return Heap::from_standard_word(h.graph_ptr(), standard_word(h.graph(), w));
}

TrackedHeap rotate(const Heap& h, PieceRef p) {
  auto top = pyramid_of(h, p);
  std::vector<char> in_top(h.size(), 0);
  for (PieceRef q : top) in_top[q] = 1;
  std::vector<int> w, tags;
  for (PieceRef q : top) {
    w.push_back(h.word()[q]);
    tags.push_back(q);
  }
  for (int q = 0; q < h.size(); ++q)
    if (!in_top[q]) {
      w.push_back(h.word()[q]);
      tags.push_back(q);
    }
  auto canonical = standard_word(h.graph(), w, &tags);
  PieceRef image = static_cast<PieceRef>(std::find(tags.begin(), tags.end(), p) - tags.begin());
  return {Heap::from_standard_word(h.graph_ptr(), std::move(canonical)), image};
}

TrackedHeap rotate_to_source(const Heap& h, PieceRef p) {
  check_piece(h, p);
  if (!is_pyramid(h)) throw std::invalid_argument("rotate_to_source: heap is not a pyramid");
  TrackedHeap cur{h, p};
  const int limit = h.size() * h.size() + 2;
  for (int step = 0; step <= limit; ++step) {
    auto src = sources(cur.heap);
    if (src.size() == 1 && src.front() == cur.piece) return cur;
    cur = rotate(cur.heap, cur.piece);
  }
  throw Error("rotate_to_source did not stabilize on " + h.to_string());
}

std::vector<Heap> rotation_class(const Heap& h) {
  if (!is_pyramid(h)) throw std::invalid_argument("rotation_class: heap is not a pyramid");
  std::vector<Heap> out;
  for (PieceRef p = 0; p < h.size(); ++p) {
    Heap r = rotate_to_source(h, p).heap;
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_aperiodic(const Heap& h) { return static_cast<int>(rotation_class(h).size()) == h.size(); }

namespace {

// Downsets of h (sets of pieces closed under predecessors), as sorted index
// lists, excluding the empty set.
void for_each_downset(const Heap& h, const std::function<void(const std::vector<PieceRef>&)>& visit) {
  const auto& w = h.word();
  const int n = h.size();
  std::vector<std::vector<PieceRef>> pred(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (dependent(h.graph(), w[j], w[i])) pred[i].push_back(j);
  std::vector<char> in(n, 0);
  std::vector<PieceRef> cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (!cur.empty()) visit(cur);
      return;
    }
    rec(i + 1);
    for (PieceRef j : pred[i])
      if (!in[j]) return;
    in[i] = 1;
    cur.push_back(i);
    rec(i + 1);
    cur.pop_back();
    in[i] = 0;
  };
  rec(0);
}

std::vector<PieceRef> complement(int n, const std::vector<PieceRef>& s) {
  std::vector<char> in(n, 0);
  for (PieceRef p : s) in[p] = 1;
  std::vector<PieceRef> out;
  for (int i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

}  // namespace

bool is_aperiodic_direct(const Heap& h) {
  const int n = h.size();
  if (n == 0) return true;
  bool periodic = false;
  for_each_downset(h, [&](const std::vector<PieceRef>& d) {
    const int k = static_cast<int>(d.size());
    if (periodic || k == n || n % k) return;
    if (power(subheap(h, d), n / k) == h) periodic = true;
  });
  return !periodic;
}

bool is_lyndon(const Heap& h) {
  if (h.empty() || !is_pyramid(h)) return false;
  auto cls = rotation_class(h);
  return static_cast<int>(cls.size()) == h.size() && cls.front() == h;
}

std::vector<Heap> enumerate_heaps(std::shared_ptr<const Graph> g, int n) {
  if (n < 0) throw std::invalid_argument("enumerate_heaps: negative size");
  std::vector<std::vector<int>> level{{}};
  for (int len = 0; len < n; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : level)
      for (int c = 1; c <= g->vertex_count(); ++c)
        if (extends_standard(*g, w, c)) {
          next.push_back(w);
          next.back().push_back(c);
        }
    level = std::move(next);
  }
  std::vector<Heap> out;
  out.reserve(level.size());
  for (auto& w : level) out.push_back(Heap::from_standard_word(g, std::move(w)));
  return out;
}

std::vector<Heap> enumerate_pyramids(std::shared_ptr<const Graph> g, int n) {
  auto all = enumerate_heaps(std::move(g), n);
  std::vector<Heap> out;
  for (auto& h : all)
    if (is_pyramid(h)) out.push_back(std::move(h));
  return out;
}

std::vector<Heap> enumerate_lyndon(std::shared_ptr<const Graph> g, int n) {
  auto pyramids = enumerate_pyramids(std::move(g), n);
  std::set<std::vector<int>> seen;
  std::vector<Heap> out;
  // Pyramids come in lexicographic order, so the first member met of each
  // rotation class is its minimum.
  for (const auto& p : pyramids) {
    if (seen.count(p.word())) continue;
    auto cls = rotation_class(p);
    for (const auto& c : cls) seen.insert(c.word());
    if (static_cast<int>(cls.size()) == n) out.push_back(cls.front());
  }
  return out;
}

std::vector<BigInt> lyndon_counts_from_pyramids(const std::vector<BigInt>& pyramid_counts) {
  std::vector<BigInt> out;
  for (int k = 1; k <= static_cast<int>(pyramid_counts.size()); ++k) {
    BigInt acc = 0;
    for (int d : divisors(k)) acc += mobius(k / d) * pyramid_counts[d - 1];
    if (acc % k != 0) throw ArithmeticError("pyramid counts give a non-integral Lyndon count");
    out.push_back(acc / k);
  }
  return out;
}

std::vector<std::vector<Heap>> lyndon_factorizations(const Heap& h) {
  std::vector<std::vector<Heap>> found;
  std::vector<Heap> cur;
  std::function<void(const Heap&)> rec = [&](const Heap& rest) {
    if (rest.empty()) {
      found.push_back(cur);
      return;
    }
    for_each_downset(rest, [&](const std::vector<PieceRef>& d) {
      Heap factor = subheap(rest, d);
      if (!cur.empty() && cur.back() < factor) return;
      if (!is_lyndon(factor)) return;
      cur.push_back(factor);
      rec(subheap(rest, complement(rest.size(), d)));
      cur.pop_back();
    });
  };
  rec(h);
  return found;
}

std::vector<Heap> lyndon_factorize(const Heap& h) {
  auto all = lyndon_factorizations(h);
  if (all.size() != 1)
    throw Error("heap " + h.to_string() + " has " + std::to_string(all.size()) + " Lyndon factorizations");
  return all.front();
}

int ascent_count(const Heap& h, AscentConvention convention) {
  const auto& w = h.word();
  int count = 0;
  for (int i = 0; i < h.size(); ++i)
    for (int j = i + 1; j < h.size(); ++j) {
      if (!h.graph().adjacent(w[i], w[j])) continue;
      if (convention == AscentConvention::LowerFirst ? w[i] < w[j] : w[i] > w[j]) ++count;
    }
  return count;
}

}  // namespace kromatic
