#include "kromatic/symfunc.hpp"

#include <functional>
#include <mutex>
#include <set>

namespace kromatic {

namespace {

using Multiset = std::map<int, int>;

Multiset padded_multiset(const Partition& p, int slots) {
  Multiset m;
  for (int x : p.parts()) ++m[x];
  if (slots > p.length()) m[0] += slots - p.length();
  return m;
}

// Number of distinct vectors a, arranged from the parts of `a` padded with
// zeros, such that nu - a is an arrangement of the padded parts of `b`.
BigInt count_splittings(const Partition& a, const Partition& b, const Partition& nu) {
  const int r = nu.length();
  if (a.length() > r || b.length() > r) return 0;
  Multiset ma = padded_multiset(a, r), mb = padded_multiset(b, r);
  std::function<BigInt(int)> rec = [&](int i) -> BigInt {
    if (i == r) return 1;
    BigInt total = 0;
    for (auto& [v, cnt] : ma) {
      if (cnt == 0 || v > nu[i]) continue;
      auto jt = mb.find(nu[i] - v);
      if (jt == mb.end() || jt->second == 0) continue;
      --cnt;
      --jt->second;
      total += rec(i + 1);
      ++cnt;
      ++jt->second;
    }
    return total;
  };
  return rec(0);
}

std::vector<std::pair<Partition, BigInt>> compute_monomial_product(const Partition& a, const Partition& b) {
  // Candidate shapes: each part of b lands on a distinct part of a or on a
  // fresh row.
  std::set<Partition> shapes;
  std::vector<int> rows = a.parts();
  std::vector<char> used(rows.size(), 0);
  std::function<void(int)> place = [&](int i) {
    if (i == b.length()) {
      shapes.insert(Partition(rows));
      return;
    }
    rows.push_back(b[i]);
    place(i + 1);
    rows.pop_back();
    for (std::size_t j = 0; j < used.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      rows[j] += b[i];
      place(i + 1);
      rows[j] -= b[i];
      used[j] = 0;
    }
  };
  place(0);
  std::vector<std::pair<Partition, BigInt>> out;
  for (const auto& nu : shapes) {
    BigInt c = count_splittings(a, b, nu);
    if (c != 0) out.emplace_back(nu, std::move(c));
  }
  return out;
}

}  // namespace

const std::vector<std::pair<Partition, BigInt>>& monomial_product(const Partition& a, const Partition& b) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, std::vector<std::pair<Partition, BigInt>>> cache;
  auto key = b < a ? std::make_pair(b, a) : std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto value = compute_monomial_product(key.first, key.second);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.try_emplace(key, std::move(value)).first->second;
}

BigInt power_to_monomial(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size() || lambda.length() < mu.length()) return 0;
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, BigInt> cache;
  auto key = std::make_pair(lambda, mu);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // Distribute the parts of lambda one at a time over the rows of mu,
  // tracking remaining row capacities.
  std::map<std::vector<int>, BigInt> layer{{mu.parts(), BigInt(1)}};
  for (int part : lambda.parts()) {
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [cap, ways] : layer)
      for (std::size_t j = 0; j < cap.size(); ++j) {
        if (cap[j] < part) continue;
        auto c = cap;
        c[j] -= part;
        next[c] += ways;
      }
    layer = std::move(next);
  }
  BigInt result = layer.count(std::vector<int>(mu.length(), 0)) ? layer[std::vector<int>(mu.length(), 0)] : BigInt(0);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, result);
  return result;
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::P: return "p";
    case Basis::PBar: return "pbar";
    case Basis::PBarPrime: return "pbarprime";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  if (name == "p") return Basis::P;
  if (name == "pbar") return Basis::PBar;
  if (name == "pbarprime") return Basis::PBarPrime;
  throw std::invalid_argument("unknown basis '" + name + "' (expected p, pbar or pbarprime)");
}

SymPoly<BigInt> basis_element(Basis b, int k, int vars, int cap) {
  if (k < 1 || k > cap)
    throw std::invalid_argument("basis index " + std::to_string(k) + " outside 1.." + std::to_string(cap));
  SymPoly<BigInt> r(vars, cap);
  switch (b) {
    case Basis::P:
      r.add_term(Partition{k}, 1);
      break;
    case Basis::PBar:
      for (int reps = 1; reps * k <= cap && reps <= vars; ++reps) r.add_term(Partition(std::vector<int>(reps, k)), 1);
      break;
    case Basis::PBarPrime:
      for (const auto& lam : partitions_up_to(cap / k)) {
        if (lam.empty()) continue;
        std::vector<int> parts;
        for (int x : lam.parts()) parts.push_back(x * k);
        r.add_term(Partition(parts), 1);
      }
      break;
  }
  return r;
}

SymPoly<BigInt> basis_p(int k, int vars, int cap) { return basis_element(Basis::P, k, vars, cap); }
SymPoly<BigInt> basis_pbar(int k, int vars, int cap) { return basis_element(Basis::PBar, k, vars, cap); }
SymPoly<BigInt> basis_pbarprime(int k, int vars, int cap) { return basis_element(Basis::PBarPrime, k, vars, cap); }

const SymPoly<BigInt>& BasisTable::element(const Partition& lambda) {
  auto it = cache_.find(lambda);
  if (it != cache_.end()) return it->second;
  SymPoly<BigInt> value = SymPoly<BigInt>::one(m_, n_);
  if (!lambda.empty()) {
    std::vector<int> rest(lambda.parts().begin(), lambda.parts().end() - 1);
    value = element(Partition(rest)) * basis_element(basis_, lambda.parts().back(), m_, n_);
  }
  return cache_.emplace(lambda, std::move(value)).first->second;
}

bool verify_omega_basis_identities(int k, int cap, int vars) {
  using S = SymPoly<BigInt>;
  const S one = S::one(vars, cap);
  const S bar = one + basis_pbar(k, vars, cap);
  const S prime = one + basis_pbarprime(k, vars, cap);
  const bool odd = k % 2 == 1;
  bool ok = omega(prime) == (odd ? bar : reciprocal(prime));
  ok = ok && omega(bar) == (odd ? prime : reciprocal(bar));
  return ok;
}

}  // namespace kromatic
