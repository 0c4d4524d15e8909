#include "kromatic/numbers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace kromatic {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(all));
}

bool Partition::operator<(const Partition& other) const {
  if (size_ != other.size_) return size_ < other.size_;
  return std::lexicographical_compare(other.parts_.begin(), other.parts_.end(),
                                      parts_.begin(), parts_.end());
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto part = partitions_of(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Composition> positive_compositions(int length, int max_total) {
  std::vector<Composition> out;
  if (length == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur(length, 1);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == length) {
      out.emplace_back(cur);
      return;
    }
    int rest = length - i - 1;
    for (int v = 1; used + v + rest <= max_total; ++v) {
      cur[i] = v;
      rec(i + 1, used + v);
    }
  };
  rec(0, 0);
  return out;
}

Partition scale_and_repeat(const Partition& lambda, const Composition& d, const Composition& n) {
  if (d.length() != lambda.length() || n.length() != lambda.length())
    throw std::invalid_argument("scale_and_repeat: length mismatch");
  std::vector<int> parts;
  for (int i = 0; i < lambda.length(); ++i) {
    if (d[i] < 1 || n[i] < 1) throw std::invalid_argument("scale_and_repeat: entries must be positive");
    parts.insert(parts.end(), n[i], lambda[i] * d[i]);
  }
  return Partition(std::move(parts));
}

BigInt factorial(int n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt z_lambda(const Partition& lambda) {
  BigInt z = 1;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    int mult = static_cast<int>(j - i);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p[i]), static_cast<unsigned long>(mult));
    z *= power * factorial(mult);
    i = j;
  }
  return z;
}

BigInt multiplicity_factorial(const Partition& lambda) {
  BigInt r = 1;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    r *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

int omega_sign(const Partition& lambda) {
  return ((lambda.size() - lambda.length()) % 2 == 0) ? 1 : -1;
}

int mobius(int n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be positive");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

BigInt mu_hat(int n) {
  if (n < 1) throw std::invalid_argument("mu_hat: n must be positive");
  int j = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++j;
  }
  if (j == 0) return mobius(n);
  BigInt r = mobius(n);
  r <<= (j - 1);
  return r;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

BigInt binomial(const BigInt& top, int k) {
  if (k < 0) return 0;
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

BigRational binomial(const BigRational& top, int k) {
  if (k < 0) return 0;
  BigRational r = 1;
  for (int i = 0; i < k; ++i) r = r * (top - i) / (i + 1);
  return r;
}

BigInt multichoose(const BigInt& n, int r) {
  if (r == 0) return 1;
  return binomial(BigInt(n + r - 1), r);
}

IntQPoly q_integer(int n) {
  return IntQPoly::from_coefficients(std::vector<BigInt>(static_cast<std::size_t>(std::max(n, 0)), BigInt(1)));
}

IntQPoly q_factorial(const Composition& alpha) {
  IntQPoly r(1L);
  for (int a : alpha.parts())
    for (int j = 2; j <= a; ++j) r *= q_integer(j);
  return r;
}

std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const BigRational& x) { return x.get_str(); }

RatQPoly lift(const IntQPoly& p) {
  std::vector<BigRational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RatQPoly::from_coefficients(std::move(c));
}

BigInt lower(const BigRational& x) {
  if (x.get_den() != 1) throw ArithmeticError("value " + x.get_str() + " is not an integer");
  return x.get_num();
}

IntQPoly lower(const RatQPoly& p) {
  std::vector<BigInt> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.push_back(lower(x));
  return IntQPoly::from_coefficients(std::move(c));
}

RatQPoly scale(const RatQPoly& p, const BigRational& s) {
  std::vector<BigRational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.push_back(x * s);
  return RatQPoly::from_coefficients(std::move(c));
}

}  // namespace kromatic
