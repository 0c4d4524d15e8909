#pragma once

// Exact arithmetic kernels: big integers and rationals, q-polynomials,
// partitions and compositions, and the number-theoretic functions used by
// the inversion formulas.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace kromatic {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact division or integrality assertion failed.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Partitions and compositions
// ---------------------------------------------------------------------------

/// Nonincreasing list of positive parts.
///
/// Ordering (operator<) is graded reverse-lexicographic: smaller size first;
/// within one size the lexicographically larger partition comes first, so
/// (3) < (2,1) < (1,1,1).
class Partition {
 public:
  Partition() = default;
  /// Parts are sorted into nonincreasing order; nonpositive parts throw.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// i_k(λ): number of parts equal to k.
  int multiplicity(int k) const;

  /// Multiset union of the parts.
  Partition merged(const Partition& other) const;

  bool operator==(const Partition& other) const = default;
  bool operator<(const Partition& other) const;

  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Finite sequence of nonnegative integers (zero parts allowed).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }

  bool operator==(const Composition& other) const = default;
  auto operator<=>(const Composition& other) const = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n in graded reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All partitions of size 0..max_size, graded reverse-lexicographic.
std::vector<Partition> partitions_up_to(int max_size);

/// Compositions of the given length with every part in [1, ∞) and total at
/// most max_total, in lexicographic order.
std::vector<Composition> positive_compositions(int length, int max_total);

/// (dλ)^n: part λ_i is multiplied by d_i and repeated n_i times.
Partition scale_and_repeat(const Partition& lambda, const Composition& d,
                           const Composition& n);

// ---------------------------------------------------------------------------
// Number theory
// ---------------------------------------------------------------------------

BigInt factorial(int n);

/// z_λ = ∏_k k^{i_k} · i_k!.
BigInt z_lambda(const Partition& lambda);

/// ∏_k i_k(λ)!  (the diagonal entry of p_λ in the monomial basis).
BigInt multiplicity_factorial(const Partition& lambda);

/// Sign (-1)^{|λ|-ℓ(λ)}.
int omega_sign(const Partition& lambda);

int mobius(int n);

/// Dirichlet inverse of d ↦ (-1)^{d+1}: μ(n) for odd n, 2^{j-1}μ(n/2^j) for
/// even n with n/2^j odd.
BigInt mu_hat(int n);

std::vector<int> divisors(int n);

/// Binomial coefficient with arbitrary integer top (negative allowed).
BigInt binomial(const BigInt& top, int k);
/// Generalized binomial x(x-1)…(x-k+1)/k! over the rationals.
BigRational binomial(const BigRational& top, int k);
/// Multichoose ((n, r)) = C(n+r-1, r).
BigInt multichoose(const BigInt& n, int r);

// ---------------------------------------------------------------------------
// q-polynomials
// ---------------------------------------------------------------------------

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }

/// Univariate polynomial in q over an exact coefficient ring C.
/// No trailing zero coefficient is ever stored.
template <class C>
class QPoly {
 public:
  using coefficient_type = C;

  QPoly() = default;
  QPoly(long value) : QPoly(C(value)) {}
  QPoly(C value) {
    if (!kromatic::is_zero(value)) coeffs_.push_back(std::move(value));
  }
  static QPoly from_coefficients(std::vector<C> coeffs) {
    QPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }
  /// The monomial q^k.
  static QPoly monomial(int k, C coeff = C(1)) {
    std::vector<C> c(static_cast<std::size_t>(k) + 1, C(0));
    c.back() = std::move(coeff);
    return from_coefficients(std::move(c));
  }

  const std::vector<C>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  C coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : C(0);
  }

  C evaluate(const C& x) const {
    C acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  QPoly& operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(QPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return from_coefficients(std::move(out));
  }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact quotient a / d, or nullopt when d does not divide a.
  friend std::optional<QPoly> divide_exact(const QPoly& a, const QPoly& d) {
    if (d.is_zero()) throw ArithmeticError("division by the zero q-polynomial");
    if (a.is_zero()) return QPoly{};
    if (a.degree() < d.degree()) return std::nullopt;
    std::vector<C> rem = a.coeffs_;
    std::vector<C> quot(a.coeffs_.size() - d.coeffs_.size() + 1, C(0));
    const C& lead = d.coeffs_.back();
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
      const C& top = rem[i + d.degree()];
      if (kromatic::is_zero(top)) continue;
      C factor;
      if constexpr (std::is_same_v<C, BigInt>) {
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        factor = top / lead;
      } else {
        factor = top / lead;
      }
      quot[i] = factor;
      for (int j = 0; j <= d.degree(); ++j) rem[i + j] -= factor * d.coeffs_[j];
    }
    for (const auto& r : rem)
      if (!kromatic::is_zero(r)) return std::nullopt;
    return from_coefficients(std::move(quot));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && kromatic::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

using IntQPoly = QPoly<BigInt>;
using RatQPoly = QPoly<BigRational>;

template <class C>
bool is_zero(const QPoly<C>& p) {
  return p.is_zero();
}

/// [n]_q = 1 + q + … + q^{n-1}.
IntQPoly q_integer(int n);
/// [α]_q! = ∏_i ∏_{j=1}^{α_i} [j]_q.
IntQPoly q_factorial(const Composition& alpha);

std::string to_string(const BigInt& x);
std::string to_string(const BigRational& x);
template <class C>
std::string to_string(const QPoly<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    const C& c = p.coefficients()[i];
    if (kromatic::is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    if (i == 1) out += "q";
    if (i > 1) out += "q^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ring plumbing shared by the generic symmetric-function code.
// ---------------------------------------------------------------------------

/// Field of fractions used when a computation must divide by integers.
template <class R>
struct field_of;
template <>
struct field_of<BigInt> {
  using type = BigRational;
};
template <>
struct field_of<BigRational> {
  using type = BigRational;
};
template <>
struct field_of<IntQPoly> {
  using type = RatQPoly;
};
template <>
struct field_of<RatQPoly> {
  using type = RatQPoly;
};
template <class R>
using field_t = typename field_of<R>::type;

inline BigRational lift(const BigInt& x) { return BigRational(x); }
inline BigRational lift(const BigRational& x) { return x; }
RatQPoly lift(const IntQPoly& p);
inline RatQPoly lift(const RatQPoly& p) { return p; }

/// Rational → integer; throws ArithmeticError when not integral.
BigInt lower(const BigRational& x);
IntQPoly lower(const RatQPoly& p);

/// Embedding of the integers into each coefficient ring.
template <class R>
R from_integer(const BigInt& k);
template <>
inline BigInt from_integer<BigInt>(const BigInt& k) {
  return k;
}
template <>
inline BigRational from_integer<BigRational>(const BigInt& k) {
  return BigRational(k);
}
template <>
inline IntQPoly from_integer<IntQPoly>(const BigInt& k) {
  return IntQPoly(k);
}
template <>
inline RatQPoly from_integer<RatQPoly>(const BigInt& k) {
  return RatQPoly(BigRational(k));
}

/// Scalar multiplication by a rational inside a field-like ring.
inline BigRational scale(const BigRational& x, const BigRational& s) { return x * s; }
RatQPoly scale(const RatQPoly& p, const BigRational& s);

}  // namespace kromatic
