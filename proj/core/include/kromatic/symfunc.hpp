#pragma once

// Symmetric polynomials in M variables truncated at total degree N, stored
// in the monomial basis (one coefficient per partition), together with the
// power sum bases p, p̄, p̄′, the involution ω and basis extraction.

#include "kromatic/numbers.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kromatic {

// ---------------------------------------------------------------------------
// Integer kernels (cached, thread safe)
// ---------------------------------------------------------------------------

/// Expansion of m_a · m_b in monomial symmetric functions (no truncation).
const std::vector<std::pair<Partition, BigInt>>& monomial_product(const Partition& a, const Partition& b);

/// Coefficient of m_mu in p_lambda: the number of maps from the parts of
/// lambda to the rows of mu whose fibre sums are the rows.
BigInt power_to_monomial(const Partition& lambda, const Partition& mu);

// ---------------------------------------------------------------------------
// Truncated univariate series
// ---------------------------------------------------------------------------

template <class R>
class USeries {
 public:
  explicit USeries(int cap) : c_(static_cast<std::size_t>(cap) + 1, from_integer<R>(0)) {
    if (cap < 0) throw std::invalid_argument("series cap must be nonnegative");
  }
  static USeries from_polynomial(const QPoly<BigInt>& p, int cap) {
    USeries s(cap);
    for (int i = 0; i <= std::min(cap, p.degree()); ++i) s.c_[i] = from_integer<R>(p.coefficients()[i]);
    return s;
  }
  static USeries one(int cap) {
    USeries s(cap);
    s.c_[0] = from_integer<R>(1);
    return s;
  }

  int cap() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int i) const { return c_[i]; }
  R& operator[](int i) { return c_[i]; }
  const std::vector<R>& coefficients() const { return c_; }

  friend USeries operator+(const USeries& a, const USeries& b) {
    USeries r(a.cap());
    for (int i = 0; i <= a.cap(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend USeries operator-(const USeries& a, const USeries& b) {
    USeries r(a.cap());
    for (int i = 0; i <= a.cap(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend USeries operator*(const USeries& a, const USeries& b) {
    USeries r(a.cap());
    for (int i = 0; i <= a.cap(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= a.cap(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  bool operator==(const USeries& o) const { return c_ == o.c_; }

 private:
  std::vector<R> c_;
};

template <class R>
void require_unit_constant(const USeries<R>& f, const char* what) {
  if (!(f[0] == from_integer<R>(1))) throw std::invalid_argument(std::string(what) + ": constant term must be 1");
}

/// 1/f truncated; f must have constant term 1.
template <class R>
USeries<R> series_reciprocal(const USeries<R>& f) {
  require_unit_constant(f, "series_reciprocal");
  USeries<R> g = USeries<R>::one(f.cap());
  for (int n = 1; n <= f.cap(); ++n) {
    R acc = from_integer<R>(0);
    for (int k = 1; k <= n; ++k) acc += f[k] * g[n - k];
    g[n] = -acc;
  }
  return g;
}

/// f(-t).
template <class R>
USeries<R> series_neg_sub(const USeries<R>& f) {
  USeries<R> g = f;
  for (int n = 1; n <= f.cap(); n += 2) g[n] = -g[n];
  return g;
}

/// log f over the rationals; f must have constant term 1.
template <class R>
USeries<field_t<R>> series_log(const USeries<R>& f) {
  using F = field_t<R>;
  require_unit_constant(f, "series_log");
  // n·g_n = n·f_n − Σ_{k=1}^{n-1} k·g_k·f_{n-k}  (from f' = f·g').
  USeries<F> g(f.cap());
  for (int n = 1; n <= f.cap(); ++n) {
    F acc = from_integer<F>(BigInt(n)) * lift(f[n]);
    for (int k = 1; k < n; ++k) acc -= from_integer<F>(BigInt(k)) * g[k] * lift(f[n - k]);
    g[n] = scale(acc, BigRational(1, n));
  }
  return g;
}

/// f^e for any integer e (negative powers through the reciprocal).
template <class R>
USeries<R> series_pow(const USeries<R>& f, long e) {
  USeries<R> base = e < 0 ? series_reciprocal(f) : f;
  USeries<R> r = USeries<R>::one(f.cap());
  for (long i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
  return r;
}

// ---------------------------------------------------------------------------
// SymPoly
// ---------------------------------------------------------------------------

template <class R>
class SymPoly {
 public:
  using ring_type = R;

  SymPoly(int vars, int cap) : m_(vars), n_(cap) {
    if (cap < 0) throw std::invalid_argument("degree cap must be nonnegative");
    if (vars < cap) throw std::invalid_argument("need at least as many variables as the degree cap (M >= N)");
  }
  static SymPoly one(int vars, int cap) { return monomial(vars, cap, Partition{}, from_integer<R>(1)); }
  static SymPoly monomial(int vars, int cap, const Partition& lambda, R coeff) {
    SymPoly p(vars, cap);
    p.add_term(lambda, std::move(coeff));
    return p;
  }

  int variables() const { return m_; }
  int cap() const { return n_; }
  const std::map<Partition, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  R coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? from_integer<R>(0) : it->second;
  }

  /// Adds c·m_lambda; terms beyond the truncation are dropped.
  void add_term(const Partition& lambda, const R& c) {
    if (lambda.size() > n_ || lambda.length() > m_ || kromatic::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (kromatic::is_zero(it->second)) terms_.erase(it);
    }
  }

  SymPoly homogeneous_part(int n) const {
    SymPoly r(m_, n_);
    for (const auto& [lam, c] : terms_)
      if (lam.size() == n) r.terms_.emplace(lam, c);
    return r;
  }

  template <class Fn>
  auto map(Fn fn) const -> SymPoly<std::decay_t<decltype(fn(std::declval<const R&>()))>> {
    SymPoly<std::decay_t<decltype(fn(std::declval<const R&>()))>> r(m_, n_);
    for (const auto& [lam, c] : terms_) r.add_term(lam, fn(c));
    return r;
  }

  SymPoly& operator+=(const SymPoly& o) {
    check_compatible(o);
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
  }
  SymPoly& operator-=(const SymPoly& o) {
    check_compatible(o);
    for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
    return *this;
  }
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator-(const SymPoly& a) {
    return a.map([](const R& c) { return R(-c); });
  }
  friend SymPoly operator*(const R& s, const SymPoly& a) {
    return a.map([&](const R& c) { return R(s * c); });
  }

  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    a.check_compatible(b);
    SymPoly r(a.m_, a.n_);
    for (const auto& [la, ca] : a.terms_)
      for (const auto& [lb, cb] : b.terms_) {
        if (la.size() + lb.size() > a.n_) continue;
        R prod = ca * cb;
        for (const auto& [nu, k] : monomial_product(la, lb)) {
          if (nu.length() > a.m_) continue;
          r.add_term(nu, k == 1 ? prod : R(from_integer<R>(k) * prod));
        }
      }
    return r;
  }

  bool operator==(const SymPoly& o) const { return m_ == o.m_ && n_ == o.n_ && terms_ == o.terms_; }

  void check_compatible(const SymPoly& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("symmetric polynomials with different truncations");
  }

 private:
  int m_;
  int n_;
  std::map<Partition, R> terms_;
};

/// Adds c·b to target, b having integer coefficients.
template <class F>
void add_scaled(SymPoly<F>& target, const F& c, const SymPoly<BigInt>& b) {
  for (const auto& [lam, k] : b.terms()) target.add_term(lam, F(c * from_integer<F>(k)));
}

template <class R>
SymPoly<field_t<R>> lift(const SymPoly<R>& f) {
  return f.map([](const R& c) { return lift(c); });
}

/// Field coefficients back to the integral ring; throws ArithmeticError on a
/// non-integral coefficient.
inline SymPoly<BigInt> lower(const SymPoly<BigRational>& f) {
  return f.map([](const BigRational& c) { return lower(c); });
}
inline SymPoly<IntQPoly> lower(const SymPoly<RatQPoly>& f) {
  return f.map([](const RatQPoly& c) { return lower(c); });
}

/// Evaluate q-coefficients at q = value.
template <class C>
SymPoly<C> evaluate_q(const SymPoly<QPoly<C>>& f, const C& value) {
  return f.map([&](const QPoly<C>& c) { return c.evaluate(value); });
}

/// f^{-1} for f with constant term 1, as Σ_j (1 - f)^j.
template <class R>
SymPoly<R> reciprocal(const SymPoly<R>& f) {
  if (!(f.coefficient(Partition{}) == from_integer<R>(1)))
    throw std::invalid_argument("reciprocal: constant term must be 1");
  SymPoly<R> g = SymPoly<R>::one(f.variables(), f.cap()) - f;
  SymPoly<R> result = SymPoly<R>::one(f.variables(), f.cap());
  SymPoly<R> power = result;
  for (int j = 1; j <= f.cap(); ++j) {
    power = power * g;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

template <class R>
SymPoly<R> pow(const SymPoly<R>& f, long e) {
  SymPoly<R> base = e < 0 ? reciprocal(f) : f;
  SymPoly<R> r = SymPoly<R>::one(f.variables(), f.cap());
  for (long i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
  return r;
}

/// ∏_{i=1}^{M} f(x_i) truncated at degree N. The coefficient of m_λ is
/// ∏_i f_{λ_i}, since x^a appears in the product with coefficient ∏ f_{a_i}.
template <class R>
SymPoly<R> product_over_variables(const USeries<R>& f, int vars, int cap) {
  require_unit_constant(f, "product_over_variables");
  SymPoly<R> r(vars, cap);
  for (const auto& lam : partitions_up_to(cap)) {
    if (lam.length() > vars) continue;
    R c = from_integer<R>(1);
    bool zero = false;
    for (int part : lam.parts()) {
      if (part > f.cap() || kromatic::is_zero(f[part])) {
        zero = true;
        break;
      }
      c = c * f[part];
    }
    if (!zero) r.add_term(lam, c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Dense monomial polynomials (for quantities not known to be symmetric)
// ---------------------------------------------------------------------------

template <class R>
class MonomialPoly {
 public:
  using Exponent = std::vector<int>;

  MonomialPoly(int vars, int cap) : m_(vars), n_(cap) {}

  int variables() const { return m_; }
  int cap() const { return n_; }
  const std::map<Exponent, R>& terms() const { return terms_; }

  void add_term(const Exponent& a, const R& c) {
    if (static_cast<int>(a.size()) != m_) throw std::invalid_argument("exponent length mismatch");
    if (kromatic::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (kromatic::is_zero(it->second)) terms_.erase(it);
    }
  }
  R coefficient(const Exponent& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? from_integer<R>(0) : it->second;
  }
  MonomialPoly& operator+=(const MonomialPoly& o) {
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  bool operator==(const MonomialPoly& o) const { return m_ == o.m_ && n_ == o.n_ && terms_ == o.terms_; }

  template <class Fn>
  auto map(Fn fn) const -> MonomialPoly<std::decay_t<decltype(fn(std::declval<const R&>()))>> {
    MonomialPoly<std::decay_t<decltype(fn(std::declval<const R&>()))>> r(m_, n_);
    for (const auto& [a, c] : terms_) r.add_term(a, fn(c));
    return r;
  }

  /// True iff coefficients are constant on permutation orbits of exponents.
  bool is_symmetric() const {
    for (const auto& [a, c] : terms_) {
      Exponent perm = a;
      std::sort(perm.begin(), perm.end());
      do {
        if (!(coefficient(perm) == c)) return false;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return true;
  }

  /// Throws Error when the polynomial is not symmetric.
  SymPoly<R> to_symmetric() const {
    if (!is_symmetric()) throw Error("polynomial is not symmetric");
    SymPoly<R> s(m_, n_);
    for (const auto& [a, c] : terms_) {
      if (!std::is_sorted(a.begin(), a.end(), std::greater<>())) continue;
      std::vector<int> parts;
      for (int e : a)
        if (e > 0) parts.push_back(e);
      s.add_term(Partition(parts), c);
    }
    return s;
  }

 private:
  int m_;
  int n_;
  std::map<Exponent, R> terms_;
};

/// Dense form of a symmetric polynomial (all monomials of each orbit).
template <class R>
MonomialPoly<R> to_monomials(const SymPoly<R>& f) {
  MonomialPoly<R> out(f.variables(), f.cap());
  for (const auto& [lam, c] : f.terms()) {
    std::vector<int> a(f.variables(), 0);
    for (int i = 0; i < lam.length(); ++i) a[i] = lam[i];
    std::sort(a.begin(), a.end());
    do out.add_term(a, c);
    while (std::next_permutation(a.begin(), a.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bases, p-decomposition, ω, extraction
// ---------------------------------------------------------------------------

enum class Basis { P, PBar, PBarPrime };

std::string basis_name(Basis b);
/// Accepts "p", "pbar", "pbarprime".
Basis parse_basis(const std::string& name);

/// p_k = m_(k); 1 + p̄_k = ∏(1 + x_i^k); 1 + p̄′_k = ∏ 1/(1 − x_i^k).
/// Throws std::invalid_argument unless 1 <= k <= N.
SymPoly<BigInt> basis_element(Basis b, int k, int vars, int cap);
SymPoly<BigInt> basis_p(int k, int vars, int cap);
SymPoly<BigInt> basis_pbar(int k, int vars, int cap);
SymPoly<BigInt> basis_pbarprime(int k, int vars, int cap);

/// Memoized products B_λ = ∏ B_{λ_i} at one truncation.
class BasisTable {
 public:
  BasisTable(Basis b, int vars, int cap) : basis_(b), m_(vars), n_(cap) {}
  Basis basis() const { return basis_; }
  const SymPoly<BigInt>& element(const Partition& lambda);

 private:
  Basis basis_;
  int m_;
  int n_;
  std::map<Partition, SymPoly<BigInt>> cache_;
};

/// Coefficients c_λ (|λ| = n) with [degree-n part of F] = Σ c_λ p_λ.
template <class R>
std::map<Partition, field_t<R>> p_decompose_homogeneous(const SymPoly<R>& f, int n) {
  using F = field_t<R>;
  if (n > f.cap()) throw std::invalid_argument("p_decompose_homogeneous: degree above truncation");
  auto parts = partitions_of(n);  // coarsest first
  std::map<Partition, F> c;
  // [m_μ]F = Σ_{λ refines μ} c_λ L_{λμ}; refinements of μ come after μ in
  // graded reverse-lex order, so solve from the finest partition upward.
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    const Partition& mu = *it;
    F acc = lift(f.coefficient(mu));
    for (const auto& [lam, cl] : c) {
      BigInt l = power_to_monomial(lam, mu);
      if (l != 0) acc -= cl * from_integer<F>(l);
    }
    BigInt diag = multiplicity_factorial(mu);
    F value = scale(acc, BigRational(1) / BigRational(diag));
    if (!kromatic::is_zero(value)) c.emplace(mu, std::move(value));
  }
  return c;
}

/// Σ c_λ p_λ in the monomial basis.
template <class F>
SymPoly<F> from_power_sums(const std::map<Partition, F>& c, int vars, int cap) {
  SymPoly<F> r(vars, cap);
  for (const auto& [lam, cl] : c) {
    if (lam.size() > cap) continue;
    for (const auto& mu : partitions_of(lam.size())) {
      if (mu.length() > vars) continue;
      BigInt l = power_to_monomial(lam, mu);
      if (l != 0) r.add_term(mu, F(cl * from_integer<F>(l)));
    }
  }
  return r;
}

/// All p-coefficients of f up to its truncation.
template <class R>
std::map<Partition, field_t<R>> p_decompose(const SymPoly<R>& f) {
  std::map<Partition, field_t<R>> all;
  for (int n = 0; n <= f.cap(); ++n) all.merge(p_decompose_homogeneous(f, n));
  return all;
}

/// ω(p_λ) = (−1)^{|λ|−ℓ(λ)} p_λ, applied degree by degree.
template <class R>
SymPoly<R> omega(const SymPoly<R>& f) {
  using F = field_t<R>;
  auto c = p_decompose(f);
  for (auto& [lam, cl] : c)
    if (omega_sign(lam) < 0) cl = -cl;
  SymPoly<F> g = from_power_sums(c, f.variables(), f.cap());
  if constexpr (std::is_same_v<R, F>) {
    return g;
  } else {
    return lower(g);
  }
}

template <class F>
struct Expansion {
  Basis basis;
  int cap = 0;
  std::map<Partition, F> terms;
  /// Set once the residual has been reduced to zero.
  bool certificate = false;

  F coefficient(const Partition& lambda) const {
    auto it = terms.find(lambda);
    return it == terms.end() ? from_integer<F>(0) : it->second;
  }
};

/// Coefficients of f in the multiplicative basis {B_λ : |λ| <= N}.
/// Throws Error if a nonzero residual survives.
template <class R>
Expansion<field_t<R>> extract(const SymPoly<R>& f, Basis basis) {
  using F = field_t<R>;
  Expansion<F> out{basis, f.cap(), {}, false};
  SymPoly<F> residual = lift(f);
  BasisTable table(basis, f.variables(), f.cap());
  for (int n = 0; n <= f.cap(); ++n) {
    // Every B_λ with |λ| = n has lowest-degree part p_λ, so the degree-n
    // p-coefficients of the residual are exactly the basis coefficients.
    auto c = p_decompose_homogeneous(residual, n);
    for (const auto& [lam, cl] : c) {
      add_scaled(residual, F(-cl), table.element(lam));
      out.terms.emplace(lam, cl);
    }
    for (const auto& [lam, cl] : residual.terms())
      if (lam.size() == n) throw Error("extraction left a nonzero residual at " + lam.to_string());
  }
  if (!residual.is_zero()) throw Error("extraction left a nonzero residual");
  out.certificate = true;
  return out;
}

/// Σ c_λ B_λ at the given number of variables.
template <class F>
SymPoly<F> expand(const Expansion<F>& e, int vars) {
  SymPoly<F> r(vars, e.cap);
  BasisTable table(e.basis, vars, e.cap);
  for (const auto& [lam, c] : e.terms) add_scaled(r, c, table.element(lam));
  return r;
}

/// Integral coefficients; throws ArithmeticError otherwise.
inline Expansion<BigInt> lower(const Expansion<BigRational>& e) {
  Expansion<BigInt> r{e.basis, e.cap, {}, e.certificate};
  for (const auto& [lam, c] : e.terms) r.terms.emplace(lam, lower(c));
  return r;
}

/// ω(1+p̄′_k) = 1+p̄_k (k odd) or 1/(1+p̄′_k) (k even), and
/// ω(1+p̄_k) = 1+p̄′_k (k odd) or 1/(1+p̄_k) (k even), at this truncation.
bool verify_omega_basis_identities(int k, int cap, int vars);

}  // namespace kromatic
