#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "queenpoly/ring.hpp"

namespace queenpoly {

/// Dense univariate polynomial with coefficients in ascending degree order.
///
/// The zero polynomial has no stored coefficients and degree -1; every other
/// polynomial keeps a nonzero leading coefficient. Values are immutable in
/// practice: all arithmetic returns new polynomials.
template <class R>
class Poly {
 public:
  using Coeff = R;
  using Traits = RingTraits<R>;

  Poly() = default;
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(R c) { return Poly(std::vector<R>{std::move(c)}); }
  static Poly monomial(R c, std::size_t k) {
    std::vector<R> v(k + 1, Traits::zero());
    v[k] = std::move(c);
    return Poly(std::move(v));
  }
  /// The polynomial x.
  static Poly variable() { return monomial(Traits::one(), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }

  /// Coefficient of x^k; zero beyond the stored range.
  R operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Traits::zero(); }

  const R& lead() const {
    if (c_.empty()) throw std::domain_error("lead: zero polynomial");
    return c_.back();
  }

  Poly operator-() const {
    std::vector<R> v(c_);
    for (auto& x : v) x = R(-x);
    return Poly(std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    std::vector<R> v(big);
    for (std::size_t i = 0; i < small.size(); ++i) v[i] = R(v[i] + small[i]);
    return Poly(std::move(v));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<R> v(std::max(a.c_.size(), b.c_.size()), Traits::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = R(v[i] - b.c_[i]);
    return Poly(std::move(v));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> v(a.c_.size() + b.c_.size() - 1, Traits::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = R(v[i + j] + a.c_[i] * b.c_[j]);
    }
    return Poly(std::move(v));
  }

  friend Poly operator*(const R& s, const Poly& p) {
    if (Traits::is_zero(s)) return Poly();
    std::vector<R> v(p.c_);
    for (auto& x : v) x = R(s * x);
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly shift(std::size_t k) const {
    if (is_zero()) return Poly();
    std::vector<R> v(k, Traits::zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
      v[k - 1] = R(Traits::from_int(static_cast<long>(k)) * c_[k]);
    return Poly(std::move(v));
  }

  /// Horner evaluation. X may be the coefficient ring itself, Rational for an
  /// Integer polynomial, or a floating/complex type.
  template <class X>
  X eval(const X& x) const;

  template <class F>
  auto map(F&& f) const -> Poly<std::decay_t<decltype(f(std::declval<const R&>()))>> {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(f(x));
    return Poly<S>(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

/// Converts a coefficient into the evaluation type X.
template <class X, class R>
X coerce(const R& c) {
  if constexpr (std::is_same_v<X, R>) {
    return c;
  } else if constexpr (std::is_same_v<X, Rational> && std::is_same_v<R, Integer>) {
    return Rational(c);
  } else if constexpr (std::is_same_v<X, double>) {
    return c.get_d();
  } else if constexpr (std::is_same_v<X, std::complex<double>>) {
    return {c.get_d(), 0.0};
  } else if constexpr (std::is_same_v<R, Integer>) {
    return X(c.get_str());
  } else {
    static_assert(std::is_same_v<R, Rational>, "unsupported coefficient conversion");
    return X(c.get_num().get_str()) / X(c.get_den().get_str());
  }
}

template <class R>
template <class X>
X Poly<R>::eval(const X& x) const {
  if (c_.empty()) return coerce<X>(Traits::zero());
  X acc = coerce<X>(c_.back());
  for (std::size_t i = c_.size() - 1; i-- > 0;) acc = X(acc * x + coerce<X>(c_[i]));
  return acc;
}

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;
/// Polynomial in t whose coefficients are integer polynomials in z.
using BiPoly = Poly<IntPoly>;

/// Polynomials over an exact ring form an exact ring themselves; this is what
/// allows resultants in t with coefficients in Z[z].
template <class R>
struct RingTraits<Poly<R>> {
  static Poly<R> zero() { return Poly<R>(); }
  static Poly<R> one() { return Poly<R>::constant(RingTraits<R>::one()); }
  static Poly<R> from_int(long v) { return Poly<R>::constant(RingTraits<R>::from_int(v)); }
  static bool is_zero(const Poly<R>& a) { return a.is_zero(); }
  /// Sign of the leading coefficient (the sign as x -> +infinity).
  static int sign(const Poly<R>& a) { return a.is_zero() ? 0 : RingTraits<R>::sign(a.lead()); }
  static Poly<R> divexact(const Poly<R>& a, const Poly<R>& b);
};

template <class R>
Poly<R> RingTraits<Poly<R>>::divexact(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("divexact: division by zero polynomial");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return Poly<R>();
    throw std::domain_error("divexact: inexact polynomial division");
  }
  std::vector<R> rem(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<R> q(rem.size() - db, RingTraits<R>::zero());
  for (std::size_t k = q.size(); k-- > 0;) {
    const R& top = rem[k + db];
    if (RingTraits<R>::is_zero(top)) continue;
    R f = RingTraits<R>::divexact(top, bc[db]);
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = R(rem[k + j] - f * bc[j]);
    q[k] = std::move(f);
  }
  for (const auto& r : rem)
    if (!RingTraits<R>::is_zero(r)) throw std::domain_error("divexact: inexact polynomial division");
  return Poly<R>(std::move(q));
}

template <class R>
R power(const R& base, std::size_t e) {
  R result = RingTraits<R>::one();
  R b = base;
  while (e > 0) {
    if (e & 1U) result = R(result * b);
    e >>= 1U;
    if (e > 0) b = R(b * b);
  }
  return result;
}

/// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a = q*b + r.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
  using T = RingTraits<R>;
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const R& lb = b.lead();
  std::vector<R> r(a.coeffs());
  int e = a.degree() - b.degree() + 1;
  const auto& bc = b.coeffs();
  while (r.size() > db && !r.empty()) {
    const std::size_t k = r.size() - 1 - db;
    R top = r.back();
    for (auto& x : r) x = R(lb * x);
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = R(r[k + j] - top * bc[j]);
    r.pop_back();  // leading term cancelled by construction
    while (!r.empty() && T::is_zero(r.back())) r.pop_back();
    --e;
  }
  Poly<R> out(std::move(r));
  if (e > 0) out = power(lb, static_cast<std::size_t>(e)) * out;
  return out;
}

/// Quotient and remainder over a field.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("divmod: zero divisor");
  if (a.degree() < b.degree()) return {Poly<R>(), a};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<R> r(a.coeffs());
  std::vector<R> q(r.size() - db, RingTraits<R>::zero());
  const auto& bc = b.coeffs();
  for (std::size_t k = q.size(); k-- > 0;) {
    R f = R(r[k + db] / bc[db]);
    if (RingTraits<R>::is_zero(f)) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = R(r[k + j] - f * bc[j]);
    q[k] = std::move(f);
  }
  r.resize(db);
  return {Poly<R>(std::move(q)), Poly<R>(std::move(r))};
}

/// Resultant by the subresultant pseudo-remainder sequence.
///
/// Only exact divisions are performed, so the routine works over any domain
/// with RingTraits (in particular over Z[z]).
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
  using T = RingTraits<R>;
  if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant: zero polynomial");
  bool negate = false;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) negate = true;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    R r = power(b.lead(), static_cast<std::size_t>(a.degree()));
    return negate ? R(-r) : r;
  }
  R g = T::one();
  R h = T::one();
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
    Poly<R> r = pseudo_remainder(a, b);
    if (r.is_zero()) return T::zero();
    a = std::move(b);
    R divisor = R(g * power(h, static_cast<std::size_t>(delta)));
    b = r.map([&](const R& c) { return T::divexact(c, divisor); });
    g = a.lead();
    if (delta > 0)
      h = T::divexact(power(g, static_cast<std::size_t>(delta)),
                      power(h, static_cast<std::size_t>(delta - 1)));
    if (b.degree() == 0) {
      const int da = a.degree();
      R res = T::divexact(power(b.lead(), static_cast<std::size_t>(da)),
                          power(h, static_cast<std::size_t>(da - 1)));
      return negate ? R(-res) : res;
    }
  }
}

/// Disc(p) = (-1)^(n(n-1)/2) * Res(p, p') / lead(p).
template <class R>
R discriminant(const Poly<R>& p) {
  using T = RingTraits<R>;
  const int n = p.degree();
  if (n < 1) throw std::domain_error("discriminant: constant polynomial");
  if (n == 1) return T::one();
  R res = T::divexact(resultant(p, p.derivative()), p.lead());
  const long half = static_cast<long>(n) * (n - 1) / 2;
  return (half % 2) ? R(-res) : res;
}

// Integer / rational helpers -------------------------------------------------

RatPoly to_rational(const IntPoly& p);

/// Positive integer multiple of p with coprime integer coefficients.
IntPoly clear_denominators(const RatPoly& p);

/// p divided by the positive gcd of its coefficients (sign kept).
IntPoly primitive_part(const IntPoly& p);

/// Monic gcd over Q.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Primitive gcd over Z with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p'), primitive with the sign of p's leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

/// Human-readable form in the given variable, e.g. "58z+1408" (descending).
std::string to_string(const IntPoly& p, const std::string& var = "z");
std::string to_string(const RatPoly& p, const std::string& var = "z");

}  // namespace queenpoly
