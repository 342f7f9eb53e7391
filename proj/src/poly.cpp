#include "queenpoly/poly.hpp"

#include <sstream>

namespace queenpoly {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational number: '" + text + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

RatPoly to_rational(const IntPoly& p) {
  return p.map([](const Integer& c) { return Rational(c); });
}

IntPoly clear_denominators(const RatPoly& p) {
  if (p.is_zero()) return IntPoly();
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntPoly scaled = p.map([&](const Rational& c) { return Integer(c.get_num() * (den / c.get_den())); });
  return primitive_part(scaled);
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return p;
  }
  return p.map([&](const Integer& c) { return RingTraits<Integer>::divexact(c, g); });
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a;
  RatPoly y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  const Rational lc = x.lead();
  return x.map([&](const Rational& c) { return Rational(c / lc); });
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero() && sgn(x.lead()) < 0) x = -x;
  // Over Z[x] the gcd of two primitive polynomials is the primitive part of
  // the last nonzero remainder; contents were dropped up front.
  return x;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() < 1) return primitive_part(p);
  IntPoly g = gcd(p, p.derivative());
  IntPoly sf = g.degree() > 0 ? RingTraits<IntPoly>::divexact(primitive_part(p), g) : primitive_part(p);
  if (sgn(sf.lead()) != sgn(p.lead())) sf = -sf;
  return sf;
}

namespace {

template <class R>
std::string render(const Poly<R>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const R& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    R mag = abs(c);
    if (sgn(c) < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    const bool unit = (mag == 1);
    if (k == 0 || !unit) {
      if constexpr (std::is_same_v<R, Rational>) {
        if (k > 0 && mag.get_den() != 1)
          os << '(' << mag.get_str() << ')';
        else
          os << mag.get_str();
      } else {
        os << mag.get_str();
      }
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& p, const std::string& var) { return render(p, var); }

std::string to_string(const RatPoly& p, const std::string& var) { return render(p, var); }

}  // namespace queenpoly
