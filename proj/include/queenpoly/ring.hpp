#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace queenpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient-domain interface used by the polynomial code.
///
/// A domain supplies exactly: zero, one, from_int, is_zero, sign and
/// divexact (division known to be exact). Addition, subtraction and
/// multiplication come from the type's own operators. Specializations exist
/// for Integer, Rational and Poly<R> (see poly.hpp), which lets the same
/// resultant code run over Z and over Z[z].
template <class R>
struct RingTraits;

template <>
struct RingTraits<Integer> {
  static Integer zero() { return Integer(0); }
  static Integer one() { return Integer(1); }
  static Integer from_int(long v) { return Integer(v); }
  static bool is_zero(const Integer& a) { return sgn(a) == 0; }
  static int sign(const Integer& a) { return sgn(a); }
  static Integer divexact(const Integer& a, const Integer& b) {
    if (sgn(b) == 0) throw std::domain_error("divexact: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
      throw std::domain_error("divexact: inexact integer division");
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long v) { return Rational(v); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static int sign(const Rational& a) { return sgn(a); }
  static Rational divexact(const Rational& a, const Rational& b) {
    if (sgn(b) == 0) throw std::domain_error("divexact: division by zero");
    return Rational(a / b);
  }
};

/// Parses "p/q" or "p" (optionally signed) into a canonical rational.
Rational parse_rational(const std::string& text);

/// Decimal string, "p/q" for non-integers.
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

}  // namespace queenpoly
