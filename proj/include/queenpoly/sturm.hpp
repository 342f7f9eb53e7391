#pragma once

#include <vector>

#include "queenpoly/poly.hpp"

namespace queenpoly {

/// An interval endpoint: a finite rational or one of the two infinities.
class Bound {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  Bound(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT(implicit)
  Bound(long v) : kind_(Kind::Finite), value_(v) {}                  // NOLINT(implicit)
  static Bound neg_inf() { return Bound(Kind::NegInf); }
  static Bound pos_inf() { return Bound(Kind::PosInf); }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::Finite; }
  const Rational& value() const { return value_; }

  friend bool operator<(const Bound& a, const Bound& b);

 private:
  explicit Bound(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_;
};

/// Sign of p at a bound; at +-infinity this is the sign of the leading term.
int sign_at(const IntPoly& p, const Bound& x);

/// Signed-remainder chain of a squarefree integer polynomial.
///
/// Each element is primitive; element k+1 is a positive multiple of
/// -rem(chain[k-1], chain[k]). The last element is a nonzero constant.
class SturmChain {
 public:
  /// Builds the chain of the squarefree part of p. Throws on p == 0.
  explicit SturmChain(const IntPoly& p);

  const std::vector<IntPoly>& chain() const { return chain_; }
  const IntPoly& source() const { return source_; }

  /// Number of sign changes (zeros skipped) of the chain evaluated at x.
  int variations(const Bound& x) const;

  /// Distinct real roots in the half-open interval (lo, hi].
  int count(const Bound& lo, const Bound& hi) const;

 private:
  IntPoly source_;
  std::vector<IntPoly> chain_;
};

/// Distinct real roots of p in (lo, hi]. Requires lo < hi and p != 0.
int sturm_count(const IntPoly& p, const Bound& lo, const Bound& hi);
int sturm_count(const RatPoly& p, const Bound& lo, const Bound& hi);

}  // namespace queenpoly
