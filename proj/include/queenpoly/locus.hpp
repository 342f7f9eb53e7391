#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "queenpoly/poly.hpp"
#include "queenpoly/quartic.hpp"

namespace queenpoly {

/// Residues of 1/(z^2 (t-t1)(t-t2)(t-t3)(t-t4)), scaled by z^2:
/// A = 1/((t1-t2)(t1-t3)(t1-t4)) and similarly B, C, D.
template <class Real>
struct BasicPartialFractions {
  using Complex = ComplexOf<Real>;
  Real z{};
  Complex A, B, C, D;
};

using PartialFractionData = BasicPartialFractions<double>;

/// Throws DegenerateRoots if two roots are closer than 1e-9 max|t_i|.
template <class Real>
BasicPartialFractions<Real> partial_fractions_in(const BasicQuartet<Real>& q);

extern template BasicPartialFractions<double> partial_fractions_in<double>(const RootQuartet&);
extern template BasicPartialFractions<HighReal> partial_fractions_in<HighReal>(const HighQuartet&);

inline PartialFractionData partial_fractions(const RootQuartet& q) { return partial_fractions_in(q); }

/// P_m(z) from -z^2 P_m(z) = 2 Re(A/t1^(m+1)) + 2 Re(C/t3^(m+1)).
double closed_form_value(std::size_t m, double z, Precision precision = Precision::Double);

struct Dominance {
  bool holds = false;
  /// log|A/t1^(m+1)| - log|C/t3^(m+1)|; positive when the t1 term dominates.
  double log_margin = 0;
};

Dominance dominance_check(std::size_t m, const RootQuartet& q);
Dominance dominance_check(std::size_t m, double z);

/// arg(A / t1^(m+1)) as a principal value.
double arg_f(std::size_t m, const RootQuartet& q);

struct ArgChangeA {
  double total = 0;      // unwrapped arg A at z_hi minus arg A at z_lo
  double arg_at_lo = 0;  // Arg A at the most negative z of the sweep
  double arg_at_hi = 0;  // Arg A at the sample closest to -9/4
  /// min over samples of |Arg A - pi/2|; A stays off the positive imaginary axis.
  double min_distance_from_pos_imag = std::numeric_limits<double>::infinity();
};

ArgChangeA arg_change_A(const std::vector<CurveSample>& sweep);

struct Crossing {
  double z = 0;
  int re_sign = 0;         // sign of Re f where f = A/t1^(m+1) meets the real axis
  int exact_sign = 0;      // sign of -z^2 P_m(z) evaluated exactly at the same z
  bool agrees() const { return re_sign == exact_sign; }
};

struct CrossingReport {
  std::size_t m = 0;
  /// Sign alternations of Re f between consecutive real-axis crossings; each
  /// one brackets a zero of P_m.
  int count = 0;
  std::vector<Crossing> crossings;
  double delta_arg_f = 0;
  std::size_t samples = 0;
  bool signs_agree = true;
};

/// Refines the sweep so each step of arg f stays below pi/(2(m+3)), then
/// counts real-axis crossings of f along it.
CrossingReport crossing_count(std::size_t m, const std::vector<CurveSample>& sweep,
                              std::size_t budget = 400000);

/// Exact zero-location certificate for one polynomial.
struct LocusReport {
  std::string family;     // "P", "alpha", "rook-diagonal"
  Rational alpha = 1;
  std::size_t m = 0;
  int degree = -1;
  int roots_in_interval = 0;   // distinct roots inside the target interval
  int roots_elsewhere = 0;     // distinct real roots outside it
  bool endpoint_nonzero = true;  // value at the finite endpoint is nonzero
  int crossing_count = -1;     // -1 when no sweep was run
  double delta_arg_f = std::numeric_limits<double>::quiet_NaN();
  bool pass_degree_bound = false;  // degree <= floor(m/2) (or m for the rook diagonal)
  bool pass_location = false;      // roots_elsewhere == 0 && roots_in_interval == degree
  bool pass() const { return pass_degree_bound && pass_location; }
};

/// Certifies all zeros of p lie in (-inf, -9/4) by Sturm counts on
/// (-inf, -9/4] and (-9/4, inf) plus an exact test at -9/4.
LocusReport certify_quartic_family(const IntPoly& p, std::size_t m);

std::vector<LocusReport> certify_pseq_zeros(std::size_t m_max);

std::vector<LocusReport> conjecture_scan(const std::vector<Rational>& alphas, std::size_t m_max);

/// P_{m,m} zeros certified in (-inf, -4].
std::vector<LocusReport> rook_zero_check(std::size_t m_max);

}  // namespace queenpoly
