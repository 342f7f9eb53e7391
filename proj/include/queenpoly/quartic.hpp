#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "queenpoly/errors.hpp"

namespace queenpoly {

enum class Precision { Double, High };

/// About 50 significant digits.
using HighReal = boost::multiprecision::cpp_bin_float_50;
using HighComplex = boost::multiprecision::cpp_complex_50;

template <class Real>
struct ComplexFor;
template <>
struct ComplexFor<double> {
  using type = std::complex<double>;
};
template <>
struct ComplexFor<HighReal> {
  using type = HighComplex;
};
template <class Real>
using ComplexOf = typename ComplexFor<Real>::type;

/// Left end of the admissible z range is -infinity; the right end is
/// -9/4 - kGuardBand, where the roots of D collapse into two double roots.
inline constexpr double kCriticalZ = -2.25;
inline constexpr double kGuardBand = 1e-9;

/// The four roots of D(t, z) at a fixed real z < -9/4.
///
/// t2 = conj(t1), t4 = conj(t3), t1 and t3 in the upper half-plane and
/// |t1| < |t3|. (r, theta) and (rho, phi) are the polar forms of t1 and t3.
template <class Real>
struct BasicQuartet {
  using Complex = ComplexOf<Real>;
  Real z{};
  Complex t1, t2, t3, t4;
  Real r{}, theta{}, rho{}, phi{};
  /// max_i |D(t_i, z)| / (1 + z^2 |t_i|^4)
  Real residual{};

  std::array<Complex, 4> roots() const { return {t1, t2, t3, t4}; }
};

using RootQuartet = BasicQuartet<double>;
using HighQuartet = BasicQuartet<HighReal>;

/// Solves D(t, z) = 0. Throws RangeError for z >= -9/4 - kGuardBand and
/// PairingError if the roots fail to pair up.
RootQuartet solve_quartet(double z, Precision precision = Precision::Double);

template <class Real>
BasicQuartet<Real> solve_quartet_in(const Real& z);

extern template BasicQuartet<double> solve_quartet_in<double>(const double&);
extern template BasicQuartet<HighReal> solve_quartet_in<HighReal>(const HighReal&);

RootQuartet to_double(const HighQuartet& q);

/// Rebuilds a quartet from four labelled roots (t1..t4 in that order)
/// without any validation. Useful for probing residual functions.
RootQuartet make_quartet(double z, std::complex<double> t1, std::complex<double> t3);

/// Largest deviation of the elementary symmetric functions of the roots from
/// (2z+36)/z^2, (49-2z)/z^2, 14/z^2 and 1/z^2.
double vieta_residual(const RootQuartet& q);

/// Largest deviation in 2r cos(theta) + 2 rho cos(phi) = (2z+36)/z^2,
/// 2r cos(phi) + 2 rho cos(theta) = -14/z and r rho = -1/z.
double angle_identities_residual(const RootQuartet& q);

/// i/sqrt(-z) - 2 e^{3 i pi/4} / (-z)^{3/4}
std::complex<double> t1_asymptotic(double z);

/// Compactified sweep parameter: z = -9/4 - u/(1-u), u in (0, 1).
double z_from_u(double u);
double u_from_z(double z);

struct CurveSample {
  double z = 0;
  double u = 0;
  RootQuartet quartet;
  double unwrapped_theta = 0;
};

struct SweepOptions {
  std::size_t budget = 200000;
  std::size_t initial_points = 129;
  /// Consecutive theta values must differ by less than this.
  double max_theta_step = std::numbers::pi / 2;
  Precision precision = Precision::Double;
};

/// Samples t1(z) on [z_lo, z_hi], sorted by increasing z, refined until
/// consecutive theta steps are below options.max_theta_step.
std::vector<CurveSample> track_curve(double z_lo, double z_hi, const SweepOptions& options = {});

/// Angle-valued function of a quartet watched during refinement.
using AngleMonitor = std::function<double(const RootQuartet&)>;

/// Inserts samples (bisecting in u) until the wrapped step of `monitor`
/// between neighbours is below max_step. Throws BudgetExceeded when the sweep
/// would grow beyond `budget` samples.
std::vector<CurveSample> refine_sweep(std::vector<CurveSample> sweep, const AngleMonitor& monitor,
                                      double max_step, std::size_t budget,
                                      Precision precision = Precision::Double);

/// Principal representative of an angle difference, in (-pi, pi].
double wrap_angle(double a);

}  // namespace queenpoly
