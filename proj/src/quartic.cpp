#include "queenpoly/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include <boost/math/constants/constants.hpp>

namespace queenpoly {

namespace {

template <class Real>
std::array<Real, 5> denominator_coeffs(const Real& z) {
  return {Real(1), Real(-14), Real(Real(49) - 2 * z), Real(Real(-36) - 2 * z), Real(z * z)};
}

template <class Real, class Complex>
std::pair<Complex, Complex> eval_with_derivative(const std::array<Real, 5>& a, const Complex& x) {
  Complex p(a[4]);
  Complex dp(0);
  for (int k = 3; k >= 0; --k) {
    dp = dp * x + p;
    p = p * x + Complex(a[static_cast<std::size_t>(k)]);
  }
  return {p, dp};
}

/// Aberth-Ehrlich simultaneous iteration on the monic-scaled quartic from a
/// fixed starting circle, then Newton polishing on the unscaled polynomial.
template <class Real>
std::array<ComplexOf<Real>, 4> aberth_roots(const std::array<Real, 5>& a) {
  using std::abs;
  using std::cos;
  using std::pow;
  using std::sin;
  using Complex = ComplexOf<Real>;
  std::array<Real, 5> monic;
  for (std::size_t k = 0; k < 5; ++k) monic[k] = a[k] / a[4];

  const Real radius = pow(Real(abs(monic[0])), Real(0.25));
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::array<Complex, 4> x;
  for (std::size_t k = 0; k < 4; ++k) {
    const Real angle = two_pi * Real(k) / 4 + Real(0.4);
    x[k] = Complex(Real(radius * cos(angle)), Real(radius * sin(angle)));
  }

  const Real eps = std::numeric_limits<Real>::epsilon();
  const int max_iter = 800;
  for (int iter = 0; iter < max_iter; ++iter) {
    Real worst = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      auto [p, dp] = eval_with_derivative(monic, x[i]);
      if (abs(p) == 0) continue;
      if (abs(dp) == 0) dp = Complex(eps);
      const Complex ratio = p / dp;
      Complex repulsion(0);
      for (std::size_t j = 0; j < 4; ++j)
        if (j != i) repulsion += Complex(1) / (x[i] - x[j]);
      const Complex corr = ratio / (Complex(1) - ratio * repulsion);
      x[i] -= corr;
      const Real rel = Real(abs(corr) / abs(x[i]));
      if (rel > worst) worst = rel;
    }
    if (worst <= 16 * eps) break;
  }

  for (auto& xi : x) {
    for (int step = 0; step < 3; ++step) {
      auto [p, dp] = eval_with_derivative(a, xi);
      if (abs(dp) == 0) break;
      const Complex candidate = xi - p / dp;
      if (abs(eval_with_derivative(a, candidate).first) < abs(p))
        xi = candidate;
      else
        break;
    }
  }
  return x;
}

template <class Real>
Real normalized_residual(const std::array<Real, 5>& a, const ComplexOf<Real>& t) {
  using std::abs;
  const Real m = abs(t);
  return Real(abs(eval_with_derivative(a, t).first) / (1 + a[4] * m * m * m * m));
}

template <class Real>
std::string describe(const Real& z) {
  std::ostringstream os;
  os.precision(17);
  os << static_cast<double>(z);
  return os.str();
}

}  // namespace

template <class Real>
BasicQuartet<Real> solve_quartet_in(const Real& z) {
  using std::abs;
  using std::arg;
  using std::conj;
  using Complex = ComplexOf<Real>;
  if (!(z < Real(kCriticalZ) - Real(kGuardBand)))
    throw RangeError("solve_quartet: z = " + describe(z) + " is not below -9/4 - guard band");

  const auto a = denominator_coeffs(z);
  const auto raw = aberth_roots(a);

  const Real tol(1e-9);
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  for (const auto& t : raw) {
    if (abs(t.imag()) <= tol * abs(t))
      throw PairingError("solve_quartet: real root found at z = " + describe(z));
    (t.imag() > 0 ? upper : lower).push_back(t);
  }
  if (upper.size() != 2 || lower.size() != 2)
    throw PairingError("solve_quartet: roots are not two conjugate pairs at z = " + describe(z));

  // Nearest-conjugate matching: try both assignments, keep the better one.
  const Real d_straight = std::max(Real(abs(upper[0] - conj(lower[0]))), Real(abs(upper[1] - conj(lower[1]))));
  const Real d_crossed = std::max(Real(abs(upper[0] - conj(lower[1]))), Real(abs(upper[1] - conj(lower[0]))));
  if (d_crossed < d_straight) std::swap(lower[0], lower[1]);
  std::array<Complex, 2> pair;
  for (std::size_t k = 0; k < 2; ++k) {
    const Real gap = abs(upper[k] - conj(lower[k]));
    if (gap > tol * abs(upper[k]))
      throw PairingError("solve_quartet: conjugate mismatch at z = " + describe(z));
    pair[k] = (upper[k] + conj(lower[k])) / Real(2);
  }
  if (abs(pair[1]) < abs(pair[0])) std::swap(pair[0], pair[1]);
  if (abs(pair[1]) - abs(pair[0]) <= Real(1e-12) * abs(pair[1]))
    throw PairingError("solve_quartet: modulus tie |t1| = |t3| at z = " + describe(z));

  BasicQuartet<Real> q;
  q.z = z;
  q.t1 = pair[0];
  q.t2 = conj(pair[0]);
  q.t3 = pair[1];
  q.t4 = conj(pair[1]);
  q.r = abs(q.t1);
  q.theta = arg(q.t1);
  q.rho = abs(q.t3);
  q.phi = arg(q.t3);
  q.residual = 0;
  for (const auto& t : q.roots()) {
    const Real res = normalized_residual(a, t);
    if (res > q.residual) q.residual = res;
  }
  return q;
}

template BasicQuartet<double> solve_quartet_in<double>(const double&);
template BasicQuartet<HighReal> solve_quartet_in<HighReal>(const HighReal&);

RootQuartet to_double(const HighQuartet& q) {
  auto cx = [](const HighComplex& c) {
    return std::complex<double>(static_cast<double>(c.real()), static_cast<double>(c.imag()));
  };
  RootQuartet d;
  d.z = static_cast<double>(q.z);
  d.t1 = cx(q.t1);
  d.t2 = cx(q.t2);
  d.t3 = cx(q.t3);
  d.t4 = cx(q.t4);
  d.r = static_cast<double>(q.r);
  d.theta = static_cast<double>(q.theta);
  d.rho = static_cast<double>(q.rho);
  d.phi = static_cast<double>(q.phi);
  d.residual = static_cast<double>(q.residual);
  return d;
}

RootQuartet solve_quartet(double z, Precision precision) {
  if (precision == Precision::High) return to_double(solve_quartet_in(HighReal(z)));
  return solve_quartet_in(z);
}

RootQuartet make_quartet(double z, std::complex<double> t1, std::complex<double> t3) {
  RootQuartet q;
  q.z = z;
  q.t1 = t1;
  q.t2 = std::conj(t1);
  q.t3 = t3;
  q.t4 = std::conj(t3);
  q.r = std::abs(t1);
  q.theta = std::arg(t1);
  q.rho = std::abs(t3);
  q.phi = std::arg(t3);
  const auto a = denominator_coeffs(z);
  for (const auto& t : q.roots()) q.residual = std::max(q.residual, normalized_residual(a, t));
  return q;
}

double vieta_residual(const RootQuartet& q) {
  const auto t = q.roots();
  std::complex<double> e1 = 0;
  std::complex<double> e2 = 0;
  std::complex<double> e3 = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    e1 += t[i];
    for (std::size_t j = i + 1; j < 4; ++j) {
      e2 += t[i] * t[j];
      for (std::size_t k = j + 1; k < 4; ++k) e3 += t[i] * t[j] * t[k];
    }
  }
  const std::complex<double> e4 = t[0] * t[1] * t[2] * t[3];
  const double z2 = q.z * q.z;
  return std::max({std::abs(e1 - (2 * q.z + 36) / z2), std::abs(e2 - (49 - 2 * q.z) / z2),
                   std::abs(e3 - 14 / z2), std::abs(e4 - 1 / z2)});
}

double angle_identities_residual(const RootQuartet& q) {
  const double first = 2 * q.r * std::cos(q.theta) + 2 * q.rho * std::cos(q.phi) - (2 * q.z + 36) / (q.z * q.z);
  const double second = 2 * q.r * std::cos(q.phi) + 2 * q.rho * std::cos(q.theta) + 14 / q.z;
  const double product = q.r * q.rho + 1 / q.z;
  return std::max({std::abs(first), std::abs(second), std::abs(product)});
}

std::complex<double> t1_asymptotic(double z) {
  const double w = -z;
  const std::complex<double> i(0, 1);
  return i / std::sqrt(w) - 2.0 * std::polar(1.0, 3 * std::numbers::pi / 4) / std::pow(w, 0.75);
}

double z_from_u(double u) { return kCriticalZ - u / (1 - u); }

double u_from_z(double z) {
  const double w = kCriticalZ - z;
  return w / (1 + w);
}

double wrap_angle(double a) {
  const double two_pi = 2 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a <= -std::numbers::pi) a += two_pi;
  if (a > std::numbers::pi) a -= two_pi;
  return a;
}

namespace {

CurveSample make_sample(double z, double u, Precision precision) {
  CurveSample s;
  s.z = z;
  s.u = u;
  s.quartet = solve_quartet(z, precision);
  s.unwrapped_theta = s.quartet.theta;
  return s;
}

void unwrap_theta(std::vector<CurveSample>& sweep) {
  for (std::size_t i = 1; i < sweep.size(); ++i)
    sweep[i].unwrapped_theta =
        sweep[i - 1].unwrapped_theta + wrap_angle(sweep[i].quartet.theta - sweep[i - 1].quartet.theta);
}

}  // namespace

std::vector<CurveSample> refine_sweep(std::vector<CurveSample> sweep, const AngleMonitor& monitor,
                                      double max_step, std::size_t budget, Precision precision) {
  if (sweep.size() < 2) return sweep;
  if (sweep.size() > budget) throw BudgetExceeded("refine_sweep: initial sweep exceeds budget");
  std::vector<CurveSample> out;
  out.reserve(sweep.size());
  out.push_back(sweep.front());
  double prev_angle = monitor(sweep.front().quartet);
  std::size_t pending = sweep.size() - 1;  // samples still to be appended

  // Explicit stack of (sample, angle) pairs to bisect towards.
  struct Item {
    CurveSample sample;
    double angle;
  };
  for (std::size_t i = 1; i < sweep.size(); ++i) {
    std::vector<Item> stack;
    stack.push_back({sweep[i], monitor(sweep[i].quartet)});
    while (!stack.empty()) {
      const Item& target = stack.back();
      const CurveSample& left = out.back();
      if (std::abs(wrap_angle(target.angle - prev_angle)) < max_step) {
        prev_angle = target.angle;
        out.push_back(target.sample);
        stack.pop_back();
        if (stack.empty()) --pending;
        continue;
      }
      const double u_mid = 0.5 * (left.u + target.sample.u);
      const double z_mid = z_from_u(u_mid);
      if (!(z_mid > left.z && z_mid < target.sample.z))
        throw BudgetExceeded("refine_sweep: parameter resolution exhausted near z = " +
                             std::to_string(left.z));
      if (out.size() + stack.size() + pending + 1 > budget)
        throw BudgetExceeded("refine_sweep: sample budget of " + std::to_string(budget) + " exceeded");
      CurveSample mid = make_sample(z_mid, u_mid, precision);
      const double a = monitor(mid.quartet);
      stack.push_back({std::move(mid), a});
    }
  }
  unwrap_theta(out);
  return out;
}

std::vector<CurveSample> track_curve(double z_lo, double z_hi, const SweepOptions& options) {
  if (!(z_lo < z_hi)) throw RangeError("track_curve: need z_lo < z_hi");
  if (!(z_hi < kCriticalZ - kGuardBand)) throw RangeError("track_curve: z_hi must be below -9/4");
  if (!std::isfinite(z_lo)) throw RangeError("track_curve: z_lo must be finite");
  if (options.max_theta_step <= 0 || options.max_theta_step > std::numbers::pi / 2)
    throw std::invalid_argument("track_curve: max_theta_step must lie in (0, pi/2]");
  const std::size_t n = std::max<std::size_t>(options.initial_points, 2);
  if (n > options.budget) throw BudgetExceeded("track_curve: initial grid exceeds budget");

  const double u_lo = u_from_z(z_hi);
  const double u_hi = u_from_z(z_lo);
  std::vector<CurveSample> sweep;
  sweep.reserve(n);
  sweep.push_back(make_sample(z_lo, u_hi, options.precision));
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double u = u_hi - (u_hi - u_lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    const double z = z_from_u(u);
    if (z > sweep.back().z && z < z_hi) sweep.push_back(make_sample(z, u, options.precision));
  }
  sweep.push_back(make_sample(z_hi, u_lo, options.precision));

  return refine_sweep(std::move(sweep), [](const RootQuartet& q) { return q.theta; },
                      options.max_theta_step, options.budget, options.precision);
}

}  // namespace queenpoly
