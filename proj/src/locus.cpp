#include "queenpoly/locus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "queenpoly/genfun.hpp"
#include "queenpoly/parallel.hpp"
#include "queenpoly/sturm.hpp"
#include "queenpoly/tables.hpp"

namespace queenpoly {

namespace {

template <class Complex>
Complex int_power(Complex base, std::size_t e) {
  Complex result(1);
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

const Rational& critical_point() {
  static const Rational value(-9, 4);
  return value;
}

}  // namespace

template <class Real>
BasicPartialFractions<Real> partial_fractions_in(const BasicQuartet<Real>& q) {
  using std::abs;
  using Complex = ComplexOf<Real>;
  const auto t = q.roots();
  Real scale = 0;
  for (const auto& x : t) scale = std::max(scale, Real(abs(x)));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (abs(t[i] - t[j]) < Real(1e-9) * scale) throw DegenerateRoots("partial_fractions: roots coincide");
  auto residue = [&](std::size_t i) {
    Complex den(1);
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) den *= (t[i] - t[j]);
    return Complex(Complex(1) / den);
  };
  BasicPartialFractions<Real> pf;
  pf.z = q.z;
  pf.A = residue(0);
  pf.B = residue(1);
  pf.C = residue(2);
  pf.D = residue(3);
  return pf;
}

template BasicPartialFractions<double> partial_fractions_in<double>(const RootQuartet&);
template BasicPartialFractions<HighReal> partial_fractions_in<HighReal>(const HighQuartet&);

namespace {

template <class Real>
double closed_form_in(std::size_t m, const Real& z) {
  using std::abs;
  using Complex = ComplexOf<Real>;
  const BasicQuartet<Real> q = solve_quartet_in(z);
  const BasicPartialFractions<Real> pf = partial_fractions_in(q);
  const Complex f1 = pf.A / int_power(q.t1, m + 1);
  const Complex f2 = pf.B / int_power(q.t2, m + 1);
  const Complex f3 = pf.C / int_power(q.t3, m + 1);
  const Complex f4 = pf.D / int_power(q.t4, m + 1);
  const Complex sum = f1 + f2 + f3 + f4;
  const Real scale = abs(f1) + abs(f3);
  if (abs(sum.imag()) > Real(1e-8) * scale)
    throw std::runtime_error("closed_form_value: four-term sum is not real");
  const Real value = (2 * f1.real() + 2 * f3.real()) / (-(z * z));
  return static_cast<double>(value);
}

}  // namespace

double closed_form_value(std::size_t m, double z, Precision precision) {
  if (precision == Precision::High) return closed_form_in(m, HighReal(z));
  return closed_form_in(m, z);
}

Dominance dominance_check(std::size_t m, const RootQuartet& q) {
  const PartialFractionData pf = partial_fractions(q);
  const double k = static_cast<double>(m + 1);
  const double lhs = std::log(std::abs(pf.A)) - k * std::log(std::abs(q.t1));
  const double rhs = std::log(std::abs(pf.C)) - k * std::log(std::abs(q.t3));
  return {lhs > rhs, lhs - rhs};
}

Dominance dominance_check(std::size_t m, double z) { return dominance_check(m, solve_quartet(z)); }

double arg_f(std::size_t m, const RootQuartet& q) {
  const PartialFractionData pf = partial_fractions(q);
  return wrap_angle(std::arg(pf.A) - static_cast<double>(m + 1) * q.theta);
}

ArgChangeA arg_change_A(const std::vector<CurveSample>& sweep) {
  if (sweep.size() < 2) throw std::invalid_argument("arg_change_A: sweep needs at least two samples");
  ArgChangeA out;
  double prev = std::arg(partial_fractions(sweep.front().quartet).A);
  out.arg_at_lo = prev;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    const double a = std::arg(partial_fractions(sweep[i].quartet).A);
    out.min_distance_from_pos_imag = std::min(out.min_distance_from_pos_imag, std::abs(a - std::numbers::pi / 2));
    if (i > 0) out.total += wrap_angle(a - prev);
    prev = a;
  }
  out.arg_at_hi = prev;
  return out;
}

CrossingReport crossing_count(std::size_t m, const std::vector<CurveSample>& sweep, std::size_t budget) {
  if (sweep.size() < 2) throw std::invalid_argument("crossing_count: sweep needs at least two samples");
  const double pi = std::numbers::pi;
  const double k = static_cast<double>(m + 1);

  // First make (m+1) theta steps small so arg f cannot alias, then hold
  // each step of arg f below pi/(2(m+3)).
  std::vector<CurveSample> fine = refine_sweep(
      sweep, [](const RootQuartet& q) { return q.theta; }, std::min(pi / 2, pi / (4 * k)), budget);
  const auto monitor = [m](const RootQuartet& q) { return arg_f(m, q); };
  fine = refine_sweep(std::move(fine), monitor, pi / (2 * (static_cast<double>(m) + 3)), budget);

  CrossingReport report;
  report.m = m;
  report.samples = fine.size();

  std::vector<double> phase(fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i) phase[i] = monitor(fine[i].quartet);
  for (std::size_t i = 1; i < fine.size(); ++i) report.delta_arg_f += wrap_angle(phase[i] - phase[i - 1]);

  const IntPoly pm = pseq(m).back();
  auto im_sign = [](double a) { return std::sin(a) >= 0 ? 1 : -1; };
  for (std::size_t i = 1; i < fine.size(); ++i) {
    if (im_sign(phase[i - 1]) == im_sign(phase[i])) continue;
    // Bisect in u for the point where f is real.
    double u_a = fine[i - 1].u;
    double u_b = fine[i].u;
    double z_a = fine[i - 1].z;
    double z_b = fine[i].z;
    const int s_a = im_sign(phase[i - 1]);
    for (int it = 0; it < 60; ++it) {
      const double u_mid = 0.5 * (u_a + u_b);
      const double z_mid = z_from_u(u_mid);
      if (!(z_mid > z_a && z_mid < z_b)) break;
      if (im_sign(monitor(solve_quartet(z_mid))) == s_a) {
        u_a = u_mid;
        z_a = z_mid;
      } else {
        u_b = u_mid;
        z_b = z_mid;
      }
    }
    Crossing c;
    c.z = z_b;
    c.re_sign = std::cos(monitor(solve_quartet(z_b))) >= 0 ? 1 : -1;
    c.exact_sign = -sign_at(pm, Bound(Rational(z_b)));
    report.signs_agree = report.signs_agree && c.agrees();
    report.crossings.push_back(c);
  }
  for (std::size_t i = 1; i < report.crossings.size(); ++i)
    if (report.crossings[i].re_sign != report.crossings[i - 1].re_sign) ++report.count;
  return report;
}

LocusReport certify_quartic_family(const IntPoly& p, std::size_t m) {
  LocusReport r;
  r.family = "P";
  r.m = m;
  r.degree = p.degree();
  if (p.is_zero()) return r;
  const Bound c(critical_point());
  const SturmChain chain(p);
  const bool zero_at_c = sign_at(p, c) == 0;
  r.endpoint_nonzero = !zero_at_c;
  r.roots_in_interval = chain.count(Bound::neg_inf(), c) - (zero_at_c ? 1 : 0);
  r.roots_elsewhere = chain.count(c, Bound::pos_inf()) + (zero_at_c ? 1 : 0);
  r.pass_degree_bound = r.degree <= static_cast<int>(m / 2);
  r.pass_location = r.roots_elsewhere == 0 && r.roots_in_interval == r.degree;
  return r;
}

std::vector<LocusReport> certify_pseq_zeros(std::size_t m_max) {
  const std::vector<IntPoly> seq = pseq(m_max);
  std::vector<LocusReport> out(seq.size());
  detail::parallel_for(seq.size(), [&](std::size_t m) { out[m] = certify_quartic_family(seq[m], m); });
  return out;
}

std::vector<LocusReport> conjecture_scan(const std::vector<Rational>& alphas, std::size_t m_max) {
  for (const auto& a : alphas)
    if (sgn(a) <= 0) throw std::invalid_argument("conjecture_scan: alpha must be positive");
  std::vector<LocusReport> out(alphas.size() * (m_max + 1));
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const AlphaSeries s = alpha_coeffs(alphas[i], m_max);
    detail::parallel_for(m_max + 1, [&](std::size_t m) {
      LocusReport r = certify_quartic_family(clear_denominators(s.coeffs[m]), m);
      r.family = "alpha";
      r.alpha = alphas[i];
      out[i * (m_max + 1) + m] = std::move(r);
    });
  }
  return out;
}

std::vector<LocusReport> rook_zero_check(std::size_t m_max) {
  const PolyTable rook = build_table(TableKind::Rook, m_max, m_max);
  const std::vector<IntPoly> diag = diagonal(rook, m_max);
  std::vector<LocusReport> out(diag.size());
  const Bound c(Rational(-4));
  detail::parallel_for(diag.size(), [&](std::size_t m) {
    const IntPoly& p = diag[m];
    LocusReport r;
    r.family = "rook-diagonal";
    r.m = m;
    r.degree = p.degree();
    const SturmChain chain(p);
    r.roots_in_interval = chain.count(Bound::neg_inf(), c);
    r.roots_elsewhere = chain.count(c, Bound::pos_inf());
    r.endpoint_nonzero = sign_at(p, c) != 0;
    r.pass_degree_bound = r.degree == static_cast<int>(m);
    r.pass_location = r.roots_elsewhere == 0 && r.roots_in_interval == r.degree;
    out[m] = std::move(r);
  });
  return out;
}

}  // namespace queenpoly
