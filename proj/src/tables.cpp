#include "queenpoly/tables.hpp"

#include <stdexcept>

namespace queenpoly {

const char* to_string(TableKind kind) { return kind == TableKind::Rook ? "rook" : "queen"; }

const IntPoly& PolyTable::at(long m, long n) const {
  static const IntPoly zero;
  if (m < 0 || n < 0) return zero;
  const auto um = static_cast<std::size_t>(m);
  const auto un = static_cast<std::size_t>(n);
  if (um >= rows || un >= cols) return zero;
  return entries[um * cols + un];
}

PolyTable build_table(TableKind kind, std::size_t M, std::size_t N) {
  PolyTable t;
  t.kind = kind;
  t.rows = M + 1;
  t.cols = N + 1;
  t.entries.assign(t.rows * t.cols, IntPoly());
  const IntPoly z = IntPoly::variable();
  const Integer two = 2;
  const Integer three = 3;
  for (long m = 0; m <= static_cast<long>(M); ++m) {
    for (long n = 0; n <= static_cast<long>(N); ++n) {
      IntPoly v;
      if (m == 0 && n == 0) {
        v = IntPoly{1};
      } else if (kind == TableKind::Rook) {
        v = two * t.at(m - 1, n) + two * t.at(m, n - 1) + z * t.at(m - 1, n - 1);
      } else {
        v = two * t.at(m - 1, n) + two * t.at(m, n - 1) - t.at(m - 1, n - 1) -
            three * t.at(m - 2, n - 1) - three * t.at(m - 1, n - 2) + z * t.at(m - 2, n - 2);
      }
      t.mutable_at(static_cast<std::size_t>(m), static_cast<std::size_t>(n)) = std::move(v);
    }
  }
  return t;
}

BivariateTruncation operator*(const BivariateTruncation& a, const BivariateTruncation& b) {
  const std::size_t order = std::min(a.maxdeg, b.maxdeg);
  BivariateTruncation out(order);
  for (std::size_t i1 = 0; i1 <= order; ++i1)
    for (std::size_t j1 = 0; j1 <= order; ++j1) {
      const IntPoly& x = a.coeffs[i1][j1];
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i1 + i2 <= order; ++i2)
        for (std::size_t j2 = 0; j1 + j2 <= order; ++j2) {
          const IntPoly& y = b.coeffs[i2][j2];
          if (y.is_zero()) continue;
          out.coeffs[i1 + i2][j1 + j2] += x * y;
        }
    }
  return out;
}

BivariateTruncation gf_denominator(TableKind kind, std::size_t order) {
  BivariateTruncation d(order);
  auto put = [&](std::size_t i, std::size_t j, IntPoly c) {
    if (i <= order && j <= order) d.coeffs[i][j] = std::move(c);
  };
  const IntPoly z = IntPoly::variable();
  put(0, 0, IntPoly{1});
  put(1, 0, IntPoly{-2});
  put(0, 1, IntPoly{-2});
  if (kind == TableKind::Rook) {
    // 1 - 2s - 2t - z s t
    put(1, 1, -z);
  } else {
    // 1 - 2(s + t + st) + 3(st + s^2 t + s t^2) - z s^2 t^2
    put(1, 1, IntPoly{1});
    put(2, 1, IntPoly{3});
    put(1, 2, IntPoly{3});
    put(2, 2, -z);
  }
  return d;
}

GfCheck gf_check(const PolyTable& table, std::size_t order) {
  if (order >= table.rows || order >= table.cols)
    throw std::invalid_argument("gf_check: order exceeds table size");
  BivariateTruncation series(order);
  for (std::size_t m = 0; m <= order; ++m)
    for (std::size_t n = 0; n <= order; ++n)
      series.coeffs[m][n] = table.at(static_cast<long>(m), static_cast<long>(n));
  const BivariateTruncation product = gf_denominator(table.kind, order) * series;
  GfCheck result;
  const IntPoly one{1};
  for (std::size_t m = 0; m <= order && result.ok; ++m)
    for (std::size_t n = 0; n <= order; ++n) {
      const IntPoly& want = (m == 0 && n == 0) ? one : IntPoly();
      if (product.coeffs[m][n] != want) {
        result.ok = false;
        result.first_bad = {m, n};
        break;
      }
    }
  return result;
}

std::vector<IntPoly> diagonal(const PolyTable& table, std::size_t M) {
  if (M >= table.rows || M >= table.cols) throw std::invalid_argument("diagonal: table too small");
  std::vector<IntPoly> out;
  out.reserve(M + 1);
  for (std::size_t m = 0; m <= M; ++m) out.push_back(table.at(static_cast<long>(m), static_cast<long>(m)));
  return out;
}

RatPoly legendre(std::size_t m) {
  const RatPoly x = RatPoly::variable();
  RatPoly prev{1};
  if (m == 0) return prev;
  RatPoly cur = x;
  // (k+1) L_{k+1} = (2k+1) x L_k - k L_{k-1}
  for (std::size_t k = 1; k < m; ++k) {
    const Rational a(static_cast<long>(2 * k + 1), static_cast<long>(k + 1));
    const Rational b(static_cast<long>(k), static_cast<long>(k + 1));
    RatPoly next = a * (x * cur) - b * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatPoly rook_legendre_form(std::size_t m) {
  // L_m(w) = sum c_k w^k with w = (8 + z)/z, so z^m L_m(w) = sum c_k (8+z)^k z^(m-k).
  const RatPoly lm = legendre(m);
  const RatPoly shifted{8, 1};
  RatPoly out;
  RatPoly pow_shifted{1};
  for (std::size_t k = 0; k <= m; ++k) {
    const Rational c = lm[k];
    if (sgn(c) != 0) out += c * pow_shifted.shift(m - k);
    pow_shifted *= shifted;
  }
  return out;
}

bool rook_diagonal_identity_check(const PolyTable& rook, std::size_t m) {
  if (rook.kind != TableKind::Rook) throw std::invalid_argument("identity check needs the rook table");
  const IntPoly& diag = rook.at(static_cast<long>(m), static_cast<long>(m));
  const RatPoly form = rook_legendre_form(m);
  for (const auto& c : form.coeffs())
    if (c.get_den() != 1) return false;
  return to_rational(diag) == form;
}

bool rook_diagonal_identity_check(std::size_t m) {
  return rook_diagonal_identity_check(build_table(TableKind::Rook, m, m), m);
}

std::vector<std::vector<Integer>> evaluate_table(const PolyTable& table, const Integer& z) {
  std::vector<std::vector<Integer>> out(table.rows, std::vector<Integer>(table.cols));
  for (std::size_t m = 0; m < table.rows; ++m)
    for (std::size_t n = 0; n < table.cols; ++n)
      out[m][n] = table.at(static_cast<long>(m), static_cast<long>(n)).eval(z);
  return out;
}

}  // namespace queenpoly
