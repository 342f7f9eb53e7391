#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "queenpoly/poly.hpp"

namespace queenpoly {

enum class TableKind { Rook, Queen };

const char* to_string(TableKind kind);

/// (M+1) x (N+1) grid of integer polynomials in z built from the rook or
/// queen recurrence. Entry (0,0) is 1; negative indices read as 0.
struct PolyTable {
  TableKind kind = TableKind::Rook;
  std::size_t rows = 0;  // M + 1
  std::size_t cols = 0;  // N + 1
  std::vector<IntPoly> entries;

  /// Entry (m, n), or the zero polynomial for negative or out-of-range indices.
  const IntPoly& at(long m, long n) const;
  IntPoly& mutable_at(std::size_t m, std::size_t n) { return entries[m * cols + n]; }
};

PolyTable build_table(TableKind kind, std::size_t M, std::size_t N);

/// Coefficients c[i][j] of s^i t^j, each an integer polynomial in z,
/// truncated to i, j <= maxdeg.
struct BivariateTruncation {
  std::size_t maxdeg = 0;
  std::vector<std::vector<IntPoly>> coeffs;

  explicit BivariateTruncation(std::size_t order)
      : maxdeg(order), coeffs(order + 1, std::vector<IntPoly>(order + 1)) {}

  friend BivariateTruncation operator*(const BivariateTruncation& a, const BivariateTruncation& b);
};

/// Denominator of the table's generating function in s, t (and z).
BivariateTruncation gf_denominator(TableKind kind, std::size_t order);

struct GfCheck {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> first_bad;
  explicit operator bool() const { return ok; }
};

/// Multiplies the truncated table series by its denominator and checks the
/// product is exactly 1 through the given order in both s and t.
GfCheck gf_check(const PolyTable& table, std::size_t order);

std::vector<IntPoly> diagonal(const PolyTable& table, std::size_t M);

/// Legendre polynomial L_m over Q from the three-term recurrence.
RatPoly legendre(std::size_t m);

/// z^m L_m(8/z + 1) expanded as a polynomial in z.
RatPoly rook_legendre_form(std::size_t m);

/// Exact comparison of P_{m,m}(z) with z^m L_m(8/z + 1).
bool rook_diagonal_identity_check(std::size_t m);
bool rook_diagonal_identity_check(const PolyTable& rook, std::size_t m);

/// Integer table obtained by evaluating every entry at z (e.g. z = -3 for the
/// rook recurrence, z = 4 for the queen recurrence).
std::vector<std::vector<Integer>> evaluate_table(const PolyTable& table, const Integer& z);

}  // namespace queenpoly
