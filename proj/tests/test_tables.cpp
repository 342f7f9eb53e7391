#include <doctest.h>

#include "queenpoly/tables.hpp"

using namespace queenpoly;

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Closed-form oracle: L_n(x) = 2^-n sum_k C(n,k)^2 (x-1)^(n-k) (x+1)^k.
RatPoly legendre_closed_form(unsigned n) {
  RatPoly sum;
  for (unsigned k = 0; k <= n; ++k) {
    RatPoly term{Rational(binomial(n, k) * binomial(n, k))};
    for (unsigned i = 0; i < n - k; ++i) term *= RatPoly{-1, 1};
    for (unsigned i = 0; i < k; ++i) term *= RatPoly{1, 1};
    sum += term;
  }
  Rational scale(1);
  scale /= Rational(power(Integer(2), n));
  return scale * sum;
}

}  // namespace

TEST_CASE("rook table entries") {
  const PolyTable t = build_table(TableKind::Rook, 4, 4);
  CHECK(t.at(0, 0) == IntPoly{1});
  CHECK(t.at(0, 1) == IntPoly{2});
  CHECK(t.at(1, 0) == IntPoly{2});
  CHECK(t.at(1, 1) == IntPoly{8, 1});
  CHECK(t.at(-1, 2).is_zero());
  CHECK(t.at(2, -3).is_zero());
  CHECK(t.at(9, 0).is_zero());
}

TEST_CASE("queen table entries") {
  const PolyTable t = build_table(TableKind::Queen, 4, 4);
  CHECK(t.at(0, 0) == IntPoly{1});
  CHECK(t.at(1, 1) == IntPoly{7});
  CHECK(t.at(2, 2) == IntPoly{49, 1});
}

TEST_CASE("every entry satisfies its recurrence when re-checked") {
  const IntPoly z = IntPoly::variable();
  for (TableKind kind : {TableKind::Rook, TableKind::Queen}) {
    const PolyTable t = build_table(kind, 9, 7);
    for (long m = 0; m <= 9; ++m)
      for (long n = 0; n <= 7; ++n) {
        if (m == 0 && n == 0) continue;
        IntPoly rhs;
        if (kind == TableKind::Rook)
          rhs = Integer(2) * t.at(m - 1, n) + Integer(2) * t.at(m, n - 1) + z * t.at(m - 1, n - 1);
        else
          rhs = Integer(2) * t.at(m - 1, n) + Integer(2) * t.at(m, n - 1) - t.at(m - 1, n - 1) -
                Integer(3) * t.at(m - 2, n - 1) - Integer(3) * t.at(m - 1, n - 2) + z * t.at(m - 2, n - 2);
        CHECK(t.at(m, n) == rhs);
      }
  }
}

TEST_CASE("generating function check") {
  const PolyTable rook = build_table(TableKind::Rook, 10, 10);
  const PolyTable queen = build_table(TableKind::Queen, 10, 10);
  CHECK(gf_check(rook, 8).ok);
  CHECK(gf_check(queen, 8).ok);
  CHECK(gf_check(rook, 0).ok);
  CHECK(gf_check(queen, 0).ok);
  CHECK(gf_check(rook, 10).ok);
  CHECK(gf_check(queen, 10).ok);
  CHECK_THROWS_AS(gf_check(rook, 11), std::invalid_argument);
}

TEST_CASE("generating function check detects corruption") {
  for (TableKind kind : {TableKind::Rook, TableKind::Queen}) {
    PolyTable t = build_table(kind, 8, 8);
    t.mutable_at(3, 2) += IntPoly{1};
    const GfCheck r = gf_check(t, 8);
    CHECK_FALSE(r.ok);
    REQUIRE(r.first_bad.has_value());
    CHECK(r.first_bad->first == 3);
    CHECK(r.first_bad->second == 2);
    // Below the corrupted entry the identity still holds.
    CHECK(gf_check(t, 2).ok);
  }
}

TEST_CASE("diagonal") {
  const PolyTable queen = build_table(TableKind::Queen, 5, 5);
  const PolyTable rook = build_table(TableKind::Rook, 5, 5);
  const auto qd = diagonal(queen, 5);
  REQUIRE(qd.size() == 6);
  CHECK(qd[0] == IntPoly{1});
  CHECK(qd[2] == IntPoly{49, 1});
  CHECK(diagonal(rook, 1)[1] == IntPoly{8, 1});
  CHECK_THROWS(diagonal(rook, 6));
}

TEST_CASE("symmetry and degrees") {
  const std::size_t M = 10;
  const PolyTable rook = build_table(TableKind::Rook, M, M);
  const PolyTable queen = build_table(TableKind::Queen, M, M);
  for (long m = 0; m <= static_cast<long>(M); ++m)
    for (long n = 0; n <= static_cast<long>(M); ++n) {
      CHECK(rook.at(m, n) == rook.at(n, m));
      CHECK(queen.at(m, n) == queen.at(n, m));
      CHECK(rook.at(m, n).degree() == std::min(m, n));
    }
  for (long m = 0; m <= static_cast<long>(M); ++m) CHECK(queen.at(m, m).degree() <= m / 2);
}

TEST_CASE("legendre polynomials") {
  CHECK(legendre(0) == RatPoly{1});
  CHECK(legendre(1) == RatPoly{0, 1});
  CHECK(legendre(2) == RatPoly{Rational(-1, 2), 0, Rational(3, 2)});
  for (std::size_t m = 0; m <= 20; ++m) CHECK(legendre(m).eval(Rational(1)) == 1);
  for (unsigned m = 0; m <= 15; ++m) CHECK(legendre(m) == legendre_closed_form(m));
}

TEST_CASE("rook diagonal equals z^m L_m(8/z + 1)") {
  CHECK(rook_legendre_form(1) == RatPoly{8, 1});
  CHECK(rook_legendre_form(3) == RatPoly{1280, 480, 48, 1});
  const PolyTable rook = build_table(TableKind::Rook, 20, 20);
  for (std::size_t m = 0; m <= 20; ++m) CHECK(rook_diagonal_identity_check(rook, m));
  CHECK(rook_diagonal_identity_check(std::size_t{4}));
  CHECK_THROWS(rook_diagonal_identity_check(build_table(TableKind::Queen, 2, 2), 1));

  PolyTable broken = rook;
  broken.mutable_at(5, 5) += IntPoly{0, 1};
  CHECK_FALSE(rook_diagonal_identity_check(broken, 5));
}

TEST_CASE("integer tables from evaluation") {
  const auto a = evaluate_table(build_table(TableKind::Rook, 3, 3), Integer(-3));
  CHECK(a[0][0] == 1);
  CHECK(a[0][1] == 2);  // recurrence value, not the single-move path count
  CHECK(a[1][1] == 5);
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) CHECK(a[m][n] == 2 * a[m - 1][n] + 2 * a[m][n - 1] - 3 * a[m - 1][n - 1]);

  const auto b = evaluate_table(build_table(TableKind::Queen, 2, 2), Integer(4));
  CHECK(b[1][1] == 7);
  CHECK(b[2][2] == 53);
}
