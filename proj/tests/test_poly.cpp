#include <doctest.h>

#include <random>

#include "queenpoly/genfun.hpp"
#include "queenpoly/poly.hpp"

using namespace queenpoly;

namespace {

IntPoly random_int_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-50, 50);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial is canonical") {
  IntPoly p{0, 0, 0};
  CHECK(p.is_zero());
  CHECK(p.degree() == -1);
  CHECK(p == IntPoly());
  CHECK(IntPoly{1, 2, 0}.degree() == 1);
  CHECK_THROWS_AS(IntPoly().lead(), std::domain_error);
}

TEST_CASE("poly_mul examples") {
  const IntPoly z = IntPoly::variable();
  CHECK(IntPoly{1, 1} * IntPoly{1, -1} == IntPoly{1, 0, -1});
  CHECK(IntPoly{8, 1} * IntPoly{1} == IntPoly{8, 1});
  CHECK((IntPoly() * (z + IntPoly{3})).is_zero());

  // (9t^2 - 28t + 4)^2 / 16 is D(t, -9/4).
  const RatPoly q{4, -28, 9};
  const RatPoly lhs = Rational(1, 16) * (q * q);
  const BiPoly d = quartic_denominator();
  const RatPoly at_critical = d.map([](const IntPoly& c) { return c.eval(Rational(-9, 4)); });
  CHECK(lhs == at_critical);
}

TEST_CASE("poly_eval examples") {
  CHECK(IntPoly{8, 1}.eval(Integer(-3)) == 5);
  CHECK(to_rational(IntPoly{147, 2}).eval(Rational(-147, 2)) == 0);
  CHECK(IntPoly{147, 2}.eval(Rational(-147, 2)) == 0);

  const BiPoly d = quartic_denominator();
  const IntPoly at_minus3 = d.map([](const IntPoly& c) { return c.eval(Integer(-3)); });
  CHECK(at_minus3 == IntPoly{1, -14, 55, -30, 9});

  const auto v = IntPoly{1, 0, 1}.eval(std::complex<double>(0, 1));
  CHECK(std::abs(v) == doctest::Approx(0.0));
}

TEST_CASE("resultant examples") {
  // Res(t - c, t - d) = c - d for a couple of integer pairs.
  CHECK(resultant(IntPoly{-3, 1}, IntPoly{-7, 1}) == -4);
  CHECK(resultant(IntPoly{5, 1}, IntPoly{-2, 1}) == -7);
  CHECK(resultant(IntPoly{-1, 0, 1}, IntPoly{-4, 0, 1}) == 9);
  CHECK_THROWS_AS(resultant(IntPoly(), IntPoly{1, 1}), std::domain_error);

  // Symbolic: Res_t(t - c, t - d) with c = z, d = 2 gives z - 2.
  const BiPoly a{IntPoly{0, -1}, IntPoly{1}};
  const BiPoly b{IntPoly{-2}, IntPoly{1}};
  CHECK(resultant(a, b) == IntPoly{-2, 1});
}

TEST_CASE("resultant agrees with the product formula on constructed roots") {
  // a = prod (t - a_i), b = prod (t - b_j): Res = prod (a_i - b_j)
  const std::vector<long> ra{1, -2, 5};
  const std::vector<long> rb{3, 0, -1, 4};
  IntPoly a{1};
  IntPoly b{1};
  Integer expected = 1;
  for (long x : ra) a *= IntPoly{-x, 1};
  for (long y : rb) b *= IntPoly{-y, 1};
  for (long x : ra)
    for (long y : rb) expected *= (x - y);
  CHECK(resultant(a, b) == expected);
  // Swapping arguments introduces (-1)^(deg a * deg b).
  CHECK(resultant(b, a) == expected);
  CHECK(resultant(IntPoly{-1, 1}, IntPoly{7}) == 7);
  CHECK(resultant(IntPoly{0, 0, 1}, IntPoly{3}) == 9);
}

TEST_CASE("discriminant examples") {
  // b^2 - 4c for t^2 + 3t - 5
  CHECK(discriminant(IntPoly{-5, 3, 1}) == 9 + 20);
  CHECK(discriminant(IntPoly{1, -2, 1}) == 0);
  CHECK_THROWS_AS(discriminant(IntPoly{7}), std::domain_error);

  const IntPoly expected = Integer(-256) * IntPoly{-4, 1} * IntPoly{-15, 4} * IntPoly{-15, 4} *
                           IntPoly{9, 4} * IntPoly{9, 4};
  CHECK(discriminant(quartic_denominator()) == expected);
  CHECK(expected == IntPoly{18662400, 1969920, -5492736, 172032, 458752, -65536});
}

TEST_CASE("ring axioms hold exactly for random integer polynomials") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly a = random_int_poly(rng, 8);
    const IntPoly b = random_int_poly(rng, 8);
    const IntPoly c = random_int_poly(rng, 8);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    if (!b.is_zero()) CHECK(RingTraits<IntPoly>::divexact(a * b, b) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism at rational points") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const RatPoly a = to_rational(random_int_poly(rng, 8));
    const RatPoly b = to_rational(random_int_poly(rng, 8));
    Rational x(num(rng), den(rng));
    x.canonicalize();
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
  }
}

TEST_CASE("discriminant vanishes exactly when a multiple root is present") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> root(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly p{1};
    const int n = 2 + trial % 4;
    for (int i = 0; i < n; ++i) p *= IntPoly{-root(rng), 1};
    const bool repeated = gcd(p, p.derivative()).degree() > 0;
    CHECK((discriminant(p) == 0) == repeated);
    // Force a repeated factor.
    const IntPoly sq = p * IntPoly{-root(rng), 1};
    const IntPoly forced = sq * IntPoly{-sq.degree(), 1} * IntPoly{-sq.degree(), 1};
    CHECK(discriminant(forced) == 0);
  }
  // Irreducible-looking quadratic without repeated roots.
  CHECK(discriminant(IntPoly{1, 1, 1}) == -3);
}

TEST_CASE("pseudo-remainder identity") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPoly a = random_int_poly(rng, 8);
    const IntPoly b = random_int_poly(rng, 5);
    if (b.is_zero() || a.degree() < b.degree()) continue;
    const IntPoly r = pseudo_remainder(a, b);
    CHECK(r.degree() < b.degree());
    // lead(b)^(da-db+1) a - r must be divisible by b.
    const Integer scale = power(b.lead(), static_cast<std::size_t>(a.degree() - b.degree() + 1));
    CHECK_NOTHROW(RingTraits<IntPoly>::divexact(scale * a - r, b));
  }
}

TEST_CASE("gcd, squarefree part and denominator clearing") {
  const IntPoly f = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1};
  CHECK(gcd(f, f.derivative()) == IntPoly{-1, 1});
  CHECK(squarefree_part(f) == IntPoly{-1, 1} * IntPoly{2, 1});
  CHECK(squarefree_part(-f) == -(IntPoly{-1, 1} * IntPoly{2, 1}));
  CHECK(gcd(to_rational(f), to_rational(IntPoly{2, 1})) == RatPoly{2, 1});

  const RatPoly q{Rational(1, 2), Rational(-3, 4), Rational(5, 6)};
  CHECK(clear_denominators(q) == IntPoly{6, -9, 10});
  CHECK(primitive_part(IntPoly{-4, 8, 12}) == IntPoly{-1, 2, 3});
}

TEST_CASE("to_string renders descending terms") {
  CHECK(to_string(IntPoly{1408, 58}) == "58z+1408");
  CHECK(to_string(IntPoly{147, 2}) == "2z+147");
  CHECK(to_string(IntPoly{0, -1, 1}) == "z^2-z");
  CHECK(to_string(IntPoly()) == "0");
  CHECK(to_string(RatPoly{Rational(-1, 2), 0, Rational(3, 2)}) == "(3/2)z^2-1/2");
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("3") == 3);
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational(""));
}
