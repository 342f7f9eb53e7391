#include "queenpoly/genfun.hpp"

#include <array>
#include <stdexcept>

namespace queenpoly {

BiPoly quartic_denominator() {
  return BiPoly{IntPoly{1}, IntPoly{-14}, IntPoly{49, -2}, IntPoly{-36, -2}, IntPoly{0, 0, 1}};
}

AlphaSeries alpha_coeffs(const Rational& alpha, std::size_t M) {
  if (sgn(alpha) <= 0) throw std::invalid_argument("alpha_coeffs: alpha must be positive");
  const BiPoly d = quartic_denominator();
  std::array<RatPoly, 5> dk;
  for (std::size_t k = 0; k < 5; ++k) dk[k] = to_rational(d[k]);

  AlphaSeries s{alpha, {}};
  s.coeffs.reserve(M + 1);
  s.coeffs.push_back(RatPoly{1});
  // (n+1) c_{n+1} = -sum_{k=1..4} d_k ((n+1-k) + alpha k) c_{n+1-k}
  for (std::size_t n1 = 1; n1 <= M; ++n1) {
    RatPoly acc;
    for (std::size_t k = 1; k <= 4 && k <= n1; ++k) {
      const Rational w = Rational(static_cast<long>(n1 - k)) + alpha * static_cast<long>(k);
      acc += w * (dk[k] * s.coeffs[n1 - k]);
    }
    const Rational scale(-1, static_cast<long>(n1));
    s.coeffs.push_back(scale * acc);
  }
  return s;
}

std::vector<IntPoly> pseq(std::size_t M) {
  const BiPoly d = quartic_denominator();
  std::vector<IntPoly> p;
  p.reserve(M + 1);
  p.push_back(IntPoly{1});
  for (std::size_t m = 1; m <= M; ++m) {
    IntPoly acc;
    for (std::size_t k = 1; k <= 4 && k <= m; ++k) acc -= d[k] * p[m - k];
    p.push_back(std::move(acc));
  }
  return p;
}

}  // namespace queenpoly
