#pragma once

#include <cstddef>
#include <vector>

#include "queenpoly/poly.hpp"

namespace queenpoly {

/// D(t, z) = z^2 t^4 + (-2z - 36) t^3 + (49 - 2z) t^2 - 14 t + 1, as a
/// polynomial in t with integer-polynomial coefficients in z.
BiPoly quartic_denominator();

/// Coefficients of D(t, z)^(-alpha) in powers of t.
struct AlphaSeries {
  Rational alpha;
  std::vector<RatPoly> coeffs;  // coeffs[m] is the t^m coefficient
};

/// Series of D^(-alpha) through t^M from the relation D F' = -alpha D' F.
/// Throws std::invalid_argument unless alpha > 0.
AlphaSeries alpha_coeffs(const Rational& alpha, std::size_t M);

/// P_0..P_M from the linear recurrence
/// P_m = 14 P_{m-1} - (49 - 2z) P_{m-2} + (2z + 36) P_{m-3} - z^2 P_{m-4}.
std::vector<IntPoly> pseq(std::size_t M);

/// True iff deg seq[m] <= floor(m/2) for every m.
template <class R>
bool degree_check(const std::vector<Poly<R>>& seq) {
  for (std::size_t m = 0; m < seq.size(); ++m)
    if (seq[m].degree() > static_cast<int>(m / 2)) return false;
  return true;
}

}  // namespace queenpoly
