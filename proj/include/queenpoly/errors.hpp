#pragma once

#include <stdexcept>
#include <string>

namespace queenpoly {

/// z outside the open interval (-inf, -9/4) minus the guard band.
class RangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Roots of D(., z) did not split into two conjugate pairs with distinct moduli.
class PairingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two roots of D(., z) too close for the partial-fraction formulas.
class DegenerateRoots : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive sweep refinement needed more samples than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace queenpoly
