#pragma once

#include <cmath>

#include "levyopt/model.hpp"

namespace levyopt::testing {

// Black-Scholes special case: pi* = b / (p c) = 0.5, g(pi*) = 0.01.
inline MarketModel merton_model() {
  MarketModel model;
  model.triplet.drift = 0.04;
  model.triplet.diffusion = 0.04;
  model.horizon = 1.0;
  model.initial_wealth = 1.0;
  model.utility.relative_risk_aversion = 2.0;
  return model;
}

// Jump-diffusion with one downward and one upward atom; the admissible set
// is (-4, 5) and the optimum is interior.
inline MarketModel two_atom_model() {
  MarketModel model;
  model.triplet.drift = 0.05;
  model.triplet.diffusion = 0.01;
  model.triplet.atoms = {{-0.2, 1.0}, {0.25, 1.0}};
  model.horizon = 1.0;
  model.initial_wealth = 1.0;
  model.utility.relative_risk_aversion = 2.0;
  return model;
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace levyopt::testing
