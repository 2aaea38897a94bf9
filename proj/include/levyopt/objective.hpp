#pragma once

#include "levyopt/model.hpp"

namespace levyopt {

struct ObjectiveValue {
  double value = 0.0;
  bool finite = true;  // false when the value is -inf at a closed endpoint
};

// Concave criterion g whose maximizer is the optimal constant strategy:
//   g(pi) = pi b - p pi^2 c / 2
//           + sum_i lambda_i [((1 + pi x_i)^(1-p) - 1)/(1-p) - pi x_i]
// with the i-summand read as lambda_i [log(1 + pi x_i) - pi x_i] when p = 1.
// pi must lie in the closure of the admissible set; at a closed endpoint the
// value may be -inf (p = 1) or finite (p < 1).
ObjectiveValue eval_g(const MarketModel& model, double pi);

// g'(pi) = b - p pi c + sum_i lambda_i x_i [(1 + pi x_i)^(-p) - 1].
// Defined on the closure minus open endpoints; closed endpoints where an atom
// hits 1 + pi x = 0 give +-inf of the expected sign.
double eval_g_prime(const MarketModel& model, double pi);

// Expected terminal utility of the constant strategy pi held on [0, T]:
//   x0^(1-p) exp((1-p) g(pi) T) / (1-p),   or   log x0 + g(pi) T  for p = 1.
double expected_terminal_utility(const MarketModel& model, double pi);

}  // namespace levyopt
