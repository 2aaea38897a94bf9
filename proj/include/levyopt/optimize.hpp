#pragma once

#include <functional>

#include "levyopt/model.hpp"

namespace levyopt {

enum class Boundary { interior, lower, upper };

struct OptResult {
  double argmax = 0.0;
  double value = 0.0;
  Boundary boundary = Boundary::interior;
  // |f'(argmax)| for interior solutions; the one-sided derivative magnitude
  // at a boundary solution.
  double derivative_residual = 0.0;
  int iterations = 0;  // number of derivative evaluations
};

struct SolverOptions {
  double derivative_tol = 1e-10;
  double bracket_tol = 1e-12;
  int max_expansions = 60;    // doubling steps toward an infinite endpoint
  int max_iterations = 200;   // bisection steps
};

// Maximizes a concave function with non-increasing derivative fprime over an
// interval. Closed finite endpoints are checked by derivative sign first;
// open finite endpoints are approached geometrically and never evaluated;
// infinite sides are bracketed by doubling. Throws UnboundedProblemError when
// no sign change exists toward an infinite side.
OptResult maximize_concave_1d(const std::function<double(double)>& f,
                              const std::function<double(double)>& fprime,
                              const AdmissibleInterval& interval,
                              const SolverOptions& options = {});

enum class Constraint { unconstrained, unit_interval };

// Optimal constant strategy for the continuous-time problem, either over the
// full admissible set or restricted to [0, 1].
OptResult optimal_continuous(const MarketModel& model, Constraint constraint);

}  // namespace levyopt
