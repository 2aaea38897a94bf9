#include "levyopt/objective.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace levyopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void throw_outside(const char* what, double pi, const AdmissibleInterval& interval) {
  std::ostringstream message;
  message << what << ": pi = " << pi << " is outside the admissible closure ["
          << interval.lower << ", " << interval.upper << "]";
  throw std::domain_error(message.str());
}

}  // namespace

ObjectiveValue eval_g(const MarketModel& model, double pi) {
  const AdmissibleInterval interval = admissible_set(model.triplet, model.utility);
  if (!interval.closure_contains(pi)) throw_outside("eval_g", pi, interval);

  const double p = model.utility.relative_risk_aversion;
  const LevyTriplet& triplet = model.triplet;
  double value = pi * triplet.drift - 0.5 * p * pi * pi * triplet.diffusion;
  for (const auto& atom : triplet.atoms) {
    const double w = pi * atom.size;  // 1 + w >= 0 on the closure
    double term;
    if (w <= -1.0) {
      // Endpoint hit (up to rounding): the utility summand collapses to its
      // limit, finite for p < 1 and -inf otherwise.
      term = p < 1.0 ? -1.0 / (1.0 - p) - w : -kInf;
    } else if (model.utility.is_log()) {
      term = std::log1p(w) - w;
    } else {
      term = std::expm1((1.0 - p) * std::log1p(w)) / (1.0 - p) - w;
    }
    value += atom.intensity * term;
  }
  return {value, std::isfinite(value)};
}

double eval_g_prime(const MarketModel& model, double pi) {
  const AdmissibleInterval interval = admissible_set(model.triplet, model.utility);
  if (!interval.closure_contains(pi)) throw_outside("eval_g_prime", pi, interval);
  if (!interval.lower_closed && pi <= interval.lower && std::isfinite(interval.lower))
    throw_outside("eval_g_prime (open endpoint)", pi, interval);
  if (!interval.upper_closed && pi >= interval.upper && std::isfinite(interval.upper))
    throw_outside("eval_g_prime (open endpoint)", pi, interval);

  const double p = model.utility.relative_risk_aversion;
  const LevyTriplet& triplet = model.triplet;
  double value = triplet.drift - p * pi * triplet.diffusion;
  for (const auto& atom : triplet.atoms) {
    const double w = pi * atom.size;
    if (w <= -1.0) {
      // Closed endpoint for p < 1: (1 + w)^(-p) blows up with the sign of x.
      value += atom.size > 0.0 ? kInf : -kInf;
    } else {
      value += atom.intensity * atom.size * std::expm1(-p * std::log1p(w));
    }
  }
  return value;
}

double expected_terminal_utility(const MarketModel& model, double pi) {
  const double g = eval_g(model, pi).value;
  const double T = model.horizon;
  const double x0 = model.initial_wealth;
  const double p = model.utility.relative_risk_aversion;
  if (model.utility.is_log()) return std::log(x0) + g * T;
  return std::pow(x0, 1.0 - p) * std::exp((1.0 - p) * g * T) / (1.0 - p);
}

}  // namespace levyopt
