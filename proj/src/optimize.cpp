#include "levyopt/optimize.hpp"

#include <cmath>
#include <limits>

#include "levyopt/errors.hpp"
#include "levyopt/objective.hpp"

namespace levyopt {

namespace {

struct DerivativeProbe {
  const std::function<double(double)>& fprime;
  int evaluations = 0;
  double operator()(double x) {
    ++evaluations;
    return fprime(x);
  }
};

}  // namespace

OptResult maximize_concave_1d(const std::function<double(double)>& f,
                              const std::function<double(double)>& fprime,
                              const AdmissibleInterval& interval,
                              const SolverOptions& options) {
  DerivativeProbe deriv{fprime};
  const double lo = interval.lower;
  const double hi = interval.upper;

  // A closed endpoint is optimal iff the derivative there points outward.
  if (std::isfinite(lo) && interval.lower_closed) {
    const double d = deriv(lo);
    if (d <= 0.0) return {lo, f(lo), Boundary::lower, std::abs(d), deriv.evaluations};
  }
  if (std::isfinite(hi) && interval.upper_closed) {
    const double d = deriv(hi);
    if (d >= 0.0) return {hi, f(hi), Boundary::upper, std::abs(d), deriv.evaluations};
  }

  // Bracket a sign change: a with f'(a) > 0, b with f'(b) < 0, a < b.
  // Closed endpoints already qualify by the checks above. Open finite
  // endpoints are approached through lo + w/2^k (resp. hi - w/2^k), infinite
  // sides through -2^k (resp. +2^k).
  double a = 0.0, b = 0.0;
  bool have_a = false, have_b = false;
  if (std::isfinite(lo) && interval.lower_closed) {
    a = lo;
    have_a = true;
  }
  if (std::isfinite(hi) && interval.upper_closed) {
    b = hi;
    have_b = true;
  }

  const double width = (std::isfinite(lo) && std::isfinite(hi)) ? 0.5 * (hi - lo) : 1.0;
  const int max_steps = std::isfinite(lo) && std::isfinite(hi) ? 1100 : options.max_expansions;

  if (!have_a) {
    for (int k = 0; k <= max_steps && !have_a; ++k) {
      const double x = std::isfinite(lo) ? lo + width * std::ldexp(1.0, -k)
                                         : -std::ldexp(1.0, k);
      if (std::isfinite(lo) && !(x > lo)) break;  // no representable interior point left
      const double d = deriv(x);
      if (std::abs(d) <= options.derivative_tol)
        return {x, f(x), Boundary::interior, std::abs(d), deriv.evaluations};
      if (d > 0.0) {
        a = x;
        have_a = true;
      } else if (!have_b || x < b) {
        b = x;  // still useful: the tightest upper bracket seen so far
        have_b = true;
      }
    }
    if (!have_a) {
      if (!std::isfinite(lo))
        throw UnboundedProblemError(
            "no maximizer: the derivative stays negative arbitrarily far down");
      // Open endpoint pressed to double resolution; report the closest
      // representable point (cannot happen when f' blows up at the endpoint).
      const double x = std::nextafter(lo, hi);
      const double d = deriv(x);
      return {x, f(x), Boundary::interior, std::abs(d), deriv.evaluations};
    }
  }

  if (!have_b) {
    for (int k = 0; k <= max_steps && !have_b; ++k) {
      const double x = std::isfinite(hi) ? hi - width * std::ldexp(1.0, -k)
                                         : std::ldexp(1.0, k);
      if (std::isfinite(hi) && !(x < hi)) break;
      if (have_a && !(x > a)) continue;  // probe fell at or below the lower bracket
      const double d = deriv(x);
      if (std::abs(d) <= options.derivative_tol)
        return {x, f(x), Boundary::interior, std::abs(d), deriv.evaluations};
      if (d < 0.0) {
        b = x;
        have_b = true;
      } else if (x > a) {
        a = x;
      }
    }
    if (!have_b) {
      if (!std::isfinite(hi))
        throw UnboundedProblemError(
            "no maximizer: the derivative stays positive arbitrarily far up");
      const double x = std::nextafter(hi, lo);
      const double d = deriv(x);
      return {x, f(x), Boundary::interior, std::abs(d), deriv.evaluations};
    }
  }

  // Bisection on the derivative sign; invariant f'(a) > 0 > f'(b). The width
  // tolerance follows the shrinking bracket so huge initial brackets from the
  // doubling phase do not inflate it.
  auto width_tol = [&] { return options.bracket_tol * std::max({1.0, std::abs(a), std::abs(b)}); };
  for (int iter = 0; iter < options.max_iterations && b - a > width_tol(); ++iter) {
    const double m = 0.5 * (a + b);
    if (!(m > a && m < b)) break;  // bracket exhausted at double resolution
    const double d = deriv(m);
    if (std::abs(d) <= options.derivative_tol)
      return {m, f(m), Boundary::interior, std::abs(d), deriv.evaluations};
    (d > 0.0 ? a : b) = m;
  }
  const double m = 0.5 * (a + b);
  const double d = deriv(m);
  return {m, f(m), Boundary::interior, std::abs(d), deriv.evaluations};
}

OptResult optimal_continuous(const MarketModel& model, Constraint constraint) {
  const AdmissibleInterval interval = constraint == Constraint::unit_interval
                                          ? AdmissibleInterval::unit_interval()
                                          : admissible_set(model.triplet, model.utility);
  return maximize_concave_1d([&model](double pi) { return eval_g(model, pi).value; },
                             [&model](double pi) { return eval_g_prime(model, pi); },
                             interval);
}

}  // namespace levyopt
