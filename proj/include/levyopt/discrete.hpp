#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "levyopt/model.hpp"
#include "levyopt/optimize.hpp"
#include "levyopt/quadrature.hpp"
#include "levyopt/rng.hpp"

namespace levyopt {

struct McConfig {
  std::int64_t paths = 100'000;  // >= 2
  std::uint64_t seed = 0;
  bool antithetic = false;  // pair each path with its Gaussian sign flip
};

struct QuadConfig {
  int max_jumps = 0;   // floor for the jump-count truncation (tail bound may raise it)
  int gh_nodes = 64;   // Gauss-Hermite nodes for the diffusion part
};

using GnMethod = std::variant<McConfig, QuadConfig>;

enum class GnMethodTag { mc, quadrature };

struct GnValue {
  double value = 0.0;
  double std_error = 0.0;  // 0 for quadrature
  GnMethodTag method = GnMethodTag::quadrature;
  std::string note;  // diagnostics, e.g. a quadrature-to-MC fallback
};

// One exact draw of the log-return increment over dt: compensated drift plus
// Gaussian part plus compound-Poisson jumps, so that
// E[exp(u * increment)] = exp(kappa(u) dt) for every u.
double sample_log_increment(const LogTriplet& log, double dt, PathRng& rng);

// Evaluates the N-period criterion
//   gN(pi) = (N/T) E[((1 + pi (e^Y - 1))^(1-p) - 1)/(1-p)],  Y ~ log-return over T/N,
// and its pi-derivative on [0, 1]. One evaluator materializes its sample set
// (or quadrature scheme) once, so every pi sees identical randomness: the
// empirical criterion is then itself concave in pi and safe to optimize.
class GnEvaluator {
 public:
  GnEvaluator(const MarketModel& model, int periods, const GnMethod& method);

  GnValue value(double pi) const;
  GnValue derivative(double pi) const;

  const MarketModel& model() const { return model_; }
  int periods() const { return periods_; }
  GnMethodTag method_tag() const { return tag_; }

 private:
  template <typename F>
  GnValue average(F&& integrand) const;

  MarketModel model_;
  int periods_;
  double dt_;
  GnMethodTag tag_;
  std::string note_;
  IncrementQuadrature scheme_;        // quadrature state
  std::vector<double> gross_moves_;   // e^Y - 1 per path (MC state)
  std::vector<double> gross_moves_anti_;
  bool antithetic_ = false;
};

GnValue eval_gn(const MarketModel& model, int periods, double pi, const GnMethod& method);
GnValue eval_gn_prime(const MarketModel& model, int periods, double pi, const GnMethod& method);

// Maximizes gN over [0, 1] by derivative bisection on shared randomness.
OptResult optimal_discrete(const MarketModel& model, int periods, const GnMethod& method);
OptResult optimal_discrete(const GnEvaluator& evaluator);

// Expected terminal utility of rebalancing to the fraction pi at each of the
// N period starts:
//   x0^(1-p) (1 + (1-p) T gN(pi)/N)^N / (1-p),  or  log x0 + T gN(pi)  (p = 1).
// Returns -inf (with a diagnostic if requested) when the base is nonpositive.
double discrete_value_function(const MarketModel& model, int periods, double pi,
                               const GnMethod& method, std::string* diagnostic = nullptr);
double discrete_value_from_gn(const MarketModel& model, int periods, double gn,
                              std::string* diagnostic = nullptr);

}  // namespace levyopt
