#include "levyopt/discrete.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "levyopt/parallel.hpp"
#include "sampling.hpp"

namespace levyopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Deterministic stand-in when the jump-count enumeration is too large for
// quadrature: a fixed, documented Monte Carlo configuration.
constexpr McConfig kQuadratureFallback{1'000'000, 20260816ull, false};

[[noreturn]] void throw_outside_unit(const char* what, double pi) {
  std::ostringstream message;
  message << what << ": pi = " << pi << " is outside [0, 1]";
  throw std::domain_error(message.str());
}

}  // namespace

double sample_log_increment(const LogTriplet& log, double dt, PathRng& rng) {
  if (!(dt > 0.0)) throw std::invalid_argument("sample_log_increment: dt must be > 0");
  // Drift is compensated by the mean jump contribution, so the increment has
  // E[exp(u * increment)] = exp(kappa(u) dt) exactly.
  double value = (log.drift - log.intensity_weighted_size()) * dt;
  const double total = log.total_intensity();
  if (total > 0.0) {
    const int jumps = rng.poisson(total * dt);
    for (int k = 0; k < jumps; ++k)
      value += log.atoms[detail::pick_jump_atom(log.atoms, total, rng)].size;
  }
  if (log.diffusion > 0.0) value += std::sqrt(log.diffusion * dt) * rng.normal();
  return value;
}

GnEvaluator::GnEvaluator(const MarketModel& model, int periods, const GnMethod& method)
    : model_(model), periods_(periods), dt_(model.horizon / periods) {
  if (periods < 1) throw std::invalid_argument("GnEvaluator: periods must be >= 1");
  if (!(model.horizon > 0.0)) throw std::invalid_argument("GnEvaluator: horizon must be > 0");

  const LogTriplet log = log_triplet(model_.triplet);

  McConfig mc;
  if (std::holds_alternative<QuadConfig>(method)) {
    const auto& quad = std::get<QuadConfig>(method);
    scheme_ = make_increment_quadrature(log, dt_, quad.max_jumps, quad.gh_nodes);
    if (!scheme_.enumeration_capped) {
      tag_ = GnMethodTag::quadrature;
      return;
    }
    std::ostringstream note;
    note << "quadrature enumeration above the term cap at max_total_jumps = "
         << scheme_.max_total_jumps << "; fell back to Monte Carlo with "
         << kQuadratureFallback.paths << " paths, seed " << kQuadratureFallback.seed;
    note_ = note.str();
    mc = kQuadratureFallback;
  } else {
    mc = std::get<McConfig>(method);
  }

  if (mc.paths < 2) throw std::invalid_argument("GnEvaluator: need at least 2 paths");
  tag_ = GnMethodTag::mc;
  antithetic_ = mc.antithetic;

  // Materialize e^Y - 1 per path up front: every (pi, derivative-or-value)
  // query then reuses the same draws, which keeps the empirical criterion
  // concave in pi and its derivative monotone.
  gross_moves_.resize(static_cast<std::size_t>(mc.paths));
  if (antithetic_) gross_moves_anti_.resize(static_cast<std::size_t>(mc.paths));
  const double base_mean = (log.drift - log.intensity_weighted_size()) * dt_;
  const double total = log.total_intensity();
  const double jump_mean = total * dt_;
  const double gauss_scale = std::sqrt(log.diffusion * dt_);
  par::for_blocks(mc.paths, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) {
      PathRng rng(mc.seed, static_cast<std::uint64_t>(i));
      double base = base_mean;
      if (total > 0.0) {
        const int jumps = rng.poisson(jump_mean);
        for (int k = 0; k < jumps; ++k)
          base += log.atoms[detail::pick_jump_atom(log.atoms, total, rng)].size;
      }
      const double gauss = log.diffusion > 0.0 ? gauss_scale * rng.normal() : 0.0;
      gross_moves_[static_cast<std::size_t>(i)] = std::expm1(base + gauss);
      if (antithetic_)
        gross_moves_anti_[static_cast<std::size_t>(i)] = std::expm1(base - gauss);
    }
  });
}

template <typename F>
GnValue GnEvaluator::average(F&& integrand) const {
  const double scale = periods_ / model_.horizon;
  if (tag_ == GnMethodTag::quadrature) {
    const double mean =
        scheme_.expectation([&](double y) { return integrand(std::expm1(y)); });
    return {scale * mean, 0.0, tag_, note_};
  }
  const auto n = static_cast<std::int64_t>(gross_moves_.size());
  const auto sums = par::map_reduce_blocks<2>(n, [&](std::int64_t lo, std::int64_t hi) {
    std::array<double, 2> s{};
    for (std::int64_t i = lo; i < hi; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      const double term = antithetic_
                              ? 0.5 * (integrand(gross_moves_[idx]) +
                                       integrand(gross_moves_anti_[idx]))
                              : integrand(gross_moves_[idx]);
      s[0] += term;
      s[1] += term * term;
    }
    return s;
  });
  const double count = static_cast<double>(n);
  const double mean = sums[0] / count;
  double variance = (sums[1] - count * mean * mean) / (count - 1.0);
  if (!(variance > 0.0)) variance = 0.0;
  return {scale * mean, scale * std::sqrt(variance / count), tag_, note_};
}

GnValue GnEvaluator::value(double pi) const {
  if (!(pi >= 0.0 && pi <= 1.0)) throw_outside_unit("gN", pi);
  if (model_.utility.is_log())
    return average([pi](double z) { return std::log1p(pi * z); });
  const double q = 1.0 - model_.utility.relative_risk_aversion;
  return average([pi, q](double z) { return std::expm1(q * std::log1p(pi * z)) / q; });
}

GnValue GnEvaluator::derivative(double pi) const {
  if (!(pi >= 0.0 && pi <= 1.0)) throw_outside_unit("gN derivative", pi);
  const double p = model_.utility.relative_risk_aversion;
  return average([pi, p](double z) { return z * std::exp(-p * std::log1p(pi * z)); });
}

GnValue eval_gn(const MarketModel& model, int periods, double pi, const GnMethod& method) {
  return GnEvaluator(model, periods, method).value(pi);
}

GnValue eval_gn_prime(const MarketModel& model, int periods, double pi,
                      const GnMethod& method) {
  return GnEvaluator(model, periods, method).derivative(pi);
}

OptResult optimal_discrete(const GnEvaluator& evaluator) {
  return maximize_concave_1d(
      [&evaluator](double pi) { return evaluator.value(pi).value; },
      [&evaluator](double pi) { return evaluator.derivative(pi).value; },
      AdmissibleInterval::unit_interval());
}

OptResult optimal_discrete(const MarketModel& model, int periods, const GnMethod& method) {
  return optimal_discrete(GnEvaluator(model, periods, method));
}

double discrete_value_from_gn(const MarketModel& model, int periods, double gn,
                              std::string* diagnostic) {
  const double T = model.horizon;
  const double x0 = model.initial_wealth;
  const double p = model.utility.relative_risk_aversion;
  if (model.utility.is_log()) return std::log(x0) + T * gn;
  const double base = 1.0 + (1.0 - p) * T * gn / periods;
  if (base <= 0.0) {
    if (diagnostic)
      *diagnostic =
          "per-period factor 1 + (1-p) T gN / N is nonpositive; expected utility is -inf";
    return -kInf;
  }
  return std::pow(x0, 1.0 - p) * std::pow(base, periods) / (1.0 - p);
}

double discrete_value_function(const MarketModel& model, int periods, double pi,
                               const GnMethod& method, std::string* diagnostic) {
  const double gn = eval_gn(model, periods, pi, method).value;
  return discrete_value_from_gn(model, periods, gn, diagnostic);
}

}  // namespace levyopt
