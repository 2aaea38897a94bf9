#include "levyopt/wealth_sim.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "levyopt/parallel.hpp"
#include "sampling.hpp"

namespace levyopt {

namespace {

// Sample mean and standard error from (sum, sum of squares, count).
MomentEstimate moment(double sum, double sum_sq, double count) {
  const double mean = sum / count;
  double variance = (sum_sq - count * mean * mean) / (count - 1.0);
  if (!(variance > 0.0)) variance = 0.0;
  return {mean, std::sqrt(variance / count)};
}

GapEstimate gap(double sum, double sum_sq, double count) {
  const auto m = moment(sum, sum_sq, count);
  return {m.mean, m.std_error};
}

}  // namespace

CoupledPath sample_coupled_path(const LevyTriplet& triplet, double horizon, int periods,
                                PathRng& rng) {
  if (periods < 1) throw std::invalid_argument("sample_coupled_path: periods must be >= 1");
  if (!(horizon > 0.0)) throw std::invalid_argument("sample_coupled_path: horizon must be > 0");

  const double dt = horizon / periods;
  CoupledPath path;
  path.levy_increments.assign(static_cast<std::size_t>(periods), 0.0);
  path.log_increments.assign(static_cast<std::size_t>(periods), 0.0);
  path.brownian.assign(static_cast<std::size_t>(periods), 0.0);

  // Jumps first: a Poisson count over [0, T], each with a uniform time and a
  // categorical atom.
  const double total = triplet.total_intensity();
  if (total > 0.0) {
    const int count = rng.poisson(total * horizon);
    path.jumps.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
      const double time = rng.uniform() * horizon;
      const int atom = detail::pick_jump_atom(triplet.atoms, total, rng);
      path.jumps.emplace_back(time, atom);
    }
  }

  const double sqrt_dt = std::sqrt(dt);
  if (triplet.diffusion > 0.0)
    for (auto& dw : path.brownian) dw = sqrt_dt * rng.normal();

  // Both builds share the Brownian increments and jumps; only the drift
  // compensation and the jump sizes (x vs log(1 + x)) differ.
  const LogTriplet log = log_triplet(triplet);
  const double vol = std::sqrt(triplet.diffusion);
  const double levy_base = (triplet.drift - triplet.intensity_weighted_size()) * dt;
  const double log_base = (log.drift - log.intensity_weighted_size()) * dt;
  for (int j = 0; j < periods; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    path.levy_increments[idx] = levy_base + vol * path.brownian[idx];
    path.log_increments[idx] = log_base + vol * path.brownian[idx];
  }
  for (const auto& [time, atom] : path.jumps) {
    auto bin = static_cast<std::size_t>(time / dt);
    if (bin >= static_cast<std::size_t>(periods)) bin = static_cast<std::size_t>(periods) - 1;
    const double x = triplet.atoms[static_cast<std::size_t>(atom)].size;
    path.levy_increments[bin] += x;
    path.log_increments[bin] += std::log1p(x);
  }
  return path;
}

TerminalTriple coupled_terminals(const CoupledPath& path, const LevyTriplet& triplet,
                                 double horizon, double pi_discrete, double pi_continuous) {
  double w_total = 0.0;
  for (const double dw : path.brownian) w_total += dw;

  // Exact stochastic exponential of pi_c L from the closed form: drift and
  // Brownian terms plus one factor (1 + pi_c x) per jump.
  const double drift_net = triplet.drift - triplet.intensity_weighted_size();
  double exact = std::exp(pi_continuous * drift_net * horizon +
                          pi_continuous * std::sqrt(triplet.diffusion) * w_total -
                          0.5 * pi_continuous * pi_continuous * triplet.diffusion * horizon);
  for (const auto& [time, atom] : path.jumps)
    exact *= 1.0 + pi_continuous * triplet.atoms[static_cast<std::size_t>(atom)].size;

  double euler = 1.0;
  double product = 1.0;
  for (std::size_t j = 0; j < path.levy_increments.size(); ++j) {
    euler *= 1.0 + pi_discrete * path.levy_increments[j];
    product *= 1.0 + pi_discrete * std::expm1(path.log_increments[j]);
  }
  return {exact, euler, product};
}

TerminalSummary simulate_coupled_terminals(const MarketModel& model, double pi_discrete,
                                           double pi_continuous, int periods,
                                           const McConfig& mc) {
  if (mc.paths < 2) throw std::invalid_argument("simulate_coupled_terminals: need >= 2 paths");
  if (!(pi_discrete >= 0.0 && pi_discrete <= 1.0))
    throw std::domain_error("simulate_coupled_terminals: pi_discrete must lie in [0, 1]");

  const double x0 = model.initial_wealth;
  // Accumulator layout:
  //  0 exact, 1 exact^2, 2 exact^4,
  //  3 euler, 4 euler^2, 5 product, 6 product^2,
  //  7 (product-euler)^2, 8 its square,
  //  9 (euler-exact)^2, 10 its square,
  // 11 (product-exact)^2, 12 its square,
  // 13 count of nonpositive Euler terminals.
  const auto sums = par::map_reduce_blocks<14>(mc.paths, [&](std::int64_t lo, std::int64_t hi) {
    std::array<double, 14> s{};
    auto accumulate = [&s](const TerminalTriple& t) {
      s[0] += t.exact;
      s[1] += t.exact * t.exact;
      s[2] += t.exact * t.exact * t.exact * t.exact;
      s[3] += t.euler;
      s[4] += t.euler * t.euler;
      s[5] += t.product;
      s[6] += t.product * t.product;
      const double pe = (t.product - t.euler) * (t.product - t.euler);
      const double ee = (t.euler - t.exact) * (t.euler - t.exact);
      const double px = (t.product - t.exact) * (t.product - t.exact);
      s[7] += pe;
      s[8] += pe * pe;
      s[9] += ee;
      s[10] += ee * ee;
      s[11] += px;
      s[12] += px * px;
      if (t.euler <= 0.0) s[13] += 1.0;
    };
    for (std::int64_t i = lo; i < hi; ++i) {
      PathRng rng(mc.seed, static_cast<std::uint64_t>(i));
      const CoupledPath path = sample_coupled_path(model.triplet, model.horizon, periods, rng);
      TerminalTriple t = coupled_terminals(path, model.triplet, model.horizon, pi_discrete,
                                           pi_continuous);
      t.exact *= x0;
      t.euler *= x0;
      t.product *= x0;
      if (mc.antithetic) {
        CoupledPath flipped = path;
        for (std::size_t j = 0; j < flipped.brownian.size(); ++j) {
          const double dw = flipped.brownian[j];
          flipped.brownian[j] = -dw;
          const double vol_dw = std::sqrt(model.triplet.diffusion) * dw;
          flipped.levy_increments[j] -= 2.0 * vol_dw;
          flipped.log_increments[j] -= 2.0 * vol_dw;
        }
        TerminalTriple u = coupled_terminals(flipped, model.triplet, model.horizon,
                                             pi_discrete, pi_continuous);
        u.exact *= x0;
        u.euler *= x0;
        u.product *= x0;
        // Each antithetic pair contributes the average of its two terminals
        // to every statistic, keeping all estimates unbiased.
        std::array<double, 14> pair{};
        std::swap(s, pair);
        accumulate(t);
        accumulate(u);
        for (std::size_t j = 0; j < 13; ++j) s[j] *= 0.5;
        // A nonpositive Euler terminal counts per evaluated path, not per pair.
        for (std::size_t j = 0; j < 14; ++j) s[j] += pair[j];
      } else {
        accumulate(t);
      }
    }
    return s;
  });

  TerminalSummary summary;
  summary.paths = mc.paths;
  const double count = static_cast<double>(mc.paths);
  summary.exact_mean = moment(sums[0], sums[1], count);
  summary.exact_second_moment = moment(sums[1], sums[2], count);
  summary.euler_mean = moment(sums[3], sums[4], count);
  summary.product_mean = moment(sums[5], sums[6], count);
  summary.product_vs_euler = gap(sums[7], sums[8], count);
  summary.euler_vs_exact = gap(sums[9], sums[10], count);
  summary.product_vs_exact = gap(sums[11], sums[12], count);
  summary.euler_nonpositive = static_cast<std::int64_t>(sums[13]);
  return summary;
}

L2Gaps l2_terminal_gap(const MarketModel& model, double pi_discrete, double pi_continuous,
                       int periods, const McConfig& mc) {
  const TerminalSummary summary =
      simulate_coupled_terminals(model, pi_discrete, pi_continuous, periods, mc);
  return {summary.product_vs_euler, summary.euler_vs_exact, summary.product_vs_exact,
          summary.euler_nonpositive};
}

}  // namespace levyopt
