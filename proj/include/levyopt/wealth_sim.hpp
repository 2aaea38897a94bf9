#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "levyopt/discrete.hpp"
#include "levyopt/model.hpp"
#include "levyopt/rng.hpp"

namespace levyopt {

// One exact path of the driving process, discretized on the N-point grid but
// carrying enough information (jump times, Brownian increments) to evaluate
// the continuous-time terminal wealth without discretization error.
struct CoupledPath {
  std::vector<double> levy_increments;  // increments of L per period
  std::vector<double> log_increments;   // increments of log E(L) per period
  std::vector<double> brownian;         // Brownian increments W_{t_{j+1}} - W_{t_j}
  std::vector<std::pair<double, int>> jumps;  // (time, atom index)
};

CoupledPath sample_coupled_path(const LevyTriplet& triplet, double horizon, int periods,
                                PathRng& rng);

// Terminal wealth of three couplings on one path, all with x0 = 1:
//   exact:   E(pi_c L)_T, evaluated in closed form from W_T and the jumps
//   euler:   prod_j (1 + pi_d dL_j), the forward-Euler portfolio (may go <= 0)
//   product: prod_j (1 + pi_d (e^{dlogE(L)_j} - 1)), the rebalanced portfolio
struct TerminalTriple {
  double exact = 0.0;
  double euler = 0.0;
  double product = 0.0;
};

TerminalTriple coupled_terminals(const CoupledPath& path, const LevyTriplet& triplet,
                                 double horizon, double pi_discrete, double pi_continuous);

struct MomentEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

struct GapEstimate {
  double estimate = 0.0;   // E[(A - B)^2] estimate
  double std_error = 0.0;
};

struct TerminalSummary {
  std::int64_t paths = 0;
  MomentEstimate exact_mean;
  MomentEstimate exact_second_moment;
  MomentEstimate euler_mean;
  MomentEstimate product_mean;
  GapEstimate product_vs_euler;
  GapEstimate euler_vs_exact;
  GapEstimate product_vs_exact;
  std::int64_t euler_nonpositive = 0;  // paths whose Euler wealth hit <= 0
};

// Simulates mc.paths coupled paths holding pi_discrete across the N periods
// and pi_continuous in the exact portfolio, and accumulates the terminal
// moments and squared gaps. x0 is taken from the model.
TerminalSummary simulate_coupled_terminals(const MarketModel& model, double pi_discrete,
                                           double pi_continuous, int periods,
                                           const McConfig& mc);

struct L2Gaps {
  GapEstimate product_vs_euler;
  GapEstimate euler_vs_exact;
  GapEstimate product_vs_exact;
  std::int64_t euler_nonpositive = 0;
};

L2Gaps l2_terminal_gap(const MarketModel& model, double pi_discrete, double pi_continuous,
                       int periods, const McConfig& mc);

}  // namespace levyopt
