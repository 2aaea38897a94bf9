#pragma once

#include <string>
#include <vector>

#include "levyopt/discrete.hpp"
#include "levyopt/model.hpp"
#include "levyopt/objective.hpp"
#include "levyopt/optimize.hpp"
#include "levyopt/wealth_sim.hpp"

namespace levyopt {

const char* to_string(Boundary boundary);
const char* to_string(GnMethodTag tag);

// Shortest round-trip decimal rendering; non-finite values print as
// "inf", "-inf", "nan". All CSV and stdout numbers go through this.
std::string format_double(double value);

struct ConvergenceRow {
  int periods = 0;
  double pi_star_discrete = 0.0;
  double gn_at_optimum = 0.0;
  double sup_gap = 0.0;    // max over the strategy grid of |gN - g|
  double value_gap = 0.0;  // |value_N(pi*_N) - value(pi*_C)|
  double l2_gap = 0.0;     // E[(product wealth - exact wealth)^2] at the optima
};

struct ConvergenceReport {
  double pi_star_continuous = 0.0;
  double g_at_optimum = 0.0;
  double continuous_value = 0.0;
  int grid_points = 0;
  GnMethodTag method = GnMethodTag::quadrature;
  std::vector<ConvergenceRow> rows;
};

// For each N in period_list (strictly increasing): solve the N-period
// problem, measure the sup-gap of gN against g on the uniform grid
// {0, 1/(grid_points-1), ..., 1}, the optimal-value gap against the
// [0, 1]-constrained continuous solution, and the terminal-wealth L2 gap at
// the two optima (path_mc controls that simulation).
ConvergenceReport run_convergence_study(const MarketModel& model,
                                        const std::vector<int>& period_list, int grid_points,
                                        const GnMethod& method, const McConfig& path_mc);

struct PropertyRow {
  double p = 0.0;
  double pi_star_continuous = 0.0;
  double pi_star_discrete = 0.0;
  bool sign_ok = false;
  bool monotone_ok = false;
};

struct PropertyReport {
  int periods = 0;
  std::vector<PropertyRow> rows;
  bool all_ok() const;
};

// Sign and monotonicity of the optima across risk aversions (p_list strictly
// increasing): both optima share the sign of the drift, and |pi*| shrinks as
// p grows.
PropertyReport run_property_checks(const MarketModel& model, const std::vector<double>& p_list,
                                   int periods, const GnMethod& method);

std::string to_csv(const ValidationReport& report);
std::string to_csv(const ConvergenceReport& report);
std::string to_csv(const PropertyReport& report);

// Command line driver; args excludes the program name. Returns the process
// exit code: 0 success, 1 invalid config or failed validation, 2 numerical
// failure, 64 usage error.
int cli_entry(const std::vector<std::string>& args);

}  // namespace levyopt
