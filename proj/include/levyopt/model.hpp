#pragma once

#include <string>
#include <vector>

namespace levyopt {

// One atom of the finite-activity jump measure: the stock moves by the
// relative amount `size` (S_t = S_{t-} * (1 + size)) at rate `intensity`
// per unit time.
struct JumpAtom {
  double size = 0.0;       // x, must satisfy x > -1
  double intensity = 0.0;  // lambda > 0
};

// Levy-Khintchine triplet of the return process L driving S = S0 * E(L),
// drift taken w.r.t. the identity truncation (so drift = E[L_1]).
struct LevyTriplet {
  double drift = 0.0;      // b, per unit time
  double diffusion = 0.0;  // c >= 0, per unit time
  std::vector<JumpAtom> atoms;

  double total_intensity() const;
  double intensity_weighted_size() const;  // sum of lambda_i * x_i
};

// Triplet of log E(L), again w.r.t. the identity truncation; atom sizes are
// log(1 + x_i).
struct LogTriplet {
  double drift = 0.0;
  double diffusion = 0.0;
  std::vector<JumpAtom> atoms;

  double total_intensity() const;
  double intensity_weighted_size() const;
};

// Power utility x^(1-p) / (1-p); p == 1 selects the log branch.
struct PowerUtility {
  double relative_risk_aversion = 2.0;  // p > 0
  bool is_log() const { return relative_risk_aversion == 1.0; }
};

struct MarketModel {
  LevyTriplet triplet;
  double horizon = 1.0;         // T > 0
  double initial_wealth = 1.0;  // x0 > 0
  PowerUtility utility;
};

// Interval of constant strategies keeping wealth positive. Infinite
// endpoints are genuine +-inf sentinels and are always open; finite
// endpoints are closed exactly when p < 1.
struct AdmissibleInterval {
  double lower = 0.0;
  double upper = 0.0;
  bool lower_closed = false;
  bool upper_closed = false;

  bool contains(double pi) const;
  bool closure_contains(double pi) const;
  bool interior_contains(double pi) const;

  static AdmissibleInterval whole_line();
  static AdmissibleInterval unit_interval();  // [0, 1], both ends closed
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
  std::string summary() const;
};

// Checks parameter ranges and the standing assumptions: every jump keeps the
// stock positive (x > -1), and the log-price has either a diffusion part or
// jump activity on both sides (so no constant strategy is a.s. dominated).
ValidationReport validate_model(const MarketModel& model);

// Triplet of log E(L) from the triplet of L, and its algebraic inverse.
LogTriplet log_triplet(const LevyTriplet& triplet);
LevyTriplet levy_triplet(const LogTriplet& log);

// kappa(u) = log E[exp(u * log E(L)_1)]; finite for every real u because the
// jump measure has finite support.
double cumulant_exponent(const LogTriplet& log, double u);

// Strategies pi with 1 + pi * x > 0 (>= 0 when p < 1) for every atom size x.
AdmissibleInterval admissible_set(const LevyTriplet& triplet, const PowerUtility& utility);

}  // namespace levyopt
