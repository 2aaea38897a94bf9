#include "levyopt/model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace levyopt {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename Triplet>
double sum_intensity(const Triplet& t) {
  double total = 0.0;
  for (const auto& atom : t.atoms) total += atom.intensity;
  return total;
}

template <typename Triplet>
double sum_intensity_size(const Triplet& t) {
  double total = 0.0;
  for (const auto& atom : t.atoms) total += atom.intensity * atom.size;
  return total;
}
}  // namespace

double LevyTriplet::total_intensity() const { return sum_intensity(*this); }
double LevyTriplet::intensity_weighted_size() const { return sum_intensity_size(*this); }
double LogTriplet::total_intensity() const { return sum_intensity(*this); }
double LogTriplet::intensity_weighted_size() const { return sum_intensity_size(*this); }

bool AdmissibleInterval::contains(double pi) const {
  if (pi < lower || (pi == lower && !lower_closed)) return false;
  if (pi > upper || (pi == upper && !upper_closed)) return false;
  return true;
}

bool AdmissibleInterval::closure_contains(double pi) const {
  return pi >= lower && pi <= upper;
}

bool AdmissibleInterval::interior_contains(double pi) const {
  return pi > lower && pi < upper;
}

AdmissibleInterval AdmissibleInterval::whole_line() {
  return {-kInf, kInf, false, false};
}

AdmissibleInterval AdmissibleInterval::unit_interval() {
  return {0.0, 1.0, true, true};
}

bool ValidationReport::ok() const {
  for (const auto& check : checks)
    if (!check.passed) return false;
  return true;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const auto& check : checks) {
    out << check.name << ": " << (check.passed ? "pass" : "FAIL");
    if (!check.detail.empty()) out << " (" << check.detail << ")";
    out << "\n";
  }
  return out.str();
}

ValidationReport validate_model(const MarketModel& model) {
  ValidationReport report;

  {
    ValidationCheck check{"parameter_ranges", true, ""};
    std::ostringstream bad;
    if (!(model.triplet.diffusion >= 0.0)) bad << "c must be >= 0; ";
    if (!(model.horizon > 0.0)) bad << "T must be > 0; ";
    if (!(model.initial_wealth > 0.0)) bad << "x0 must be > 0; ";
    if (!(model.utility.relative_risk_aversion > 0.0)) bad << "p must be > 0; ";
    if (!std::isfinite(model.triplet.drift)) bad << "b must be finite; ";
    for (const auto& atom : model.triplet.atoms)
      if (!(atom.intensity > 0.0)) {
        bad << "atom intensities must be > 0; ";
        break;
      }
    check.detail = bad.str();
    check.passed = check.detail.empty();
    report.checks.push_back(std::move(check));
  }

  {
    // Every jump must keep the stock strictly positive.
    ValidationCheck check{"positive_stock", true, ""};
    for (const auto& atom : model.triplet.atoms) {
      if (!(atom.size > -1.0)) {
        check.passed = false;
        std::ostringstream detail;
        detail << "atom size " << atom.size << " would wipe out the stock";
        check.detail = detail.str();
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    // Either a diffusion part, or jumps on both sides of zero; otherwise the
    // stock is monotone in the strategy and the problem degenerates.
    ValidationCheck check{"two_sided_activity", true, ""};
    if (model.triplet.diffusion == 0.0) {
      bool has_up = false, has_down = false;
      for (const auto& atom : model.triplet.atoms) {
        if (atom.size > 0.0) has_up = true;
        if (atom.size < 0.0) has_down = true;
      }
      if (!(has_up && has_down)) {
        check.passed = false;
        check.detail = "c = 0 requires jump activity on both sides of zero";
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    // With finitely many finite-size atoms every power moment of the stock is
    // finite, so the value function is finite by construction.
    ValidationCheck check{"finite_value", true, "finite jump support"};
    report.checks.push_back(std::move(check));
  }

  return report;
}

LogTriplet log_triplet(const LevyTriplet& triplet) {
  LogTriplet log;
  log.diffusion = triplet.diffusion;
  log.atoms.reserve(triplet.atoms.size());
  double correction = 0.0;
  for (const auto& atom : triplet.atoms) {
    const double y = std::log1p(atom.size);
    log.atoms.push_back({y, atom.intensity});
    correction += atom.intensity * (y - atom.size);
  }
  log.drift = triplet.drift - 0.5 * triplet.diffusion + correction;
  return log;
}

LevyTriplet levy_triplet(const LogTriplet& log) {
  LevyTriplet triplet;
  triplet.diffusion = log.diffusion;
  triplet.atoms.reserve(log.atoms.size());
  double correction = 0.0;
  for (const auto& atom : log.atoms) {
    const double x = std::expm1(atom.size);
    triplet.atoms.push_back({x, atom.intensity});
    correction += atom.intensity * (x - atom.size);
  }
  triplet.drift = log.drift + 0.5 * log.diffusion + correction;
  return triplet;
}

double cumulant_exponent(const LogTriplet& log, double u) {
  double value = u * log.drift + 0.5 * u * u * log.diffusion;
  for (const auto& atom : log.atoms) {
    const double uy = u * atom.size;
    value += atom.intensity * (std::expm1(uy) - uy);
  }
  return value;
}

AdmissibleInterval admissible_set(const LevyTriplet& triplet, const PowerUtility& utility) {
  double largest_up = 0.0;    // largest positive atom size, 0 if none
  double largest_down = 0.0;  // most negative atom size, 0 if none
  for (const auto& atom : triplet.atoms) {
    if (atom.size > largest_up) largest_up = atom.size;
    if (atom.size < largest_down) largest_down = atom.size;
  }
  AdmissibleInterval interval;
  interval.lower = largest_up > 0.0 ? -1.0 / largest_up : -kInf;
  interval.upper = largest_down < 0.0 ? -1.0 / largest_down : kInf;
  // p < 1 tolerates hitting zero wealth on a jump (the utility stays finite),
  // p >= 1 does not.
  const bool closed = utility.relative_risk_aversion < 1.0;
  interval.lower_closed = closed && std::isfinite(interval.lower);
  interval.upper_closed = closed && std::isfinite(interval.upper);
  return interval;
}

}  // namespace levyopt
