#include <cmath>
#include <limits>
#include <string>

#include "doctest.h"
#include "levyopt/config.hpp"
#include "levyopt/errors.hpp"
#include "levyopt/model.hpp"
#include "test_util.hpp"

using namespace levyopt;
using namespace levyopt::testing;

namespace {

const ValidationCheck* find_check(const ValidationReport& report, const std::string& name) {
  for (const auto& check : report.checks)
    if (check.name == name) return &check;
  return nullptr;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("validate_model accepts the Merton model") {
  const ValidationReport report = validate_model(merton_model());
  CHECK(report.ok());
  CHECK(report.checks.size() == 4);
}

TEST_CASE("validate_model rejects one-sided pure-jump activity") {
  MarketModel model;
  model.triplet.drift = 0.05;
  model.triplet.diffusion = 0.0;
  model.triplet.atoms = {{0.25, 1.0}};
  const ValidationReport report = validate_model(model);
  CHECK_FALSE(report.ok());
  const auto* check = find_check(report, "two_sided_activity");
  REQUIRE(check != nullptr);
  CHECK_FALSE(check->passed);
  // The other assumptions hold for this model.
  CHECK(find_check(report, "positive_stock")->passed);
  CHECK(find_check(report, "parameter_ranges")->passed);
}

TEST_CASE("validate_model rejects an atom that wipes out the stock") {
  MarketModel model;
  model.triplet.drift = 0.0;
  model.triplet.diffusion = 0.01;
  model.triplet.atoms = {{-1.2, 0.5}};
  const ValidationReport report = validate_model(model);
  CHECK_FALSE(report.ok());
  const auto* check = find_check(report, "positive_stock");
  REQUIRE(check != nullptr);
  CHECK_FALSE(check->passed);
}

TEST_CASE("validate_model flags bad scalar parameters") {
  MarketModel model = merton_model();
  SUBCASE("negative diffusion") { model.triplet.diffusion = -0.01; }
  SUBCASE("zero horizon") { model.horizon = 0.0; }
  SUBCASE("zero initial wealth") { model.initial_wealth = 0.0; }
  SUBCASE("zero risk aversion") { model.utility.relative_risk_aversion = 0.0; }
  SUBCASE("non-positive atom intensity") { model.triplet.atoms = {{0.1, 0.0}}; }
  const ValidationReport report = validate_model(model);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(find_check(report, "parameter_ranges")->passed);
}

TEST_CASE("finite_value is reported satisfied by construction") {
  const ValidationReport report = validate_model(two_atom_model());
  const auto* check = find_check(report, "finite_value");
  REQUIRE(check != nullptr);
  CHECK(check->passed);
  CHECK(!check->detail.empty());
}

TEST_CASE("log_triplet of the Merton model shifts the drift by c/2") {
  const LogTriplet log = log_triplet(merton_model().triplet);
  CHECK(log.drift == 0.02);
  CHECK(log.diffusion == 0.04);
  CHECK(log.atoms.empty());
}

TEST_CASE("log_triplet of a pure-jump model compensates the jump sizes") {
  LevyTriplet triplet;
  triplet.atoms = {{0.25, 1.0}};
  const LogTriplet log = log_triplet(triplet);
  CHECK(log.diffusion == 0.0);
  REQUIRE(log.atoms.size() == 1);
  CHECK(close(log.atoms[0].size, 0.22314355131420976, 1e-15));  // log 1.25
  CHECK(log.atoms[0].intensity == 1.0);
  CHECK(close(log.drift, -0.02685644868579024, 1e-15));  // log 1.25 - 0.25
}

TEST_CASE("levy_triplet inverts log_triplet to 1e-12") {
  const LevyTriplet original = two_atom_model().triplet;
  const LevyTriplet back = levy_triplet(log_triplet(original));
  CHECK(close(back.drift, original.drift, 1e-12));
  CHECK(back.diffusion == original.diffusion);
  REQUIRE(back.atoms.size() == original.atoms.size());
  for (std::size_t i = 0; i < back.atoms.size(); ++i) {
    CHECK(close(back.atoms[i].size, original.atoms[i].size, 1e-12));
    CHECK(back.atoms[i].intensity == original.atoms[i].intensity);
  }
}

TEST_CASE("round trip holds on a stress triplet with large and tiny atoms") {
  LevyTriplet triplet;
  triplet.drift = -3.7;
  triplet.diffusion = 2.25;
  triplet.atoms = {{-0.999, 0.01}, {-1e-9, 5.0}, {1e-9, 5.0}, {9.0, 0.3}};
  const LevyTriplet back = levy_triplet(log_triplet(triplet));
  CHECK(close(back.drift, triplet.drift, 1e-12));
  for (std::size_t i = 0; i < back.atoms.size(); ++i)
    CHECK(close_rel(back.atoms[i].size, triplet.atoms[i].size, 1e-12));
}

TEST_CASE("cumulant exponent vanishes at zero and recovers the drift at one") {
  const LevyTriplet triplets[] = {
      merton_model().triplet,
      two_atom_model().triplet,
      {0.0, 0.0, {{0.25, 1.0}, {-0.5, 2.0}}},
      {-1.3, 0.7, {{3.0, 0.2}}},
  };
  for (const auto& triplet : triplets) {
    const LogTriplet log = log_triplet(triplet);
    CHECK(cumulant_exponent(log, 0.0) == 0.0);
    const double k1 = cumulant_exponent(log, 1.0);
    if (triplet.drift == 0.0)
      CHECK(std::abs(k1) <= 1e-12);
    else
      CHECK(close_rel(k1, triplet.drift, 1e-12));
  }
}

TEST_CASE("Merton cumulant at u = -1 vanishes when b equals c") {
  // b~ = 0.02, c~ = 0.04: kappa(-1) = -0.02 + 0.02 = 0.
  const LogTriplet log = log_triplet(merton_model().triplet);
  CHECK(std::abs(cumulant_exponent(log, -1.0)) <= 1e-15);
}

TEST_CASE("two-atom cumulant at u = -1 matches -b + c + sum lambda x^2/(1+x)") {
  // -0.05 + 0.01 + 0.04/0.8 + 0.0625/1.25 = 0.06
  const LogTriplet log = log_triplet(two_atom_model().triplet);
  CHECK(close(cumulant_exponent(log, -1.0), 0.06, 1e-12));
}

TEST_CASE("cumulant exponent is midpoint convex in u") {
  const LogTriplet log = log_triplet(two_atom_model().triplet);
  for (double u1 = -3.0; u1 <= 3.0; u1 += 0.25) {
    for (double u2 = u1 + 0.25; u2 <= 3.0; u2 += 0.25) {
      const double mid = cumulant_exponent(log, 0.5 * (u1 + u2));
      const double chord = 0.5 * (cumulant_exponent(log, u1) + cumulant_exponent(log, u2));
      CHECK(mid <= chord + 1e-12);
    }
  }
}

TEST_CASE("admissible set is the whole line without jumps") {
  const AdmissibleInterval set =
      admissible_set(merton_model().triplet, PowerUtility{2.0});
  CHECK(set.lower == -std::numeric_limits<double>::infinity());
  CHECK(set.upper == std::numeric_limits<double>::infinity());
  CHECK_FALSE(set.lower_closed);
  CHECK_FALSE(set.upper_closed);
  CHECK(set.contains(-1e9));
  CHECK(set.contains(1e9));
}

TEST_CASE("admissible set for two-sided atoms is (-4, 5) when p >= 1") {
  const AdmissibleInterval set =
      admissible_set(two_atom_model().triplet, PowerUtility{2.0});
  CHECK(set.lower == -4.0);
  CHECK(set.upper == 5.0);
  CHECK_FALSE(set.lower_closed);
  CHECK_FALSE(set.upper_closed);
  CHECK_FALSE(set.contains(-4.0));
  CHECK_FALSE(set.contains(5.0));
  CHECK(set.contains(-3.999));
  CHECK(set.contains(4.999));
  CHECK(set.closure_contains(5.0));
  CHECK_FALSE(set.interior_contains(5.0));
}

TEST_CASE("admissible set closes its endpoints when p < 1") {
  const AdmissibleInterval set =
      admissible_set(two_atom_model().triplet, PowerUtility{0.5});
  CHECK(set.lower == -4.0);
  CHECK(set.upper == 5.0);
  CHECK(set.lower_closed);
  CHECK(set.upper_closed);
  CHECK(set.contains(-4.0));
  CHECK(set.contains(5.0));
}

TEST_CASE("one-sided atoms leave the unconstrained side infinite") {
  LevyTriplet triplet;
  triplet.diffusion = 0.04;
  triplet.atoms = {{0.25, 1.0}};
  const AdmissibleInterval set = admissible_set(triplet, PowerUtility{2.0});
  CHECK(set.lower == -4.0);
  CHECK(set.upper == std::numeric_limits<double>::infinity());
  CHECK_FALSE(set.upper_closed);
}

TEST_CASE("admissible set always contains the unit interval") {
  const LevyTriplet triplets[] = {
      merton_model().triplet,
      two_atom_model().triplet,
      {0.0, 0.0, {{-0.01, 1.0}, {100.0, 0.5}}},
      {0.0, 1.0, {{-0.999999, 0.1}}},
  };
  for (const auto& triplet : triplets) {
    for (double p : {0.5, 1.0, 2.0}) {
      const AdmissibleInterval set = admissible_set(triplet, PowerUtility{p});
      CHECK(set.contains(0.0));
      CHECK(set.contains(1.0));
      CHECK(set.contains(0.5));
      CHECK(set.lower < set.upper);
    }
  }
}

TEST_CASE("unit_interval helper is closed [0, 1]") {
  const AdmissibleInterval unit = AdmissibleInterval::unit_interval();
  CHECK(unit.contains(0.0));
  CHECK(unit.contains(1.0));
  CHECK_FALSE(unit.contains(1.0 + 1e-12));
  CHECK_FALSE(unit.interior_contains(0.0));
}

TEST_CASE("model_from_json parses the documented schema") {
  const MarketModel model = model_from_json(R"({
    "b": 0.05, "c": 0.01,
    "atoms": [{"x": -0.2, "lambda": 1.0}, {"x": 0.25, "lambda": 1.0}],
    "T": 1.0, "x0": 1.0, "p": 2.0
  })");
  CHECK(model.triplet.drift == 0.05);
  CHECK(model.triplet.diffusion == 0.01);
  REQUIRE(model.triplet.atoms.size() == 2);
  CHECK(model.triplet.atoms[0].size == -0.2);
  CHECK(model.triplet.atoms[1].intensity == 1.0);
  CHECK(model.horizon == 1.0);
  CHECK(model.initial_wealth == 1.0);
  CHECK(model.utility.relative_risk_aversion == 2.0);
}

TEST_CASE("model_from_json rejects malformed documents") {
  CHECK_THROWS_AS(model_from_json("not json"), ConfigError);
  CHECK_THROWS_AS(model_from_json("[1, 2]"), ConfigError);
  // Missing field.
  CHECK_THROWS_AS(
      model_from_json(R"({"b": 0, "c": 0.04, "atoms": [], "T": 1, "x0": 1})"),
      ConfigError);
  // Unknown field.
  CHECK_THROWS_AS(
      model_from_json(
          R"({"b": 0, "c": 0.04, "atoms": [], "T": 1, "x0": 1, "p": 2, "mu": 0})"),
      ConfigError);
  // Wrong scalar type.
  CHECK_THROWS_AS(
      model_from_json(R"({"b": "0.04", "c": 0.04, "atoms": [], "T": 1, "x0": 1, "p": 2})"),
      ConfigError);
  // Atoms not an array.
  CHECK_THROWS_AS(
      model_from_json(R"({"b": 0, "c": 0.04, "atoms": {}, "T": 1, "x0": 1, "p": 2})"),
      ConfigError);
  // Atom entry missing lambda.
  CHECK_THROWS_AS(
      model_from_json(
          R"({"b": 0, "c": 0.04, "atoms": [{"x": 0.1}], "T": 1, "x0": 1, "p": 2})"),
      ConfigError);
  // Unknown atom field.
  CHECK_THROWS_AS(
      model_from_json(
          R"({"b": 0, "c": 0.04, "atoms": [{"x": 0.1, "lambda": 1, "y": 2}], "T": 1, "x0": 1, "p": 2})"),
      ConfigError);
}

TEST_CASE("load_model reads the shipped configs and rejects missing files") {
  const MarketModel merton = load_model(std::string(LEVYOPT_CONFIG_DIR) + "/merton.json");
  CHECK(merton.triplet.drift == 0.04);
  CHECK(merton.triplet.diffusion == 0.04);
  CHECK(merton.triplet.atoms.empty());
  CHECK(validate_model(merton).ok());

  const MarketModel two_atom =
      load_model(std::string(LEVYOPT_CONFIG_DIR) + "/two_atom.json");
  CHECK(two_atom.triplet.atoms.size() == 2);
  CHECK(validate_model(two_atom).ok());

  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), ConfigError);
}

}  // TEST_SUITE("model")
