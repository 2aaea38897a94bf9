#include "levyopt/harness.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "levyopt/config.hpp"
#include "levyopt/errors.hpp"
#include "levyopt/version.hpp"

namespace levyopt {

const char* to_string(Boundary boundary) {
  switch (boundary) {
    case Boundary::lower: return "lower";
    case Boundary::upper: return "upper";
    default: return "interior";
  }
}

const char* to_string(GnMethodTag tag) {
  return tag == GnMethodTag::mc ? "mc" : "quadrature";
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0.0 ? "inf" : "-inf";
  std::array<char, 32> buffer;
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (const char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

const char* bool_name(bool value) { return value ? "true" : "false"; }

}  // namespace

bool PropertyReport::all_ok() const {
  for (const auto& row : rows)
    if (!row.sign_ok || !row.monotone_ok) return false;
  return true;
}

ConvergenceReport run_convergence_study(const MarketModel& model,
                                        const std::vector<int>& period_list, int grid_points,
                                        const GnMethod& method, const McConfig& path_mc) {
  if (period_list.empty())
    throw std::invalid_argument("run_convergence_study: period list must not be empty");
  for (std::size_t i = 0; i < period_list.size(); ++i) {
    if (period_list[i] < 1)
      throw std::invalid_argument("run_convergence_study: periods must be >= 1");
    if (i > 0 && period_list[i] <= period_list[i - 1])
      throw std::invalid_argument("run_convergence_study: period list must be strictly increasing");
  }
  if (grid_points < 11)
    throw std::invalid_argument("run_convergence_study: need at least 11 grid points");

  ConvergenceReport report;
  const OptResult continuous = optimal_continuous(model, Constraint::unit_interval);
  report.pi_star_continuous = continuous.argmax;
  report.g_at_optimum = continuous.value;
  report.continuous_value = expected_terminal_utility(model, continuous.argmax);
  report.grid_points = grid_points;

  report.rows.reserve(period_list.size());
  for (std::size_t n_index = 0; n_index < period_list.size(); ++n_index) {
    const int periods = period_list[n_index];
    const GnEvaluator gn(model, periods, method);
    if (n_index == 0) report.method = gn.method_tag();
    const OptResult discrete = optimal_discrete(gn);

    double sup_gap = 0.0;
    for (int k = 0; k < grid_points; ++k) {
      const double pi = static_cast<double>(k) / (grid_points - 1);
      const double gap = std::abs(gn.value(pi).value - eval_g(model, pi).value);
      if (gap > sup_gap) sup_gap = gap;
    }

    const double value_n = discrete_value_from_gn(model, periods, discrete.value);
    const double value_gap = std::abs(value_n - report.continuous_value);
    const double l2 =
        l2_terminal_gap(model, discrete.argmax, continuous.argmax, periods, path_mc)
            .product_vs_exact.estimate;

    report.rows.push_back(
        {periods, discrete.argmax, discrete.value, sup_gap, value_gap, l2});
  }
  return report;
}

PropertyReport run_property_checks(const MarketModel& model, const std::vector<double>& p_list,
                                   int periods, const GnMethod& method) {
  if (p_list.empty())
    throw std::invalid_argument("run_property_checks: p list must not be empty");
  for (std::size_t i = 0; i < p_list.size(); ++i) {
    if (!(p_list[i] > 0.0))
      throw std::invalid_argument("run_property_checks: every p must be > 0");
    if (i > 0 && p_list[i] <= p_list[i - 1])
      throw std::invalid_argument("run_property_checks: p list must be strictly increasing");
  }

  constexpr double tol = 1e-9;
  PropertyReport report;
  report.periods = periods;
  report.rows.reserve(p_list.size());
  const double drift = model.triplet.drift;
  for (const double p : p_list) {
    MarketModel varied = model;
    varied.utility.relative_risk_aversion = p;
    const double pi_c = optimal_continuous(varied, Constraint::unconstrained).argmax;
    const double pi_d = optimal_discrete(varied, periods, method).argmax;

    PropertyRow row;
    row.p = p;
    row.pi_star_continuous = pi_c;
    row.pi_star_discrete = pi_d;
    if (drift > 0.0)
      row.sign_ok = pi_c >= -tol && pi_d >= -tol;
    else if (drift < 0.0)
      row.sign_ok = pi_c <= tol && pi_d <= tol;
    else
      row.sign_ok = std::abs(pi_c) <= tol && std::abs(pi_d) <= tol;

    if (report.rows.empty()) {
      row.monotone_ok = true;
    } else {
      const PropertyRow& last = report.rows.back();
      if (drift > 0.0)
        row.monotone_ok = pi_c <= last.pi_star_continuous + tol &&
                          pi_d <= last.pi_star_discrete + tol;
      else if (drift < 0.0)
        row.monotone_ok = pi_c >= last.pi_star_continuous - tol &&
                          pi_d >= last.pi_star_discrete - tol;
      else
        row.monotone_ok = std::abs(pi_c) <= tol && std::abs(pi_d) <= tol;
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string to_csv(const ValidationReport& report) {
  std::string out = "check,passed,detail\n";
  for (const auto& check : report.checks) {
    out += check.name;
    out += ',';
    out += bool_name(check.passed);
    out += ',';
    out += csv_field(check.detail);
    out += '\n';
  }
  return out;
}

std::string to_csv(const ConvergenceReport& report) {
  std::string out = "N,pi_star_N,gN_at_pi_star_N,sup_gap,value_gap,l2_gap\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.periods);
    out += ',';
    out += format_double(row.pi_star_discrete);
    out += ',';
    out += format_double(row.gn_at_optimum);
    out += ',';
    out += format_double(row.sup_gap);
    out += ',';
    out += format_double(row.value_gap);
    out += ',';
    out += format_double(row.l2_gap);
    out += '\n';
  }
  return out;
}

std::string to_csv(const PropertyReport& report) {
  std::string out = "p,pi_star,pi_star_N,sign_ok,monotone_ok\n";
  for (const auto& row : report.rows) {
    out += format_double(row.p);
    out += ',';
    out += format_double(row.pi_star_continuous);
    out += ',';
    out += format_double(row.pi_star_discrete);
    out += ',';
    out += bool_name(row.sign_ok);
    out += ',';
    out += bool_name(row.monotone_ok);
    out += '\n';
  }
  return out;
}

namespace {

using nlohmann::json;

json model_json(const MarketModel& model) {
  json atoms = json::array();
  for (const auto& atom : model.triplet.atoms)
    atoms.push_back({{"x", atom.size}, {"lambda", atom.intensity}});
  return {{"b", model.triplet.drift},  {"c", model.triplet.diffusion},
          {"atoms", atoms},            {"T", model.horizon},
          {"x0", model.initial_wealth}, {"p", model.utility.relative_risk_aversion}};
}

json tolerances_json() {
  return {{"derivative_tol", 1e-10}, {"bracket_tol", 1e-12}, {"poisson_tail", 1e-12}};
}

json opt_result_json(const OptResult& result) {
  return {{"argmax", result.argmax},
          {"value", result.value},
          {"boundary", to_string(result.boundary)},
          {"derivative_residual", result.derivative_residual},
          {"iterations", result.iterations}};
}

void write_text_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + file.string());
}

// Bound storage for every CLI option.
struct CliState {
  std::string config_path;
  std::string constraint = "none";
  std::string method = "quad";
  int periods = 256;
  std::int64_t paths = 100'000;
  std::uint64_t seed = 0;
  bool antithetic = false;
  int gh_nodes = 64;
  int max_jumps = 0;
  int grid_points = 21;
  std::vector<int> period_list;
  std::vector<double> p_list;
  std::string out_dir;
};

GnMethod method_from_state(const CliState& state) {
  if (state.method == "mc") return McConfig{state.paths, state.seed, state.antithetic};
  return QuadConfig{state.max_jumps, state.gh_nodes};
}

json method_json(const CliState& state) {
  json meta{{"method", state.method}};
  if (state.method == "mc") {
    meta["paths"] = state.paths;
    meta["seed"] = state.seed;
    meta["antithetic"] = state.antithetic;
  } else {
    meta["gh_nodes"] = state.gh_nodes;
    meta["max_jumps"] = state.max_jumps;
  }
  return meta;
}

void write_outputs(const CliState& state, const std::string& name, const std::string& csv,
                   const json& sidecar) {
  if (state.out_dir.empty()) return;
  const std::filesystem::path dir(state.out_dir);
  std::filesystem::create_directories(dir);
  write_text_file(dir / (name + ".csv"), csv);
  write_text_file(dir / (name + ".json"), sidecar.dump(2) + "\n");
}

json base_metadata(const CliState& state, const std::string& command, const MarketModel& model) {
  return {{"command", command},
          {"config", state.config_path},
          {"model", model_json(model)},
          {"tolerances", tolerances_json()},
          {"version", kVersion}};
}

void print_opt_result(const OptResult& result) {
  std::cout << "pi_star = " << format_double(result.argmax) << "\n"
            << "boundary = " << to_string(result.boundary) << "\n"
            << "derivative_residual = " << format_double(result.derivative_residual) << "\n"
            << "iterations = " << result.iterations << "\n";
}

int run_validate(const CliState& state, const MarketModel& model,
                 const ValidationReport& report) {
  std::cout << report.summary();
  json sidecar = base_metadata(state, "validate", model);
  json checks = json::array();
  for (const auto& check : report.checks)
    checks.push_back({{"check", check.name}, {"passed", check.passed}, {"detail", check.detail}});
  sidecar["results"] = {{"checks", checks}, {"ok", report.ok()}};
  write_outputs(state, "validate", to_csv(report), sidecar);
  return report.ok() ? 0 : 1;
}

int run_solve(const CliState& state, const MarketModel& model) {
  const Constraint constraint =
      state.constraint == "unit" ? Constraint::unit_interval : Constraint::unconstrained;
  const OptResult result = optimal_continuous(model, constraint);
  const double utility = expected_terminal_utility(model, result.argmax);

  print_opt_result(result);
  std::cout << "g_at_pi_star = " << format_double(result.value) << "\n"
            << "expected_utility = " << format_double(utility) << "\n";

  std::string csv =
      "pi_star,g_at_pi_star,expected_utility,boundary,derivative_residual,iterations\n";
  csv += format_double(result.argmax) + "," + format_double(result.value) + "," +
         format_double(utility) + "," + to_string(result.boundary) + "," +
         format_double(result.derivative_residual) + "," + std::to_string(result.iterations) +
         "\n";

  json sidecar = base_metadata(state, "solve", model);
  sidecar["constraint"] = state.constraint;
  sidecar["results"] = opt_result_json(result);
  sidecar["results"]["expected_utility"] = utility;
  write_outputs(state, "solve", csv, sidecar);
  return 0;
}

int run_solve_discrete(const CliState& state, const MarketModel& model) {
  const GnMethod method = method_from_state(state);
  const GnEvaluator evaluator(model, state.periods, method);
  const OptResult result = optimal_discrete(evaluator);
  const GnValue at_optimum = evaluator.value(result.argmax);
  const double utility = discrete_value_from_gn(model, state.periods, at_optimum.value);

  std::cout << "N = " << state.periods << "\n"
            << "method = " << to_string(evaluator.method_tag()) << "\n";
  print_opt_result(result);
  std::cout << "gN_at_pi_star = " << format_double(at_optimum.value) << "\n"
            << "std_error = " << format_double(at_optimum.std_error) << "\n"
            << "expected_utility = " << format_double(utility) << "\n";
  if (!at_optimum.note.empty()) std::cout << "note = " << at_optimum.note << "\n";

  std::string csv =
      "N,method,pi_star_N,gN_at_pi_star,std_error,expected_utility,boundary,"
      "derivative_residual,iterations,note\n";
  csv += std::to_string(state.periods) + "," + to_string(evaluator.method_tag()) + "," +
         format_double(result.argmax) + "," + format_double(at_optimum.value) + "," +
         format_double(at_optimum.std_error) + "," + format_double(utility) + "," +
         to_string(result.boundary) + "," + format_double(result.derivative_residual) + "," +
         std::to_string(result.iterations) + "," + csv_field(at_optimum.note) + "\n";

  json sidecar = base_metadata(state, "solve-discrete", model);
  sidecar["N"] = state.periods;
  sidecar["method_config"] = method_json(state);
  sidecar["results"] = opt_result_json(result);
  sidecar["results"]["gN_at_pi_star"] = at_optimum.value;
  sidecar["results"]["std_error"] = at_optimum.std_error;
  sidecar["results"]["expected_utility"] = utility;
  sidecar["results"]["method"] = to_string(evaluator.method_tag());
  sidecar["results"]["note"] = at_optimum.note;
  write_outputs(state, "solve_discrete", csv, sidecar);
  return 0;
}

int run_converge(const CliState& state, const MarketModel& model) {
  const GnMethod method = method_from_state(state);
  const McConfig path_mc{state.paths, state.seed, state.antithetic};
  const ConvergenceReport report =
      run_convergence_study(model, state.period_list, state.grid_points, method, path_mc);

  std::cout << "pi_star_continuous = " << format_double(report.pi_star_continuous) << "\n"
            << "g_at_pi_star = " << format_double(report.g_at_optimum) << "\n"
            << "continuous_value = " << format_double(report.continuous_value) << "\n"
            << "method = " << to_string(report.method) << "\n"
            << "N,pi_star_N,gN_at_pi_star_N,sup_gap,value_gap,l2_gap\n";
  for (const auto& row : report.rows)
    std::cout << row.periods << "," << format_double(row.pi_star_discrete) << ","
              << format_double(row.gn_at_optimum) << "," << format_double(row.sup_gap) << ","
              << format_double(row.value_gap) << "," << format_double(row.l2_gap) << "\n";

  json sidecar = base_metadata(state, "converge", model);
  sidecar["N_list"] = state.period_list;
  sidecar["grid_points"] = state.grid_points;
  sidecar["method_config"] = method_json(state);
  sidecar["path_mc"] = {{"paths", state.paths}, {"seed", state.seed},
                        {"antithetic", state.antithetic}};
  json rows = json::array();
  for (const auto& row : report.rows)
    rows.push_back({{"N", row.periods},
                    {"pi_star_N", row.pi_star_discrete},
                    {"gN_at_pi_star_N", row.gn_at_optimum},
                    {"sup_gap", row.sup_gap},
                    {"value_gap", row.value_gap},
                    {"l2_gap", row.l2_gap}});
  sidecar["results"] = {{"pi_star_continuous", report.pi_star_continuous},
                        {"g_at_pi_star", report.g_at_optimum},
                        {"continuous_value", report.continuous_value},
                        {"method", to_string(report.method)},
                        {"rows", rows}};
  write_outputs(state, "converge", to_csv(report), sidecar);
  return 0;
}

int run_properties(const CliState& state, const MarketModel& model) {
  const GnMethod method = method_from_state(state);
  const PropertyReport report =
      run_property_checks(model, state.p_list, state.periods, method);

  std::cout << "N = " << report.periods << "\n"
            << "p,pi_star,pi_star_N,sign_ok,monotone_ok\n";
  for (const auto& row : report.rows)
    std::cout << format_double(row.p) << "," << format_double(row.pi_star_continuous) << ","
              << format_double(row.pi_star_discrete) << "," << bool_name(row.sign_ok) << ","
              << bool_name(row.monotone_ok) << "\n";
  std::cout << "all_ok = " << bool_name(report.all_ok()) << "\n";

  json sidecar = base_metadata(state, "properties", model);
  sidecar["p_list"] = state.p_list;
  sidecar["N"] = report.periods;
  sidecar["method_config"] = method_json(state);
  json rows = json::array();
  for (const auto& row : report.rows)
    rows.push_back({{"p", row.p},
                    {"pi_star", row.pi_star_continuous},
                    {"pi_star_N", row.pi_star_discrete},
                    {"sign_ok", row.sign_ok},
                    {"monotone_ok", row.monotone_ok}});
  sidecar["results"] = {{"rows", rows}, {"all_ok", report.all_ok()}};
  write_outputs(state, "properties", to_csv(report), sidecar);
  return 0;
}

int run_wealth_gap(const CliState& state, const MarketModel& model) {
  const GnMethod method = method_from_state(state);
  const double pi_discrete = optimal_discrete(model, state.periods, method).argmax;
  const double pi_continuous = optimal_continuous(model, Constraint::unit_interval).argmax;
  const McConfig mc{state.paths, state.seed, state.antithetic};
  const TerminalSummary summary =
      simulate_coupled_terminals(model, pi_discrete, pi_continuous, state.periods, mc);

  std::cout << "N = " << state.periods << "\n"
            << "pi_discrete = " << format_double(pi_discrete) << "\n"
            << "pi_continuous = " << format_double(pi_continuous) << "\n"
            << "paths = " << summary.paths << "\n"
            << "product_vs_euler = " << format_double(summary.product_vs_euler.estimate)
            << " (se " << format_double(summary.product_vs_euler.std_error) << ")\n"
            << "euler_vs_exact = " << format_double(summary.euler_vs_exact.estimate)
            << " (se " << format_double(summary.euler_vs_exact.std_error) << ")\n"
            << "product_vs_exact = " << format_double(summary.product_vs_exact.estimate)
            << " (se " << format_double(summary.product_vs_exact.std_error) << ")\n"
            << "euler_nonpositive = " << summary.euler_nonpositive << "\n";

  std::string csv =
      "N,pi_discrete,pi_continuous,paths,product_vs_euler,product_vs_euler_se,"
      "euler_vs_exact,euler_vs_exact_se,product_vs_exact,product_vs_exact_se,"
      "euler_nonpositive\n";
  csv += std::to_string(state.periods) + "," + format_double(pi_discrete) + "," +
         format_double(pi_continuous) + "," + std::to_string(summary.paths) + "," +
         format_double(summary.product_vs_euler.estimate) + "," +
         format_double(summary.product_vs_euler.std_error) + "," +
         format_double(summary.euler_vs_exact.estimate) + "," +
         format_double(summary.euler_vs_exact.std_error) + "," +
         format_double(summary.product_vs_exact.estimate) + "," +
         format_double(summary.product_vs_exact.std_error) + "," +
         std::to_string(summary.euler_nonpositive) + "\n";

  json sidecar = base_metadata(state, "wealth-gap", model);
  sidecar["N"] = state.periods;
  sidecar["method_config"] = method_json(state);
  sidecar["path_mc"] = {{"paths", state.paths}, {"seed", state.seed},
                        {"antithetic", state.antithetic}};
  sidecar["results"] = {
      {"pi_discrete", pi_discrete},
      {"pi_continuous", pi_continuous},
      {"paths", summary.paths},
      {"product_vs_euler", summary.product_vs_euler.estimate},
      {"product_vs_euler_se", summary.product_vs_euler.std_error},
      {"euler_vs_exact", summary.euler_vs_exact.estimate},
      {"euler_vs_exact_se", summary.euler_vs_exact.std_error},
      {"product_vs_exact", summary.product_vs_exact.estimate},
      {"product_vs_exact_se", summary.product_vs_exact.std_error},
      {"euler_nonpositive", summary.euler_nonpositive}};
  write_outputs(state, "wealth_gap", csv, sidecar);
  return 0;
}

}  // namespace

int cli_entry(const std::vector<std::string>& args) {
  CLI::App app{"Optimal constant trading strategies in exponential Levy models"};
  app.name("levyopt");
  CliState state;

  auto add_config = [&state](CLI::App* sub) {
    sub->add_option("config", state.config_path,
                    "JSON model file with keys b, c, atoms, T, x0, p")
        ->required();
  };
  auto add_method = [&state](CLI::App* sub) {
    sub->add_option("--method", state.method, "gN evaluation method")
        ->check(CLI::IsMember({"mc", "quad"}))
        ->capture_default_str();
    sub->add_option("--paths", state.paths, "Monte Carlo path count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--seed", state.seed, "Monte Carlo seed")->capture_default_str();
    sub->add_flag("--antithetic", state.antithetic,
                  "pair each path with its Gaussian sign flip");
    sub->add_option("--gh-nodes", state.gh_nodes, "Gauss-Hermite nodes (quad)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-jumps", state.max_jumps,
                    "floor for the quadrature jump-count truncation")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  };
  auto add_out = [&state](CLI::App* sub, bool required) {
    auto* option = sub->add_option(
        "--out", state.out_dir,
        "directory for <command>.csv and <command>.json outputs");
    if (required) option->required();
  };

  CLI::App* validate = app.add_subcommand("validate", "check a model configuration");
  add_config(validate);
  add_out(validate, false);

  CLI::App* solve =
      app.add_subcommand("solve", "optimal constant strategy, continuous time");
  add_config(solve);
  solve->add_option("--constraint", state.constraint,
                    "none: full admissible set; unit: restrict to [0, 1]")
      ->check(CLI::IsMember({"none", "unit"}))
      ->capture_default_str();
  add_out(solve, false);

  CLI::App* solve_discrete =
      app.add_subcommand("solve-discrete", "optimal constant strategy, N periods");
  add_config(solve_discrete);
  solve_discrete->add_option("--N", state.periods, "number of rebalancing periods")
      ->required()
      ->check(CLI::PositiveNumber);
  add_method(solve_discrete);
  add_out(solve_discrete, false);

  CLI::App* converge = app.add_subcommand(
      "converge", "N-period optima and gaps against the continuous solution");
  add_config(converge);
  converge->add_option("--N-list", state.period_list, "strictly increasing period counts")
      ->required()
      ->delimiter(',');
  converge->add_option("--grid", state.grid_points,
                       "points in the uniform strategy grid on [0, 1]")
      ->check(CLI::Range(11, 100000))
      ->capture_default_str();
  add_method(converge);
  add_out(converge, true);

  CLI::App* properties =
      app.add_subcommand("properties", "sign and monotonicity of the optima across p");
  add_config(properties);
  properties->add_option("--p-list", state.p_list, "strictly increasing risk aversions")
      ->required()
      ->delimiter(',');
  properties->add_option("--N", state.periods, "periods for the discrete optima")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_method(properties);
  add_out(properties, false);

  CLI::App* wealth_gap = app.add_subcommand(
      "wealth-gap", "terminal-wealth L2 gaps between coupled simulations");
  add_config(wealth_gap);
  wealth_gap->add_option("--N", state.periods, "number of rebalancing periods")
      ->required()
      ->check(CLI::PositiveNumber);
  add_method(wealth_gap);
  add_out(wealth_gap, false);

  app.require_subcommand(1);
  app.footer(
      "Environment: LEVY_OPT_THREADS caps the worker threads; results are\n"
      "bit-identical for any setting. Exit codes: 0 success, 1 invalid model\n"
      "or failed validation, 2 numerical failure, 64 usage error.");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("levyopt");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 64;
  }

  MarketModel model;
  try {
    model = load_model(state.config_path);
  } catch (const ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 1;
  }

  const ValidationReport report = validate_model(model);
  if (validate->parsed()) return run_validate(state, model, report);
  if (!report.ok()) {
    std::cerr << "invalid model:\n" << report.summary();
    return 1;
  }

  try {
    if (solve->parsed()) return run_solve(state, model);
    if (solve_discrete->parsed()) return run_solve_discrete(state, model);
    if (converge->parsed()) return run_converge(state, model);
    if (properties->parsed()) return run_properties(state, model);
    if (wealth_gap->parsed()) return run_wealth_gap(state, model);
  } catch (const std::exception& err) {
    std::cerr << "numerical failure: " << err.what() << "\n";
    return 2;
  }
  return 64;  // unreachable: require_subcommand guarantees one branch
}

}  // namespace levyopt
