#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "levyopt/config.hpp"
#include "levyopt/discrete.hpp"
#include "levyopt/errors.hpp"
#include "levyopt/harness.hpp"
#include "levyopt/model.hpp"
#include "levyopt/objective.hpp"
#include "levyopt/optimize.hpp"
#include "levyopt/wealth_sim.hpp"

namespace py = pybind11;
using namespace levyopt;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Optimal constant strategies for power utility in exponential Levy models";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<UnboundedProblemError>(m, "UnboundedProblemError");

  py::class_<JumpAtom>(m, "JumpAtom")
      .def(py::init([](double size, double intensity) {
             return JumpAtom{size, intensity};
           }),
           py::arg("size"), py::arg("intensity"))
      .def_readwrite("size", &JumpAtom::size)
      .def_readwrite("intensity", &JumpAtom::intensity);

  py::class_<LevyTriplet>(m, "LevyTriplet")
      .def(py::init([](double drift, double diffusion, std::vector<JumpAtom> atoms) {
             return LevyTriplet{drift, diffusion, std::move(atoms)};
           }),
           py::arg("drift"), py::arg("diffusion"),
           py::arg("atoms") = std::vector<JumpAtom>{})
      .def_readwrite("drift", &LevyTriplet::drift)
      .def_readwrite("diffusion", &LevyTriplet::diffusion)
      .def_readwrite("atoms", &LevyTriplet::atoms)
      .def("total_intensity", &LevyTriplet::total_intensity)
      .def("intensity_weighted_size", &LevyTriplet::intensity_weighted_size);

  py::class_<LogTriplet>(m, "LogTriplet")
      .def(py::init([](double drift, double diffusion, std::vector<JumpAtom> atoms) {
             return LogTriplet{drift, diffusion, std::move(atoms)};
           }),
           py::arg("drift"), py::arg("diffusion"),
           py::arg("atoms") = std::vector<JumpAtom>{})
      .def_readwrite("drift", &LogTriplet::drift)
      .def_readwrite("diffusion", &LogTriplet::diffusion)
      .def_readwrite("atoms", &LogTriplet::atoms);

  py::class_<PowerUtility>(m, "PowerUtility")
      .def(py::init([](double p) { return PowerUtility{p}; }),
           py::arg("relative_risk_aversion") = 2.0)
      .def_readwrite("relative_risk_aversion", &PowerUtility::relative_risk_aversion)
      .def("is_log", &PowerUtility::is_log);

  py::class_<MarketModel>(m, "MarketModel")
      .def(py::init([](LevyTriplet triplet, double horizon, double initial_wealth,
                       double relative_risk_aversion) {
             return MarketModel{std::move(triplet), horizon, initial_wealth,
                                PowerUtility{relative_risk_aversion}};
           }),
           py::arg("triplet"), py::arg("horizon") = 1.0,
           py::arg("initial_wealth") = 1.0, py::arg("relative_risk_aversion") = 2.0)
      .def_readwrite("triplet", &MarketModel::triplet)
      .def_readwrite("horizon", &MarketModel::horizon)
      .def_readwrite("initial_wealth", &MarketModel::initial_wealth)
      .def_readwrite("utility", &MarketModel::utility);

  py::class_<AdmissibleInterval>(m, "AdmissibleInterval")
      .def_readonly("lower", &AdmissibleInterval::lower)
      .def_readonly("upper", &AdmissibleInterval::upper)
      .def_readonly("lower_closed", &AdmissibleInterval::lower_closed)
      .def_readonly("upper_closed", &AdmissibleInterval::upper_closed)
      .def("contains", &AdmissibleInterval::contains)
      .def("closure_contains", &AdmissibleInterval::closure_contains);

  py::class_<ValidationCheck>(m, "ValidationCheck")
      .def_readonly("name", &ValidationCheck::name)
      .def_readonly("passed", &ValidationCheck::passed)
      .def_readonly("detail", &ValidationCheck::detail);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("checks", &ValidationReport::checks)
      .def("ok", &ValidationReport::ok)
      .def("summary", &ValidationReport::summary);

  m.def("validate_model", &validate_model, py::arg("model"));
  m.def("log_triplet", &log_triplet, py::arg("triplet"),
        "Triplet of log E(L) from the triplet of L");
  m.def("levy_triplet", &levy_triplet, py::arg("log"));
  m.def("cumulant_exponent", &cumulant_exponent, py::arg("log"), py::arg("u"),
        "kappa(u) = log E[exp(u log E(L)_1)]");
  m.def("admissible_set", &admissible_set, py::arg("triplet"), py::arg("utility"));

  m.def("model_from_json", &model_from_json, py::arg("text"));
  m.def("load_model", &load_model, py::arg("path"));

  py::class_<ObjectiveValue>(m, "ObjectiveValue")
      .def_readonly("value", &ObjectiveValue::value)
      .def_readonly("finite", &ObjectiveValue::finite);

  m.def("eval_g", &eval_g, py::arg("model"), py::arg("pi"),
        "Continuous-time criterion g at the constant strategy pi");
  m.def("eval_g_prime", &eval_g_prime, py::arg("model"), py::arg("pi"));
  m.def("expected_terminal_utility", &expected_terminal_utility, py::arg("model"),
        py::arg("pi"));

  py::enum_<Boundary>(m, "Boundary")
      .value("interior", Boundary::interior)
      .value("lower", Boundary::lower)
      .value("upper", Boundary::upper);

  py::enum_<Constraint>(m, "Constraint")
      .value("unconstrained", Constraint::unconstrained)
      .value("unit_interval", Constraint::unit_interval);

  py::class_<OptResult>(m, "OptResult")
      .def_readonly("argmax", &OptResult::argmax)
      .def_readonly("value", &OptResult::value)
      .def_readonly("boundary", &OptResult::boundary)
      .def_readonly("derivative_residual", &OptResult::derivative_residual)
      .def_readonly("iterations", &OptResult::iterations);

  m.def("optimal_continuous", &optimal_continuous, py::arg("model"),
        py::arg("constraint") = Constraint::unconstrained,
        "Maximizer of g over the admissible set or over [0, 1]");

  py::class_<McConfig>(m, "McConfig")
      .def(py::init([](std::int64_t paths, std::uint64_t seed, bool antithetic) {
             return McConfig{paths, seed, antithetic};
           }),
           py::arg("paths") = 100'000, py::arg("seed") = 0,
           py::arg("antithetic") = false)
      .def_readwrite("paths", &McConfig::paths)
      .def_readwrite("seed", &McConfig::seed)
      .def_readwrite("antithetic", &McConfig::antithetic);

  py::class_<QuadConfig>(m, "QuadConfig")
      .def(py::init([](int max_jumps, int gh_nodes) {
             return QuadConfig{max_jumps, gh_nodes};
           }),
           py::arg("max_jumps") = 0, py::arg("gh_nodes") = 64)
      .def_readwrite("max_jumps", &QuadConfig::max_jumps)
      .def_readwrite("gh_nodes", &QuadConfig::gh_nodes);

  py::enum_<GnMethodTag>(m, "GnMethodTag")
      .value("mc", GnMethodTag::mc)
      .value("quadrature", GnMethodTag::quadrature);

  py::class_<GnValue>(m, "GnValue")
      .def_readonly("value", &GnValue::value)
      .def_readonly("std_error", &GnValue::std_error)
      .def_readonly("method", &GnValue::method)
      .def_readonly("note", &GnValue::note);

  m.def("eval_gn", &eval_gn, py::arg("model"), py::arg("periods"), py::arg("pi"),
        py::arg("method") = GnMethod(QuadConfig{}),
        py::call_guard<py::gil_scoped_release>(),
        "N-period criterion gN at the constant fraction pi");
  m.def("eval_gn_prime", &eval_gn_prime, py::arg("model"), py::arg("periods"),
        py::arg("pi"), py::arg("method") = GnMethod(QuadConfig{}),
        py::call_guard<py::gil_scoped_release>());

  py::class_<GnEvaluator>(m, "GnEvaluator")
      .def(py::init<const MarketModel&, int, const GnMethod&>(), py::arg("model"),
           py::arg("periods"), py::arg("method") = GnMethod(QuadConfig{}),
           py::call_guard<py::gil_scoped_release>())
      .def("value", &GnEvaluator::value, py::arg("pi"),
           py::call_guard<py::gil_scoped_release>())
      .def("derivative", &GnEvaluator::derivative, py::arg("pi"),
           py::call_guard<py::gil_scoped_release>())
      .def("periods", &GnEvaluator::periods)
      .def("method_tag", &GnEvaluator::method_tag);

  m.def("optimal_discrete",
        py::overload_cast<const MarketModel&, int, const GnMethod&>(&optimal_discrete),
        py::arg("model"), py::arg("periods"), py::arg("method") = GnMethod(QuadConfig{}),
        py::call_guard<py::gil_scoped_release>(),
        "Maximizer of gN over [0, 1] on shared randomness");
  m.def("optimal_discrete", py::overload_cast<const GnEvaluator&>(&optimal_discrete),
        py::arg("evaluator"), py::call_guard<py::gil_scoped_release>());

  m.def(
      "discrete_value_function",
      [](const MarketModel& model, int periods, double pi, const GnMethod& method) {
        py::gil_scoped_release release;
        return discrete_value_function(model, periods, pi, method);
      },
      py::arg("model"), py::arg("periods"), py::arg("pi"),
      py::arg("method") = GnMethod(QuadConfig{}));
  m.def("discrete_value_from_gn",
        [](const MarketModel& model, int periods, double gn) {
          return discrete_value_from_gn(model, periods, gn);
        },
        py::arg("model"), py::arg("periods"), py::arg("gn"));

  py::class_<MomentEstimate>(m, "MomentEstimate")
      .def_readonly("mean", &MomentEstimate::mean)
      .def_readonly("std_error", &MomentEstimate::std_error);

  py::class_<GapEstimate>(m, "GapEstimate")
      .def_readonly("estimate", &GapEstimate::estimate)
      .def_readonly("std_error", &GapEstimate::std_error);

  py::class_<TerminalSummary>(m, "TerminalSummary")
      .def_readonly("paths", &TerminalSummary::paths)
      .def_readonly("exact_mean", &TerminalSummary::exact_mean)
      .def_readonly("exact_second_moment", &TerminalSummary::exact_second_moment)
      .def_readonly("euler_mean", &TerminalSummary::euler_mean)
      .def_readonly("product_mean", &TerminalSummary::product_mean)
      .def_readonly("product_vs_euler", &TerminalSummary::product_vs_euler)
      .def_readonly("euler_vs_exact", &TerminalSummary::euler_vs_exact)
      .def_readonly("product_vs_exact", &TerminalSummary::product_vs_exact)
      .def_readonly("euler_nonpositive", &TerminalSummary::euler_nonpositive);

  py::class_<L2Gaps>(m, "L2Gaps")
      .def_readonly("product_vs_euler", &L2Gaps::product_vs_euler)
      .def_readonly("euler_vs_exact", &L2Gaps::euler_vs_exact)
      .def_readonly("product_vs_exact", &L2Gaps::product_vs_exact)
      .def_readonly("euler_nonpositive", &L2Gaps::euler_nonpositive);

  m.def("simulate_coupled_terminals", &simulate_coupled_terminals, py::arg("model"),
        py::arg("pi_discrete"), py::arg("pi_continuous"), py::arg("periods"),
        py::arg("mc"), py::call_guard<py::gil_scoped_release>(),
        "Terminal moments and squared gaps of the coupled exact/Euler/product wealths");
  m.def("l2_terminal_gap", &l2_terminal_gap, py::arg("model"), py::arg("pi_discrete"),
        py::arg("pi_continuous"), py::arg("periods"), py::arg("mc"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<ConvergenceRow>(m, "ConvergenceRow")
      .def_readonly("periods", &ConvergenceRow::periods)
      .def_readonly("pi_star_discrete", &ConvergenceRow::pi_star_discrete)
      .def_readonly("gn_at_optimum", &ConvergenceRow::gn_at_optimum)
      .def_readonly("sup_gap", &ConvergenceRow::sup_gap)
      .def_readonly("value_gap", &ConvergenceRow::value_gap)
      .def_readonly("l2_gap", &ConvergenceRow::l2_gap);

  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("pi_star_continuous", &ConvergenceReport::pi_star_continuous)
      .def_readonly("g_at_optimum", &ConvergenceReport::g_at_optimum)
      .def_readonly("continuous_value", &ConvergenceReport::continuous_value)
      .def_readonly("grid_points", &ConvergenceReport::grid_points)
      .def_readonly("method", &ConvergenceReport::method)
      .def_readonly("rows", &ConvergenceReport::rows);

  py::class_<PropertyRow>(m, "PropertyRow")
      .def_readonly("p", &PropertyRow::p)
      .def_readonly("pi_star_continuous", &PropertyRow::pi_star_continuous)
      .def_readonly("pi_star_discrete", &PropertyRow::pi_star_discrete)
      .def_readonly("sign_ok", &PropertyRow::sign_ok)
      .def_readonly("monotone_ok", &PropertyRow::monotone_ok);

  py::class_<PropertyReport>(m, "PropertyReport")
      .def_readonly("periods", &PropertyReport::periods)
      .def_readonly("rows", &PropertyReport::rows)
      .def("all_ok", &PropertyReport::all_ok);

  m.def("run_convergence_study", &run_convergence_study, py::arg("model"),
        py::arg("period_list"), py::arg("grid_points") = 21,
        py::arg("method") = GnMethod(QuadConfig{}),
        py::arg("path_mc") = McConfig{},
        py::call_guard<py::gil_scoped_release>(),
        "Sup-norm, value, and terminal-wealth gaps for each N in period_list");
  m.def("run_property_checks", &run_property_checks, py::arg("model"), py::arg("p_list"),
        py::arg("periods") = 256, py::arg("method") = GnMethod(QuadConfig{}),
        py::call_guard<py::gil_scoped_release>());

  m.def("to_csv", py::overload_cast<const ValidationReport&>(&to_csv));
  m.def("to_csv", py::overload_cast<const ConvergenceReport&>(&to_csv));
  m.def("to_csv", py::overload_cast<const PropertyReport&>(&to_csv));
  m.def("format_double", &format_double, py::arg("value"));
}
