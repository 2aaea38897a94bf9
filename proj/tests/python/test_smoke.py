import math
from pathlib import Path

import pytest

import levyopt

CONFIGS = Path(__file__).resolve().parents[2] / "configs"


def merton():
    return levyopt.MarketModel(
        triplet=levyopt.LevyTriplet(drift=0.04, diffusion=0.04),
        horizon=1.0,
        initial_wealth=1.0,
        relative_risk_aversion=2.0,
    )


def test_continuous_merton_anchor():
    result = levyopt.optimal_continuous(merton())
    assert result.argmax == pytest.approx(0.5, abs=1e-10)
    assert result.value == pytest.approx(0.01, abs=1e-12)
    assert result.boundary == levyopt.Boundary.interior


def test_load_model_and_validate():
    model = levyopt.load_model(str(CONFIGS / "merton.json"))
    report = levyopt.validate_model(model)
    assert report.ok()
    assert any(check.name == "positive_stock" for check in report.checks)

    one_sided = levyopt.MarketModel(
        triplet=levyopt.LevyTriplet(
            drift=0.0, diffusion=0.0, atoms=[levyopt.JumpAtom(size=0.5, intensity=1.0)]
        )
    )
    assert not levyopt.validate_model(one_sided).ok()


def test_model_from_json_rejects_unknown_key():
    with pytest.raises(levyopt.ConfigError):
        levyopt.model_from_json('{"b": 0.0, "c": 1.0, "atoms": [], "T": 1.0, "x0": 1.0, "p": 2.0, "q": 3}')


def test_cumulant_identities():
    log = levyopt.log_triplet(merton().triplet)
    assert levyopt.cumulant_exponent(log, 0.0) == 0.0
    assert levyopt.cumulant_exponent(log, 1.0) == pytest.approx(0.04, rel=1e-12)


def test_gn_closed_form_at_one():
    # At pi = 1 the N-period criterion has the closed form
    # expm1(kappa(1-p) dt) / ((1-p) dt); here kappa(-1) = 0.06.
    model = levyopt.load_model(str(CONFIGS / "two_atom.json"))
    dt = model.horizon / 8
    expected = math.expm1(0.06 * dt) / (-dt)
    result = levyopt.eval_gn(model, 8, 1.0, levyopt.QuadConfig())
    assert result.method == levyopt.GnMethodTag.quadrature
    assert result.std_error == 0.0
    assert result.value == pytest.approx(expected, rel=1e-9)


def test_discrete_matches_continuous_on_merton():
    result = levyopt.optimal_discrete(merton(), 16, levyopt.QuadConfig())
    assert result.argmax == pytest.approx(0.5, abs=1e-9)


def test_monte_carlo_agrees_with_quadrature():
    model = merton()
    quad = levyopt.eval_gn(model, 4, 0.6, levyopt.QuadConfig())
    mc = levyopt.eval_gn(model, 4, 0.6, levyopt.McConfig(paths=200_000, seed=7))
    assert mc.std_error > 0.0
    assert abs(mc.value - quad.value) <= 4.0 * mc.std_error


def test_simulation_moment():
    summary = levyopt.simulate_coupled_terminals(merton(), 1.0, 1.0, 4, levyopt.McConfig(paths=50_000, seed=3))
    target = math.exp(0.04)
    assert abs(summary.exact_mean.mean - target) <= 4.0 * summary.exact_mean.std_error


def test_unbounded_problem_raises():
    drift_only = levyopt.MarketModel(triplet=levyopt.LevyTriplet(drift=0.04, diffusion=0.0))
    with pytest.raises(levyopt.UnboundedProblemError):
        levyopt.optimal_continuous(drift_only, levyopt.Constraint.unconstrained)


def test_convergence_study_rows():
    report = levyopt.run_convergence_study(
        merton(), [4, 16], grid_points=11, method=levyopt.QuadConfig(),
        path_mc=levyopt.McConfig(paths=5_000, seed=1),
    )
    assert [row.periods for row in report.rows] == [4, 16]
    assert report.rows[1].sup_gap <= report.rows[0].sup_gap
    csv = levyopt.to_csv(report)
    assert csv.splitlines()[0] == "N,pi_star_N,gN_at_pi_star_N,sup_gap,value_gap,l2_gap"
