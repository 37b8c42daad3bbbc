import numpy as np
import pytest

from polariton_ring.experiments import (
    Axis,
    ObservableSpec,
    SweepError,
    SweepPlan,
    central_difference,
    count_interior_maxima,
    cross_section_concurrence,
    fwhm,
    optimize_concurrence,
    phase_sweep_plan,
    run_sweep,
    signed_x_grid,
    smooth3,
    solve_spec,
    thermal_map,
    validate_effective,
)
from polariton_ring.models import (
    MicroParams,
    apply_path,
    fig3_ring_spec,
    fig5_pair_spec,
    validation_micro_spec,
)
from polariton_ring.observables import concurrence


def small_pair_plan(count=3):
    grid = tuple(np.linspace(0.0, 2 * np.pi, count))
    return SweepPlan(
        model=fig5_pair_spec(),
        axes=(Axis("x[0].phase", grid), Axis("x[2].phase", grid)),
        observables=(
            ObservableSpec("concurrence", sites=(0, 1)),
            ObservableSpec("purity"),
            ObservableSpec("population", sites=(0,), level=0),
        ),
    )


def test_single_point_sweep_equals_solve():
    plan = SweepPlan(
        model=fig5_pair_spec(),
        axes=(Axis("x[0].phase", (np.pi,)),),
        observables=(ObservableSpec("concurrence", sites=(0, 1)),),
    )
    result = run_sweep(plan)
    assert len(result.rows) == 1
    _, rho = solve_spec(apply_path(fig5_pair_spec(), "x[0].phase", np.pi))
    assert result.rows[0][1] == pytest.approx(concurrence(rho), abs=1e-14)


def test_sweep_shape_and_header():
    plan = small_pair_plan()
    result = run_sweep(plan)
    assert result.header == ["x[0].phase", "x[2].phase", "concurrence_0_1", "purity", "pop_0_0"]
    assert len(result.rows) == 9


def test_sweep_deterministic_across_workers():
    plan = small_pair_plan()
    a = run_sweep(plan, workers=1)
    b = run_sweep(plan, workers=4)
    assert a.to_csv() == b.to_csv()
    c = run_sweep(plan, workers=1)
    assert a.to_csv() == c.to_csv()


def test_sweep_csv_format():
    plan = SweepPlan(
        model=fig5_pair_spec(),
        axes=(Axis("x[0].phase", (0.0, np.pi)),),
        observables=(ObservableSpec("concurrence", sites=(0, 1)),),
    )
    csv = run_sweep(plan).to_csv()
    lines = csv.strip().split("\n")
    assert lines[0] == "x[0].phase,concurrence_0_1"
    assert len(lines) == 3
    # 12 significant digits
    assert "3.14159265359" in lines[2]


def test_phase_periodicity():
    for spec, sites in ((fig5_pair_spec(), (0, 1)), (fig3_ring_spec(), (1, 2))):
        obs = ObservableSpec("concurrence", sites=sites)
        base = apply_path(spec, "x[2].phase", 0.7)
        _, rho1 = solve_spec(apply_path(base, "x[0].phase", 0.9))
        _, rho2 = solve_spec(apply_path(base, "x[0].phase", 0.9 + 2 * np.pi))
        assert abs(obs.evaluate(rho1) - obs.evaluate(rho2)) <= 1e-10


def test_axis_validation():
    with pytest.raises(ValueError):
        Axis("x[0].phase", ())
    with pytest.raises(ValueError):
        Axis("x[0].phase", (1.0, 1.0))
    with pytest.raises(ValueError):
        SweepPlan(
            model=fig5_pair_spec(),
            axes=(Axis("bogus[0]", (0.0, 1.0)),),
            observables=(ObservableSpec("purity"),),
        )


def test_observable_spec_validation():
    with pytest.raises(ValueError):
        ObservableSpec("concurrence", sites=(0,))
    with pytest.raises(ValueError):
        ObservableSpec("population", sites=(0, 1))
    with pytest.raises(ValueError):
        ObservableSpec("trace_distance_to_gibbs")
    with pytest.raises(ValueError):
        ObservableSpec("wiggle")


def test_smooth3_and_peak_count():
    flat = np.zeros(9)
    assert count_interior_maxima(flat) == 0
    humps = np.array([0, 1, 2, 1, 0, 1, 3, 1, 0], dtype=float)
    assert count_interior_maxima(humps, smooth=False) == 2
    assert count_interior_maxima(humps) == 2
    sm = smooth3(np.array([0.0, 3.0, 0.0]))
    assert sm[0] == 0.0 and sm[-1] == 0.0 and sm[1] == 1.0


def test_central_difference_linear_exact():
    xs = np.linspace(0, 1, 11)
    vals = 3.0 * xs + 1.0
    dd = central_difference(vals, xs)
    assert np.abs(dd - 3.0).max() <= 1e-12


def test_fwhm_triangle():
    xs = np.linspace(0, 2, 21)
    vals = np.maximum(0.0, 1.0 - np.abs(xs - 1.0))
    assert fwhm(xs, vals) == pytest.approx(1.0, abs=1e-12)


def test_thermal_map_columns_and_flag():
    with pytest.warns(UserWarning, match="validity"):
        result = thermal_map((-1.0, 0.0, 1.0), (0.05, 0.2))
    assert result.header == ["x", "T_R", "d", "abs_dd_dx", "t_in_range"]
    assert len(result.rows) == 6
    flags = result.column("t_in_range")
    assert set(flags.tolist()) == {0.0, 1.0}
    d = result.column("d")
    # even in x: first and last x rows agree at equal T
    assert d[0] == pytest.approx(d[4], abs=1e-12)


def test_thermal_map_derivative_vs_richardson():
    # central difference at step h against the Richardson estimate from h and h/2
    y, z, T = 15.0, 1.01, 0.05
    from polariton_ring.models import thermal_pair_spec
    from polariton_ring.observables import ThermalSpec, gibbs_two_qubit, thermal_occupation, trace_distance

    n_p = thermal_occupation(ThermalSpec(T=T))
    gibbs = gibbs_two_qubit(ThermalSpec(T=T))

    def d(x):
        _, rho = solve_spec(thermal_pair_spec(x=x, n_p=n_p, y=y, z=z))
        return trace_distance(rho, gibbs)

    h = 0.2
    for x0 in (1.0, 2.5, 4.0):
        dh = (d(x0 + h) - d(x0 - h)) / (2 * h)
        dh2 = (d(x0 + h / 2) - d(x0 - h / 2)) / h
        richardson = (4 * dh2 - dh) / 3
        assert dh == pytest.approx(richardson, rel=0.05)


def test_validate_effective_zero_drive():
    # undriven: both sides settle on the ground state (larger gamma keeps the
    # time evolution short)
    p = validation_micro_spec(j_over_kappa=0.1, gamma_p=0.05).params
    from dataclasses import replace

    quiet = replace(p, alpha=(0.0,))
    assert validate_effective(quiet) <= 1e-8


def test_validate_effective_regime_guard():
    with pytest.warns(UserWarning):
        p = MicroParams(
            n_sites=2, J=(0.5,), kappa=1.0, gamma_p=0.01, alpha=(0.1,), phi=(0.0,),
            omega_c=(1.0,), omega_p=(1.0, 1.0), omega_d=1.0,
        )
    with pytest.raises(ValueError, match="regime"):
        validate_effective(p)


def test_optimize_concurrence_collapsed_bounds():
    spec = fig5_pair_spec()  # already at the optimum phases
    report = optimize_concurrence(spec, ["x[1].re"], [(0.0, 0.0)], budget=20)
    _, rho = solve_spec(spec)
    assert report.best_value == pytest.approx(concurrence(rho), abs=1e-12)


def test_optimize_concurrence_shared_paths():
    # one free parameter driving both end-guide hoppings of the ring
    spec = fig3_ring_spec()
    base = apply_path(apply_path(spec, "y[0]", 0.0), "y[2]", 0.0)
    report = optimize_concurrence(
        base, [("y[0]", "y[2]")], [(0.0, 15.0)], budget=120, sites=(1, 2)
    )
    assert report.best_value == pytest.approx(0.417, abs=0.01)
    assert report.best_params["y[0]|y[2]"] == pytest.approx(15.0, abs=0.5)


def test_optimize_pair_phases_only():
    # phases free, everything else at the published operating point
    spec = fig5_pair_spec(phi1=0.0, phi3=0.0)
    report = optimize_concurrence(
        spec, ["x[0].phase", "x[2].phase"], [(0.0, 2 * np.pi), (0.0, 2 * np.pi)], budget=2000
    )
    assert report.best_value == pytest.approx(0.470, abs=0.005)
    diff = (report.best_params["x[0].phase"] - report.best_params["x[2].phase"]) % (2 * np.pi)
    assert diff == pytest.approx(np.pi, abs=0.2)


def test_optimize_ring_finds_operating_point():
    # shared drive magnitude, free phases and shared end-guide hopping: the
    # optimizer should land on opposite phases with concurrence >= 0.40
    base = fig3_ring_spec(phi1=0.0, phi3=0.0)
    for p in ("y[0]", "y[1]", "y[2]"):
        base = apply_path(base, p, 0.0)
    report = optimize_concurrence(
        base,
        [("x[0].abs", "x[2].abs"), "x[0].phase", "x[2].phase", ("y[0]", "y[2]")],
        [(0.5, 3.0), (0.0, 2 * np.pi), (0.0, 2 * np.pi), (-15.0, 15.0)],
        budget=3000,
        sites=(1, 2),
    )
    assert report.best_value >= 0.40
    diff = (report.best_params["x[0].phase"] - report.best_params["x[2].phase"]) % (2 * np.pi)
    assert diff == pytest.approx(np.pi, abs=0.2)


def test_three_guide_pair_matches_micro():
    # eliminated three-guide pair vs the full model, both via the linear
    # solve (solver equivalence is covered elsewhere); antisymmetric end drives
    from polariton_ring.models import ModelSpec, build_model, build_pair_effective, derive_effective
    from polariton_ring.observables import trace_distance
    from polariton_ring.steady import steady_state_on
    from polariton_ring.superop import assemble
    from polariton_ring.linalg import partial_trace

    p = MicroParams(
        n_sites=2, J=(0.1, 0.1, 0.1), kappa=1.0, gamma_p=0.0,
        alpha=(0.05, 0.0, 0.05), phi=(0.0, 0.0, np.pi),
        omega_c=(1.0, 1.0, 1.0), omega_p=(1.0, 1.0), omega_d=1.0, n_boson=2,
    )
    space, h, terms = build_model(ModelSpec("micro", p))
    marg = partial_trace(steady_state_on(assemble(h, terms), space).rho, [0, 1])
    eff_space, eff_h, eff_terms = build_pair_effective(derive_effective(p))
    eff = steady_state_on(assemble(eff_h, eff_terms), eff_space)
    assert trace_distance(marg, eff.rho) <= 0.05


def test_optimize_concurrence_validates_paths():
    with pytest.raises(ValueError):
        optimize_concurrence(fig5_pair_spec(), ["q[0]"], [(0, 1)], budget=10)
    with pytest.raises(ValueError):
        optimize_concurrence(fig5_pair_spec(), ["x[0].re"], [(0, 1), (0, 1)], budget=10)


def test_sweep_error_carries_coordinates():
    # drive the thermal model with a negative x through a sweep: builder rejects it
    from polariton_ring.models import thermal_pair_spec

    plan = SweepPlan(
        model=thermal_pair_spec(x=1.0),
        axes=(Axis("x[0].re", (-2.0, -1.0)),),
        observables=(ObservableSpec("purity"),),
    )
    with pytest.raises(SweepError, match="x\\[0\\].re"):
        run_sweep(plan)


def test_phase_sweep_plan_defaults():
    plan = phase_sweep_plan(fig3_ring_spec(), count=5)
    assert plan.shape == (5, 5)
    assert plan.observables[0].sites == (1, 2)
    plan2 = phase_sweep_plan(fig5_pair_spec(), count=5)
    assert plan2.observables[0].sites == (0, 1)


def test_signed_x_grid_symmetric():
    grid = signed_x_grid(10.0, 101)
    assert len(grid) == 101
    assert grid[0] == -10.0 and grid[-1] == 10.0
    assert min(abs(v) for v in grid) == 0.0
