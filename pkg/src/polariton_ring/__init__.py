"""Driven-dissipative cavity arrays: Liouvillian assembly, steady states,
entanglement control and thermalization diagnostics."""

__version__ = "0.1.0"

from .linalg import (
    DensityMatrix,
    HilbertSpace,
    NonHermitianError,
    RankDeficientError,
    basis_state,
    embed,
    herm_eig,
    kron,
    lstsq_solve,
    partial_trace,
    psd_sqrt,
)
from .superop import (
    AssemblyError,
    DissipatorTerm,
    Superoperator,
    assemble,
    commutator_super,
    dissipator_super,
    unvec,
    vec,
)
from .models import (
    EffectiveParams,
    MicroParams,
    ModelSpec,
    build_full_micro,
    build_model,
    build_pair_effective,
    build_pair_thermal,
    build_ring3_effective,
    bundled_models,
    derive_effective,
    fig3_ring_spec,
    fig5_pair_spec,
    model_spec_from_json,
    model_spec_to_json,
    thermal_pair_spec,
    validation_micro_spec,
)
from .steady import (
    SteadyStateError,
    SteadyStateReport,
    evolve,
    evolve_to_steady,
    spectral_gap,
    steady_state,
    steady_state_on,
)
from .observables import (
    ThermalSpec,
    concurrence,
    gibbs_two_qubit,
    population,
    purity,
    thermal_occupation,
    trace_distance,
)
from .optimize import OptimizeReport, multistart_maximize, nelder_mead
from .experiments import (
    Axis,
    ObservableSpec,
    SweepPlan,
    SweepResult,
    optimize_concurrence,
    phase_sweep_plan,
    run_sweep,
    signed_x_grid,
    solve_spec,
    thermal_map,
    validate_effective,
)

__all__ = [name for name in dir() if not name.startswith("_")]
