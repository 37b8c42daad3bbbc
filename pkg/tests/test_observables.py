import numpy as np
import pytest

from conftest import random_density_mat, random_unitary
from polariton_ring.linalg import DensityMatrix, HilbertSpace, kron, partial_trace
from polariton_ring.observables import (
    ThermalSpec,
    concurrence,
    gibbs_two_qubit,
    population,
    purity,
    thermal_occupation,
    trace_distance,
)

TWO_QUBITS = HilbertSpace((2, 2))


def state(mat):
    return DensityMatrix(TWO_QUBITS, np.asarray(mat, dtype=complex))


def bell():
    v = np.zeros(4)
    v[0] = v[3] = 1 / np.sqrt(2)
    return state(np.outer(v, v))


def concurrence_oracle(rho_mat):
    """Independent implementation via the non-Hermitian product rho @ rho_tilde."""
    sy = np.array([[0, -1j], [1j, 0]])
    yy = np.kron(sy, sy)
    rho_t = yy @ rho_mat.conj() @ yy
    evals = np.linalg.eigvals(rho_mat @ rho_t)
    lam = np.sqrt(np.abs(np.sort(evals.real)))[::-1]
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


def test_concurrence_bell_state():
    assert concurrence(bell()) == pytest.approx(1.0, abs=1e-10)


def test_concurrence_product_state():
    assert concurrence(state(np.diag([1.0, 0, 0, 0]))) == 0.0


def test_concurrence_werner_state():
    p = 0.8
    mat = p * bell().mat + (1 - p) * np.eye(4) / 4
    assert concurrence(state(mat)) == pytest.approx((3 * p - 1) / 2, abs=1e-10)


def test_concurrence_bounds_on_random_states(rng):
    for _ in range(1000):
        c = concurrence(state(random_density_mat(rng, 4)))
        assert 0.0 <= c <= 1.0 + 1e-12


def test_concurrence_local_unitary_invariance(rng):
    for _ in range(100):
        rho = random_density_mat(rng, 4)
        u = kron(random_unitary(rng, 2), random_unitary(rng, 2))
        c1 = concurrence(state(rho))
        c2 = concurrence(state(u @ rho @ u.conj().T))
        assert abs(c1 - c2) <= 1e-8


def test_concurrence_matches_independent_oracle(rng):
    for _ in range(200):
        rho = random_density_mat(rng, 4)
        assert concurrence(state(rho)) == pytest.approx(concurrence_oracle(rho), abs=1e-8)


def test_concurrence_needs_two_qubits(rng):
    rho = DensityMatrix(HilbertSpace((4,)), random_density_mat(rng, 4))
    with pytest.raises(ValueError):
        concurrence(rho)


def test_trace_distance_trivial_cases():
    a = state(np.diag([0.75, 0.25, 0, 0]))
    assert trace_distance(a, a) == 0.0
    zero = DensityMatrix(HilbertSpace((2,)), np.diag([1.0, 0.0]).astype(complex))
    one = DensityMatrix(HilbertSpace((2,)), np.diag([0.0, 1.0]).astype(complex))
    assert trace_distance(zero, one) == pytest.approx(1.0, abs=1e-14)
    half = DensityMatrix(HilbertSpace((2,)), np.diag([0.5, 0.5]).astype(complex))
    quarter = DensityMatrix(HilbertSpace((2,)), np.diag([0.75, 0.25]).astype(complex))
    assert trace_distance(quarter, half) == pytest.approx(0.25, abs=1e-14)


def test_trace_distance_metric_axioms(rng):
    space = HilbertSpace((4,))
    for _ in range(200):
        a = DensityMatrix(space, random_density_mat(rng, 4))
        b = DensityMatrix(space, random_density_mat(rng, 4))
        c = DensityMatrix(space, random_density_mat(rng, 4))
        dab, dba = trace_distance(a, b), trace_distance(b, a)
        assert abs(dab - dba) <= 1e-12
        assert dab >= 0
        assert trace_distance(a, c) <= dab + trace_distance(b, c) + 1e-12
    a = DensityMatrix(space, random_density_mat(rng, 4))
    assert trace_distance(a, a) <= 1e-10


def test_trace_distance_contracts_under_partial_trace(rng):
    for _ in range(50):
        a = DensityMatrix(TWO_QUBITS, random_density_mat(rng, 4))
        b = DensityMatrix(TWO_QUBITS, random_density_mat(rng, 4))
        full = trace_distance(a, b)
        reduced = trace_distance(partial_trace(a, [0]), partial_trace(b, [0]))
        assert reduced <= full + 1e-12


def test_trace_distance_space_mismatch(rng):
    a = DensityMatrix(TWO_QUBITS, random_density_mat(rng, 4))
    b = DensityMatrix(HilbertSpace((4,)), random_density_mat(rng, 4))
    with pytest.raises(ValueError):
        trace_distance(a, b)


def test_gibbs_zero_temperature():
    rho = gibbs_two_qubit(ThermalSpec(T=0.0))
    assert rho.mat[0, 0] == 1.0


def test_gibbs_infinite_temperature_limit():
    rho = gibbs_two_qubit(ThermalSpec(T=1e9))
    assert np.abs(rho.mat - np.eye(4) / 4).max() <= 1e-9


def test_gibbs_ln2_weights():
    rho = gibbs_two_qubit(ThermalSpec(T=1.0 / np.log(2.0)))
    want = np.diag([4 / 9, 2 / 9, 2 / 9, 1 / 9])
    assert np.abs(rho.mat - want).max() <= 1e-12


def test_gibbs_is_diagonal():
    rho = gibbs_two_qubit(ThermalSpec(T=0.3))
    assert np.abs(rho.mat - np.diag(np.diag(rho.mat))).max() == 0.0


def test_thermal_occupation_values():
    assert thermal_occupation(ThermalSpec(T=0.0)) == 0.0
    assert thermal_occupation(ThermalSpec(T=1.0 / np.log(2.0))) == pytest.approx(1.0, rel=1e-12)
    assert thermal_occupation(ThermalSpec(T=1.0 / np.log(1.1))) == pytest.approx(10.0, rel=1e-12)


def test_thermal_spec_validation():
    with pytest.raises(ValueError):
        ThermalSpec(T=-1.0)
    with pytest.raises(ValueError):
        ThermalSpec(T=1.0, omega=0.0)


def test_purity_and_population():
    rho = state(np.diag([0.5, 0.5, 0.0, 0.0]))
    assert purity(rho) == pytest.approx(0.5)
    assert population(rho, 0) == pytest.approx(0.5)
    assert population(rho, 3) == 0.0
