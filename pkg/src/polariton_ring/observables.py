"""Figures of merit: two-qubit concurrence, trace distance, Gibbs reference
states and Bose-Einstein occupations. Temperatures are measured in units of
the mode quantum (ħ = k_B = 1)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DensityMatrix, HilbertSpace, herm_eig, hermitize, psd_sqrt

_SIGMA_Y = np.array([[0.0, -1j], [1j, 0.0]])
_YY = np.kron(_SIGMA_Y, _SIGMA_Y)


@dataclass(frozen=True)
class ThermalSpec:
    """Reservoir temperature T paired with the mode frequency omega."""

    T: float
    omega: float = 1.0

    def __post_init__(self):
        if self.T < 0:
            raise ValueError("temperature must be nonnegative")
        if self.omega <= 0:
            raise ValueError("mode frequency must be positive")


def _require_two_qubits(rho: DensityMatrix) -> None:
    if rho.space.factor_dims != (2, 2):
        raise ValueError(f"need a two-qubit state, got factors {rho.space.factor_dims}")


def concurrence(rho: DensityMatrix) -> float:
    """Wootters concurrence of a two-qubit state.

    C = max(0, λ₁−λ₂−λ₃−λ₄) with λᵢ the descending eigenvalues of
    √(√ρ ρ̃ √ρ), ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y). The conjugate is taken in the
    computational (excitation-number) basis. Only Hermitian decompositions
    are used: √ρ via psd_sqrt, then the eigenvalues of the Hermitian product.
    """
    _require_two_qubits(rho)
    rho_t = _YY @ rho.mat.conj() @ _YY
    s = psd_sqrt(rho.mat)
    herm_prod = hermitize(s @ rho_t @ s)
    w, _ = herm_eig(herm_prod)
    lam = np.sqrt(np.clip(w, 0.0, None))[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def trace_distance(a: DensityMatrix, b: DensityMatrix) -> float:
    """d(a, b) = ½ tr|a − b|, via the eigenvalues of the Hermitian difference."""
    if a.space.factor_dims != b.space.factor_dims:
        raise ValueError(f"states live on different spaces: {a.space.factor_dims} vs {b.space.factor_dims}")
    w, _ = herm_eig(a.mat - b.mat)
    return float(0.5 * np.abs(w).sum())


def gibbs_two_qubit(spec: ThermalSpec) -> DensityMatrix:
    """Two-qubit Gibbs state of the excitation-number Hamiltonian.

    Diagonal with weights ∝ e^{−n ω/T} for total excitation n ∈ {0,1,1,2};
    T = 0 gives the ground-state projector.
    """
    n = np.array([0.0, 1.0, 1.0, 2.0])
    if spec.T == 0:
        w = np.array([1.0, 0.0, 0.0, 0.0])
    else:
        w = np.exp(-n * spec.omega / spec.T)
    w = w / w.sum()
    return DensityMatrix(HilbertSpace((2, 2)), np.diag(w).astype(complex))


def thermal_occupation(spec: ThermalSpec) -> float:
    """Bose-Einstein occupation 1/(e^{ω/T} − 1); zero at T = 0."""
    if spec.T == 0:
        return 0.0
    return float(1.0 / np.expm1(spec.omega / spec.T))


def purity(rho: DensityMatrix) -> float:
    """tr(ρ²) ∈ [1/d, 1]."""
    return float(np.real(np.trace(rho.mat @ rho.mat)))


def population(rho: DensityMatrix, level: int) -> float:
    """Occupation of one computational basis level."""
    return float(rho.mat[level, level].real)
