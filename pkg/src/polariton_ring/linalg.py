"""Dense complex linear algebra and Hilbert-space composition.

Everything here works on plain ``numpy`` arrays of ``complex128``. States carry
their tensor-factor structure through :class:`HilbertSpace` /
:class:`DensityMatrix`, which validate the physical invariants (hermiticity,
unit trace, positivity) on construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import prod
from typing import Iterable, Sequence

import numpy as np
import scipy.linalg

HERM_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-8
LSTSQ_COND = 1e-12


class NonHermitianError(ValueError):
    """Input that must be Hermitian is not (within tolerance)."""


class RankDeficientError(ValueError):
    """Least-squares matrix lost full column rank; upstream this signals a
    non-unique steady state."""


def as_complex(a) -> np.ndarray:
    out = np.asarray(a, dtype=complex)
    if not np.all(np.isfinite(out)):
        raise ValueError("matrix contains non-finite entries")
    return out


def hermitize(a: np.ndarray) -> np.ndarray:
    """Hermitian part (a + a†)/2; exact no-op for Hermitian input."""
    return (a + a.conj().T) / 2


def herm_defect(a: np.ndarray) -> float:
    return float(np.abs(a - a.conj().T).max())


@dataclass(frozen=True)
class HilbertSpace:
    """Ordered tensor factors of a composite Hilbert space."""

    factor_dims: tuple[int, ...]

    def __init__(self, factor_dims: Iterable[int]):
        dims = tuple(int(d) for d in factor_dims)
        if not dims or any(d < 1 for d in dims):
            raise ValueError(f"factor dimensions must be positive, got {dims}")
        object.__setattr__(self, "factor_dims", dims)

    @property
    def dim(self) -> int:
        return prod(self.factor_dims)

    @property
    def n_factors(self) -> int:
        return len(self.factor_dims)


@dataclass(frozen=True)
class DensityMatrix:
    """Validated quantum state: Hermitian, unit trace, positive semidefinite."""

    space: HilbertSpace
    mat: np.ndarray = field(repr=False)

    def __post_init__(self):
        mat = as_complex(self.mat)
        d = self.space.dim
        if mat.shape != (d, d):
            raise ValueError(f"state has shape {mat.shape}, space dimension is {d}")
        if herm_defect(mat) > HERM_TOL:
            raise NonHermitianError(f"state not Hermitian: defect {herm_defect(mat):.2e}")
        tr = complex(np.trace(mat))
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"state trace {tr} differs from 1 beyond {TRACE_TOL}")
        lo = float(np.linalg.eigvalsh(hermitize(mat)).min())
        if lo < -PSD_TOL:
            raise ValueError(f"state has negative eigenvalue {lo:.2e}")
        object.__setattr__(self, "mat", mat)
        mat.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.space.dim


def basis_state(space: HilbertSpace, index: int = 0) -> DensityMatrix:
    """Projector onto one computational basis state of the composite space."""
    mat = np.zeros((space.dim, space.dim), dtype=complex)
    mat[index, index] = 1.0
    return DensityMatrix(space, mat)


def kron(a, b) -> np.ndarray:
    """Kronecker product of two dense complex matrices."""
    return np.kron(as_complex(a), as_complex(b))


def kron_all(*ops) -> np.ndarray:
    return reduce(np.kron, (as_complex(op) for op in ops))


def embed(op, site: int, space: HilbertSpace) -> np.ndarray:
    """Lift a single-factor operator to the composite space: I ⊗ … ⊗ op ⊗ … ⊗ I."""
    op = as_complex(op)
    dims = space.factor_dims
    if not 0 <= site < len(dims):
        raise ValueError(f"site {site} out of range for {len(dims)} factors")
    d = dims[site]
    if op.shape != (d, d):
        raise ValueError(f"operator shape {op.shape} does not match factor dim {d}")
    left = np.eye(prod(dims[:site]), dtype=complex)
    right = np.eye(prod(dims[site + 1:]), dtype=complex)
    return kron_all(left, op, right)


def partial_trace_mat(mat: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Partial trace of a raw matrix over the factors not in ``keep``."""
    n = len(dims)
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise ValueError("keep set must be nonempty")
    if keep[0] < 0 or keep[-1] >= n:
        raise ValueError(f"keep indices {keep} out of range for {n} factors")
    t = mat.reshape(*dims, *dims)
    for ax in sorted((i for i in range(n) if i not in keep), reverse=True):
        t = np.trace(t, axis1=ax, axis2=ax + t.ndim // 2)
    d_keep = prod(dims[i] for i in keep)
    return t.reshape(d_keep, d_keep)


def partial_trace(rho: DensityMatrix, keep: Sequence[int]) -> DensityMatrix:
    """Reduced state on the kept factors, in their original order."""
    dims = rho.space.factor_dims
    keep = sorted(set(int(k) for k in keep))
    out = partial_trace_mat(rho.mat, dims, keep)
    return DensityMatrix(HilbertSpace(dims[i] for i in keep), hermitize(out))


def herm_eig(a) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Returns ``(w, v)`` with ``a @ v == v @ diag(w)`` and ``v`` unitary.
    """
    a = as_complex(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError("herm_eig needs a square matrix")
    if herm_defect(a) > HERM_TOL:
        raise NonHermitianError(f"matrix not Hermitian: defect {herm_defect(a):.2e}")
    w, v = np.linalg.eigh(hermitize(a))
    return w, v


def psd_sqrt(a) -> np.ndarray:
    """Hermitian square root of a PSD matrix (tiny negative eigenvalues clamped)."""
    w, v = herm_eig(a)
    if w.min() < -HERM_TOL:
        raise ValueError(f"matrix not PSD: min eigenvalue {w.min():.2e}")
    s = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    return hermitize(s)


def lstsq_solve(m, b) -> tuple[np.ndarray, float]:
    """Least-squares solve min ‖m·x − b‖₂ via column-pivoted QR (LAPACK gelsy).

    Returns the solution together with the achieved residual norm. Raises
    :class:`RankDeficientError` when the numerical rank drops below the column
    count.
    """
    m = as_complex(m)
    b = np.asarray(b, dtype=complex)
    rows, cols = m.shape
    if rows < cols:
        raise ValueError(f"system is underdetermined: {rows} rows < {cols} cols")
    x, _, rank, _ = scipy.linalg.lstsq(m, b, cond=LSTSQ_COND, lapack_driver="gelsy")
    if rank < cols:
        raise RankDeficientError(f"rank {rank} < {cols} columns")
    residual = float(np.linalg.norm(m @ x - b))
    return x, residual
