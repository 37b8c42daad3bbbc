"""Liouvillian superoperators on column-stacked density matrices.

Vectorization convention: ``vec`` stacks columns, so vec(A X B) =
(Bᵀ ⊗ A) vec(X). Every formula below is written for that ordering.

Dissipator convention: a :class:`DissipatorTerm` (left=c_i, right=c_j,
weight=w) generates  w · (2 c_i ρ c_j† − c_j† c_i ρ − ρ c_j† c_i),
i.e. the factor 2 sits inside and the rate outside. The usual Lindblad
D[c] at rate κ therefore enters with weight κ/2. Cross terms (left ≠ right)
are single terms; emitting the Hermitian partner pair is the model
builder's job, not the assembler's.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import NonHermitianError, as_complex, herm_defect, hermitize

TRACE_PRESERVATION_TOL = 1e-10


class AssemblyError(ValueError):
    """Assembled superoperator failed a structural check."""


def vec(m: np.ndarray) -> np.ndarray:
    """Column-stacking vectorization."""
    return np.asarray(m, dtype=complex).flatten(order="F")


def unvec(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    d = int(round(np.sqrt(v.size)))
    if d * d != v.size:
        raise ValueError(f"vector of length {v.size} is not a vectorized square matrix")
    return v.reshape((d, d), order="F")


@dataclass(frozen=True)
class Superoperator:
    """Linear map on vectorized density matrices, stored densely (d² × d²)."""

    dim: int
    mat: np.ndarray = field(repr=False)

    def __post_init__(self):
        mat = as_complex(self.mat)
        d2 = self.dim * self.dim
        if mat.shape != (d2, d2):
            raise ValueError(f"superoperator shape {mat.shape} != ({d2}, {d2})")
        object.__setattr__(self, "mat", mat)
        mat.setflags(write=False)

    def apply(self, rho_mat: np.ndarray) -> np.ndarray:
        """Action on a density matrix given and returned in matrix form."""
        return unvec(self.mat @ vec(rho_mat))

    def __add__(self, other: "Superoperator") -> "Superoperator":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return Superoperator(self.dim, self.mat + other.mat)

    def norm_inf(self) -> float:
        """Max absolute row sum; cheap upper bound on the spectral radius."""
        return float(np.abs(self.mat).sum(axis=1).max())

    def trace_defect(self) -> float:
        """Max entry of vec(I)† · mat; zero for trace-preserving generators."""
        d = self.dim
        diag_idx = np.arange(d) * (d + 1)
        return float(np.abs(self.mat[diag_idx, :].sum(axis=0)).max())

    def hermiticity_defect(self, n_probes: int = 20, seed: int = 1234) -> float:
        """Largest hermiticity violation of L(ρ) over random Hermitian probes."""
        rng = np.random.default_rng(seed)
        worst = 0.0
        for _ in range(n_probes):
            g = rng.normal(size=(self.dim, self.dim)) + 1j * rng.normal(size=(self.dim, self.dim))
            probe = hermitize(g)
            probe /= max(1.0, float(np.abs(probe).max()))
            worst = max(worst, herm_defect(self.apply(probe)))
        return worst


@dataclass(frozen=True)
class DissipatorTerm:
    """One mixing term of the master equation (see module docstring)."""

    left: np.ndarray = field(repr=False)
    right: np.ndarray = field(repr=False)
    weight: float

    def __post_init__(self):
        left = as_complex(self.left)
        right = as_complex(self.right)
        if left.shape != right.shape or left.shape[0] != left.shape[1]:
            raise ValueError(f"jump operators must be square and matching, got {left.shape}, {right.shape}")
        w = float(self.weight)
        if not np.isfinite(w):
            raise ValueError("weight must be finite")
        if self.is_diagonal(left, right) and w < 0:
            raise ValueError(f"diagonal term must have nonnegative weight, got {w}")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "weight", w)

    @staticmethod
    def is_diagonal(left: np.ndarray, right: np.ndarray) -> bool:
        return bool(np.array_equal(left, right))

    def sort_key(self) -> tuple:
        return (self.weight, self.left.tobytes(), self.right.tobytes())


def zero_super(dim: int) -> Superoperator:
    return Superoperator(dim, np.zeros((dim * dim, dim * dim), dtype=complex))


def commutator_super(h) -> Superoperator:
    """Superoperator for ρ ↦ −i[h, ρ]; h must be Hermitian."""
    h = as_complex(h)
    if herm_defect(h) > 1e-10:
        raise NonHermitianError(f"Hamiltonian not Hermitian: defect {herm_defect(h):.2e}")
    d = h.shape[0]
    eye = np.eye(d, dtype=complex)
    return Superoperator(d, -1j * (np.kron(eye, h) - np.kron(h.T, eye)))


def dissipator_super(term: DissipatorTerm) -> Superoperator:
    """Superoperator for ρ ↦ w (2 LρR† − R†Lρ − ρR†L)."""
    left, right, w = term.left, term.right, term.weight
    d = left.shape[0]
    eye = np.eye(d, dtype=complex)
    rl = right.conj().T @ left
    mat = w * (2.0 * np.kron(right.conj(), left) - np.kron(eye, rl) - np.kron(rl.T, eye))
    return Superoperator(d, mat)


def assemble(h, terms: list[DissipatorTerm]) -> Superoperator:
    """Full generator: commutator of h plus the sum of all dissipator terms.

    Terms are summed in a canonical sorted order so repeated assembly is
    bit-stable. Trace preservation is asserted after assembly.
    """
    h = as_complex(h)
    d = h.shape[0]
    total = commutator_super(h)
    acc = zero_super(d)
    for term in sorted(terms, key=DissipatorTerm.sort_key):
        if term.left.shape[0] != d:
            raise ValueError(f"term dimension {term.left.shape[0]} != Hamiltonian dimension {d}")
        acc = acc + dissipator_super(term)
    total = total + acc
    defect = total.trace_defect()
    if defect > TRACE_PRESERVATION_TOL:
        raise AssemblyError(
            f"assembled Liouvillian is not trace preserving (defect {defect:.2e}); "
            "check term weights/units"
        )
    return total
