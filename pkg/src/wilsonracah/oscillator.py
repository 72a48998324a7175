"""Scaled Hermite-oscillator basis on the line and its band matrices.

The basis is restricted to a single parity so that both the kinetic
operator (which couples Hermite indices two apart) and the Hamiltonian
band structure are tridiagonal in the sub-basis index.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .specfun import hermite_function, hermite_function_matrix


class Parity(str, enum.Enum):
    EVEN = "even"
    ODD = "odd"


class MatrixKind(str, enum.Enum):
    KINETIC = "kinetic"
    HAMILTONIAN = "hamiltonian"
    POTENTIAL = "potential"
    OTHER = "other"


@dataclass(frozen=True)
class TridiagonalMatrix:
    """Symmetric tridiagonal operator: one diagonal, one off-diagonal."""

    diag: np.ndarray
    offdiag: np.ndarray
    kind: MatrixKind = MatrixKind.OTHER

    def __post_init__(self) -> None:
        diag = np.asarray(self.diag, dtype=float)
        off = np.asarray(self.offdiag, dtype=float)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", off)
        if off.shape != (max(diag.size - 1, 0),):
            raise ValueError("offdiag must have length len(diag) - 1")
        if not (np.all(np.isfinite(diag)) and np.all(np.isfinite(off))):
            raise ValueError("matrix entries must be finite")

    @property
    def size(self) -> int:
        return self.diag.size

    def subtract(self, other: "TridiagonalMatrix", kind: MatrixKind = MatrixKind.OTHER) -> "TridiagonalMatrix":
        if other.size != self.size:
            raise ValueError("size mismatch")
        return TridiagonalMatrix(
            diag=self.diag - other.diag, offdiag=self.offdiag - other.offdiag, kind=kind
        )

    def __sub__(self, other: "TridiagonalMatrix") -> "TridiagonalMatrix":
        return self.subtract(other)

    def to_dense(self) -> np.ndarray:
        m = np.diag(self.diag)
        idx = np.arange(self.size - 1)
        m[idx, idx + 1] = self.offdiag
        m[idx + 1, idx] = self.offdiag
        return m

    def matvec(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        out = self.diag * v
        if self.size > 1:
            out[:-1] += self.offdiag * v[1:]
            out[1:] += self.offdiag * v[:-1]
        return out


@dataclass(frozen=True)
class OscillatorBasis:
    """Orthonormal oscillator functions sqrt(lam) h_j(lam x) restricted to
    one parity: sub-basis member k uses Hermite index 2k (even) or 2k+1 (odd).
    """

    lam: float
    parity: Parity = Parity.EVEN
    size: int = 30

    def __post_init__(self) -> None:
        if not (self.lam > 0.0):
            raise ValueError("lam must be positive")
        if self.size < 1:
            raise ValueError("size must be positive")
        object.__setattr__(self, "parity", Parity(self.parity))

    def hermite_index(self, k: int) -> int:
        if not (0 <= k < self.size):
            raise IndexError(f"basis index {k} outside 0..{self.size - 1}")
        return 2 * k if self.parity is Parity.EVEN else 2 * k + 1

    def eval(self, k: int, x: float) -> float:
        """phi_k(x) = sqrt(lam) h_{n(k)}(lam x)."""
        return math.sqrt(self.lam) * hermite_function(self.hermite_index(k), self.lam * x)

    def eval_grid(self, xs: np.ndarray) -> np.ndarray:
        """Matrix phi[k, i] = phi_k(xs[i]) for every sub-basis member."""
        xs = np.asarray(xs, dtype=float)
        n_top = self.hermite_index(self.size - 1)
        all_h = hermite_function_matrix(n_top, self.lam * xs)
        start = 0 if self.parity is Parity.EVEN else 1
        return math.sqrt(self.lam) * all_h[start : n_top + 1 : 2]


def kinetic_matrix(basis: OscillatorBasis) -> TridiagonalMatrix:
    """Parity-restricted matrix of -(1/2) d^2/dx^2, tridiagonal in the
    sub-basis index."""
    lam2_4 = 0.25 * basis.lam**2
    n = np.array([basis.hermite_index(k) for k in range(basis.size)], dtype=float)
    diag = lam2_4 * (2.0 * n + 1.0)
    n_up = n[1:]
    off = -lam2_4 * np.sqrt(n_up * (n_up - 1.0))
    return TridiagonalMatrix(diag=diag, offdiag=off, kind=MatrixKind.KINETIC)


def position_sq_matrix(basis: OscillatorBasis) -> TridiagonalMatrix:
    """Parity-restricted matrix of (1/2) lam^4 x^2: same bands as the
    kinetic matrix with the off-diagonal sign flipped."""
    lam2_4 = 0.25 * basis.lam**2
    n = np.array([basis.hermite_index(k) for k in range(basis.size)], dtype=float)
    diag = lam2_4 * (2.0 * n + 1.0)
    n_up = n[1:]
    off = lam2_4 * np.sqrt(n_up * (n_up - 1.0))
    return TridiagonalMatrix(diag=diag, offdiag=off, kind=MatrixKind.OTHER)
