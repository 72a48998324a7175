"""Hamiltonian and potential matrices in the oscillator basis, symmetric
tridiagonal eigensolvers, and a finite-difference eigenvalue oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .oscillator import MatrixKind, OscillatorBasis, Parity, TridiagonalMatrix, kinetic_matrix
from .wilson import WilsonParams, wilson_orthonormal_sequence


class OperatorDomainError(ValueError):
    """Matrix construction attempted outside its validity domain."""


@dataclass(frozen=True)
class SystemSpec:
    """A concrete quantum system: symmetric Wilson parameters (mu = nu,
    a = b), a parity-restricted oscillator basis, and the truncation size."""

    wilson: WilsonParams
    basis: OscillatorBasis
    size: int

    def __post_init__(self) -> None:
        if self.size < 2:
            raise OperatorDomainError("size must be at least 2")
        if self.wilson.mu != self.wilson.nu or self.wilson.a != self.wilson.b:
            raise OperatorDomainError(
                "the closed-form Hamiltonian band requires mu = nu and a = b"
            )
        if self.basis.size < self.size:
            raise OperatorDomainError("basis must hold at least `size` functions")
        if self.basis.lam != self.wilson.lam:
            raise OperatorDomainError("basis and Wilson length scales disagree")

    @classmethod
    def build(
        cls,
        lam: float,
        mu: float,
        a: float,
        size: int,
        parity: Parity = Parity.EVEN,
    ) -> "SystemSpec":
        p = WilsonParams(mu=mu, nu=mu, a=a, b=a, lam=lam)
        return cls(wilson=p, basis=OscillatorBasis(lam=lam, parity=parity, size=size), size=size)


@dataclass(frozen=True)
class GridFunction:
    """A sampled real function on a strictly increasing grid."""

    xs: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        xs = np.asarray(self.xs, dtype=float)
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "values", values)
        if xs.shape != values.shape or xs.ndim != 1:
            raise ValueError("xs and values must be 1-d arrays of equal length")
        if xs.size >= 2 and not np.all(np.diff(xs) > 0):
            raise ValueError("xs must be strictly increasing")


def hamiltonian_matrix(spec: SystemSpec) -> TridiagonalMatrix:
    """Tridiagonal Hamiltonian band read off the symmetric (mu = nu, a = b)
    energy-polynomial recursion, scaled to energy units by lam^2/2."""
    mu, a, lam = spec.wilson.mu, spec.wilson.a, spec.wilson.lam
    N = spec.size
    lam2 = lam * lam
    diag = np.empty(N)
    off = np.empty(N - 1)
    for n in range(N):
        diag[n] = 0.25 * lam2 * (
            (n + mu + a - 0.5) ** 2 - (mu - 0.5) ** 2 - (a - 0.5) ** 2 + 0.25
        )
        if n < N - 1:
            p = n + mu + a
            denom = p * p - 0.25
            if denom == 0.0:
                raise OperatorDomainError(
                    f"coupling denominator (n+mu+a)^2 - 1/4 vanishes at n = {n}"
                )
            rad = (n + 1.0) * (n + 2.0 * mu) * (n + 2.0 * a) * (n + 2.0 * mu + 2.0 * a - 1.0) / denom
            if rad < 0.0:
                raise OperatorDomainError(
                    f"coupling radicand negative at n = {n}; parameters outside "
                    "the tridiagonal-positivity domain"
                )
            off[n] = -0.125 * lam2 * p * math.sqrt(rad)
    return TridiagonalMatrix(diag=diag, offdiag=off, kind=MatrixKind.HAMILTONIAN)


def potential_matrix(spec: SystemSpec) -> TridiagonalMatrix:
    """Band matrix of the non-harmonic potential part: Hamiltonian minus
    the parity-restricted kinetic band."""
    t = kinetic_matrix(spec.basis)
    t_cut = TridiagonalMatrix(diag=t.diag[: spec.size], offdiag=t.offdiag[: spec.size - 1])
    return hamiltonian_matrix(spec).subtract(t_cut, kind=MatrixKind.POTENTIAL)


@dataclass(frozen=True)
class RecursionCheckReport:
    """Residuals of H w = E w with w the orthonormal polynomial vector."""

    energies: tuple[float, ...]
    max_residual: float
    per_energy: tuple[float, ...]
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance


def recursion_to_hamiltonian_check(
    spec: SystemSpec,
    energies: list[float],
    n_max: int | None = None,
    tolerance: float = 1e-8,
) -> RecursionCheckReport:
    """Substitute w_n = W_n(y^2), y = sqrt(2E)/lam, into the Hamiltonian rows.

    Interior rows (all but the truncated last one) must satisfy the
    three-term identity; residuals are reported relative to max |w|.
    """
    H = hamiltonian_matrix(spec)
    n_max = spec.size if n_max is None else min(n_max, spec.size)
    per_energy = []
    for E in energies:
        if E < 0.0:
            raise OperatorDomainError("diagnostic requires continuum energies E >= 0")
        y_sq = 2.0 * E / spec.wilson.lam ** 2
        w = wilson_orthonormal_sequence(n_max - 1, y_sq, spec.wilson)
        hw = H.diag[:n_max] * w
        hw[:-1] += H.offdiag[: n_max - 1] * w[1:]
        hw[1:] += H.offdiag[: n_max - 1] * w[:-1]
        resid = np.abs(hw[: n_max - 1] - E * w[: n_max - 1])
        per_energy.append(float(resid.max() / np.abs(w).max()))
    return RecursionCheckReport(
        energies=tuple(float(E) for E in energies),
        max_residual=max(per_energy),
        per_energy=tuple(per_energy),
        tolerance=tolerance,
    )


def eigen_spectrum(M: TridiagonalMatrix, count: int) -> np.ndarray:
    """The `count` smallest eigenvalues of a symmetric tridiagonal matrix."""
    if not (1 <= count <= M.size):
        raise ValueError("count must be between 1 and the matrix size")
    if M.size == 1:
        return M.diag.copy()
    vals = eigh_tridiagonal(
        M.diag, M.offdiag, select="i", select_range=(0, count - 1), eigvals_only=True
    )
    return np.asarray(vals)


def fd_schrodinger_spectrum(V: GridFunction, count: int) -> np.ndarray:
    """Lowest eigenvalues of -(1/2) psi'' + V psi = E psi by central
    differences with Dirichlet ends on a uniform grid."""
    xs, vals = V.xs, V.values
    if xs.size < 3:
        raise ValueError("grid too small for a finite-difference interior")
    h = np.diff(xs)
    h0 = h[0]
    if not np.allclose(h, h0, rtol=1e-8, atol=0.0):
        raise ValueError("finite-difference oracle requires a uniform grid")
    inv_h2 = 1.0 / (h0 * h0)
    diag = inv_h2 + vals[1:-1]
    off = np.full(xs.size - 3, -0.5 * inv_h2)
    if not (1 <= count <= diag.size):
        raise ValueError("count exceeds the number of interior grid points")
    return np.asarray(
        eigh_tridiagonal(diag, off, select="i", select_range=(0, count - 1), eigvals_only=True)
    )
