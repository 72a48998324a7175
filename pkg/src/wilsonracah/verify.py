"""Self-check suites behind the command-line ``verify`` command.

Each suite runs a handful of fast internal-consistency checks (recursion
against definition, orthogonality, band-matrix identities, reconstruction
round trips) and reports measured-versus-threshold per check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import racah as rc
from . import specfun as sf
from . import wilson as wl
from .operators import SystemSpec, eigen_spectrum, hamiltonian_matrix, potential_matrix, recursion_to_hamiltonian_check
from .oscillator import OscillatorBasis, Parity, TridiagonalMatrix, kinetic_matrix, position_sq_matrix
from .quadrature import integrate_to_decay
from .reconstruct import Method, ReconstructionRequest, reconstruct_method1, reconstruct_method2


@dataclass(frozen=True)
class Check:
    name: str
    measured: float
    threshold: float

    @property
    def passed(self) -> bool:
        return bool(self.measured <= self.threshold)


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    checks: tuple[Check, ...]

    @property
    def overall(self) -> bool:
        return bool(all(c.passed for c in self.checks))


def _suite_specfun() -> list[Check]:
    checks = []
    rng = np.random.default_rng(7)
    # functional equation Gamma(z+1) = z Gamma(z)
    err = 0.0
    for _ in range(100):
        z = complex(rng.uniform(0.2, 20.0), rng.uniform(-20.0, 20.0))
        lhs = sf.gamma(z + 1.0)
        rhs = z * sf.gamma(z)
        err = max(err, abs(lhs - rhs) / abs(rhs))
    checks.append(Check("gamma functional equation", err, 1e-11))
    # Pochhammer ratio identities
    err = 0.0
    for _ in range(50):
        a = rng.uniform(0.1, 10.0)
        n = int(rng.integers(1, 30))
        err = max(err, abs(sf.pochhammer(a, n + 1) / sf.pochhammer(a, n) - (n + a)) / (n + a))
        err = max(err, abs(sf.pochhammer(a + 1, n) / sf.pochhammer(a, n) - (n + a) / a) / ((n + a) / a))
    checks.append(Check("pochhammer ratio identities", err, 1e-12))
    # Hermite differential identity by central differences
    err = 0.0
    h = 1e-4
    for _ in range(20):
        n = int(rng.integers(0, 30))
        z = rng.uniform(-4.0, 4.0)
        second = (sf.hermite_function(n, z + h) - 2.0 * sf.hermite_function(n, z) + sf.hermite_function(n, z - h)) / (h * h)
        err = max(err, abs(second + (2.0 * n + 1.0 - z * z) * sf.hermite_function(n, z)))
    checks.append(Check("hermite differential identity", err, 1e-6))
    return checks


def _suite_wilson() -> list[Check]:
    checks = []
    p = wl.WilsonParams(mu=0.8, nu=0.8, a=1.0, b=1.0)
    # the direct terminating sum cancels ~6 digits by degree 10, so the
    # cross-check stops there; the exact-arithmetic comparison lives in
    # the test suite
    err = 0.0
    for y in (0.1, 0.7, 1.5, 3.0, 6.0):
        seq = wl.wilson_sequence(10, y * y, p)
        for n in range(11):
            direct = wl.wilson_tilde(n, y * y, p)
            err = max(err, abs(seq[n] - direct) / max(1.0, abs(direct)))
    checks.append(Check("recursion vs definition", err, 1e-8))
    err = 0.0
    for n in range(4):
        for m in range(n, 4):
            val = integrate_to_decay(
                lambda ys, n=n, m=m: np.array(
                    [
                        wl.weight_continuous(float(y), p)
                        * wl.wilson_orthonormal(n, float(y) ** 2, p)
                        * wl.wilson_orthonormal(m, float(y) ** 2, p)
                        if y > 0
                        else 0.0
                        for y in ys
                    ]
                )
            )
            err = max(err, abs(val - (1.0 if n == m else 0.0)))
    checks.append(Check("continuous orthogonality (n,m <= 3)", err, 1e-6))
    # amplitude/phase consistency, relative: |A| spans ten orders of
    # magnitude on this range
    err = 0.0
    for y in np.linspace(0.1, 10.0, 40):
        direct = wl.scattering_amplitude(float(y), p)
        recon = wl.scattering_amplitude_abs(float(y), p) * np.exp(1j * wl.phase_shift(float(y), p))
        err = max(err, abs(direct - recon) / abs(direct))
    checks.append(Check("amplitude/phase consistency", err, 1e-12))
    return checks


def _suite_racah() -> list[Check]:
    checks = []
    err = 0.0
    for params in (
        rc.RacahParams(alpha=-0.55, beta=1.6, gamma=10.2, delta=0.0, N=8),
        rc.RacahParams(alpha=1.9, beta=0.9, gamma=11.7, delta=0.0, N=8),
    ):
        rho = rc.racah_weights(params)
        R = np.array(
            [[rc.racah_orthonormal(n, m, params) for m in range(params.N + 1)] for n in range(params.N + 1)]
        )
        gram = (R * rho) @ R.T
        err = max(err, float(np.max(np.abs(gram - np.eye(params.N + 1)))))
    checks.append(Check("discrete orthonormality", err, 1e-9))
    err = 0.0
    r = rc.RacahParams(alpha=-0.55, beta=1.6, gamma=10.2, delta=0.0, N=6)
    for m in range(r.N + 1):
        seq = rc.racah_sequence(m, r)
        for n in range(r.N + 1):
            direct = rc.racah_tilde(n, m, r)
            err = max(err, abs(seq[n] - direct) / max(1.0, abs(direct)))
    checks.append(Check("recursion vs definition", err, 1e-9))
    p = wl.WilsonParams(mu=-8.5, nu=9.0, a=9.0, b=9.0)
    back = rc.racah_to_wilson(rc.wilson_to_racah(p, 8), lam=p.lam)
    err = max(abs(back.mu - p.mu), abs(back.nu - p.nu), abs(back.a - p.a), abs(back.b - p.b))
    checks.append(Check("parameter-map roundtrip", err, 1e-14))
    return checks


def _suite_matrices() -> list[Check]:
    checks = []
    spec = SystemSpec.build(lam=0.2, mu=0.8, a=1.0, size=30)
    H = hamiltonian_matrix(spec)
    checks.append(Check("hamiltonian diagonal seed", abs(H.diag[0] - 0.016), 1e-15))
    rng = np.random.default_rng(11)
    rep = recursion_to_hamiltonian_check(spec, list(rng.uniform(0.001, 1.0, size=10)))
    checks.append(Check("polynomial eigenvector residuals", rep.max_residual, 1e-8))
    basis = spec.basis
    osc = kinetic_matrix(basis).diag + position_sq_matrix(basis).diag
    expect = basis.lam**2 * (np.array([basis.hermite_index(k) for k in range(basis.size)]) + 0.5)
    checks.append(Check("oscillator diagonal identity", float(np.max(np.abs(osc - expect))), 1e-14))
    ladder = TridiagonalMatrix(
        diag=kinetic_matrix(basis).diag + position_sq_matrix(basis).diag,
        offdiag=kinetic_matrix(basis).offdiag + position_sq_matrix(basis).offdiag,
    )
    evs = eigen_spectrum(ladder, 3)
    checks.append(
        Check("oscillator eigenvalues", float(np.max(np.abs(evs - expect[:3]))), 1e-12)
    )
    return checks


def _suite_reconstruction() -> list[Check]:
    checks = []
    spec = SystemSpec.build(lam=0.2, mu=0.8, a=1.0, size=30)
    c = 0.37
    ident = TridiagonalMatrix(diag=np.full(30, c), offdiag=np.zeros(29))
    req1 = ReconstructionRequest(spec=spec, method=Method.ONE, matrix=ident)
    req2 = ReconstructionRequest(spec=spec, method=Method.TWO, matrix=ident)
    c1, c2 = reconstruct_method1(req1), reconstruct_method2(req2)
    err = max(
        float(np.max(np.abs(c1.values[c1.mask] - c))),
        float(np.max(np.abs(c2.values[c2.mask] - c))),
    )
    checks.append(Check("identity-matrix round trip", err, 1e-12))
    # column-0 inversion of the x^2 band is exact: x^2 phi_0 lies in the
    # span of phi_0 and phi_1 of the even sub-basis
    xsq = position_sq_matrix(spec.basis)
    lam = spec.wilson.lam
    grid = np.linspace(-3.0 / lam, 3.0 / lam, 201)
    c2x = reconstruct_method2(
        ReconstructionRequest(spec=spec, method=Method.TWO, matrix=xsq, grid=grid)
    )
    target = 0.5 * lam**4 * grid**2
    checks.append(
        Check(
            "oscillator column inversion",
            float(np.max(np.abs(c2x.values[c2x.mask] - target[c2x.mask]))),
            1e-12,
        )
    )
    r1 = reconstruct_method1(ReconstructionRequest(spec=spec, method=Method.ONE))
    checks.append(
        Check("method-1 mask coverage", float(np.sum(~r1.mask)), 0.0)
    )
    return checks


_SUITES = {
    "specfun": _suite_specfun,
    "wilson": _suite_wilson,
    "racah": _suite_racah,
    "matrices": _suite_matrices,
    "reconstruction": _suite_reconstruction,
}


def run_suite(name: str) -> VerifyReport:
    if name == "all":
        checks: list[Check] = []
        for fn in _SUITES.values():
            checks.extend(fn())
        return VerifyReport(suite="all", checks=tuple(checks))
    if name not in _SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(_SUITES)} or 'all'")
    return VerifyReport(suite=name, checks=tuple(_SUITES[name]()))
