"""Discrete Racah polynomial family on the finite grid m = 0..N.

Evaluation, three-term recursion, the normalized discrete weight, the
orthonormal version, and the parameter maps to and from the continuous
Wilson family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import HypSeries, hyp4f3_terminating, pochhammer_log
from .wilson import WilsonParams


class RacahDomainError(ValueError):
    """Parameters outside the validity domain of the requested operation."""


@dataclass(frozen=True)
class RacahParams:
    """Discrete-family parameters (alpha, beta, gamma, delta, N).

    delta is carried as metadata (it equals mu - b under the Wilson map)
    and does not enter the polynomial kernel, which depends on alpha,
    beta, gamma and N only.
    """

    alpha: float
    beta: float
    gamma: float
    delta: float
    N: int

    def __post_init__(self) -> None:
        if self.N < 1:
            raise RacahDomainError("N must be a positive integer")
        if not (self.alpha > -1.0):
            raise RacahDomainError(f"alpha must exceed -1 (got {self.alpha})")
        if not (self.gamma > -1.0):
            raise RacahDomainError(f"gamma must exceed -1 (got {self.gamma})")


def wilson_to_racah(p: WilsonParams, N: int) -> RacahParams:
    """Map Wilson parameters to the discrete family:
    alpha = mu+a-1, gamma = mu+b-1, beta = nu+b-1, delta = mu-b."""
    return RacahParams(
        alpha=p.mu + p.a - 1.0,
        beta=p.nu + p.b - 1.0,
        gamma=p.mu + p.b - 1.0,
        delta=p.mu - p.b,
        N=N,
    )


def racah_to_wilson(r: RacahParams, lam: float = 0.2) -> WilsonParams:
    """Inverse parameter map back to the continuous family."""
    mu = 0.5 * (r.gamma + r.delta + 1.0)
    nu = r.beta + 0.5 * (r.delta - r.gamma + 1.0)
    a = r.alpha - 0.5 * (r.gamma + r.delta - 1.0)
    b = 0.5 * (r.gamma - r.delta + 1.0)
    return WilsonParams(mu=mu, nu=nu, a=a, b=b, lam=lam)


def _check_indices(n: int, m: int, N: int) -> None:
    if not (0 <= n <= N):
        raise RacahDomainError(f"degree n = {n} outside 0..{N}")
    if not (0 <= m <= N):
        raise RacahDomainError(f"grid point m = {m} outside 0..{N}")


def racah_kernel(n: int, m: int, r: RacahParams) -> float:
    """The terminating 4F3 kernel shared by every normalization.

    Symmetric under swapping the numerator pairs (-n, n+alpha+beta+1) and
    (-m, m-beta+gamma-N); the sum truncates at min(n, m), so the -N
    denominator never vanishes inside the range.
    """
    _check_indices(n, m, r.N)
    al, be, ga, N = r.alpha, r.beta, r.gamma, r.N
    return hyp4f3_terminating(
        HypSeries(
            numerator=(-float(n), -float(m), n + al + be + 1.0, m - be + ga - N),
            denominator=(al + 1.0, ga + 1.0, -float(N)),
            argument=1.0,
            terminating_degree=min(n, m),
        )
    )


def racah_tilde(n: int, m: int, r: RacahParams) -> float:
    """R~_n(m): Pochhammer prefactor times the 4F3 kernel."""
    _check_indices(n, m, r.N)
    al, be, ga, N = r.alpha, r.beta, r.gamma, r.N
    pref = 1.0
    for k in range(n):
        pref *= (al + 1.0 + k) * (ga + 1.0 + k) / ((al + be + N + 2.0 + k) * (k + 1.0))
    return pref * racah_kernel(n, m, r)


def _recursion_pieces(n: int, r: RacahParams) -> tuple[float, float, float]:
    """(diagonal, down, up) of the recursion
    eig(m) R~_n = diagonal R~_n + down R~_{n-1} + up R~_{n+1}."""
    al, be, ga, N = r.alpha, r.beta, r.gamma, r.N
    d = 2.0 * n + al + be
    for shift in (0.0, 1.0, 2.0):
        if d + shift == 0.0:
            raise RacahDomainError(
                f"recursion denominator 2n+alpha+beta{shift:+g} vanishes at n = {n}"
            )
    diag = (
        0.25 * (N + be - ga) ** 2
        - (n - N) * (n + al + 1.0) * (n + ga + 1.0) * (n + al + be + 1.0)
        / ((d + 1.0) * (d + 2.0))
        - n * (n + be) * (n + al + be - ga) * (n + N + al + be + 1.0) / (d * (d + 1.0))
    )
    down = (n + al) * (n + be) * (n + ga) * (n + al + be - ga) / (d * (d + 1.0))
    up = (n + 1.0) * (n - N) * (n + al + be + 1.0) * (n + N + al + be + 2.0) / (
        (d + 1.0) * (d + 2.0)
    )
    return diag, down, up


def racah_eigenvalue(m: int, r: RacahParams) -> float:
    """The grid eigenvalue multiplying R~_n in the recursion."""
    return 0.25 * (r.N + r.beta - r.gamma - 2.0 * m) ** 2


def racah_sequence(m: int, r: RacahParams) -> np.ndarray:
    """[R~_0(m), ..., R~_N(m)] by forward recursion.

    The degree-one seed comes from the n = 0 recursion row, where the
    down-coupling acts on the absent degree -1 member and drops.
    """
    _check_indices(0, m, r.N)
    N = r.N
    out = np.empty(N + 1)
    out[0] = 1.0
    eig = racah_eigenvalue(m, r)
    diag0, _, up0 = _recursion_pieces(0, r)
    out[1] = (eig - diag0) / up0
    for n in range(1, N):
        diag, down, up = _recursion_pieces(n, r)
        if up == 0.0:
            raise RacahDomainError(f"forward recursion coefficient vanishes at n = {n}")
        out[n + 1] = ((eig - diag) * out[n] - down * out[n - 1]) / up
    return out


def _log_weight_unnormalized(m: int, r: RacahParams) -> tuple[float, int]:
    """(log |w_m|, sign) of the unnormalized discrete weight.

    Written with the (gamma - beta - N)_m grouping, which stays finite for
    integer gamma - beta where the textbook normalization constant has a
    removable singularity.
    """
    al, be, ga, N = r.alpha, r.beta, r.gamma, r.N
    g = ga - be - N
    ratio = g + 2.0 * m
    if g == 0.0:
        raise RacahDomainError("degenerate weight: gamma - beta - N = 0")
    log_abs = 0.0
    sign = 1
    if ratio == 0.0:
        return (-math.inf, 0)
    if ratio / g < 0.0:
        sign = -sign
    log_abs += math.log(abs(ratio / g))
    for arg in (-float(N), al + 1.0, ga + 1.0, g):
        la, sg = pochhammer_log(arg, m)
        log_abs += la
        sign *= sg
    for arg in (ga - al - be - N, ga - be + 1.0, -be - N, 1.0):
        la, sg = pochhammer_log(arg, m)
        if sg == 0:
            raise RacahDomainError(f"weight denominator Pochhammer vanishes at m = {m}")
        log_abs -= la
        sign *= sg
    return (log_abs, sign)


def racah_weights(r: RacahParams) -> np.ndarray:
    """Normalized discrete weight, summing to one over m = 0..N.

    Accumulated in log space with sign tracking; raises when the
    unnormalized weights cancel to zero (degenerate parameter set).
    """
    logs = []
    signs = []
    for m in range(r.N + 1):
        la, sg = _log_weight_unnormalized(m, r)
        logs.append(la)
        signs.append(sg)
    shift = max(l for l in logs if math.isfinite(l))
    vals = np.array(
        [sg * math.exp(la - shift) if sg != 0 else 0.0 for la, sg in zip(logs, signs)]
    )
    total = vals.sum()
    if total == 0.0 or not math.isfinite(total):
        raise RacahDomainError("weight normalization sum vanished; degenerate parameters")
    return vals / total


def racah_weight(m: int, r: RacahParams) -> float:
    """Single normalized weight value rho^N(m)."""
    _check_indices(0, m, r.N)
    return float(racah_weights(r)[m])


def weight_normalization_constant(r: RacahParams) -> float:
    """The closed-form constant that rescales the unnormalized weight to
    unit sum. Singular when gamma - beta is an integer in range (use
    :func:`racah_weights`, which normalizes by the exact finite sum)."""
    al, be, ga, N = r.alpha, r.beta, r.gamma, r.N
    log_abs = 0.0
    sign = 1
    for arg in (-be - N, ga - al - be - N):
        la, sg = pochhammer_log(arg, N)
        log_abs += la
        sign *= sg
    for arg in (-al - be - N - 1.0, ga - be - N + 1.0):
        la, sg = pochhammer_log(arg, N)
        if sg == 0:
            raise RacahDomainError("normalization constant is singular for these parameters")
        log_abs -= la
        sign *= sg
    return sign * math.exp(log_abs)


def _log_orthonormal_norm_sq(n: int, r: RacahParams) -> tuple[float, int]:
    al, be, ga, N = r.alpha, r.beta, r.gamma, r.N
    ratio = (2.0 * n + al + be + 1.0) / (n + al + be + 1.0)
    log_abs = 0.0
    sign = 1
    if ratio == 0.0:
        return (-math.inf, 0)
    if ratio < 0.0:
        sign = -sign
    log_abs += math.log(abs(ratio))
    for arg in (-float(N), al + 1.0, ga + 1.0, al + be + 2.0):
        la, sg = pochhammer_log(arg, n)
        log_abs += la
        sign *= sg
    for arg in (be + 1.0, al + be - ga + 1.0, al + be + N + 2.0, 1.0):
        la, sg = pochhammer_log(arg, n)
        if sg == 0:
            raise RacahDomainError(f"orthonormal radicand denominator vanishes at n = {n}")
        log_abs -= la
        sign *= sg
    return (log_abs, sign)


def racah_norm(n: int, r: RacahParams) -> float:
    """Normalization constant multiplying the 4F3 kernel in the
    orthonormal version."""
    log_abs, sign = _log_orthonormal_norm_sq(n, r)
    if sign <= 0:
        raise RacahDomainError(
            f"orthonormal radicand nonpositive at n = {n}; "
            "parameters are outside the positive-definite domain"
        )
    return math.exp(0.5 * log_abs)


def racah_orthonormal(n: int, m: int, r: RacahParams) -> float:
    """Orthonormal Racah polynomial R_n(m)."""
    _check_indices(n, m, r.N)
    return racah_norm(n, r) * racah_kernel(n, m, r)
