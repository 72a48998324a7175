"""Scalar special functions: complex log-gamma, Pochhammer symbols,
terminating/truncated hypergeometric series, and stable Hermite functions.

All routines are pure and operate on plain Python scalars (or numpy arrays
where noted), so they are safe to call concurrently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np


class SpecFunError(ValueError):
    """Base class for special-function domain errors."""


class PoleError(SpecFunError):
    """Argument sits on a pole of the gamma function."""


class SingularSeriesError(SpecFunError):
    """A denominator parameter of a hypergeometric series hits a
    nonpositive integer inside the summation range."""


# Lanczos approximation, g = 7, 9 coefficients (Godfrey's set).
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def _is_nonpositive_integer(z: complex, tol: float = 0.0) -> bool:
    if z.imag != 0.0:
        return False
    x = z.real
    return x <= 0.0 and x == math.floor(x)


def log_gamma(z: complex) -> complex:
    """Principal-branch log-gamma for complex argument.

    Uses the Lanczos rational approximation for Re(z) >= 0.5 and the
    reflection formula otherwise. Raises :class:`PoleError` at nonpositive
    real integers.
    """
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"log_gamma pole at z = {z}")
    if z.real < 0.5:
        # log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        return cmath.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - log_gamma(1.0 - z)
    w = z - 1.0
    x = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        x += _LANCZOS_COEF[i] / (w + i)
    t = w + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (w + 0.5) * cmath.log(t) - t + cmath.log(x)


def gamma(z: complex) -> complex:
    """Gamma function via :func:`log_gamma`."""
    return cmath.exp(log_gamma(z))


def abs_gamma_sq(z: complex) -> float:
    """|Gamma(z)|^2, evaluated in log space to avoid overflow."""
    return math.exp(2.0 * log_gamma(z).real)


def pochhammer(a: float, n: int) -> float:
    """Rising factorial a (a+1) ... (a+n-1), with (a)_0 = 1.

    Falls back to the log-space companion when the direct product would
    overflow.
    """
    if n < 0:
        raise ValueError("pochhammer order must be nonnegative")
    if n <= 64:
        p = 1.0
        for k in range(n):
            p *= a + k
        if math.isfinite(p):
            return p
    log_abs, sign = pochhammer_log(a, n)
    if sign == 0:
        return 0.0
    return sign * math.exp(log_abs)


def pochhammer_log(a: float, n: int) -> tuple[float, int]:
    """(log |(a)_n|, sign) with sign in {-1, 0, 1}.

    Handles negative arguments (sign flips) and magnitudes beyond double
    range; a zero factor yields (-inf, 0).
    """
    if n < 0:
        raise ValueError("pochhammer order must be nonnegative")
    log_abs = 0.0
    sign = 1
    for k in range(n):
        f = a + k
        if f == 0.0:
            return (-math.inf, 0)
        if f < 0.0:
            sign = -sign
        log_abs += math.log(abs(f))
    return (log_abs, sign)


@dataclass(frozen=True)
class HypSeries:
    """Parameter block for a hypergeometric sum.

    numerator/denominator hold the upper and lower parameters (4 over 3
    for the terminating series used here, 2 over 1 for the Gauss series).
    When ``terminating_degree`` is given, one numerator parameter must be
    its exact negative.
    """

    numerator: Sequence[float]
    denominator: Sequence[float]
    argument: float = 1.0
    terminating_degree: Optional[int] = None


def _terminating_degree(spec: HypSeries) -> int:
    if spec.terminating_degree is not None:
        n = spec.terminating_degree
        if not any(p == -n for p in spec.numerator):
            raise ValueError(
                f"no numerator parameter equals -{n} for the stated terminating degree"
            )
        # another numerator parameter may truncate the sum even earlier
        degree = n
    else:
        cands = [
            int(-p)
            for p in spec.numerator
            if p <= 0.0 and float(p).is_integer()
        ]
        if not cands:
            raise ValueError("series does not terminate: no nonpositive-integer numerator")
        degree = min(cands)
    for p in spec.numerator:
        if p <= 0.0 and float(p).is_integer():
            degree = min(degree, int(-p))
    return degree


def hyp4f3_terminating(spec: HypSeries) -> float:
    """Terminating 4F3 at its stated argument, summed with running-ratio
    term updates.

    The term ratio is never formed past the last contributing index, so
    denominator parameters equal to minus the terminating degree (or
    beyond) are harmless.
    """
    if len(spec.numerator) != 4 or len(spec.denominator) != 3:
        raise ValueError("hyp4f3_terminating expects 4 numerator and 3 denominator parameters")
    degree = _terminating_degree(spec)
    for d in spec.denominator:
        if d <= 0.0 and float(d).is_integer() and -d < degree:
            raise SingularSeriesError(
                f"denominator parameter {d} vanishes within the summation range"
            )
    total = 0.0
    term = 1.0
    z = spec.argument
    for k in range(degree + 1):
        total += term
        if k < degree:
            num = 1.0
            for p in spec.numerator:
                num *= p + k
            den = float(k + 1)
            for q in spec.denominator:
                den *= q + k
            term *= num * z / den
    return total


def hyp2f1_truncated(
    a: float, b: float, c: float, t: float, terms: int
) -> tuple[float, float]:
    """Partial sum of the Gauss series 2F1(a, b; c; t) to ``terms`` terms.

    Returns (partial_sum, |last_term|); the last-term magnitude serves as
    a truncation estimate. Requires |t| < 1 unless the series terminates
    earlier.
    """
    if terms < 1:
        raise ValueError("terms must be positive")
    if abs(t) >= 1.0 and not (
        (a <= 0.0 and float(a).is_integer()) or (b <= 0.0 and float(b).is_integer())
    ):
        raise ValueError("|t| must be below 1 for a non-terminating Gauss series")
    total = 0.0
    term = 1.0
    last = 1.0
    for k in range(terms):
        total += term
        last = term
        if term == 0.0:
            return total, 0.0
        if (a + k) * (b + k) * t == 0.0:
            # the series terminates here; the denominator is never needed
            term = 0.0
            continue
        if c + k == 0.0:
            raise SingularSeriesError(
                f"denominator parameter {c} vanishes at term {k + 1}"
            )
        term *= (a + k) * (b + k) * t / ((c + k) * (k + 1))
    return total, abs(last)


_RESCALE_LIMIT = 1e250
_LOG_RESCALE = math.log(_RESCALE_LIMIT)


def hermite_function(n: int, z: float) -> float:
    """Orthonormalized Hermite function h_n(z).

    h_n(z) = (sqrt(pi) 2^n n!)^(-1/2) exp(-z^2/2) H_n(z), generated by the
    normalized recurrence h_{n+1} = z sqrt(2/(n+1)) h_n - sqrt(n/(n+1)) h_{n-1}.
    A running rescale keeps the iteration in range even when the Gaussian
    seed underflows (large |z|) so very high orders stay finite.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    log_scale = -0.5 * z * z
    v_prev = math.pi ** -0.25
    if n == 0:
        return _descale(v_prev, log_scale)
    v = z * math.sqrt(2.0) * v_prev
    for k in range(1, n):
        v_next = z * math.sqrt(2.0 / (k + 1)) * v - math.sqrt(k / (k + 1.0)) * v_prev
        v_prev, v = v, v_next
        m = max(abs(v_prev), abs(v))
        if m > _RESCALE_LIMIT:
            v_prev /= _RESCALE_LIMIT
            v /= _RESCALE_LIMIT
            log_scale += _LOG_RESCALE
    return _descale(v, log_scale)


def _descale(v: float, log_scale: float) -> float:
    if v == 0.0:
        return 0.0
    total = log_scale + math.log(abs(v))
    if total < -745.0:
        return 0.0
    return math.copysign(math.exp(total), v)


def hermite_function_matrix(n_max: int, z: np.ndarray) -> np.ndarray:
    """h_n(z) for n = 0..n_max over an array of points.

    Plain normalized recurrence without rescaling; adequate while the
    Gaussian seed exp(-z^2/2) stays inside double range (|z| < ~37),
    which covers every basis-evaluation grid used here.
    """
    z = np.asarray(z, dtype=float)
    out = np.empty((n_max + 1, z.size))
    seed = math.pi ** -0.25 * np.exp(-0.5 * z * z)
    out[0] = seed
    if n_max >= 1:
        out[1] = z * math.sqrt(2.0) * seed
    for k in range(1, n_max):
        out[k + 1] = z * math.sqrt(2.0 / (k + 1)) * out[k] - math.sqrt(k / (k + 1.0)) * out[k - 1]
    return out
