"""Continuous Wilson polynomial family.

Evaluation by terminating hypergeometric sum and by three-term recursion,
orthonormalization, the continuous weight on the half line, large-order
asymptotics, the scattering amplitude / phase shift, and the bound-state
spectrum.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .specfun import PoleError, log_gamma, pochhammer_log


class WilsonDomainError(ValueError):
    """Parameters outside the validity domain of the requested operation."""


@dataclass(frozen=True)
class WilsonParams:
    """The four Wilson parameters plus the inverse length scale lam.

    Orthogonality mode needs all pairwise sums mu+nu, mu+a, mu+b, nu+a,
    nu+b, a+b positive; bound-state mode needs mu < 0 with mu+nu, mu+a,
    mu+b positive. Atomic units (hbar = m = 1) throughout.
    """

    mu: float
    nu: float
    a: float
    b: float
    lam: float = 0.2

    def __post_init__(self) -> None:
        if not (self.lam > 0.0):
            raise WilsonDomainError("lam must be positive")
        for name, v in (("mu", self.mu), ("nu", self.nu), ("a", self.a), ("b", self.b)):
            if not math.isfinite(v):
                raise WilsonDomainError(f"{name} must be finite")

    @property
    def total(self) -> float:
        """mu + nu + a + b, the parameter sum entering every recursion."""
        return self.mu + self.nu + self.a + self.b

    def pair_sums(self) -> dict[str, float]:
        return {
            "mu+nu": self.mu + self.nu,
            "mu+a": self.mu + self.a,
            "mu+b": self.mu + self.b,
            "nu+a": self.nu + self.a,
            "nu+b": self.nu + self.b,
            "a+b": self.a + self.b,
        }

    def require_orthogonality_mode(self) -> None:
        for name, v in self.pair_sums().items():
            if not (v > 0.0):
                raise WilsonDomainError(
                    f"orthogonality mode requires {name} > 0 (got {v})"
                )

    def require_bound_mode(self) -> None:
        if not (self.mu < 0.0):
            raise WilsonDomainError("bound-state mode requires mu < 0")
        for name in ("mu+nu", "mu+a", "mu+b"):
            v = self.pair_sums()[name]
            if not (v > 0.0):
                raise WilsonDomainError(f"bound-state mode requires {name} > 0 (got {v})")


@dataclass(frozen=True)
class SpectralPoint:
    """Dimensionless energy variable y and the energy E it encodes."""

    y: float
    E: float

    @classmethod
    def from_energy(cls, E: float, lam: float) -> "SpectralPoint":
        if E < 0.0:
            raise ValueError("continuum spectral points need E >= 0")
        return cls(y=math.sqrt(2.0 * E) / lam, E=E)

    @classmethod
    def from_y(cls, y: float, lam: float) -> "SpectralPoint":
        return cls(y=y, E=0.5 * (lam * y) ** 2)


def wilson_tilde(n: int, y_sq: float, p: WilsonParams) -> float:
    """W~_n(y^2): Pochhammer prefactor times the terminating 4F3.

    The complex-conjugate numerator pair (mu + iy, mu - iy) enters only
    through the real products ((mu + k)^2 + y^2), so the sum stays real.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    mu, nu, a, b = p.mu, p.nu, p.a, p.b
    for name in ("mu+nu", "mu+a", "mu+b"):
        d = p.pair_sums()[name]
        if d <= 0.0 and float(d).is_integer() and -d < n:
            raise WilsonDomainError(
                f"hypergeometric denominator {name} = {d} vanishes within degree {n}"
            )
    s = p.total
    kernel = 0.0
    term = 1.0
    for k in range(n + 1):
        kernel += term
        if k < n:
            num = (-n + k) * (n + s - 1.0 + k) * ((mu + k) ** 2 + y_sq)
            den = (mu + nu + k) * (mu + a + k) * (mu + b + k) * (k + 1.0)
            term *= num / den
    pref = 1.0
    for k in range(n):
        pref *= (mu + a + k) * (mu + b + k) / ((a + b + k) * (k + 1.0))
    return pref * kernel


def _recursion_coeffs(n: int, p: WilsonParams) -> tuple[float, float, float]:
    """(diagonal, down, up) coefficients of the monic-normalized three-term
    recursion y^2 W~_n = diag W~_n - down W~_{n-1} - up W~_{n+1}."""
    mu, nu, a, b = p.mu, p.nu, p.a, p.b
    s = p.total
    d2 = 2.0 * n + s
    for shift in (-2.0, -1.0, 0.0):
        if d2 + shift == 0.0:
            raise WilsonDomainError(
                f"recursion denominator 2n+mu+nu+a+b{shift:+g} vanishes at n = {n}"
            )
    diag = (
        (n + mu + nu) * (n + mu + a) * (n + mu + b) * (n + s - 1.0) / (d2 * (d2 - 1.0))
        + n * (n + nu + a - 1.0) * (n + nu + b - 1.0) * (n + a + b - 1.0)
        / ((d2 - 1.0) * (d2 - 2.0))
        - mu * mu
    )
    down = (
        (n + mu + a - 1.0) * (n + mu + b - 1.0) * (n + nu + a - 1.0) * (n + nu + b - 1.0)
        / ((d2 - 1.0) * (d2 - 2.0))
    )
    up = (n + 1.0) * (n + mu + nu) * (n + a + b) * (n + s - 1.0) / (d2 * (d2 - 1.0))
    return diag, down, up


def wilson_seed_first(y_sq: float, p: WilsonParams) -> float:
    """The degree-one member, written from its closed form."""
    mu, nu, a, b = p.mu, p.nu, p.a, p.b
    return (mu + a) * (mu + b) / (a + b) - (p.total) / ((mu + nu) * (a + b)) * (
        y_sq + mu * mu
    )


def wilson_sequence(n_max: int, y_sq: float, p: WilsonParams) -> np.ndarray:
    """[W~_0, ..., W~_{n_max}] generated by the three-term recursion."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    out = np.empty(n_max + 1)
    out[0] = 1.0
    if n_max == 0:
        return out
    out[1] = wilson_seed_first(y_sq, p)
    for n in range(1, n_max):
        diag, down, up = _recursion_coeffs(n, p)
        if up == 0.0:
            raise WilsonDomainError(f"forward recursion coefficient vanishes at n = {n}")
        out[n + 1] = ((diag - y_sq) * out[n] - down * out[n - 1]) / up
    return out


def _log_norm_sq(n: int, p: WilsonParams) -> tuple[float, int]:
    """(log |N_n^2|, sign) of the orthonormalization factor squared."""
    mu, nu, a, b = p.mu, p.nu, p.a, p.b
    s = p.total
    log_abs = 0.0
    sign = 1
    ratio = (2.0 * n + s - 1.0) / (n + s - 1.0)
    if ratio == 0.0:
        return (-math.inf, 0)
    if ratio < 0.0:
        sign = -sign
    log_abs += math.log(abs(ratio))
    for arg in (mu + nu, a + b, s):
        la, sg = pochhammer_log(arg, n)
        log_abs += la
        sign *= sg
    la, sg = pochhammer_log(1.0, n)  # n!
    log_abs += la
    sign *= sg
    for arg in (mu + a, mu + b, nu + a, nu + b):
        la, sg = pochhammer_log(arg, n)
        log_abs -= la
        sign *= sg
    return (log_abs, sign)


def wilson_norm(n: int, p: WilsonParams) -> float:
    """Orthonormalization constant N_n with W_n = N_n W~_n."""
    log_abs, sign = _log_norm_sq(n, p)
    if sign <= 0:
        raise WilsonDomainError(
            f"orthonormalization radicand nonpositive at n = {n}; "
            "parameters are outside the orthonormal domain"
        )
    return math.exp(0.5 * log_abs)


def wilson_orthonormal(n: int, y_sq: float, p: WilsonParams) -> float:
    """Orthonormal Wilson polynomial W_n(y^2)."""
    return wilson_norm(n, p) * wilson_tilde(n, y_sq, p)


def orthonormal_recurrence_coeffs(n_max: int, p: WilsonParams) -> tuple[np.ndarray, np.ndarray]:
    """Symmetric three-term recursion coefficients for the orthonormal family.

    Returns (diag[0..n_max], off[0..n_max-1]) with
    y^2 W_n = diag[n] W_n - off[n-1] W_{n-1} - off[n] W_{n+1}.
    The off-diagonal is the geometric mean of the adjacent monic up/down
    coefficients, which is the unique symmetric choice.
    """
    diag = np.empty(n_max + 1)
    off = np.empty(max(n_max, 0))
    for n in range(n_max + 1):
        d, _, up = _recursion_coeffs(n, p)
        diag[n] = d
        if n < n_max:
            _, down_next, _ = _recursion_coeffs(n + 1, p)
            rad = up * down_next
            if rad < 0.0:
                raise WilsonDomainError(
                    f"orthonormal recursion radicand negative at n = {n}"
                )
            off[n] = math.sqrt(rad)
    return diag, off


def wilson_orthonormal_sequence(n_max: int, y_sq: float, p: WilsonParams) -> np.ndarray:
    """[W_0, ..., W_{n_max}] from the symmetric orthonormal recursion."""
    out = np.empty(n_max + 1)
    out[0] = 1.0
    if n_max == 0:
        return out
    diag, off = orthonormal_recurrence_coeffs(n_max, p)
    out[1] = (diag[0] - y_sq) / off[0]
    for n in range(1, n_max):
        out[n + 1] = ((diag[n] - y_sq) * out[n] - off[n - 1] * out[n - 1]) / off[n]
    return out


def weight_continuous(y: float, p: WilsonParams) -> float:
    """Normalized continuous weight rho(y) on y > 0, computed in log space."""
    if not (y > 0.0):
        raise WilsonDomainError("continuous weight needs y > 0")
    p.require_orthogonality_mode()
    mu, nu, a, b = p.mu, p.nu, p.a, p.b
    log_num = 0.0
    for x in (mu, nu, a, b):
        log_num += 2.0 * log_gamma(complex(x, y)).real
    log_num -= 2.0 * log_gamma(complex(0.0, 2.0 * y)).real
    log_num += log_gamma(complex(p.total)).real
    log_den = 0.0
    for v in p.pair_sums().values():
        log_den += log_gamma(complex(v)).real
    return math.exp(log_num - log_den) / (2.0 * math.pi)


def scattering_amplitude(y: float, p: WilsonParams) -> complex:
    """A(iy) = Gamma(2iy) / [Gamma(mu+iy) Gamma(nu+iy) Gamma(a+iy) Gamma(b+iy)].

    All four parameter gammas are kept in the product so the amplitude is
    consistent with the six-gamma weight and symmetric under mu<->nu, a<->b.
    """
    if not (y > 0.0):
        raise WilsonDomainError("scattering amplitude needs y > 0")
    log_a = log_gamma(complex(0.0, 2.0 * y))
    for x in (p.mu, p.nu, p.a, p.b):
        log_a -= log_gamma(complex(x, y))
    return cmath.exp(log_a)


def scattering_amplitude_abs(y: float, p: WilsonParams) -> float:
    return abs(scattering_amplitude(y, p))


def phase_shift(y: float, p: WilsonParams) -> float:
    """delta(y) = arg A(iy), reduced to the principal interval (-pi, pi]."""
    if not (y > 0.0):
        raise WilsonDomainError("phase shift needs y > 0")
    raw = log_gamma(complex(0.0, 2.0 * y)).imag
    for x in (p.mu, p.nu, p.a, p.b):
        raw -= log_gamma(complex(x, y)).imag
    d = math.remainder(raw, 2.0 * math.pi)
    if d <= -math.pi:
        d += 2.0 * math.pi
    return d


def phase_shift_curve(ys: np.ndarray, p: WilsonParams, unwrap: bool = True) -> np.ndarray:
    """Phase shift on a grid, optionally unwrapped for continuity."""
    vals = np.array([phase_shift(float(y), p) for y in ys])
    if unwrap:
        vals = np.unwrap(vals)
    return vals


def bound_state_energies(p: WilsonParams) -> list[tuple[int, float]]:
    """Bound levels (m, E_m) with E_m = -(lam^2/2)(m + mu)^2.

    Enumerates integers m >= 0 with m + mu strictly negative; an empty
    list when mu >= 0. The marginal level m + mu = 0 is excluded.
    """
    if p.mu >= 0.0:
        return []
    p.require_bound_mode()
    out = []
    m = 0
    while m + p.mu < 0.0:
        out.append((m, -0.5 * p.lam**2 * (m + p.mu) ** 2))
        m += 1
    return out


def has_marginal_level(p: WilsonParams) -> bool:
    """True when -mu is an exact integer, i.e. the excluded edge level
    m + mu = 0 exists."""
    return p.mu < 0.0 and float(p.mu).is_integer()


def asymptotic_wilson_tilde(n: int, y: float, p: WilsonParams) -> float:
    """Leading large-n form (2/n) Gamma(mu+nu) Gamma(a+b) |A| cos(2y ln n + arg A)."""
    if n < 1:
        raise ValueError("asymptotic form needs n >= 1")
    amp = scattering_amplitude(y, p)
    pref = (2.0 / n) * math.exp(
        log_gamma(complex(p.mu + p.nu)).real + log_gamma(complex(p.a + p.b)).real
    )
    return pref * abs(amp) * math.cos(2.0 * y * math.log(n) + cmath.phase(amp))


def asymptotic_envelope_tilde(n: int, y: float, p: WilsonParams) -> float:
    """Amplitude of the leading oscillation of W~_n at fixed y."""
    pref = (2.0 / n) * math.exp(
        log_gamma(complex(p.mu + p.nu)).real + log_gamma(complex(p.a + p.b)).real
    )
    return pref * scattering_amplitude_abs(y, p)


def asymptotic_wilson_orthonormal(n: int, y: float, p: WilsonParams) -> float:
    """Leading large-n form of the orthonormal W_n."""
    if n < 1:
        raise ValueError("asymptotic form needs n >= 1")
    amp = scattering_amplitude(y, p)
    log_b = 0.0
    for v in p.pair_sums().values():
        log_b += log_gamma(complex(v)).real
    log_b -= log_gamma(complex(p.total)).real
    B = math.exp(0.5 * log_b)
    return (
        B
        * math.sqrt(2.0 / n)
        * 2.0
        * abs(amp)
        * math.cos(2.0 * y * math.log(n) + cmath.phase(amp))
    )
