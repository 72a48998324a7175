"""Continuous polynomial family: evaluation, recursion, weight,
scattering amplitude, phase shift, bound spectrum, asymptotics.
Reference values were frozen from 40-digit arithmetic."""

import math

import numpy as np
import pytest

from wilsonracah.quadrature import integrate_to_decay
from wilsonracah.wilson import (
    SpectralPoint,
    WilsonDomainError,
    WilsonParams,
    asymptotic_envelope_tilde,
    asymptotic_wilson_orthonormal,
    asymptotic_wilson_tilde,
    bound_state_energies,
    has_marginal_level,
    orthonormal_recurrence_coeffs,
    phase_shift,
    phase_shift_curve,
    scattering_amplitude,
    scattering_amplitude_abs,
    weight_continuous,
    wilson_norm,
    wilson_orthonormal,
    wilson_orthonormal_sequence,
    wilson_seed_first,
    wilson_sequence,
    wilson_tilde,
)

P = WilsonParams(mu=0.8, nu=0.8, a=1.0, b=1.0)


def test_params_validation():
    with pytest.raises(WilsonDomainError):
        WilsonParams(mu=0.8, nu=0.8, a=1.0, b=1.0, lam=0.0)
    with pytest.raises(WilsonDomainError):
        WilsonParams(mu=math.nan, nu=0.8, a=1.0, b=1.0)
    bad = WilsonParams(mu=-2.0, nu=0.5, a=1.0, b=1.0)
    with pytest.raises(WilsonDomainError):
        bad.require_orthogonality_mode()
    with pytest.raises(WilsonDomainError):
        P.require_bound_mode()


def test_total_and_pair_sums():
    assert P.total == 3.6
    sums = P.pair_sums()
    assert sums["mu+nu"] == 1.6
    assert sums["a+b"] == 2.0


def test_tilde_frozen_values():
    assert abs(wilson_tilde(0, 0.25, P) - 1.0) == 0.0
    assert abs(wilson_tilde(2, 0.25, P) - 0.37619391025641025641) < 1e-15
    assert abs(wilson_tilde(5, 0.49, P) - (-0.16959301211533829715)) < 5e-14


def test_seed_first_matches_definition():
    for y_sq in (0.04, 0.49, 4.0):
        assert abs(wilson_seed_first(y_sq, P) - wilson_tilde(1, y_sq, P)) < 1e-14


def test_sequence_matches_definition_low_degree():
    rng = np.random.default_rng(17)
    for _ in range(10):
        y_sq = float(rng.uniform(0.01, 9.0))
        seq = wilson_sequence(8, y_sq, P)
        for n in range(9):
            direct = wilson_tilde(n, y_sq, P)
            assert abs(seq[n] - direct) <= 1e-10 * max(1.0, abs(direct))


def test_sequence_random_parameter_sets():
    rng = np.random.default_rng(23)
    for _ in range(8):
        p = WilsonParams(
            mu=float(rng.uniform(0.3, 2.0)),
            nu=float(rng.uniform(0.3, 2.0)),
            a=float(rng.uniform(0.3, 2.0)),
            b=float(rng.uniform(0.3, 2.0)),
        )
        y_sq = float(rng.uniform(0.01, 4.0))
        seq = wilson_sequence(6, y_sq, p)
        for n in range(7):
            direct = wilson_tilde(n, y_sq, p)
            assert abs(seq[n] - direct) <= 1e-10 * max(1.0, abs(direct))


def test_orthonormal_frozen_value():
    assert abs(wilson_orthonormal(2, 0.25, P) - 0.51004817106723822578) < 1e-14


def test_orthonormal_sequence_matches_pointwise():
    for y_sq in (0.09, 1.21, 6.25):
        seq = wilson_orthonormal_sequence(6, y_sq, P)
        for n in range(7):
            direct = wilson_orthonormal(n, y_sq, P)
            assert abs(seq[n] - direct) <= 1e-9 * max(1.0, abs(direct))


def test_orthonormal_recurrence_is_symmetric_three_term():
    diag, off = orthonormal_recurrence_coeffs(10, P)
    y_sq = 0.7
    w = wilson_orthonormal_sequence(10, y_sq, P)
    for n in range(1, 10):
        resid = (diag[n] - y_sq) * w[n] - off[n - 1] * w[n - 1] - off[n] * w[n + 1]
        assert abs(resid) < 1e-12 * max(1.0, abs(w[n]))


def test_norm_positive_and_monotone_sanity():
    vals = [wilson_norm(n, P) for n in range(12)]
    assert all(v > 0.0 for v in vals)


def test_weight_normalizes_to_one():
    val = integrate_to_decay(
        lambda ys: np.array(
            [weight_continuous(float(y), P) if y > 0 else 0.0 for y in ys]
        )
    )
    assert abs(val - 1.0) < 1e-10


def test_weight_domain_errors():
    with pytest.raises(WilsonDomainError):
        weight_continuous(0.0, P)
    with pytest.raises(WilsonDomainError):
        weight_continuous(1.0, WilsonParams(mu=-2.0, nu=0.5, a=1.0, b=1.0))


def test_scattering_amplitude_frozen_value():
    amp = scattering_amplitude(2.0, P)
    assert abs(abs(amp) - 5.6313968314329136864) < 1e-12
    assert abs(math.atan2(amp.imag, amp.real) - 0.76805934299291191543) < 1e-13


def test_amplitude_parameter_symmetry():
    p1 = WilsonParams(mu=0.6, nu=1.1, a=0.9, b=1.4)
    p2 = WilsonParams(mu=1.1, nu=0.6, a=1.4, b=0.9)
    for y in (0.3, 2.0):
        assert abs(scattering_amplitude(y, p1) - scattering_amplitude(y, p2)) < 1e-14


def test_phase_shift_principal_interval():
    for y in np.linspace(0.05, 12.0, 60):
        d = phase_shift(float(y), P)
        assert -math.pi < d <= math.pi


def test_phase_shift_small_y_limit():
    assert abs(phase_shift(1e-5, P) + 0.5 * math.pi) < 1e-4


def test_phase_shift_curve_unwrap_continuity():
    ys = np.linspace(0.1, 10.0, 500)
    deltas = phase_shift_curve(ys, P)
    assert np.max(np.abs(np.diff(deltas))) < 0.5


def test_bound_spectrum_fig_parameters():
    p = WilsonParams(mu=-5.0, nu=5.5, a=5.5, b=5.5, lam=0.2)
    levels = bound_state_energies(p)
    expect = [-0.5, -0.32, -0.18, -0.08, -0.02]
    assert [m for m, _ in levels] == [0, 1, 2, 3, 4]
    for (_, E), e in zip(levels, expect):
        assert abs(E - e) < 1e-15


def test_bound_spectrum_empty_for_positive_mu():
    assert bound_state_energies(P) == []


def test_marginal_level_excluded():
    p = WilsonParams(mu=-3.0, nu=3.5, a=3.5, b=3.5, lam=0.2)
    assert has_marginal_level(p)
    levels = bound_state_energies(p)
    # m = 3 would sit exactly at zero energy and is excluded
    assert [m for m, _ in levels] == [0, 1, 2]


def test_spectral_point_roundtrip():
    sp = SpectralPoint.from_energy(0.18, 0.2)
    assert abs(sp.y - 3.0) < 1e-14
    back = SpectralPoint.from_y(sp.y, 0.2)
    assert abs(back.E - 0.18) < 1e-16
    with pytest.raises(ValueError):
        SpectralPoint.from_energy(-0.1, 0.2)


def test_asymptotic_form_tracks_recursion():
    # the leading oscillation should match the generated values to a few
    # percent of the envelope at large degree
    y = 1.0
    seq = wilson_sequence(3000, y * y, P)
    worst = 0.0
    for n in range(2000, 3001, 100):
        approx = asymptotic_wilson_tilde(n, y, P)
        env = asymptotic_envelope_tilde(n, y, P)
        worst = max(worst, abs(seq[n] - approx) / env)
    assert worst < 0.05


def test_asymptotic_orthonormal_scaling():
    y = 1.0
    n = 2000
    ratio = asymptotic_wilson_orthonormal(n, y, P) / asymptotic_wilson_tilde(n, y, P)
    # the two leading forms differ by the orthonormalization factor
    assert abs(ratio - wilson_norm(n, P) * 1.0) / abs(ratio) < 0.2


def test_amplitude_abs_consistency():
    for y in (0.2, 1.0, 4.0):
        assert abs(
            scattering_amplitude_abs(y, P) - abs(scattering_amplitude(y, P))
        ) < 1e-14
