"""Special-function layer: log-gamma, Pochhammer, hypergeometric sums,
Hermite functions. Reference values were frozen from 40-digit arithmetic."""

import math

import numpy as np
import pytest

from wilsonracah.specfun import (
    HypSeries,
    PoleError,
    SingularSeriesError,
    abs_gamma_sq,
    gamma,
    hermite_function,
    hermite_function_matrix,
    hyp2f1_truncated,
    hyp4f3_terminating,
    log_gamma,
    pochhammer,
    pochhammer_log,
)


def test_log_gamma_frozen_value():
    got = log_gamma(0.8 + 0.3j)
    assert abs(got.real - 0.053347686687565212362) < 1e-14
    assert abs(got.imag - (-0.27094481637977001059)) < 1e-14


def test_gamma_small_integers_and_half():
    assert abs(gamma(5.0) - 24.0) < 1e-12
    assert abs(gamma(0.5) - math.sqrt(math.pi)) < 1e-14
    # reflection branch
    assert abs(gamma(-0.5) - (-2.0 * math.sqrt(math.pi))) < 1e-13


def test_log_gamma_pole():
    for z in (0.0, -1.0, -7.0):
        with pytest.raises(PoleError):
            log_gamma(z)


def test_abs_gamma_sq_frozen_values():
    assert abs(abs_gamma_sq(1.0 + 1.0j) - 0.27202905498213316295) < 1e-15
    assert abs(abs_gamma_sq(0.5 + 2.0j) - 0.01173344781531739507) < 1e-16


def test_gamma_functional_equation_random():
    rng = np.random.default_rng(3)
    for _ in range(200):
        z = complex(rng.uniform(0.6, 30.0), rng.uniform(-30.0, 30.0))
        lhs = log_gamma(z + 1.0)
        rhs = log_gamma(z) + np.log(complex(z))
        assert abs(lhs - rhs) < 1e-11 * max(1.0, abs(rhs))


def test_pochhammer_basic():
    assert pochhammer(3.0, 0) == 1.0
    assert pochhammer(3.0, 4) == 3.0 * 4.0 * 5.0 * 6.0
    assert pochhammer(-2.0, 5) == 0.0
    with pytest.raises(ValueError):
        pochhammer(1.0, -1)


def test_pochhammer_log_signs_and_magnitude():
    log_abs, sign = pochhammer_log(-2.5, 3)
    # (-2.5)(-1.5)(-0.5) = -1.875
    assert sign == -1
    assert abs(math.exp(log_abs) - 1.875) < 1e-14
    assert pochhammer_log(-3.0, 5)[1] == 0


def test_pochhammer_large_order_matches_log():
    val = pochhammer(0.7, 150)
    log_abs, sign = pochhammer_log(0.7, 150)
    assert sign == 1
    assert abs(math.log(val) - log_abs) < 1e-10


def test_hyp4f3_degree_zero_and_one():
    spec = HypSeries(numerator=(0.0, 2.0, 3.0, 4.0), denominator=(1.0, 1.0, 1.0))
    assert hyp4f3_terminating(spec) == 1.0
    spec1 = HypSeries(
        numerator=(-1.0, 2.0, 3.0, 4.0), denominator=(5.0, 6.0, 7.0), argument=1.0
    )
    expect = 1.0 + (-1.0) * 2.0 * 3.0 * 4.0 / (5.0 * 6.0 * 7.0)
    assert abs(hyp4f3_terminating(spec1) - expect) < 1e-15


def test_hyp4f3_parameter_permutation_invariance():
    rng = np.random.default_rng(11)
    for _ in range(20):
        n = int(rng.integers(1, 8))
        nums = [-float(n)] + list(rng.uniform(0.3, 4.0, size=3))
        dens = list(rng.uniform(0.5, 5.0, size=3))
        base = hyp4f3_terminating(HypSeries(numerator=tuple(nums), denominator=tuple(dens)))
        perm_n = [nums[1], nums[3], nums[0], nums[2]]
        perm_d = [dens[2], dens[0], dens[1]]
        other = hyp4f3_terminating(
            HypSeries(numerator=tuple(perm_n), denominator=tuple(perm_d))
        )
        assert abs(base - other) <= 1e-12 * max(1.0, abs(base))


def test_hyp4f3_singular_denominator_raises():
    spec = HypSeries(numerator=(-4.0, 1.0, 2.0, 3.0), denominator=(-2.0, 5.0, 6.0))
    with pytest.raises(SingularSeriesError):
        hyp4f3_terminating(spec)


def test_hyp4f3_denominator_at_degree_boundary_is_safe():
    # -4 in the denominator is only reached by the never-formed ratio past
    # the last term, so the sum is finite
    spec = HypSeries(
        numerator=(-4.0, 1.0, 2.0, 3.0),
        denominator=(-4.0, 5.0, 6.0),
        terminating_degree=4,
    )
    assert math.isfinite(hyp4f3_terminating(spec))


def test_hyp2f1_truncated_frozen_value():
    total, last = hyp2f1_truncated(0.8, 0.8, 1.6, 0.1, 30)
    assert abs(total - 1.0426887063478086567) < 1e-15
    assert last < 1e-30


def test_hyp2f1_terminating_polynomial_case():
    # 2F1(-2, b; c; t) = 1 - 2bt/c + b(b+1)t^2/(c(c+1))
    b, c, t = 1.3, 2.1, 0.4
    total, last = hyp2f1_truncated(-2.0, b, c, t, 50)
    expect = 1.0 - 2.0 * b * t / c + b * (b + 1.0) * t * t / (c * (c + 1.0))
    assert abs(total - expect) < 1e-15
    assert last == 0.0


def test_hyp2f1_terminating_before_singular_denominator():
    # numerator -3 truncates at the third term; denominator -5 is never hit
    total, _ = hyp2f1_truncated(-3.0, 2.0, -5.0, 0.1, 20)
    assert math.isfinite(total)


def test_hyp2f1_domain_errors():
    with pytest.raises(ValueError):
        hyp2f1_truncated(0.5, 0.5, 1.0, 1.5, 10)
    with pytest.raises(ValueError):
        hyp2f1_truncated(0.5, 0.5, 1.0, 0.5, 0)


def test_hermite_function_seed_and_symmetry():
    z = 0.73
    assert abs(hermite_function(0, z) - math.pi**-0.25 * math.exp(-0.5 * z * z)) < 1e-15
    assert abs(hermite_function(4, -z) - hermite_function(4, z)) < 1e-15
    assert abs(hermite_function(5, -z) + hermite_function(5, z)) < 1e-15


def test_hermite_recurrence_residual_random():
    rng = np.random.default_rng(5)
    for _ in range(50):
        n = int(rng.integers(1, 60))
        z = float(rng.uniform(-8.0, 8.0))
        lhs = hermite_function(n + 1, z)
        rhs = z * math.sqrt(2.0 / (n + 1)) * hermite_function(n, z) - math.sqrt(
            n / (n + 1.0)
        ) * hermite_function(n - 1, z)
        assert abs(lhs - rhs) < 1e-12


def test_hermite_high_order_stays_finite():
    v = hermite_function(10000, 5.0)
    assert math.isfinite(v)
    assert abs(v) < 1.0


def test_hermite_far_tail_underflows_to_zero():
    assert hermite_function(4, 50.0) == 0.0


def test_hermite_matrix_matches_scalar():
    zs = np.linspace(-6.0, 6.0, 41)
    mat = hermite_function_matrix(40, zs)
    for n in (0, 1, 7, 25, 40):
        col = np.array([hermite_function(n, float(z)) for z in zs])
        assert np.max(np.abs(mat[n] - col)) < 1e-12
