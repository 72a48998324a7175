"""Composite Gauss-Legendre quadrature for integrals over [0, Y] with Y
grown until the integrand tail is negligible."""

from __future__ import annotations

from typing import Callable

import numpy as np


def gauss_legendre_panel(f: Callable[[np.ndarray], np.ndarray], a: float, b: float, order: int = 48) -> float:
    nodes, weights = np.polynomial.legendre.leggauss(order)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    xs = mid + half * nodes
    return half * float(np.sum(weights * f(xs)))


def integrate_to_decay(
    f: Callable[[np.ndarray], np.ndarray],
    panel_width: float = 5.0,
    order: int = 48,
    tail_tol: float = 1e-14,
    max_panels: int = 64,
) -> float:
    """Integral of f over [0, inf), summed panel by panel until the
    integrand magnitude over a trailing panel stays below tail_tol."""
    total = 0.0
    a = 0.0
    for _ in range(max_panels):
        b = a + panel_width
        total += gauss_legendre_panel(f, a, b, order)
        probe = np.linspace(a, b, 16)
        if float(np.max(np.abs(f(probe)))) < tail_tol:
            return total
        a = b
    raise RuntimeError("integrand did not decay below tolerance within the panel budget")
