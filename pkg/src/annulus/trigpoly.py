"""Certified suprema of Laurent polynomials on circles.

Evaluates f(t) = sum_n c_n (r e^{it})^n on uniform grids and brackets
sup_t |f(t)| between a refined grid maximum (lower end) and a rigorous
upper end combining two certificates:

  * first order: |f| is Lipschitz with constant L = sum |c_n| |n| r^n,
    so sup <= grid max + L * dt / 2;
  * second order: g = |f|^2 is a real trigonometric polynomial of degree
    2d whose derivative vanishes at the true maximiser, and Bernstein
    gives sup|g''| <= (2d)^2 sup g, hence
    sup g <= (grid max of g) / (1 - d^2 dt^2 / 2).

The grid doubles until the bracket width meets the requested tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class CertifiedSup:
    """Bracket [lo, hi] containing the true supremum; grid is the final size."""

    lo: float
    hi: float
    grid: int


def grid_values(coeffs, n_min: int, radius: float, m: int) -> np.ndarray:
    """Values of sum_n c_n (r e^{it})^n at t_j = 2*pi*j/m via a padded FFT.

    Requires m > degree span so that exponents stay distinct mod m.
    """
    c = np.asarray(coeffs, dtype=complex)
    ns = n_min + np.arange(len(c))
    scaled = c * np.power(float(radius), ns)
    spectrum = np.zeros(m, dtype=complex)
    np.add.at(spectrum, ns % m, scaled)
    return np.fft.ifft(spectrum) * m


def _eval_point(scaled: np.ndarray, ns: np.ndarray, t: float) -> float:
    z = np.exp(1j * ns * t)
    return abs(np.dot(scaled, z))


def _golden_max(scaled, ns, a: float, b: float, iters: int = 80) -> float:
    """Golden-section maximisation of |f| on [a, b]."""
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1 = _eval_point(scaled, ns, x1)
    f2 = _eval_point(scaled, ns, x2)
    for _ in range(iters):
        if b - a < 1e-15:
            break
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = _eval_point(scaled, ns, x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = _eval_point(scaled, ns, x1)
    return max(f1, f2)


def circle_sup(
    coeffs,
    n_min: int,
    radius: float = 1.0,
    rel_tol: float = 1e-6,
    abs_tol: float | None = None,
    start_grid: int = 1024,
    max_grid: int = 1 << 23,
) -> CertifiedSup:
    """Certified bracket for sup over the circle of radius r of |f|.

    Stops once hi - lo <= max(abs_tol, rel_tol * lo); abs_tol=None means
    the relative target alone. If the grid cap is reached the current
    (still valid) bracket is returned.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    c = np.asarray(coeffs, dtype=complex)
    if c.size == 0 or not np.any(c):
        return CertifiedSup(0.0, 0.0, 0)
    ns = n_min + np.arange(c.size)
    scaled = c * np.power(float(radius), ns)
    if c.size == 1:
        v = float(abs(scaled[0]))
        return CertifiedSup(v, v, 1)
    degree = int(max(abs(int(ns[0])), abs(int(ns[-1]))))
    lipschitz = float(np.sum(np.abs(scaled) * np.abs(ns)))

    m = max(start_grid, 8 * (degree + 1))
    m = 1 << (m - 1).bit_length()
    while True:
        vals = np.abs(grid_values(c, n_min, radius, m))
        dt = 2.0 * math.pi / m
        gmax = float(vals.max())

        # refine every grid local maximum that could still be global
        hi1 = gmax + lipschitz * dt / 2.0
        denom = 1.0 - (degree * dt) ** 2 / 2.0
        hi2 = gmax / math.sqrt(denom) if denom > 0 else math.inf
        hi = min(hi1, hi2)
        is_peak = (vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1))
        candidates = np.nonzero(is_peak & (vals >= gmax - (hi - gmax) - 1e-15 * gmax))[0]
        if candidates.size > 16:
            candidates = candidates[np.argsort(vals[candidates])[-16:]]
        lo = gmax
        for j in candidates:
            t0 = dt * float(j)
            lo = max(lo, _golden_max(scaled, ns, t0 - dt, t0 + dt))
        hi = max(hi, lo)

        target = rel_tol * lo if abs_tol is None else max(abs_tol, rel_tol * lo)
        if hi - lo <= target or 2 * m > max_grid:
            return CertifiedSup(lo, hi, m)
        m *= 2
