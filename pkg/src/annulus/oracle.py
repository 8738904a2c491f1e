"""Independent brute-force oracles for cross-checking the main modules.

These deliberately share no arithmetic code with the main paths: the
convolution is a bare double loop, the matrix norm is a random sphere
search with its own ascent loop, and the weight-ratio sup is an
exhaustive scan.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import MatrixTooLargeForOracle, WindowTooSmall
from .multiplier import FiniteSymbol
from .shift_spectrum import NormEstimate
from .spaces import SeqWindow, Weight

__all__ = ["naive_convolve", "naive_operator_norm", "windowed_ratio_sup"]


def naive_convolve(phi: FiniteSymbol, x: SeqWindow) -> SeqWindow:
    """Double loop over all index pairs; no algebraic shortcuts."""
    if phi.is_zero or x.is_zero:
        return SeqWindow.zero()
    lo = phi.n_min + x.n_min
    hi = phi.n_max + x.n_max
    acc = [0j] * (hi - lo + 1)
    for k in range(phi.n_min, phi.n_max + 1):
        for m in range(x.n_min, x.n_max + 1):
            acc[k + m - lo] += phi.value_at(k) * x.value_at(m)
    return SeqWindow(lo, tuple(acc))


def _vec_pnorm(v, p):
    if math.isinf(p):
        return max(abs(c) for c in v)
    return sum(abs(c) ** p for c in v) ** (1.0 / p)


def naive_operator_norm(matrix, p: float, samples: int = 64, seed: int = 0) -> NormEstimate:
    """Lower bound for the matrix p-norm by random starts plus ascent.

    Dense search only, matrices up to 12 x 12. For p in {1, 2, inf} the
    exact value (column sums, SVD, row sums) is also computed, must
    dominate the search result up to 1e-8, and is returned as a tight
    bracket; otherwise upper stays infinite.
    """
    mat = np.asarray(matrix, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] > 12 or mat.shape[1] > 12:
        raise MatrixTooLargeForOracle("dense sphere search accepts at most 12 x 12")
    if not (p >= 1):
        raise ValueError("p must satisfy p >= 1")
    dim = mat.shape[1]

    def ratio(v):
        nv = _vec_pnorm(v, p)
        if nv == 0:
            return 0.0
        return _vec_pnorm(mat @ v, p) / nv

    best = 0.0
    for s in range(samples):
        rng = np.random.default_rng(seed + s)
        v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        v /= _vec_pnorm(v, p)
        val = ratio(v)
        step = 0.5
        while step > 1e-11:
            moved = False
            for i in range(dim):
                for d in (step, -step, 1j * step, -1j * step):
                    w = v.copy()
                    w[i] += d
                    r = ratio(w)
                    if r > val:
                        gain = r - val
                        v, val = w, r
                        moved = True
                        if gain < 1e-9 * max(val, 1e-300):
                            step *= 0.5
            if not moved:
                step *= 0.5
        best = max(best, val)

    exact = None
    if p == 1:
        exact = float(np.max(np.sum(np.abs(mat), axis=0)))
    elif p == 2:
        exact = float(np.linalg.svd(mat, compute_uv=False)[0])
    elif math.isinf(p):
        exact = float(np.max(np.sum(np.abs(mat), axis=1)))
    if exact is not None:
        if best > exact + 1e-8:
            raise AssertionError(f"search {best} exceeded exact p-norm {exact}")
        return NormEstimate(exact, exact, "oracle", mat.shape[0])
    return NormEstimate(best, math.inf, "oracle", mat.shape[0])


def windowed_ratio_sup(weight: Weight, n: int, window: int) -> float:
    """Exhaustive max of w(k+n)/w(k) over every valid k in the window."""
    if abs(n) >= window:
        raise WindowTooSmall(f"need |n| = {abs(n)} < window = {window}")
    best = None
    for k in range(-window, window + 1):
        if not (weight.contains(k) and weight.contains(k + n)):
            continue
        val = math.exp(weight.log_at(k + n) - weight.log_at(k))
        if best is None or val > best:
            best = val
    if best is None:
        raise WindowTooSmall("no valid index pair inside the weight window")
    return best
