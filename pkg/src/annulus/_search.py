"""Coordinate-ascent maximisation of homogeneous ratio functionals."""

from __future__ import annotations

import numpy as np


def ratio_ascent(ratio_fn, v0: np.ndarray, max_iter: int = 10_000, min_rel_gain: float = 1e-9):
    """Greedy coordinate ascent on a scale-invariant ratio.

    Perturbs one complex coordinate at a time by +-step and +-i*step,
    halving the step when a full sweep brings no improvement. Stops on
    relative sweep gain below min_rel_gain, step underflow, or the
    iteration cap. Returns (best value, best vector).
    """
    v = np.array(v0, dtype=complex)
    scale = float(np.max(np.abs(v)))
    if scale > 0:
        v /= scale
    best = ratio_fn(v)
    step = 0.5
    it = 0
    while step > 1e-12 and it < max_iter:
        sweep_start = best
        improved = False
        for i in range(len(v)):
            for d in (step, -step, 1j * step, -1j * step):
                it += 1
                if it >= max_iter:
                    break
                w = v.copy()
                w[i] += d
                r = ratio_fn(w)
                if r > best:
                    best = r
                    v = w
                    improved = True
        if not improved:
            step *= 0.5
        elif best - sweep_start < min_rel_gain * max(best, 1e-300):
            break
        peak = float(np.max(np.abs(v)))
        if peak > 1e6:
            v /= peak
    return best, v
