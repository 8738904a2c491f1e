"""Shift operators, their power norms, spectral radii, and the annulus.

The two-sided shift sends x(n) to x(n-1); on the half line the forward
shift pads a zero at index 0 and the backward shift drops index 0. On a
weighted l^p the norm of the n-th shift power is the weight-ratio sup
sup_k w(k+n)/w(k), which is the same for every p (diagonal isometry onto
the unweighted space). Spectral radii come from the Gelfand formula; for
submultiplicative norm sequences the limit equals inf_n ||S^n||^{1/n},
so the inf over computed powers is a certified upper estimate.

The spectrum of the two-sided shift is the closed annulus with inner
radius 1/rho(S^{-1}) (zero when that radius is infinite) and outer
radius rho(S) (infinite when the forward shift is unbounded). When both
directions are unbounded the annulus degenerates: the spectrum fills the
plane and BothShiftsUnbounded is raised with that diagnostic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._search import ratio_ascent
from .errors import (
    BothShiftsUnbounded,
    InvalidSpaceParams,
    UnboundedShift,
    WindowTooSmall,
)
from .spaces import (
    FourierSupSpace,
    IntersectionSpace,
    LpSpace,
    OrliczSpace,
    SeqWindow,
    SequenceSpace,
    VarExpSpace,
    norm,
)

__all__ = [
    "NormEstimate",
    "Annulus",
    "BoundednessVerdict",
    "shift_apply",
    "shift_power_norm",
    "classify_boundedness",
    "spectral_radius",
    "spectrum_annulus",
]

FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class NormEstimate:
    """Certified-or-heuristic bracket [lower, upper] for an operator norm."""

    lower: float
    upper: float
    method: str  # exact_formula | finite_section | fekete | oracle
    window: int = 0

    def __post_init__(self):
        if self.lower < 0 or self.lower > self.upper + 1e-15 * abs(self.upper):
            raise InvalidSpaceParams("norm estimate needs 0 <= lower <= upper")


@dataclass(frozen=True)
class Annulus:
    """Closed annulus r_in <= |z| <= r_out; r_out may be infinite."""

    r_in: float
    r_out: float
    exact: bool

    def __post_init__(self):
        if self.r_in < 0 or self.r_out <= 0 or self.r_in > self.r_out:
            raise InvalidSpaceParams("annulus needs 0 <= r_in <= r_out, r_out > 0")

    def contains_radius(self, r: float, slack: float = 1e-12) -> bool:
        if r < self.r_in * (1.0 - slack):
            return False
        if math.isinf(self.r_out):
            return True
        return r <= self.r_out * (1.0 + slack)


@dataclass(frozen=True)
class BoundednessVerdict:
    status: str  # bounded | unbounded | inconclusive
    norm: NormEstimate | None
    evidence: str


def shift_apply(x: SeqWindow, n: int, half_line: bool = False) -> SeqWindow:
    """Apply the n-th shift power; negative n is the backward direction.

    Half-line composition order does not matter: left shifts project out
    the indices that fall below zero, right shifts pad zeros.
    """
    y = x.shifted(n)
    if half_line and n < 0:
        y = y.restricted(n_min=0)
    return y


def _windowed_ratio_sup_log(space_weight, n: int, window: int, half_line: bool) -> float:
    """log of sup over in-window k of w(k+n)/w(k)."""
    w = space_weight
    lo = max(w.n_min, -window, 0 if half_line else -window)
    hi = min(w.n_max, window)
    ks_lo = max(lo, lo - n)
    ks_hi = min(hi, hi - n)
    if half_line:
        ks_lo = max(ks_lo, 0, -n)
    if ks_lo > ks_hi:
        raise WindowTooSmall(f"no valid index for shift power {n} in window {window}")
    logs = w.log_array()
    ks = np.arange(ks_lo, ks_hi + 1)
    return float(np.max(logs[ks + n - w.n_min] - logs[ks - w.n_min]))


_CLOSED_TAGS = ("geometric", "exp_abs", "polynomial")


def _nonlp_section_lower(space: SequenceSpace, n: int, window: int, seed: int = 0) -> float:
    """Lower bound for the shift-power norm compressed to the window."""
    half = space.half_line
    lo = 0 if half else -min(window, 24)
    hi = min(window, 24)

    def ratio(vec: np.ndarray) -> float:
        x = SeqWindow(lo, tuple(vec))
        if x.is_zero:
            return 0.0
        y = shift_apply(x, n, half_line=half).restricted(lo, hi)
        nx = norm(space, x)
        return norm(space, y) / nx if nx > 0 else 0.0

    best = 0.0
    for k in range(lo, hi + 1):
        e = SeqWindow.basis(k)
        y = shift_apply(e, n, half_line=half).restricted(lo, hi)
        ne = norm(space, e)
        if ne > 0:
            best = max(best, norm(space, y) / ne)
    rng = np.random.default_rng(seed)
    dim = hi - lo + 1
    for _ in range(4):
        v0 = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        val, _ = ratio_ascent(ratio, v0, max_iter=2000)
        best = max(best, val)
    return best


def shift_power_norm(space: SequenceSpace, n: int, window: int = 256) -> NormEstimate:
    """Norm of the n-th shift power on the space.

    Weighted l^p: the weight-ratio sup over the window, exact (the sup
    is attained inside any window) for geometric/exp_abs/polynomial
    annotations, otherwise a lower bound. Other spaces: a finite-section
    search lower bound.
    """
    if n == 0:
        raise ValueError("shift power must be nonzero")
    if abs(n) >= window:
        raise WindowTooSmall(f"|n| = {abs(n)} must be below window {window}")
    if isinstance(space, FourierSupSpace):
        if space.half_line:
            lower = _nonlp_section_lower(space, n, window)
            return NormEstimate(lower, math.inf, "finite_section", window)
        # modulation by e^{it} translates the function: an isometry
        return NormEstimate(1.0, 1.0, "exact_formula", window)
    if isinstance(space, LpSpace):
        val = math.exp(_windowed_ratio_sup_log(space.weight, n, window, space.half_line))
        tag = space.weight.tag
        if tag is not None and tag.kind in _CLOSED_TAGS:
            return NormEstimate(val, val, "exact_formula", window)
        return NormEstimate(val, math.inf, "finite_section", window)
    if isinstance(space, IntersectionSpace):
        # ||S^n x|| <= max_i ||S^n||_i ||x||_i <= (max_i ||S^n||_i) ||x||,
        # while basis vectors give the lower bound max_k ||e_{k+n}||/||e_k||
        parts = [shift_power_norm(p, n, window) for p in space.parts]
        upper = max(p.upper for p in parts)
        lower = 0.0
        lo_k = 0 if space.half_line else -window
        for k in range(max(lo_k, lo_k - n), min(window, window - n) + 1):
            if space.half_line and (k < 0 or k + n < 0):
                continue
            try:
                num = norm(space, SeqWindow.basis(k + n))
                den = norm(space, SeqWindow.basis(k))
            except Exception:
                continue
            if den > 0:
                lower = max(lower, num / den)
        return NormEstimate(min(lower, upper), upper, "finite_section", window)
    lower = _nonlp_section_lower(space, n, window)
    upper = math.inf
    if isinstance(space, OrliczSpace):
        tag = space.weight.tag
        if tag is not None and tag.kind in _CLOSED_TAGS:
            # convex modular scaling: ||S^n|| <= max(1, sup-ratio)
            r = math.exp(_windowed_ratio_sup_log(space.weight, n, window, space.half_line))
            upper = max(1.0, r)
    return NormEstimate(min(lower, upper), upper, "finite_section", window)


def _annotated_shift_bound(space, direction: str) -> tuple[float, str] | None:
    """Closed-form weight-ratio sup for annotated weights, or None."""
    weight = getattr(space, "weight", None)
    if weight is None or weight.tag is None:
        return None
    tag = weight.tag
    sgn = 1 if direction == FORWARD else -1
    if tag.kind == "geometric":
        r0 = tag.param
        val = r0 if sgn > 0 else 1.0 / r0
        return val, f"geometric weight: ratio w(k+1)/w(k) = {val:g} everywhere"
    if tag.kind == "exp_abs":
        a = tag.param
        if space.half_line:
            val = math.exp(a) if sgn > 0 else math.exp(-a)
        else:
            val = math.exp(abs(a))
        return val, "exp_abs weight: ratio sup e^{a(|k+1|-|k|)}"
    if tag.kind == "polynomial":
        d = tag.param
        if space.half_line and sgn < 0:
            val = 1.0  # sup over k >= 0 of ((1+k)/(2+k))^d approaches 1
        else:
            val = 2.0**d
        return val, "polynomial weight: ratio sup ((1+|k+1|)/(1+|k|))^d"
    return None


def classify_boundedness(
    space: SequenceSpace, direction: str, windows: tuple[int, ...] = (64, 128, 256)
) -> BoundednessVerdict:
    """Decide boundedness of the shift in one direction.

    Annotation-driven when the weight carries one (geometric, exp_abs,
    polynomial: bounded with closed-form ratio sup; remark1: unbounded,
    the odd/even ratios diverge). Otherwise windowed norms across at
    least three window sizes: stabilising (relative change < 1e-6) means
    bounded, total growth by a factor >= 2 means unbounded, anything
    else is inconclusive. Unboundedness is not decidable from finitely
    many values, so the heuristic verdicts say so in their evidence.
    """
    if direction not in (FORWARD, BACKWARD):
        raise ValueError(f"unknown direction {direction!r}")
    if len(windows) < 3 or list(windows) != sorted(set(windows)):
        raise ValueError("need at least three increasing windows")
    n = 1 if direction == FORWARD else -1

    if isinstance(space, FourierSupSpace) and not space.half_line:
        est = NormEstimate(1.0, 1.0, "exact_formula", windows[-1])
        return BoundednessVerdict("bounded", est, "shift acts as translation, an isometry")

    if isinstance(space, IntersectionSpace):
        parts = [classify_boundedness(p, direction, windows) for p in space.parts]
        if all(p.status == "bounded" for p in parts):
            upper = max(p.norm.upper for p in parts)
            est = NormEstimate(0.0, upper, "finite_section", windows[-1])
            return BoundednessVerdict("bounded", est, "every component shift bounded")
        return BoundednessVerdict("inconclusive", None, "some component not certified bounded")

    if isinstance(space, VarExpSpace):
        qs = set(space.exponents.values)
        if len(qs) == 1:
            est = NormEstimate(1.0, 1.0, "exact_formula", windows[-1])
            return BoundednessVerdict("bounded", est, "constant exponent: plain l^q, shift isometry")
        return BoundednessVerdict(
            "inconclusive", None, "variable exponent: boundedness criterion out of scope"
        )

    weight = getattr(space, "weight", None)
    if weight is not None and weight.tag is not None and weight.tag.kind == "remark1":
        if direction == FORWARD:
            ev = "w(2k+1)/w(2k) = |k|+1 is unbounded over k"
        else:
            ev = "w(2k)/w(2k+1) at even targets grows like |k|"
        return BoundednessVerdict("unbounded", None, ev)

    closed = _annotated_shift_bound(space, direction)
    if closed is not None:
        val, ev = closed
        if isinstance(space, LpSpace):
            est = NormEstimate(val, val, "exact_formula", windows[-1])
        else:
            est = NormEstimate(0.0, max(1.0, val), "exact_formula", windows[-1])
        return BoundednessVerdict("bounded", est, ev)

    if not isinstance(space, LpSpace):
        return BoundednessVerdict("inconclusive", None, "no annotation and no closed form")

    # clamp to the weight's own window; identical effective sizes carry
    # no growth information, so they are deduplicated
    w = space.weight
    available = w.n_max if space.half_line else min(-w.n_min, w.n_max)
    effective = sorted({min(ws, available) for ws in windows})
    vals = []
    for wsize in effective:
        try:
            vals.append(math.exp(_windowed_ratio_sup_log(w, n, wsize, space.half_line)))
        except WindowTooSmall:
            pass
    if len(vals) < 3:
        return BoundednessVerdict("inconclusive", None, "weight window too small to compare")
    if abs(vals[-1] - vals[-2]) <= 1e-6 * vals[-1]:
        est = NormEstimate(vals[-1], vals[-1], "finite_section", windows[-1])
        return BoundednessVerdict(
            "bounded", est, f"windowed norm stabilised at {vals[-1]:.12g} (heuristic)"
        )
    if vals[-1] >= 2.0 * vals[0]:
        return BoundednessVerdict(
            "unbounded", None, f"windowed norm grew {vals[0]:.6g} -> {vals[-1]:.6g} (factor >= 2)"
        )
    return BoundednessVerdict("inconclusive", None, "windowed norms neither stable nor doubling")


def spectral_radius(
    space: SequenceSpace,
    direction: str = FORWARD,
    max_power: int = 32,
    window: int = 256,
) -> NormEstimate:
    """Spectral radius of the shift (or its inverse) via the Gelfand formula.

    inf over 1 <= n <= max_power of ||S^n||^{1/n} is an upper estimate
    of the limit; the last power alone is the conventional point
    estimate. The two are emitted sorted so lower <= upper, and coincide
    for geometric and exp_abs weights. Infinite when the direction is
    classified unbounded; inconclusive classifications raise.
    """
    verdict = classify_boundedness(
        space, direction, windows=(max(window // 4, max_power + 1), max(window // 2, max_power + 2), window)
    )
    if verdict.status == "unbounded":
        return NormEstimate(math.inf, math.inf, "exact_formula", window)
    if verdict.status == "inconclusive":
        raise UnboundedShift(direction, verdict)

    if isinstance(space, LpSpace) and space.weight.tag is not None:
        tag = space.weight.tag
        if tag.kind == "geometric":
            v = tag.param if direction == FORWARD else 1.0 / tag.param
            return NormEstimate(v, v, "exact_formula", window)
        if tag.kind == "polynomial":
            # subexponential growth: ||S^n||^{1/n} = (1+n)^{d/n} -> 1
            return NormEstimate(1.0, 1.0, "exact_formula", window)
    if isinstance(space, FourierSupSpace) and not space.half_line:
        return NormEstimate(1.0, 1.0, "exact_formula", window)

    sgn = 1 if direction == FORWARD else -1
    vals = []
    for k in range(1, max_power + 1):
        est = shift_power_norm(space, sgn * k, window)
        vals.append(est.lower ** (1.0 / k))
    fekete = min(vals)
    last = vals[-1]
    return NormEstimate(min(fekete, last), max(fekete, last), "fekete", window)


def spectrum_annulus(space: SequenceSpace, max_power: int = 32, window: int = 256) -> Annulus:
    """Annulus {1/rho(S^{-1}) <= |z| <= rho(S)} equal to the shift spectrum.

    Requires at least one bounded direction; raises BothShiftsUnbounded
    with the plane-filling diagnostic otherwise.
    """
    fwd = classify_boundedness(space, FORWARD, windows=(window // 4, window // 2, window))
    bwd = classify_boundedness(space, BACKWARD, windows=(window // 4, window // 2, window))
    if fwd.status == "unbounded" and bwd.status == "unbounded":
        raise BothShiftsUnbounded("both shift directions unbounded: spec(S) = C")

    rho_f = spectral_radius(space, FORWARD, max_power, window)
    rho_b = spectral_radius(space, BACKWARD, max_power, window)
    r_out = rho_f.upper
    r_in = 0.0 if math.isinf(rho_b.upper) else 1.0 / rho_b.upper
    exact = rho_f.method == "exact_formula" and rho_b.method == "exact_formula"
    if isinstance(space, LpSpace) and space.weight.tag is not None:
        exact = exact or space.weight.tag.kind in _CLOSED_TAGS
    r_in = min(r_in, r_out)
    return Annulus(r_in, r_out, exact)
