"""Weighted sequence spaces and their norm evaluators.

Five norm families over finitely supported complex sequences:

  * LpSpace        -- (sum |x(n)|^p w(n)^p)^(1/p), weights w > 0
  * OrliczSpace    -- Luxemburg norm of the modular sum K(|x(n)|/t) w(n)
  * VarExpSpace    -- Luxemburg norm of sum |x(n)/t|^{q(n)}
  * IntersectionSpace -- max of component norms
  * FourierSupSpace   -- sup over the unit circle of |sum x(n) e^{int}|

Every space lives on a finite index window (the infinite spaces are
represented by their finite-section restrictions; finite sequences are
dense in all of them). The modulation x(n) -> x(n) z^n with |z| = 1 is
an isometry for each family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .errors import (
    InvalidSpaceParams,
    ModularDivergesForAllT,
    NonUnimodularZ,
    SupportOutsideWindow,
)
from . import trigpoly

__all__ = [
    "SeqWindow",
    "Weight",
    "WeightTag",
    "make_weight",
    "LpSpace",
    "OrliczFunction",
    "OrliczSpace",
    "ExponentMap",
    "VarExpSpace",
    "IntersectionSpace",
    "FourierSupSpace",
    "SequenceSpace",
    "norm",
    "luxemburg_norm",
    "apply_modulation",
]


# ---------------------------------------------------------------------------
# sequences


@dataclass(frozen=True)
class SeqWindow:
    """Finitely supported complex sequence: coeffs[i] is x(offset + i).

    Canonical form: first and last coefficient nonzero, or the designated
    zero sequence (offset 0, empty coeffs).
    """

    offset: int
    coeffs: tuple[complex, ...]

    def __post_init__(self):
        c = tuple(complex(v) for v in self.coeffs)
        lo, hi = 0, len(c)
        while lo < hi and c[lo] == 0:
            lo += 1
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "offset", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "offset", self.offset + lo)
            object.__setattr__(self, "coeffs", c[lo:hi])

    @staticmethod
    def zero() -> "SeqWindow":
        return SeqWindow(0, ())

    @staticmethod
    def basis(k: int) -> "SeqWindow":
        return SeqWindow(k, (1.0,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def n_min(self) -> int:
        return self.offset

    @property
    def n_max(self) -> int:
        return self.offset + len(self.coeffs) - 1

    def value_at(self, n: int) -> complex:
        i = n - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0j

    def array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=complex)

    def shifted(self, n: int) -> "SeqWindow":
        if self.is_zero:
            return self
        return SeqWindow(self.offset + n, self.coeffs)

    def restricted(self, n_min: int | None = None, n_max: int | None = None) -> "SeqWindow":
        """Zero out coefficients outside [n_min, n_max]."""
        if self.is_zero:
            return self
        kept = [
            (n, v)
            for n, v in self.items()
            if (n_min is None or n >= n_min) and (n_max is None or n <= n_max)
        ]
        if not kept:
            return SeqWindow.zero()
        lo = kept[0][0]
        hi = kept[-1][0]
        dense = [0j] * (hi - lo + 1)
        for n, v in kept:
            dense[n - lo] = v
        return SeqWindow(lo, tuple(dense))

    def items(self):
        for i, v in enumerate(self.coeffs):
            yield self.offset + i, v

    def __add__(self, other: "SeqWindow") -> "SeqWindow":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.n_max, other.n_max)
        dense = [0j] * (hi - lo + 1)
        for n, v in self.items():
            dense[n - lo] += v
        for n, v in other.items():
            dense[n - lo] += v
        return SeqWindow(lo, tuple(dense))

    def __sub__(self, other: "SeqWindow") -> "SeqWindow":
        return self + (-1.0) * other

    def __rmul__(self, scalar: complex) -> "SeqWindow":
        if scalar == 0 or self.is_zero:
            return SeqWindow.zero()
        return SeqWindow(self.offset, tuple(scalar * v for v in self.coeffs))

    def __neg__(self) -> "SeqWindow":
        return (-1.0) * self


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class WeightTag:
    """Analytic annotation: geometric(r0), exp_abs(alpha), polynomial(d), remark1, table."""

    kind: str
    param: float | None = None


@dataclass(frozen=True)
class Weight:
    """Positive weight on an index window, stored as log w(n).

    Logs keep factorial-scale weights finite and make ratios exact to
    work with; w(n) itself may overflow a double.
    """

    n_min: int
    n_max: int
    log_values: tuple[float, ...]
    tag: WeightTag | None = None

    def __post_init__(self):
        if self.n_max - self.n_min + 1 != len(self.log_values):
            raise InvalidSpaceParams("weight window does not match number of values")
        if any(not math.isfinite(v) for v in self.log_values):
            raise InvalidSpaceParams("weight must be positive with finite log")

    def contains(self, n: int) -> bool:
        return self.n_min <= n <= self.n_max

    def log_at(self, n: int) -> float:
        if not self.contains(n):
            raise SupportOutsideWindow(f"index {n} outside weight window [{self.n_min},{self.n_max}]")
        return self.log_values[n - self.n_min]

    def value_at(self, n: int) -> float:
        return math.exp(self.log_at(n))

    def ratio(self, num: int, den: int) -> float:
        """w(num) / w(den)."""
        return math.exp(self.log_at(num) - self.log_at(den))

    def log_array(self) -> np.ndarray:
        return np.asarray(self.log_values, dtype=float)


def make_weight(
    kind: str,
    window: int,
    param: float | None = None,
    *,
    values=None,
    log_values=None,
    half_line: bool = False,
) -> Weight:
    """Build a weight on [-N, N] (or [0, N] on the half line).

    Kinds: geometric (w(n) = r0^n), exp_abs (e^{a|n|}), polynomial
    ((1+|n|)^d), remark1 (w(2n) = 1, w(2n+1) = |n|+1), table (explicit
    values or log-values across the window).
    """
    if window < 1:
        raise InvalidSpaceParams("window must be >= 1")
    n_min = 0 if half_line else -window
    ns = range(n_min, window + 1)
    if kind == "geometric":
        if param is None or param <= 0:
            raise InvalidSpaceParams("geometric weight needs r0 > 0")
        logs = [n * math.log(param) for n in ns]
        tag = WeightTag("geometric", float(param))
    elif kind == "exp_abs":
        if param is None:
            raise InvalidSpaceParams("exp_abs weight needs alpha")
        logs = [param * abs(n) for n in ns]
        tag = WeightTag("exp_abs", float(param))
    elif kind == "polynomial":
        if param is None or param < 0:
            raise InvalidSpaceParams("polynomial weight needs degree d >= 0")
        logs = [param * math.log1p(abs(n)) for n in ns]
        tag = WeightTag("polynomial", float(param))
    elif kind == "remark1":
        logs = [0.0 if n % 2 == 0 else math.log(abs((n - 1) // 2) + 1) for n in ns]
        tag = WeightTag("remark1")
    elif kind == "table":
        if (values is None) == (log_values is None):
            raise InvalidSpaceParams("table weight needs exactly one of values/log_values")
        if values is not None:
            vals = [float(v) for v in values]
            if len(vals) != len(ns) or any(v <= 0 for v in vals):
                raise InvalidSpaceParams("table values must be positive and span the window")
            logs = [math.log(v) for v in vals]
        else:
            logs = [float(v) for v in log_values]
            if len(logs) != len(ns):
                raise InvalidSpaceParams("table log_values must span the window")
        tag = WeightTag("table")
    else:
        raise InvalidSpaceParams(f"unknown weight kind {kind!r}")
    return Weight(n_min, window, tuple(logs), tag)


# ---------------------------------------------------------------------------
# space descriptors


@dataclass(frozen=True)
class LpSpace:
    """Weighted l^p; p = inf is admitted only as a limiting case for matrix norms."""

    p: float
    weight: Weight
    half_line: bool = False

    def __post_init__(self):
        if not (self.p >= 1):
            raise InvalidSpaceParams("p must satisfy p >= 1")
        if self.half_line and self.weight.n_min != 0:
            raise InvalidSpaceParams("half-line space needs a weight on [0, N]")


@dataclass(frozen=True)
class OrliczFunction:
    """Young-type function K: convex nondecreasing, K(0)=0, K(x)>0 for x>0.

    kind 'power' is x^p; 'power_oscillating' is x^{p + sin(log(-log x))}
    on (0,1) glued to x^p on [1,inf); 'custom' wraps a caller function
    (validated by sampling).
    """

    kind: str
    param: float | None = None
    fn: Callable[[float], float] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind == "power":
            if self.param is None or self.param < 1:
                raise InvalidSpaceParams("power Orlicz function needs p >= 1")
        elif self.kind == "power_oscillating":
            if self.param is None or self.param <= 1 + math.sqrt(2):
                raise InvalidSpaceParams("oscillating power needs p > 1 + sqrt(2)")
        elif self.kind == "custom":
            if self.fn is None:
                raise InvalidSpaceParams("custom Orlicz function needs a callable")
            self._validate_by_sampling()
        else:
            raise InvalidSpaceParams(f"unknown Orlicz function kind {self.kind!r}")

    def _validate_by_sampling(self):
        samples = [0.0, 1e-9, 1e-4, 0.01, 0.5, 1.0, 2.0, 10.0, 1e3]
        vals = [self.fn(x) for x in samples]
        if abs(vals[0]) > 0:
            raise InvalidSpaceParams("Orlicz function must satisfy K(0) = 0")
        if any(b < a - 1e-15 for a, b in zip(vals, vals[1:])):
            raise InvalidSpaceParams("Orlicz function must be nondecreasing")
        if any(v <= 0 for v in vals[1:]):
            raise InvalidSpaceParams("Orlicz function must be positive for x > 0")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == "power":
            return x**self.param
        if self.kind == "power_oscillating":
            out = np.empty_like(x)
            small = (x > 0) & (x < 1)
            out[x == 0] = 0.0
            out[x >= 1] = x[x >= 1] ** self.param
            xs = x[small]
            out[small] = xs ** (self.param + np.sin(np.log(-np.log(xs))))
            return out
        return np.vectorize(self.fn, otypes=[float])(x)


@dataclass(frozen=True)
class OrliczSpace:
    young: OrliczFunction
    weight: Weight
    half_line: bool = False

    def __post_init__(self):
        if self.half_line and self.weight.n_min != 0:
            raise InvalidSpaceParams("half-line space needs a weight on [0, N]")


@dataclass(frozen=True)
class ExponentMap:
    """Variable exponent q(n) >= 1 on an index window."""

    n_min: int
    values: tuple[float, ...]

    def __post_init__(self):
        if not self.values:
            raise InvalidSpaceParams("exponent map must be nonempty")
        if any(q < 1 for q in self.values):
            raise InvalidSpaceParams("exponents must satisfy q(n) >= 1")

    @property
    def n_max(self) -> int:
        return self.n_min + len(self.values) - 1

    def contains(self, n: int) -> bool:
        return self.n_min <= n <= self.n_max

    def at(self, n: int) -> float:
        if not self.contains(n):
            raise SupportOutsideWindow(f"index {n} outside exponent window")
        return self.values[n - self.n_min]

    @staticmethod
    def constant(q: float, window: int, half_line: bool = False) -> "ExponentMap":
        n_min = 0 if half_line else -window
        return ExponentMap(n_min, tuple([float(q)] * (window - n_min + 1)))

    @staticmethod
    def from_function(fn: Callable[[int], float], window: int, half_line: bool = False) -> "ExponentMap":
        n_min = 0 if half_line else -window
        return ExponentMap(n_min, tuple(float(fn(n)) for n in range(n_min, window + 1)))


@dataclass(frozen=True)
class VarExpSpace:
    exponents: ExponentMap
    half_line: bool = False


@dataclass(frozen=True)
class IntersectionSpace:
    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise InvalidSpaceParams("intersection needs at least one component")
        flags = {p.half_line for p in self.parts}
        if len(flags) > 1:
            raise InvalidSpaceParams("intersection components disagree on half-line flag")

    @property
    def half_line(self) -> bool:
        return self.parts[0].half_line


@dataclass(frozen=True)
class FourierSupSpace:
    half_line: bool = False


SequenceSpace = Union[LpSpace, OrliczSpace, VarExpSpace, IntersectionSpace, FourierSupSpace]


# ---------------------------------------------------------------------------
# norms


def _check_support(space: SequenceSpace, x: SeqWindow) -> None:
    if space.half_line and x.n_min < 0:
        raise SupportOutsideWindow("half-line space requires support in Z+")
    if isinstance(space, (LpSpace, OrliczSpace)):
        w = space.weight
        if x.n_min < w.n_min or x.n_max > w.n_max:
            raise SupportOutsideWindow(
                f"support [{x.n_min},{x.n_max}] outside weight window [{w.n_min},{w.n_max}]"
            )
    elif isinstance(space, VarExpSpace):
        q = space.exponents
        if x.n_min < q.n_min or x.n_max > q.n_max:
            raise SupportOutsideWindow("support outside exponent window")
    elif isinstance(space, IntersectionSpace):
        for part in space.parts:
            _check_support(part, x)


def _logsumexp(vals: np.ndarray) -> float:
    m = float(np.max(vals))
    if m == -math.inf:
        return -math.inf
    return m + math.log(float(np.sum(np.exp(vals - m))))


def _lp_norm(space: LpSpace, x: SeqWindow) -> float:
    idx = np.arange(x.n_min, x.n_max + 1)
    mags = np.abs(x.array())
    logw = space.weight.log_array()[idx - space.weight.n_min]
    mask = mags > 0
    if not np.any(mask):
        return 0.0
    terms = np.log(mags[mask]) + logw[mask]
    if math.isinf(space.p):
        return math.exp(float(np.max(terms)))
    return math.exp(_logsumexp(space.p * terms) / space.p)


def _orlicz_modular(space: OrliczSpace, x: SeqWindow) -> Callable[[float], float]:
    idx = np.arange(x.n_min, x.n_max + 1)
    mags = np.abs(x.array())
    w = np.exp(space.weight.log_array()[idx - space.weight.n_min])

    def modular(t: float) -> float:
        return float(np.sum(space.young(mags / t) * w))

    return modular


def _varexp_modular(space: VarExpSpace, x: SeqWindow) -> Callable[[float], float]:
    mags = np.abs(x.array())
    q = np.asarray([space.exponents.at(n) for n, _ in x.items()], dtype=float)

    def modular(t: float) -> float:
        return float(np.sum((mags / t) ** q))

    return modular


def luxemburg_norm(modular: Callable[[float], float], x: SeqWindow) -> float:
    """inf{t > 0 : modular(t) <= 1} by bracketing and bisection.

    The modular must be nonincreasing in t. Starts at t = max|x(n)|,
    doubles or halves up to 200 times to bracket, then bisects 200 steps
    (relative tolerance 1e-12); the returned t is feasible.
    """
    if x.is_zero:
        return 0.0
    t = float(np.max(np.abs(x.array())))
    if t == 0.0:
        return 0.0
    if modular(t) <= 1.0:
        hi = t
        lo = t / 2.0
        steps = 0
        while modular(lo) <= 1.0:
            hi = lo
            lo /= 2.0
            steps += 1
            if steps >= 200:
                return hi
    else:
        lo = t
        hi = None
        for _ in range(200):
            t *= 2.0
            if modular(t) <= 1.0:
                hi = t
                break
            lo = t
        if hi is None:
            raise ModularDivergesForAllT("modular exceeds 1 for every bracketed t")
    for _ in range(200):
        if hi - lo <= 1e-12 * hi:
            break
        mid = 0.5 * (lo + hi)
        if modular(mid) <= 1.0:
            hi = mid
        else:
            lo = mid
    return hi


def fourier_sup_certified(x: SeqWindow, rel_tol: float = 1e-6) -> trigpoly.CertifiedSup:
    """Certified bracket for sup_t |sum x(n) e^{int}|."""
    if x.is_zero:
        return trigpoly.CertifiedSup(0.0, 0.0, 0)
    return trigpoly.circle_sup(x.coeffs, x.n_min, 1.0, rel_tol=rel_tol)


def norm(space: SequenceSpace, x: SeqWindow) -> float:
    """Norm of a finite sequence in the given space.

    The zero sequence has norm 0 in every space. Orlicz and variable
    exponent norms go through the Luxemburg infimum; the Fourier sup
    norm returns the refined lower end of a certified bracket whose
    width is at most 1e-6 relative.
    """
    if x.is_zero:
        return 0.0
    _check_support(space, x)
    if isinstance(space, LpSpace):
        return _lp_norm(space, x)
    if isinstance(space, OrliczSpace):
        return luxemburg_norm(_orlicz_modular(space, x), x)
    if isinstance(space, VarExpSpace):
        return luxemburg_norm(_varexp_modular(space, x), x)
    if isinstance(space, IntersectionSpace):
        return max(norm(part, x) for part in space.parts)
    if isinstance(space, FourierSupSpace):
        return fourier_sup_certified(x).lo
    raise InvalidSpaceParams(f"unknown space {space!r}")


def apply_modulation(z: complex, x: SeqWindow) -> SeqWindow:
    """x(n) -> x(n) z^n for |z| = 1 (within 1e-12)."""
    if abs(abs(z) - 1.0) > 1e-12:
        raise NonUnimodularZ(f"|z| = {abs(z)!r} is not 1")
    if x.is_zero:
        return x
    ns = np.arange(x.n_min, x.n_max + 1)
    factors = np.power(complex(z), ns)
    return SeqWindow(x.offset, tuple(x.array() * factors))
