"""Half-line operators: projection, Toeplitz action, extraction, bounds.

A Toeplitz operator T on a half-line space commutes through the shifts
as S_{-1} T S_1 = T on finite sequences; equivalently T u = P+(t * u)
for the extracted two-sided coefficient sequence t. The generating
coefficients are read off basis vectors: t(n) = (T e_0)(n) for n >= 0
and t(-n) = (T e_n)(0) for n >= 1.

check_toeplitz_bound mirrors the two-sided symbol check with half-line
finite sections and the region picked by shift boundedness: both shifts
bounded gives the annulus Omega, forward unbounded gives the outward
ray region U, backward unbounded gives the disk region V.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import trigpoly
from .errors import (
    BandExceedsBlackBox,
    BandwidthExceedsWindow,
    BothShiftsUnbounded,
    InvalidSpaceParams,
    NegativeSupportInput,
    SupportOutsideWindow,
)
from .multiplier import (
    BoundReport,
    FiniteSection,
    FiniteSymbol,
    convolve,
    operator_norm,
    symbol_sup_on_circle,
    _band_matrix,
    _triangle_upper,
    _verdict,
)
from .shift_spectrum import (
    BACKWARD,
    FORWARD,
    Annulus,
    NormEstimate,
    classify_boundedness,
    spectrum_annulus,
)
from .spaces import LpSpace, SeqWindow, SequenceSpace, norm

__all__ = [
    "ToeplitzOp",
    "IdentityCheck",
    "project_plus",
    "toeplitz_apply",
    "extract_symbol_coeffs",
    "check_toeplitz_identity",
    "toeplitz_finite_section",
    "toeplitz_region",
    "toeplitz_norm_bounds",
    "check_toeplitz_bound",
]


def project_plus(x: SeqWindow) -> SeqWindow:
    """Zero every coefficient at a negative index; idempotent."""
    return x.restricted(n_min=0)


def toeplitz_apply(phi: FiniteSymbol, u: SeqWindow) -> SeqWindow:
    """T u = P+(phi * u) for u supported in Z+."""
    if not u.is_zero and u.n_min < 0:
        raise NegativeSupportInput("input must be supported in Z+")
    return project_plus(convolve(phi, u))


@dataclass(frozen=True)
class ToeplitzOp:
    """Either a banded convolution-projection operator or a black box.

    Black boxes are given by their action on basis vectors e_0..e_B; the
    band limit B bounds which coefficients can be extracted.
    """

    symbol: FiniteSymbol | None = None
    action: Callable[[int], SeqWindow] | None = None
    band_limit: int = 32

    def __post_init__(self):
        if (self.symbol is None) == (self.action is None):
            raise InvalidSpaceParams("provide exactly one of symbol/action")
        if self.band_limit < 1:
            raise InvalidSpaceParams("band limit must be >= 1")

    @staticmethod
    def from_symbol(phi: FiniteSymbol, band_limit: int | None = None) -> "ToeplitzOp":
        limit = band_limit if band_limit is not None else max(32, phi.band)
        return ToeplitzOp(symbol=phi, band_limit=limit)

    @staticmethod
    def from_action(fn: Callable[[int], SeqWindow], band_limit: int = 32) -> "ToeplitzOp":
        return ToeplitzOp(action=fn, band_limit=band_limit)

    def apply_basis(self, j: int) -> SeqWindow:
        if self.symbol is not None:
            return toeplitz_apply(self.symbol, SeqWindow.basis(j))
        if j > self.band_limit + 1:
            raise BandExceedsBlackBox(f"basis index {j} beyond band limit {self.band_limit}")
        return self.action(j)

    def apply(self, u: SeqWindow) -> SeqWindow:
        if self.symbol is not None:
            return toeplitz_apply(self.symbol, u)
        if not u.is_zero and u.n_min < 0:
            raise NegativeSupportInput("input must be supported in Z+")
        out = SeqWindow.zero()
        for n, v in u.items():
            out = out + v * self.apply_basis(n)
        return out


def extract_symbol_coeffs(T: ToeplitzOp, band: int) -> FiniteSymbol:
    """Recover coefficients from T e_0 (nonnegative side) and (T e_n)(0)."""
    if band < 0:
        raise ValueError("band must be >= 0")
    if T.symbol is None and band > T.band_limit:
        raise BandExceedsBlackBox(f"band {band} exceeds declared limit {T.band_limit}")
    te0 = T.apply_basis(0)
    coeffs = {}
    for n in range(0, band + 1):
        coeffs[n] = te0.value_at(n)
    for n in range(1, band + 1):
        coeffs[-n] = T.apply_basis(n).value_at(0)
    dense = [coeffs.get(n, 0j) for n in range(-band, band + 1)]
    return FiniteSymbol(-band, tuple(dense))


@dataclass(frozen=True)
class IdentityCheck:
    holds: bool
    first_failure: tuple[int, int] | None  # (basis index j, coefficient index)


def check_toeplitz_identity(T: ToeplitzOp, n_max: int, tol: float = 1e-12) -> IdentityCheck:
    """Verify S_{-1} T S_1 e_j = T e_j coefficientwise for j <= n_max."""
    for j in range(0, n_max + 1):
        rhs = T.apply_basis(j)
        lifted = T.apply_basis(j + 1)  # T S_1 e_j
        lhs = lifted.shifted(-1).restricted(n_min=0)  # S_{-1} then half-line truncation
        diff = lhs - rhs
        for n, v in diff.items():
            if abs(v) > tol:
                return IdentityCheck(False, (j, n))
    return IdentityCheck(True, None)


def toeplitz_finite_section(phi: FiniteSymbol, space: SequenceSpace, N: int) -> FiniteSection:
    """Compression of T to span{e_0 .. e_N}; entry (i,j) is phi(i-j) conjugated."""
    if not space.half_line:
        raise InvalidSpaceParams("Toeplitz sections need a half-line space")
    if N < 1:
        raise InvalidSpaceParams("window N must be >= 1")
    if phi.band > N:
        raise BandwidthExceedsWindow(f"band {phi.band} exceeds N = {N}")
    size = N + 1
    if isinstance(space, LpSpace):
        w = space.weight
        if w.n_max < N:
            raise SupportOutsideWindow("weight window smaller than section window")
        logs = np.asarray([w.log_at(n) for n in range(0, N + 1)])
        return FiniteSection(_band_matrix(phi, size, logs), space, 0)

    def norm_eval(vec: np.ndarray) -> float:
        return norm(space, SeqWindow(0, tuple(vec)))

    return FiniteSection(_band_matrix(phi, size, None), space, 0, norm_eval)


def toeplitz_region(space: SequenceSpace, window: int = 256) -> tuple[str, Annulus]:
    """Region where the symbol bound applies: Omega, U (ray), or V (disk)."""
    if not space.half_line:
        raise InvalidSpaceParams("region selection needs a half-line space")
    fwd = classify_boundedness(space, FORWARD, windows=(window // 4, window // 2, window))
    bwd = classify_boundedness(space, BACKWARD, windows=(window // 4, window // 2, window))
    if fwd.status == "unbounded" and bwd.status == "unbounded":
        raise BothShiftsUnbounded("both half-line shifts unbounded: no bounded region")
    annulus = spectrum_annulus(space, window=window)
    if fwd.status == "unbounded":
        return "U", annulus
    if bwd.status == "unbounded":
        return "V", annulus
    return "Omega", annulus


def toeplitz_norm_bounds(
    phi: FiniteSymbol, space: SequenceSpace, N: int, seed: int = 0
) -> NormEstimate:
    """Bracket for the Toeplitz operator norm on the half-line space.

    For weighted l^2 with const/geometric weights (half-line exp_abs is
    geometric) the conjugated operator is Toeplitz with the circle
    symbol and its norm is exactly the circle sup; weighted l^1 uses the
    exact column-sum formula. Everything else falls back to sections.
    """
    if not space.half_line:
        raise InvalidSpaceParams("need a half-line space")
    if phi.is_zero:
        return NormEstimate(0.0, 0.0, "exact_formula", N)
    if isinstance(space, LpSpace):
        tag = space.weight.tag
        geometric_like = tag is not None and tag.kind in ("geometric", "exp_abs")
        if geometric_like:
            r0 = tag.param if tag.kind == "geometric" else math.exp(tag.param)
            if space.p == 2:
                cert = 1e-9 * max(1.0, float(np.max(np.abs(phi.array()))))
                cs = trigpoly.circle_sup(phi.coeffs, phi.n_min, r0, rel_tol=0.0, abs_tol=cert)
                return NormEstimate(cs.lo, cs.hi, "exact_formula", N)
            if space.p == 1:
                mags = np.abs(phi.array())
                ns = np.arange(phi.n_min, phi.n_max + 1)
                v = float(np.sum(mags * r0 ** ns.astype(float)))
                return NormEstimate(v, v, "exact_formula", N)
        section = toeplitz_finite_section(phi, space, N)
        if space.p == 2:
            lower = operator_norm(section, "svd_l2").lower
        elif space.p == 1:
            lower = operator_norm(section, "exact_l1").lower
        else:
            lower = operator_norm(section, "sphere_search", seed=seed).lower
        return NormEstimate(lower, _triangle_upper(phi, space, N), "finite_section", N)
    section = toeplitz_finite_section(phi, space, min(N, 48))
    lower = operator_norm(section, "sphere_search", seed=seed, starts=16, max_iter=4000).lower
    return NormEstimate(lower, _triangle_upper(phi, space, N), "finite_section", N)


def check_toeplitz_bound(
    phi: FiniteSymbol,
    space: SequenceSpace,
    radii,
    N: int = 256,
    tol: float = 1e-6,
    seed: int = 0,
) -> list[BoundReport]:
    """Half-line analogue of check_symbol_bound over the Omega/U/V region."""
    _, annulus = toeplitz_region(space, window=max(N, 64))
    nb = toeplitz_norm_bounds(phi, space, N, seed=seed)
    cert = max(1e-12, 0.25 * tol * max(nb.lower, 1.0))
    cache: dict[float, trigpoly.CertifiedSup] = {}
    reports = []
    for r in radii:
        r = float(r)
        if r <= 0:
            raise ValueError("radii must be positive")
        cs = cache.get(r)
        if cs is None:
            cs = symbol_sup_on_circle(phi, r, cert)
            cache[r] = cs
        verdict = _verdict(cs, nb, annulus.contains_radius(r), tol)
        reports.append(BoundReport(r, cs.lo, cs.hi, nb.lower, nb.upper, verdict, N))
    return reports
