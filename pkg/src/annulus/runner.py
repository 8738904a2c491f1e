"""Scenario orchestration and report emission.

run_scenario executes one config deterministically (given the seed) and
returns a RunReport; emit_outputs writes the JSON report plus one CSV of
circle samples per checked radius. Timing lives in its own top-level
JSON key so that reruns with the same inputs are byte-identical apart
from it.
"""

from __future__ import annotations

import dataclasses
import json
import math
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from . import trigpoly
from .config import ScenarioConfig, config_as_dict
from .errors import BothShiftsUnbounded, InvalidSpaceParams
from .multiplier import (
    BoundReport,
    FiniteSymbol,
    cesaro_mean,
    check_symbol_bound,
    onesidedness_check,
    symbol_eval,
)
from .shift_spectrum import (
    BACKWARD,
    FORWARD,
    Annulus,
    classify_boundedness,
    spectrum_annulus,
)
from .spaces import LpSpace, SeqWindow, make_weight, norm
from .toeplitz import check_toeplitz_bound, toeplitz_region

__all__ = ["RunReport", "run_scenario", "emit_outputs", "resolve_radii", "report_as_dict"]

VERDICTS = ("confirmed", "inconclusive", "violated_outside_spectrum", "error")


@dataclass(frozen=True)
class RunReport:
    version: str
    config: dict
    annulus: Annulus | None
    reports: tuple[BoundReport, ...]
    summary: dict
    timing_ms: float
    extras: dict = field(default_factory=dict)
    # sampling payload for CSV emission: (radius, grid size) per report
    csv_symbol: FiniteSymbol | None = None
    csv_specs: tuple[tuple[float, int], ...] = ()


def resolve_radii(spec, annulus: Annulus) -> tuple[float, ...]:
    """Expand "auto" into boundary circles plus the geometric midpoint.

    Degenerate annuli collapse to the single boundary radius. With an
    infinite outer radius the ray is probed at r_in, 2 r_in, 4 r_in; a
    zero inner radius probes the disk at r_out/4, r_out/2, r_out.
    """
    if spec != "auto":
        return tuple(float(r) for r in spec)
    r_in, r_out = annulus.r_in, annulus.r_out
    if math.isinf(r_out):
        base = r_in if r_in > 0 else 1.0
        return (base, 2.0 * base, 4.0 * base)
    if r_in == 0.0:
        return (r_out / 4.0, r_out / 2.0, r_out)
    if r_in == r_out:
        return (r_out,)
    return (r_in, math.sqrt(r_in * r_out), r_out)


def _summary(reports) -> dict:
    counts = {v: 0 for v in VERDICTS}
    for rep in reports:
        counts[rep.verdict] += 1
    return counts


def _verdict_dict(v) -> dict:
    return {
        "status": v.status,
        "evidence": v.evidence,
        "norm_upper": _num(v.norm.upper) if v.norm is not None else None,
    }


def _demo_sequence(cfg: ScenarioConfig) -> SeqWindow:
    if cfg.symbol is not None:
        return cfg.symbol.as_seq()
    rng = np.random.default_rng(cfg.seed)
    coeffs = rng.uniform(-1, 1, 17) + 1j * rng.uniform(-1, 1, 17)
    return SeqWindow(-8, tuple(coeffs))


def run_scenario(cfg: ScenarioConfig) -> RunReport:
    """Execute a scenario; deterministic for a fixed (config, seed)."""
    t0 = time.perf_counter()
    annulus = None
    reports: tuple[BoundReport, ...] = ()
    extras: dict = {}
    csv_symbol = None
    csv_specs: tuple[tuple[float, int], ...] = ()

    if cfg.scenario == "spectrum":
        annulus = spectrum_annulus(cfg.space, window=max(cfg.window, 64))
        fwd = classify_boundedness(cfg.space, FORWARD)
        bwd = classify_boundedness(cfg.space, BACKWARD)
        extras = {"shift_forward": _verdict_dict(fwd), "shift_backward": _verdict_dict(bwd)}

    elif cfg.scenario in ("multiplier-check", "toeplitz-check"):
        if cfg.scenario == "multiplier-check":
            annulus = spectrum_annulus(cfg.space, window=max(cfg.window, 64))
            radii = resolve_radii(cfg.radii, annulus)
            reps = check_symbol_bound(cfg.symbol, cfg.space, radii, cfg.window, cfg.tolerance, cfg.seed)
        else:
            region, annulus = toeplitz_region(cfg.space, window=max(cfg.window, 64))
            radii = resolve_radii(cfg.radii, annulus)
            reps = check_toeplitz_bound(cfg.symbol, cfg.space, radii, cfg.window, cfg.tolerance, cfg.seed)
            extras["region"] = region
        side = onesidedness_check(cfg.space, cfg.symbol)
        extras["onesidedness"] = {
            "compatible": side.compatible,
            "forbidden_side": side.forbidden_side,
            "detail": side.detail,
        }
        reports = tuple(reps)
        csv_symbol = cfg.symbol
        cert = max(1e-12, 0.25 * cfg.tolerance * max(max((r.norm_lower for r in reps), default=1.0), 1.0))
        specs = []
        for rep in reps:
            cs = trigpoly.circle_sup(
                cfg.symbol.coeffs, cfg.symbol.n_min, rep.radius, rel_tol=0.0, abs_tol=cert
            )
            specs.append((rep.radius, max(cs.grid, 8)))
        csv_specs = tuple(specs)

    elif cfg.scenario == "cesaro-demo":
        x = _demo_sequence(cfg)
        ks = (5, 10, 20, 40, 80, 160)
        base = norm(cfg.space, x)
        errs = [norm(cfg.space, cesaro_mean(x, k) - x) for k in ks]
        extras = {
            "sequence_support": [x.n_min, x.n_max],
            "ks": list(ks),
            "errors": errs,
            "norm_x": base,
        }

    elif cfg.scenario == "counterexample":
        space = cfg.space
        if space is None:
            space = LpSpace(2.0, make_weight("remark1", max(cfg.window, 16)))
        fwd = classify_boundedness(space, FORWARD)
        bwd = classify_boundedness(space, BACKWARD)
        diagnostic = None
        try:
            spectrum_annulus(space, window=max(cfg.window, 64))
        except BothShiftsUnbounded as exc:
            diagnostic = exc.diagnostic
        square = FiniteSymbol.basis(2)
        probe_radii = (1.0, 2.0, 4.0)
        extras = {
            "shift_forward": _verdict_dict(fwd),
            "shift_backward": _verdict_dict(bwd),
            "diagnostic": diagnostic or "annulus unexpectedly defined",
            "expected": "spec(S)=C, no L-infinity bound possible",
            "symbol": "z^2",
            "probe_radii": list(probe_radii),
            "abs_symbol_values": [abs(symbol_eval(square, r)) for r in probe_radii],
        }

    else:
        raise InvalidSpaceParams(f"unknown scenario {cfg.scenario!r}")

    timing_ms = (time.perf_counter() - t0) * 1e3
    return RunReport(
        version=__version__,
        config=config_as_dict(cfg),
        annulus=annulus,
        reports=reports,
        summary=_summary(reports),
        timing_ms=timing_ms,
        extras=extras,
        csv_symbol=csv_symbol,
        csv_specs=csv_specs,
    )


def _num(v):
    """JSON-safe number with the "inf" sentinel."""
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return v


def report_as_dict(report: RunReport) -> dict:
    payload = {
        "version": report.version,
        "config": report.config,
        "annulus": None
        if report.annulus is None
        else {
            "r_in": _num(report.annulus.r_in),
            "r_out": _num(report.annulus.r_out),
            "exact": report.annulus.exact,
        },
        "reports": [
            {
                "radius": rep.radius,
                "sup_lo": rep.sup_lo,
                "sup_hi": rep.sup_hi,
                "norm_lower": _num(rep.norm_lower),
                "norm_upper": _num(rep.norm_upper),
                "verdict": rep.verdict,
                "window": rep.window,
            }
            for rep in report.reports
        ],
        "summary": dict(report.summary),
        "extras": report.extras,
        "timing_ms": report.timing_ms,
    }
    return payload


def emit_outputs(report: RunReport, out_dir) -> list[Path]:
    """Write report.json plus circle_<i>.csv per checked radius.

    Byte-stable for fixed inputs and seed, except the timing_ms key.
    CSV header is exactly theta,re,im,abs; rows carry the final
    sampling resolution of the certified sup.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    payload = report_as_dict(report)
    json_path = out / "report.json"
    json_path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    paths = [json_path]
    if report.csv_symbol is not None:
        for i, (radius, grid) in enumerate(report.csv_specs):
            vals = trigpoly.grid_values(report.csv_symbol.coeffs, report.csv_symbol.n_min, radius, grid)
            thetas = 2.0 * math.pi * np.arange(grid) / grid
            lines = ["theta,re,im,abs"]
            for t, v in zip(thetas, vals):
                lines.append(f"{t:.17g},{v.real:.17g},{v.imag:.17g},{abs(v):.17g}")
            csv_path = out / f"circle_{i}.csv"
            csv_path.write_text("\n".join(lines) + "\n")
            paths.append(csv_path)
    return paths
