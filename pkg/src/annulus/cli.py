"""Command-line entry point: annulus <scenario> --config <path> [--out DIR] [--seed N].

Exit codes: 0 success with no error verdicts, 1 if any report verdict is
"error", 2 on config validation or parse failure, 3 on math-domain
errors (for example both shifts unbounded outside the counterexample
scenario). ANNULUS_MAX_WINDOW caps the window size (default 4096).
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys

from .config import SCENARIOS, parse_config
from .errors import (
    BothShiftsUnbounded,
    ConfigParseError,
    ConfigValidationError,
    ToolkitError,
)
from .runner import emit_outputs, run_scenario

DEFAULT_MAX_WINDOW = 4096


def _max_window() -> int:
    raw = os.environ.get("ANNULUS_MAX_WINDOW")
    if raw is None:
        return DEFAULT_MAX_WINDOW
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_WINDOW


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="annulus",
        description="Shift spectra, multiplier symbol bounds, and Toeplitz checks on weighted sequence spaces.",
    )
    parser.add_argument("scenario", choices=SCENARIOS, help="scenario to run")
    parser.add_argument("--config", required=True, help="path to the scenario config")
    parser.add_argument("--out", default=None, help="output directory (default: config or cwd)")
    parser.add_argument("--seed", type=int, default=None, help="override the config seed")
    args = parser.parse_args(argv)

    try:
        text = open(args.config, encoding="utf-8").read()
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 2

    try:
        cfg = parse_config(text, scenario_override=args.scenario)
    except ConfigParseError as exc:
        print(f"config parse error: {exc}", file=sys.stderr)
        return 2
    except ConfigValidationError as exc:
        for err in exc.errors:
            print(f"config error: {err}", file=sys.stderr)
        return 2

    if args.seed is not None:
        if args.seed < 0:
            print("config error: seed must be nonnegative", file=sys.stderr)
            return 2
        cfg = dataclasses.replace(cfg, seed=args.seed)
    if args.out is not None:
        cfg = dataclasses.replace(cfg, out_dir=args.out)

    cap = _max_window()
    if cfg.window > cap:
        print(f"config error: window {cfg.window} exceeds ANNULUS_MAX_WINDOW = {cap}", file=sys.stderr)
        return 2

    try:
        report = run_scenario(cfg)
    except BothShiftsUnbounded as exc:
        print(f"math-domain error: {exc.diagnostic}", file=sys.stderr)
        return 3
    except ToolkitError as exc:
        print(f"math-domain error: {exc}", file=sys.stderr)
        return 3

    out_dir = cfg.out_dir or "."
    paths = emit_outputs(report, out_dir)
    print(f"scenario {cfg.scenario}: wrote {len(paths)} file(s) under {out_dir}")
    if report.annulus is not None:
        r_in, r_out = report.annulus.r_in, report.annulus.r_out
        print(f"annulus: [{r_in:.12g}, {r_out:.12g}] exact={report.annulus.exact}")
    for rep in report.reports:
        print(
            f"r = {rep.radius:.12g}: sup in [{rep.sup_lo:.12g}, {rep.sup_hi:.12g}], "
            f"norm >= {rep.norm_lower:.12g} -> {rep.verdict}"
        )
    counts = report.summary
    print(
        "summary: "
        + ", ".join(f"{k}={counts[k]}" for k in ("confirmed", "inconclusive", "violated_outside_spectrum", "error"))
    )
    return 0 if counts["error"] == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
