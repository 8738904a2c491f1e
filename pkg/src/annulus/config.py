"""Scenario configs: flat key/value text with typed sections.

Format (INI-style, parsed with configparser)::

    [run]
    scenario = multiplier-check   ; spectrum | multiplier-check |
                                  ; toeplitz-check | cesaro-demo | counterexample
    radii = auto                  ; or a comma list of positive reals
    window = 64
    tolerance = 1e-6
    seed = 42
    out = reports

    [space]
    kind = lpw                    ; lpw | orlicz | varexp | intersection | fouriersup
    p = 2
    half_line = false
    weight_kind = geometric       ; geometric | exp_abs | polynomial | remark1 | table
    weight_param = 1.0
    weight_window = 64
    weight_values = 1, 2, 4       ; table only
    young = power                 ; orlicz only: power | power_oscillating
    young_param = 2.0
    q_const = 2.0                 ; varexp only (or q_values over the window)
    parts = 2                     ; intersection only, with [space.1], [space.2]

    [symbol]
    n_min = 0
    coeffs = 1,0  1,0             ; re,im pairs, whitespace separated

Validation collects every error before failing, not just the first.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass, field

from .errors import ConfigParseError, ConfigValidationError
from .multiplier import FiniteSymbol
from .spaces import (
    ExponentMap,
    FourierSupSpace,
    IntersectionSpace,
    LpSpace,
    OrliczFunction,
    OrliczSpace,
    SequenceSpace,
    VarExpSpace,
    make_weight,
)

__all__ = ["ScenarioConfig", "parse_config", "serialize_config", "config_as_dict"]

SCENARIOS = ("spectrum", "multiplier-check", "toeplitz-check", "cesaro-demo", "counterexample")


@dataclass(frozen=True)
class ScenarioConfig:
    scenario: str
    space: SequenceSpace | None
    symbol: FiniteSymbol | None
    radii: tuple[float, ...] | str  # explicit radii or "auto"
    window: int = 64
    tolerance: float = 1e-6
    seed: int = 0
    out_dir: str | None = None
    # raw space/symbol text fields kept for faithful serialization
    raw: dict = field(default_factory=dict, compare=False)


def _parse_bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("true", "yes", "1", "on"):
        return True
    if t in ("false", "no", "0", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _space_from_section(cp, section: str, errors: list[str], window_default: int):
    if not cp.has_section(section):
        return None
    get = lambda key, default=None: cp.get(section, key, fallback=default)
    kind = (get("kind") or "").strip().lower()
    try:
        half_line = _parse_bool(get("half_line", "false"))
    except ValueError as exc:
        errors.append(f"[{section}] half_line: {exc}")
        half_line = False
    wwin_text = get("weight_window")
    try:
        wwin = int(wwin_text) if wwin_text is not None else max(window_default, 4)
    except ValueError:
        errors.append(f"[{section}] weight_window must be an integer")
        wwin = max(window_default, 4)

    def build_weight():
        wkind = (get("weight_kind") or "geometric").strip().lower()
        param_text = get("weight_param")
        param = None
        if param_text is not None:
            try:
                param = float(param_text)
            except ValueError:
                errors.append(f"[{section}] weight_param must be a number")
                return None
        if wkind == "geometric" and param is None:
            param = 1.0
        values = None
        if get("weight_values") is not None:
            try:
                values = [float(v) for v in get("weight_values").replace(",", " ").split()]
            except ValueError:
                errors.append(f"[{section}] weight_values must be numbers")
                return None
        try:
            return make_weight(wkind, wwin, param, values=values, half_line=half_line)
        except Exception as exc:
            errors.append(f"[{section}] weight: {exc}")
            return None

    if kind == "lpw":
        try:
            p = float(get("p", "2"))
        except ValueError:
            errors.append(f"[{section}] p must be a number")
            return None
        weight = build_weight()
        if weight is None:
            return None
        try:
            return LpSpace(p, weight, half_line)
        except Exception as exc:
            errors.append(f"[{section}] {exc}")
            return None
    if kind == "orlicz":
        ykind = (get("young") or "power").strip().lower()
        try:
            yparam = float(get("young_param", "2"))
        except ValueError:
            errors.append(f"[{section}] young_param must be a number")
            return None
        weight = build_weight()
        if weight is None:
            return None
        try:
            return OrliczSpace(OrliczFunction(ykind, yparam), weight, half_line)
        except Exception as exc:
            errors.append(f"[{section}] {exc}")
            return None
    if kind == "varexp":
        qc = get("q_const")
        qv = get("q_values")
        try:
            if qv is not None:
                vals = [float(v) for v in qv.replace(",", " ").split()]
                n_min = 0 if half_line else -(len(vals) - 1) // 2
                exps = ExponentMap(n_min, tuple(vals))
            elif qc is not None:
                exps = ExponentMap.constant(float(qc), wwin, half_line)
            else:
                errors.append(f"[{section}] varexp needs q_const or q_values")
                return None
            return VarExpSpace(exps, half_line)
        except Exception as exc:
            errors.append(f"[{section}] {exc}")
            return None
    if kind == "intersection":
        try:
            count = int(get("parts", "0"))
        except ValueError:
            errors.append(f"[{section}] parts must be an integer")
            return None
        if count < 1:
            errors.append(f"[{section}] intersection needs parts >= 1")
            return None
        parts = []
        for i in range(1, count + 1):
            sub = f"{section}.{i}"
            part = _space_from_section(cp, sub, errors, window_default)
            if part is None:
                errors.append(f"[{sub}] missing or invalid intersection component")
                return None
            parts.append(part)
        try:
            return IntersectionSpace(tuple(parts))
        except Exception as exc:
            errors.append(f"[{section}] {exc}")
            return None
    if kind == "fouriersup":
        return FourierSupSpace(half_line)
    errors.append(f"[{section}] unknown space kind {kind!r}")
    return None


def _symbol_from_section(cp, errors: list[str]):
    if not cp.has_section("symbol"):
        return None
    try:
        n_min = int(cp.get("symbol", "n_min", fallback="0"))
    except ValueError:
        errors.append("[symbol] n_min must be an integer")
        return None
    text = cp.get("symbol", "coeffs", fallback="").strip()
    if not text:
        errors.append("[symbol] coeffs required")
        return None
    coeffs = []
    for token in text.split():
        parts = token.split(",")
        if len(parts) != 2:
            errors.append(f"[symbol] coefficient {token!r} is not a re,im pair")
            return None
        try:
            coeffs.append(complex(float(parts[0]), float(parts[1])))
        except ValueError:
            errors.append(f"[symbol] coefficient {token!r} is not numeric")
            return None
    return FiniteSymbol(n_min, tuple(coeffs))


def parse_config(text: str, scenario_override: str | None = None) -> ScenarioConfig:
    """Parse and validate config text; raises with every error found."""
    cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        line = getattr(exc, "lineno", None)
        raise ConfigParseError(str(exc), line) from exc

    errors: list[str] = []
    get_run = lambda key, default=None: cp.get("run", key, fallback=default)

    scenario = (get_run("scenario") or "").strip()
    if scenario_override is not None:
        if scenario and scenario != scenario_override:
            errors.append(
                f"[run] scenario {scenario!r} conflicts with command-line scenario {scenario_override!r}"
            )
        scenario = scenario_override
    if scenario not in SCENARIOS:
        errors.append(f"[run] scenario must be one of {', '.join(SCENARIOS)}")

    def run_number(key, default, conv, check=None, message=""):
        raw = get_run(key)
        if raw is None:
            return default
        try:
            val = conv(raw)
        except ValueError:
            errors.append(f"[run] {key} must be a {conv.__name__}")
            return default
        if check is not None and not check(val):
            errors.append(f"[run] {key} {message}")
            return default
        return val

    window = run_number("window", 64, int, lambda v: v >= 1, "must be >= 1")
    tolerance = run_number("tolerance", 1e-6, float, lambda v: v > 0, "must be positive")
    seed = run_number("seed", 0, int, lambda v: v >= 0, "must be a nonnegative integer")
    out_dir = get_run("out")

    radii_text = (get_run("radii") or "auto").strip()
    if radii_text.lower() == "auto":
        radii: tuple[float, ...] | str = "auto"
    else:
        try:
            vals = tuple(float(v) for v in radii_text.replace(",", " ").split())
            if not vals or any(v <= 0 for v in vals):
                errors.append("[run] radii must be positive reals")
                radii = "auto"
            else:
                radii = vals
        except ValueError:
            errors.append("[run] radii must be numbers or 'auto'")
            radii = "auto"

    space = _space_from_section(cp, "space", errors, window)
    symbol = _symbol_from_section(cp, errors)

    if scenario in ("spectrum", "multiplier-check", "toeplitz-check", "cesaro-demo") and space is None:
        if not any(e.startswith("[space]") for e in errors):
            errors.append("[space] section required for this scenario")
    if scenario in ("multiplier-check", "toeplitz-check") and symbol is None:
        if not any(e.startswith("[symbol]") for e in errors):
            errors.append("[symbol] symbol required for this scenario")
    if scenario == "toeplitz-check" and space is not None and not space.half_line:
        errors.append("[space] toeplitz-check needs half_line = true")

    if errors:
        raise ConfigValidationError(errors)

    raw = {s: dict(cp.items(s)) for s in cp.sections()}
    return ScenarioConfig(scenario, space, symbol, radii, window, tolerance, seed, out_dir, raw)


def serialize_config(cfg: ScenarioConfig) -> str:
    """Emit config text that parses back to an equal ScenarioConfig."""
    cp = configparser.ConfigParser()
    cp["run"] = {
        "scenario": cfg.scenario,
        "radii": "auto" if cfg.radii == "auto" else ", ".join(repr(r) for r in cfg.radii),
        "window": str(cfg.window),
        "tolerance": repr(cfg.tolerance),
        "seed": str(cfg.seed),
    }
    if cfg.out_dir is not None:
        cp["run"]["out"] = cfg.out_dir
    for section, values in cfg.raw.items():
        if section == "run":
            continue
        cp[section] = dict(values)
    out = []

    class _Writer:
        def write(self, chunk):
            out.append(chunk)

    cp.write(_Writer())
    return "".join(out)


def config_as_dict(cfg: ScenarioConfig) -> dict:
    """JSON-ready echo of the config."""
    return {
        "scenario": cfg.scenario,
        "radii": cfg.radii if cfg.radii == "auto" else list(cfg.radii),
        "window": cfg.window,
        "tolerance": cfg.tolerance,
        "seed": cfg.seed,
        "out": cfg.out_dir,
        "sections": cfg.raw,
    }
