"""Batch command-line front end.

Exit status: 0 success, 1 no-root verdict (or failed verification), 2 bad input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .analysis import (InconclusiveCheck, check_assumption_A, interlacing_violations,
                       lemma_monotonicity_violations, nonexistence_evidence,
                       odd_root_entry)
from .buckling import ColumnSpec, critical_load, deflection_curve, symmetrize
from .errors import DomainError, FracBuckleError, NoRootFound
from .rootfind import DEFAULT_TOL, smallest_positive_root
from .series import truncation
from .solver import (DEFAULT_EPSILON, DEFAULT_MAX_DEGREE, approximate_s0,
                     sweep_alpha)

COMMANDS = ("solve", "sweep", "load", "curve", "verify", "table1", "table2")
EXIT_OK, EXIT_NO_ROOT, EXIT_BAD_INPUT = 0, 1, 2

DEFAULT_FORMAT = {
    "solve": "json", "load": "json", "verify": "json",
    "sweep": "csv", "curve": "csv", "table1": "csv", "table2": "csv",
}
DEFAULT_ALPHAS = {
    "table1": (0.526,),
    "table2": (0.527, 0.6, 0.7),
    "verify": (0.1, 0.3, 0.5, 0.526, 0.527, 0.7, 0.9, 1.0),
}
TABLE1_MAX_DEGREE = 21
TABLE2_DEGREES = (12, 13, 14, 15)

DEFAULTS = {
    "alphas": None,
    "epsilon": DEFAULT_EPSILON,
    "max_degree": None,
    "root_tol": None,
    "E": None,
    "I": None,
    "l": None,
    "b1": 1.0,
    "samples": 101,
    "symmetrize": False,
    "format": None,
    "out": None,
    "workers": 1,
}


@dataclass
class RunConfig:
    command: str
    alphas: Tuple[float, ...] = ()
    epsilon: float = DEFAULT_EPSILON
    max_degree: int = DEFAULT_MAX_DEGREE
    root_tol: Optional[float] = None
    E: Optional[float] = None
    I: Optional[float] = None  # noqa: E741
    l: Optional[float] = None  # noqa: E741
    b1: float = 1.0
    samples: int = 101
    symmetrize: bool = False
    format: str = "json"
    out: Optional[str] = None
    workers: int = 1
    extra: dict = field(default_factory=dict)

    @property
    def alpha(self) -> float:
        return self.alphas[0]

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command {self.command!r}")
        if not self.alphas:
            raise DomainError(f"{self.command} needs --alpha")
        for a in self.alphas:
            if not (0.0 < a <= 1.0):
                raise DomainError(f"alpha must lie in (0, 1], got {a!r}")
        if self.command in ("solve", "load", "curve", "table1") and len(self.alphas) != 1:
            raise DomainError(f"{self.command} takes a single --alpha")
        if not (math.isfinite(self.epsilon) and self.epsilon > 0):
            raise DomainError(f"--epsilon must be positive, got {self.epsilon!r}")
        if self.max_degree < 3:
            raise DomainError(f"--max-degree must be >= 3, got {self.max_degree!r}")
        if self.root_tol is not None and not (0 < self.root_tol <= self.epsilon / 100):
            raise DomainError("--root-tol must lie in (0, epsilon/100]")
        if self.command in ("load", "curve"):
            for name in ("E", "I", "l"):
                v = getattr(self, name)
                if v is None or not (math.isfinite(v) and v > 0):
                    raise DomainError(f"{self.command} needs a positive --{name}")
        if not math.isfinite(self.b1):
            raise DomainError("--b1 must be finite")
        if self.samples < 2:
            raise DomainError("--samples must be >= 2")
        if self.format not in ("csv", "json"):
            raise DomainError(f"--format must be csv or json, got {self.format!r}")
        if self.workers < 1:
            raise DomainError("--workers must be >= 1")


def _num(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_num(v) for v in row])
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


SWEEP_HEADER = ("alpha", "verdict", "s0", "epsilon", "n0", "degree_used")


def _no_root(cfg: RunConfig, exc: NoRootFound) -> Tuple[int, str]:
    report = nonexistence_evidence(cfg.alpha, cfg.max_degree, cfg.root_tol or DEFAULT_TOL)
    if cfg.format == "csv":
        return EXIT_NO_ROOT, _csv(SWEEP_HEADER, [(cfg.alpha, report.verdict, None, None, None, None)])
    return EXIT_NO_ROOT, _json({"command": cfg.command, "status": "no-root-found",
                                "message": str(exc), "existence": report.to_dict()})


def _solve(cfg):
    return approximate_s0(cfg.alpha, cfg.epsilon, cfg.max_degree, cfg.root_tol)


def cmd_solve(cfg: RunConfig):
    s0 = _solve(cfg)
    if cfg.format == "csv":
        return EXIT_OK, _csv(SWEEP_HEADER, [(s0.alpha, "exists", s0.value, s0.epsilon,
                                             s0.n0, s0.degree_used)])
    return EXIT_OK, _json({"command": "solve", "status": "exists", "s0": s0.to_dict()})


def cmd_sweep(cfg: RunConfig):
    entries = sweep_alpha(cfg.alphas, cfg.epsilon, cfg.max_degree, cfg.root_tol, cfg.workers)
    if cfg.format == "csv":
        rows = []
        for e in entries:
            if e.verdict == "exists":
                r = e.result
                rows.append((e.alpha, e.verdict, r.value, r.epsilon, r.n0, r.degree_used))
            else:
                rows.append((e.alpha, e.verdict, None, None, None, None))
        return EXIT_OK, _csv(SWEEP_HEADER, rows)
    out = []
    for e in entries:
        out.append({
            "alpha": e.alpha,
            "verdict": e.verdict,
            "result": None if e.result is None else e.result.to_dict(),
            "error": e.error,
        })
    return EXIT_OK, _json({"command": "sweep", "entries": out})


def _column(cfg: RunConfig) -> ColumnSpec:
    return ColumnSpec(cfg.E, cfg.I, cfg.l, cfg.alpha, cfg.b1)


def cmd_load(cfg: RunConfig):
    spec = _column(cfg)
    s0 = _solve(cfg)
    load = critical_load(spec, s0)
    if cfg.format == "csv":
        header = ("alpha", "E", "I", "l", "s0", "epsilon", "P", "lambda")
        return EXIT_OK, _csv(header, [(spec.alpha, spec.E, spec.I, spec.l, s0.value,
                                       s0.epsilon, load.P, load.lam)])
    return EXIT_OK, _json({
        "command": "load",
        "column": {"E": spec.E, "I": spec.I, "l": spec.l, "alpha": spec.alpha, "b1": spec.b1},
        "load": load.to_dict(),
        "s0": s0.to_dict(),
    })


def cmd_curve(cfg: RunConfig):
    spec = _column(cfg)
    s0 = _solve(cfg)
    raw = deflection_curve(spec, s0, cfg.samples)
    sym = symmetrize(raw) if cfg.symmetrize else None
    if cfg.format == "csv":
        if sym is None:
            return EXIT_OK, _csv(("x", "y"), zip(raw.xs, raw.ys))
        return EXIT_OK, _csv(("x", "y", "w"), zip(raw.xs, raw.ys, sym.ys))
    obj = {"command": "curve", "alpha": spec.alpha, "s0": s0.value,
           "lambda": s0.value / spec.l ** 2, "x": list(raw.xs), "y": list(raw.ys)}
    if sym is not None:
        obj["w"] = list(sym.ys)
    return EXIT_OK, _json(obj)


def _verify_rows(cfg: RunConfig) -> List[Tuple[str, float, bool, str]]:
    rows = []
    for a in cfg.alphas:
        bad = lemma_monotonicity_violations(a, 200)
        rows.append(("lemma_monotonicity", a, not bad, f"violations={len(bad)}"))
        try:
            s0 = approximate_s0(a, cfg.epsilon, cfg.max_degree, cfg.root_tol)
        except NoRootFound:
            report = nonexistence_evidence(a, cfg.max_degree, cfg.root_tol or DEFAULT_TOL)
            rows.append(("nonexistence_evidence", a, True, f"verdict={report.verdict}"))
            continue
        rows.append(("assumption_A", a, s0.assumption_a.holds,
                     f"n0={s0.n0} margin={s0.assumption_a.margin!r}"))
        rows.append(("assumption_B", a, s0.assumption_b.holds,
                     f"n0={s0.n0} margin={s0.assumption_b.margin!r}"))
        odd = [r for n, r in s0.root_sequence if n % 2]
        even = [r for n, r in s0.root_sequence if n % 2 == 0]
        ordered = (all(x < y for x, y in zip(odd, odd[1:]))
                   and all(x > y for x, y in zip(even, even[1:]))
                   and max(odd) < min(even))
        rows.append(("root_ordering", a, ordered, f"degree_used={s0.degree_used}"))
        try:
            bad = interlacing_violations(a, s0.n0, r_n0=s0.root(s0.n0), depth=3)
            rows.append(("interlacing", a, not bad, f"n0={s0.n0} violations={len(bad)}"))
        except InconclusiveCheck as exc:
            rows.append(("interlacing", a, False, f"inconclusive: {exc}"))
    return rows


def cmd_verify(cfg: RunConfig):
    rows = _verify_rows(cfg)
    status = EXIT_OK if all(r[2] for r in rows) else EXIT_NO_ROOT
    if cfg.format == "csv":
        return status, _csv(("check", "alpha", "passed", "detail"), rows)
    return status, _json({"command": "verify", "checks": [
        {"check": c, "alpha": a, "passed": p, "detail": d} for c, a, p, d in rows]})


def cmd_table1(cfg: RunConfig):
    tol = cfg.root_tol or DEFAULT_TOL
    entries = [odd_root_entry(cfg.alpha, m, tol) for m in range(1, cfg.max_degree + 1, 2)]
    if cfg.format == "csv":
        return EXIT_OK, _csv(("m", "root", "bound", "condition_ok"),
                             [(e.m, e.root, e.bound, e.condition_ok) for e in entries])
    return EXIT_OK, _json({"command": "table1", "alpha": cfg.alpha, "rows": [
        {"m": e.m, "root": e.root, "bound": e.bound, "condition_ok": e.condition_ok}
        for e in entries]})


def cmd_table2(cfg: RunConfig):
    tol = cfg.root_tol or DEFAULT_TOL
    rows = []
    for n in TABLE2_DEGREES:
        for a in cfg.alphas:
            hit = smallest_positive_root(truncation(a, n), tol=tol)
            rows.append((n, a, None if hit is None else hit.value))
    if cfg.format == "csv":
        return EXIT_OK, _csv(("degree", "alpha", "root"), rows)
    return EXIT_OK, _json({"command": "table2", "rows": [
        {"degree": n, "alpha": a, "root": r} for n, a, r in rows]})


HANDLERS = {
    "solve": cmd_solve, "sweep": cmd_sweep, "load": cmd_load, "curve": cmd_curve,
    "verify": cmd_verify, "table1": cmd_table1, "table2": cmd_table2,
}


def run(cfg: RunConfig) -> Tuple[int, str]:
    """Execute one validated configuration; returns (exit status, output text)."""
    cfg.validate()
    try:
        return HANDLERS[cfg.command](cfg)
    except NoRootFound as exc:
        return _no_root(cfg, exc)


def _alpha_list(text: str) -> Tuple[float, ...]:
    try:
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracbuckle",
        description="Critical loads for fractional (Caputo) Euler columns.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    helps = {
        "solve": "certified approximation of s0 for one alpha",
        "sweep": "solve or gather non-existence evidence for several alphas",
        "load": "critical buckling load P for a column",
        "curve": "sampled deflection curve y(x), optionally with w(x)",
        "verify": "run the lemma / assumption / interlacing checks",
        "table1": "odd roots r_m and their bounds (default alpha 0.526, m <= 21)",
        "table2": "roots of p_12..p_15 (default alphas 0.527,0.6,0.7)",
    }
    S = argparse.SUPPRESS
    for name in COMMANDS:
        p = sub.add_parser(name, help=helps[name], description=helps[name],
                           argument_default=S)
        p.add_argument("--alpha", dest="alphas", type=_alpha_list,
                       help="fractional index in (0, 1]")
        p.add_argument("--alphas", dest="alphas", type=_alpha_list,
                       help="comma-separated fractional indices")
        p.add_argument("--epsilon", type=float, help=f"certificate width (default {DEFAULT_EPSILON:g})")
        p.add_argument("--max-degree", dest="max_degree", type=int,
                       help=f"degree cap (default {DEFAULT_MAX_DEGREE}; table1: {TABLE1_MAX_DEGREE})")
        p.add_argument("--root-tol", dest="root_tol", type=float,
                       help=f"bisection tolerance (default min({DEFAULT_TOL:g}, epsilon/100))")
        p.add_argument("--E", type=float, help="Young's modulus [Pa]")
        p.add_argument("--I", type=float, help="second moment of area [m^4]")
        p.add_argument("--l", type=float, help="column length [m]")
        p.add_argument("--b1", type=float, help="initial slope y'(0) (default 1)")
        p.add_argument("--samples", type=int, help="curve samples (default 101)")
        p.add_argument("--symmetrize", action="store_true", help="add w(x) = (y(x)+y(l-x))/2")
        p.add_argument("--format", choices=("csv", "json"),
                       help=f"output format (default {DEFAULT_FORMAT[name]})")
        p.add_argument("--out", help="output path (default standard output)")
        p.add_argument("--workers", type=int, help="parallel sweep processes (default 1)")
        p.add_argument("--config", help="JSON file of option defaults; flags override it")
    return parser


def _load_config_file(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise DomainError(f"config file {path} must hold a JSON object")
    out = {}
    for key, value in data.items():
        key = key.replace("-", "_")
        if key == "alpha":
            key = "alphas"
        if key not in DEFAULTS:
            raise DomainError(f"unknown config key {key!r}")
        if key == "alphas":
            value = tuple(value) if isinstance(value, (list, tuple)) else (value,)
        out[key] = value
    return out


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    given = dict(vars(ns))
    command = given.pop("command")
    merged = dict(DEFAULTS)
    cfg_path = given.pop("config", None)
    if cfg_path:
        merged.update(_load_config_file(cfg_path))
    merged.update(given)
    if merged["alphas"] is None:
        merged["alphas"] = DEFAULT_ALPHAS.get(command, ())
    if merged["max_degree"] is None:
        merged["max_degree"] = TABLE1_MAX_DEGREE if command == "table1" else DEFAULT_MAX_DEGREE
    if merged["format"] is None:
        merged["format"] = DEFAULT_FORMAT[command]
    try:
        return RunConfig(
            command=command,
            alphas=tuple(float(a) for a in merged["alphas"]),
            epsilon=float(merged["epsilon"]),
            max_degree=int(merged["max_degree"]),
            root_tol=None if merged["root_tol"] is None else float(merged["root_tol"]),
            E=None if merged["E"] is None else float(merged["E"]),
            I=None if merged["I"] is None else float(merged["I"]),
            l=None if merged["l"] is None else float(merged["l"]),
            b1=float(merged["b1"]),
            samples=int(merged["samples"]),
            symmetrize=bool(merged["symmetrize"]),
            format=merged["format"],
            out=merged["out"],
            workers=int(merged["workers"]),
        )
    except (TypeError, ValueError) as exc:
        raise DomainError(str(exc))


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    try:
        cfg = config_from_args(ns)
        status, text = run(cfg)
    except (DomainError, OSError, json.JSONDecodeError) as exc:
        parser.print_usage(sys.stderr)
        print(f"fracbuckle: error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except FracBuckleError as exc:
        print(f"fracbuckle: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NO_ROOT
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
