"""Command-line front end.

Every command builds an :class:`OutputRecord` and prints it as human
readable text, JSON (stable key order) or CSV.  Exit status is 0 when the
check passed or a value was produced, 1 when violations were found and 2
for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from .jets import mean_series, power_type_series
from .means import (
    DomainError,
    MeanKind,
    PowerTypeSpec,
    evaluate,
    parse_order,
    power_type_eval,
)
from .scan import default_grid, scan_grid
from .sharp import (
    SUPPORTED_PAIRS,
    ComparisonPair,
    Direction,
    NoRootError,
    conjecture_scan,
    critical_exponent,
)
from .verify import BUILTIN_CHAINS, verify_chain, verify_monotonicity_in_p, witness_f

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CSV_COLUMNS = ["name", "x", "lhs_spec", "rhs_spec", "lhs", "rhs", "gap"]


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    results: dict
    status: str  # "pass" | "fail" | "value"
    rows: list = field(default_factory=list, repr=False)  # CSV payload

    def to_json(self) -> str:
        payload = {"command": self.command, "inputs": self.inputs,
                   "results": self.results, "status": self.status}
        return json.dumps(_plain(payload), sort_keys=True, indent=2)

    def to_human(self) -> str:
        lines = [f"{self.command}: {self.status}"]
        for key in sorted(self.inputs):
            lines.append(f"  {key} = {_fmt(self.inputs[key])}")
        _human_lines(self.results, lines, indent=2)
        return "\n".join(lines)

    def to_csv(self, columns=None) -> str:
        buf = io.StringIO()
        columns = columns or (list(self.rows[0]) if self.rows else CSV_COLUMNS)
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: _fmt(v) for k, v in row.items()})
        return buf.getvalue()

    @property
    def exit_code(self) -> int:
        return EXIT_FAIL if self.status == "fail" else EXIT_OK


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, (MeanKind, PowerTypeSpec, ComparisonPair, Direction)):
        return str(obj.value if isinstance(obj, (MeanKind, Direction)) else obj)
    return obj


def _fmt(value) -> str:
    if isinstance(value, (float, np.floating)):
        return repr(float(value))  # shortest round-trip form
    return str(_plain(value))


def _human_lines(obj, lines, indent):
    pad = " " * indent
    for key in sorted(obj):
        value = obj[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            _human_lines(value, lines, indent + 2)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}: {len(value)} entries")
            for item in value[:10]:
                lines.append(f"{pad}  - " + ", ".join(
                    f"{k}={_fmt(item[k])}" for k in sorted(item)))
            if len(value) > 10:
                lines.append(f"{pad}  ...")
        else:
            lines.append(f"{pad}{key} = {_fmt(value)}")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _kind(text: str) -> MeanKind:
    try:
        return MeanKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _order(text: str) -> float:
    try:
        return parse_order(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _spec(text: str) -> PowerTypeSpec:
    try:
        return PowerTypeSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_eval(args) -> OutputRecord:
    spec = PowerTypeSpec(args.mean, args.p)
    value = power_type_eval(spec, args.a, args.b)
    inputs = {"mean": args.mean, "p": args.p, "a": args.a, "b": args.b}
    results = {"value": value.value, "rel_error_bound": value.rel_error_bound}
    rows = [{"mean": args.mean.value, "p": args.p, "a": args.a, "b": args.b,
             "value": value.value}]
    return OutputRecord("eval", inputs, results, "value", rows)


def cmd_series(args) -> OutputRecord:
    if args.order < 2:
        raise UsageError("--order must be at least 2")
    if args.p is None or args.p == 1.0:
        jet = mean_series(args.mean, args.order)
    elif args.p == 0.0:
        raise UsageError("--p 0 has no power-type series (M_0 is the geometric mean)")
    else:
        jet = power_type_series(PowerTypeSpec(args.mean, args.p), args.order)
    coeffs = [float(c) for c in jet.coeffs]
    inputs = {"mean": args.mean, "p": 1.0 if args.p is None else args.p,
              "order": args.order}
    rows = [{"k": k, "coefficient": c} for k, c in enumerate(coeffs)]
    return OutputRecord("series", inputs, {"coefficients": coeffs}, "value", rows)


def _pair_status(pair: ComparisonPair) -> str:
    for known, status in SUPPORTED_PAIRS.values():
        if known == pair:
            return status
    return "necessity"


def cmd_sharp(args) -> OutputRecord:
    pair = ComparisonPair(args.family, args.reference, Direction(args.direction))
    inputs = {"family": args.family, "reference": args.reference,
              "direction": args.direction}
    try:
        report = critical_exponent(pair)
    except NoRootError as exc:
        return OutputRecord("sharp", inputs, {"error": str(exc)}, "fail")
    status = _pair_status(pair)
    results = {
        "p_star": report.p_star,
        "c2_slope": report.c2_slope,
        "c2_intercept": report.c2_intercept,
        "c2_samples": [{"p": p, "c2": c} for p, c in report.c2_samples],
        "holds_when": report.holds_when,
        "endpoint_check": report.endpoint_check,
        "sufficiency": {"theorem": "proven", "conjecture": "conjectural sufficiency",
                        "necessity": "necessity only"}[status],
        "verdict": report.verdict(status),
    }
    return OutputRecord("sharp", inputs, results, "value")


def _gap_rows(name, links, gaps_by_link, grid):
    rows = []
    for link in links:
        gaps = gaps_by_link[link.name]
        lv = evaluate(link.lhs, grid, 1.0)
        rv = evaluate(link.rhs, grid, 1.0)
        for x, l, r, g in zip(grid, lv, rv, gaps):
            rows.append({"name": name, "x": float(x), "lhs_spec": str(link.lhs),
                         "rhs_spec": str(link.rhs), "lhs": float(l), "rhs": float(r),
                         "gap": float(g)})
    rows.sort(key=lambda r: (r["x"], r["lhs_spec"]))
    return rows


def _link_summary(link):
    return {"link": link.name, "min_gap": link.min_gap, "argmin_x": link.argmin_x,
            "violations": len(link.violations)}


def _violation_dicts(violations):
    return [{"link": v.link, "x": v.x, "lhs": v.lhs, "rhs": v.rhs, "gap": v.gap}
            for v in violations]


def cmd_chain(args) -> OutputRecord:
    try:
        spec = BUILTIN_CHAINS[args.name]
    except KeyError:
        raise UsageError(f"unknown chain {args.name!r}; built-in chains: "
                         f"{', '.join(sorted(BUILTIN_CHAINS))}") from None
    grid = default_grid(args.samples)
    report = verify_chain(spec, grid)
    results = {
        "chain": str(spec),
        "links": [_link_summary(link) for link in report.links],
        "min_gap": report.min_gap,
        "violations": _violation_dicts(report.violations),
    }
    rows = (_gap_rows(spec.name, report.links, report.gaps, grid)
            if args.format == "csv" else [])
    status = "pass" if report.passed else "fail"
    return OutputRecord("chain", {"name": args.name, "samples": args.samples},
                        results, status, rows)


def cmd_mono(args) -> OutputRecord:
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    p_grid = np.linspace(args.pmin, args.pmax, args.steps)
    report = verify_monotonicity_in_p(args.mean, p_grid, [(args.a, args.b)])
    results = {
        "min_rel_step": float(report.min_rel_step[0]),
        "values": [{"p": p, "value": v} for p, v in zip(p_grid, report.values[0])],
        "violations": [{"p_lo": lo, "p_hi": hi, "value_lo": vl, "value_hi": vh}
                       for _, lo, hi, vl, vh in report.violations],
    }
    rows = [{"p": p, "value": v} for p, v in zip(p_grid, report.values[0])]
    inputs = {"mean": args.mean, "pmin": args.pmin, "pmax": args.pmax,
              "steps": args.steps, "a": args.a, "b": args.b}
    return OutputRecord("mono", inputs, results, "pass" if report.passed else "fail", rows)


def cmd_conjecture(args) -> OutputRecord:
    if not args.p > 0:
        raise UsageError("--p must be positive")
    grid = scan_grid(args.samples)
    scan = conjecture_scan(args.p, grid)
    results = {
        "statement": scan.pair.statement(args.p),
        "grid_size": scan.grid_size,
        "min_gap": scan.min_gap,
        "argmin_x": scan.link.argmin_x,
        "violations": _violation_dicts(scan.violations),
    }
    rows = (_gap_rows("conjecture", [scan.link], {scan.link.name: scan.gaps}, grid)
            if args.format == "csv" else [])
    return OutputRecord("conjecture", {"p": args.p, "samples": args.samples}, results,
                        "pass" if scan.passed else "fail", rows)


def cmd_witness(args) -> OutputRecord:
    xs = np.linspace(0.0, 1.0, args.samples + 2)[1:-1]
    f = np.atleast_1d(witness_f(args.which, xs))
    positive = bool(np.all(f > 0))
    decreasing = bool(np.all(np.diff(f) < 0))
    near_one = float(witness_f(args.which, 1.0 - 1e-6))
    results = {"positive": positive, "decreasing": decreasing,
               "value_at_1_minus_1e-6": near_one, "min": float(f.min()),
               "max": float(f.max())}
    rows = [{"x": float(x), "f": float(v)} for x, v in zip(xs, f)]
    ok = positive and decreasing and near_one < 1e-9
    return OutputRecord("witness", {"which": args.which, "samples": args.samples},
                        results, "pass" if ok else "fail", rows)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powermeans",
        description="Power-type bivariate means: evaluation, diagonal series, "
                    "sharp exponents and inequality checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("human", "json", "csv")):
        p.add_argument("--format", choices=choices, default="human")

    p = sub.add_parser("eval", help="evaluate M_p(a, b)")
    p.add_argument("--mean", type=_kind, required=True)
    p.add_argument("--p", type=_order, default=1.0)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    fmt(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("series", help="Taylor coefficients of M_p(x, 1) about x = 1")
    p.add_argument("--mean", type=_kind, required=True)
    p.add_argument("--p", type=_order, default=None)
    p.add_argument("--order", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("sharp", help="critical exponent of a comparison")
    p.add_argument("--family", type=_kind, required=True)
    p.add_argument("--reference", type=_spec, required=True)
    p.add_argument("--direction", choices=["below", "above"], required=True)
    fmt(p, ("human", "json"))
    p.set_defaults(func=cmd_sharp)

    p = sub.add_parser("chain", help="verify a built-in inequality chain")
    p.add_argument("--name", required=True)
    p.add_argument("--samples", type=int, default=2000)
    fmt(p)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("mono", help="check monotonicity of M_p in p")
    p.add_argument("--mean", type=_kind, required=True)
    p.add_argument("--pmin", type=_order, required=True)
    p.add_argument("--pmax", type=_order, required=True)
    p.add_argument("--steps", type=int, default=41)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    fmt(p)
    p.set_defaults(func=cmd_mono)

    p = sub.add_parser("conjecture", help="scan N < T_p along (x, 1)")
    p.add_argument("--p", type=_order, required=True)
    p.add_argument("--samples", type=int, default=2000)
    fmt(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("witness", help="check an auxiliary function f1, f2 or f3")
    p.add_argument("--which", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--samples", type=int, default=500)
    fmt(p)
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", 2) < 2:
        parser.error("--samples must be at least 2")
    try:
        record = args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        stdout.write(record.to_json() + "\n")
    elif args.format == "csv":
        stdout.write(record.to_csv())
    else:
        stdout.write(record.to_human() + "\n")
    return record.exit_code


if __name__ == "__main__":
    sys.exit(main())
