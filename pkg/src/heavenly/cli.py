"""Command-line entry point: ``heavenly verify|eval|bracket|prolong|pfaffian``."""

from __future__ import annotations

import argparse
import json
import sys

from .diffpoly import DiffPoly, evaluate, substitute, to_text
from .dsl import parse
from .errors import HeavenlyError
from .jetspace import Chart, VectorField, lie_bracket, prolong
from .linalg import pfaffian
from .plebanski.catalog import CHARTS

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="heavenly", description="Exact jet-calculus checks for heavenly equations.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", required=True, help="suite name or 'all'")
    v.add_argument("--json", dest="json_path", help="write the JSON report here")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--points", type=int, default=20)

    e = sub.add_parser("eval", help="evaluate an expression at a point")
    e.add_argument("--chart", required=True)
    e.add_argument("--expr", required=True)
    e.add_argument("--at", required=True, help="JSON file {symbol: value}")

    b = sub.add_parser("bracket", help="Lie bracket of two vector fields")
    b.add_argument("--chart", required=True)
    b.add_argument("--x", required=True)
    b.add_argument("--y", required=True)

    pr = sub.add_parser("prolong", help="prolong a point field")
    pr.add_argument("--chart", required=True)
    pr.add_argument("--field", required=True)
    pr.add_argument("--order", type=int, required=True)

    pf = sub.add_parser("pfaffian", help="Pfaffian of an antisymmetric matrix")
    pf.add_argument("--matrix", required=True)
    pf.add_argument("--chart", default="6D", help="chart used to read entries (default 6D)")
    return p


def _chart(name: str) -> Chart:
    try:
        return CHARTS[name]
    except KeyError:
        raise UsageError(f"unknown chart {name!r}; known: {', '.join(CHARTS)}") from None


def _load(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _text(value) -> str:
    return value if isinstance(value, str) else str(value)


def _read_field(path: str, chart: Chart) -> VectorField:
    data = _load(path)
    if isinstance(data, dict) and "coefficients" in data:
        if data.get("chart", chart.name) != chart.name:
            raise UsageError(f"{path}: field is on chart {data['chart']!r}, not {chart.name!r}")
        data = data["coefficients"]
    if not isinstance(data, dict):
        raise UsageError(f"{path}: expected an object of coefficients")
    return VectorField(chart, {k: parse(_text(v), chart) for k, v in data.items()})


def _print_json(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def cmd_verify(args, out) -> int:
    from .plebanski.suites import suite_names
    from .report import run_suites
    names = suite_names() if args.suite == "all" else [args.suite]
    unknown = [n for n in names if n not in suite_names()]
    if unknown:
        raise UsageError(f"unknown suite {unknown[0]!r}; known: {', '.join(suite_names())}")
    if args.points < 1:
        raise UsageError("--points must be positive")
    report = run_suites(names, args.seed, args.points)
    out.write(report.to_text())
    if args.json_path:
        with open(args.json_path, "w") as fh:
            fh.write(report.dumps())
    return EXIT_OK if report.status == "pass" else EXIT_FAIL


def cmd_eval(args, out) -> int:
    chart = _chart(args.chart)
    p = parse(args.expr, chart)
    at = _load(args.at)
    if not isinstance(at, dict):
        raise UsageError(f"{args.at}: expected an object {{symbol: value}}")
    assignment = {}
    for key, val in at.items():
        sym = _single_symbol(parse(key, chart))
        if sym is None:
            raise UsageError(f"{args.at}: {key!r} is not a single symbol")
        value = parse(_text(val), chart)
        if not value.is_constant():
            raise UsageError(f"{args.at}: value for {key!r} is not a rational number")
        assignment[sym] = value.constant_term()
    if p.symbols() <= set(assignment):
        out.write(f"{evaluate(p, assignment)}\n")
    else:
        out.write(to_text(substitute(p, assignment)) + "\n")
    return EXIT_OK


def _single_symbol(p: DiffPoly):
    syms = p.symbols()
    if len(syms) != 1:
        return None
    sym = next(iter(syms))
    return sym if p == DiffPoly.from_sym(sym) else None


def cmd_bracket(args, out) -> int:
    chart = _chart(args.chart)
    X, Y = _read_field(args.x, chart), _read_field(args.y, chart)
    _print_json(lie_bracket(X, Y).to_json(), out)
    return EXIT_OK


def cmd_prolong(args, out) -> int:
    chart = _chart(args.chart)
    if args.order < 0:
        raise UsageError("--order must be non-negative")
    X = _read_field(args.field, chart)
    pr = prolong(X, args.order)
    dep = chart.dependents[0]
    coeffs = {c: to_text(X.coeff(c)) for c in chart.coords if X.coeff(c)}
    for idx, phi in pr.jets.items():
        if phi:
            coeffs[chart.jet_sym(dep, idx).text()] = to_text(phi)
    _print_json({"chart": chart.name, "order": args.order, "coefficients": coeffs}, out)
    return EXIT_OK


def cmd_pfaffian(args, out) -> int:
    chart = _chart(args.chart)
    data = _load(args.matrix)
    if isinstance(data, dict):
        if "chart" in data:
            chart = _chart(data["chart"])
        data = data.get("matrix")
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise UsageError(f"{args.matrix}: expected a matrix (list of rows)")
    m = [[parse(_text(v), chart) for v in row] for row in data]
    try:
        value = pfaffian(m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(to_text(value) + "\n")
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "eval": cmd_eval, "bracket": cmd_bracket,
            "prolong": cmd_prolong, "pfaffian": cmd_pfaffian}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.cmd](args, out)
    except UsageError as exc:
        err.write(f"heavenly: error: {exc}\n")
        return EXIT_USAGE
    except HeavenlyError as exc:
        err.write(f"heavenly: error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
