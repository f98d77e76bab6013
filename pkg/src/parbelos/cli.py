"""Command line entry point: ``parbelos verify | render | sweep``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, List, Optional, Sequence

import numpy as np

from . import __version__
from . import parbelos as pbl
from .figures import FIGURE_NAMES, figure, render_scene
from .suite import derived_quantities, parse_properties, run_properties

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

SWEEP_COLUMNS = (
    "ratio",
    "parbelos_area",
    "rectangle_area",
    "parallelogram_area",
    "upper_arc",
    "lower_arc_sum",
    "circumradius",
    "common_tangent_slope",
)


def _round15(obj: Any) -> Any:
    if isinstance(obj, float):
        return float(f"{obj:.15g}")
    if isinstance(obj, dict):
        return {k: _round15(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round15(v) for v in obj]
    return obj


def dump_report(doc: dict) -> str:
    return json.dumps(_round15(doc), indent=2) + "\n"


def build_report(cusps: Sequence[float], properties: Sequence[int], rel_tol: Optional[float],
                 seed: int) -> dict:
    pb = pbl.from_cusps(*cusps)
    ctx = pb.tolerance_context(rel_tol)
    records = run_properties(pb, properties, ctx, seed)
    passed = sum(r.passed for r in records)
    return {
        "tool_version": __version__,
        "cusps": [float(c) for c in cusps],
        "properties": list(properties),
        "seed": seed,
        "rel_tol": ctx.rel_tol,
        "records": [r.to_dict() for r in records],
        "summary": {"total": len(records), "passed": passed, "failed": len(records) - passed},
        "derived_quantities": derived_quantities(pb),
    }


def sweep_rows(ratios: Sequence[float]) -> List[dict]:
    rows = []
    for r in ratios:
        pb = pbl.from_cusps(0.0, 4.0 * r, 4.0)
        d = derived_quantities(pb)
        rows.append({"ratio": r, **{k: d[k] for k in SWEEP_COLUMNS[1:]}})
    return rows


def sweep_csv(ratios: Sequence[float]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_COLUMNS)
    for row in sweep_rows(ratios):
        w.writerow([f"{row[c]:.15g}" for c in SWEEP_COLUMNS])
    return buf.getvalue()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="parbelos", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    cusps_kw = dict(nargs=3, type=float, metavar=("X1", "X2", "X3"), default=[0.0, 1.0, 4.0],
                    help="cusp abscissae, strictly increasing (default: 0 1 4)")

    v = sub.add_parser("verify", help="run the property checks and print a JSON report")
    v.add_argument("--cusps", **cusps_kw)
    v.add_argument("--properties", default="all", help="comma separated numbers 1-7, or 'all'")
    v.add_argument("--rel-tol", type=float, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("-o", dest="output", default=None, help="write the report here instead of stdout")

    r = sub.add_parser("render", help="write one figure as SVG")
    r.add_argument("name", choices=FIGURE_NAMES)
    r.add_argument("--cusps", **cusps_kw)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--samples", type=int, default=128)
    r.add_argument("--bezier", action="store_true", help="draw parabolic arcs as quadratic Beziers")
    r.add_argument("-o", dest="output", default=None, help="default: figure-<name>.svg")

    s = sub.add_parser("sweep", help="tabulate derived quantities over middle-cusp ratios")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--ratios", nargs="+", type=float, metavar="R")
    g.add_argument("--grid", nargs=3, metavar=("START", "STOP", "COUNT"))
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", dest="output", default=None)
    return p


def _cmd_verify(args, parser) -> int:
    try:
        props = parse_properties(args.properties)
        if args.rel_tol is not None and not args.rel_tol > 0:
            raise ValueError("--rel-tol must be positive")
        doc = build_report(args.cusps, props, args.rel_tol, args.seed)
    except ValueError as exc:
        parser.error(str(exc))
    text = dump_report(doc)
    try:
        _write(args.output, text)
    except OSError as exc:
        print(f"parbelos: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if doc["summary"]["failed"] == 0 else EXIT_FAILED


def _cmd_render(args, parser) -> int:
    if args.samples < 2:
        parser.error("--samples must be at least 2")
    try:
        scene = figure(args.name, args.cusps, samples=args.samples, bezier=args.bezier)
    except ValueError as exc:
        parser.error(str(exc))
    svg = render_scene(scene)
    path = args.output or f"figure-{args.name}.svg"
    try:
        _write(path, svg)
    except OSError as exc:
        print(f"parbelos: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(path)
    return EXIT_OK


def _cmd_sweep(args, parser) -> int:
    if args.grid is not None:
        try:
            start, stop, count = float(args.grid[0]), float(args.grid[1]), int(args.grid[2])
        except ValueError:
            parser.error("--grid takes START STOP COUNT")
        if count < 2:
            parser.error("--grid COUNT must be at least 2")
        ratios = [float(r) for r in np.linspace(start, stop, count)]
    else:
        ratios = list(args.ratios)
    if not ratios:
        parser.error("empty ratio grid")
    if any(not 0.0 < r < 1.0 for r in ratios):
        parser.error("ratios must lie strictly between 0 and 1")
    text = sweep_csv(ratios)
    try:
        _write(args.output, text)
    except OSError as exc:
        print(f"parbelos: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    handler = {"verify": _cmd_verify, "render": _cmd_render, "sweep": _cmd_sweep}[args.command]
    return handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
