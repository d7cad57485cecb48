"""Command-line interface.

Exit codes: 0 success, 1 invalid input or usage, 2 a sum exceeded
``2a^2 + 2b^2`` or a certifier residual failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from . import proof_certifier
from .closed_form import s3, s3_breakpoints
from .errors import BoundViolation, NNExtremalError
from .geom_core import CONTAIN_TOL, DISTINCT_TOL, Configuration, Rect, nn_distances, theorem_bound
from .landscape import SliceSpec, slice as landscape_slice
from .optimizer import SearchParams, brute_force_grid, multistart, sweep_vs_s3

log = logging.getLogger("nn_extremal")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VIOLATION = 2


def fmt(x: float) -> str:
    return format(x, ".17g")


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


@dataclass
class RunManifest:
    command: str
    args: dict
    seed: int | None
    timestamp: str
    outputs: list = field(default_factory=list)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None, outputs: list) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    outputs.append(str(path))


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _search_params(args) -> SearchParams:
    return SearchParams(
        restarts=args.restarts, init_step=args.init_step, shrink=args.shrink,
        min_step=args.min_step, max_iters=args.max_iters, seed=args.seed,
        anneal=args.anneal, workers=args.workers,
    )


def cmd_sigma(args, outputs) -> int:
    try:
        data = json.loads(Path(args.input).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise NNExtremalError(f"cannot read configuration {args.input}: {exc}") from exc
    config = Configuration.from_dict(data, args.tol_contain, args.tol_distinct)
    summary = nn_distances(config)
    bound = theorem_bound(config.rect)
    report = summary.to_dict()
    report.update(bound=bound, gap=bound - summary.sigma)
    _emit(dump_json(report), args.out, outputs)
    if summary.sigma > bound + args.tol_identity * max(1.0, config.rect.scale):
        log.error("counterexample alarm: sigma %r exceeds bound %r", summary.sigma, bound)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_maximize(args, outputs) -> int:
    rect = Rect(args.a, args.b)
    params = _search_params(args)
    extra = []
    if args.grid is not None:
        grid = brute_force_grid(rect, args.n, args.grid)
        extra.append(grid.best_config)
    report = multistart(rect, args.n, params, extra_starts=extra).to_dict()
    if args.grid is not None:
        report["grid"] = {"m": args.grid, "best_value": grid.best_value}
    _emit(dump_json(report), args.out, outputs)
    return EXIT_OK


def _ratios(args) -> list[float]:
    if args.ratios:
        ratios = [float(r) for r in args.ratios.split(",")]
    else:
        ratios = [args.lo + i * (args.hi - args.lo) / (args.count - 1) for i in range(args.count)]
    if args.breakpoints:
        ratios = sorted(set(ratios) | set(s3_breakpoints()))
    return ratios


def cmd_sweep_s3(args, outputs) -> int:
    ratios = _ratios(args)
    header = ["ratio", "value", "piece", "ratio_bound", "found", "rel_err"]
    rows = []
    if args.closed_form_only:
        for r in ratios:
            v = s3(1.0, r)
            rows.append([fmt(r), fmt(v.value), v.piece, fmt(v.value / (1 + r * r)), "", ""])
    else:
        for row in sweep_vs_s3(ratios, _search_params(args)):
            rows.append([fmt(row.ratio), fmt(row.closed_form), row.piece, fmt(row.ratio_bound),
                         fmt(row.found), fmt(row.rel_err)])
    _emit(_csv(header, rows), args.out, outputs)
    return EXIT_OK


def cmd_slice(args, outputs) -> int:
    spec = SliceSpec(args.seed, args.n, args.index, args.samples, Rect(args.a, args.b))
    rows = landscape_slice(spec)
    bound = theorem_bound(spec.rect)
    _emit(_csv(["s", "sigma"], [[fmt(r.s), fmt(r.sigma)] for r in rows]), args.out, outputs)
    if any(r.sigma > bound + args.tol_identity * max(1.0, spec.rect.scale) for r in rows):
        log.error("counterexample alarm in slice")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_certify(args, outputs) -> int:
    reports, summary = proof_certifier.certify(
        args.trials, args.seed, args.tol_identity, args.family or None
    )
    _emit(dump_json([r.to_dict() for r in reports]), args.out, outputs)
    for name, info in summary.by_family.items():
        status = "ok" if info["failed"] == 0 else "FAIL"
        print(f"{name:10s} {status:4s} {info['reports']:7d} reports, {info['failed']} failed, "
              f"worst normalized residual {info['worst_normalized']:.3e}",
              file=sys.stderr)
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def cmd_oracle(args, outputs) -> int:
    report = brute_force_grid(Rect(args.a, args.b), args.n, args.m)
    _emit(dump_json(report.to_dict()), args.out, outputs)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--manifest", help="run manifest path (default: <out>.manifest.json)")
    common.add_argument("--tol-identity", type=float, default=proof_certifier.TOL_IDENTITY)
    common.add_argument("--tol-contain", type=float, default=CONTAIN_TOL)
    common.add_argument("--tol-distinct", type=float, default=DISTINCT_TOL)
    common.add_argument("-v", "--verbose", action="store_true")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--restarts", type=int, default=32)
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--init-step", type=float, default=0.25)
    search.add_argument("--shrink", type=float, default=0.5)
    search.add_argument("--min-step", type=float, default=1e-9)
    search.add_argument("--max-iters", type=int, default=100_000)
    search.add_argument("--anneal", action="store_true")
    search.add_argument("--workers", type=int, default=None,
                        help="worker threads (default: $NN_EXTREMAL_THREADS, 0 = auto)")

    parser = _Parser(prog="nn-extremal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sigma", parents=[common], help="nearest-neighbor summary of a configuration")
    p.add_argument("--in", dest="input", required=True, help="configuration JSON")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("maximize", parents=[common, search], help="multistart maximization")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", type=int, default=None, metavar="M",
                   help="also seed the search with the lattice optimum at resolution M")
    p.set_defaults(func=cmd_maximize)

    p = sub.add_parser("sweep-s3", parents=[common, search],
                       help="three-point search against the closed form over aspect ratios")
    p.add_argument("--ratios", help="comma-separated b/a values")
    p.add_argument("--lo", type=float, default=0.3)
    p.add_argument("--hi", type=float, default=3.5)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--breakpoints", action="store_true", help="add the four branch breakpoints")
    p.add_argument("--closed-form-only", action="store_true")
    p.set_defaults(func=cmd_sweep_s3, restarts=64)

    p = sub.add_parser("slice", parents=[common], help="one-coordinate slice of the objective")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--index", type=int, default=0)
    p.add_argument("--samples", type=int, default=201)
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=1.0)
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("certify", parents=[common], help="sample every proof residual family")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--family", action="append", choices=proof_certifier.family_names())
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive lattice maximum (n <= 4)")
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    outputs: list[str] = []
    try:
        code = args.func(args, outputs)
    except BoundViolation as exc:
        print(f"counterexample alarm: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except NNExtremalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    manifest_path = args.manifest or (f"{args.out}.manifest.json" if args.out and args.out != "-" else None)
    if manifest_path:
        flags = {k: v for k, v in vars(args).items() if k != "func"}
        manifest = RunManifest(args.command, flags, getattr(args, "seed", None),
                               datetime.now(timezone.utc).isoformat(timespec="seconds"),
                               outputs)
        Path(manifest_path).write_text(dump_json(asdict(manifest)))
        outputs.append(manifest_path)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
