"""Command-line front end.

Subcommands: ``angles`` (emit a schedule), ``sweep`` (success amplitude over a
lambda grid), ``simulate`` (single lambda), ``statevector`` (full-register
run), ``verify`` (invariant suite).  Output goes to stdout or ``--output``;
identical flags produce byte-identical output.  Exit codes: 0 success,
1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .schedule import SearchParams, make_schedule, min_iterations
from .sim2d import OverlapX, run_search, success_probability_closed
from .statevector import MAX_QUBITS, MarkedSet, run_full_search
from .verify import run_verification

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


class UsageError(Exception):
    pass


def _fmt(value: float) -> str:
    return format(value, ".17g")


def _emit(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _require_format(args, allowed) -> str:
    fmt = args.format or allowed[0]
    if fmt not in allowed:
        raise UsageError(f"format {fmt!r} is not supported by this subcommand (expected {'/'.join(allowed)})")
    return fmt


def _schedule_from_args(args):
    if not 0.0 < args.w < 1.0:
        raise UsageError(f"w must be in (0, 1), got {args.w}")
    delta = getattr(args, "delta", None)
    if delta is not None and not 0.0 < delta < 1.0:
        raise UsageError(f"delta must be in (0, 1), got {delta}")
    l = getattr(args, "l", None)
    if l is None:
        if delta is None:
            raise UsageError("either --delta or --l is required")
        l = min_iterations(SearchParams(w=args.w, delta=delta))
    elif l < 1:
        raise UsageError(f"l must be a positive integer, got {l}")
    return make_schedule(args.w, l, delta=delta)


def cmd_angles(args) -> int:
    _require_format(args, ("json",))
    sched = _schedule_from_args(args)
    _emit(_json_text(sched.to_dict()), args.output)
    return EXIT_OK


def _sweep_rows(args, sched):
    if not 0.0 <= args.lambda_min < args.lambda_max <= 1.0:
        raise UsageError(
            f"need 0 <= lambda-min < lambda-max <= 1, got [{args.lambda_min}, {args.lambda_max}]"
        )
    if not 2 <= args.points <= 1_000_000:
        raise UsageError(f"points must be in 2..1000000, got {args.points}")
    rows = []
    for lam in np.linspace(args.lambda_min, args.lambda_max, args.points):
        overlap = OverlapX.from_lambda(float(lam))
        p_sim = abs(run_search(overlap.x, sched).t_amp)
        p_closed = success_probability_closed(overlap.lam, sched.w, sched.l)
        rows.append((overlap.lam, p_sim, p_closed, abs(p_sim - p_closed)))
    return rows


def cmd_sweep(args) -> int:
    fmt = _require_format(args, ("csv", "json"))
    sched = _schedule_from_args(args)
    rows = _sweep_rows(args, sched)
    if fmt == "csv":
        lines = ["lambda,p_sim,p_closed,abs_err"]
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
        _emit("\n".join(lines) + "\n", args.output)
    else:
        payload = [
            {"lambda": lam, "p_sim": ps, "p_closed": pc, "abs_err": err}
            for lam, ps, pc, err in rows
        ]
        _emit(_json_text(payload), args.output)
    guaranteed = [row[1] for row in rows if row[0] >= sched.w]
    if guaranteed:
        print(f"min P over lambda >= w={_fmt(sched.w)}: {_fmt(min(guaranteed))}", file=sys.stderr)
    else:
        print(f"no grid points with lambda >= w={_fmt(sched.w)}", file=sys.stderr)
    return EXIT_OK


def cmd_simulate(args) -> int:
    _require_format(args, ("json",))
    if not 0.0 <= args.lam <= 1.0:
        raise UsageError(f"lambda must be in [0, 1], got {args.lam}")
    sched = _schedule_from_args(args)
    overlap = OverlapX.from_lambda(args.lam)
    p_sim = abs(run_search(overlap.x, sched).t_amp)
    p_closed = success_probability_closed(overlap.lam, sched.w, sched.l)
    payload = {
        "lambda": args.lam,
        "w": sched.w,
        "l": sched.l,
        "L": sched.L,
        "p_sim": p_sim,
        "p_closed": p_closed,
        "abs_err": abs(p_sim - p_closed),
    }
    _emit(_json_text(payload), args.output)
    return EXIT_OK


def _parse_marked(args, dim: int):
    if args.marked is not None:
        try:
            indices = tuple(int(part) for part in args.marked.split(","))
        except ValueError as exc:
            raise UsageError(f"--marked must be a comma-separated integer list: {exc}") from exc
        return indices
    if not 1 <= args.marked_count < dim:
        raise UsageError(f"--marked-count must be in 1..{dim - 1}, got {args.marked_count}")
    rng = np.random.default_rng(args.seed)
    return tuple(int(i) for i in rng.choice(dim, size=args.marked_count, replace=False))


def cmd_statevector(args) -> int:
    _require_format(args, ("json",))
    if not 1 <= args.qubits <= MAX_QUBITS:
        raise UsageError(f"--qubits must be in 1..{MAX_QUBITS}, got {args.qubits}")
    dim = 1 << args.qubits
    try:
        marked = MarkedSet(indices=_parse_marked(args, dim), n_qubits=args.qubits)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    sched = _schedule_from_args(args)
    result = run_full_search(args.qubits, marked, sched)
    payload = {
        "lambda": marked.lam,
        "l": sched.l,
        "success_probability": result.success_probability,
        "phase_oracle_calls": result.phase_oracle_calls,
        "standard_oracle_calls": result.standard_oracle_calls,
    }
    _emit(_json_text(payload), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    _require_format(args, ("json",))
    if args.max_L % 2 == 0:
        raise UsageError(f"--max-L must be odd, got {args.max_L}")
    if not 3 <= args.max_L <= 25:
        raise UsageError(f"--max-L must lie in 3..25, got {args.max_L}")
    results = run_verification(max_L=args.max_L, seed=args.seed)
    _emit(_json_text([r.to_dict() for r in results]), args.output)
    failed = [r for r in results if not r.passed]
    for r in failed:
        print(f"FAILED {r.check_name}: max deviation {r.max_deviation:g}", file=sys.stderr)
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpsearch",
        description="Fixed-point search schedules, simulators and identity verification.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", default=None, help="write output to this path instead of stdout")
    common.add_argument("--format", choices=("csv", "json"), default=None, help="output format")
    sub = parser.add_subparsers(dest="command", required=True)

    p_angles = sub.add_parser("angles", parents=[common], help="emit the angle schedule as JSON")
    p_angles.add_argument("--w", type=float, required=True)
    group = p_angles.add_mutually_exclusive_group(required=True)
    group.add_argument("--delta", type=float)
    group.add_argument("--l", type=int)
    p_angles.set_defaults(handler=cmd_angles)

    p_sweep = sub.add_parser("sweep", parents=[common], help="success amplitude over a lambda grid (CSV)")
    p_sweep.add_argument("--w", type=float, required=True)
    p_sweep.add_argument("--delta", type=float, required=True)
    p_sweep.add_argument("--l", type=int, default=None, help="override the minimal iteration count")
    p_sweep.add_argument("--lambda-min", dest="lambda_min", type=float, default=0.0)
    p_sweep.add_argument("--lambda-max", dest="lambda_max", type=float, default=1.0)
    p_sweep.add_argument("--points", type=int, default=500)
    p_sweep.set_defaults(handler=cmd_sweep)

    p_sim = sub.add_parser("simulate", parents=[common], help="simulate a single lambda")
    p_sim.add_argument("--lambda", dest="lam", type=float, required=True)
    p_sim.add_argument("--w", type=float, required=True)
    group = p_sim.add_mutually_exclusive_group(required=True)
    group.add_argument("--delta", type=float)
    group.add_argument("--l", type=int)
    p_sim.set_defaults(handler=cmd_simulate)

    p_state = sub.add_parser("statevector", parents=[common], help="full-register run on 2^n amplitudes")
    p_state.add_argument("--qubits", type=int, required=True)
    group = p_state.add_mutually_exclusive_group(required=True)
    group.add_argument("--marked", type=str, default=None, help="comma-separated marked indices")
    group.add_argument("--marked-count", dest="marked_count", type=int, default=None)
    p_state.add_argument("--seed", type=int, default=0, help="seed for --marked-count sampling")
    p_state.add_argument("--w", type=float, required=True)
    p_state.add_argument("--delta", type=float, default=None)
    p_state.add_argument("--l", type=int, default=None)
    p_state.set_defaults(handler=cmd_statevector)

    p_verify = sub.add_parser("verify", parents=[common], help="run the invariant verification suite")
    p_verify.add_argument("--max-L", dest="max_L", type=int, default=9)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
