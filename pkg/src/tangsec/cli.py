"""Command-line front end.

    tangsec secant-table --amax 10 --bmax 10
    tangsec hf --scheme scheme.json --degree 4
    tangsec verify degeneration

Exit codes: 0 on success, 1 on usage or input errors, 2 when a computation
disagrees with the expected value.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from .ffla import DEFAULT_PRIME, is_prime
from .schemes import AmbientMismatch, scheme_from_json
from .verdict import Verdict

CSV_FIELDS = ["a", "b", "s", "expected_hf", "computed_hf", "defect", "trials", "seed"]
DEGREE_BOUND = 12

TARGETS = (
    "b1", "b2", "small", "main", "transfer", "apolarity", "residue-example",
    "colon", "degeneration", "collinear", "horace-step",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    prime: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = 3
    degree_bound: int = DEGREE_BOUND
    fmt: str = "csv"
    out: str | None = None

    def __post_init__(self):
        if not is_prime(self.prime) or self.prime >= 2**31:
            raise UsageError("--prime must be a prime below 2**31")
        if self.prime <= 2 * self.degree_bound:
            raise UsageError("--prime must exceed twice the degree bound")
        if self.trials < 1:
            raise UsageError("--trials must be positive")


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {n}")
    return n


def _bidegree(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("bidegree must look like a,b") from None
    if a < 0 or b < 0:
        raise argparse.ArgumentTypeError("bidegree entries must be non-negative")
    return a, b


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--prime", type=int, default=d(DEFAULT_PRIME), help="field characteristic")
    p.add_argument("--seed", type=int, default=d(0), help="base seed for random data")
    p.add_argument("--trials", type=int, default=d(3), help="random samples per cell")
    p.add_argument("--format", choices=("csv", "json"), default=d("csv"), dest="fmt")
    p.add_argument("--out", default=d(None), help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tangsec", description="Hilbert functions of (3,2)-point schemes and secant defect tables.")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    st = sub.add_parser("secant-table", help="Terracini ranks for all cells up to (amax, bmax)")
    st.add_argument("--amax", type=_positive, default=10)
    st.add_argument("--bmax", type=_positive, default=10)
    _add_globals(st, suppress=True)

    hf = sub.add_parser("hf", help="Hilbert function of a scheme given as JSON")
    hf.add_argument("--scheme", required=True, help="path to a scheme JSON file ('-' for stdin)")
    g = hf.add_mutually_exclusive_group(required=True)
    g.add_argument("--degree", type=int)
    g.add_argument("--bidegree", type=_bidegree)
    _add_globals(hf, suppress=True)

    ve = sub.add_parser("verify", help="run one verification suite")
    ve.add_argument("target", choices=TARGETS)
    ve.add_argument("--amax", type=_positive, default=None)
    ve.add_argument("--bmax", type=_positive, default=None)
    ve.add_argument("--dmax", type=_positive, default=6, help="degree bound for ideal checks")
    ve.add_argument("--count", type=_positive, default=None, help="number of random instances")
    _add_globals(ve, suppress=True)
    return parser


# --------------------------------------------------------------------------
# output


def _csv(rows: list[dict], fields: list[str] | None = None) -> str:
    if fields is None:
        fields = []
        for r in rows:
            fields.extend(k for k in r if k not in fields)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for r in rows:
        w.writerow({k: _plain(v) for k, v in r.items()})
    return buf.getvalue()


def _plain(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, np.integer):
        return int(v)
    return v


def _json_default(v):
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, np.bool_):
        return bool(v)
    raise TypeError(f"cannot serialize {type(v).__name__}")


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, default=_json_default) + "\n"


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# commands


def cmd_secant_table(args, cfg: RunConfig) -> int:
    from .secant import defect_table

    reports = defect_table(args.amax, args.bmax, cfg.trials, cfg.seed, cfg.prime)
    rows = [r.as_dict() for r in sorted(reports, key=lambda r: (r.a, r.b, r.s))]
    if cfg.fmt == "json":
        _emit(_dump_json([{**r, "prime": cfg.prime} for r in rows]), cfg)
    else:
        _emit(_csv(rows, CSV_FIELDS), cfg)
    return 0 if all(r["defect"] == 0 for r in rows) else 2


def _read_scheme(path: str, cfg: RunConfig):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read scheme: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed scheme JSON: {exc}") from None
    rng = np.random.default_rng([cfg.seed])
    try:
        return scheme_from_json(obj, rng, cfg.prime)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"invalid scheme: {exc}") from None


def cmd_hf(args, cfg: RunConfig) -> int:
    from .hilbert import linsys_dim

    X = _read_scheme(args.scheme, cfg)
    degree = args.bidegree if args.bidegree is not None else args.degree
    try:
        rep = linsys_dim(X, degree, cfg.prime)
    except AmbientMismatch as exc:
        raise UsageError(str(exc)) from None
    row = {**rep.as_dict(), "seed": cfg.seed, "prime": cfg.prime}
    _emit(_dump_json(row) if cfg.fmt == "json" else _csv([row]), cfg)
    return 0


def run_target(target: str, args, cfg: RunConfig) -> Verdict:
    from . import hilbert, horace, secant, transfer

    p, seed, trials = cfg.prime, cfg.seed, cfg.trials
    dmax = min(args.dmax, cfg.degree_bound)
    if target == "b1":
        return hilbert.check_b1(args.amax or 30, trials, seed, p)
    if target == "b2":
        return hilbert.check_b2(args.amax or 20, trials, seed, p)
    if target == "small":
        return hilbert.check_small_cases(trials, seed, p)
    if target == "main":
        return hilbert.check_main_plane(args.amax or 10, args.bmax or 10, trials, seed, p)
    if target == "transfer":
        return transfer.transfer_suite(args.count or 50, args.amax or 8, args.bmax or 8, seed, p)
    if target == "apolarity":
        rows = []
        top = args.amax or 12
        for a in range(1, top):
            for b in range(1, top - a + 1):
                if a * b > 1:
                    rows.extend(secant.verify_tangent_apolarity(a, b, trials, seed, p).rows)
        return Verdict.from_rows(rows)
    if target == "residue-example":
        return horace.verify_residue_example(dmax, p)
    if target == "colon":
        return horace.verify_colon_identities(args.count or 20, dmax, seed, p)
    if target == "degeneration":
        return horace.verify_degeneration(args.count or 10, dmax, seed, p)
    if target == "collinear":
        return horace.collinear_suite(trials, seed, p)
    if target == "horace-step":
        return horace.horace_step_suite(seed, p)
    raise UsageError(f"unknown target {target!r}")


def cmd_verify(args, cfg: RunConfig) -> int:
    verdict = run_target(args.target, args, cfg)
    if cfg.fmt == "json":
        obj = {
            "target": args.target, "passed": verdict.passed, "seed": cfg.seed,
            "trials": cfg.trials, "prime": cfg.prime, "rows": verdict.rows,
        }
        _emit(_dump_json(obj), cfg)
    else:
        rows = [{"target": args.target, **r, "seed": cfg.seed, "trials": cfg.trials, "prime": cfg.prime}
                for r in verdict.rows]
        _emit(_csv(rows), cfg)
    print(f"{args.target}: {'pass' if verdict.passed else 'FAIL'} ({len(verdict.rows)} checks)", file=sys.stderr)
    return 0 if verdict.passed else 2


COMMANDS = {"secant-table": cmd_secant_table, "hf": cmd_hf, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args.prime, args.seed, args.trials, DEGREE_BOUND, args.fmt, args.out)
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"tangsec: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
