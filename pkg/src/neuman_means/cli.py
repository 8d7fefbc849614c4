"""Command-line front end.

    neuman-means eval N_CA 1 3
    neuman-means table --v 0.1:0.9:9 --cases T12_AH,T13_AC --format csv
    neuman-means certify --format json --out certs.json
    neuman-means chain --samples 100000 --seed 0

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Callable, Sequence

import numpy as np

from .certify import (
    SweepSpec,
    TheoremCase,
    certify_case,
    chain_check,
    probe_complete,
    ratio,
    sharpness_probe,
)
from .means import MeanKind, PositivePair, classical_mean
from .neuman import NeumanCase, n_mean, neuman, s_mean, sb

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CHAIN_LOG_RANGE = (math.log(1e-3), math.log(1e3))


class UsageError(Exception):
    pass


def _evaluators() -> dict[str, Callable[[PositivePair], float]]:
    table: dict[str, Callable[[PositivePair], float]] = {}
    for kind in MeanKind:
        table[kind.value] = lambda pr, k=kind: classical_mean(k, pr)
    table["SB"] = lambda pr: sb(pr.a, pr.b)
    table["N"] = lambda pr: neuman(pr.a, pr.b)
    for case in ("AH", "HA", "CA", "AC"):
        table[f"S_{case}"] = lambda pr, c=case: s_mean(c, pr)
    for case in NeumanCase:
        table[f"N_{case.value}"] = lambda pr, c=case: n_mean(c, pr)
    return table


EVALUATORS = _evaluators()


def _num(x: float) -> str:
    # shortest round-trip representation
    return repr(float(x))


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, allow_nan=False) + "\n"


def _parse_cases(text: str | None) -> list[TheoremCase]:
    if text is None or text.strip().lower() == "all":
        return list(TheoremCase)
    names = [t.strip() for t in text.split(",") if t.strip()]
    try:
        return [TheoremCase(n) for n in names]
    except ValueError as exc:
        raise UsageError(f"unknown case in {text!r}; choose from {[c.value for c in TheoremCase]}") from exc


def parse_v_grid(text: str) -> list[float]:
    """Either a comma list of v values or ``start:stop:count`` (inclusive)."""
    try:
        if ":" in text:
            start_s, stop_s, count_s = text.split(":")
            start, stop, count = float(start_s), float(stop_s), int(count_s)
            if count < 1:
                raise UsageError("grid count must be >= 1")
            if count == 1:
                vs = [start]
            else:
                vs = [start + (stop - start) * i / (count - 1) for i in range(count)]
                vs[-1] = stop
        else:
            vs = [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"malformed v grid {text!r}") from exc
    if not vs:
        raise UsageError("empty v grid")
    for v in vs:
        if not (0.0 < v < 1.0):
            raise UsageError(f"v={v!r} outside the open interval (0, 1)")
    return vs


# -- commands ---------------------------------------------------------------


def run_eval(args: argparse.Namespace) -> int:
    fn = EVALUATORS.get(args.name)
    if fn is None:
        raise UsageError(f"unknown mean {args.name!r}; choose from {sorted(EVALUATORS)}")
    try:
        pair = PositivePair(args.a, args.b)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    print(format(fn(pair), ".15g"))
    return EXIT_OK


def run_table(args: argparse.Namespace) -> int:
    vs = parse_v_grid(args.v)
    cases = [] if args.cases.strip() == "" else _parse_cases(args.cases)
    header = ["v"] + [c.value for c in cases]
    rows = [[v] + [ratio(c, v) for c in cases] for v in vs]
    if args.format == "json":
        text = _dump_json({"columns": header, "rows": rows})
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_num(x) for x in row])
        text = buf.getvalue()
    else:
        lines = ["  ".join(f"{h:>22}" for h in header)]
        lines += ["  ".join(f"{x:>22.15g}" for x in row) for row in rows]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def run_certify(args: argparse.Namespace) -> int:
    cases = _parse_cases(args.cases)
    try:
        sweep = SweepSpec(
            v_min=args.v_min, v_max=args.v_max, points=args.points,
            spacing=args.spacing, tol=args.tol,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not (args.epsilon > 0.0):
        raise UsageError("--epsilon must be positive")
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")

    records = []
    all_ok = True
    for case in cases:
        cert = certify_case(case, sweep, workers=args.workers)
        probe = sharpness_probe(case, args.epsilon, sweep)
        sharp_ok = probe_complete(probe)
        all_ok = all_ok and cert.passed and sharp_ok
        for msg in cert.warnings:
            print(f"warning: {case.value}: {msg}", file=sys.stderr)
        if not sharp_ok:
            print(f"warning: {case.value}: sharpness probe found no witness for some bound", file=sys.stderr)
        record = cert.to_dict()
        record["sharpness"] = {
            "epsilon": args.epsilon,
            "complete": sharp_ok,
            "witnesses": [
                {"bound": w.bound, "constant": w.constant, "v": w.v, "ratio": w.ratio} for w in probe
            ],
        }
        records.append(record)

    if args.format == "json":
        text = _dump_json(records)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["case", "alpha", "beta", "observed_inf", "observed_sup", "limit_v0",
                         "limit_v1", "limit_error", "max_abs_gap", "tol", "verdict", "sharpness"])
        for r in records:
            writer.writerow([
                r["case"], _num(r["constants"]["alpha"]), _num(r["constants"]["beta"]),
                _num(r["observed"]["inf"]), _num(r["observed"]["sup"]),
                _num(r["limits"]["v0"]), _num(r["limits"]["v1"]), _num(r["limits"]["error_bound"]),
                _num(r["max_abs_gap"]), _num(r["tol"]), r["verdict"],
                "complete" if r["sharpness"]["complete"] else "incomplete",
            ])
        text = buf.getvalue()
    else:
        lines = []
        for r in records:
            lines.append(
                f"{r['case']:<7} alpha={r['constants']['alpha']:.10f} beta={r['constants']['beta']:.10f} "
                f"inf={r['observed']['inf']:.10f} sup={r['observed']['sup']:.10f} "
                f"gap={r['max_abs_gap']:.2e} {r['verdict'].upper()} "
                f"sharpness={'ok' if r['sharpness']['complete'] else 'MISSING'}"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if all_ok else EXIT_FAIL


def random_pairs(samples: int, seed: int) -> list[PositivePair]:
    """Log-uniform pairs in [1e-3, 1e3]^2 with distinct entries."""
    rng = np.random.Generator(np.random.PCG64(seed))
    lo, hi = CHAIN_LOG_RANGE
    pairs: list[PositivePair] = []
    while len(pairs) < samples:
        a, b = np.exp(rng.uniform(lo, hi, size=2))
        if a != b:
            pairs.append(PositivePair(float(a), float(b)))
    return pairs


def run_chain(args: argparse.Namespace) -> int:
    if args.samples <= 0:
        raise UsageError("--samples must be positive")
    if not (0 <= args.seed < 2**64):
        raise UsageError("--seed must be an unsigned 64-bit integer")
    pairs = random_pairs(args.samples, args.seed)
    failures = [p for p in pairs if not chain_check(p)]
    passed = len(pairs) - len(failures)
    if args.format == "json":
        text = _dump_json({
            "samples": args.samples,
            "seed": args.seed,
            "passed": passed,
            "failures": [{"a": p.a, "b": p.b} for p in failures[:20]],
        })
    else:
        text = f"{passed}/{len(pairs)} pass\n"
        text += "".join(f"fail a={_num(p.a)} b={_num(p.b)}\n" for p in failures[:20])
    _emit(text, args.out)
    return EXIT_OK if not failures else EXIT_FAIL


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="neuman-means", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one mean at (a, b)")
    p.add_argument("name", help=", ".join(sorted(EVALUATORS)))
    p.add_argument("a", type=float)
    p.add_argument("b", type=float)
    p.set_defaults(func=run_eval)

    p = sub.add_parser("table", help="tabulate theorem ratios over a v grid")
    p.add_argument("--v", required=True, help="comma list or start:stop:count")
    p.add_argument("--cases", default="all", help="comma list of case ids, 'all', or ''")
    p.add_argument("--format", choices=("plain", "csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=run_table)

    p = sub.add_parser("certify", help="certify the sharp bounds")
    p.add_argument("--cases", default="all")
    p.add_argument("--points", type=int, default=10_000)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--v-min", type=float, default=1e-6)
    p.add_argument("--v-max", type=float, default=1.0 - 1e-6)
    p.add_argument("--spacing", choices=("uniform", "endpoint-refined"), default="uniform")
    p.add_argument("--epsilon", type=float, default=1e-3, help="sharpness tightening")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p.add_argument("--out", default=None)
    p.set_defaults(func=run_certify)

    p = sub.add_parser("chain", help="check both mean chains on random pairs")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--out", default=None)
    p.set_defaults(func=run_chain)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
