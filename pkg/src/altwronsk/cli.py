"""Command-line front end: constant reports, tables, verification, benchmarks.

Results go to stdout; progress and diagnostics to stderr. Exit codes:
0 success/pass, 1 verification failure, 2 usage error or refusal,
3 internal consistency error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import parallel
from .engine import ConstReport, ExactDivisionError, const_of_p, render_ratio
from .oracle import (
    brute_force_const,
    random_polynomial,
    random_weight_tuple,
    verify_theorem,
)
from .permutations import (
    count_late_growing,
    enumerate_backtracking,
    enumerate_backtracking_signed,
    enumerate_filtered,
)

FORMATS = ("human", "jsonl", "csv")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altwronsk",
        description="Exact universal constants of alternating weighted-"
                    "derivative compositions, with verification tooling.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_const = sub.add_parser("const", help="compute the constant for one p")
    p_const.add_argument("--p", type=_positive, required=True)
    p_const.add_argument("--workers", type=_positive, default=os.cpu_count() or 1)
    p_const.add_argument("--format", choices=FORMATS, default="human")
    p_const.add_argument("--no-progress", action="store_true",
                         help="suppress progress lines on stderr")
    p_const.set_defaults(handler=cmd_const)

    p_table = sub.add_parser("table", help="summary table for p = 1..max-p")
    p_table.add_argument("--max-p", type=_positive, default=4)
    p_table.add_argument("--which", type=int, choices=(2, 3), default=2,
                         help="2: counts and constants; 3: growth ratios")
    p_table.add_argument("--format", choices=FORMATS, default="human")
    p_table.add_argument("--no-progress", action="store_true")
    p_table.set_defaults(handler=cmd_table)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--p", type=_positive, required=True)
    p_verify.add_argument(
        "--mode", required=True,
        choices=("oracle", "theorem-random", "generators", "oeis", "parity"))
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=_positive, default=5)
    p_verify.add_argument("--slow", action="store_true",
                          help="allow p beyond the default feasibility cap")
    p_verify.add_argument("--format", choices=FORMATS, default="human")
    p_verify.set_defaults(handler=cmd_verify)

    p_bench = sub.add_parser("bench", help="time one generator")
    p_bench.add_argument("--p", type=_positive, required=True)
    p_bench.add_argument("--algo", choices=("v1", "v2"), default="v2")
    p_bench.add_argument("--workers", type=_positive, default=1)
    p_bench.add_argument("--format", choices=FORMATS, default="human")
    p_bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExactDivisionError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


# -- output helpers -------------------------------------------------------


def _emit(fmt: str, records: list[dict], human_lines: list[str]) -> None:
    if fmt == "human":
        for line in human_lines:
            print(line)
    elif fmt == "jsonl":
        for record in records:
            print(json.dumps(record))
    else:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=list(records[0].keys()))
        writer.writeheader()
        writer.writerows(records)
        sys.stdout.write(buffer.getvalue())


def _underscored(value: int) -> str:
    return f"{value:_d}"


def _display_ratio(value) -> str:
    # Integers pick up thousands separators in human output.
    if value.denominator == 1:
        return _underscored(value.numerator)
    return render_ratio(value)


def _phi_fraction(phi_size: int, n_factorial: int) -> str:
    """The share of the symmetric group, in the 1/k style, e.g. "≈1/20"."""
    k, remainder = divmod(n_factorial, phi_size)
    return f"1/{k}" if remainder == 0 else f"≈1/{k}"


def _aligned(headers: list[str], rows: list[list[str]]) -> list[str]:
    widths = [
        max(len(headers[i]), *(len(row[i]) for row in rows)) if rows
        else len(headers[i])
        for i in range(len(headers))
    ]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for row in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return lines


# -- const ----------------------------------------------------------------


def cmd_const(args: argparse.Namespace) -> int:
    report = const_of_p(args.p, workers=args.workers,
                        progress=not args.no_progress)
    _emit(args.format, [report.to_record()], _human_const(report))
    return EXIT_OK


def _human_const(report: ConstReport) -> list[str]:
    n_factorial = math.factorial(2 * report.p)
    pairs = [
        ("p", str(report.p)),
        ("N!", _underscored(n_factorial)),
        ("|Phi_p|", _underscored(report.phi_size)),
        ("|Phi_p|/N!", _phi_fraction(report.phi_size, n_factorial)),
        ("even", _underscored(report.even_count)),
        ("odd", _underscored(report.odd_count)),
        ("const(p)", _underscored(report.const_p)),
        ("signed_sum", _underscored(report.signed_sum)),
        ("wronskian", _underscored(report.wronskian)),
        ("const(p)/p!", _display_ratio(report.ratio_p_factorial)),
        ("const(p)/N!", _display_ratio(report.ratio_N_factorial)),
    ]
    width = max(len(name) for name, _ in pairs)
    return [f"{name.ljust(width)} = {value}" for name, value in pairs]


# -- table ----------------------------------------------------------------


def cmd_table(args: argparse.Namespace) -> int:
    workers = os.cpu_count() or 1
    reports = [
        const_of_p(p, workers=workers, progress=not args.no_progress)
        for p in range(1, args.max_p + 1)
    ]
    records = [report.to_record() for report in reports]
    if args.which == 2:
        headers = ["p", "N!", "|Phi_p|", "|Phi_p|/N!", "even", "odd",
                   "const(p)"]
        rows = []
        for report in reports:
            n_factorial = math.factorial(2 * report.p)
            rows.append([
                str(report.p),
                _underscored(n_factorial),
                _underscored(report.phi_size),
                _phi_fraction(report.phi_size, n_factorial),
                _underscored(report.even_count),
                _underscored(report.odd_count),
                _underscored(report.const_p),
            ])
    else:
        headers = ["p", "p!", "N!", "const(p)", "const(p)/p!", "const(p)/N!"]
        rows = [
            [
                str(report.p),
                _underscored(math.factorial(report.p)),
                _underscored(math.factorial(2 * report.p)),
                _underscored(report.const_p),
                _display_ratio(report.ratio_p_factorial),
                _display_ratio(report.ratio_N_factorial),
            ]
            for report in reports
        ]
    _emit(args.format, records, _aligned(headers, rows))
    return EXIT_OK


# -- verify ---------------------------------------------------------------


def _refuse(message: str) -> int:
    print(f"refusing: {message} (pass --slow to override)", file=sys.stderr)
    return EXIT_USAGE


def cmd_verify(args: argparse.Namespace) -> int:
    runner = {
        "oracle": _verify_oracle,
        "theorem-random": _verify_theorem_random,
        "generators": _verify_generators,
        "oeis": _verify_oeis,
        "parity": _verify_parity,
    }[args.mode]
    outcome = runner(args)
    if isinstance(outcome, int):  # refusal already reported
        return outcome
    passed, record, lines = outcome
    record = {"command": "verify", "mode": args.mode, "p": args.p,
              "passed": passed, **record}
    _emit(args.format, [record], lines)
    return EXIT_OK if passed else EXIT_FAIL


def _verify_oracle(args):
    if args.p > 4 and not args.slow:
        return _refuse(f"oracle mode sums {math.factorial(2 * args.p)} "
                       f"operator compositions at p={args.p}")
    engine_value = const_of_p(args.p, workers=os.cpu_count() or 1).const_p
    oracle_value = brute_force_const(args.p)
    passed = engine_value == oracle_value
    line = (f"{'PASS' if passed else 'FAIL'} oracle p={args.p}: "
            f"engine={_underscored(engine_value)} "
            f"brute-force={_underscored(oracle_value)}")
    record = {"engine": str(engine_value), "brute_force": str(oracle_value)}
    return passed, record, [line]


def _verify_theorem_random(args):
    cap = 3 if args.slow else 2
    if args.p > cap:
        return _refuse(f"theorem-random at p={args.p} composes "
                       f"{math.factorial(2 * args.p)} operators per trial")
    expected = const_of_p(args.p).const_p
    rng = random.Random(args.seed)
    failures = []
    for trial in range(args.trials):
        weights = random_weight_tuple(rng, 2 * args.p)
        f = random_polynomial(rng, max_degree=args.p + 3, min_degree=args.p)
        result = verify_theorem(args.p, weights, f)
        if not result.holds or result.extracted_const != expected:
            failures.append({
                "trial": trial,
                "weights": [str(w) for w in weights],
                "f": str(f),
                "holds": result.holds,
                "extracted": str(result.extracted_const),
            })
    passed = not failures
    lines = [f"{'PASS' if passed else 'FAIL'} theorem-random p={args.p} "
             f"seed={args.seed} trials={args.trials} expected={expected}"]
    for failure in failures:
        lines.append(f"  counterexample trial {failure['trial']}: "
                     f"weights={failure['weights']} f={failure['f']} "
                     f"extracted={failure['extracted']}")
    record = {"seed": args.seed, "trials": args.trials,
              "expected": str(expected), "failures": failures}
    return passed, record, lines


def _verify_generators(args):
    if args.p > 4 and not args.slow:
        return _refuse(f"generator comparison filters all "
                       f"{math.factorial(2 * args.p)} permutations at p={args.p}")
    filtered = set(enumerate_filtered(args.p))
    generated = set(enumerate_backtracking(args.p))
    passed = filtered == generated
    lines = [f"{'PASS' if passed else 'FAIL'} generators p={args.p}: "
             f"filtered={len(filtered)} backtracking={len(generated)}"]
    extra = sorted(filtered ^ generated)[:5]
    if extra:
        lines.append(f"  first differing permutations: {extra}")
    record = {"filtered": len(filtered), "backtracking": len(generated),
              "difference": len(filtered ^ generated)}
    return passed, record, lines


def _verify_oeis(args):
    if args.p > 4 and not args.slow:
        return _refuse(f"late-growing brute force walks "
                       f"{math.factorial(2 * args.p)} permutations at p={args.p}")
    phi_size = sum(1 for _ in enumerate_backtracking(args.p))
    late = count_late_growing(2 * args.p)
    passed = phi_size == late
    line = (f"{'PASS' if passed else 'FAIL'} oeis p={args.p}: "
            f"|Phi_p|={phi_size} late-growing({2 * args.p})={late}")
    record = {"phi_size": phi_size, "late_growing": late}
    return passed, record, [line]


def _verify_parity(args):
    report = const_of_p(args.p, workers=os.cpu_count() or 1)
    gap = report.even_count - report.odd_count
    expected_gap = 1 if args.p % 2 else -1  # even perms lead at odd p
    passed = gap == expected_gap
    line = (f"{'PASS' if passed else 'FAIL'} parity p={args.p}: "
            f"even={_underscored(report.even_count)} "
            f"odd={_underscored(report.odd_count)} gap={gap:+d}")
    record = {"even": report.even_count, "odd": report.odd_count, "gap": gap}
    return passed, record, [line]


# -- bench ----------------------------------------------------------------


def cmd_bench(args: argparse.Namespace) -> int:
    if args.algo == "v1":
        if args.p > 4:
            print(f"refusing: the exhaustive filter walks "
                  f"{math.factorial(2 * args.p)} permutations at p={args.p}",
                  file=sys.stderr)
            return EXIT_USAGE
        started = time.perf_counter()
        emitted = sum(1 for _ in enumerate_filtered(args.p))
        elapsed = time.perf_counter() - started
        examined = math.factorial(2 * args.p)
        tasks = 1
    elif args.workers == 1:
        counter = [0]
        started = time.perf_counter()
        emitted = sum(1 for _ in enumerate_backtracking_signed(args.p, counter))
        elapsed = time.perf_counter() - started
        examined = counter[0]
        tasks = 1
    else:
        started = time.perf_counter()
        work = parallel.partition_work(
            args.p, parallel.default_depth(args.p, args.workers))
        with ProcessPoolExecutor(max_workers=args.workers) as executor:
            pairs = list(executor.map(parallel.run_task_counting, work))
        elapsed = time.perf_counter() - started
        emitted = parallel.reduce(pr for pr, _ in pairs).terms_evaluated
        examined = sum(count for _, count in pairs)
        tasks = len(work)
    record = {
        "command": "bench", "algo": args.algo, "p": args.p,
        "workers": args.workers, "emitted": emitted, "examined": examined,
        "tasks": tasks, "elapsed_s": round(elapsed, 6),
    }
    line = (f"bench {args.algo} p={args.p} workers={args.workers}: "
            f"emitted={_underscored(emitted)} examined={_underscored(examined)} "
            f"tasks={tasks} elapsed={elapsed:.3f}s")
    _emit(args.format, [record], [line])
    return EXIT_OK
