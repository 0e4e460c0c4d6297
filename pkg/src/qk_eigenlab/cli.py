"""Command-line driver.

Subcommands expose the constructors (`hermite`, `hyp2f1`, `state`,
`overlap`, `norm-diag`) and the verification sweep (`verify`).  Reports are
deterministic: records are sorted by (suite, case, identity), numbers are
formatted with fixed precision, files use UTF-8 with LF endings, so an
identical configuration yields a byte-identical file.

Exit codes: 0 all checks pass (boundary-expected records do not fail a
run), 1 at least one failing record, 2 argument or configuration errors,
3 unexpected internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import traceback
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from fractions import Fraction
from typing import Dict, List

from .config import ConfigError, SuiteConfig, load_config, validate
from .hermite import hermite2_poly
from .hypergeom import PoleError, hyp2f1_terminating, layer_hyp_factor
from .report import FAIL
from .scalars import ComplexRational, ParseError, format_rational, parse_rational
from .states import EigenstateParams, eigen_state_qk
from .suites import SUITES
from .verify import divergence_terms, dyadic_window_maxima, overlap_qk

MAX_INDEX = 64

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(ValueError):
    pass


def _check_index(value: int, name: str) -> int:
    if value < 0 or value > MAX_INDEX:
        raise UsageError(f"{name} must be in [0, {MAX_INDEX}]")
    return value


def cmd_hermite(args) -> int:
    m = _check_index(args.m, "m")
    n = _check_index(args.n, "n")
    poly = hermite2_poly(m, n)
    if args.eval is None:
        print(poly)
    else:
        z = ComplexRational.parse(args.eval)
        print(poly.eval_conj(z))
    return EXIT_OK


def cmd_hyp2f1(args) -> int:
    n = _check_index(args.n, "n")
    value = hyp2f1_terminating(
        n, parse_rational(args.beta), parse_rational(args.gamma), parse_rational(args.z)
    )
    print(format_rational(value))
    return EXIT_OK


def _state_rows(params: EigenstateParams) -> List[Dict[str, str]]:
    state = eigen_state_qk(params)
    rows = []
    for n in params.layers():
        F = layer_hyp_factor(n, params.k, params.q)
        amp = state.amplitudes.get((n + params.q, n), 0j)
        rows.append(
            {
                "n": str(n),
                "na": str(n + params.q),
                "hyp_factor": format_rational(F),
                "amplitude": f"{amp.real:.12e}",
            }
        )
    return rows


def cmd_state(args) -> int:
    q = _check_index(args.q, "q")
    N = args.N
    if not (1 <= N <= MAX_INDEX):
        raise UsageError(f"N must be in [1, {MAX_INDEX}]")
    if N < q:
        raise UsageError("N must be at least q")
    params = EigenstateParams(q, parse_rational(args.k), N)
    rows = _state_rows(params)
    if args.format == "json":
        print(json.dumps(rows, indent=1))
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=["n", "na", "hyp_factor", "amplitude"],
                                lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        print(out.getvalue(), end="")
    else:
        print(f"{'n':>3} {'na':>3} {'F(n)':>16} {'amplitude':>20}")
        for row in rows:
            print(f"{row['n']:>3} {row['na']:>3} {row['hyp_factor']:>16} {row['amplitude']:>20}")
    return EXIT_OK


def cmd_overlap(args) -> int:
    q = _check_index(args.q, "q")
    if not (q <= args.N <= MAX_INDEX):
        raise UsageError(f"N must be in [q, {MAX_INDEX}]")
    z = ComplexRational.parse(args.xi)
    params = EigenstateParams(q, parse_rational(args.k), args.N)
    value = overlap_qk(z.to_complex(), params)
    print(f"{value.real:.12e}{value.imag:+.12e}j")
    return EXIT_OK


def cmd_norm_diag(args) -> int:
    q = _check_index(args.q, "q")
    k = parse_rational(args.k)
    top = args.n_max
    if not (1 <= top <= 200):
        raise UsageError("n-max must be in [1, 200]")
    terms = divergence_terms(q, k, top)
    running = Fraction(0)
    print(f"{'n':>4} {'term':>14} {'partial_sum':>14}")
    for n, t in enumerate(terms):
        running += t
        print(f"{n:>4} {float(t):>14.6e} {float(running):>14.6e}")
    maxima = dyadic_window_maxima(terms)
    print("dyadic window maxima:", " ".join(f"{float(m):.3e}" for m in maxima))
    floor = Fraction(1, 10**8)
    ok = all(m >= floor for m in maxima)
    print(f"term floor >= 1e-08 in every window: {'yes' if ok else 'NO'}")
    return EXIT_OK if ok else EXIT_FAILURES


def _render_json(records: List[Dict[str, str]]) -> str:
    lines = ",\n".join(" " + json.dumps(r, separators=(", ", ": ")) for r in records)
    return "[\n" + lines + "\n]\n" if records else "[]\n"


def _render_csv(records: List[Dict[str, str]]) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(
        out, fieldnames=["suite", "case", "identity", "status", "residual"], lineterminator="\n"
    )
    writer.writeheader()
    writer.writerows(records)
    return out.getvalue()


def _worker_count() -> int:
    raw = os.environ.get("QK_EIGENLAB_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_verify(cfg: SuiteConfig) -> List[Dict[str, str]]:
    """Run the configured suites and return records in canonical order."""
    names = list(cfg.suites)
    workers = _worker_count()
    if workers == 1:
        chunks = [SUITES[name](cfg) for name in names]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda name: SUITES[name](cfg), names))
    records = [r for chunk in chunks for r in chunk]
    records.sort(key=lambda r: (r["suite"], r["case"], r["identity"]))
    return records


def cmd_verify(args) -> int:
    cfg = load_config(args.config) if args.config else validate(SuiteConfig())
    if args.output:
        cfg = validate(replace(cfg, output_path=args.output))
    records = run_verify(cfg)
    text = _render_json(records) if cfg.format == "json" else _render_csv(records)
    with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    failures = [r for r in records if r["status"] == FAIL]
    counts: Dict[str, int] = {}
    for r in records:
        counts[r["status"]] = counts.get(r["status"], 0) + 1
    summary = " ".join(f"{status}={counts[status]}" for status in sorted(counts))
    print(f"{len(records)} records -> {cfg.output_path} [{summary}]")
    if failures:
        for r in failures[:10]:
            print(f"FAIL {r['suite']} :: {r['case']} :: {r['identity']} residual={r['residual']}")
        if len(failures) > 10:
            print(f"... and {len(failures) - 10} more failures")
        return EXIT_FAILURES
    return EXIT_OK


# Values like "-1/2" or "-1,0" are data, not options; widen the matcher that
# argparse uses to recognize negative-number positionals (no registered
# option string starts with a digit, so this is unambiguous).
_NEGATIVE_VALUE = re.compile(r"^-\d[\d/,.]*$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qk-eigenlab",
        description="Exact verification lab for two-mode Fock-space eigenstate constructions.",
    )
    parser._negative_number_matcher = _NEGATIVE_VALUE
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hermite", help="print H_{m,n} or its exact evaluation")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--eval", metavar="RE,IM", help="evaluate at z with slot2 = conj(z)")
    p.set_defaults(func=cmd_hermite)

    p = sub.add_parser("hyp2f1", help="exact terminating 2F1(-n, beta; gamma; z)")
    p.add_argument("n", type=int)
    p.add_argument("beta")
    p.add_argument("gamma")
    p.add_argument("z")
    p.set_defaults(func=cmd_hyp2f1)

    p = sub.add_parser("state", help="layer table of the (q, k) eigenstate")
    p.add_argument("q", type=int)
    p.add_argument("k")
    p.add_argument("N", type=int)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("overlap", help="overlap of the entangled state with |q,k>")
    p.add_argument("q", type=int)
    p.add_argument("k")
    p.add_argument("N", type=int)
    p.add_argument("--xi", metavar="RE,IM", required=True)
    p.set_defaults(func=cmd_overlap)

    p = sub.add_parser("norm-diag", help="divergence diagnostic of the norm series")
    p.add_argument("q", type=int)
    p.add_argument("k")
    p.add_argument("--n-max", type=int, default=60)
    p.set_defaults(func=cmd_norm_diag)

    p = sub.add_parser("verify", help="run verification suites and write a report")
    p.add_argument("config", nargs="?", help="JSON config path (defaults built in)")
    p.add_argument("--output", help="override the report output path")
    p.set_defaults(func=cmd_verify)

    for action in sub.choices.values():
        action._negative_number_matcher = _NEGATIVE_VALUE
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ParseError, ConfigError, UsageError, PoleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - the exit-code contract wants 3 here
        traceback.print_exc()
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
