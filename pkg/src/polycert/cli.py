"""Command-line front end.

Exit codes: 0 certified, 2 condition not satisfied, 3 boundary case,
1 input error, 4 internal error (a certificate contradicted by the oracle).
For batch input the worst code wins, in the order 4, 1, 3, 2, 0.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import selftest
from .certify import (
    InternalInconsistencyError,
    Verdict,
    check_even,
    check_hutchinson,
    check_odd,
)
from .extremal import (
    DEFAULT_PRECISION,
    Mode,
    exact_json,
    numeric_text,
    perturb,
    rational_instance,
    rationalize,
    theorem2_polynomial,
    theorem3_polynomial,
    verify_extremal_ratios,
)
from .poly import ParseError, parse, parse_scalar, serialize
from .roots import count_real_roots
from .sampling import make_rng

EXIT_CERTIFIED = 0
EXIT_INPUT_ERROR = 1
EXIT_FAILS = 2
EXIT_BOUNDARY = 3
EXIT_INTERNAL = 4

_SEVERITY = [EXIT_CERTIFIED, EXIT_FAILS, EXIT_BOUNDARY, EXIT_INPUT_ERROR, EXIT_INTERNAL]

CHECK_FIELDS = ["source", "degree", "condition", "verdict", "ratios", "relations", "minors", "error"]
CERTIFY_FIELDS = CHECK_FIELDS[:-1] + ["threshold", "distinct", "with_multiplicity", "soundness_violation", "error"]
SWEEP_FIELDS = ["n", "epsilon", "verdict", "distinct", "with_multiplicity"]


def exit_code_for(verdict: Verdict) -> int:
    if verdict.certified:
        return EXIT_CERTIFIED
    if verdict is Verdict.BOUNDARY_CASE:
        return EXIT_BOUNDARY
    return EXIT_FAILS


def worst(codes) -> int:
    return max(codes, key=_SEVERITY.index, default=EXIT_CERTIFIED)


def default_precision() -> int:
    value = os.environ.get("POLYCERT_PRECISION")
    return int(value) if value else DEFAULT_PRECISION


# single-polynomial jobs (module-level so they can run in worker processes)


def check_job(source: str, text: str, condition: str) -> tuple:
    try:
        p = parse(text)
        if condition == "auto":
            condition = "odd" if p.deg % 2 else "even"
        if condition == "even":
            report = check_even(p)
        elif condition == "odd":
            if p.deg % 2 == 0:
                raise ValueError(f"condition 'odd' needs odd degree, got degree {p.deg}")
            report = check_odd(p)
        else:
            report = check_hutchinson(p)
    except InternalInconsistencyError as exc:
        return EXIT_INTERNAL, {"source": source, "error": str(exc)}
    except (ValueError, ParseError) as exc:
        return EXIT_INPUT_ERROR, {"source": source, "error": str(exc)}
    payload = {"source": source, **report.to_json(), "message": report.message}
    return exit_code_for(report.verdict), payload


def certify_job(source: str, text: str) -> tuple:
    try:
        p = parse(text)
        report = check_even(p)
    except InternalInconsistencyError as exc:
        return EXIT_INTERNAL, {"source": source, "error": str(exc)}
    except (ValueError, ParseError) as exc:
        return EXIT_INPUT_ERROR, {"source": source, "error": str(exc)}
    roots = count_real_roots(p)
    violation = report.verdict is Verdict.CERTIFIED_POSITIVE and roots.distinct != 0
    payload = {
        "source": source,
        **report.to_json(),
        "message": report.message,
        "threshold": report.threshold.describe() if report.threshold else None,
        "oracle": roots.to_json(),
        "soundness_violation": violation,
    }
    if violation:
        payload["error"] = "soundness violation: certified positive but the oracle found real roots"
        return EXIT_INTERNAL, payload
    return exit_code_for(report.verdict), payload


def roots_job(source: str, text: str) -> tuple:
    try:
        p = parse(text)
        rc = count_real_roots(p)
    except (ValueError, ParseError) as exc:
        return EXIT_INPUT_ERROR, {"source": source, "error": str(exc)}
    return EXIT_CERTIFIED, {"source": source, **rc.to_json()}


# input/output helpers


def load_inputs(args) -> list:
    if args.coeffs is not None:
        return [("inline", args.coeffs)]
    entries = []
    with open(args.file, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            stripped = line.strip()
            if stripped and not stripped.startswith("#"):
                entries.append((f"{args.file}:{lineno}", stripped))
    return entries


def run_jobs(fn, entries, jobs: int, *extra) -> list:
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, *zip(*entries), *[[e] * len(entries) for e in extra]))
    return [fn(source, text, *extra) for source, text in entries]


def _check_row(payload: dict) -> dict:
    comps = payload.get("comparisons", [])
    return {
        "source": payload["source"],
        "degree": payload.get("degree", ""),
        "condition": payload.get("condition", ""),
        "verdict": payload.get("verdict", ""),
        "ratios": ";".join(c["ratio"] for c in comps),
        "relations": ";".join(c["relation"] for c in comps),
        "minors": ";".join(payload.get("minors", [])),
        "error": payload.get("error", ""),
    }


def _certify_row(payload: dict) -> dict:
    row = _check_row(payload)
    oracle = payload.get("oracle") or {}
    thr = payload.get("threshold") or {}
    row.update(
        threshold=thr.get("exact") or thr.get("approximation", ""),
        distinct=oracle.get("distinct", ""),
        with_multiplicity=oracle.get("with_multiplicity", ""),
        soundness_violation=payload.get("soundness_violation", ""),
    )
    return row


def write_csv(rows: list, fields: list, out) -> None:
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row.get(k, "") for k in fields})


def write_json(payloads, out) -> None:
    json.dump(payloads, out, indent=2)
    out.write("\n")


def _human_report(payload: dict, out) -> None:
    out.write(f"[{payload['source']}]\n")
    if "verdict" not in payload:
        out.write(f"  error: {payload['error']}\n")
        return
    out.write(f"  degree {payload['degree']}, condition {payload['condition']}\n")
    for c in payload["comparisons"]:
        out.write(f"  k={c['k']}: ratio {c['ratio']} {c['relation']}\n")
    if payload["minors"]:
        out.write(f"  leading minors: {', '.join(payload['minors'])}\n")
    thr = payload.get("threshold")
    if thr:
        lo, hi = thr["generator_interval"]
        exact = thr["exact"] or f"4/c^2 with c = 2cos(pi/{thr['n'] + 2}) in [{lo}, {hi}]"
        out.write(f"  threshold (n={thr['n']}): {exact}; approximation {thr['approximation']}\n")
    oracle = payload.get("oracle")
    if oracle:
        out.write(f"  oracle: {oracle['distinct']} distinct real roots, {oracle['with_multiplicity']} with multiplicity\n")
    out.write(f"  verdict: {payload['verdict']} ({payload['message']})\n")
    if payload.get("error"):
        out.write(f"  error: {payload['error']}\n")


def emit(payloads: list, fmt: str, row_fn, fields, out, single: bool) -> None:
    if fmt == "json":
        write_json(payloads[0] if single else payloads, out)
    elif fmt == "csv":
        write_csv([row_fn(p) for p in payloads], fields, out)
    else:
        for p in payloads:
            _human_report(p, out)


# commands


def cmd_check(args, out) -> int:
    results = run_jobs(check_job, load_inputs(args), args.jobs, args.condition)
    emit([p for _, p in results], args.format, _check_row, CHECK_FIELDS, out, args.coeffs is not None)
    return worst(code for code, _ in results)


def cmd_certify(args, out) -> int:
    results = run_jobs(certify_job, load_inputs(args), args.jobs)
    emit([p for _, p in results], args.format, _certify_row, CERTIFY_FIELDS, out, args.coeffs is not None)
    return worst(code for code, _ in results)


def cmd_roots(args, out) -> int:
    results = run_jobs(roots_job, load_inputs(args), args.jobs)
    payloads = [p for _, p in results]
    if args.format == "json":
        write_json(payloads[0] if args.coeffs is not None else payloads, out)
    elif args.format == "csv":
        rows = [
            {
                "source": p["source"],
                "distinct": p.get("distinct", ""),
                "with_multiplicity": p.get("with_multiplicity", ""),
                "intervals": ";".join(f"{lo}:{hi}" for lo, hi in p.get("intervals", [])),
                "error": p.get("error", ""),
            }
            for p in payloads
        ]
        write_csv(rows, ["source", "distinct", "with_multiplicity", "intervals", "error"], out)
    else:
        for p in payloads:
            if "error" in p:
                out.write(f"[{p['source']}] error: {p['error']}\n")
            else:
                out.write(f"[{p['source']}] {p['distinct']} distinct, {p['with_multiplicity']} with multiplicity\n")
                for lo, hi in p["intervals"]:
                    out.write(f"  root in ({lo}, {hi}]\n")
    return worst(code for code, _ in results)


def extremal_payload(n: int, odd: bool, mode: str, precision: int) -> dict:
    ctor = theorem3_polynomial if odd else theorem2_polynomial
    exact = ctor(n, Mode.EXACT)
    rational = rational_instance(exact)
    if mode == "auto":
        mode = "exact" if rational is not None and rational == exact.polynomial() else "numeric"
    payload = {"n": n, "odd": odd, "mode": mode, "degree": exact.degree}
    if mode == "exact":
        if rational is not None and rational == exact.polynomial():
            payload["coefficients"] = serialize(rational)
        else:
            payload["coefficients_exact"] = exact_json(exact)
            if rational is not None:
                payload["rational_multiple"] = serialize(rational)
        payload["ratios_verified"] = verify_extremal_ratios(exact)
        payload["tolerance"] = "exact"
        target = rational
    else:
        numeric = ctor(n, Mode.NUMERIC, precision)
        payload["precision"] = precision
        payload["coefficients"] = numeric_text(numeric)
        payload["ratios_verified"] = verify_extremal_ratios(numeric)
        payload["tolerance"] = f"1e-{precision - 10}"
        target = None
    if target is None:
        target = rationalize(ctor(n, Mode.NUMERIC, max(precision, DEFAULT_PRECISION)))
        payload["oracle_input"] = "rationalized (denominator 10^50)"
    else:
        payload["oracle_input"] = "exact rational"
    payload["oracle"] = count_real_roots(target, isolate=False).to_json()
    return payload


def cmd_extremal(args, out) -> int:
    if args.n < 1:
        sys.stderr.write("error: --n must be >= 1\n")
        return EXIT_INPUT_ERROR
    precision = args.precision or default_precision()
    if args.mode == "numeric" and precision < 30:
        sys.stderr.write("error: --precision must be >= 30\n")
        return EXIT_INPUT_ERROR
    mode = args.mode
    if mode == "auto" and args.precision:
        mode = "numeric"
    payload = extremal_payload(args.n, args.odd, mode, precision)
    if args.format == "json":
        write_json(payload, out)
    else:
        out.write(f"{'odd' if args.odd else 'even'} extremal polynomial, n={args.n}, degree {payload['degree']}\n")
        if "coefficients" in payload:
            out.write(payload["coefficients"] + "\n")
        if "coefficients_exact" in payload:
            out.write(json.dumps(payload["coefficients_exact"]) + "\n")
        if "rational_multiple" in payload:
            out.write(f"positive multiple with rational coefficients: {payload['rational_multiple']}\n")
        status = "equal to the boundary" if payload["ratios_verified"] else "NOT equal to the boundary"
        out.write(f"ratios {status} (tolerance {payload['tolerance']})\n")
        o = payload["oracle"]
        out.write(
            f"oracle on {payload['oracle_input']}: {o['distinct']} distinct real roots, "
            f"{o['with_multiplicity']} with multiplicity\n"
        )
    return EXIT_CERTIFIED if payload["ratios_verified"] else EXIT_INTERNAL


def parse_epsilons(text: str) -> list:
    out = []
    for token in text.split(","):
        eps = parse_scalar(token)
        if not -1 < eps < 1:
            raise ValueError(f"epsilon {eps} outside (-1, 1)")
        out.append(eps)
    return out


def sweep_rows(n: int, epsilons: list) -> list:
    e = theorem2_polynomial(n)
    rows = []
    for eps in epsilons:
        p = perturb(e, eps)
        report = check_even(p)
        rc = count_real_roots(p, isolate=False)
        rows.append(
            {
                "n": n,
                "epsilon": str(eps),
                "verdict": report.verdict.value,
                "distinct": rc.distinct,
                "with_multiplicity": rc.with_multiplicity,
            }
        )
    return rows


def cmd_sweep(args, out) -> int:
    try:
        epsilons = parse_epsilons(args.epsilons)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR
    if args.n < 1:
        sys.stderr.write("error: --n must be >= 1\n")
        return EXIT_INPUT_ERROR
    rng = make_rng(args.seed)
    for _ in range(args.count):
        epsilons.append(Fraction(int(rng.integers(-499, 500)), 1000))
    rows = sweep_rows(args.n, epsilons)
    if args.format == "json":
        write_json(rows, out)
    elif args.format == "csv":
        write_csv(rows, SWEEP_FIELDS, out)
    else:
        for r in rows:
            out.write(
                f"n={r['n']} eps={r['epsilon']}: {r['verdict']}, "
                f"{r['distinct']} distinct real roots ({r['with_multiplicity']} with multiplicity)\n"
            )
    return EXIT_CERTIFIED


def cmd_selftest(args, out) -> int:
    failed = 0
    for name, ok in selftest.run(seed=args.seed, fault=args.inject_fault):
        out.write(f"{'PASS' if ok else 'FAIL'} {name}\n")
        failed += not ok
    out.write(f"{len(selftest.BATTERIES) - failed}/{len(selftest.BATTERIES)} batteries passed\n")
    return EXIT_INPUT_ERROR if failed else EXIT_CERTIFIED


def _add_inputs(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--coeffs", help='comma-separated coefficients, constant term first, e.g. "1, 1/2, 3"')
    src.add_argument("--file", type=Path, help="one coefficient list per line")
    p.add_argument("--format", choices=["json", "csv", "human"], default="json")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for batch files")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are input errors, not "condition fails"
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polycert", description="Positivity certificates for polynomials with positive coefficients.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="ratio condition check")
    _add_inputs(p)
    p.add_argument("--condition", choices=["auto", "even", "odd", "hutchinson"], default="auto")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("certify", help="even-degree certificate with minors and root oracle")
    _add_inputs(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("roots", help="exact real-root count and isolation")
    _add_inputs(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("extremal", help="boundary polynomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--odd", action="store_true", help="odd-degree (2n+1) construction")
    p.add_argument("--mode", choices=["auto", "exact", "numeric"], default="auto")
    p.add_argument("--precision", type=int, default=None, help="digits for numeric mode")
    p.add_argument("--format", choices=["json", "human"], default="human")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("sweep", help="perturb the even extremal polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--epsilons", default="1/2,1/10,1/100,0,-1/10")
    p.add_argument("--count", type=int, default=0, help="extra random epsilons in (-1/2, 1/2)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "csv", "human"], default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selftest", help="run the built-in invariant batteries")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", choices=selftest.FAULTS, default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[list] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR


def run(argv: list) -> tuple:
    """Run the CLI in-process and return ``(exit_code, stdout_text)``."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
