"""Command-line surface: parse code files, analyze codes, construct
fixtures, and run the verification suites.

Code file format (UTF-8, LF, ``#`` comments allowed anywhere)::

    q 13            # or: q 4 modulus 1 1 1   (lowest degree first)
    n 12
    k 6
    <k rows of n space-separated integers in [0, q)>

Exit codes: 0 success, 1 usage/parse/limit errors, 2 when any claim
verdict is violated (a correctness alarm, never silent).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .bounds import BoundReport, certify_optimal
from .code import CodeValidationError, LinearCode
from .constructions import (
    ConstructionSpec,
    build,
    field_for_order,
    reed_solomon_spec,
    tamo_barg_spec,
)
from .ghw import DEFAULT_LIMIT_N, LimitError, weight_hierarchy
from .suites import DEFAULT_COUNT, DEFAULT_SEED, SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CLAIM_VIOLATED = 2


class CodeFileError(ValueError):
    """Malformed code file; message carries a line number."""


# ---------------------------------------------------------------------------
# Code file format


def parse_code_file(text: str) -> LinearCode:
    entries: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        entries.append((lineno, line.split()))

    if len(entries) < 3:
        raise CodeFileError("file needs header lines 'q', 'n', 'k' and a generator")

    def header(pos: int, key: str) -> tuple[int, list[str]]:
        lineno, tokens = entries[pos]
        if tokens[0] != key:
            raise CodeFileError(f"line {lineno}: expected '{key} <int>', got "
                                f"{' '.join(tokens)!r}")
        return lineno, tokens

    lineno, tokens = header(0, "q")
    try:
        q = int(tokens[1])
    except (IndexError, ValueError):
        raise CodeFileError(f"line {lineno}: expected 'q <int>'") from None
    modulus = None
    if len(tokens) > 2:
        if tokens[2] != "modulus":
            raise CodeFileError(f"line {lineno}: expected 'modulus' after q, got "
                                f"{tokens[2]!r}")
        try:
            modulus = [int(t) for t in tokens[3:]]
        except ValueError:
            raise CodeFileError(f"line {lineno}: modulus coefficients must be "
                                "integers") from None
        if not modulus:
            raise CodeFileError(f"line {lineno}: empty modulus")

    def int_header(pos: int, key: str) -> int:
        lineno, tokens = header(pos, key)
        if len(tokens) != 2:
            raise CodeFileError(f"line {lineno}: expected '{key} <int>'")
        try:
            return int(tokens[1])
        except ValueError:
            raise CodeFileError(f"line {lineno}: expected '{key} <int>'") from None

    n = int_header(1, "n")
    k = int_header(2, "k")
    if n < 1 or k < 1:
        raise CodeFileError("n and k must be positive")

    try:
        field = field_for_order(q, modulus)
    except (ValueError, ZeroDivisionError) as exc:
        raise CodeFileError(f"invalid field: {exc}") from None

    body = entries[3:]
    if len(body) != k:
        raise CodeFileError(f"expected {k} generator rows, found {len(body)}")
    rows = []
    for lineno, tokens in body:
        if len(tokens) != n:
            raise CodeFileError(f"line {lineno}: expected {n} entries, found "
                                f"{len(tokens)}")
        row = []
        for col, tok in enumerate(tokens, start=1):
            try:
                value = int(tok)
            except ValueError:
                raise CodeFileError(f"line {lineno}, column {col}: not an "
                                    f"integer: {tok!r}") from None
            if not 0 <= value < q:
                raise CodeFileError(f"line {lineno}, column {col}: entry {value} "
                                    f"outside [0, {q})")
            row.append(value)
        rows.append(row)
    try:
        return LinearCode(field, rows)
    except CodeValidationError as exc:
        raise CodeFileError(str(exc)) from None


def serialize_code(code: LinearCode, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    field = code.field
    if field.m > 1:
        mod = " ".join(str(c) for c in field.modulus)
        lines.append(f"q {field.q} modulus {mod}")
    else:
        lines.append(f"q {field.q}")
    lines.append(f"n {code.n}")
    lines.append(f"k {code.k}")
    for row in code.generator.rows:
        lines.append(" ".join(str(e) for e in row))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Analysis report


def _claim_payloads(report: BoundReport) -> dict:
    bounds: dict[str, dict] = {}

    def entry(claim: str, **extra) -> None:
        v = report.verdict(claim)
        payload: dict = {"status": v.status}
        if v.witness_index is not None:
            payload["witness_index"] = v.witness_index
        payload.update(extra)
        bounds[claim] = payload

    entry("eq1", bound=report.singleton_like)
    entry("thm1", per_i=[{"i": row["i"], "d_i": row["d_i"], "bound": row["thm1"]}
                         for row in report.generalized_rows])
    entry("lem1", per_i=[{"i": row["i"], "d_i_dual": row["d_i_dual"],
                          "bound": row["lem1"]} for row in report.dual_rows])
    entry("lem2")
    entry("lem3")
    entry("lem4")
    entry("thm2", expected=list(report.dual_hierarchy)
          if report.verdict("thm2").status == "holds" else None)
    entry("thm3", expected=list(report.primal_hierarchy)
          if report.verdict("thm3").status == "holds" else None)
    entry("lem5", per_i=[{"i": row["i"], "d_i_dual": row["d_i_dual"],
                          "bound": row["lem5"]} for row in report.dual_rows]
          if report.is_optimal else None)
    entry("lem6")
    entry("thm4", per_i=[{"i": row["i"], "d_i": row["d_i"], "bound": row["thm4"]}
                         for row in report.generalized_rows]
          if report.is_optimal else None)
    entry("prop1", bound=report.prop1.value, lrc_bound=report.prop1.lrc_value,
          range_empty=report.prop1.range_empty)
    entry("prop2", bound=report.prop2.value, lrc_bound=report.prop2.lrc_value,
          range_empty=report.prop2.range_empty)
    entry("prop3_mu", mu=report.mu)
    entry("prop4_rho", rho=report.rho)
    return bounds


def analysis_report(code: LinearCode, *, promised_r: int | None = None,
                    with_witnesses: bool = False, limit_n: int = DEFAULT_LIMIT_N,
                    time_limit: float | None = None) -> dict:
    """The full JSON-ready report; every field except `timings` is a pure
    function of the code file."""
    t0 = time.perf_counter()
    report = certify_optimal(code, promised_r=promised_r, limit_n=limit_n,
                             time_limit=time_limit)
    field = code.field
    out: dict = {
        "params": {
            "q": field.q,
            "p": field.p,
            "m": field.m,
            "modulus": list(field.modulus) if field.modulus else None,
            "n": code.n,
            "k": code.k,
            "r": report.r,
            "promised_r": report.promised_r,
            "d": report.d,
        },
        "locality": {
            "r": report.locality_profile.r,
            "per_coordinate": list(report.locality_profile.per_coordinate),
            "covering_rows": [list(row) for row in
                              report.locality_profile.covering_rows],
        },
        "primal_hierarchy": list(report.primal_hierarchy),
        "primal_gaps": list(report.primal_gaps),
        "dual_hierarchy": list(report.dual_hierarchy),
        "dual_gaps": list(report.dual_gaps),
        "bounds": _claim_payloads(report),
        "is_optimal": report.is_optimal,
    }
    if with_witnesses:
        hier = weight_hierarchy(code, with_witnesses=True, limit_n=limit_n,
                                time_limit=time_limit)
        out["witnesses"] = {
            str(i): {
                "support": [j + 1 for j in w.support],  # 1-based coordinates
                "dimension": w.dimension,
                "basis": [list(vec) for vec in w.basis],
            }
            for i, w in sorted(hier.witnesses.items())
        }
    out["timings"] = {"analyze_ms": round((time.perf_counter() - t0) * 1000, 3)}
    return out


def render_text(report: dict) -> str:
    p = report["params"]
    lines = [
        f"[n={p['n']}, k={p['k']}] code over GF({p['q']}), d = {p['d']}",
        f"locality r = {report['locality']['r']}"
        + (f" (claims evaluated at promised r = {p['r']})" if p["promised_r"] else ""),
        f"primal hierarchy: {report['primal_hierarchy']}  gaps: {report['primal_gaps']}",
        f"dual hierarchy:   {report['dual_hierarchy']}  gaps: {report['dual_gaps']}",
        f"optimal (distance meets the Singleton-like bound): {report['is_optimal']}",
        "claims:",
    ]
    for claim, payload in report["bounds"].items():
        detail = ""
        if payload.get("witness_index") is not None:
            detail = f" (index {payload['witness_index']})"
        lines.append(f"  {claim:10s} {payload['status']}{detail}")
    lines.append(f"analyze time: {report['timings']['analyze_ms']} ms")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Commands


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        code = parse_code_file(text)
        report = analysis_report(code, promised_r=args.promised_r,
                                 with_witnesses=args.witnesses,
                                 limit_n=args.limit_n,
                                 time_limit=args.time_limit)
    except (CodeFileError, CodeValidationError, LimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))
    violated = [claim for claim, payload in report["bounds"].items()
                if payload["status"] == "violated"]
    if violated:
        print(f"VIOLATED CLAIMS: {', '.join(violated)}", file=sys.stderr)
        return EXIT_CLAIM_VIOLATED
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        if args.kind == "tamo-barg":
            if args.r is None:
                raise ValueError("tamo-barg needs --r")
            spec = tamo_barg_spec(args.q, args.n, args.k, args.r)
        elif args.kind == "reed-solomon":
            spec = reed_solomon_spec(args.q, args.n, args.k)
        else:
            spec = ConstructionSpec(kind="random", q=args.q, n=args.n, k=args.k,
                                    seed=args.seed)
        code = build(spec)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    comments = [f"kind={spec.kind} q={spec.q} n={spec.n} k={spec.k}"
                + (f" r={spec.r}" if spec.r is not None else "")
                + (f" seed={spec.seed}" if spec.seed is not None else "")]
    if spec.evaluation_points is not None:
        comments.append("evaluation points (element indices): "
                        + " ".join(str(x) for x in spec.evaluation_points))
    text = serialize_code(code, comments)
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote [{code.n},{code.k}] code over GF({code.field.q}) to {args.output}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        results = run_suite(args.suite, seed=args.seed, count=args.count)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    all_ok = True
    for res in results:
        print(res.summary())
        all_ok = all_ok and res.ok
    total_checks = sum(r.checks for r in results)
    total_codes = sum(r.codes for r in results)
    print(f"total: {total_codes} codes, {total_checks} checks, "
          f"{'all suites pass' if all_ok else 'FAILURES PRESENT'}")
    return EXIT_OK if all_ok else EXIT_CLAIM_VIOLATED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghwkit",
        description="Weight hierarchies, gap numbers, locality and bounds "
                    "for linear codes over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze a code file")
    p_an.add_argument("file")
    p_an.add_argument("--json", action="store_true", help="emit a JSON report")
    p_an.add_argument("--witnesses", action="store_true",
                      help="include witness subcodes for each hierarchy value")
    p_an.add_argument("--limit-n", type=int, default=DEFAULT_LIMIT_N,
                      dest="limit_n", help="hierarchy enumeration limit on n")
    p_an.add_argument("--limit-oracle", type=int, default=10**6,
                      dest="limit_oracle",
                      help="q^k limit for oracle-based checks (reserved)")
    p_an.add_argument("--promised-r", type=int, default=None, dest="promised_r",
                      help="evaluate claims at this locality parameter instead "
                           "of the computed one (must be an upper bound)")
    p_an.add_argument("--time-limit", type=float, default=None, dest="time_limit",
                      help="wall-time guard in seconds for the hierarchy sweeps")
    p_an.set_defaults(func=cmd_analyze)

    p_co = sub.add_parser("construct", help="construct a fixture code file")
    p_co.add_argument("kind", choices=("tamo-barg", "reed-solomon", "random"))
    p_co.add_argument("--q", type=int, required=True)
    p_co.add_argument("--n", type=int, required=True)
    p_co.add_argument("--k", type=int, required=True)
    p_co.add_argument("--r", type=int, default=None)
    p_co.add_argument("--seed", type=int, default=0)
    p_co.add_argument("-o", "--output", required=True)
    p_co.set_defaults(func=cmd_construct)

    p_ve = sub.add_parser("verify", help="run verification suites")
    p_ve.add_argument("suite", nargs="?", default="all",
                      choices=(*SUITES.keys(), "all"))
    p_ve.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_ve.add_argument("--count", type=int, default=DEFAULT_COUNT)
    p_ve.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
