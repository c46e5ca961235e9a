"""Batch front end: factor structure, criterion checks, sieve parameter
search, reference-table reproduction, brute-force oracle runs, and range
scans, with machine-readable output.

Exit codes: 0 success / criterion holds; 1 criterion fails; 2 invalid input;
3 incomplete factorization; 4 unknown verdict; 5 internal cross-check failure.

All stdout output is deterministic for fixed inputs, hints and budgets;
timings go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import ffield as ff
from . import tables
from .intarith import (
    DEFAULT_RHO_BUDGET,
    FactorHintCache,
    IncompleteFactorization,
    default_hints,
    factorize_q_pow_n_minus_1,
    is_prime_power,
)
from .oracle import CharacterTable, count_direct, count_prenorm, count_via_characters
from .polyfactor import factor_xn_minus_1
from .sieve import (
    CSV_HEADER,
    SieveParams,
    basic_check,
    exceptions,
    parse_g_spec,
    scan,
    search_params,
    sieve_check,
)

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_INVALID = 2
EXIT_INCOMPLETE = 3
EXIT_UNKNOWN = 4
EXIT_CROSSCHECK = 5

# budgets are given in "milliseconds" but converted at a fixed rate so that
# results are deterministic rather than wall-clock dependent
RHO_ITERS_PER_MS = 400

BRUTE_SIZE_CAP = 10 ** 6
CROSSCHECK_SIZE_CAP = 5000


@dataclass
class RunConfig:
    hints: FactorHintCache
    budget: int
    fmt: str
    output: Path | None
    jobs: int
    allow_small_n: bool


# ---------------------------------------------------------------------------
# small shared helpers
# ---------------------------------------------------------------------------


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output is not None:
        cfg.output.write_text(text + ("\n" if not text.endswith("\n") else ""),
                              encoding="utf-8")
    else:
        print(text)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _report_text(cfg: RunConfig, report) -> str:
    if cfg.fmt == "json":
        return json.dumps(report.to_json(), indent=2)
    if cfg.fmt == "csv":
        return _csv_text(CSV_HEADER, [report.csv_row()])
    lines = [
        f"q={report.q} n={report.n} m={report.m} method={report.method}",
        f"e'={report.e_prime} e={report.e} g={report.g_str()}",
        f"dropped: u={report.u} primes of Q, r={report.r} primes of q^n-1, "
        f"s={report.s} factors of x^n-1",
        f"S = {report.S} ({report.S_float!r})",
        f"M = {'-' if report.M is None else repr(report.M_float)}",
        f"lhs_log2 = {report.lhs_log2!r}  rhs_log2 = {report.rhs_log2!r}",
        f"verdict: {report.verdict}"
        + ("" if report.complete else "  (factorization incomplete)"),
    ]
    return "\n".join(lines)


def _verdict_exit(report) -> int:
    return {"holds": EXIT_HOLDS, "fails": EXIT_FAILS,
            "unknown": EXIT_UNKNOWN}[report.verdict]


def _gate_small_n(cfg: RunConfig, n: int) -> None:
    if n >= 5:
        return
    if not cfg.allow_small_n:
        raise ValueError(
            f"n = {n} is below the n >= 5 hypothesis of the criteria; "
            "pass --allow-small-n to evaluate anyway")
    print(f"warning: n = {n} is below the n >= 5 hypothesis; the verdict "
          "is about the inequality only", file=sys.stderr)


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok]
    except ValueError as exc:
        raise ValueError(f"bad integer list {text!r}") from exc


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
    else:
        lo_s = hi_s = text
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError as exc:
        raise ValueError(f"bad range {text!r}") from exc
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


# ---------------------------------------------------------------------------
# factor
# ---------------------------------------------------------------------------


def cmd_factor(cfg: RunConfig, args) -> int:
    if is_prime_power(args.q) is None:
        raise ValueError(f"{args.q} is not a prime power")
    qn1 = factorize_q_pow_n_minus_1(args.q, args.n, hints=cfg.hints,
                                    budget=cfg.budget)
    xnf = factor_xn_minus_1(args.q, args.n)
    if cfg.fmt == "json":
        payload = {
            "q_pow_n_minus_1": {
                "value": qn1.value,
                "factors": [[p, a] for p, a in qn1.factors],
                "cofactor": qn1.cofactor,
                "complete": qn1.complete,
            },
            "x_pow_n_minus_1": xnf.to_json(),
        }
        _emit(cfg, json.dumps(payload, indent=2))
    elif cfg.fmt == "csv":
        rows = [["q_pow_n_minus_1", p, a] for p, a in qn1.factors]
        if not qn1.complete:
            rows.append(["cofactor", qn1.cofactor, 1])
        rows.extend(["x_pow_n_minus_1", d, c] for d, c in xnf.distinct_factors)
        _emit(cfg, _csv_text(["component", "item", "count"], rows))
    else:
        lines = [f"{args.q}^{args.n} - 1 = {qn1}"]
        if not qn1.complete:
            lines.append(f"  (incomplete: composite cofactor {qn1.cofactor})")
        parts = ", ".join(f"{c} of degree {d}" for d, c in xnf.distinct_factors)
        lines.append(
            f"x^{args.n} - 1 over GF({args.q}): distinct irreducible factors "
            f"{parts}, each with multiplicity {xnf.multiplicity}")
        _emit(cfg, "\n".join(lines))
    return EXIT_HOLDS if qn1.complete else EXIT_INCOMPLETE


# ---------------------------------------------------------------------------
# check / sieve
# ---------------------------------------------------------------------------


def cmd_check(cfg: RunConfig, args) -> int:
    _gate_small_n(cfg, args.n)
    report = basic_check(args.q, args.n, args.m, hints=cfg.hints,
                         budget=cfg.budget)
    _emit(cfg, _report_text(cfg, report))
    return _verdict_exit(report)


def cmd_sieve(cfg: RunConfig, args) -> int:
    _gate_small_n(cfg, args.n)
    if args.eprime is None and args.e is None and args.g is None:
        report = search_params(args.q, args.n, args.m, hints=cfg.hints,
                               budget=cfg.budget)
        if report is None:
            print("no holding parameters found; reporting the basic check",
                  file=sys.stderr)
            report = basic_check(args.q, args.n, args.m, hints=cfg.hints,
                                 budget=cfg.budget)
    else:
        e_prime = None if (args.eprime is None or args.eprime.upper() == "Q") \
            else int(args.eprime)
        e = None if (args.e is None or args.e.lower() == "full") else int(args.e)
        g = parse_g_spec(args.q, args.n, args.g) if args.g is not None else None
        params = SieveParams(e_prime=e_prime, e=e, g_parts=g)
        report = sieve_check(args.q, args.n, args.m, params, hints=cfg.hints,
                             budget=cfg.budget)
    _emit(cfg, _report_text(cfg, report))
    return _verdict_exit(report)


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def cmd_tables(cfg: RunConfig, args) -> int:
    rows: list[dict] = []
    if args.which in (3, 6):
        source = tables.TABLE3 if args.which == 3 else tables.TABLE6
        for row in source:
            res = tables.check_param_row(row, hints=cfg.hints, budget=cfg.budget)
            rep = res["report"]
            rows.append({
                "q": row.q, "n": row.n, "e_prime": row.e_prime, "e": row.e,
                "g": row.g, "S_stated": row.S, "M_stated": row.M,
                "S_computed": rep.S_float,
                "M_computed": rep.M_float,
                "verdict": rep.verdict,
                "status": res["status"],
            })
    elif args.which == 2:
        for row in tables.TABLE2 + (tables.TEXT_WINDOW,):
            res = tables.check_table2_row(row)
            w = res["computed"]
            rows.append({
                "a": res["a"], "b": res["b"],
                "S_min": w["S_min"], "M_max": w["M_max"],
                "rhs_max": w["rhs_max"], "status": res["status"],
            })
    elif args.which == 1:
        for row in tables.TABLE1:
            rows.append(tables.check_table1_row(row))
    else:
        raise ValueError(f"no reference table {args.which} (choose 1, 2, 3 or 6)")

    if cfg.fmt == "json":
        _emit(cfg, json.dumps(rows, indent=2))
    elif cfg.fmt == "csv":
        header = list(rows[0].keys())
        _emit(cfg, _csv_text(header, [[r[h] for h in header] for r in rows]))
    else:
        _emit(cfg, "\n".join(
            " ".join(f"{k}={v}" for k, v in r.items()) for r in rows))
    bad = [r for r in rows if r["status"] not in ("match", "unknown")]
    return EXIT_HOLDS if not bad else EXIT_FAILS


# ---------------------------------------------------------------------------
# brute (oracle counts)
# ---------------------------------------------------------------------------


def _parse_f_spec(ctx: ff.FieldContext, spec: str) -> ff.RationalFunction:
    num, den = _split_top_level_slash(spec)
    f1 = _parse_poly_expr(ctx, num)
    f2 = _parse_poly_expr(ctx, den) if den is not None else [1]
    return ff.make_rational(ctx, f1, f2)


def _split_top_level_slash(spec: str) -> tuple[str, str | None]:
    depth = 0
    pos = None
    for i, ch in enumerate(spec):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {spec!r}")
        elif ch == "/" and depth == 0:
            if pos is not None:
                raise ValueError(f"more than one top-level '/' in {spec!r}")
            pos = i
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {spec!r}")
    if pos is None:
        return spec, None
    return spec[:pos], spec[pos + 1:]


_F_TOKEN_CHARS = set("0123456789tx+-*^() ")


def _tokenize_f(spec: str) -> list[str]:
    bad = set(spec) - _F_TOKEN_CHARS
    if bad:
        raise ValueError(f"unexpected characters {sorted(bad)} in {spec!r}")
    tokens: list[str] = []
    i = 0
    while i < len(spec):
        ch = spec[i]
        if ch == " ":
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(spec) and spec[j].isdigit():
                j += 1
            tokens.append(spec[i:j])
            i = j
        else:
            tokens.append(ch)
            i += 1
    return tokens


def _parse_poly_expr(ctx: ff.FieldContext, spec: str) -> list[int]:
    """Parse a polynomial in x over F_{q^n}; `t` names the field generator.

    Grammar: expr := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
    factor := atom ['^' int]; atom := int | 't' | 'x' | '(' expr ')'.
    """
    ops = ctx.field_ops()
    tokens = _tokenize_f(spec)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of {spec!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r}, got {tok!r} in {spec!r}")
        pos += 1
        return tok

    from .polyfactor import poly_add, poly_mul, poly_sub, poly_trim

    def parse_expr():
        if peek() == "-":
            take()
            node = [ctx.neg(c) for c in parse_term()]
        else:
            node = parse_term()
        while peek() in ("+", "-"):
            op = take()
            rhs = parse_term()
            node = poly_add(ops, node, rhs) if op == "+" else poly_sub(ops, node, rhs)
        return node

    def parse_term():
        node = parse_factor()
        while peek() == "*":
            take()
            node = poly_mul(ops, node, parse_factor())
        return node

    def parse_factor():
        node = parse_atom()
        if peek() == "^":
            take()
            exp_tok = take()
            if not exp_tok.isdigit():
                raise ValueError(f"exponent must be a literal integer in {spec!r}")
            exp = int(exp_tok)
            out = [1]
            for _ in range(exp):
                out = poly_mul(ops, out, node)
            node = out
        return node

    def parse_atom():
        tok = take()
        if tok.isdigit():
            p = ctx.p
            unit = int(tok) % p
            return poly_trim([unit])
        if tok == "t":
            return [ctx.generator]
        if tok == "x":
            return [0, 1]
        if tok == "(":
            node = parse_expr()
            take(")")
            return node
        raise ValueError(f"unexpected token {tok!r} in {spec!r}")

    result = parse_expr()
    if pos != len(tokens):
        raise ValueError(f"trailing tokens {tokens[pos:]} in {spec!r}")
    return poly_trim(result)


def _subfield_code(ctx: ff.FieldContext, index: int) -> int:
    """Map a CLI integer to a subfield element: the index into the sorted
    subfield enumeration (for prime q this is the element itself)."""
    if not 0 <= index < ctx.q:
        raise ValueError(f"subfield index {index} out of range [0, {ctx.q})")
    return int(ctx.subfield_codes[index])


def cmd_brute(cfg: RunConfig, args) -> int:
    pk = is_prime_power(args.q)
    if pk is None:
        raise ValueError(f"{args.q} is not a prime power")
    p, k = pk
    if args.q ** args.n > BRUTE_SIZE_CAP:
        raise ValueError(
            f"q^n = {args.q ** args.n} exceeds the enumeration cap {BRUTE_SIZE_CAP}")
    ctx = ff.build_context(p, k, args.n, hints=cfg.hints)
    f = _parse_f_spec(ctx, args.f)

    do_cross = args.cross_check
    if do_cross and ctx.size > CROSSCHECK_SIZE_CAP:
        print(f"cross-check skipped: q^n = {ctx.size} exceeds "
              f"{CROSSCHECK_SIZE_CAP}", file=sys.stderr)
        do_cross = False
    table = CharacterTable(ctx) if do_cross else None
    xn1 = ctx.xn1_poly()
    mismatches = 0

    def crossed(a_code: int, b_code: int, count: int) -> float | None:
        nonlocal mismatches
        if table is None:
            return None
        approx = count_via_characters(table, f, a_code, b_code,
                                      ctx.qn1, ctx.qn1, xn1, xn1)
        if abs(approx - count) >= 1e-3 or round(approx) != count:
            mismatches += 1
        return approx

    rows = []
    if args.all_ab:
        for ai in range(ctx.q):
            a_code = _subfield_code(ctx, ai)
            for bi in range(1, ctx.q):
                b_code = _subfield_code(ctx, bi)
                if not ff.is_primitive_subfield(ctx, b_code):
                    continue
                cnt = count_direct(ctx, f, a_code, b_code)
                approx = crossed(a_code, b_code, cnt)
                rows.append({"a": ai, "b": bi, "count": cnt,
                             **({"char_sum": approx} if approx is not None else {})})
    elif args.prenorm_all:
        for ai in range(ctx.q):
            a_code = _subfield_code(ctx, ai)
            rows.append({"a": ai, "count": count_prenorm(ctx, f, a_code)})
    elif args.a is not None and args.b is not None:
        a_code = _subfield_code(ctx, args.a)
        b_code = _subfield_code(ctx, args.b)
        if not ff.is_primitive_subfield(ctx, b_code):
            raise ValueError(f"b index {args.b} is not primitive in F_q*")
        cnt = count_direct(ctx, f, a_code, b_code)
        approx = crossed(a_code, b_code, cnt)
        rows.append({"a": args.a, "b": args.b, "count": cnt,
                     **({"char_sum": approx} if approx is not None else {})})
    elif args.a is not None:
        a_code = _subfield_code(ctx, args.a)
        rows.append({"a": args.a, "count": count_prenorm(ctx, f, a_code)})
    else:
        raise ValueError(
            "choose a mode: --all-ab, --prenorm-all, or give -a (and -b)")

    payload = {"q": args.q, "n": args.n, "f": args.f,
               "m": f.m1 + f.m2, "counts": rows}
    if cfg.fmt == "json":
        _emit(cfg, json.dumps(payload, indent=2))
    elif cfg.fmt == "csv":
        header = sorted({k for r in rows for k in r})
        _emit(cfg, _csv_text(header, [[r.get(h, "") for h in header] for r in rows]))
    else:
        lines = [f"q={args.q} n={args.n} f={args.f} m={f.m1 + f.m2}"]
        lines.extend(" ".join(f"{k}={v}" for k, v in r.items()) for r in rows)
        _emit(cfg, "\n".join(lines))
    if mismatches:
        print(f"cross-check FAILED on {mismatches} entries", file=sys.stderr)
        return EXIT_CROSSCHECK
    return EXIT_HOLDS


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------


def _scan_one(job) -> "object":
    q, n, m, budget, use_stored, hint_entries = job
    hints = FactorHintCache(hint_entries)
    lookup = tables.params_lookup() if use_stored else None
    reports = scan([q], n, n, m, hints=hints, budget=budget,
                   params_lookup=lookup)
    return reports[0]


def cmd_scan(cfg: RunConfig, args) -> int:
    q_list = _parse_int_list(args.q)
    if not q_list:
        raise ValueError("empty q list")
    for q in q_list:
        if is_prime_power(q) is None:
            raise ValueError(f"{q} is not a prime power")
    n_lo, n_hi = _parse_range(args.n)
    _gate_small_n(cfg, n_lo)

    t0 = time.time()
    if cfg.jobs > 1:
        jobs = [(q, n, args.m, cfg.budget, args.use_paper_params, cfg.hints.entries)
                for q in sorted(set(q_list)) for n in range(n_lo, n_hi + 1)]
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = list(pool.map(_scan_one, jobs))
        reports.sort(key=lambda rep: (rep.q, rep.n))
    else:
        lookup = tables.params_lookup() if args.use_paper_params else None
        reports = scan(q_list, n_lo, n_hi, args.m, hints=cfg.hints,
                       budget=cfg.budget, params_lookup=lookup)
    print(f"scanned {len(reports)} pairs in {time.time() - t0:.1f}s",
          file=sys.stderr)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    exc = exceptions(reports)
    (out_dir / "exceptions.json").write_text(
        json.dumps([[q, n] for q, n in exc], indent=2) + "\n", encoding="utf-8")
    with open(out_dir / "verdicts.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(rep.csv_row() for rep in reports)

    counts = {"holds": 0, "fails": 0, "unknown": 0}
    for rep in reports:
        counts[rep.verdict] += 1
    lines = [
        f"pairs={len(reports)} holds={counts['holds']} fails={counts['fails']} "
        f"unknown={counts['unknown']}",
        "exceptions: " + (", ".join(f"({q},{n})" for q, n in exc) or "none"),
        f"wrote {out_dir / 'verdicts.csv'} and {out_dir / 'exceptions.json'}",
    ]
    print("\n".join(lines))
    return EXIT_HOLDS


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pnsieve",
        description="Criterion checks, sieve search and exact oracles for "
                    "primitive normal pairs with prescribed prenorm.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--hints", type=Path, default=None,
                        help="extra factor-hint file (merged with the bundled one)")
    common.add_argument("--budget-ms", type=int, default=DEFAULT_RHO_BUDGET // RHO_ITERS_PER_MS,
                        help="factorization budget per composite; converted to "
                             "iterations at a fixed rate for determinism")
    common.add_argument("--format", choices=("json", "csv", "table"),
                        default="table", dest="fmt")
    common.add_argument("--output", type=Path, default=None,
                        help="write stdout payload to this file instead")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--allow-small-n", action="store_true",
                        help="evaluate the criteria below the n >= 5 hypothesis")

    sub = parser.add_subparsers(dest="command", required=True)

    p_factor = sub.add_parser("factor", parents=[common],
                              help="factor q^n - 1 and x^n - 1")
    p_factor.add_argument("q", type=int)
    p_factor.add_argument("n", type=int)
    p_factor.set_defaults(func=cmd_factor)

    p_check = sub.add_parser("check", parents=[common],
                             help="direct criterion check")
    p_check.add_argument("q", type=int)
    p_check.add_argument("n", type=int)
    p_check.add_argument("m", type=int)
    p_check.set_defaults(func=cmd_check)

    p_sieve = sub.add_parser("sieve", parents=[common],
                             help="sieve criterion with given or searched parameters")
    p_sieve.add_argument("q", type=int)
    p_sieve.add_argument("n", type=int)
    p_sieve.add_argument("m", type=int)
    p_sieve.add_argument("--eprime", default=None,
                         help="divisor of Q, or the token Q")
    p_sieve.add_argument("--e", default=None,
                         help="divisor of q^n - 1, or the token full")
    p_sieve.add_argument("--g", default=None,
                         help="divisor of x^n - 1: full, 1, x^a-1, x^a+c, "
                              "(x^a-1)/(x^b-1), x+c, or a degree signature like 1^6,2^9")
    p_sieve.set_defaults(func=cmd_sieve)

    p_tables = sub.add_parser("tables", parents=[common],
                              help="recompute a bundled reference table")
    p_tables.add_argument("which", type=int, choices=(1, 2, 3, 6))
    p_tables.set_defaults(func=cmd_tables)

    p_brute = sub.add_parser("brute", parents=[common],
                             help="exact enumeration counts on a small field")
    p_brute.add_argument("q", type=int)
    p_brute.add_argument("n", type=int)
    p_brute.add_argument("f", help="rational function spec, e.g. \"x+1\" or "
                                   "\"(x^2+t)/(x+2)\"")
    p_brute.add_argument("-a", type=int, default=None,
                         help="prenorm target (subfield index)")
    p_brute.add_argument("-b", type=int, default=None,
                         help="norm target (subfield index, must be primitive)")
    p_brute.add_argument("--all-ab", action="store_true",
                         help="table of counts over all (a, b), b primitive")
    p_brute.add_argument("--prenorm-all", action="store_true",
                         help="prenorm counts for every a")
    p_brute.add_argument("--cross-check", action="store_true",
                         help="verify counts against the character-sum formula "
                              f"(fields up to {CROSSCHECK_SIZE_CAP})")
    p_brute.set_defaults(func=cmd_brute)

    p_scan = sub.add_parser("scan", parents=[common],
                            help="decide every pair over a (q, n) grid")
    p_scan.add_argument("--q", required=True, help="comma-separated prime powers")
    p_scan.add_argument("--n", required=True, help="range lo..hi (or a single n)")
    p_scan.add_argument("--m", type=int, required=True)
    p_scan.add_argument("--use-paper-params", action="store_true",
                        help="seed the search with the bundled reference parameters")
    p_scan.add_argument("--out", default=".",
                        help="directory for verdicts.csv and exceptions.json")
    p_scan.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        hints = default_hints()
        if args.hints is not None:
            extra = FactorHintCache.from_path(args.hints)
            merged = dict(hints.entries)
            merged.update(extra.entries)
            hints = FactorHintCache(merged)
        if args.budget_ms <= 0:
            raise ValueError("--budget-ms must be positive")
        if args.jobs < 1:
            raise ValueError("--jobs must be at least 1")
        cfg = RunConfig(hints=hints, budget=args.budget_ms * RHO_ITERS_PER_MS,
                        fmt=args.fmt, output=args.output, jobs=args.jobs,
                        allow_small_n=args.allow_small_n)
        t0 = time.time()
        code = args.func(cfg, args)
        print(f"[{args.command}] {time.time() - t0:.2f}s", file=sys.stderr)
        return code
    except IncompleteFactorization as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
