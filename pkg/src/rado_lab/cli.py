"""Command-line interface.

Exit codes: 0 success or verified, 1 mathematical disagreement or failed
verification, 2 usage or input-format error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .checker import find_mono_solution
from .coloring import (
    Coloring,
    coefficient_one_coloring,
    lemma1_coloring,
    linear_infinite_coloring,
    parity_coloring,
    parse_coloring,
)
from .continuous import DEFAULT_K_MAX, verify_discrete_blocks, verify_interval_chain, verify_lemma4_chain
from .formula import lemma1_lower_bound, rado_value
from .proofs import MalformedChainError, fixture_corpus, get_fixture, parse_chain, verify_chain
from .search import SearchBudget, brute_scan, formula_or_none
from .values import DomainError, EquationParams, Finite, Infinite, RadoValue, UnknownAbove

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
BUDGET_ENV = "RADO_LAB_BUDGET_SECONDS"

log = logging.getLogger("rado_lab")


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """'2..6' -> [2, 3, 4, 5, 6]; a single integer is a one-element range."""
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range like 2..6, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an exact rational like 7/2, got {text!r}")


def _budget(args: argparse.Namespace) -> SearchBudget:
    seconds = args.max_seconds if args.max_seconds is not None else math.inf
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            seconds = min(seconds, float(env))
        except ValueError:
            raise UsageError(f"{BUDGET_ENV} must be a number of seconds, got {env!r}")
    try:
        return SearchBudget(args.max_n, args.max_nodes, seconds, args.threads)
    except DomainError as exc:
        raise UsageError(str(exc))


def _result(value: RadoValue | None) -> Any:
    return None if value is None else value.as_dict()


def _emit(args: argparse.Namespace, text: str, payload: dict) -> None:
    if args.format == "json":
        body = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        body = text if text.endswith("\n") else text + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(body)
    else:
        sys.stdout.write(body)


def _payload(command: str, params: dict, result: Any, diagnostics: Any = None, **extra: Any) -> dict:
    doc = {"command": command, "params": params, "result": result, "diagnostics": diagnostics or {}}
    doc.update(extra)
    return doc


def cmd_formula(args: argparse.Namespace) -> int:
    m, c, a = args.m, args.c, args.a
    params = {"m": m, "c": c, "a": a}
    try:
        value = rado_value(m, c, a)
    except DomainError as exc:
        if m >= 2 and c >= 1 and a >= 1:
            bound = lemma1_lower_bound(m, c, a)
            _emit(args, f">= {bound} (lower bound only)", _payload(
                "formula", params, {"kind": "lower_bound", "value": bound}, {"note": str(exc)}))
            return EXIT_OK
        raise UsageError(str(exc))
    _emit(args, str(value), _payload("formula", params, _result(value)))
    return EXIT_OK


def _default_cert_path(params: EquationParams) -> str:
    return f"certificate_m{params.m}_c{params.c}_a{params.a}.json"


def cmd_brute(args: argparse.Namespace) -> int:
    try:
        params = EquationParams(args.m, args.c, args.a)
    except DomainError as exc:
        raise UsageError(str(exc))
    budget = _budget(args)
    report = brute_scan(params, budget)
    formula = formula_or_none(params)
    lines = [str(report.value)]
    cert_path = None
    if isinstance(report.value, Finite) and report.certificate is not None:
        cert_path = args.certificate or _default_cert_path(params)
        Path(cert_path).write_text(json.dumps(report.certificate.to_dict(), indent=1) + "\n")
        lines.append(f"certificate: {cert_path} (valid coloring of [1, {report.certificate.n}])")
    if isinstance(report.value, UnknownAbove) and isinstance(formula, Infinite):
        lines.append(f"formula: {formula}")
    if report.exhausted and report.exhausted != "max_n":
        lines.append(f"budget exhausted ({report.exhausted})")
    log.info("%s: %d nodes in %.3f s", params, report.nodes, report.seconds)
    payload = _payload(
        "brute",
        params.as_dict(),
        _result(report.value),
        {"formula": _result(formula), "exhausted": report.exhausted or None},
        budget_used={"nodes": report.nodes, "max_n": budget.max_n},
    )
    if cert_path is not None:
        payload["certificate"] = {"path": cert_path, "coloring": report.certificate.to_dict()}
    _emit(args, "\n".join(lines), payload)
    return EXIT_BUDGET if isinstance(report.value, UnknownAbove) else EXIT_OK


def agreement(formula: RadoValue | None, brute: RadoValue) -> bool | None:
    """True/False when the brute-force value settles the comparison, else None."""
    if formula is None:
        return None
    if isinstance(formula, Finite):
        if isinstance(brute, Finite):
            return brute.value == formula.value
        if isinstance(brute, UnknownAbove):
            # a valid coloring of [1, formula] refutes the formula
            return False if brute.bound >= formula.value else None
        return False
    if isinstance(brute, Finite):
        return False
    return True


def cmd_table(args: argparse.Namespace) -> int:
    budget = _budget(args)
    rows = []
    for m in args.m:
        for c in args.c:
            try:
                params = EquationParams(m, c, args.a)
            except DomainError as exc:
                raise UsageError(str(exc))
            formula = formula_or_none(params)
            report = brute_scan(params, budget)
            agree = agreement(formula, report.value)
            row = {
                "m": m,
                "c": c,
                "a": args.a,
                "formula": "" if formula is None else str(formula),
                "brute": str(report.value),
                "agree": "" if agree is None else str(agree).lower(),
                "nodes": report.nodes,
            }
            if not args.no_timing:
                row["seconds"] = f"{report.seconds:.3f}"
            rows.append(row)
            log.info("row %s", row)
    fields = list(rows[0]) if rows else []
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        widths = {f: max(len(f), *(len(str(r[f])) for r in rows)) for f in fields}
        lines = ["  ".join(f.rjust(widths[f]) for f in fields)]
        lines += ["  ".join(str(r[f]).rjust(widths[f]) for f in fields) for r in rows]
        text = "\n".join(lines)
    payload = _payload(
        "table",
        {"m": [args.m[0], args.m[-1]], "c": [args.c[0], args.c[-1]], "a": args.a},
        rows,
        budget_used={"nodes": sum(r["nodes"] for r in rows), "max_n": budget.max_n},
    )
    if args.format == "csv":
        args.format = "text"
    _emit(args, text, payload)
    return EXIT_FAIL if any(r["agree"] == "false" for r in rows) else EXIT_OK


def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if path.exists():
        return path.read_text()
    return source


def cmd_check_coloring(args: argparse.Namespace) -> int:
    try:
        coloring = parse_coloring(_read_source(args.source))
        params = EquationParams(args.m, args.c, args.a)
    except DomainError as exc:
        raise UsageError(str(exc))
    witness = find_mono_solution(coloring, params)
    result = {"solution_free": witness is None, "witness": None if witness is None else witness.to_dict()}
    text = f"no monochromatic solution on [1, {coloring.n}]" if witness is None else f"monochromatic solution {witness}"
    _emit(args, text, _payload("check-coloring", {**params.as_dict(), "n": coloring.n}, result))
    return EXIT_OK if witness is None else EXIT_FAIL


def cmd_chain_verify(args: argparse.Namespace) -> int:
    try:
        if args.all:
            chains = fixture_corpus()
        elif args.fixture:
            chains = [get_fixture(args.fixture)]
        elif args.source:
            chains = [parse_chain(_read_source(args.source))]
        else:
            raise UsageError("give a chain file, --fixture ID or --all")
    except (MalformedChainError, KeyError, DomainError) as exc:
        raise UsageError(str(exc))
    bound: Any = "formula" if args.bound is None else args.bound
    reports = []
    lines = []
    status = EXIT_OK
    for chain in chains:
        try:
            report = verify_chain(chain, bound)
        except MalformedChainError as exc:
            raise UsageError(str(exc))
        reports.append(report.to_dict() | {"expected": chain.expected})
        mark = "" if report.outcome == chain.expected else f" (expected {chain.expected})"
        if args.all:
            lines.append(f"{chain.id or '<chain>'}: {report.outcome.upper()}{mark}")
            ok = report.outcome == chain.expected
        else:
            lines.append(f"{chain.id or '<chain>'}: {report.outcome.upper()}{mark}")
            for s in [*report.steps, report.contradiction]:
                if s is not None and s.detail:
                    step = "contradiction" if s.index == 0 else f"step {s.index}"
                    lines.append(f"  {step}: {s.detail}")
            ok = report.ok
        if not ok:
            status = EXIT_FAIL
    _emit(args, "\n".join(lines), _payload("chain verify", {"bound": args.bound}, reports))
    return status


def cmd_chain_list(args: argparse.Namespace) -> int:
    chains = fixture_corpus()
    lines = [f"{ch.id}  expected={ch.expected}" for ch in chains]
    _emit(args, "\n".join(lines), _payload("chain list", {}, [ch.to_dict() | {"id": ch.id} for ch in chains]))
    return EXIT_OK


def cmd_continuous_verify(args: argparse.Namespace) -> int:
    c, a = args.c, args.a
    reports = []
    try:
        if a == 1:
            reports.append(verify_lemma4_chain(c, args.k_max))
        else:
            reports.append(verify_interval_chain(c, a, args.k_max))
            if c.denominator == 1 and a.denominator == 1 and int(c) % (int(a) - 1):
                reports.append(verify_discrete_blocks(int(c), int(a), args.k_max))
        if args.lemma4 and a != 1:
            reports.append(verify_lemma4_chain(c, args.k_max))
    except DomainError as exc:
        raise UsageError(str(exc))
    lines = []
    for rep in reports:
        lines.append(f"{rep.name}: {'PASS' if rep.ok else 'FAIL'} ({rep.checked} checked)")
        lines += [f"  k={v.k} {v.check}: {v.detail}" for v in rep.violations]
    ok = all(rep.ok for rep in reports)
    _emit(args, "\n".join(lines), _payload(
        "continuous verify", {"c": str(c), "a": str(a), "k_max": args.k_max}, [r.to_dict() for r in reports]))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_coloring(args: argparse.Namespace) -> int:
    kind = args.kind
    try:
        if kind == "lemma1":
            coloring = lemma1_coloring(args.m, args.c, args.a)
        elif kind == "parity":
            coloring = parity_coloring(args.n)
        elif kind == "linear":
            coloring = linear_infinite_coloring(args.c, args.a, args.n)
        else:
            coloring = coefficient_one_coloring(args.c, args.n)
    except (DomainError, TypeError) as exc:
        raise UsageError(str(exc))
    text = json.dumps(coloring.to_dict()) if args.format == "json" else coloring.to_string()
    if args.out:
        Path(args.out).write_text(json.dumps(coloring.to_dict(), indent=1) + "\n")
    else:
        sys.stdout.write(text + "\n")
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser, formats: Sequence[str] = ("text", "json")) -> None:
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--out", help="write primary output to this file instead of stdout")


def _add_budget(p: argparse.ArgumentParser, max_n: int) -> None:
    p.add_argument("--max-n", type=int, default=max_n)
    p.add_argument("--max-nodes", type=int, default=10**9)
    p.add_argument("--max-seconds", type=float, default=None)
    p.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rado-lab", description="Exact 2-color Rado numbers for x_1 + ... + x_m + c = a x_0."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="progress on stderr (-vv for search events)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", help="closed-form Rado number")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--a", type=int, default=2)
    _add_common(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("brute", help="exact Rado number by exhaustive search")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--certificate", help="path for the lower-bound coloring (default certificate_m*_c*_a*.json)")
    _add_budget(p, 200)
    _add_common(p)
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("table", help="formula versus brute force over a grid")
    p.add_argument("--m", type=parse_range, required=True, help="range such as 2..6")
    p.add_argument("--c", type=parse_range, required=True, help="range such as 1..8")
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--no-timing", action="store_true", help="omit the seconds column")
    _add_budget(p, 60)
    _add_common(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check-coloring", help="search a coloring for a monochromatic solution")
    p.add_argument("source", help="coloring file, '-' for stdin, or an inline 'RBBR...' string")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--a", type=int, default=2)
    _add_common(p)
    p.set_defaults(func=cmd_check_coloring)

    chain = sub.add_parser("chain", help="forcing-chain tools").add_subparsers(dest="chain_command", required=True)
    p = chain.add_parser("verify", help="replay a forcing chain")
    p.add_argument("source", nargs="?", help="chain file or '-' for stdin")
    p.add_argument("--fixture", help="verify a built-in fixture by id")
    p.add_argument("--all", action="store_true", help="verify every fixture against its expected outcome")
    p.add_argument("--bound", type=int, default=None, help="range-check against this R instead of the formula")
    _add_common(p)
    p.set_defaults(func=cmd_chain_verify)
    p = chain.add_parser("list", help="list built-in fixtures")
    _add_common(p)
    p.set_defaults(func=cmd_chain_list)

    cont = sub.add_parser("continuous", help="exact interval identities").add_subparsers(
        dest="continuous_command", required=True
    )
    p = cont.add_parser("verify", help="verify the interval colorings for x_1 + c = a x_0")
    p.add_argument("--c", type=parse_fraction, required=True)
    p.add_argument("--a", type=parse_fraction, required=True)
    p.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
    p.add_argument("--lemma4", action="store_true", help="also check the a = 1 block chain for this c")
    _add_common(p)
    p.set_defaults(func=cmd_continuous_verify)

    p = sub.add_parser("coloring", help="construct an extremal coloring")
    p.add_argument("kind", choices=("lemma1", "parity", "linear", "coefficient-one"))
    p.add_argument("--m", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--n", type=int)
    _add_common(p)
    p.set_defaults(func=cmd_coloring)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
