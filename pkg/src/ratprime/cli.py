"""Command-line interface: analyze, decompose, fq and resultant subcommands.

Every run produces a report with a fixed key set (see report_schema.json);
inapplicable sections carry nulls so the layout never depends on the input.
Exit codes: 0 success, 2 expression syntax errors, 3 precondition
violations.  With --json the report (or the error) is printed as a single
JSON document; coefficients appear as decimal strings, never floats.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .errors import DegenerateDerivativeError, PreconditionError, RatPrimeError
from .fields import Fp, PrimeField, QQ, parse_field
from .fqring import FqClass, classify, reduce_ring, ring_compose, zero_divisor_witness
from .oracle import OracleBudget, SearchResult, poly_decompose, rat_decompose_all_k, rat_decompose_via_reduction
from .parser import ParseError, format_poly, format_ratfun, parse_expression
from .poly import Poly
from .primality import CompositeWitness, Unknown, Verdict, analyze
from .ratfun import RatFun
from .resultants import critical_values, disc_in_t, rat_resultant_in_t

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3


def _element_str(c) -> str:
    if isinstance(c, Fp):
        return str(c.value)
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def _blank_report(command: str) -> dict:
    return {
        "report_version": "1",
        "command": command,
        "input": None,
        "field": None,
        "degree": None,
        "ord_infinity": None,
        "critical_values": {
            "disc_coefficients": None,
            "simple_count": None,
            "nonzero_simple_count": None,
            "zero_multiplicity": None,
            "degenerate": False,
        },
        "verdict": {
            "kind": None,
            "scope": None,
            "details": {"degree": None, "prime": None, "d": None,
                        "ord_infinity": None, "valency": None, "count": None},
            "witness_g": None,
            "witness_h": None,
            "notes": None,
            "description": None,
        },
        "fq": {
            "p": None,
            "classification": None,
            "table": None,
            "reduced": None,
            "witness": None,
            "witness_composes_to_zero": None,
        },
        "oracle": {"status": "unused", "exhaustive": None, "candidates": None},
        "timing_ms": None,
        "error": None,
    }


def _fill_critical_section(report: dict, f: RatFun) -> None:
    section = report["critical_values"]
    try:
        disc = disc_in_t(f.numerator) if f.is_polynomial else rat_resultant_in_t(f)
    except DegenerateDerivativeError:
        section["degenerate"] = True
        return
    cv = critical_values(disc)
    section["disc_coefficients"] = [_element_str(c) for c in disc.coeffs]
    section["simple_count"] = cv.simple_count
    section["nonzero_simple_count"] = cv.nonzero_simple_count
    section["zero_multiplicity"] = cv.zero_multiplicity


def _fill_verdict(report: dict, verdict: Verdict) -> None:
    v = report["verdict"]
    v["kind"] = verdict.kind
    v["scope"] = verdict.scope
    v["description"] = verdict.describe()
    details = v["details"]
    for key in details:
        if hasattr(verdict, key):
            details[key] = getattr(verdict, key)
    if isinstance(verdict, CompositeWitness):
        v["witness_g"] = format_ratfun(verdict.g)
        v["witness_h"] = format_ratfun(verdict.h)
    if verdict.notes:
        v["notes"] = list(verdict.notes)


def _oracle_status(report: dict, verdict: Verdict | None,
                   budget: OracleBudget | None,
                   search: SearchResult | None = None) -> None:
    section = report["oracle"]
    if budget is None:
        section["status"] = "unused"
        return
    if isinstance(verdict, Verdict) and verdict.is_prime_certificate:
        section["status"] = "unused"
        return
    if isinstance(verdict, CompositeWitness) or (search and search.witness):
        section["status"] = "witness"
    else:
        section["status"] = "exhausted"
    if search is not None:
        section["exhaustive"] = search.exhaustive
        section["candidates"] = search.candidates


def _cmd_analyze(args, report: dict) -> int:
    field = parse_field(args.field)
    f = parse_expression(args.expr, field)
    if f.is_zero or f.is_constant or f.degree < 2:
        raise PreconditionError("analysis needs degree >= 2")
    report["field"] = repr(field)
    report["degree"] = f.degree
    report["ord_infinity"] = f.ord_infinity
    _fill_critical_section(report, f)
    budget = OracleBudget(candidate_cap=args.oracle_budget) if args.oracle_budget else None
    verdict = analyze(f, budget)
    _fill_verdict(report, verdict)
    _oracle_status(report, verdict, budget)
    return EXIT_OK


def _cmd_decompose(args, report: dict) -> int:
    field = parse_field(args.field)
    f = parse_expression(args.expr, field)
    if f.is_zero or f.is_constant or f.degree < 2:
        raise PreconditionError("decomposition needs degree >= 2")
    report["field"] = repr(field)
    report["degree"] = f.degree
    report["ord_infinity"] = f.ord_infinity
    cap = args.oracle_budget if args.oracle_budget else OracleBudget().candidate_cap
    budget = OracleBudget(candidate_cap=cap)
    if f.is_polynomial:
        search = poly_decompose(f.numerator, budget)
        witness = None
        if search.witness:
            g, h = search.witness
            witness = (RatFun(g), RatFun(h))
    elif isinstance(field, PrimeField):
        search = rat_decompose_all_k(f, budget)
        witness = search.witness
    else:
        search = rat_decompose_via_reduction(f, budget)
        witness = search.witness
    if witness:
        g, h = witness
        report["verdict"]["kind"] = "CompositeWitness"
        report["verdict"]["witness_g"] = format_ratfun(g)
        report["verdict"]["witness_h"] = format_ratfun(h)
        report["verdict"]["description"] = CompositeWitness(g, h).describe()
    _oracle_status(report, None, budget, search)
    return EXIT_OK


def _cmd_fq(args, report: dict) -> int:
    if args.p:
        field = PrimeField(args.p)
    elif args.field != "Q":
        field = parse_field(args.field)
    else:
        raise PreconditionError("fq needs a prime field: pass --p P or --field F<p>")
    if not isinstance(field, PrimeField):
        raise PreconditionError("fq runs over a prime field")
    f = parse_expression(args.expr, field)
    if not f.is_polynomial:
        raise PreconditionError("fq classifies polynomial functions only")
    phi = reduce_ring(f.numerator)
    kind = classify(phi)
    section = report["fq"]
    report["field"] = repr(field)
    section["p"] = field.p
    section["classification"] = kind.value
    section["table"] = list(phi.table)
    section["reduced"] = format_poly(phi.reduced)
    if kind is FqClass.ZERO_DIVISOR:
        psi = zero_divisor_witness(phi)
        section["witness"] = format_poly(psi.reduced)
        section["witness_composes_to_zero"] = ring_compose(psi, phi).is_zero
    return EXIT_OK


def _cmd_resultant(args, report: dict) -> int:
    field = parse_field(args.field)
    f = parse_expression(args.expr, field)
    if f.is_zero or f.is_constant:
        raise PreconditionError("resultant needs a nonconstant function")
    report["field"] = repr(field)
    report["degree"] = f.degree
    report["ord_infinity"] = f.ord_infinity
    if f.is_polynomial and f.degree < 2:
        raise PreconditionError("disc-in-t needs degree >= 2")
    _fill_critical_section(report, f)
    return EXIT_OK


def _print_text(report: dict, stream) -> None:
    print(f"command: {report['command']}", file=stream)
    if report["input"] is not None:
        print(f"input: {report['input']}", file=stream)
    if report["field"] is not None:
        print(f"field: {report['field']}", file=stream)
    if report["degree"] is not None:
        print(f"degree: {report['degree']}", file=stream)
    if report["ord_infinity"] is not None:
        print(f"ord_infinity: {report['ord_infinity']}", file=stream)
    cv = report["critical_values"]
    if cv["degenerate"]:
        print("critical values: degenerate (derivative vanishes identically)", file=stream)
    elif cv["disc_coefficients"] is not None:
        print(f"disc in t (ascending): {cv['disc_coefficients']}", file=stream)
        print(f"simple critical values: {cv['simple_count']}  "
              f"non-zero simple: {cv['nonzero_simple_count']}  "
              f"multiplicity of t=0: {cv['zero_multiplicity']}", file=stream)
    v = report["verdict"]
    if v["kind"] is not None:
        print(f"verdict: {v['kind']} -- {v['description']}", file=stream)
        if v["witness_g"] is not None:
            print(f"  g = {v['witness_g']}", file=stream)
            print(f"  h = {v['witness_h']}", file=stream)
        if v["notes"]:
            for note in v["notes"]:
                print(f"  note: {note}", file=stream)
    fq = report["fq"]
    if fq["classification"] is not None:
        print(f"classification over F_{fq['p']}: {fq['classification']}", file=stream)
        print(f"value table: {fq['table']}", file=stream)
        print(f"reduced representative: {fq['reduced']}", file=stream)
        if fq["witness"] is not None:
            print(f"zero-divisor witness: {fq['witness']}", file=stream)
    print(f"oracle: {report['oracle']['status']}", file=stream)
    if report["timing_ms"] is not None:
        print(f"time: {report['timing_ms']:.1f} ms", file=stream)


def build_cli() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratprime",
        description="Exact primality analysis of polynomials and rational "
                    "functions under composition.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
            ("analyze", "run the certificate tests (and optionally the oracle)"),
            ("decompose", "run the decomposition oracle only"),
            ("fq", "classify a polynomial function over F_p"),
            ("resultant", "print the discriminant-in-t / critical resultant")):
        cmd = sub.add_parser(name, help=helptext)
        cmd.add_argument("expr", help="expression, e.g. '(x+1)^4/x^3'")
        cmd.add_argument("--field", default="Q", help="Q (default) or F<p>")
        cmd.add_argument("--json", action="store_true", help="emit a JSON report")
        if name in ("analyze", "decompose"):
            cmd.add_argument("--oracle-budget", type=int, default=0, metavar="N",
                             help="candidate cap for the decomposition oracle")
        if name == "fq":
            cmd.add_argument("--p", type=int, default=0, help="field size (prime)")
    return parser


_HANDLERS = {
    "analyze": _cmd_analyze,
    "decompose": _cmd_decompose,
    "fq": _cmd_fq,
    "resultant": _cmd_resultant,
}


def main(argv=None) -> int:
    args = build_cli().parse_args(argv)
    report = _blank_report(args.command)
    report["input"] = args.expr
    start = time.perf_counter()
    code = EXIT_OK
    try:
        code = _HANDLERS[args.command](args, report)
    except ParseError as exc:
        code = EXIT_PARSE
        report["error"] = {"kind": "parse-error", "message": str(exc),
                           "exit_code": code}
    except (PreconditionError, ZeroDivisionError) as exc:
        code = EXIT_PRECONDITION
        report["error"] = {"kind": "precondition-violation", "message": str(exc),
                           "exit_code": code}
    report["timing_ms"] = (time.perf_counter() - start) * 1000.0
    if args.json:
        print(json.dumps(report, indent=2))
    elif report["error"] is not None:
        print(f"error: {report['error']['message']}", file=sys.stderr)
    else:
        _print_text(report, sys.stdout)
    return code


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
