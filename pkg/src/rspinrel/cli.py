"""Command-line front end.

Subcommands: ``relations`` (assemble and print divisor relations),
``verify-ac`` (compare spans against the known complete set), ``pm-table``
(coefficient polynomial table), ``selftest`` (acceptance suite).

Exit codes are a stable contract: 0 success, 1 usage error or failed
verification, 2 degree-gate refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .cohft import p_polynomial, phi_degree
from .relations import (
    DegreeGateError,
    Relation,
    ac_relations,
    assemble_relation,
    extract_r_coefficients,
    ppz_relation_set,
    pullback_genus2,
    spans_equal,
)
from .selftest import run_acceptance
from .strata import StabilityError, UnsupportedGenusError, divisor_generators

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad arguments; the contract here is 1."""

    def error(self, message):
        raise UsageError(message)


def _format_terms(names: list[str], coeffs: list[int]) -> str:
    parts = []
    for coeff, name in zip(coeffs, names):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        parts.append((sign, f"{abs(coeff)}*{name}"))
    if not parts:
        return "0 = 0"
    first_sign, first_term = parts[0]
    text = ("-" if first_sign == "-" else "") + first_term
    for sign, term in parts[1:]:
        text += f" {sign} {term}"
    return text + " = 0"


def _emit(record: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(record, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_relations(args) -> int:
    g, n = args.g, args.n
    if g < 1:
        raise UsageError("genus must be at least 1 (genus 0 is out of scope)")
    if 2 * g - 2 + n <= 0:
        raise UsageError(f"(g, n) = ({g}, {n}) is unstable")
    if args.symbolic and args.r is not None:
        raise UsageError("--r and --symbolic are mutually exclusive")
    if not args.symbolic and args.r is None:
        raise UsageError("provide --r or --symbolic")
    if args.r is not None and args.r < 3:
        raise UsageError("r must be at least 3")

    a_vec = None
    if args.a is not None:
        try:
            a_vec = tuple(int(x) for x in args.a.split(","))
        except ValueError:
            raise UsageError(f"cannot parse leg vector {args.a!r}")
        if len(a_vec) != n:
            raise UsageError(f"leg vector length {len(a_vec)} != n = {n}")

    start = time.perf_counter()
    notes: list[str] = []
    basis = tuple(divisor_generators(g, n))
    names = [d.render() for d in basis]
    payloads: list[dict] = []
    lines: list[str] = []

    if args.symbolic:
        if g != 1:
            raise UsageError("symbolic mode is supported in genus 1 only")
        a_choices = [a_vec] if a_vec is not None else [
            tuple(1 if j == i else 0 for j in range(n)) for i in range(n)
        ]
        extracted: list[Relation] = []
        for choice in a_choices:
            symbolic = assemble_relation(g, n, choice, symbolic=True)
            extracted.extend(extract_r_coefficients(symbolic).relations)
        payloads = [rel.payload(basis) for rel in extracted]
        lines.append(f"relations g={g} n={n} r=symbolic ({len(extracted)} extracted)")
        for rel, payload in zip(extracted, payloads):
            lines.append(
                f"  [{rel.provenance.r_mode}, a={list(rel.provenance.a_vec)}] "
                + _format_terms(payload["generators"], payload["coeffs"])
            )
    elif a_vec is not None:
        if g == 2 and n > 0:
            # Marked genus-2 relations are pullbacks of the unmarked one,
            # never direct assemblies; the unmarked space fixes the leg data.
            if any(a_vec):
                raise UsageError(
                    "genus 2 with markings takes only the all-zero leg vector"
                )
            base = assemble_relation(2, 0, (), args.r)
            rel = pullback_genus2(base, n)
        else:
            rel = assemble_relation(g, n, a_vec, args.r)
        if rel.is_zero():
            notes.append("zero relation: every graph contribution vanishes")
            lines.append(f"relations g={g} n={n} r={args.r} a={list(a_vec)}: 0 = 0")
        else:
            payloads = [rel.payload(basis)]
            lines.append(f"relations g={g} n={n} r={args.r} a={list(a_vec)}")
            lines.append(
                "  " + _format_terms(payloads[0]["generators"], payloads[0]["coeffs"])
            )
    else:
        # Refuse up front when no leg vector can pass the degree gate; the
        # all-zero vector minimizes the gated quantity over all leg choices.
        report = phi_degree(g, 1, (0,) * n, args.r)
        if not report.relation_exists:
            raise DegreeGateError(g, n, (0,) * n, args.r)
        relation_set = ppz_relation_set(g, n, args.r)
        rows = relation_set.reduced_rows()
        payloads = [
            {"generators": names, "coeffs": list(row), "g": g, "n": n,
             "a": None, "r": args.r}
            for row in rows
        ]
        if not rows:
            notes.append("zero relation: every graph contribution vanishes")
            if not report.d_integral:
                notes.append(
                    "auxiliary degree is not an integer multiple of r-1"
                )
        lines.append(
            f"relations g={g} n={n} r={args.r} ({len(rows)} normalized relations)"
        )
        for payload in payloads:
            lines.append(
                "  " + _format_terms(payload["generators"], payload["coeffs"])
            )

    for note in notes:
        lines.append(f"  note: {note}")
    elapsed_ms = round(1000 * (time.perf_counter() - start), 3)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "relations",
        "params": {
            "g": g,
            "n": n,
            "r": "symbolic" if args.symbolic else args.r,
            "a": list(a_vec) if a_vec is not None else None,
            "format": args.format,
        },
        "relations": payloads,
        "verdicts": [],
        "notes": notes,
        "elapsed_ms": elapsed_ms,
    }
    _emit(record, args.format, lines)
    return 0


def _cmd_verify_ac(args) -> int:
    start = time.perf_counter()
    computed = ppz_relation_set(args.g, args.n, args.r)
    reference = ac_relations(args.g, args.n)
    report = spans_equal(computed, reference)
    verdict = "EQUAL" if report.equal else "DIFFERENT"
    elapsed_ms = round(1000 * (time.perf_counter() - start), 3)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify-ac",
        "params": {"g": args.g, "n": args.n, "r": args.r, "format": args.format},
        "relations": [],
        "verdicts": [
            {
                "name": "span-comparison",
                "verdict": verdict,
                "rank_computed": report.rank_left,
                "rank_reference": report.rank_right,
                "rank_union": report.rank_union,
            }
        ],
        "notes": [],
        "elapsed_ms": elapsed_ms,
    }
    lines = [
        f"verify-ac g={args.g} n={args.n} r={args.r}: {verdict} "
        f"(computed rank {report.rank_left}, reference rank {report.rank_right}, "
        f"union rank {report.rank_union})"
    ]
    _emit(record, args.format, lines)
    return 0 if report.equal else 1


def _cmd_pm_table(args) -> int:
    if args.r < 3:
        raise UsageError("r must be at least 3")
    if args.m_max < 0:
        raise UsageError("m-max must be nonnegative")
    start = time.perf_counter()
    rows = []
    for m in range(args.m_max + 1):
        rows.append([str(p_polynomial(m, a, args.r)) for a in range(args.r - 1)])
    elapsed_ms = round(1000 * (time.perf_counter() - start), 3)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "pm-table",
        "params": {"m_max": args.m_max, "r": args.r, "format": args.format},
        "relations": [],
        "verdicts": [],
        "table": [{"m": m, "values": row} for m, row in enumerate(rows)],
        "notes": [],
        "elapsed_ms": elapsed_ms,
    }
    width = max(6, max((len(v) for row in rows for v in row), default=6)) + 1
    header = "m \\ a |" + "".join(f"{a:>{width}}" for a in range(args.r - 1))
    lines = [f"P_m(r, a) for r={args.r}", header, "-" * len(header)]
    for m, row in enumerate(rows):
        lines.append(f"{m:>5} |" + "".join(f"{v:>{width}}" for v in row))
    _emit(record, args.format, lines)
    return 0


def _cmd_selftest(args) -> int:
    results = run_acceptance()
    fmt = "json" if args.json else args.format
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "selftest",
        "params": {"format": fmt},
        "relations": [],
        "verdicts": [
            {
                "id": res.id,
                "title": res.title,
                "verdict": "PASS" if res.passed else "FAIL",
                "detail": res.detail,
                "elapsed_s": round(res.elapsed_s, 3),
            }
            for res in results
        ],
        "notes": [],
        "elapsed_ms": round(1000 * sum(res.elapsed_s for res in results), 3),
    }
    lines = [res.line() for res in results]
    passed = sum(res.passed for res in results)
    lines.append(f"{passed}/{len(results)} criteria passed")
    _emit(record, fmt, lines)
    return 0 if passed == len(results) else 1


def build_parser() -> _Parser:
    parser = _Parser(prog="rspinrel", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_rel = sub.add_parser("relations", help="assemble divisor relations")
    p_rel.add_argument("--g", type=int, required=True)
    p_rel.add_argument("--n", type=int, required=True)
    p_rel.add_argument("--r", type=int)
    p_rel.add_argument("--symbolic", action="store_true")
    p_rel.add_argument("--a", type=str, help="comma-separated leg vector")
    p_rel.add_argument("--format", choices=("text", "json"), default="text")
    p_rel.set_defaults(fn=_cmd_relations)

    p_ver = sub.add_parser("verify-ac", help="compare spans with the known set")
    p_ver.add_argument("--g", type=int, required=True)
    p_ver.add_argument("--n", type=int, required=True)
    p_ver.add_argument("--r", type=int, required=True)
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.set_defaults(fn=_cmd_verify_ac)

    p_tab = sub.add_parser("pm-table", help="print the coefficient table")
    p_tab.add_argument("--m-max", type=int, required=True)
    p_tab.add_argument("--r", type=int, required=True)
    p_tab.add_argument("--format", choices=("text", "json"), default="text")
    p_tab.set_defaults(fn=_cmd_pm_table)

    p_self = sub.add_parser("selftest", help="run the acceptance suite")
    p_self.add_argument("--format", choices=("text", "json"), default="text")
    p_self.add_argument("--json", action="store_true", help="shorthand for --format json")
    p_self.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 1
    except DegreeGateError as exc:
        print(f"refused: {exc} (target codimension D = 1)", file=sys.stderr)
        return 2
    except (StabilityError, UnsupportedGenusError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
