"""Command-line interface.

    etalg classify FILE [--certificates] [--json] [--order grevlex|lex]
                        [--budget-pairs N] [--budget-primitive N]
    etalg nette FILE ...          one section of the full report each
    etalg smooth FILE ...
    etalg etale FILE ...
    etalg differentials FILE ...
    etalg decompose FILE ...

Exit codes: 0 classified, 1 input error, 2 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .errors import BudgetExceeded, ParseError
from .kaehler import omega_presentation, omega_dimension
from .groebner import buchberger, contains_one, noether_dimension
from .multipoly import MonomialOrder
from .parsing import parse_file
from .pipeline import classify, render_report, _render_decision, _render_certificate


def _add_common(parser):
    parser.add_argument("file", help="presentation file (field / vars / relations)")
    parser.add_argument("--order", default="grevlex", choices=("grevlex", "lex"),
                        help="monomial order for the Groebner engine")
    parser.add_argument("--budget-pairs", type=int, default=50_000, metavar="N",
                        help="Groebner critical-pair budget")
    parser.add_argument("--budget-primitive", type=int, default=1000, metavar="N",
                        help="primitive-element search budget")
    parser.add_argument("--certificates", action="store_true",
                        help="print constructive certificates")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="etalg",
        description="Classify finitely presented algebras over Q or GF(p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_classify = sub.add_parser("classify", help="full classification report")
    _add_common(p_classify)
    p_classify.add_argument("--json", action="store_true", help="emit the report as JSON")
    for name, description in (
        ("nette", "unramifiedness test only"),
        ("smooth", "standard / elementary smoothness tests"),
        ("etale", "etale verdict with discriminant"),
        ("differentials", "differential-module presentation"),
        ("decompose", "structure decomposition of an etale algebra"),
    ):
        _add_common(sub.add_parser(name, help=description))
    return parser


def _run(args) -> str:
    presentation = parse_file(args.file)
    order = MonomialOrder.parse(args.order)
    if args.command == "differentials":
        return _differentials_text(presentation, order, args.budget_pairs)
    report = classify(
        presentation,
        order=order,
        pair_budget=args.budget_pairs,
        primitive_budget=args.budget_primitive,
        certificates=args.certificates,
    )
    if args.command == "classify":
        if getattr(args, "json", False):
            return report.to_json() + "\n"
        return render_report(report, certificates=args.certificates)
    lines = []
    flag = lambda v: "true" if v else "false"
    if args.command == "nette":
        lines.append(f"nette: {flag(report.nette)}")
        if args.certificates:
            lines.extend(_render_decision(report.decisions["nette"]))
        if report.trivial:
            lines.append("note: trivial algebra (the ideal contains 1)")
    elif args.command == "smooth":
        lines.append(f"standard-smooth: {flag(report.standard_smooth)}")
        if args.certificates:
            lines.extend(_render_decision(report.decisions["standard_smooth"]))
        lines.append(f"elementary-smooth: {flag(report.elementary_smooth)}")
        if args.certificates:
            lines.extend(_render_decision(report.decisions["elementary_smooth"]))
    elif args.command == "etale":
        lines.append(f"standard-etale: {flag(report.standard_etale)}")
        if args.certificates:
            lines.extend(_render_decision(report.decisions["standard_etale"]))
        dim = report.noether_dimension
        lines.append(f"noether-dimension: {dim if dim is not None else 'undefined (zero ring)'}")
        if report.discriminant is not None and report.algebra is not None:
            lines.append(f"discriminant: {report.algebra.field.format(report.discriminant)}")
        lines.append(f"etale: {flag(report.etale)}")
        if report.nilpotent_witness is not None and report.algebra is not None:
            lines.append(
                f"nilpotent-witness: {report.algebra.format_element(report.nilpotent_witness)}"
            )
    elif args.command == "decompose":
        lines.append(f"etale: {flag(report.etale)}")
        if report.decomposition is None:
            lines.append("no decomposition: the algebra is not etale"
                         if report.noether_dimension == 0
                         else "no decomposition: the quotient is not finite-dimensional")
            if report.nilpotent_witness is not None and report.algebra is not None:
                lines.append(
                    f"nilpotent-witness: {report.algebra.format_element(report.nilpotent_witness)}"
                )
        else:
            lines.append("decomposition:")
            if not report.decomposition:
                lines.append("  (empty product)")
            for k, g in enumerate(report.decomposition, start=1):
                lines.append(f"  g{k} = {g.format()}")
            if args.certificates and report.certificate is not None:
                lines.extend(_render_certificate(report))
            if report.primitive_element is not None and report.algebra is not None:
                coords, poly = report.primitive_element
                lines.append(
                    f"primitive-element: {report.algebra.format_element(coords)}"
                    f"  (minimal polynomial {poly.format()})"
                )
    return "\n".join(lines) + "\n"


def _differentials_text(presentation, order, pair_budget) -> str:
    D = omega_presentation(presentation)
    lines = ["differential-module presentation:"]
    lines.append(f"  generators: {', '.join(D.generators)}")
    lines.append("  relations (columns of the transposed Jacobian):")
    if presentation.s == 0:
        lines.append("    (none)")
    for j in range(presentation.s):
        terms = []
        for i, gen in enumerate(D.generators):
            entry = D.relation_table[i][j]
            if entry.is_zero:
                continue
            terms.append(f"({entry.format(order)})*{gen}")
        lines.append(f"    r{j + 1}: " + (" + ".join(terms) if terms else "0"))
    gens = list(presentation.relations) if presentation.relations else [presentation.ring_zero()]
    gb = buchberger(gens, order, pair_budget)
    if contains_one(gb):
        lines.append("  omega-dimension: 0 (zero ring)")
    elif noether_dimension(gb) == 0:
        lines.append(f"  omega-dimension: {omega_dimension(presentation, order, pair_budget, gb=gb)}")
    else:
        lines.append("  omega-dimension: undefined (quotient not finite-dimensional)")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        sys.stdout.write(_run(args))
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
