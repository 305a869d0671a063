"""Command-line front end: ``betticone <subcommand> ...``.

Exit codes: 0 success / member, 1 NULL (certified non-member, or not
extremal), 2 input error, 3 inconclusive (search ran below the bound).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .decompose import candidates, decompose_report, extremality_check
from .diagram import IDENTITY, BettiDiagram, clear_denominators
from .formats import format_json, format_text, parse_diagram
from .koszul import DeterminingVector, ci_diagram
from .linalg import SupportBasis, denominator_bound

EXIT_OK, EXIT_NULL, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2, 3


def _read_diagram(arg: str) -> BettiDiagram:
    if arg == "-":
        return parse_diagram(sys.stdin.read())
    return parse_diagram(Path(arg).read_text())


def _diagram_or_vector(arg: str) -> BettiDiagram:
    if arg in ("identity", "R"):
        return IDENTITY
    if arg.lstrip().startswith("("):
        return ci_diagram(DeterminingVector.parse(arg))
    return _read_diagram(arg)


def _emit_diagram(d: BettiDiagram, args) -> None:
    if args.format == "json":
        print(format_json(d, args.toprow))
    else:
        sys.stdout.write(format_text(d, args.toprow))


def _d_prime(text: str):
    if text in ("escalate", "exact"):
        return text
    if text.startswith("override="):
        k = int(text.split("=", 1)[1])
        if k < 1:
            raise argparse.ArgumentTypeError("override must be positive")
        return k
    raise argparse.ArgumentTypeError(f"expected escalate, exact or override=K, got {text!r}")


def cmd_table(args) -> int:
    _emit_diagram(ci_diagram(DeterminingVector.parse(args.vector)), args)
    return EXIT_OK


def cmd_product(args) -> int:
    _emit_diagram(_diagram_or_vector(args.left).odot(_diagram_or_vector(args.right)), args)
    return EXIT_OK


def cmd_decompose(args) -> int:
    gamma = _read_diagram(args.path)
    report = decompose_report(
        gamma,
        embedding=args.embedding,
        d_prime=args.d_prime,
        max_solutions=args.max_solutions,
        prune=args.prune == "on",
        variables=args.variables,
    )
    if args.format == "json":
        print(json.dumps(report.to_json()))
    elif report.member is False:
        print("NULL")
    elif not report.decompositions:
        print("INCONCLUSIVE")
    else:
        for dec in report.decompositions:
            print(dec)
    for note in report.notes:
        print(f"note: {note}", file=sys.stderr)
    print(f"D={report.D} m={report.m} r={report.candidates.r if report.candidates else 0} "
          f"tuples_examined={report.tuples_examined} complete={report.complete}", file=sys.stderr)
    if report.member is True:
        return EXIT_OK
    return EXIT_NULL if report.member is False else EXIT_UNKNOWN


def cmd_denominator_bound(args) -> int:
    diagrams = [_diagram_or_vector(item) for item in args.items]
    if any(not d for d in diagrams):
        raise ValueError("the family must consist of nonzero diagrams")
    gamma = _read_diagram(args.gamma) if args.gamma else sum(diagrams[1:], diagrams[0])
    d, G = clear_denominators(gamma)
    if args.embedding == "full":
        basis = SupportBasis.enclosing([G, *diagrams])
    else:
        basis = SupportBasis.reduced([G, *diagrams])
    dp = denominator_bound(diagrams, basis)
    if args.format == "json":
        print(json.dumps({"d": d, "d_prime": dp, "D": d * dp, "N": len(basis), "embedding": args.embedding}))
    else:
        print(f"d = {d}\nd' = {dp}\nD = {d * dp}\nN = {len(basis)} ({args.embedding} embedding)")
    return EXIT_OK


def cmd_candidates(args) -> int:
    gamma = _read_diagram(args.path)
    if not gamma.is_nonnegative():
        raise ValueError("candidates need a nonnegative diagram")
    if gamma:
        gamma = gamma.twist(-gamma.top_row)
    if args.variables is not None and gamma and gamma.pdim > args.variables:
        raise ValueError(f"pdim {gamma.pdim} exceeds the number of variables {args.variables}")
    cands = candidates(gamma)
    if args.format == "json":
        print(json.dumps({
            "C0": sorted(cands.C0),
            "C1": sorted(cands.C1),
            "L": [list(a.as_tuple()) for a in cands],
        }))
    else:
        print(f"C0 = {sorted(cands.C0)}\nC1 = {sorted(cands.C1)}\nr = {cands.r}")
        for a in cands:
            print(a)
    return EXIT_OK


def cmd_extremality(args) -> int:
    ok = extremality_check(DeterminingVector.parse(args.vector), args.p)
    if args.format == "json":
        print(json.dumps({"vector": args.vector, "p": args.p, "extremal": ok}))
    else:
        print("extremal" if ok else "NOT extremal")
    return EXIT_OK if ok else EXIT_NULL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="betticone", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, toprow=False):
        p.add_argument("--format", choices=("table", "json"), default="table")
        if toprow:
            p.add_argument("--toprow", type=int, default=None)
        return p

    p = common(sub.add_parser("table", help="Betti diagram of a complete intersection"), toprow=True)
    p.add_argument("vector", help='determining vector such as "(1,2,2,3)"')
    p.set_defaults(func=cmd_table)

    p = common(sub.add_parser("product", help="diagram product of two diagrams"), toprow=True)
    p.add_argument("left", help="vector literal, diagram file, or 'identity'")
    p.add_argument("right")
    p.set_defaults(func=cmd_product)

    p = common(sub.add_parser("decompose", help="decompose a diagram file ('-' for stdin)"))
    p.add_argument("path")
    p.add_argument("--embedding", choices=("reduced", "full"), default="reduced")
    p.add_argument("--d-prime", type=_d_prime, default="escalate", dest="d_prime")
    p.add_argument("--prune", choices=("on", "off"), default="on")
    p.add_argument("--max-solutions", type=int, default=None)
    p.add_argument("--variables", type=int, default=None)
    p.set_defaults(func=cmd_decompose)

    p = common(sub.add_parser("denominator-bound", help="d, d' and D for a family of diagrams"))
    p.add_argument("items", nargs="+", help="vector literals or diagram files")
    p.add_argument("--gamma", default=None, help="diagram file fixing d and the embedding")
    p.add_argument("--embedding", choices=("reduced", "full"), default="reduced")
    p.set_defaults(func=cmd_denominator_bound)

    p = common(sub.add_parser("candidates", help="candidate determining vectors for a diagram"))
    p.add_argument("path")
    p.add_argument("--variables", type=int, default=None)
    p.set_defaults(func=cmd_candidates)

    p = common(sub.add_parser("extremality", help="check that p*beta(a) only splits as p*beta(a)"))
    p.add_argument("vector")
    p.add_argument("--p", type=int, default=1)
    p.set_defaults(func=cmd_extremality)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
