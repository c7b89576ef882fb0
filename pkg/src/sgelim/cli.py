"""Command-line frontend.

Exit codes follow one convention everywhere: 0 for a positive answer
(SE / SEO / no mismatches), 1 for a negative one, 2 for usage or input
errors (one-line diagnostic on stderr).  Output is byte-stable for
identical inputs; timing lines appear only behind ``--timing``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .characterize import characterize, format_certificate, verify_certificate
from .graph import SgParseError, parse_sg, serialize_sg
from .invariant import (
    deg_tilde,
    degree_profile,
    format_deg_tilde,
    format_profile,
)
from .oracle import ALL_CHECKERS, DEFAULT_CHECKERS, build_family, cross_check
from .seo import (
    NotSignedEliminableError,
    format_ordering,
    greedy_seo,
    is_seo,
    parse_ordering,
)
from .special import (
    chordal_underlying_check,
    complete_graph_check,
    four_vertex_check,
    format_special_verdict,
    low_independence_check,
)

_YN = {True: "y", False: "n"}


def _read_graph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    return parse_sg(text)


def _cmd_check(args) -> int:
    G = _read_graph(args.input)
    ordering = greedy_seo(G)
    if args.json:
        doc = {"se": ordering is not None}
        if ordering is not None:
            doc["ordering"] = list(ordering.seq)
        print(json.dumps(doc, sort_keys=True))
    elif ordering is not None:
        print("SE")
        print(format_ordering(ordering))
    else:
        print("NOT-SE")
    return 0 if ordering is not None else 1


def _cmd_verify(args) -> int:
    G = _read_graph(args.input)
    nu = parse_ordering(args.order, G.n)
    violation = is_seo(G, nu)
    if args.json:
        doc = {"seo": violation is None}
        if violation is not None:
            doc["violation"] = {
                "kind": violation.kind,
                "sign": violation.sign,
                "u": violation.u,
                "v": violation.v,
                "w": violation.w,
            }
        print(json.dumps(doc, sort_keys=True))
    elif violation is None:
        print("SEO")
    else:
        print(
            f"violation {violation.kind} {violation.sign} "
            f"u={violation.u} v={violation.v} w={violation.w}"
        )
    return 0 if violation is None else 1


def _cmd_invariant(args) -> int:
    G = _read_graph(args.input)
    ordering = greedy_seo(G)
    if ordering is None:
        print("error: graph is not signed-eliminable", file=sys.stderr)
        return 1
    profile = degree_profile(G, ordering)
    degt = deg_tilde(G)
    if args.json:
        print(json.dumps({"profile": [list(p) for p in profile], "degt": list(degt)}, sort_keys=True))
    else:
        print(format_profile(profile))
        print(format_deg_tilde(degt))
    return 0


def _cmd_characterize(args) -> int:
    G = _read_graph(args.input)
    verdict = characterize(G)
    flags = (
        f"c1+={_YN[verdict.c1_plus]} c1-={_YN[verdict.c1_minus]} "
        f"c2={_YN[verdict.c2]} c3={_YN[verdict.c3]}"
    )
    verified: str | None = None
    if args.verify_cert and verdict.certificate is not None:
        reason = verify_certificate(G, verdict.certificate)
        if reason is not None:
            print(f"error: emitted certificate failed re-verification: {reason}", file=sys.stderr)
            return 2
        verified = "pass"
    if args.json:
        doc = {
            "c1_plus": verdict.c1_plus,
            "c1_minus": verdict.c1_minus,
            "c2": verdict.c2,
            "c3": verdict.c3,
            "se": verdict.se,
        }
        if verdict.ordering is not None:
            doc["ordering"] = list(verdict.ordering.seq)
        if verdict.certificate is not None:
            doc["certificate"] = format_certificate(verdict.certificate)
        if verified is not None:
            doc["verify_cert"] = verified
        print(json.dumps(doc, sort_keys=True))
    else:
        print(flags)
        if verdict.ordering is not None:
            print(format_ordering(verdict.ordering))
        else:
            print(format_certificate(verdict.certificate))
        if verified is not None:
            print("verify-cert: pass")
    return 0 if verdict.se else 1


_SPECIAL = {
    "fv": four_vertex_check,
    "chordal": chordal_underlying_check,
    "lowindep": low_independence_check,
    "complete": complete_graph_check,
}


def _cmd_special(args) -> int:
    G = _read_graph(args.input)
    names = list(_SPECIAL) if args.which == "all" else [args.which]
    verdicts = [_SPECIAL[name](G) for name in names]
    if args.json:
        doc = [
            {"name": v.name, "applicable": v.applicable, "se": v.se, "reason": v.reason}
            for v in verdicts
        ]
        print(json.dumps(doc, sort_keys=True))
    else:
        for v in verdicts:
            print(format_special_verdict(v))
    return 0


def _cmd_gen(args) -> int:
    G = build_family(args.kind, args.sign, args.n)
    sys.stdout.write(serialize_sg(G))
    return 0


def _cmd_crosscheck(args) -> int:
    checkers = DEFAULT_CHECKERS if args.checkers is None else tuple(args.checkers.split(","))
    report = cross_check(
        args.n,
        checkers=checkers,
        workers=args.workers,
        with_oracle=True if args.with_oracle else None,
        long_run=args.long_run,
    )
    if args.json:
        sys.stdout.write(report.to_json(timing=args.timing) + "\n")
    else:
        sys.stdout.write(report.to_text(timing=args.timing))
    return 0 if not report.mismatches else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgelim",
        description="Signed elimination orderings: recognition, certificates, invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help=".sg file path, or - for standard input")
        p.add_argument("--json", action="store_true", help="structured output")

    p = sub.add_parser("check", help="decide signed-eliminability, print an ordering if SE")
    add_input(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verify", help="check a given ordering")
    add_input(p)
    p.add_argument("--order", required=True, help="space-separated vertex ids by position")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("invariant", help="degree-pair profile and its difference projection")
    add_input(p)
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("characterize", help="condition flags plus ordering or certificate")
    add_input(p)
    p.add_argument("--verify-cert", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=_cmd_characterize)

    p = sub.add_parser("special", help="restricted-class checkers")
    add_input(p)
    p.add_argument("--which", choices=[*_SPECIAL, "all"], default="all")
    p.set_defaults(func=_cmd_special)

    p = sub.add_parser("gen", help="write a canonical fixture as .sg")
    p.add_argument("--kind", required=True, choices=["mountain", "hill", "capped_mountain", "capped_hill"])
    p.add_argument("--sign", required=True, choices=["+", "-"])
    p.add_argument("--n", required=True, type=int, help="path length")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("crosscheck", help="exhaustive agreement sweep over all graphs of size n")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--with-oracle", action="store_true", help="force the brute-force oracle")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--long-run", action="store_true", help="required for n=6")
    p.add_argument("--timing", action="store_true", help="append elapsed time")
    p.add_argument("--json", action="store_true")
    p.add_argument(
        "--checkers",
        default=None,
        help="comma-separated subset of: " + ",".join(ALL_CHECKERS),
    )
    p.set_defaults(func=_cmd_crosscheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (SgParseError, NotSignedEliminableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
