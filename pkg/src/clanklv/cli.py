"""Command-line front end.

Every command prints JSON Lines by default (one object per line) or an
aligned table with ``--format text``.  Exit codes: 0 success, 1 usage error,
2 bad clan or permutation, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Optional

from .clans import ClanError, avoids_1212, canonical_string, clan_length, generate_clans, parse_clan
from .kl import kl_poly, ls_kl
from .klv import KlvError, KlvModule, klv_richardson, klv_table
from .path_diagram import clan_diagram, render_ascii, render_svg
from .permutation import format_permutation, is_cograssmannian, parse_permutation
from .poly import QPoly
from .singularity import (
    ConsistencyError,
    Verdict,
    is_gorenstein,
    is_lci,
    is_smooth,
    non_gorenstein_locus,
    non_lci_locus,
    singular_locus,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_CONSISTENCY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _clan(text: str):
    try:
        return parse_clan(text)
    except ClanError as exc:
        raise DomainError(f"bad clan {text!r}: {exc}") from exc


def _perm(text: str):
    try:
        return parse_permutation(text)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def _clan_fields(c, schema: str) -> dict:
    return {"schema": schema, "clan": canonical_string(c), "p": c.p, "q": c.q}


def classify_record(c, conjectural: bool = False) -> dict:
    lci = is_lci(c, conjectural)
    return {
        **_clan_fields(c, "clanklv.classify/1"),
        "length": clan_length(c),
        "avoids_1212": avoids_1212(c),
        "smooth": is_smooth(c),
        "lci": lci.status.value,
        "lci_conjectural": lci.conjectural,
        "gorenstein": is_gorenstein(c).status.value,
    }


def cmd_gen(args) -> Iterable[dict]:
    if args.p < 0 or args.q < 0 or args.p + args.q < 1:
        raise UsageError("need p, q >= 0 and p + q >= 1")
    if args.conjectural and not args.lci:
        raise UsageError("--conjectural only makes sense together with --lci")
    if args.gorenstein and not args.avoid_1212:
        raise UsageError("--gorenstein needs --avoid-1212 (no criterion for containing clans)")
    for c in generate_clans(args.p, args.q):
        if args.max_length is not None and clan_length(c) > args.max_length:
            continue
        if args.avoid_1212 and not avoids_1212(c):
            continue
        if args.smooth and not is_smooth(c):
            continue
        if args.lci and is_lci(c, args.conjectural).status is not Verdict.YES:
            continue
        if args.gorenstein and is_gorenstein(c).status is not Verdict.YES:
            continue
        record = _clan_fields(c, "clanklv.clan/1")
        record["length"] = clan_length(c)
        record["avoids_1212"] = avoids_1212(c)
        yield record


def cmd_classify(args) -> Iterable[dict]:
    yield classify_record(_clan(args.clan), args.conjectural)


_LOCI = {
    "singular": singular_locus,
    "non-lci": non_lci_locus,
    "non-gorenstein": non_gorenstein_locus,
}


def cmd_locus(args) -> Iterable[dict]:
    c = _clan(args.clan)
    if not avoids_1212(c):
        raise DomainError(f"{c} contains (1,2,1,2); loci are only computed for avoiding clans")
    components = _LOCI[args.kind](c)
    yield {
        **_clan_fields(c, "clanklv.locus/1"),
        "kind": args.kind,
        "components": [canonical_string(t) for t in components],
    }


def cmd_diagram(args) -> str:
    c = _clan(args.clan)
    overlay = None
    if args.tau:
        tau = _clan(args.tau)
        if (tau.p, tau.q) != (c.p, c.q):
            raise DomainError("tau and clan must have the same p and q")
        overlay = clan_diagram(tau)
    render = render_svg if args.format == "svg" else render_ascii
    text = render(clan_diagram(c), overlay)
    return text if text.endswith("\n") else text + "\n"


def cmd_kl(args) -> Iterable[dict]:
    x, w = _perm(args.x), _perm(args.w)
    if len(x) != len(w):
        raise DomainError("x and w must have the same size")
    if is_cograssmannian(w) and args.method != "recursion":
        try:
            poly, method = ls_kl(x, w), "ls"
        except ValueError:
            poly, method = QPoly(), "ls"
    else:
        poly, method = kl_poly(x, w), "recursion"
    yield {
        "schema": "clanklv.kl/1",
        "x": format_permutation(x),
        "w": format_permutation(w),
        "n": len(w),
        "method": method,
        "poly": poly.to_list(),
    }


def cmd_klv(args) -> Iterable[dict]:
    tau, gamma = _clan(args.tau), _clan(args.gamma)
    if (tau.p, tau.q) != (gamma.p, gamma.q):
        raise DomainError("tau and gamma must have the same p and q")
    method = args.method
    if method == "auto":
        method = "richardson" if avoids_1212(gamma) else "recursion"
    if method == "richardson":
        if not avoids_1212(gamma):
            raise DomainError(f"{gamma} contains (1,2,1,2); use --method recursion")
        try:
            poly = klv_richardson(tau, gamma)
        except ValueError:
            poly = QPoly()
        diagnostics = []
    else:
        module = KlvModule(gamma.p, gamma.q)
        poly = QPoly(module.row(gamma).get(tau, []))
        diagnostics = module.nonconstant_corrections
        if diagnostics and args.strict:
            raise KlvError(f"non-constant corrections: {diagnostics}")
    yield {
        "schema": "clanklv.klv/1",
        "tau": canonical_string(tau),
        "gamma": canonical_string(gamma),
        "p": gamma.p,
        "q": gamma.q,
        "method": method,
        "poly": poly.to_list(),
        "nonconstant_corrections": len(diagnostics),
    }


def cmd_klv_table(args) -> Iterable[dict]:
    if args.p < 0 or args.q < 0 or args.p + args.q < 1:
        raise UsageError("need p, q >= 0 and p + q >= 1")
    table = klv_table(args.p, args.q)
    if table.nonconstant_corrections and args.strict:
        raise KlvError(f"{len(table.nonconstant_corrections)} non-constant corrections")
    for record in table.records():
        yield {"schema": "clanklv.klv-table/1", "p": args.p, "q": args.q, **record}
    if args.check:
        discrepancies = 0
        for delta in table.clans:
            if not avoids_1212(delta):
                continue
            for tau, poly in table.rows[delta].items():
                other = klv_richardson(tau, delta)
                if other != poly:
                    discrepancies += 1
                    print(
                        f"discrepancy at tau={tau} delta={delta}: "
                        f"recursion {poly.to_list()} richardson {other.to_list()}",
                        file=sys.stderr,
                    )
        yield {
            "schema": "clanklv.klv-check/1",
            "p": args.p,
            "q": args.q,
            "checked": sum(len(table.rows[d]) for d in table.clans if avoids_1212(d)),
            "discrepancies": discrepancies,
            "nonconstant_corrections": len(table.nonconstant_corrections),
        }
        if discrepancies:
            raise ConsistencyError(f"{discrepancies} discrepancies between the two methods")


def _format_text(records: list[dict]) -> str:
    if not records:
        return ""
    columns: list[str] = []
    for record in records:
        for key in record:
            if key not in columns and key != "schema":
                columns.append(key)

    def cell(value) -> str:
        if isinstance(value, list):
            return "[" + ",".join(map(str, value)) + "]"
        return str(value).lower() if isinstance(value, bool) else str(value)

    rows = [[cell(r.get(col, "")) for col in columns] for r in records]
    widths = [max(len(col), *(len(row[k]) for row in rows)) for k, col in enumerate(columns)]
    lines = ["  ".join(col.ljust(w) for col, w in zip(columns, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="clanklv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_format(p, choices=("json", "text")):
        p.add_argument("--format", choices=choices, default=choices[0])
        return p

    gen = with_format(sub.add_parser("gen", help="enumerate (p,q)-clans"))
    gen.add_argument("p", type=int)
    gen.add_argument("q", type=int)
    gen.add_argument("--avoid-1212", action="store_true")
    gen.add_argument("--smooth", action="store_true")
    gen.add_argument("--lci", action="store_true")
    gen.add_argument("--conjectural", action="store_true")
    gen.add_argument("--gorenstein", action="store_true")
    gen.add_argument("--max-length", type=int)
    gen.set_defaults(run=cmd_gen)

    classify = with_format(sub.add_parser("classify", help="smooth / lci / Gorenstein verdicts"))
    classify.add_argument("clan")
    classify.add_argument("--conjectural", action="store_true")
    classify.set_defaults(run=cmd_classify)

    locus = with_format(sub.add_parser("locus", help="components of a singularity locus"))
    locus.add_argument("clan")
    locus.add_argument("--kind", choices=sorted(_LOCI), default="singular")
    locus.set_defaults(run=cmd_locus)

    diagram = with_format(sub.add_parser("diagram", help="draw a path diagram"), ("ascii", "svg"))
    diagram.add_argument("clan")
    diagram.add_argument("--tau")
    diagram.set_defaults(run=cmd_diagram)

    kl = with_format(sub.add_parser("kl", help="Kazhdan-Lusztig polynomial P_{x,w}"))
    kl.add_argument("x")
    kl.add_argument("w")
    kl.add_argument("--method", choices=("auto", "recursion"), default="auto")
    kl.set_defaults(run=cmd_kl)

    klv = with_format(sub.add_parser("klv", help="KLV polynomial P_{tau,gamma}"))
    klv.add_argument("tau")
    klv.add_argument("gamma")
    klv.add_argument("--method", choices=("auto", "richardson", "recursion"), default="auto")
    klv.add_argument("--strict", action="store_true")
    klv.set_defaults(run=cmd_klv)

    table = with_format(sub.add_parser("klv-table", help="all KLV polynomials for (p,q)"))
    table.add_argument("p", type=int)
    table.add_argument("q", type=int)
    table.add_argument("--check", action="store_true")
    table.add_argument("--strict", action="store_true")
    table.set_defaults(run=cmd_klv_table)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        result = args.run(args)
        if isinstance(result, str):
            out.write(result)
        elif args.format == "text":
            out.write(_format_text(list(result)))
        else:
            for record in result:
                out.write(json.dumps(record) + "\n")
    except UsageError as exc:
        print(f"clanklv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"clanklv: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ConsistencyError, KlvError) as exc:
        print(f"clanklv: consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
