"""Command-line surface: build | homology | morse | blocks | verify | table.

Exit codes: 0 all good, 1 a verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import reference_tables
from .blocks import enumerate_m1_unmatched
from .complexes import to_json_dict, total_cut_complex
from .graphs import has_independent_set, parse_spec
from .homology import total_cut_homology
from .morse import element_matching_sequence, homotopy_summary, verify_acyclic
from .verify import (DEFAULT_TIMEOUT, render_markdown_table, reports_to_csv,
                     reports_to_json_lines, suite_paper, table_sweep)


def _parse_range(text: str) -> list[int]:
    """Accept "a..b" or a comma list of ints."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",")]


def _default_timeout() -> float:
    return float(os.environ.get("TOTALCUT_TIMEOUT", DEFAULT_TIMEOUT))


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="totalcut",
        description="Total cut complexes: construction, Morse matchings, "
                    "exact homology and table reproduction.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, method=True):
        p.add_argument("--format", choices=("md", "json", "csv"), default="md")
        if method:
            p.add_argument("--method", choices=("auto", "direct", "dual"),
                           default="auto")

    p = sub.add_parser("build", help="print the facets of a total cut complex")
    p.add_argument("spec")
    p.add_argument("--k", type=int, required=True)
    add_common(p, method=False)

    p = sub.add_parser("homology", help="reduced integer homology profile")
    p.add_argument("spec")
    p.add_argument("--k", type=int, required=True)
    add_common(p)

    p = sub.add_parser("morse", help="element matching sequence summary")
    p.add_argument("spec")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--order", required=True,
                   help="comma list or a..b range of vertices")
    add_common(p, method=False)

    p = sub.add_parser("blocks", help="block words of first-matching fixed faces")
    p.add_argument("spec")
    p.add_argument("--k", type=int, required=True)
    add_common(p, method=False)

    p = sub.add_parser("verify", help="run a named check suite")
    p.add_argument("--suite", choices=("paper",), default="paper")
    p.add_argument("--timeout", type=float, default=None)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--no-stretch", action="store_true",
                   help="skip the large stretch table rows")
    p.add_argument("--only", default=None,
                   help="substring filter on check names")
    add_common(p)

    p = sub.add_parser("table", help="reproduce a published homology table")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", required=True, help="range a..b or comma list")
    p.add_argument("--n", required=True, help="range a..b or comma list")
    p.add_argument("--timeout", type=float, default=None)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    add_common(p)
    return ap


def _cmd_build(args) -> int:
    g = parse_spec(args.spec)
    c = total_cut_complex(g, args.k)
    if args.format == "json":
        print(json.dumps({"schema": "totalcut/1", **to_json_dict(c)}, sort_keys=True))
        return 0
    if c.kind == "void":
        print("void")
    else:
        for f in c.facet_sets():
            print(" ".join(str(v) for v in f))
    return 0


def _cmd_homology(args) -> int:
    g = parse_spec(args.spec)
    if not 1 <= args.k <= g.n or not has_independent_set(g, args.k):
        if args.format == "json":
            print(json.dumps({"schema": "totalcut/1", "n": g.n, "k": args.k,
                              "profile": "void", "method": None}, sort_keys=True))
        else:
            print("void")
        return 0
    profile, used = total_cut_homology(g, args.k, args.method)
    if args.format == "json":
        print(json.dumps({"schema": "totalcut/1", "n": g.n, "k": args.k,
                          "profile": profile.to_json_dict(), "method": used},
                         sort_keys=True))
        return 0
    if profile.is_trivial():
        print("all reduced homology groups are zero")
    else:
        for d, b, t in profile.groups:
            terms = ([f"Z^{b}" if b > 1 else "Z"] if b else []) + [f"Z/{q}" for q in t]
            print(f"{d}: " + " + ".join(terms))
    return 0


def _cmd_morse(args) -> int:
    g = parse_spec(args.spec)
    c = total_cut_complex(g, args.k)
    if c.kind == "void":
        print("totalcut: complex is void, nothing to match", file=sys.stderr)
        return 2
    order = _parse_range(args.order)
    result = element_matching_sequence(c, order)
    acyclic = verify_acyclic(result)
    summary = homotopy_summary(result) if acyclic else None
    if args.format == "json":
        print(json.dumps({
            "schema": "totalcut/1",
            "order": list(result.order),
            "critical": [list(f) for f in result.critical],
            "counts": {str(d): c for d, c in sorted(result.critical_counts().items())},
            "acyclic": acyclic,
            "summary": summary.description if summary else None,
        }, sort_keys=True))
        return 0
    print(f"order: {','.join(str(v) for v in result.order)}")
    print(f"pairs: {len(result.pairs)}")
    print(f"critical ({len(result.critical)}):")
    for f in result.critical:
        print("  " + (" ".join(str(v) for v in f) if f else "(empty face)"))
    print(f"acyclic: {acyclic}")
    if summary:
        print(f"summary: {summary.description}")
    return 0


def _cmd_blocks(args) -> int:
    g = parse_spec(args.spec)
    items = list(enumerate_m1_unmatched(g, args.k))
    if args.format == "json":
        print(json.dumps({
            "schema": "totalcut/1",
            "n": g.n, "k": args.k,
            "words": [{"word": str(w), "face": list(f)} for w, f in items],
        }, sort_keys=True))
        return 0
    for w, f in items:
        print(f"{w}  face {' '.join(str(v) for v in f)}")
    print(f"total: {len(items)}")
    return 0


def _cmd_verify(args) -> int:
    timeout = args.timeout if args.timeout is not None else _default_timeout()
    reports = suite_paper(timeout=timeout, threads=args.threads,
                          method=args.method,
                          include_stretch=not args.no_stretch,
                          only=args.only)
    if args.format == "json":
        print(reports_to_json_lines(reports))
    elif args.format == "csv":
        print(reports_to_csv(reports), end="")
    else:
        for r in reports:
            print(r.one_line())
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for r in reports:
            counts[r.verdict] += 1
        print(f"total: {counts['pass']} pass, {counts['fail']} fail, "
              f"{counts['skipped']} skipped")
    return 1 if any(r.verdict == "fail" for r in reports) else 0


def _cmd_table(args) -> int:
    timeout = args.timeout if args.timeout is not None else _default_timeout()
    p_values = _parse_range(args.p)
    n_values = _parse_range(args.n)
    reports = table_sweep(args.k, p_values, n_values, method=args.method,
                          timeout=timeout, threads=args.threads)
    if args.format == "json":
        print(reports_to_json_lines(reports))
    elif args.format == "csv":
        print(reports_to_csv(reports), end="")
    else:
        print(render_markdown_table(args.k, reports))
    return 1 if any(r.verdict == "fail" for r in reports) else 0


_DISPATCH = {
    "build": _cmd_build,
    "homology": _cmd_homology,
    "morse": _cmd_morse,
    "blocks": _cmd_blocks,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"totalcut: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
