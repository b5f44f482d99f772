"""Command line front end: ``asymcolor <command> ...``.

Exit codes: 0 success, 1 verification found a symmetry, 2 graph outside the
degree condition, 3 the procedure left a symmetry, 4 an invariant check
failed (``--paranoid``), 64 usage error, 65 malformed input, 66 unreadable
input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import colorer, oracle
from .automorphism import asymmetry_witness
from .errors import (
    AsymColorError,
    BadParams,
    BudgetExceeded,
    ConditionViolated,
    HypothesisViolated,
    ParseError,
    PartialColoring,
    ProofGapWitness,
    TooLarge,
)
from .families import FAMILIES, generate
from .formats import ColoringDocument, emit_dot, encode_graph6, parse_edgelist, parse_graph6
from .graph import Graph

EXIT_OK = 0
EXIT_SYMMETRIC = 1
EXIT_HYPOTHESIS = 2
EXIT_PROOF_GAP = 3
EXIT_CONDITION = 4
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_NOINPUT = 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse graph text; ``auto`` takes a single whitespace-free token as graph6."""
    if fmt == "auto":
        body = text.strip()
        single = body and len(body.split()) == 1
        fmt = "graph6" if single and not body.startswith(("n=", "#")) else "edgelist"
    if fmt == "graph6":
        return parse_graph6(text)
    return parse_edgelist(text)


# -- self test suites ------------------------------------------------------


def palette_checks() -> list[tuple[str, bool]]:
    from .palette import (
        is_uniform,
        split_palette,
        uniform_palette_count,
        uniform_palette_seqs,
        uniform_palettes,
    )
    out = []
    counts_ok = all(
        len(uniform_palettes(k)) == uniform_palette_count(k) >= k + 1
        and all(is_uniform(p) and 2 * p.a <= k for p in uniform_palettes(k))
        for k in range(1, 41)
    )
    out.append(("uniform palette counts, k <= 40", counts_ok))
    seqs_ok = all(
        len(set(uniform_palette_seqs(sizes))) >= sum(sizes) + 1
        for sizes in [(1,), (2, 1), (3, 3), (1, 1, 1), (4, 2, 1), (2, 2, 2, 2)]
    )
    out.append(("palette sequence counts", seqs_ok))
    split_ok = True
    for k in range(1, 11):
        for p in uniform_palettes(k):
            for first in range(1, k):
                parts = split_palette(p, [first, k - first])
                split_ok &= all(is_uniform(q) for q in parts) and parts[0] + parts[1] == p
    out.append(("two-part splits, k <= 10", split_ok))
    return out


def base_coloring_checks() -> list[tuple[str, bool]]:
    out = []
    for n in range(3, 9):
        g = generate("complete", [n])
        col = list(colorer.complete_graph_coloring(n))
        ok = asymmetry_witness(g, col) is None and len(set(col)) == (3 if n <= 5 else 2)
        out.append((f"complete graph base coloring, n={n}", ok))
    for family, params in [("cycle", [5]), ("complete_bipartite", [2, 4]), ("petersen", []), ("hypercube", [3])]:
        g = generate(family, params)
        col = colorer.color_graph(g, paranoid=True)
        reds = colorer.all_red_vertices(g, col)
        ok = asymmetry_witness(g, col) is None and reds == [colorer.choose_root(g)]
        out.append((f"procedure on {family} {' '.join(map(str, params))}".rstrip(), ok))
    return out


# -- commands ----------------------------------------------------------------


def cmd_color(args, out) -> int:
    g = load_graph(_read(args.file), args.format)
    try:
        col = colorer.color_graph(g, paranoid=args.paranoid)
    except HypothesisViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ProofGapWitness as exc:
        print(json.dumps({"proof_gap": True, "graph6": encode_graph6(g), "witness": list(exc.witness),
                          "coloring": [c.label for c in exc.coloring]}), file=out)
        return EXIT_PROOF_GAP
    except ConditionViolated as exc:
        print(f"invariant check failed: {exc.report}", file=sys.stderr)
        return EXIT_CONDITION
    if args.out == "dot":
        out.write(emit_dot(g, col))
    else:
        doc = ColoringDocument.from_coloring(
            g, col, root=colorer.choose_root(g), version=colorer.VERSION, verified=True
        )
        out.write(doc.to_json())
    return EXIT_OK


def cmd_verify(args, out) -> int:
    g = load_graph(_read(args.graph), args.format)
    doc = ColoringDocument.from_json(_read(args.coloring))
    col = doc.coloring_for(g)
    witness = asymmetry_witness(g, col)
    if witness is None:
        print("asymmetric", file=out)
        return EXIT_OK
    print("symmetric: " + " ".join(map(str, witness)), file=out)
    return EXIT_SYMMETRIC


def cmd_dprime(args, out) -> int:
    g = load_graph(_read(args.file), args.format)
    d = oracle.distinguishing_index(g, args.max_colors, args.budget)
    print(d if d is not None else f"none <= {args.max_colors}", file=out)
    return EXIT_OK


def cmd_census(args, out) -> int:
    rows = oracle.census(args.n, args.hypothesis_only, n_min=args.n_min, budget=args.budget)
    for row in rows:
        d = "none" if row.dprime is None else row.dprime
        hyp = "yes" if row.hypothesis else "no"
        print(f"{encode_graph6(row.graph)} {row.stats.delta} {row.stats.Delta} {hyp} {d}", file=out)
    return EXIT_OK


def cmd_gen(args, out) -> int:
    g = generate(args.family, args.params)
    print(encode_graph6(g), file=out)
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    failed = 0
    for name, ok in palette_checks() + base_coloring_checks():
        print(f"{'PASS' if ok else 'FAIL'}  {name}", file=out)
        failed += not ok
    print(f"{failed} failure(s)", file=out)
    return 1 if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="asymcolor", description="Asymmetric 3-edge-colorings of graphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = dict(choices=["auto", "graph6", "edgelist"], default="auto")

    c = sub.add_parser("color", help="color a graph with the constructive procedure")
    c.add_argument("file", help="graph file, '-' for stdin")
    c.add_argument("--format", **fmt)
    c.add_argument("--out", choices=["json", "dot"], default="json")
    c.add_argument("--paranoid", action="store_true", help="check invariants after every step")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check that a coloring has no symmetry")
    v.add_argument("graph")
    v.add_argument("coloring", help="JSON coloring document")
    v.add_argument("--format", **fmt)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dprime", help="exact distinguishing index by search")
    d.add_argument("file")
    d.add_argument("--format", **fmt)
    d.add_argument("--max-colors", type=int, default=3)
    d.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    d.set_defaults(func=cmd_dprime)

    s = sub.add_parser("census", help="distinguishing index of all small connected graphs")
    s.add_argument("--n", type=int, required=True, help="largest vertex count")
    s.add_argument("--n-min", type=int, default=2)
    s.add_argument("--hypothesis-only", action="store_true")
    s.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    s.set_defaults(func=cmd_census)

    g = sub.add_parser("gen", help="print a family member as graph6")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("params", nargs="*")
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("selftest", help="palette and base coloring checks")
    t.set_defaults(func=cmd_selftest)
    return p


def run_cli(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args, out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    except BadParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, PartialColoring, TooLarge, BudgetExceeded, AsymColorError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
