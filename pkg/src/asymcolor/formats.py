"""Reading and writing graphs and colorings: edge lists, graph6, DOT, JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .colors import UNCOLORED, Color
from .errors import ParseError, PartialColoring
from .graph import Graph, build_graph

# -- edge lists -----------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """``u v`` per line; ``#`` starts a comment, blank lines are skipped.

    The vertex count is one more than the largest vertex seen, unless a
    header line ``n=<k>`` fixes it.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.replace(" ", "").startswith("n="):
            if n is not None or edges:
                raise ParseError("the n=<k> header must come first", lineno)
            value = line.replace(" ", "")[2:]
            if not value.isdigit():
                raise ParseError(f"bad vertex count {value!r}", lineno)
            n = int(value)
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected two non-negative integers, got {raw.strip()!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if n is not None and max(u, v) >= n:
            raise ParseError(f"vertex {max(u, v)} outside 0..{n - 1}", lineno)
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return build_graph(n, edges)


def format_edgelist(g: Graph) -> str:
    lines = [f"n={g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# -- graph6 ---------------------------------------------------------------

_SMALL_N = 62
_MEDIUM_N = 258047
_LARGE_N = 68719476735


def _encode_n(n: int) -> str:
    if n < 0 or n > _LARGE_N:
        raise ValueError(f"graph6 cannot encode n={n}")
    if n <= _SMALL_N:
        return chr(n + 63)
    if n <= _MEDIUM_N:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    """graph6 string of ``g`` (no header, no trailing newline)."""
    n = g.n
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edge_index else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start:start + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _encode_n(n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise ParseError("graph6 characters must lie in '?'..'~'")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated graph6 size field")
        n, pos = 0, 8
        for v in vals[2:8]:
            n = n << 6 | v
    else:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size field")
        n, pos = 0, 4
        for v in vals[1:4]:
            n = n << 6 | v
    nbits = n * (n - 1) // 2
    body = vals[pos:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    edges = []
    t = 0
    for j in range(1, n):
        for i in range(j):
            if body[t // 6] >> (5 - t % 6) & 1:
                edges.append((i, j))
            t += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("non-zero padding bits in graph6 string")
    return build_graph(n, edges)


# -- DOT ------------------------------------------------------------------


def _require_total(g: Graph, coloring: Sequence[int]) -> list[Color]:
    if len(coloring) != g.m:
        raise PartialColoring(f"coloring has {len(coloring)} entries for {g.m} edges")
    colors = [Color(c) for c in coloring]
    missing = [g.edges[i] for i, c in enumerate(colors) if c is UNCOLORED]
    if missing:
        raise PartialColoring(f"{len(missing)} edges are uncolored, e.g. {missing[0]}")
    return colors


def emit_dot(g: Graph, coloring: Sequence[int], name: str = "G") -> str:
    colors = _require_total(g, coloring)
    out = [f"graph {name} {{"]
    out += [f'  {v} [label="{v}"];' for v in range(g.n)]
    out += [f"  {u} -- {v} [color={c.label}];" for (u, v), c in zip(g.edges, colors)]
    out.append("}")
    return "\n".join(out) + "\n"


# -- JSON coloring documents ------------------------------------------------


@dataclass
class ColoringDocument:
    n: int
    edges: list[tuple[int, int, str]]
    meta: dict = field(default_factory=dict)

    @classmethod
    def from_coloring(cls, g: Graph, coloring, *, root=None, version=None, verified=None):
        colors = _require_total(g, coloring)
        edges = [(u, v, c.label) for (u, v), c in zip(g.edges, colors)]
        meta = {"root": root, "version": version, "verified": verified}
        return cls(g.n, edges, meta)

    def to_json(self) -> str:
        # one edge per line keeps documents diffable
        rows = ",\n".join("    " + json.dumps(list(e)) for e in self.edges)
        edges = "[\n" + rows + "\n  ]" if rows else "[]"
        return (
            "{\n"
            f'  "n": {self.n},\n'
            f'  "edges": {edges},\n'
            f'  "meta": {json.dumps(self.meta, sort_keys=True)}\n'
            "}\n"
        )

    @classmethod
    def from_json(cls, text: str) -> "ColoringDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise ParseError("coloring document needs 'n' and 'edges'")
        n = data["n"]
        if not isinstance(n, int) or n < 0:
            raise ParseError(f"bad vertex count {n!r}")
        edges = []
        for item in data["edges"]:
            if not (isinstance(item, list) and len(item) == 3):
                raise ParseError(f"edge entry {item!r} is not [u, v, color]")
            u, v, name = item
            if not (isinstance(u, int) and isinstance(v, int) and isinstance(name, str)):
                raise ParseError(f"edge entry {item!r} is not [u, v, color]")
            try:
                Color.from_name(name)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
            edges.append((u, v, name.strip().lower()))
        return cls(n, edges, dict(data.get("meta") or {}))

    def graph(self) -> Graph:
        return build_graph(self.n, [(u, v) for u, v, _ in self.edges])

    def coloring_for(self, g: Graph) -> list[Color]:
        """Colors in the edge order of ``g``; the edge sets must agree exactly."""
        if self.n != g.n:
            raise ParseError(f"document has n={self.n}, graph has n={g.n}")
        by_edge = {}
        for u, v, name in self.edges:
            key = (min(u, v), max(u, v))
            if key in by_edge:
                raise ParseError(f"edge {key} listed twice")
            by_edge[key] = Color.from_name(name)
        if set(by_edge) != set(g.edges):
            extra = sorted(set(by_edge) - set(g.edges))
            lost = sorted(set(g.edges) - set(by_edge))
            raise ParseError(f"edge sets differ (extra {extra[:3]}, missing {lost[:3]})")
        return [by_edge[e] for e in g.edges]
