"""Brute-force ground truth: asymmetric colorings by exhaustive search, the
exact distinguishing index of small graphs, and an isomorph-free census of
small connected graphs."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from .automorphism import LabeledGraph, is_asymmetric
from .errors import BudgetExceeded, TooLarge
from .graph import Graph, GraphStats, satisfies_hypothesis, stats

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
MAX_ENUM_N = 7


def search_asymmetric_colorings(
    g: Graph,
    r: int,
    *,
    rgs: bool = True,
    budget: int = DEFAULT_BUDGET,
    node_ok: Callable[[list, int], bool] | None = None,
) -> Iterator[list[int]]:
    """Asymmetric r-colorings of ``g`` (colours 0..r-1) in lexicographic order.

    Edges are assigned in edge-list order. A partial coloring is abandoned as
    soon as a non-trivial automorphism preserves it while mapping every
    unassigned edge to itself, because that automorphism then preserves every
    completion. With ``rgs`` only colorings whose colours first appear in the
    order 0, 1, 2, ... are produced (one per colour permutation class).
    ``node_ok(colors, depth)`` may veto the assignment just made at ``depth``.
    ``budget`` bounds the number of automorphism checks.
    """
    if r < 1:
        raise ValueError("need at least one colour")
    m = g.m
    colors: list[int] = [0] * m
    checks = 0

    def symmetric(depth):
        nonlocal checks
        checks += 1
        if checks > budget:
            raise BudgetExceeded(f"more than {budget} automorphism checks")
        labels = colors[:depth] + [r + i for i in range(depth, m)]
        return LabeledGraph.from_coloring(g, labels).first_symmetry() is not None

    def rec(depth, used):
        if symmetric(depth):
            return
        if depth == m:
            yield list(colors)
            return
        top = min(r, used + 1) if rgs else r
        for c in range(top):
            colors[depth] = c
            if node_ok is None or node_ok(colors, depth):
                yield from rec(depth + 1, max(used, c + 1))

    yield from rec(0, 0)


def exists_asymmetric_coloring(g: Graph, r: int, budget: int = DEFAULT_BUDGET) -> list[int] | None:
    """A witness r-coloring with trivial colour-preserving group, or None."""
    witness = next(search_asymmetric_colorings(g, r, budget=budget), None)
    if witness is not None:
        assert is_asymmetric(g, witness), "search returned a symmetric coloring"
    return witness


def distinguishing_index(g: Graph, max_r: int = 3, budget: int = DEFAULT_BUDGET) -> int | None:
    """Smallest r <= max_r admitting an asymmetric r-edge-coloring."""
    for r in range(1, max_r + 1):
        if exists_asymmetric_coloring(g, r, budget) is not None:
            return r
    return None


# -- isomorph-free enumeration -------------------------------------------


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)


@lru_cache(maxsize=None)
def _slots(n: int):
    # upper triangle in column order (graph6 order): (0,1), (0,2), (1,2), (0,3), ...
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    rows = np.array([p[0] for p in pairs], dtype=np.int64)
    cols = np.array([p[1] for p in pairs], dtype=np.int64)
    weights = np.array([1 << (len(pairs) - 1 - t) for t in range(len(pairs))], dtype=np.int64)
    return rows, cols, weights


def canonical_form(g: Graph) -> tuple[int, Graph]:
    """Minimum adjacency bit string over all n! relabelings, and that relabeling."""
    n = g.n
    if n > MAX_ENUM_N:
        raise TooLarge(f"canonical form by brute force needs n <= {MAX_ENUM_N}")
    if n <= 1:
        return 0, g
    adj = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = 1
    perms = _perm_table(n)
    rows, cols, weights = _slots(n)
    codes = adj[perms[:, rows], perms[:, cols]] @ weights
    best = int(np.argmin(codes))
    p = perms[best]
    edges = tuple(sorted((i, j) for i, j in zip(rows.tolist(), cols.tolist()) if adj[p[i], p[j]]))
    return int(codes[best]), Graph(n, edges)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g)[0] == canonical_form(h)[0]


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, ()),)
    found: dict[int, Graph] = {}
    # every connected graph has a non-cut vertex, so it arises from a
    # connected graph on n-1 vertices plus one vertex with a non-empty neighbourhood
    for smaller in _connected_classes(n - 1):
        for mask in range(1, 1 << (n - 1)):
            extra = tuple((i, n - 1) for i in range(n - 1) if mask >> i & 1)
            code, canon = canonical_form(Graph(n, tuple(sorted(smaller.edges + extra))))
            found.setdefault(code, canon)
    return tuple(found[c] for c in sorted(found))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs."""
    if n < 1:
        return iter(())
    if n > MAX_ENUM_N:
        raise TooLarge(f"exhaustive enumeration supports n <= {MAX_ENUM_N}")
    return iter(_connected_classes(n))


# -- census ---------------------------------------------------------------


@dataclass(frozen=True)
class CensusRow:
    graph: Graph
    stats: GraphStats
    hypothesis: bool
    dprime: int | None


def census(
    n_max: int,
    hypothesis_only: bool = False,
    *,
    n_min: int = 2,
    budget: int = DEFAULT_BUDGET,
) -> list[CensusRow]:
    """Exact distinguishing index of every connected graph with n_min..n_max vertices.

    Colours are tried up to ``max(Delta, 3)``, which bounds the index of
    every connected graph except K2 (reported as None). Raises AssertionError
    if a graph meeting the degree hypothesis needs more than three colours.
    """
    rows = []
    for n in range(n_min, n_max + 1):
        for g in enumerate_connected_graphs(n):
            hyp = satisfies_hypothesis(g)
            if hypothesis_only and not hyp:
                continue
            s = stats(g)
            d = distinguishing_index(g, max(s.Delta, 3), budget)
            if hyp:
                assert d is not None and d <= 3, f"hypothesis graph {g.edges} has D' = {d}"
            rows.append(CensusRow(g, s, hyp, d))
        log.info("census: finished n=%d (%d rows so far)", n, len(rows))
    return rows
