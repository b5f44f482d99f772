from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import strategies as st

from asymcolor.families import complete, complete_bipartite, cycle, circulant, hypercube, petersen
from asymcolor.graph import Graph, build_graph, connected_components, satisfies_hypothesis

# filled by test_acceptance, printed once at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def naive_automorphisms(g: Graph, coloring=None):
    """Every colour-preserving vertex permutation, by trying all n! of them."""
    col = {e: (None if coloring is None else int(coloring[i])) for i, e in enumerate(g.edges)}
    out = []
    for p in itertools.permutations(range(g.n)):
        ok = True
        for (u, v), c in col.items():
            e = (min(p[u], p[v]), max(p[u], p[v]))
            if col.get(e, "missing") != c:
                ok = False
                break
        if ok:
            out.append(p)
    return out


def relabel(g: Graph, perm):
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def family_corpus():
    """Named hypothesis graphs: (label, graph)."""
    out = []
    out += [(f"K{n}", complete(n)) for n in range(3, 11)]
    out += [
        (f"K{a},{b}", complete_bipartite(a, b))
        for a in range(1, 9)
        for b in range(a, min(2 * a, 8) + 1)
        if satisfies_hypothesis(complete_bipartite(a, b))
    ]
    out += [(f"C{n}", cycle(n)) for n in range(3, 21)]
    for n in range(8, 17):
        for jumps in [(1, 2), (1, 3), (1, 2, 3), (2, 3), (1, n // 2)]:
            g = circulant(n, jumps)
            if satisfies_hypothesis(g) and 2 * max(jumps) <= n:
                out.append((f"circ{n}{list(jumps)}", g))
    out += [("Q3", hypercube(3)), ("Q4", hypercube(4)), ("Petersen", petersen())]
    return out


def random_corpus(count=200, seed=2024, n_max=14):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, n_max)
        p = rng.uniform(0.2, 0.9)
        g = build_graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])
        if satisfies_hypothesis(g):
            out.append((f"random#{len(out)}", g))
    return out


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


connected_graphs = graphs().filter(lambda g: len(connected_components(g)) == 1)


@pytest.fixture(scope="session")
def families():
    return family_corpus()
