"""Constructive asymmetric 3-edge-coloring for connected graphs with
``2 * delta >= Delta`` (other than K2).

The procedure roots the graph at a minimum-degree vertex ``x0``, colours its
edges red, and then walks the orbits of the colour-preserving stabilizer of
``x0`` level by level. Processing an orbit colours all of its uncoloured
edges: inner edges make each component of the orbit rigid, and the outgoing
edges of chosen representatives get pairwise different sequences of uniform
palettes, which fixes every vertex of the orbit while keeping the new orbits
below small enough to be processed in turn. Orbits are recomputed exactly by
the automorphism engine after every batch of colouring; the bookkeeping here
only decides which colours go where.

Invariants kept after every step (checked in paranoid mode):

* c1: every fully coloured vertex is fixed;
* c2: every non-trivial orbit with ``t`` coloured edges per vertex has at most
  ``delta - t + 1`` vertices;
* c3: no vertex other than ``x0`` has all of its edges coloured red.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .automorphism import OrbitPartition, asymmetry_witness, stabilizer_orbits
from .colors import BLUE, GREEN, PAINTS, RED, UNCOLORED, Color, uncolored
from .errors import ConditionViolated, HypothesisViolated, PaletteExhausted, ProofGapWitness
from .graph import (
    Graph,
    LevelStructure,
    bfs_levels,
    build_graph,
    connected_components,
    induced_subgraph,
    satisfies_hypothesis,
    stats,
)
from .oracle import search_asymmetric_colorings
from .palette import (
    PaletteSeq,
    palette_to_colors,
    special_palettes,
    split_palette,
    uniform_palettes,
)

VERSION = "1"


@dataclass
class OrbitStats:
    t: int  # coloured edges per vertex
    r: int  # inner edges per vertex
    k: int  # uncoloured edges leaving the orbit, per vertex
    d: int
    m: int  # components of the induced subgraph
    n_comp: int


@dataclass
class RefinementStep:
    source_orbit: tuple[int, ...]
    level: int
    stats: OrbitStats
    chosen: list[int]
    targets: list[tuple[int, ...]]
    sizes: list[int]
    order: list[int] = field(default_factory=list)
    assigned: dict[int, PaletteSeq] = field(default_factory=dict)
    refined: list[tuple[int, ...]] = field(default_factory=list)
    swept: list[int] = field(default_factory=list)
    terminal: list[tuple[int, ...]] = field(default_factory=list)


@dataclass
class ConditionReport:
    c1: bool
    c2: bool
    c3: bool
    ineq1: bool = True
    ineq2: bool = True
    violating_orbit: tuple[int, ...] | None = None
    step_index: int = 0
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.c1 and self.c2 and self.c3 and self.ineq1 and self.ineq2


@dataclass
class ProcState:
    graph: Graph
    root: int
    levels: LevelStructure
    delta: int
    coloring: list[Color]
    processed: set[int] = field(default_factory=set)
    orbits: OrbitPartition | None = None
    paranoid: bool = False
    step_index: int = 0
    steps: list[RefinementStep] = field(default_factory=list)
    reports: list[ConditionReport] = field(default_factory=list)

    def color(self, u: int, v: int) -> Color:
        return self.coloring[self.graph.edge_id(u, v)]

    def paint(self, u: int, v: int, c: Color) -> None:
        self.coloring[self.graph.edge_id(u, v)] = c

    def open_nbrs(self, v: int) -> list[int]:
        """Neighbours joined to ``v`` by an uncoloured edge."""
        return [w for w in self.graph.adj[v] if self.color(v, w) is UNCOLORED]

    def colored_count(self, v: int) -> int:
        return sum(1 for w in self.graph.adj[v] if self.color(v, w) is not UNCOLORED)

    def has_nonred(self, v: int) -> bool:
        return any(self.color(v, w) in (BLUE, GREEN) for w in self.graph.adj[v])

    def refresh_orbits(self) -> OrbitPartition:
        self.orbits = stabilizer_orbits(self.graph, self.coloring, self.root)
        return self.orbits


# -- complete graphs --------------------------------------------------------


def _complete(n: int) -> Graph:
    return build_graph(n, itertools.combinations(range(n), 2))


@lru_cache(maxsize=None)
def complete_graph_coloring(n: int) -> tuple[Color, ...]:
    """Asymmetric coloring of K_n (edges in sorted order), n >= 3.

    Every vertex meets a non-green edge. K3 gets red/blue/green; K4 and K5 the
    lexicographically first 3-coloring with that property; n >= 6 the
    lexicographically first asymmetric red/blue coloring.
    """
    if n < 3:
        raise ValueError("K_n has an asymmetric coloring only for n >= 3")
    if n == 3:
        return (RED, BLUE, GREEN)
    g = _complete(n)
    if n >= 6:
        found = next(search_asymmetric_colorings(g, 2))
        return tuple(Color(c) for c in found)

    def node_ok(colors, depth):
        # a vertex whose last edge was just assigned must see a non-green edge
        u, v = g.edges[depth]
        for x in (u, v):
            ids = [g.edge_id(x, y) for y in g.adj[x]]
            if max(ids) == depth and all(colors[i] == GREEN for i in ids):
                return False
        return True

    found = next(search_asymmetric_colorings(g, 3, rgs=False, node_ok=node_ok))
    return tuple(Color(c) for c in found)


_COLOR_PERMS = [dict(zip(PAINTS, p)) for p in itertools.permutations(PAINTS)]


def _paint_clique(state: ProcState, block: Sequence[int]) -> None:
    """Colour a complete uncoloured block with the K_n base coloring.

    The colour classes are permuted, if needed, so that every vertex of the
    block ends up with a non-red edge (swapping red and green always works).
    """
    verts = sorted(block)
    base = complete_graph_coloring(len(verts))
    pairs = list(itertools.combinations(verts, 2))
    for perm in _COLOR_PERMS:
        seen = {v: state.has_nonred(v) for v in verts}
        for (u, v), c in zip(pairs, base):
            if perm[c] is not RED:
                seen[u] = seen[v] = True
        if all(seen.values()):
            break
    for (u, v), c in zip(pairs, base):
        state.paint(u, v, perm[c])


# -- state and bookkeeping --------------------------------------------------


def choose_root(g: Graph) -> int:
    delta = stats(g).delta
    return next(v for v in range(g.n) if g.degree(v) == delta)


def new_state(g: Graph, paranoid: bool = False) -> ProcState:
    root = choose_root(g)
    return ProcState(
        graph=g,
        root=root,
        levels=bfs_levels(g, root),
        delta=stats(g).delta,
        coloring=uncolored(g.m),
        paranoid=paranoid,
    )


def orbit_stats(state: ProcState, block: Sequence[int]) -> OrbitStats:
    g = state.graph
    inside = set(block)
    v = block[0]
    r = sum(1 for w in g.adj[v] if w in inside)
    t = state.colored_count(v)
    k = sum(1 for w in state.open_nbrs(v) if w not in inside)
    comps = connected_components(g, within=block)
    return OrbitStats(t=t, r=r, k=k, d=g.degree(v), m=len(comps), n_comp=len(comps[0]))


def _after_step(state: ProcState) -> None:
    g = state.graph
    for v in range(g.n):
        if not state.open_nbrs(v):
            state.processed.add(v)
    state.refresh_orbits()
    state.step_index += 1
    if state.paranoid:
        report = check_conditions(state, recompute=False)
        state.reports.append(report)
        if not report.ok:
            raise ConditionViolated(report)


def initial_step(state: ProcState) -> ProcState:
    """Colour every edge at the root red; the root counts as processed."""
    x0 = state.root
    for w in state.graph.adj[x0]:
        state.paint(x0, w, RED)
    state.processed.add(x0)
    _after_step(state)
    return state


def next_orbit(state: ProcState) -> tuple[int, ...] | None:
    """Largest orbit with uncoloured edges on the lowest such level."""
    if state.orbits is None:
        state.refresh_orbits()
    best = None
    for block in state.orbits.blocks:
        if not any(state.open_nbrs(v) for v in block):
            continue
        key = (state.levels.level_of[block[0]], -len(block), block[0])
        if best is None or key < best[0]:
            best = (key, block)
    return None if best is None else best[1]


# -- one step -------------------------------------------------------------


def assign_palettes(step: RefinementStep) -> RefinementStep:
    """Give the representatives pairwise different palette sequences.

    The target with the most edges per vertex (``k1``) draws from all
    uniform palettes; every other target draws from its two special palettes.
    Sequences are taken in enumeration order, so the first one, given to the
    first representative, is red-free. With K2 components one more sequence
    goes to all the non-representatives.
    """
    st = step.stats
    sizes = step.sizes
    k = sum(sizes)
    m = len(step.chosen)
    need = m + 1 if st.n_comp == 2 else m
    bound = k if st.n_comp == 2 else k + 1
    if m > bound:
        raise ConditionViolated(
            ConditionReport(
                True, True, True, ineq1=False, violating_orbit=step.source_orbit,
                detail=f"{m} components but only {k} outgoing edges per vertex",
            )
        )
    order = sorted(range(len(sizes)), key=lambda i: (-sizes[i], i))
    choices = [uniform_palettes(sizes[order[0]])]
    choices += [special_palettes(sizes[i]) for i in order[1:]]
    seqs = list(itertools.islice(itertools.product(*choices), need))
    if len(seqs) < need:
        raise PaletteExhausted(f"need {need} palette sequences for sizes {sizes}, have {len(seqs)}")

    def in_target_order(seq):
        out = [None] * len(sizes)
        for pos, i in enumerate(order):
            out[i] = seq[pos]
        return tuple(out)

    seqs = [in_target_order(s) for s in seqs]
    step.order = order
    step.assigned = {}
    for x, seq in zip(step.chosen, seqs):
        step.assigned[x] = seq
    step.assigned.update({x: None for x in step.source_orbit if x not in step.assigned})
    for x in step.source_orbit:
        if step.assigned[x] is None:
            step.assigned[x] = seqs[m] if st.n_comp == 2 else seqs[0]
    return step


def color_inner_edges(state: ProcState, orbit: Sequence[int]) -> ProcState:
    """Make every component of the orbit rigid (components of 3+ vertices)
    or colour the single inner edge red (K2 components)."""
    g = state.graph
    for comp in connected_components(g, within=orbit):
        if len(comp) == 1:
            continue
        if len(comp) == 2:
            state.paint(comp[0], comp[1], RED)
            continue
        sub, relabel = induced_subgraph(g, comp)
        back = {i: v for v, i in relabel.items()}
        sub_colors = _color_component(sub, state.paranoid)
        for (a, b), c in zip(sub.edges, sub_colors):
            state.paint(back[a], back[b], c)
    return state


@lru_cache(maxsize=256)
def _color_component(sub: Graph, paranoid: bool) -> tuple[Color, ...]:
    return tuple(color_graph(sub, paranoid=paranoid))


def _arrange(
    state: ProcState,
    cls: Sequence[int],
    colors: list[Color],
    orbit: set[int],
    target: int | None = None,
) -> dict[int, Color]:
    """Place a class's colours on its vertices (edges from one source vertex).

    Any placement keeps the palette; this one (a) gives ``target`` a non-red
    colour, (b) gives the two ends of an isolated uncoloured edge inside the
    class different colours, and (c) hands non-red colours first to vertices
    that do not yet have a non-red edge.
    """
    left = Counter(colors)
    out: dict[int, Color] = {}

    def take(prefer_nonred: bool, avoid: Color | None = None) -> Color:
        pool = [c for c in PAINTS if left[c] > 0 and c is not avoid] or [
            c for c in PAINTS if left[c] > 0
        ]
        if prefer_nonred and any(c is not RED for c in pool):
            pool = [c for c in pool if c is not RED]
        c = max(pool, key=lambda c: (left[c], -c))
        left[c] -= 1
        return c

    if target is not None:
        out[target] = take(True)

    members = set(cls)
    pairs = []
    for v in cls:
        rest = [w for w in state.open_nbrs(v) if w not in orbit]
        if len(rest) == 1 and rest[0] in members and v < rest[0]:
            w = rest[0]
            back = [x for x in state.open_nbrs(w) if x not in orbit]
            if back == [v]:
                pairs.append((v, w))
    for v, w in pairs:
        if v in out or w in out:
            continue
        first = take(False)
        second = take(False, avoid=first)
        if first is RED and not state.has_nonred(v):
            first, second = second, first
        out[v], out[w] = first, second

    needy = [v for v in cls if v not in out and not state.has_nonred(v)]
    for v in needy:
        out[v] = take(True)
    for v in cls:
        if v not in out:
            out[v] = take(False)
    return out


def _split_by_color(cls: Sequence[int], x: int, state: ProcState) -> list[tuple[int, ...]]:
    groups: dict[Color, list[int]] = {}
    for v in cls:
        groups.setdefault(state.color(x, v), []).append(v)
    return [tuple(groups[c]) for c in sorted(groups)]


def _color_target(state: ProcState, step: RefinementStep, i: int) -> None:
    g = state.graph
    orbit = set(step.source_orbit)
    q = step.targets[i]
    # classes of q: same neighbourhood in the orbit; each is joined completely
    # to its neighbourhood, and every refinement below keeps that property
    by_nbhd: dict[frozenset, list[int]] = {}
    for v in q:
        by_nbhd.setdefault(frozenset(w for w in g.adj[v] if w in orbit), []).append(v)
    classes = sorted((tuple(c) for c in by_nbhd.values()), key=lambda c: c[0])

    sweep = (
        step.sizes[i] > 1
        and all(w in orbit for v in q for w in state.open_nbrs(v))
        and state.colored_count(q[0]) > 0
    )
    if sweep:
        step.swept.append(i)
    pending = sorted(orbit)
    first = step.chosen[0]

    while pending:
        target = None
        if first in pending:
            x = first
        elif sweep and any(not state.has_nonred(v) for v in q):
            x = None
            for y in sorted(v for v in q if not state.has_nonred(v)):
                cand = [w for w in pending if g.has_edge(w, y)]
                if cand:
                    x, target = cand[0], y
                    break
            if x is None:
                x = pending[0]
        else:
            x = pending[0]
        pending.remove(x)

        touched = [c for c in classes if g.has_edge(x, c[0])]
        if not touched:
            continue
        hold = None
        if target is not None:
            hold = next(j for j, c in enumerate(touched) if target in c)
        parts = split_palette(step.assigned[x][i], [len(c) for c in touched], nonred_part=hold)
        new_classes = [c for c in classes if not g.has_edge(x, c[0])]
        for c, part in zip(touched, parts):
            placed = _arrange(state, c, palette_to_colors(part), orbit,
                              target if target in c else None)
            for v, col in placed.items():
                state.paint(x, v, col)
            new_classes.extend(_split_by_color(c, x, state))
        classes = sorted(new_classes, key=lambda c: c[0])
    step.refined.extend(classes)


def refine_and_color_targets(state: ProcState, step: RefinementStep) -> ProcState:
    """Colour every edge from the orbit to its targets with the assigned palettes."""
    for i in range(len(step.targets)):
        _color_target(state, step, i)
    return state


def handle_terminal_orbit(state: ProcState, block: Sequence[int]) -> ProcState:
    """Finish an orbit whose only uncoloured edges lie inside it.

    Such an orbit is a clique: K_{r+1} with r >= 2 gets the asymmetric K_n
    coloring, a lone edge gets blue (it cannot be fixed; the checks report it).
    """
    g = state.graph
    inside = set(block)
    open_inner = [(u, w) for u in block for w in state.open_nbrs(u) if w in inside and u < w]
    if not open_inner:
        return state
    is_clique = all(g.has_edge(u, w) for u, w in itertools.combinations(block, 2))
    if is_clique and len(block) >= 3:
        _paint_clique(state, block)
    elif len(block) == 2:
        state.paint(block[0], block[1], BLUE)
    else:
        # not a clique: the size bound failed earlier; colour it rigidly anyway
        sub, relabel = induced_subgraph(g, block)
        back = {i: v for v, i in relabel.items()}
        for (a, b), c in zip(sub.edges, color_graph(sub) if satisfies_hypothesis(sub)
                             else [BLUE] * sub.m):
            state.paint(back[a], back[b], c)
    return state


def process_orbit(state: ProcState, orbit: Sequence[int]) -> ProcState:
    g = state.graph
    orbit = tuple(orbit)
    st = orbit_stats(state, orbit)
    level = state.levels.level_of[orbit[0]]

    if st.k == 0:
        if level == 1 and g.n == 3:
            # K3: no coloring keeps the root as the only all-red vertex
            state.coloring = list(complete_graph_coloring(3))
        else:
            handle_terminal_orbit(state, orbit)
        state.steps.append(RefinementStep(orbit, level, st, [], [], [], terminal=[orbit]))
        _after_step(state)
        return state

    inside = set(orbit)
    outside = {w for v in orbit for w in state.open_nbrs(v) if w not in inside}
    targets = sorted({state.orbits.block(w) for w in outside}, key=lambda b: b[0])
    x1 = orbit[0]
    sizes = [sum(1 for w in g.adj[x1] if w in set(q)) for q in targets]
    for x in orbit:
        assert [sum(1 for w in g.adj[x] if w in set(q)) for q in targets] == sizes
    comps = connected_components(g, within=orbit)
    step = RefinementStep(
        source_orbit=orbit,
        level=level,
        stats=st,
        chosen=[c[0] for c in comps],
        targets=targets,
        sizes=sizes,
    )
    assign_palettes(step)
    color_inner_edges(state, orbit)
    refine_and_color_targets(state, step)

    # terminal orbits: everything left open lies inside the orbit
    for block in stabilizer_orbits(g, state.coloring, state.root).blocks:
        if not outside.intersection(block):
            continue
        members = set(block)
        open_edges = [w for v in block for w in state.open_nbrs(v)]
        if open_edges and all(w in members for w in open_edges):
            handle_terminal_orbit(state, block)
            step.terminal.append(block)
    state.steps.append(step)
    _after_step(state)
    return state


def check_conditions(state: ProcState, recompute: bool = True) -> ConditionReport:
    """Evaluate c1-c3 and the two orbit-size inequalities on the current state."""
    g = state.graph
    orbits = state.refresh_orbits() if recompute else state.orbits
    delta = state.delta
    rep = ConditionReport(True, True, True, step_index=state.step_index)

    def fail(attr, block, why):
        if getattr(rep, attr):
            setattr(rep, attr, False)
            if rep.violating_orbit is None:
                rep.violating_orbit = tuple(block)
                rep.detail = why

    for v in sorted(state.processed):
        if len(orbits.block(v)) > 1:
            fail("c1", orbits.block(v), f"processed vertex {v} is not fixed")
    for block in orbits.blocks:
        t = state.colored_count(block[0])
        if t == 0 or len(block) == 1:
            continue
        if len(block) > delta - t + 1:
            fail("c2", block, f"orbit of size {len(block)} with t={t}, delta={delta}")
        st = orbit_stats(state, block)
        if st.m * (st.r + 1) > delta - t + 1 or st.m > st.k + 1:
            fail("ineq1", block, f"m={st.m} r={st.r} k={st.k} t={t}")
        if len(block) > st.r + st.k + 1:
            fail("ineq2", block, f"|O|={len(block)} r={st.r} k={st.k}")
    for v in range(g.n):
        if v == state.root or not g.adj[v]:
            continue
        if all(state.color(v, w) is RED for w in g.adj[v]):
            fail("c3", (v,), f"vertex {v} has only red edges")
    return rep


def run_procedure(g: Graph, paranoid: bool = False) -> ProcState:
    """Run the whole procedure and return the final state (no verification)."""
    if not satisfies_hypothesis(g):
        raise HypothesisViolated("need a connected graph with 2*delta >= Delta, other than K2")
    state = new_state(g, paranoid)
    if g.n == 1:
        state.processed.add(0)
        return state
    initial_step(state)
    while (orbit := next_orbit(state)) is not None:
        process_orbit(state, orbit)
    return state


def color_graph(g: Graph, paranoid: bool = False) -> list[Color]:
    """Asymmetric red/blue/green edge-coloring, verified before it is returned.

    Raises :class:`ProofGapWitness` if the finished coloring still admits a
    non-trivial colour-preserving automorphism.
    """
    state = run_procedure(g, paranoid)
    coloring = state.coloring
    if any(c is UNCOLORED for c in coloring):
        raise RuntimeError("procedure ended with uncoloured edges")
    witness = asymmetry_witness(g, coloring)
    if witness is not None:
        raise ProofGapWitness(g, list(coloring), witness)
    return list(coloring)


def all_red_vertices(g: Graph, coloring: Sequence[Color]) -> list[int]:
    """Vertices all of whose edges are red."""
    return [
        v for v in range(g.n)
        if g.adj[v] and all(coloring[g.edge_id(v, w)] is RED for w in g.adj[v])
    ]
