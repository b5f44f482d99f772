"""Automorphisms of edge-labelled graphs.

The search is individualization/refinement: vertex cells are refined to an
equitable partition (colour refinement using edge labels), a vertex of the
first non-trivial cell is individualized on the left while every candidate
image is tried on the right, and leaves are checked explicitly. Edge labels are
arbitrary ints; for colorings the label is the :class:`Color` value, so
uncoloured edges form a fourth class that automorphisms must also preserve.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .colors import Color
from .errors import CapExceeded
from .graph import Graph

Permutation = tuple[int, ...]

DEFAULT_CAP = 10**6


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            # smaller index becomes the root so roots are block minima
            if y < x:
                x, y = y, x
            self.parent[y] = x


@dataclass(frozen=True)
class OrbitPartition:
    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "OrbitPartition":
        ordered = sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0])
        block_of = [-1] * n
        for i, b in enumerate(ordered):
            for v in b:
                block_of[v] = i
        return cls(tuple(ordered), tuple(block_of))

    def block(self, v: int) -> tuple[int, ...]:
        return self.blocks[self.block_of[v]]

    def is_discrete(self) -> bool:
        return len(self.blocks) == len(self.block_of)

    def refines(self, other: "OrbitPartition") -> bool:
        """True if every block here lies inside a block of ``other``."""
        return all(len({other.block_of[v] for v in b}) == 1 for b in self.blocks)


@dataclass
class AutGroup:
    """A permutation group given by generators.

    ``order`` is exact (computed from a stabilizer chain of orbits).
    ``elements`` holds the full list when ``order <= element_cap`` and is
    ``None`` otherwise.
    """

    n: int
    generators: list[Permutation]
    order: int
    element_cap: int
    elements: list[Permutation] | None = None

    @property
    def overflow(self) -> bool:
        return self.elements is None


class LabeledGraph:
    """Graph with an int label on every edge, prepared for searching."""

    def __init__(self, n: int, labeled_edges: Iterable[tuple[int, int, int]]):
        self.n = n
        self.nbrs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self.mat: list[dict[int, int]] = [{} for _ in range(n)]
        for u, v, lab in labeled_edges:
            self.nbrs[u].append((v, lab))
            self.nbrs[v].append((u, lab))
            self.mat[u][v] = lab
            self.mat[v][u] = lab

    @classmethod
    def from_coloring(cls, g: Graph, coloring: Sequence[int]) -> "LabeledGraph":
        if len(coloring) != g.m:
            raise ValueError(f"coloring has {len(coloring)} entries for {g.m} edges")
        return cls(g.n, ((u, v, int(c)) for (u, v), c in zip(g.edges, coloring)))

    # -- refinement ---------------------------------------------------------

    def refine(self, cells: Sequence[int]) -> tuple[list[int], list[int]]:
        """Refine an ordered partition (vertex -> cell key) to an equitable one.

        Returns contiguous cell ranks and a trace; isomorphic inputs give
        identical traces.
        """
        nbrs = self.nbrs
        n = self.n
        trace = []
        ncells = -1
        cur = list(cells)
        while True:
            keys = [
                (cur[v], tuple(sorted([(lab, cur[w]) for w, lab in nbrs[v]])))
                for v in range(n)
            ]
            skeys = sorted(keys)
            trace.append(hash(tuple(skeys)))
            rank = {}
            for k in skeys:
                if k not in rank:
                    rank[k] = len(rank)
            cur = [rank[k] for k in keys]
            if len(rank) == ncells:
                return cur, trace
            ncells = len(rank)

    @staticmethod
    def _individualize(cells: Sequence[int], v: int) -> list[int]:
        return [2 * c + (u != v) for u, c in enumerate(cells)]

    def _initial(self, fixed: Iterable[int]) -> list[int]:
        cells = [0] * self.n
        for i, v in enumerate(sorted(set(fixed))):
            cells[v] = i + 1
        return cells

    def is_automorphism(self, sigma: Sequence[int]) -> bool:
        mat = self.mat
        for v in range(self.n):
            row = mat[sigma[v]]
            if len(row) != len(mat[v]):
                return False
            for w, lab in self.nbrs[v]:
                if row.get(sigma[w]) != lab:
                    return False
        return True

    # -- search -------------------------------------------------------------

    def _leaves(self, left: list[int], right: list[int]) -> Iterator[Permutation]:
        """Automorphisms mapping the (fixed) left path onto right paths."""
        n = self.n
        if max(left, default=-1) == n - 1:
            if max(right, default=-1) != n - 1:
                return
            at = [0] * n
            for w, c in enumerate(right):
                at[c] = w
            sigma = tuple(at[left[v]] for v in range(n))
            if self.is_automorphism(sigma):
                yield sigma
            return
        sizes = [0] * n
        for c in left:
            sizes[c] += 1
        target = next(c for c in range(n) if sizes[c] > 1)
        v = next(u for u in range(n) if left[u] == target)
        lnext, ltrace = self.refine(self._individualize(left, v))
        for w in range(n):
            if right[w] != target:
                continue
            rnext, rtrace = self.refine(self._individualize(right, w))
            if rtrace == ltrace:
                yield from self._leaves(lnext, rnext)

    def find_mapping(self, base: list[int], v: int, w: int) -> Permutation | None:
        """Some automorphism respecting ``base`` that sends v to w, or None."""
        left, ltrace = self.refine(self._individualize(base, v))
        right, rtrace = self.refine(self._individualize(base, w))
        if ltrace != rtrace:
            return None
        return next(self._leaves(left, right), None)

    def orbits(self, fixed: Iterable[int] = ()) -> tuple[OrbitPartition, list[Permutation]]:
        """Exact orbits of the label-preserving group fixing ``fixed`` pointwise.

        Also returns the automorphisms found; their orbits are the group orbits.
        """
        n = self.n
        base, _ = self.refine(self._initial(fixed))
        uf = UnionFind(n)
        gens: list[Permutation] = []
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(base[v], []).append(v)
        for c in sorted(cells):
            members = cells[c]
            reps: list[int] = []
            for w in members:
                root = uf.find(w)
                if any(uf.find(r) == root for r in reps):
                    continue
                for r in reps:
                    sigma = self.find_mapping(base, r, w)
                    if sigma is not None:
                        gens.append(sigma)
                        for x in range(n):
                            uf.union(x, sigma[x])
                        break
                else:
                    reps.append(w)
        blocks: dict[int, list[int]] = {}
        for v in range(n):
            blocks.setdefault(uf.find(v), []).append(v)
        return OrbitPartition.from_blocks(n, blocks.values()), gens

    def first_symmetry(self, fixed: Iterable[int] = ()) -> Permutation | None:
        """First non-identity automorphism met by the search, or None."""
        base, _ = self.refine(self._initial(fixed))
        n = self.n
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(base[v], []).append(v)
        for c in sorted(cells):
            members = cells[c]
            if len(members) < 2:
                continue
            # a non-trivial automorphism moves some vertex to another vertex
            # of its cell; trying every ordered pair of a cell is exhaustive
            for i, v in enumerate(members):
                for w in members[i + 1:]:
                    sigma = self.find_mapping(base, v, w)
                    if sigma is not None:
                        return sigma
        return None

    def group(self, fixed: Iterable[int] = (), cap: int = DEFAULT_CAP) -> AutGroup:
        fixed = set(fixed)
        gens: list[Permutation] = []
        order = 1
        chain = set(fixed)
        while True:
            part, found = self.orbits(chain)
            gens.extend(found)
            moving = [b for b in part.blocks if len(b) > 1]
            if not moving:
                break
            base_point = moving[0][0]
            order *= len(moving[0])
            chain.add(base_point)
        elements = None
        if order <= cap:
            start, _ = self.refine(self._initial(fixed))
            elements = list(self._leaves(start, list(start)))
            assert len(elements) == order, (len(elements), order)
        return AutGroup(self.n, gens, order, cap, elements)


def _labeled(g: Graph, coloring: Sequence[int] | None) -> LabeledGraph:
    if coloring is None:
        coloring = [Color.UNCOLORED] * g.m
    return LabeledGraph.from_coloring(g, coloring)


def automorphisms(
    g: Graph,
    coloring: Sequence[int] | None = None,
    fixed: Iterable[int] = (),
    cap: int = DEFAULT_CAP,
    exact: bool = False,
) -> AutGroup:
    """Colour-preserving automorphisms of ``g`` fixing ``fixed`` pointwise.

    Elements are listed when the order is at most ``cap``; otherwise only a
    generating set is kept, or :class:`CapExceeded` is raised if ``exact``.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    grp = _labeled(g, coloring).group(fixed, cap)
    if exact and grp.overflow:
        raise CapExceeded(f"group order {grp.order} exceeds cap {cap}")
    return grp


def asymmetry_witness(g: Graph, coloring: Sequence[int]) -> Permutation | None:
    """A non-trivial colour-preserving automorphism, or None if there is none."""
    return _labeled(g, coloring).first_symmetry()


def is_asymmetric(g: Graph, coloring: Sequence[int]) -> bool:
    return asymmetry_witness(g, coloring) is None


def orbits_under(group: AutGroup) -> OrbitPartition:
    uf = UnionFind(group.n)
    for sigma in group.generators:
        for x in range(group.n):
            uf.union(x, sigma[x])
    blocks: dict[int, list[int]] = {}
    for v in range(group.n):
        blocks.setdefault(uf.find(v), []).append(v)
    return OrbitPartition.from_blocks(group.n, blocks.values())


def stabilizer_orbits(g: Graph, coloring: Sequence[int] | None, x0: int) -> OrbitPartition:
    """Orbits of the colour-preserving automorphisms that fix ``x0``."""
    return _labeled(g, coloring).orbits([x0])[0]


def vertex_orbits(g: Graph, coloring: Sequence[int] | None = None, fixed: Iterable[int] = ()) -> OrbitPartition:
    return _labeled(g, coloring).orbits(fixed)[0]
