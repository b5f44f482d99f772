"""Simple undirected graphs on vertices 0..n-1 and the structural queries
the coloring procedure needs (degrees, BFS levels, induced subgraphs)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import Disconnected, LoopEdge, VertexOutOfRange


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` is the sorted tuple of pairs ``(u, v)`` with ``u < v``; the
    position of a pair in it is the edge id used by colorings.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    edge_index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        index = {}
        for i, (u, v) in enumerate(self.edges):
            nbrs[u].append(v)
            nbrs[v].append(u)
            index[u, v] = i
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))
        object.__setattr__(self, "edge_index", index)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.edge_index[u, v]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Canonicalize an edge list: orient pairs, drop duplicates, sort."""
    canon = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        canon.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(canon)))


class GraphStats(NamedTuple):
    delta: int
    Delta: int
    connected: bool
    is_k2: bool


def stats(g: Graph) -> GraphStats:
    degs = [len(a) for a in g.adj]
    return GraphStats(
        delta=min(degs, default=0),
        Delta=max(degs, default=0),
        connected=len(connected_components(g)) <= 1,
        is_k2=g.n == 2 and g.m == 1,
    )


def satisfies_hypothesis(g: Graph) -> bool:
    """Connected, ``2*delta >= Delta`` and not K2. The one-vertex graph passes."""
    s = stats(g)
    if g.n == 0 or not s.connected or s.is_k2:
        return False
    return 2 * s.delta >= s.Delta


@dataclass(frozen=True)
class LevelStructure:
    root: int
    level_of: tuple[int, ...]
    levels: tuple[tuple[int, ...], ...]


def bfs_levels(g: Graph, root: int) -> LevelStructure:
    if not 0 <= root < g.n:
        raise VertexOutOfRange(f"root {root} outside 0..{g.n - 1}")
    dist = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    if min(dist) < 0:
        raise Disconnected("graph is not connected")
    levels: list[list[int]] = [[] for _ in range(max(dist) + 1)]
    for v, d in enumerate(dist):
        levels[d].append(v)
    return LevelStructure(root, tuple(dist), tuple(tuple(lv) for lv in levels))


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph on ``vs`` relabeled to 0..len(vs)-1 in increasing order.

    Returns the subgraph and the old -> new vertex map.
    """
    verts = sorted(set(vs))
    for v in verts:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [
        (relabel[u], relabel[w])
        for u in verts
        for w in g.adj[u]
        if u < w and w in relabel
    ]
    return Graph(len(verts), tuple(sorted(edges))), relabel


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex.

    With ``within`` the components of the induced subgraph on that set are
    returned, without relabeling.
    """
    allowed = set(range(g.n)) if within is None else set(within)
    seen = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps
