"""Named graph families."""

from __future__ import annotations

import itertools
from typing import Sequence

from .errors import BadParams
from .graph import Graph, build_graph


def complete(n: int) -> Graph:
    return build_graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts ``0..a-1`` and ``a..a+b-1``."""
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def circulant(n: int, jumps: Sequence[int]) -> Graph:
    return build_graph(n, {tuple(sorted((i, (i + s) % n))) for i in range(n) for s in jumps})


def hypercube(d: int) -> Graph:
    n = 1 << d
    return build_graph(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


FAMILIES = ("complete", "complete_bipartite", "cycle", "path", "circulant", "hypercube", "petersen")


def _ints(family, params, count=None, at_least=None):
    try:
        values = [int(p) for p in params]
    except (TypeError, ValueError):
        raise BadParams(f"{family}: parameters must be integers, got {list(params)!r}") from None
    if count is not None and len(values) != count:
        raise BadParams(f"{family} takes {count} parameter(s), got {len(values)}")
    if at_least is not None and len(values) < at_least:
        raise BadParams(f"{family} takes at least {at_least} parameter(s)")
    return values


def generate(family: str, params: Sequence = ()) -> Graph:
    """Build a member of a named family from integer parameters.

    ``circulant`` takes ``n`` followed by the jumps, e.g. ``(8, 1, 2)``.
    """
    family = family.strip().lower().replace("-", "_")
    if family == "complete":
        (n,) = _ints(family, params, 1)
        if n < 1:
            raise BadParams("complete needs n >= 1")
        return complete(n)
    if family == "complete_bipartite":
        a, b = _ints(family, params, 2)
        if a < 1 or b < 1:
            raise BadParams("complete_bipartite needs both parts non-empty")
        return complete_bipartite(a, b)
    if family == "cycle":
        (n,) = _ints(family, params, 1)
        if n < 3:
            raise BadParams("cycle needs n >= 3")
        return cycle(n)
    if family == "path":
        (n,) = _ints(family, params, 1)
        if n < 1:
            raise BadParams("path needs n >= 1")
        return path(n)
    if family == "circulant":
        n, *jumps = _ints(family, params, at_least=2)
        if n < 2:
            raise BadParams("circulant needs n >= 2")
        if any(s % n == 0 for s in jumps):
            raise BadParams(f"circulant jumps must be non-zero mod {n}")
        return circulant(n, jumps)
    if family == "hypercube":
        (d,) = _ints(family, params, 1)
        if not 0 <= d <= 20:
            raise BadParams("hypercube dimension must lie in 0..20")
        return hypercube(d)
    if family == "petersen":
        _ints(family, params, 0)
        return petersen()
    raise BadParams(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
