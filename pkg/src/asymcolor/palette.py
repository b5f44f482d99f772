"""Colour palettes: multisets of red/blue/green counts.

A k-palette ``(a, b, c)`` is uniform when no colour occurs more than
``ceil(k/2)`` times. Vertices of one orbit are told apart by giving their
outgoing edges different uniform palettes (or sequences of them, one per
target orbit).
"""

from __future__ import annotations

import itertools
from typing import Iterator, NamedTuple, Sequence

from .colors import BLUE, GREEN, RED, Color
from .errors import Infeasible, ZeroLength


class Palette(NamedTuple):
    a: int  # red
    b: int  # blue
    c: int  # green

    @property
    def k(self) -> int:
        return self.a + self.b + self.c

    def __add__(self, other):  # componentwise, not tuple concatenation
        return Palette(self.a + other.a, self.b + other.b, self.c + other.c)


PaletteSeq = tuple[Palette, ...]


def _ceil_half(k: int) -> int:
    return (k + 1) // 2


def is_uniform(p: Palette) -> bool:
    return max(p) <= _ceil_half(p.k)


def uniform_palettes(k: int) -> list[Palette]:
    """Uniform k-palettes with at most k/2 reds, in a fixed order.

    For ``k = 2m`` these are ``(i, m-j, m-i+j)`` and for ``k = 2m+1`` they are
    ``(i, m+1-j, m-i+j)``, with ``i`` ascending and then ``j`` ascending.
    """
    if k < 1:
        raise ZeroLength("palette size must be positive")
    m, odd = divmod(k, 2)
    out = []
    for i in range(m + 1):
        for j in range(i + 1 + odd):
            out.append(Palette(i, m + odd - j, m - i + j))
    return out


def uniform_palette_count(k: int) -> int:
    m, odd = divmod(k, 2)
    return (m + 1) * (m + 4) // 2 if odd else (m + 1) * (m + 2) // 2


def uniform_palette_seqs(sizes: Sequence[int]) -> Iterator[PaletteSeq]:
    """All sequences of uniform palettes with the given sizes, lazily."""
    if not sizes or any(k < 1 for k in sizes):
        raise ZeroLength("need at least one size, all positive")
    return itertools.product(*(uniform_palettes(k) for k in sizes))


def special_palettes(k: int) -> tuple[Palette, Palette]:
    """Two fixed uniform k-palettes: one red-free, one with at most one red.

    Both are red-free when k is odd.
    """
    pals = uniform_palettes(k)
    no_red = next(p for p in pals if p.a == 0)
    low_red = next(p for p in pals if p.a <= 1 and p != no_red)
    return no_red, low_red


def _greedy_split(p: Palette, sizes: Sequence[int]) -> list[Palette]:
    left = list(p)
    parts = []
    for size in sizes:
        got = [0, 0, 0]
        for _ in range(size):
            # max() keeps the first maximum, which is the red<blue<green tie-break
            col = max(range(3), key=lambda i: left[i])
            left[col] -= 1
            got[col] += 1
        parts.append(Palette(*got))
    return parts


def all_splits(p: Palette, sizes: Sequence[int]) -> Iterator[list[Palette]]:
    """Every split of ``p`` into uniform parts of the given sizes."""
    if not sizes:
        if p.k == 0:
            yield []
        return
    size, rest = sizes[0], sizes[1:]
    for a in range(min(p.a, size), -1, -1):
        for b in range(min(p.b, size - a), -1, -1):
            c = size - a - b
            if c > p.c:
                continue
            part = Palette(a, b, c)
            if not is_uniform(part):
                continue
            for tail in all_splits(Palette(p.a - a, p.b - b, p.c - c), rest):
                yield [part] + tail


def split_palette(
    p: Palette, sizes: Sequence[int], nonred_part: int | None = None
) -> list[Palette]:
    """Split a uniform palette into uniform parts of the given sizes.

    Greedy first (each unit drawn from the colour with most left, ties
    red < blue < green), then exhaustive search if greedy fails. With
    ``nonred_part`` the part at that index must contain a non-red colour.
    """
    if not sizes or any(k < 1 for k in sizes):
        raise ZeroLength("split sizes must be positive")
    if sum(sizes) != p.k:
        raise ValueError(f"sizes {list(sizes)} do not add up to {p.k}")

    def ok(parts):
        if not all(is_uniform(q) for q in parts):
            return False
        return nonred_part is None or parts[nonred_part].a < parts[nonred_part].k

    parts = _greedy_split(p, sizes)
    if ok(parts):
        return parts
    for parts in all_splits(p, list(sizes)):
        if ok(parts):
            return parts
    raise Infeasible(f"cannot split {tuple(p)} into uniform parts {list(sizes)}")


def palette_to_colors(p: Palette) -> list[Color]:
    return [RED] * p.a + [BLUE] * p.b + [GREEN] * p.c


def palette_of(colors) -> Palette:
    colors = list(colors)
    return Palette(colors.count(RED), colors.count(BLUE), colors.count(GREEN))
