"""Uniform palettes: how many there are and how they split.

Run with ``python3 demos/01_palettes.py``.
"""

from __future__ import annotations

import numpy as np

from asymcolor.palette import split_palette, uniform_palette_count, uniform_palette_seqs, uniform_palettes

# %%
# A k-palette counts how many of a vertex's k edges are red, blue and green.
# It is uniform when no colour takes more than half (rounded up).
for k in (1, 2, 3, 4):
    print(k, [tuple(p) for p in uniform_palettes(k)])

# %%
# There are always more uniform palettes than edges, which is what lets k+1
# vertices of one orbit receive pairwise different palettes.
ks = np.arange(1, 41)
counts = np.array([uniform_palette_count(int(k)) for k in ks])
print("k:      ", ks[:12])
print("count:  ", counts[:12])
print("slack min over k<=40:", int((counts - (ks + 1)).min()))

# %%
# Sequences of palettes, one per target orbit, multiply the choice.
for sizes in ([1], [2, 1], [3, 2, 1]):
    n = sum(1 for _ in uniform_palette_seqs(sizes))
    print(f"sizes {sizes}: {n} sequences for {sum(sizes)} edges")

# %%
# A uniform palette can always be cut into uniform pieces of any sizes.
p = uniform_palettes(7)[5]
for sizes in ([4, 3], [2, 2, 3], [1, 1, 5]):
    print(tuple(p), sizes, "->", [tuple(q) for q in split_palette(p, sizes)])
