"""Which small graphs need a third colour?

Brute force over every connected graph on up to six vertices, keeping those
whose minimum degree is at least half the maximum degree.
Run with ``python3 demos/03_exception_census.py``.
"""

from __future__ import annotations

import collections

import numpy as np

from asymcolor import census, color_graph, encode_graph6, is_asymmetric

rows = census(6, hypothesis_only=True, n_min=3)
print(len(rows), "graphs")

# %%
table = collections.Counter((r.graph.n, r.dprime) for r in rows)
ns = sorted({n for n, _ in table})
grid = np.array([[table[n, d] for d in (1, 2, 3)] for n in ns])
print("n   D'=1 D'=2 D'=3")
for n, line in zip(ns, grid):
    print(n, *(f"{x:4d}" for x in line))

# %%
# The graphs that need three colours.
for r in rows:
    if r.dprime == 3:
        print(encode_graph6(r.graph), "n =", r.graph.n, "m =", r.graph.m, "degrees", r.stats.delta, r.stats.Delta)

# %%
# The constructive procedure never needs more than three colours on any of them.
print("procedure output asymmetric everywhere:", all(is_asymmetric(r.graph, color_graph(r.graph)) for r in rows))
