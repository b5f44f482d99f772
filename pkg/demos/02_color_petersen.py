"""Colour the Petersen graph step by step and check the result.

Run with ``python3 demos/02_color_petersen.py``.
"""

from __future__ import annotations

import numpy as np

from asymcolor import automorphisms, generate, is_asymmetric
from asymcolor.colorer import all_red_vertices, check_conditions, run_procedure

g = generate("petersen")
print("vertices", g.n, "edges", g.m, "|Aut| =", automorphisms(g).order)

# %%
# The run keeps every intermediate step; paranoid mode re-checks the
# invariants after each one.
state = run_procedure(g, paranoid=True)
print("root", state.root, "levels", state.levels.levels)
for i, step in enumerate(state.steps):
    assigned = {x: [tuple(p) for p in seq] for x, seq in step.assigned.items()}
    print(f"step {i}: orbit {step.source_orbit} -> targets {step.targets}")
    if assigned:
        print("   palettes", assigned)
print("all checks ok:", all(r.ok for r in state.reports), check_conditions(state).ok)

# %%
# The finished colouring, as an adjacency matrix of colour codes
# (0 red, 1 blue, 2 green, -1 no edge).
mat = np.full((g.n, g.n), -1)
for (u, v), c in zip(g.edges, state.coloring):
    mat[u, v] = mat[v, u] = int(c)
print(mat)
print("colour counts:", np.bincount(mat[mat >= 0], minlength=3) // 2)

# %%
print("asymmetric:", is_asymmetric(g, state.coloring))
print("vertices with only red edges:", all_red_vertices(g, state.coloring))
