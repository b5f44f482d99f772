"""Round trip through the file formats and the command line.

Run with ``python3 demos/04_files_and_cli.py``.
"""

from __future__ import annotations

import subprocess
import sys
import tempfile
from pathlib import Path

from asymcolor import ColoringDocument, color_graph, emit_dot, encode_graph6, generate, parse_edgelist
from asymcolor.colorer import choose_root

g = parse_edgelist("""
# a 5-cycle with one chord
0 1
1 2
2 3
3 4
4 0
0 2
""")
col = color_graph(g)
print(encode_graph6(g))
print(emit_dot(g, col))
print(ColoringDocument.from_coloring(g, col, root=choose_root(g), version="1", verified=True).to_json())

# %%
# The same through the command line: generate, colour, verify.
cli = [sys.executable, "-m", "asymcolor.cli"]
with tempfile.TemporaryDirectory() as tmp:
    graph = Path(tmp, "q3.g6")
    coloring = Path(tmp, "q3.json")
    graph.write_text(subprocess.run(cli + ["gen", "hypercube", "3"], capture_output=True, text=True).stdout)
    done = subprocess.run(cli + ["color", str(graph), "--paranoid"], capture_output=True, text=True)
    coloring.write_text(done.stdout)
    check = subprocess.run(cli + ["verify", str(graph), str(coloring)], capture_output=True, text=True)
    print("color exit", done.returncode, "| verify:", check.stdout.strip(), "exit", check.returncode)

# %%
# K2 is the one connected graph with no asymmetric colouring at all.
k2 = subprocess.run(cli + ["color", "-"], input=encode_graph6(generate("complete", [2])),
                    capture_output=True, text=True)
print("K2 exit code", k2.returncode, k2.stderr.strip())
