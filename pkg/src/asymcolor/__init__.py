"""Asymmetric edge-colorings with three colours."""

from __future__ import annotations

from .automorphism import (
    AutGroup,
    OrbitPartition,
    asymmetry_witness,
    automorphisms,
    is_asymmetric,
    orbits_under,
    stabilizer_orbits,
    vertex_orbits,
)
from .colorer import all_red_vertices, check_conditions, color_graph, complete_graph_coloring, run_procedure
from .colors import BLUE, GREEN, RED, UNCOLORED, Color
from .errors import (
    AsymColorError,
    BadParams,
    BudgetExceeded,
    CapExceeded,
    ConditionViolated,
    Disconnected,
    HypothesisViolated,
    Infeasible,
    LoopEdge,
    PaletteExhausted,
    ParseError,
    PartialColoring,
    ProofGapWitness,
    TooLarge,
    VertexOutOfRange,
    ZeroLength,
)
from .families import generate
from .formats import ColoringDocument, emit_dot, encode_graph6, parse_edgelist, parse_graph6
from .graph import Graph, bfs_levels, build_graph, connected_components, induced_subgraph, satisfies_hypothesis, stats
from .oracle import census, distinguishing_index, enumerate_connected_graphs, exists_asymmetric_coloring
from .palette import Palette, is_uniform, special_palettes, split_palette, uniform_palette_seqs, uniform_palettes

__version__ = "0.1.0"

__all__ = [
    "AutGroup",
    "OrbitPartition",
    "asymmetry_witness",
    "automorphisms",
    "is_asymmetric",
    "orbits_under",
    "stabilizer_orbits",
    "vertex_orbits",
    "all_red_vertices",
    "check_conditions",
    "color_graph",
    "complete_graph_coloring",
    "run_procedure",
    "BLUE",
    "GREEN",
    "RED",
    "UNCOLORED",
    "Color",
    "AsymColorError",
    "BadParams",
    "BudgetExceeded",
    "CapExceeded",
    "ConditionViolated",
    "Disconnected",
    "HypothesisViolated",
    "Infeasible",
    "LoopEdge",
    "PaletteExhausted",
    "ParseError",
    "PartialColoring",
    "ProofGapWitness",
    "TooLarge",
    "VertexOutOfRange",
    "ZeroLength",
    "generate",
    "ColoringDocument",
    "emit_dot",
    "encode_graph6",
    "parse_edgelist",
    "parse_graph6",
    "Graph",
    "bfs_levels",
    "build_graph",
    "connected_components",
    "induced_subgraph",
    "satisfies_hypothesis",
    "stats",
    "census",
    "distinguishing_index",
    "enumerate_connected_graphs",
    "exists_asymmetric_coloring",
    "Palette",
    "is_uniform",
    "special_palettes",
    "split_palette",
    "uniform_palette_seqs",
    "uniform_palettes",
]
