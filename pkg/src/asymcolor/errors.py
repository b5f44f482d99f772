"""Exception types shared across the package."""

from __future__ import annotations


class AsymColorError(Exception):
    """Base class for every error raised by this package."""


class LoopEdge(AsymColorError, ValueError):
    pass


class VertexOutOfRange(AsymColorError, ValueError):
    pass


class Disconnected(AsymColorError, ValueError):
    pass


class CapExceeded(AsymColorError):
    """The automorphism group is larger than the enumeration cap."""


class ZeroLength(AsymColorError, ValueError):
    pass


class Infeasible(AsymColorError):
    """No uniform split exists. Seeing this means a bug or a counterexample."""


class PaletteExhausted(AsymColorError):
    """Fewer distinct palette sequences than vertices that need one."""


class HypothesisViolated(AsymColorError, ValueError):
    pass


class ConditionViolated(AsymColorError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"invariant check failed: {report}")


class ProofGapWitness(AsymColorError):
    """The procedure finished but the coloring still has a symmetry.

    Carries the graph, the complete coloring and the surviving automorphism
    so the instance can be saved and inspected.
    """

    def __init__(self, graph, coloring, witness):
        self.graph = graph
        self.coloring = coloring
        self.witness = witness
        super().__init__(
            f"coloring of graph with n={graph.n} is preserved by {list(witness)}"
        )


class BudgetExceeded(AsymColorError):
    pass


class TooLarge(AsymColorError, ValueError):
    pass


class ParseError(AsymColorError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PartialColoring(AsymColorError, ValueError):
    pass


class BadParams(AsymColorError, ValueError):
    pass
