"""
Exception hierarchy for nzflow.

Precondition failures also derive from ValueError so callers that only
know the builtin type keep working.
"""

from typing import Optional, Tuple


class NzFlowError(Exception):
    """Base class for every error raised by nzflow"""


class InvalidPermutation(NzFlowError, ValueError):
    """Image sequence is not a bijection on 0..n-1"""


class OrderCapExceeded(NzFlowError):
    """Group closure grew beyond the configured element cap"""

    def __init__(self, cap: int):
        super().__init__(f"group closure exceeds order cap {cap}")
        self.cap = cap


class NotAutomorphismGroup(NzFlowError, ValueError):
    """Some generator does not map the edge multiset onto itself"""

    def __init__(self, generator_index: int):
        super().__init__(f"generator {generator_index} does not preserve the graph")
        self.generator_index = generator_index


class InvalidGraph(NzFlowError, ValueError):
    """Loop, out-of-range endpoint or inconsistent orientation"""


class GraphNotConnected(NzFlowError, ValueError):
    """Operation requires a connected graph"""


class NotBipartite(NzFlowError, ValueError):
    """An odd cycle was found"""


class NotRegular(NzFlowError, ValueError):
    """Vertex degrees differ"""


class ValencyTooSmall(NzFlowError, ValueError):
    """Valency below the constructor's minimum"""


class OddDegreeVertex(NzFlowError, ValueError):
    """Eulerian orientation requested on a graph with an odd-degree vertex"""

    def __init__(self, vertex: int, degree: int):
        super().__init__(f"vertex {vertex} has odd degree {degree}")
        self.vertex = vertex
        self.degree = degree


class BudgetExceeded(NzFlowError):
    """Search gave up before proving feasibility or infeasibility"""

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} nodes exhausted")
        self.budget = budget


class Infeasible(NzFlowError):
    """Exhaustive search proved that no nowhere-zero flow exists"""


class NotMulticover(NzFlowError):
    """Partition fails the multicover conditions"""

    def __init__(self, reason: str, blocks: Optional[Tuple[int, int]] = None):
        where = f" (blocks {blocks[0]}, {blocks[1]})" if blocks is not None else ""
        super().__init__(f"{reason}{where}")
        self.reason = reason
        self.blocks = blocks


class PartitionNotInvariant(NzFlowError, ValueError):
    """A generator splits a block across several blocks"""


class InvalidQuotientFlow(NzFlowError, ValueError):
    """The flow handed to lift_flow is not a nowhere-zero flow on the quotient"""


class OutsideScope(NzFlowError):
    """The input does not satisfy the hypotheses the pipeline needs"""


class InternalInvariantViolation(NzFlowError):
    """A step that the theory guarantees cannot fail did fail"""


class FormatError(NzFlowError, ValueError):
    """Malformed text file"""

    def __init__(self, message: str, line_no: Optional[int] = None):
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line_no = line_no
