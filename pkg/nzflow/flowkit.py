#!/usr/bin/env python3
"""
Integer flows: representation, verification, constructive builders and an
exhaustive nowhere-zero k-flow solver.
"""

import logging
from collections import deque
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel

from .config import DEFAULT_BUDGET
from .errors import (
    BudgetExceeded,
    GraphNotConnected,
    InternalInvariantViolation,
    NotRegular,
    OddDegreeVertex,
    ValencyTooSmall,
)
from .graphcore import Graph, Orientation, bipartition, is_connected, valency

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Flow:
    """Orientation plus integer edge values in -(k-1)..k-1"""
    k: int
    orientation: Orientation
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(int(x) for x in self.values))
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if len(self.values) != len(self.orientation.dir):
            raise ValueError(f"{len(self.values)} values for {len(self.orientation.dir)} oriented edges")

    @property
    def edge_count(self) -> int:
        return len(self.values)


class VerificationReport(BaseModel):
    """Outcome of verify_flow; reason/vertex/edge describe the first violation"""
    k: int
    is_flow: bool
    nowhere_zero: bool
    reason: Optional[str] = None
    vertex: Optional[int] = None
    edge: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.is_flow and self.nowhere_zero

    def summary(self) -> str:
        if self.ok:
            return f"OK nowhere-zero {self.k}-flow"
        where = f"edge {self.edge}" if self.edge is not None else f"vertex {self.vertex}"
        return f"FAIL {self.reason} at {where}"


def verify_flow(graph: Graph, flow: Flow) -> VerificationReport:
    """
    Check orientation, value range, nowhere-zero property and conservation.

    Violations are reported in that order; a zero value still leaves is_flow
    true when the function conserves.
    """
    if flow.edge_count != graph.m:
        raise ValueError(f"flow has {flow.edge_count} edges, graph has {graph.m}")

    bad_edge = flow.orientation.check(graph)
    if bad_edge is not None:
        return VerificationReport(k=flow.k, is_flow=False, nowhere_zero=False,
                                  reason="orientation mismatch", edge=bad_edge)

    limit = flow.k - 1
    out_of_range = next((e for e, x in enumerate(flow.values) if abs(x) > limit), None)
    zero = next((e for e, x in enumerate(flow.values) if x == 0), None)

    net = [0] * graph.n
    for (tail, head), x in zip(flow.orientation.dir, flow.values):
        net[tail] += x
        net[head] -= x
    unbalanced = next((v for v, total in enumerate(net) if total != 0), None)

    report = VerificationReport(
        k=flow.k,
        is_flow=out_of_range is None and unbalanced is None,
        nowhere_zero=zero is None,
    )
    if out_of_range is not None:
        report.reason, report.edge = "value out of range", out_of_range
    elif zero is not None:
        report.reason, report.edge = "zero value", zero
    elif unbalanced is not None:
        report.reason, report.vertex = "conservation", unbalanced
    return report


def reinterpret_flow(flow: Flow, k: int) -> Flow:
    """Same orientation and values, read as a k-flow for a larger k"""
    if k < flow.k:
        raise ValueError(f"cannot reinterpret a {flow.k}-flow as a {k}-flow")
    return replace(flow, k=k)


def eulerian_two_flow(graph: Graph) -> Flow:
    """
    Nowhere-zero 2-flow for a graph whose degrees are all even.

    Each component is oriented along an Eulerian circuit starting at its
    smallest vertex; every value is 1.
    """
    for v, degree in enumerate(graph.degrees()):
        if degree % 2:
            raise OddDegreeVertex(v, degree)

    multigraph = graph.to_networkx()
    directions = list(graph.edges)
    for component in nx.connected_components(multigraph):
        sub = multigraph.subgraph(component)
        if sub.number_of_edges() == 0:
            continue
        for u, v, key in nx.eulerian_circuit(sub, source=min(component), keys=True):
            directions[key] = (u, v)
    return Flow(2, Orientation(tuple(directions)), (1,) * graph.m)


def _perfect_matching(graph: Graph, side_a: Sequence[int], available: List[bool]) -> Dict[int, int]:
    """
    Perfect matching of the available edges, as A-vertex -> edge index.

    Augmenting paths are grown breadth-first, always scanning the lowest
    edge index first.
    """
    match_a: Dict[int, int] = {}
    match_b: Dict[int, int] = {}
    for root in side_a:
        reached: Dict[int, Tuple[int, int]] = {}
        queue = deque([root])
        free_b = None
        while queue and free_b is None:
            a = queue.popleft()
            for e in graph.incidence[a]:
                if not available[e]:
                    continue
                b = graph.other_end(e, a)
                if b in reached:
                    continue
                reached[b] = (e, a)
                if b not in match_b:
                    free_b = b
                    break
                queue.append(graph.other_end(match_b[b], b))
        if free_b is None:
            raise InternalInvariantViolation(f"no augmenting path from vertex {root} in a regular bipartite graph")
        b = free_b
        while True:
            e, a = reached[b]
            previous = match_a.get(a)
            match_a[a] = e
            match_b[b] = e
            if a == root:
                break
            b = graph.other_end(previous, a)
    return match_a


def konig_edge_coloring(graph: Graph, side_a: Sequence[int]) -> List[int]:
    """
    Proper d-edge-coloring of a d-regular bipartite multigraph.

    Color c is a perfect matching of what colors 0..c-1 left over.
    """
    d = valency(graph)
    if d is None:
        raise NotRegular("edge coloring needs a regular graph")
    colors = [-1] * graph.m
    available = [True] * graph.m
    for color in range(d):
        matching = _perfect_matching(graph, side_a, available)
        for e in matching.values():
            colors[e] = color
            available[e] = False
    return colors


def color_weights(d: int) -> List[int]:
    """Nonzero weights in {±1, ±2} summing to zero, one per color"""
    if d < 2:
        raise ValencyTooSmall(f"need at least 2 colors, got {d}")
    if d % 2 == 0:
        return [1 if i % 2 == 0 else -1 for i in range(d)]
    return [2, -1, -1] + [1 if i % 2 == 0 else -1 for i in range(d - 3)]


def bipartite_regular_three_flow(graph: Graph) -> Flow:
    """
    Nowhere-zero 3-flow on a connected d-regular bipartite graph, d >= 2.

    Edges point from the side containing vertex 0 to the other side and
    carry the weight of their color class.

    Raises:
        GraphNotConnected, NotBipartite, NotRegular, ValencyTooSmall
    """
    if not is_connected(graph):
        raise GraphNotConnected("bipartite three-flow needs a connected graph")
    side_a, _ = bipartition(graph)
    d = valency(graph)
    if d is None:
        raise NotRegular("bipartite three-flow needs a regular graph")
    if d < 2:
        raise ValencyTooSmall(f"valency {d} is below 2")

    colors = konig_edge_coloring(graph, side_a)
    weights = color_weights(d)
    in_a = set(side_a)
    directions = tuple((u, v) if u in in_a else (v, u) for u, v in graph.edges)
    values = tuple(weights[c] for c in colors)
    logger.debug(f"Bipartite three-flow: valency {d}, weights {weights}")
    return Flow(3, Orientation(directions), values)


class CycleSpaceSearch:
    """
    Backtracking over cotree values of a BFS spanning tree.

    A cotree edge carrying x pushes x around its fundamental cycle, so tree
    values are signed sums of cotree values. Each tree value is checked as
    soon as the last cotree edge of a cycle through it has been assigned.
    """

    def __init__(self, graph: Graph, k: int, budget: int = DEFAULT_BUDGET):
        self.graph = graph
        self.k = k
        self.budget = budget
        self.nodes = 0

        parent = [-1] * graph.n
        parent_edge = [-1] * graph.n
        depth = [0] * graph.n
        tree_edges: List[int] = []
        if graph.n:
            seen = [False] * graph.n
            seen[0] = True
            queue = deque([0])
            while queue:
                v = queue.popleft()
                for e in graph.incidence[v]:
                    w = graph.other_end(e, v)
                    if not seen[w]:
                        seen[w] = True
                        parent[w], parent_edge[w], depth[w] = v, e, depth[v] + 1
                        tree_edges.append(e)
                        queue.append(w)
        self.parent, self.parent_edge, self.depth = parent, parent_edge, depth
        self.tree_edges = tree_edges
        tree_slot = {e: i for i, e in enumerate(tree_edges)}

        cycles = {}
        for e in range(graph.m):
            if e not in tree_slot:
                a, b = graph.edges[e]
                cycles[e] = [(tree_slot[t], sign) for t, sign in self._tree_path(b, a)]
        self.cotree = sorted(cycles, key=lambda e: (-(len(cycles[e]) + 1), e))
        self.contributions = [cycles[e] for e in self.cotree]

        last_position = [-1] * len(tree_edges)
        for position, contribution in enumerate(self.contributions):
            for slot, _ in contribution:
                last_position[slot] = position
        self.bridges = [tree_edges[slot] for slot, pos in enumerate(last_position) if pos == -1]
        self.checks_at: List[List[int]] = [[] for _ in self.cotree]
        for slot, position in enumerate(last_position):
            if position >= 0:
                self.checks_at[position].append(slot)

        self.choices = []
        for magnitude in range(1, k):
            self.choices.extend((magnitude, -magnitude))

    def _tree_path(self, start: int, end: int) -> List[Tuple[int, int]]:
        """Tree edges walked from start to end, signed by agreement with stored order"""
        edges = self.graph.edges
        up, down = [], []
        x, y = start, end
        while self.depth[x] > self.depth[y]:
            e = self.parent_edge[x]
            up.append((e, 1 if edges[e][0] == x else -1))
            x = self.parent[x]
        while self.depth[y] > self.depth[x]:
            e = self.parent_edge[y]
            down.append((e, 1 if edges[e][0] == self.parent[y] else -1))
            y = self.parent[y]
        while x != y:
            e = self.parent_edge[x]
            up.append((e, 1 if edges[e][0] == x else -1))
            x = self.parent[x]
            e = self.parent_edge[y]
            down.append((e, 1 if edges[e][0] == self.parent[y] else -1))
            y = self.parent[y]
        return up + down[::-1]

    def run(self) -> Optional[List[int]]:
        """Per-edge values in stored orientation, or None if none exist"""
        if self.graph.m == 0:
            return []
        if self.bridges:
            logger.debug(f"Edge {self.bridges[0]} is a bridge: no nowhere-zero flow")
            return None

        self.assignment = [0] * len(self.cotree)
        self.partial = [0] * len(self.tree_edges)
        found = self._descend(0)
        logger.debug(f"Cycle-space search visited {self.nodes} nodes (k={self.k}, found={found})")
        if not found:
            return None

        values = [0] * self.graph.m
        for position, e in enumerate(self.cotree):
            values[e] = self.assignment[position]
        for slot, e in enumerate(self.tree_edges):
            values[e] = self.partial[slot]
        return values

    def _descend(self, position: int) -> bool:
        if position == len(self.cotree):
            return True
        limit = self.k - 1
        partial = self.partial
        contribution = self.contributions[position]
        checks = self.checks_at[position]
        for x in self.choices:
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(self.budget)
            for slot, sign in contribution:
                partial[slot] += sign * x
            if all(partial[s] != 0 and -limit <= partial[s] <= limit for s in checks):
                self.assignment[position] = x
                if self._descend(position + 1):
                    return True
            for slot, sign in contribution:
                partial[slot] -= sign * x
        return False


def solve_nz_kflow(graph: Graph, k: int, budget: int = DEFAULT_BUDGET) -> Optional[Flow]:
    """
    Find a nowhere-zero k-flow by exhaustive cycle-space search.

    Returns:
        The first flow in canonical enumeration order (stored edge
        orientation, possibly negative values), or None when the whole
        space was exhausted without success.

    Raises:
        GraphNotConnected: on disconnected input
        BudgetExceeded: when the node budget runs out first
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if not is_connected(graph):
        raise GraphNotConnected("the flow solver needs a connected graph")
    values = CycleSpaceSearch(graph, k, budget).run()
    if values is None:
        return None
    return Flow(k, Orientation.from_graph(graph), tuple(values))
