#!/usr/bin/env python3
"""
Three-flow pipeline for graphs with a solvable arc-transitive group.

The induction runs on the derived length: pick the last nontrivial derived
term N (abelian and normal), then either N is regular and the graph is an
abelian Cayley graph, or the graph is a multicover of its N-orbit quotient
and a flow on the quotient lifts back. Every step is recorded in a trace.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field

from .config import PipelineConfig
from .errors import (
    Infeasible,
    InternalInvariantViolation,
    NotAutomorphismGroup,
    NotMulticover,
    OutsideScope,
)
from .flowkit import (
    Flow,
    bipartite_regular_three_flow,
    eulerian_two_flow,
    reinterpret_flow,
    solve_nz_kflow,
    verify_flow,
)
from .graphcore import Graph, Orientation, bipartition, components, is_connected, valency
from .permgrp import (
    DerivedSeries,
    PermGroup,
    derived_series,
    first_violating_generator,
    is_abelian,
    is_arc_transitive,
    is_edge_transitive,
    is_normal_subgroup,
    is_regular_action,
    is_transitive,
    orbits,
    preserves_graph,
)
from .quotients import certify_multicover, induced_quotient_action, lift_flow

logger = logging.getLogger(__name__)


TRACE_INDENT = "  "


class TraceStep(BaseModel):
    """One pipeline decision; values print in insertion order, indented by depth"""
    kind: str
    depth: int = Field(default=0, ge=0)
    values: Dict[str, Union[int, str]] = Field(default_factory=dict)

    def render(self) -> str:
        fields = " ".join(f"{key}={value}" for key, value in self.values.items())
        return f"{TRACE_INDENT * self.depth}STEP {self.kind} {fields}".rstrip()


@dataclass(frozen=True)
class PipelineTrace:
    steps: Tuple[TraceStep, ...]
    final: Flow

    def kinds(self) -> List[str]:
        return [step.kind for step in self.steps]

    def render(self) -> List[str]:
        return [step.render() for step in self.steps]


class HypothesisReport(BaseModel):
    """Each hypothesis of the three-flow theorem, checked independently"""
    connected: bool
    regular: bool
    valency: Optional[int] = None
    valency_at_least_four: bool
    preserves_graph: bool
    vertex_transitive: bool
    arc_transitive: bool
    edge_transitive: bool
    solvable: bool
    derived_length: Optional[int] = None
    group_order: int

    def failures(self) -> List[str]:
        """Names of the hypotheses the theorem needs that do not hold"""
        checks = [
            ("connected", self.connected),
            ("regular", self.regular),
            ("valency-at-least-four", self.valency_at_least_four),
            ("preserves-graph", self.preserves_graph),
            ("arc-transitive", self.arc_transitive),
            ("solvable", self.solvable),
        ]
        return [name for name, holds in checks if not holds]

    @property
    def all_hold(self) -> bool:
        return not self.failures()


def check_hypotheses(graph: Graph, group: PermGroup) -> HypothesisReport:
    """Report regularity, valency, automorphism, transitivity and solvability"""
    d = valency(graph) if graph.n else None
    preserves = group.degree == graph.n and preserves_graph(group, graph)
    has_edges = graph.m > 0
    series = derived_series(group)
    return HypothesisReport(
        connected=is_connected(graph),
        regular=d is not None,
        valency=d,
        valency_at_least_four=d is not None and d >= 4,
        preserves_graph=preserves,
        vertex_transitive=group.degree == graph.n and is_transitive(group),
        arc_transitive=preserves and has_edges and is_arc_transitive(group, graph),
        edge_transitive=preserves and has_edges and is_edge_transitive(group, graph),
        solvable=series.is_solvable,
        derived_length=series.derived_length,
        group_order=group.order,
    )


class ThreeFlowPipeline:
    """
    Runs one solve. Not shared between calls: the step list is per instance.
    """

    def __init__(self, config: Optional[PipelineConfig] = None):
        self.config = config or PipelineConfig()
        self.steps: List[TraceStep] = []

    def run(self, graph: Graph, group: PermGroup) -> Tuple[Flow, PipelineTrace]:
        self.steps = []
        if self.config.strict:
            report = check_hypotheses(graph, group)
            if not report.all_hold:
                raise OutsideScope(f"hypotheses unmet: {', '.join(report.failures())}")

        flow = self._solve(graph, group, depth=0)
        report = verify_flow(graph, flow)
        if flow.k != 3 or not report.ok:
            raise InternalInvariantViolation(f"pipeline produced an invalid flow: {report.summary()}")
        logger.info(f"Pipeline finished in {len(self.steps)} steps")
        return flow, PipelineTrace(tuple(self.steps), flow)

    def _record(self, kind: str, depth: int, **values) -> None:
        step = TraceStep(kind=kind, depth=depth, values=values)
        self.steps.append(step)
        logger.info(step.render())

    def _out_of_scope(self, depth: int, reason: str):
        if depth == 0:
            return OutsideScope(reason)
        return InternalInvariantViolation(f"quotient at depth {depth}: {reason}")

    def _group_hypothesis_failure(self, graph: Graph, group: PermGroup) -> Tuple[Optional[str], Optional[DerivedSeries]]:
        if not is_arc_transitive(group, graph):
            return "not-arc-transitive", None
        series = derived_series(group)
        if not series.is_solvable:
            return "not-solvable", series
        return None, series

    def _generic(self, graph: Graph) -> Flow:
        flow = solve_nz_kflow(graph, 3, self.config.solver.budget)
        if flow is None:
            raise Infeasible(f"no nowhere-zero 3-flow exists on this {valency(graph)}-regular graph")
        return flow

    def _solve(self, graph: Graph, group: PermGroup, depth: int) -> Flow:
        if not is_connected(graph):
            raise self._out_of_scope(depth, "graph is not connected")
        d = valency(graph)
        if d is None:
            raise self._out_of_scope(depth, "graph is not regular")

        if d % 2 == 0:
            self._record("EvenValency", depth, d=d)
            return reinterpret_flow(eulerian_two_flow(graph), 3)

        bad = first_violating_generator(group, graph)
        if bad is not None:
            if depth == 0:
                raise NotAutomorphismGroup(bad)
            raise InternalInvariantViolation(f"induced action at depth {depth} does not preserve the quotient")

        failure, series = self._group_hypothesis_failure(graph, group)
        if failure is not None:
            if depth > 0 or not self.config.fallback:
                raise self._out_of_scope(depth, failure.replace("-", " "))
            self._record("SolverFallback", depth, d=d, reason=failure)
            return self._generic(graph)

        if d % 3 == 0:
            self._record("DivisibleByThreeFallback", depth, d=d)
            return self._generic(graph)
        if d == 1:
            self._record("LowValencyFallback", depth, d=d)
            return self._generic(graph)

        if len(series.terms) < 2:
            raise InternalInvariantViolation("trivial group acting arc-transitively on a graph with edges")
        normal = series.terms[-2]
        if not is_abelian(normal) or not is_normal_subgroup(normal, group):
            raise InternalInvariantViolation("last nontrivial derived term is not an abelian normal subgroup")

        if is_transitive(normal):
            if not is_regular_action(normal):
                raise InternalInvariantViolation(f"transitive abelian subgroup of order {normal.order} is not regular")
            self._record("TransitiveAbelianBase", depth, **{"|N|": normal.order})
            flow = solve_nz_kflow(graph, 3, self.config.solver.budget)
            if flow is None:
                raise InternalInvariantViolation("abelian Cayley graph without a nowhere-zero 3-flow")
            return flow

        partition = orbits(normal)
        try:
            cert = certify_multicover(graph, partition)
        except NotMulticover as e:
            raise InternalInvariantViolation(f"normal orbit partition is not a multicover: {e}") from e
        qval = valency(cert.quotient)
        if qval is None or qval * cert.t != d:
            raise InternalInvariantViolation(f"quotient valency {qval} with t={cert.t} does not divide {d}")

        if qval == 1:
            side_a, side_b = bipartition(graph)
            self._record("BipartiteBase", depth, A=len(side_a), B=len(side_b))
            return bipartite_regular_three_flow(graph)

        self._record("Recurse", depth, **{"|N|": normal.order, "blocks": len(partition), "qval": qval})
        quotient_group = induced_quotient_action(group, partition)
        quotient_flow = self._solve(cert.quotient, quotient_group, depth + 1)
        self._record("Lift", depth, t=cert.t)
        return lift_flow(graph, cert, quotient_flow)


def solve_three_flow(graph: Graph, group: PermGroup,
                     config: Optional[PipelineConfig] = None) -> Tuple[Flow, PipelineTrace]:
    """
    Nowhere-zero 3-flow for a connected regular graph with a solvable
    arc-transitive automorphism group.

    Raises:
        OutsideScope: a hypothesis fails (and fallback is off)
        NotAutomorphismGroup: a generator does not preserve the graph
        Infeasible: only from the generic-solver steps
        BudgetExceeded: the solver ran out of nodes
        InternalInvariantViolation: a step that cannot fail did
    """
    return ThreeFlowPipeline(config).run(graph, group)


def solve_three_flow_per_component(graph: Graph, groups: Sequence[PermGroup],
                                   config: Optional[PipelineConfig] = None) -> Tuple[Flow, List[PipelineTrace]]:
    """Run the pipeline on each component with its own group and merge the flows"""
    parts = components(graph)
    if len(parts) != len(groups):
        raise ValueError(f"{len(parts)} components but {len(groups)} groups")

    directions: List[Tuple[int, int]] = list(graph.edges)
    values = [0] * graph.m
    traces = []
    for index, (part, group) in enumerate(zip(parts, groups)):
        logger.info(f"Component {index}: {part.graph.n} vertices, {part.graph.m} edges")
        flow, trace = solve_three_flow(part.graph, group, config)
        for local, parent in enumerate(part.edge_map):
            tail, head = flow.orientation.dir[local]
            directions[parent] = (part.vertex_map[tail], part.vertex_map[head])
            values[parent] = flow.values[local]
        traces.append(trace)
    return Flow(3, Orientation(tuple(directions)), tuple(values)), traces
