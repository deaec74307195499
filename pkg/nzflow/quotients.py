#!/usr/bin/env python3
"""
Quotient graphs over vertex partitions, multicover certificates, induced
block actions and flow lifting from a quotient back to its multicover.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import GraphNotConnected, InvalidQuotientFlow, NotMulticover, PartitionNotInvariant
from .flowkit import Flow, verify_flow
from .graphcore import Graph, Orientation, VertexPartition, is_connected
from .permgrp import PermGroup, Permutation

logger = logging.getLogger(__name__)

BlockPair = Tuple[int, int]


@dataclass(frozen=True)
class QuotientResult:
    """
    Simple quotient graph on block indices.

    edge_map[e] is the quotient edge of Γ-edge e, or None when e lies
    inside a block; such edges are listed in internal_edges.
    """
    quotient: Graph
    edge_map: Tuple[Optional[int], ...]
    internal_edges: Tuple[int, ...]


@dataclass(frozen=True)
class MulticoverCert:
    """Proof that Γ is a t-fold multicover of the quotient"""
    t: int
    quotient: Graph
    edge_map: Tuple[int, ...]
    partition: VertexPartition


def quotient_graph(graph: Graph, partition: VertexPartition) -> QuotientResult:
    """
    Blocks become vertices, adjacent iff some Γ-edge crosses between them.

    Quotient edges are stored as (P, Q) with P < Q, in ascending pair order.
    """
    if partition.n != graph.n:
        raise ValueError(f"partition covers {partition.n} vertices, graph has {graph.n}")
    block_of = partition.block_of
    internal = []
    pairs = set()
    for e, (u, v) in enumerate(graph.edges):
        p, q = block_of[u], block_of[v]
        if p == q:
            internal.append(e)
        else:
            pairs.add((min(p, q), max(p, q)))

    quotient_edges = sorted(pairs)
    index_of = {pair: i for i, pair in enumerate(quotient_edges)}
    edge_map: List[Optional[int]] = []
    for u, v in graph.edges:
        p, q = block_of[u], block_of[v]
        edge_map.append(None if p == q else index_of[(min(p, q), max(p, q))])

    if internal:
        logger.debug(f"{len(internal)} edges lie inside blocks and have no quotient image")
    return QuotientResult(Graph(len(partition), tuple(quotient_edges)), tuple(edge_map), tuple(internal))


def between_block_regularity(graph: Graph, partition: VertexPartition) -> Dict[BlockPair, Optional[int]]:
    """
    For each adjacent block pair (P, Q), the common degree of every vertex
    of P ∪ Q inside Γ[P, Q], or None when that bipartite graph is irregular.
    """
    block_of = partition.block_of
    degree: Dict[BlockPair, Counter] = {}
    for u, v in graph.edges:
        p, q = block_of[u], block_of[v]
        if p == q:
            continue
        counts = degree.setdefault((min(p, q), max(p, q)), Counter())
        counts[u] += 1
        counts[v] += 1

    result: Dict[BlockPair, Optional[int]] = {}
    for (p, q), counts in sorted(degree.items()):
        members = partition.blocks[p] + partition.blocks[q]
        values = {counts[v] for v in members}
        result[(p, q)] = values.pop() if len(values) == 1 else None
    return result


def certify_multicover(graph: Graph, partition: VertexPartition) -> MulticoverCert:
    """
    Check that every block is independent and every Γ[P, Q] over adjacent
    blocks is t-regular for one common t.

    Raises:
        GraphNotConnected: on disconnected input
        NotMulticover: naming the first offending block pair
    """
    if not is_connected(graph):
        raise GraphNotConnected("multicover certification needs a connected graph")
    result = quotient_graph(graph, partition)
    if result.internal_edges:
        u, _ = graph.edges[result.internal_edges[0]]
        block = partition.block_of[u]
        raise NotMulticover("block is not an independent set", (block, block))
    if result.quotient.m == 0:
        raise NotMulticover("quotient has no edges")

    t = None
    for pair, degree in between_block_regularity(graph, partition).items():
        if degree is None:
            raise NotMulticover("between-block subgraph is not regular", pair)
        if t is None:
            t = degree
        elif degree != t:
            raise NotMulticover(f"between-block degree {degree} differs from {t}", pair)

    logger.debug(f"Multicover over {len(partition)} blocks with t={t}")
    return MulticoverCert(t, result.quotient, tuple(result.edge_map), partition)


def induced_quotient_action(group: PermGroup, partition: VertexPartition) -> PermGroup:
    """
    Faithful image of the group on block indices.

    Identity images and duplicate generators are dropped, so the kernel of
    the block action is factored out.

    Raises:
        PartitionNotInvariant: if a generator splits some block
    """
    if partition.n != group.degree:
        raise ValueError(f"partition covers {partition.n} points, group has degree {group.degree}")
    block_of = partition.block_of
    images = []
    for index, g in enumerate(group.generators):
        mapping = []
        for block in partition.blocks:
            targets = {block_of[g.images[v]] for v in block}
            if len(targets) != 1:
                raise PartitionNotInvariant(
                    f"generator {index} maps block {block_of[block[0]]} into blocks {sorted(targets)}")
            mapping.append(targets.pop())
        images.append(tuple(mapping))

    identity = tuple(range(len(partition)))
    unique = list(dict.fromkeys(image for image in images if image != identity))
    generators = [Permutation(image) for image in unique]
    return PermGroup(len(partition), generators, group.order_cap)


def lift_flow(graph: Graph, cert: MulticoverCert, flow: Flow) -> Flow:
    """
    Pull a quotient flow back to Γ: every Γ-edge between P and Q points from
    P to Q when the quotient edge does, and carries f(P, Q).

    Raises:
        InvalidQuotientFlow: unless flow is nowhere-zero on cert.quotient
    """
    if len(cert.edge_map) != graph.m:
        raise ValueError(f"certificate maps {len(cert.edge_map)} edges, graph has {graph.m}")
    if flow.edge_count != cert.quotient.m:
        raise InvalidQuotientFlow(f"flow has {flow.edge_count} edges, quotient has {cert.quotient.m}")
    report = verify_flow(cert.quotient, flow)
    if not report.ok:
        raise InvalidQuotientFlow(report.summary())

    block_of = cert.partition.block_of
    directions = []
    values = []
    for e, (u, v) in enumerate(graph.edges):
        q = cert.edge_map[e]
        tail_block, _ = flow.orientation.dir[q]
        directions.append((u, v) if block_of[u] == tail_block else (v, u))
        values.append(flow.values[q])
    return Flow(flow.k, Orientation(tuple(directions)), tuple(values))
