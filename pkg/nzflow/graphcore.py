#!/usr/bin/env python3
"""
Undirected multigraphs, orientations and vertex partitions.

Vertices are 0..n-1, edges are indexed 0..m-1 in construction order and
keep the endpoint order they were given in. Parallel edges are allowed,
loops are not.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import InvalidGraph, NotBipartite

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Finite undirected multigraph with indexed edges"""
    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, 'edges', edges)
        if self.n < 0:
            raise InvalidGraph(f"vertex count must be non-negative, got {self.n}")
        for index, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraph(f"edge {index} = {{{u},{v}}} has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise InvalidGraph(f"edge {index} is a loop at vertex {u}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """incidence[v] = ascending edge indices touching v"""
        lists: List[List[int]] = [[] for _ in range(self.n)]
        for index, (u, v) in enumerate(self.edges):
            lists[u].append(index)
            lists[v].append(index)
        return tuple(tuple(items) for items in lists)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> List[int]:
        return [len(items) for items in self.incidence]

    def other_end(self, edge_index: int, v: int) -> int:
        u, w = self.edges[edge_index]
        return w if u == v else u

    def neighbors(self, v: int) -> List[int]:
        """Neighbors of v with multiplicity, in edge-index order"""
        return [self.other_end(e, v) for e in self.incidence[v]]

    def edge_multiset(self) -> Counter:
        return Counter((min(u, v), max(u, v)) for u, v in self.edges)

    def cycle_rank(self) -> int:
        """m - n + c, the dimension of the cycle space"""
        return self.m - self.n + len(components(self))

    def to_networkx(self) -> nx.MultiGraph:
        """MultiGraph whose edge keys are the edge indices"""
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.n))
        for index, (u, v) in enumerate(self.edges):
            g.add_edge(u, v, key=index)
        return g


@dataclass(frozen=True)
class Orientation:
    """Per-edge (tail, head) pairs"""
    dir: Tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, 'dir', tuple((int(t), int(h)) for t, h in self.dir))

    @classmethod
    def from_graph(cls, graph: Graph) -> "Orientation":
        """Orientation following the stored endpoint order"""
        return cls(graph.edges)

    def check(self, graph: Graph) -> Optional[int]:
        """Index of the first edge whose direction does not match graph, or None"""
        if len(self.dir) != graph.m:
            return min(len(self.dir), graph.m)
        for index, ((t, h), (u, v)) in enumerate(zip(self.dir, graph.edges)):
            if (t, h) != (u, v) and (t, h) != (v, u):
                return index
        return None

    def out_edges(self, v: int) -> List[int]:
        return [e for e, (t, _) in enumerate(self.dir) if t == v]

    def in_edges(self, v: int) -> List[int]:
        return [e for e, (_, h) in enumerate(self.dir) if h == v]

    def flipped(self, edge_index: int) -> "Orientation":
        items = list(self.dir)
        t, h = items[edge_index]
        items[edge_index] = (h, t)
        return Orientation(tuple(items))


@dataclass(frozen=True)
class VertexPartition:
    """
    Disjoint nonempty blocks covering 0..n-1.

    Blocks are stored canonically: each block ascending, blocks ordered by
    their smallest vertex.
    """
    blocks: Tuple[Tuple[int, ...], ...]
    block_of: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        blocks = [tuple(sorted(int(v) for v in block)) for block in self.blocks]
        if any(len(block) == 0 for block in blocks):
            raise ValueError("partition blocks must be nonempty")
        blocks.sort(key=lambda block: block[0])
        n = sum(len(block) for block in blocks)
        block_of = [-1] * n
        for index, block in enumerate(blocks):
            for v in block:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} outside 0..{n - 1}; blocks must cover every vertex")
                if block_of[v] != -1:
                    raise ValueError(f"vertex {v} appears in two blocks")
                block_of[v] = index
        object.__setattr__(self, 'blocks', tuple(blocks))
        object.__setattr__(self, 'block_of', tuple(block_of))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "VertexPartition":
        """Partition from a vertex -> arbitrary label map"""
        groups: Dict[int, List[int]] = {}
        for v, label in enumerate(labels):
            groups.setdefault(label, []).append(v)
        return cls(tuple(tuple(members) for members in groups.values()))

    @property
    def n(self) -> int:
        return len(self.block_of)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> List[int]:
        return [len(block) for block in self.blocks]


@dataclass(frozen=True)
class Subgraph:
    """A graph together with index maps back to its parent graph"""
    graph: Graph
    vertex_map: Tuple[int, ...]
    edge_map: Tuple[int, ...]


def valency(graph: Graph) -> Optional[int]:
    """Common degree of every vertex, or None when the graph is not regular"""
    if graph.n < 1:
        raise InvalidGraph("valency is undefined on the empty graph")
    degrees = set(graph.degrees())
    if len(degrees) != 1:
        return None
    return degrees.pop()


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    return nx.is_connected(graph.to_networkx())


def components(graph: Graph) -> List[Subgraph]:
    """Connected components ordered by smallest vertex, each relabeled to 0..k-1"""
    if graph.n == 0:
        return []
    parts = sorted((sorted(c) for c in nx.connected_components(graph.to_networkx())), key=lambda c: c[0])
    result = []
    for vertices in parts:
        result.append(_induced(graph, vertices))
    return result


def _induced(graph: Graph, vertices: Sequence[int], keep=None) -> Subgraph:
    local = {v: i for i, v in enumerate(vertices)}
    edges = []
    edge_map = []
    for index, (u, v) in enumerate(graph.edges):
        if u in local and v in local and (keep is None or keep(u, v)):
            edges.append((local[u], local[v]))
            edge_map.append(index)
    return Subgraph(Graph(len(vertices), tuple(edges)), tuple(vertices), tuple(edge_map))


def bipartition(graph: Graph) -> Tuple[List[int], List[int]]:
    """
    Proper 2-coloring of the graph.

    Returns:
        (side containing vertex 0, other side), both ascending

    Raises:
        NotBipartite: if an odd cycle exists
    """
    if graph.n == 0:
        return [], []
    try:
        color = nx.bipartite.color(graph.to_networkx())
    except nx.NetworkXError as e:
        raise NotBipartite(f"graph is not bipartite: {e}") from e
    first = color[0]
    side_a = [v for v in range(graph.n) if color[v] == first]
    side_b = [v for v in range(graph.n) if color[v] != first]
    return side_a, side_b


def induced_bipartite_between(graph: Graph, p: Iterable[int], q: Iterable[int]) -> Subgraph:
    """
    Subgraph on P ∪ Q with exactly the edges joining P to Q.

    Local vertex labels follow ascending parent labels; edges keep parent order.
    """
    p_set, q_set = set(p), set(q)
    if p_set & q_set:
        raise ValueError(f"vertex sets overlap in {sorted(p_set & q_set)}")

    def crosses(u: int, v: int) -> bool:
        return (u in p_set and v in q_set) or (u in q_set and v in p_set)

    return _induced(graph, sorted(p_set | q_set), keep=crosses)
