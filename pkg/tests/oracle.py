"""
Independent naive flow search used to cross-check the solver.

Values are enumerated edge by edge on the stored orientation; a vertex's
balance is checked once its last incident edge has a value.
"""

from typing import List, Optional

from nzflow.graphcore import Graph


def naive_flow_values(graph: Graph, k: int) -> Optional[List[int]]:
    last_edge = [-1] * graph.n
    for e, (u, v) in enumerate(graph.edges):
        last_edge[u] = e
        last_edge[v] = e

    values = [0] * graph.m
    net = [0] * graph.n
    choices = [x for x in range(-(k - 1), k) if x != 0]

    def assign(e: int) -> bool:
        if e == graph.m:
            return True
        u, v = graph.edges[e]
        for x in choices:
            net[u] += x
            net[v] -= x
            values[e] = x
            closed = [w for w in (u, v) if last_edge[w] == e]
            if all(net[w] == 0 for w in closed) and assign(e + 1):
                return True
            net[u] -= x
            net[v] += x
        return False

    return list(values) if assign(0) else None


def naive_flow_exists(graph: Graph, k: int) -> bool:
    return naive_flow_values(graph, k) is not None
