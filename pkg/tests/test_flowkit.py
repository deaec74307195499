"""
Tests for flow verification, constructive flows and the exhaustive solver
"""

from collections import Counter

import pytest

from nzflow.errors import (
    BudgetExceeded,
    GraphNotConnected,
    NotBipartite,
    NotRegular,
    OddDegreeVertex,
    ValencyTooSmall,
)
from nzflow.families import cayley, circulant, complete, complete_bipartite, cycle
from nzflow.families import circulant_graph
from nzflow.flowkit import (
    Flow,
    bipartite_regular_three_flow,
    color_weights,
    eulerian_two_flow,
    konig_edge_coloring,
    reinterpret_flow,
    solve_nz_kflow,
    verify_flow,
)
from nzflow.graphcore import Graph, Orientation, bipartition, valency
from tests.oracle import naive_flow_exists


def cyclic_flow(n: int, k: int = 2) -> Flow:
    graph = cycle(n).graph
    return Flow(k, Orientation.from_graph(graph), (1,) * n)


class TestVerifyFlow:
    """Test the flow checker"""

    @pytest.mark.parametrize("n", [3, 4, 7, 10])
    def test_cyclic_all_ones(self, n):
        """Going around a cycle with value 1 is a nowhere-zero 2-flow"""
        report = verify_flow(cycle(n).graph, cyclic_flow(n))
        assert report.ok
        assert report.summary() == "OK nowhere-zero 2-flow"

    def test_large_cycle(self):
        n = 10_000
        assert verify_flow(cycle(n).graph, cyclic_flow(n)).ok

    def test_zero_value(self):
        """A zero is reported before the conservation failure it causes"""
        graph = cycle(5).graph
        flow = Flow(3, Orientation.from_graph(graph), (1, 1, 1, 0, 1))
        report = verify_flow(graph, flow)
        assert not report.nowhere_zero
        assert not report.is_flow
        assert report.summary() == "FAIL zero value at edge 3"

    def test_zero_flow_conserves(self):
        """All zeros is a flow, just not a nowhere-zero one"""
        graph = cycle(4).graph
        report = verify_flow(graph, Flow(2, Orientation.from_graph(graph), (0, 0, 0, 0)))
        assert report.is_flow
        assert not report.nowhere_zero
        assert not report.ok
        assert report.summary() == "FAIL zero value at edge 0"

    def test_conservation(self):
        graph = cycle(5).graph
        flow = Flow(3, Orientation.from_graph(graph), (1, 1, 2, 1, 1))
        report = verify_flow(graph, flow)
        assert report.nowhere_zero
        assert not report.is_flow
        assert report.summary() == "FAIL conservation at vertex 2"

    def test_value_out_of_range(self):
        graph = cycle(4).graph
        flow = Flow(3, Orientation.from_graph(graph), (3, 3, 3, 3))
        assert verify_flow(graph, flow).summary() == "FAIL value out of range at edge 0"

    def test_orientation_mismatch(self):
        graph = cycle(4).graph
        flow = Flow(2, Orientation(((0, 1), (1, 2), (2, 0), (3, 0))), (1, 1, 1, 1))
        assert verify_flow(graph, flow).summary() == "FAIL orientation mismatch at edge 2"

    @pytest.mark.parametrize("edge", range(6))
    def test_every_single_perturbation_rejected(self, edge):
        """Changing or zeroing any one edge of a cyclic flow breaks it"""
        graph = cycle(6).graph
        for value in (0, -1, 2):
            values = [1] * 6
            values[edge] = value
            flow = Flow(3, Orientation.from_graph(graph), tuple(values))
            assert not verify_flow(graph, flow).ok

    def test_negative_values_allowed(self, c6_graph):
        flow = Flow(2, Orientation.from_graph(c6_graph).flipped(0), (-1, 1, 1, 1, 1, 1))
        assert verify_flow(c6_graph, flow).ok

    def test_edge_count_mismatch(self, c6_graph):
        with pytest.raises(ValueError):
            verify_flow(c6_graph, cyclic_flow(5))

    def test_reinterpret(self):
        flow = reinterpret_flow(cyclic_flow(4), 3)
        assert flow.k == 3
        with pytest.raises(ValueError):
            reinterpret_flow(flow, 2)


def even_regular_graphs():
    """Fifty connected circulants of valency 2 to 8"""
    graphs = []
    for n in range(9, 22):
        for r in range(1, 5):
            graphs.append(circulant_graph(n, list(range(1, r + 1))))
    return graphs[:50]


class TestEulerianTwoFlow:
    """Test the Eulerian-circuit construction"""

    def test_generated_even_regular_graphs(self):
        graphs = even_regular_graphs()
        assert len(graphs) == 50
        for graph in graphs:
            flow = eulerian_two_flow(graph)
            assert flow.k == 2
            assert set(flow.values) == {1}
            assert verify_flow(graph, flow).ok

    def test_complete_odd_order(self, k5):
        assert verify_flow(k5.graph, eulerian_two_flow(k5.graph)).ok

    def test_multigraph_and_disconnected(self, digon):
        """Components are handled separately; parallel edges are distinct arcs"""
        graph = Graph(5, ((0, 1), (1, 0), (2, 3), (3, 4), (4, 2)))
        flow = eulerian_two_flow(graph)
        assert verify_flow(graph, flow).ok
        assert flow.orientation.dir[0] != flow.orientation.dir[1]

    def test_odd_degree_raises(self, k4):
        with pytest.raises(OddDegreeVertex) as exc_info:
            eulerian_two_flow(k4.graph)
        assert exc_info.value.vertex == 0
        assert exc_info.value.degree == 3


def regular_bipartite_graphs():
    """Connected d-regular bipartite graphs, d in 2..5, at most 12 vertices"""
    return [
        cycle(6).graph,
        cycle(8).graph,
        cycle(12).graph,
        complete_bipartite(2, 2).graph,
        complete_bipartite(3, 3).graph,
        complete_bipartite(4, 4).graph,
        complete_bipartite(5, 5).graph,
        cayley("z2xz2xz2", "{(1,0,0),(0,1,0),(0,0,1)}").graph,
        circulant(10, [1, 3]).graph,
        circulant(12, [1, 3]).graph,
        circulant(12, [1, 5]).graph,
        circulant(10, [1, 3, 5]).graph,
        circulant(8, [1, 3]).graph,
    ]


class TestBipartiteThreeFlow:
    """Test the edge-coloring construction"""

    @pytest.mark.parametrize("d,expected", [
        (2, [1, -1]),
        (3, [2, -1, -1]),
        (4, [1, -1, 1, -1]),
        (5, [2, -1, -1, 1, -1]),
    ])
    def test_color_weights(self, d, expected):
        assert color_weights(d) == expected
        assert sum(color_weights(d)) == 0

    def test_color_weights_need_two_colors(self):
        with pytest.raises(ValencyTooSmall):
            color_weights(1)

    def test_konig_coloring_is_proper(self, k55):
        """Every vertex sees each color exactly once"""
        graph = k55.graph
        side_a, _ = bipartition(graph)
        colors = konig_edge_coloring(graph, side_a)
        for v in range(graph.n):
            assert sorted(colors[e] for e in graph.incidence[v]) == list(range(5))

    def test_k55_weights_per_vertex(self, k55):
        flow = bipartite_regular_three_flow(k55.graph)
        assert verify_flow(k55.graph, flow).ok
        for v in range(5):
            out = [flow.values[e] for e in flow.orientation.out_edges(v)]
            assert Counter(out) == Counter([2, -1, -1, 1, -1])

    def test_edges_point_from_first_side(self, k33):
        flow = bipartite_regular_three_flow(k33.graph)
        assert all(tail < 3 <= head for tail, head in flow.orientation.dir)

    def test_regular_bipartite_corpus(self):
        """Construction succeeds, and the solver agrees that a 3-flow exists"""
        for graph in regular_bipartite_graphs():
            assert 2 <= valency(graph) <= 5
            flow = bipartite_regular_three_flow(graph)
            assert flow.k == 3
            assert verify_flow(graph, flow).ok
            assert solve_nz_kflow(graph, 3) is not None

    def test_multigraph(self, digon):
        flow = bipartite_regular_three_flow(digon)
        assert verify_flow(digon, flow).ok

    def test_rejects_odd_cycle(self):
        with pytest.raises(NotBipartite):
            bipartite_regular_three_flow(cycle(5).graph)

    def test_rejects_irregular(self):
        with pytest.raises(NotRegular):
            bipartite_regular_three_flow(Graph(3, ((0, 1), (1, 2))))

    def test_rejects_valency_one(self):
        with pytest.raises(ValencyTooSmall):
            bipartite_regular_three_flow(Graph(2, ((0, 1),)))

    def test_rejects_disconnected(self):
        graph = Graph(8, cycle(4).graph.edges + tuple((u + 4, v + 4) for u, v in cycle(4).graph.edges))
        with pytest.raises(GraphNotConnected):
            bipartite_regular_three_flow(graph)


class TestSolver:
    """Test the exhaustive cycle-space search"""

    def test_k4_has_no_three_flow(self, k4):
        assert solve_nz_kflow(k4.graph, 3) is None
        assert solve_nz_kflow(k4.graph, 4) is not None

    def test_petersen_needs_five(self, petersen_instance):
        graph = petersen_instance.graph
        assert solve_nz_kflow(graph, 4) is None
        flow = solve_nz_kflow(graph, 5)
        assert flow is not None
        assert verify_flow(graph, flow).ok

    def test_k33_three_flow(self, k33):
        flow = solve_nz_kflow(k33.graph, 3)
        assert flow is not None
        assert verify_flow(k33.graph, flow).ok

    def test_cycle_two_flow(self, c5):
        flow = solve_nz_kflow(c5.graph, 2)
        assert verify_flow(c5.graph, flow).ok

    def test_output_uses_stored_orientation(self, k33):
        flow = solve_nz_kflow(k33.graph, 3)
        assert flow.orientation.dir == k33.graph.edges

    def test_reversed_edges_do_not_change_feasibility(self, k4):
        reversed_graph = Graph(4, tuple((v, u) for u, v in k4.graph.edges))
        assert solve_nz_kflow(reversed_graph, 3) is None
        assert verify_flow(reversed_graph, solve_nz_kflow(reversed_graph, 4)).ok

    def test_bridge_means_infeasible(self, two_triangles_bridged):
        assert solve_nz_kflow(two_triangles_bridged, 5) is None

    def test_graph_without_edges(self):
        flow = solve_nz_kflow(Graph(1), 3)
        assert flow.values == ()

    def test_multigraph(self, digon):
        flow = solve_nz_kflow(digon, 2)
        assert verify_flow(digon, flow).ok

    def test_disconnected_rejected(self):
        with pytest.raises(GraphNotConnected):
            solve_nz_kflow(Graph(4, ((0, 1), (2, 3))), 3)

    def test_budget(self, petersen_instance):
        with pytest.raises(BudgetExceeded):
            solve_nz_kflow(petersen_instance.graph, 4, budget=10)

    def test_k_must_be_at_least_two(self, c5):
        with pytest.raises(ValueError):
            solve_nz_kflow(c5.graph, 1)

    @pytest.mark.parametrize("name,graph,k", [
        ("K4", complete(4).graph, 3),
        ("K4", complete(4).graph, 4),
        ("K5", complete(5).graph, 2),
        ("K5", complete(5).graph, 3),
        ("K33", complete_bipartite(3, 3).graph, 2),
        ("K33", complete_bipartite(3, 3).graph, 3),
        ("C7", cycle(7).graph, 2),
        ("Q3", cayley("z2xz2xz2", "{(1,0,0),(0,1,0),(0,0,1)}").graph, 3),
        ("octahedron", circulant(6, [1, 2]).graph, 2),
        ("prism", Graph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5))), 3),
        ("prism", Graph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5))), 4),
    ])
    def test_agrees_with_naive_oracle(self, name, graph, k):
        """Verdict matches independent per-edge enumeration"""
        assert graph.cycle_rank() <= 10
        assert (solve_nz_kflow(graph, k) is not None) == naive_flow_exists(graph, k), name

    def test_petersen_verdicts_match_oracle(self, petersen_instance):
        graph = petersen_instance.graph
        assert not naive_flow_exists(graph, 4)
        assert naive_flow_exists(graph, 5)


if __name__ == "__main__":
    pytest.main([__file__, "-v", "--tb=short"])
