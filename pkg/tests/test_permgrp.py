"""
Tests for permutations, group closure, derived series and orbit actions
"""

import random

import pytest

from nzflow.errors import InvalidPermutation, NotAutomorphismGroup, OrderCapExceeded
from nzflow.families import complete_bipartite, cycle
from nzflow.graphcore import Graph
from nzflow.permgrp import (
    PermGroup,
    Permutation,
    commutator,
    derived_series,
    derived_subgroup,
    enumerate_elements,
    is_abelian,
    is_arc_transitive,
    is_edge_transitive,
    is_normal_subgroup,
    is_regular_action,
    is_transitive,
    orbits,
    preserves_graph,
)


class TestPermutation:
    """Test construction and arithmetic of single permutations"""

    def test_composition_is_left_to_right(self):
        """(g * h)(i) applies g first, then h"""
        g = Permutation((1, 2, 0))
        h = Permutation((0, 2, 1))
        assert (g * h).images == (2, 1, 0)
        assert (g * h)(0) == h(g(0))

    def test_inverse_and_identity(self):
        """g * g^-1 is the identity"""
        g = Permutation.from_cycles(5, (0, 3, 1), (2, 4))
        assert (g * g.inverse()).is_identity()
        assert Permutation.identity(5).is_identity()

    def test_rejects_non_bijection(self):
        """Repeated images are not a permutation"""
        with pytest.raises(InvalidPermutation):
            Permutation((0, 0, 1))
        with pytest.raises(ValueError):
            Permutation((1, 2, 3))

    def test_cycles_skip_fixed_points(self):
        """Cycle notation lists nontrivial cycles only"""
        g = Permutation.from_cycles(6, (0, 2, 4))
        assert g.cycles() == [(0, 2, 4)]

    def test_commutator_of_commuting_elements(self):
        """Disjoint cycles commute"""
        a = Permutation.from_cycles(4, (0, 1))
        b = Permutation.from_cycles(4, (2, 3))
        assert commutator(a, b).is_identity()

    def test_conjugate(self):
        """Conjugation relabels the cycle"""
        g = Permutation.from_cycles(3, (0, 1))
        by = Permutation.from_cycles(3, (1, 2))
        assert g.conjugate(by) == Permutation.from_cycles(3, (0, 2))


class TestGroupClosure:
    """Test element enumeration"""

    def test_s4_order(self, s4):
        """Transposition and 4-cycle generate S4"""
        assert s4.order == 24

    def test_cyclic_order(self, z5):
        assert z5.order == 5
        assert is_abelian(z5)

    def test_empty_generators_give_trivial_group(self):
        """No generators means the trivial group"""
        group = PermGroup(3, [])
        assert group.generators == ()
        assert group.order == 1
        assert group.is_trivial()

    def test_order_cap(self, s4):
        """Closure beyond the cap raises"""
        with pytest.raises(OrderCapExceeded):
            enumerate_elements(s4.generators, order_cap=10)

    def test_membership(self, d4):
        assert Permutation.from_cycles(4, (0, 2), (1, 3)) in d4
        assert Permutation.from_cycles(4, (0, 1)) not in d4

    def test_generator_degree_mismatch(self):
        """Generators must act on the declared degree"""
        with pytest.raises(ValueError):
            PermGroup(4, [Permutation((1, 0, 2))])

    def test_closure_is_idempotent(self, s4):
        """Closing an already closed set adds nothing"""
        elements = enumerate_elements(s4.generators)
        assert len(enumerate_elements(sorted(elements, key=lambda g: g.images))) == len(elements)

    def test_action_axiom(self, a5):
        """point^(gh) == (point^g)^h for random elements"""
        rng = random.Random(0)
        elements = sorted(a5.elements, key=lambda g: g.images)
        for _ in range(50):
            g, h = rng.choice(elements), rng.choice(elements)
            point = rng.randrange(5)
            assert (g * h)(point) == h(g(point))

    @pytest.mark.parametrize("fixture", ["s4", "d4", "a5", "z5"])
    def test_lagrange(self, fixture, request):
        group = request.getfixturevalue(fixture)
        assert group.order % derived_subgroup(group).order == 0


class TestDerivedSeries:
    """Test derived subgroups and solvability"""

    def test_s4_series(self, s4):
        """S4 > A4 > V4 > 1"""
        series = derived_series(s4)
        assert series.orders() == [24, 12, 4, 1]
        assert series.derived_length == 3
        assert series.is_solvable

    def test_d4_length_two(self, d4):
        """D4' is the rotation by two"""
        series = derived_series(d4)
        assert series.orders() == [8, 2, 1]
        assert series.derived_length == 2

    def test_a5_not_solvable(self, a5):
        """A5 is perfect, so the series stalls immediately"""
        series = derived_series(a5)
        assert series.orders() == [60]
        assert series.derived_length is None
        assert not series.is_solvable

    @pytest.mark.parametrize("n", [2, 3, 7, 12])
    def test_cyclic_length_one(self, n):
        """Z_n is abelian and nontrivial"""
        group = PermGroup(n, [Permutation(tuple((i + 1) % n for i in range(n)))])
        series = derived_series(group)
        assert series.orders() == [n, 1]
        assert series.derived_length == 1

    def test_trivial_group_has_length_zero(self):
        assert derived_series(PermGroup.trivial(3)).derived_length == 0

    def test_terms_are_normal_and_decreasing(self, s4):
        """Each derived term is normal in the whole group"""
        series = derived_series(s4)
        for term in series.terms[1:]:
            assert is_normal_subgroup(term, s4)
        orders = series.orders()
        assert all(a > b for a, b in zip(orders, orders[1:]))

    def test_last_nontrivial_term_is_abelian(self, s4):
        series = derived_series(s4)
        assert is_abelian(series.terms[-2])

    def test_derived_subgroup_of_abelian_is_trivial(self, z5):
        derived = derived_subgroup(z5)
        assert derived.order == 1
        assert derived.generators == ()

    def test_symmetric_group_of_degree_seven(self):
        """S7' = A7, which is perfect; the generating set stays logarithmic"""
        s7 = PermGroup(7, [Permutation(tuple((i + 1) % 7 for i in range(7))), Permutation.from_cycles(7, (0, 1))])
        series = derived_series(s7)
        assert series.orders() == [5040, 2520]
        assert not series.is_solvable
        assert len(series.terms[1].generators) <= 11
        assert is_normal_subgroup(series.terms[1], s7)

    def test_needs_conjugates_of_generator_commutators(self, s4):
        """[4-cycle, transposition] alone generates a group of order 3, not A4"""
        first = commutator(*s4.generators)
        assert PermGroup(4, [first]).order == 3
        assert derived_subgroup(s4).order == 12


class TestOrbits:
    """Test orbits and transitivity"""

    def test_orbits_are_canonical(self):
        """Blocks sorted by minimum, each ascending"""
        group = PermGroup(6, [Permutation.from_cycles(6, (5, 3, 1)), Permutation.from_cycles(6, (2, 0))])
        assert orbits(group).blocks == ((0, 2), (1, 3, 5), (4,))

    def test_transitive_and_regular(self, z5, s4):
        assert is_transitive(z5)
        assert is_regular_action(z5)
        assert is_transitive(s4)
        assert not is_regular_action(s4)

    def test_points_must_match_degree(self, z5):
        with pytest.raises(ValueError):
            orbits(z5, range(4))


class TestGraphActions:
    """Test automorphism, arc- and edge-transitivity checks"""

    def test_rotation_of_cycle_not_arc_transitive(self, c5, z5):
        """Z5 on C5 has arc orbit of size 5 out of 10"""
        assert preserves_graph(z5, c5.graph)
        assert not is_arc_transitive(z5, c5.graph)
        assert is_edge_transitive(z5, c5.graph)

    def test_dihedral_arc_transitive(self, c5):
        assert is_arc_transitive(c5.arc_group, c5.graph)

    def test_k55_group(self, k55):
        """Independent shifts plus the swap act arc-transitively"""
        assert k55.arc_group.order == 50
        assert is_arc_transitive(k55.arc_group, k55.graph)
        assert not is_arc_transitive(k55.regular_group, k55.graph)

    def test_non_automorphism_raises(self):
        """A transposition of adjacent cycle vertices breaks C5"""
        graph = cycle(5).graph
        group = PermGroup(5, [Permutation.from_cycles(5, (0, 1, 2, 3, 4)), Permutation.from_cycles(5, (0, 2))])
        assert not preserves_graph(group, graph)
        with pytest.raises(NotAutomorphismGroup) as exc_info:
            is_arc_transitive(group, graph)
        assert exc_info.value.generator_index == 1

    def test_degree_mismatch_does_not_preserve(self, z5):
        assert not preserves_graph(z5, cycle(6).graph)

    def test_multigraph_arcs_counted_with_multiplicity(self):
        """Doubling every edge of K_{3,3} keeps it arc-transitive"""
        base = complete_bipartite(3, 3)
        doubled = Graph(6, base.graph.edges + base.graph.edges)
        assert is_arc_transitive(base.arc_group, doubled)

    def test_graph_without_edges(self, z5):
        with pytest.raises(ValueError):
            is_arc_transitive(z5, Graph(5))


if __name__ == "__main__":
    pytest.main([__file__, "-v", "--tb=short"])
