#!/usr/bin/env python3
"""
Permutation groups on graph vertices.

Groups are handled by explicit element enumeration (breadth-first closure
of the generators), which is plenty for groups of a few hundred thousand
elements. Permutations compose left to right: ``(g * h)(i) == h(g(i))``,
so that ``i^(gh) = (i^g)^h``.
"""

import logging
import threading
from collections import Counter, deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .config import DEFAULT_ORDER_CAP
from .errors import InvalidPermutation, NotAutomorphismGroup, OrderCapExceeded
from .graphcore import Graph, VertexPartition

logger = logging.getLogger(__name__)

Images = Tuple[int, ...]


def _compose(a: Images, b: Images) -> Images:
    return tuple(map(b.__getitem__, a))


def _invert(a: Images) -> Images:
    inverse = [0] * len(a)
    for i, x in enumerate(a):
        inverse[x] = i
    return tuple(inverse)


@dataclass(frozen=True)
class Permutation:
    """Bijection on 0..n-1; images[i] is the image of i"""
    images: Images

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"{list(images)} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, 'images', images)

    @classmethod
    def _trusted(cls, images: Images) -> "Permutation":
        perm = object.__new__(cls)
        object.__setattr__(perm, 'images', images)
        return perm

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Permutation":
        """Build from disjoint cycles, e.g. from_cycles(4, (0, 1, 2, 3))"""
        images = list(range(degree))
        for cycle in cycles:
            for position, point in enumerate(cycle):
                images[point] = cycle[(position + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation._trusted(_compose(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation._trusted(_invert(self.images))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def conjugate(self, by: "Permutation") -> "Permutation":
        """by^-1 * self * by"""
        return by.inverse() * self * by

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point"""
        seen = set()
        result = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point]
            result.append(tuple(cycle))
        return result

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in cycle) + ")" for cycle in cycles)


def commutator(x: Permutation, y: Permutation) -> Permutation:
    """x^-1 y^-1 x y"""
    return x.inverse() * y.inverse() * x * y


def _closure(generators: Sequence[Images], degree: int, cap: int) -> Set[Images]:
    identity = tuple(range(degree))
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in generators:
            product = _compose(current, g)
            if product not in seen:
                seen.add(product)
                if len(seen) > cap:
                    raise OrderCapExceeded(cap)
                queue.append(product)
    return seen


def _extend_closure(elements: Set[Images], generators: Sequence[Images], new: Images, cap: int) -> Set[Images]:
    """
    Closure of <generators, new> given the already closed set of
    <generators>. Old elements only need multiplying by the new generator.
    """
    seen = set(elements)
    queue = deque()
    for x in elements:
        product = _compose(x, new)
        if product not in seen:
            seen.add(product)
            queue.append(product)
    all_generators = list(generators) + [new]
    while queue:
        if len(seen) > cap:
            raise OrderCapExceeded(cap)
        current = queue.popleft()
        for g in all_generators:
            product = _compose(current, g)
            if product not in seen:
                seen.add(product)
                queue.append(product)
    if len(seen) > cap:
        raise OrderCapExceeded(cap)
    return seen


def enumerate_elements(generators: Sequence[Permutation], order_cap: int = DEFAULT_ORDER_CAP) -> Set[Permutation]:
    """
    All elements of the group generated by the given permutations.

    Raises:
        ValueError: if the generators have different degrees or none is given
        OrderCapExceeded: if the closure grows past order_cap
    """
    if not generators:
        raise ValueError("at least one generator is required")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise ValueError("all generators must have the same degree")
    raw = _closure([g.images for g in generators], degree, order_cap)
    return {Permutation._trusted(images) for images in raw}


class PermGroup:
    """
    Group generated by permutations of 0..degree-1.

    The element set is enumerated on first use, exactly once, under a lock;
    everything else about the instance is immutable.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation], order_cap: int = DEFAULT_ORDER_CAP):
        gens = tuple(generators)
        for index, g in enumerate(gens):
            if g.degree != degree:
                raise ValueError(f"generator {index} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = gens
        self.order_cap = order_cap
        self._raw: Optional[FrozenSet[Images]] = None
        self._lock = threading.Lock()

    @classmethod
    def trivial(cls, degree: int, order_cap: int = DEFAULT_ORDER_CAP) -> "PermGroup":
        return cls(degree, [Permutation.identity(degree)], order_cap)

    @classmethod
    def _with_elements(cls, degree: int, generators: Sequence[Permutation], raw: Set[Images],
                       order_cap: int) -> "PermGroup":
        group = cls(degree, generators, order_cap)
        group._raw = frozenset(raw)
        return group

    def raw_elements(self) -> FrozenSet[Images]:
        """Elements as image tuples"""
        if self._raw is None:
            with self._lock:
                if self._raw is None:
                    raw = _closure([g.images for g in self.generators], self.degree, self.order_cap)
                    logger.debug(f"Enumerated group of degree {self.degree}: order {len(raw)}")
                    self._raw = frozenset(raw)
        return self._raw

    @property
    def elements(self) -> FrozenSet[Permutation]:
        return frozenset(Permutation._trusted(images) for images in self.raw_elements())

    @property
    def order(self) -> int:
        return len(self.raw_elements())

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def __contains__(self, perm: Permutation) -> bool:
        return perm.degree == self.degree and perm.images in self.raw_elements()

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermGroup(degree={self.degree}, generators=[{gens}])"


@dataclass(frozen=True)
class DerivedSeries:
    """G = G^(0) ≥ G^(1) ≥ ... ; derived_length is None when the series stalls above 1"""
    terms: Tuple[PermGroup, ...]
    derived_length: Optional[int]

    @property
    def is_solvable(self) -> bool:
        return self.derived_length is not None

    def orders(self) -> List[int]:
        return [term.order for term in self.terms]


def derived_subgroup(group: PermGroup) -> PermGroup:
    """
    [G, G] as the normal closure of the commutators of generator pairs.

    A conjugate of a subgroup generator by a generator of G joins the
    generating set only when it falls outside the subgroup built so far.
    Each addition at least doubles the subgroup, so there are at most
    log2 |G| of them, and each one extends the closure incrementally.
    """
    degree = group.degree
    gens = [g.images for g in group.generators]
    inverses = [_invert(g) for g in gens]
    current: Set[Images] = {tuple(range(degree))}
    generators: List[Images] = []

    def absorb(c: Images) -> None:
        nonlocal current
        if c not in current:
            current = _extend_closure(current, generators, c, group.order_cap)
            generators.append(c)

    for i, x in enumerate(gens):
        for j in range(i + 1, len(gens)):
            # [y, x] is the inverse of [x, y], so unordered pairs suffice
            absorb(_compose(_compose(inverses[i], inverses[j]), _compose(x, gens[j])))

    position = 0
    while position < len(generators) and len(current) < group.order:
        n = generators[position]
        position += 1
        for g, g_inv in zip(gens, inverses):
            absorb(_compose(_compose(g_inv, n), g))

    perms = [Permutation._trusted(c) for c in generators]
    logger.debug(f"Derived subgroup of order {len(current)} from {len(perms)} generators")
    return PermGroup._with_elements(degree, perms, current, group.order_cap)


def derived_series(group: PermGroup) -> DerivedSeries:
    """Iterate derived_subgroup until the trivial group or a perfect term"""
    terms = [group]
    while terms[-1].order > 1:
        nxt = derived_subgroup(terms[-1])
        if nxt.order == terms[-1].order:
            logger.info(f"Derived series stabilizes at order {nxt.order}: not solvable")
            return DerivedSeries(tuple(terms), None)
        terms.append(nxt)
    return DerivedSeries(tuple(terms), len(terms) - 1)


def is_abelian(group: PermGroup) -> bool:
    gens = [g.images for g in group.generators]
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if _compose(a, b) != _compose(b, a):
                return False
    return True


def is_normal_subgroup(sub: PermGroup, group: PermGroup) -> bool:
    """sub ≤ group and g^-1 n g ∈ sub for every pair of generators"""
    if sub.degree != group.degree:
        return False
    if any(n not in group for n in sub.generators):
        return False
    return all(n.conjugate(g) in sub for n in sub.generators for g in group.generators)


def orbits(group: PermGroup, points: Optional[range] = None) -> VertexPartition:
    """Orbits of the group, in canonical block order"""
    if points is not None and len(points) != group.degree:
        raise ValueError(f"group of degree {group.degree} cannot act on {len(points)} points")
    label = [-1] * group.degree
    for start in range(group.degree):
        if label[start] != -1:
            continue
        label[start] = start
        queue = deque([start])
        while queue:
            point = queue.popleft()
            for g in group.generators:
                image = g.images[point]
                if label[image] == -1:
                    label[image] = start
                    queue.append(image)
    return VertexPartition.from_labels(label)


def is_transitive(group: PermGroup) -> bool:
    return len(orbits(group)) == 1


def is_regular_action(group: PermGroup) -> bool:
    return is_transitive(group) and group.order == group.degree


def first_violating_generator(group: PermGroup, graph: Graph) -> Optional[int]:
    """Index of the first generator that is not an automorphism, or None"""
    if group.degree != graph.n:
        return 0
    edges = graph.edge_multiset()
    for index, g in enumerate(group.generators):
        image = Counter()
        for (u, v), count in edges.items():
            a, b = g.images[u], g.images[v]
            image[(min(a, b), max(a, b))] += count
        if image != edges:
            return index
    return None


def preserves_graph(group: PermGroup, graph: Graph) -> bool:
    """True iff every generator maps the edge multiset onto itself"""
    return first_violating_generator(group, graph) is None


def _require_automorphisms(group: PermGroup, graph: Graph) -> None:
    bad = first_violating_generator(group, graph)
    if bad is not None:
        raise NotAutomorphismGroup(bad)


def is_arc_transitive(group: PermGroup, graph: Graph) -> bool:
    """
    True iff the group is vertex-transitive and one arc orbit covers every arc.

    Arcs are counted with edge multiplicity, so a multigraph has 2m arcs.

    Raises:
        NotAutomorphismGroup: if some generator does not preserve the graph
        ValueError: if the graph has no edges
    """
    if graph.m == 0:
        raise ValueError("arc-transitivity needs at least one edge")
    _require_automorphisms(group, graph)
    if not is_transitive(group):
        return False

    multiplicity = Counter()
    for u, v in graph.edges:
        multiplicity[(u, v)] += 1
        multiplicity[(v, u)] += 1
    start = graph.edges[0]
    seen = {start}
    queue = deque([start])
    while queue:
        u, v = queue.popleft()
        for g in group.generators:
            arc = (g.images[u], g.images[v])
            if arc not in seen:
                seen.add(arc)
                queue.append(arc)
    covered = sum(multiplicity[arc] for arc in seen)
    logger.debug(f"Arc orbit covers {covered} of {2 * graph.m} arcs")
    return covered == 2 * graph.m


def is_edge_transitive(group: PermGroup, graph: Graph) -> bool:
    """True iff one orbit on unordered edges covers every edge (with multiplicity)"""
    if graph.m == 0:
        raise ValueError("edge-transitivity needs at least one edge")
    _require_automorphisms(group, graph)
    multiplicity = graph.edge_multiset()
    u, v = graph.edges[0]
    start = (min(u, v), max(u, v))
    seen = {start}
    queue = deque([start])
    while queue:
        a, b = queue.popleft()
        for g in group.generators:
            x, y = g.images[a], g.images[b]
            edge = (min(x, y), max(x, y))
            if edge not in seen:
                seen.add(edge)
                queue.append(edge)
    return sum(multiplicity[edge] for edge in seen) == graph.m
