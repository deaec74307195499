#!/usr/bin/env python3
"""
Deterministic graph families, each with a regular subgroup of automorphisms
(when the graph is a Cayley graph) and an arc-transitive group where one is
known.
"""

import logging
import re
from dataclasses import dataclass
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .config import DEFAULT_ORDER_CAP
from .graphcore import Edge, Graph
from .permgrp import PermGroup, Permutation

logger = logging.getLogger(__name__)

# x^k + ... as bit masks; each root is a primitive element of GF(2^k)
PRIMITIVE_POLYNOMIALS = {2: 0b111, 3: 0b1011, 4: 0b10011, 5: 0b100101, 6: 0b1000011}


@dataclass(frozen=True)
class FamilyInstance:
    name: str
    graph: Graph
    regular_group: Optional[PermGroup] = None
    arc_group: Optional[PermGroup] = None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, int(n ** 0.5) + 1))


def primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group mod prime p"""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    factors = [q for q in range(2, p) if (p - 1) % q == 0 and is_prime(q)]
    for r in range(2, p):
        if all(pow(r, (p - 1) // q, p) != 1 for q in factors):
            return r
    raise ValueError(f"no primitive root mod {p}")


def affine_map(n: int, multiplier: int, shift: int = 0) -> Permutation:
    """x -> multiplier * x + shift on Z_n"""
    return Permutation(tuple((multiplier * x + shift) % n for x in range(n)))


def rotation(n: int) -> Permutation:
    return affine_map(n, 1, 1)


def _group(degree: int, generators: Sequence[Permutation], order_cap: int) -> PermGroup:
    return PermGroup(degree, list(dict.fromkeys(g for g in generators if not g.is_identity())), order_cap)


def cycle(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FamilyInstance:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    graph = Graph(n, tuple((i, (i + 1) % n) for i in range(n)))
    return FamilyInstance(
        f"C{n}", graph,
        regular_group=_group(n, [rotation(n)], order_cap),
        arc_group=_group(n, [rotation(n), affine_map(n, -1)], order_cap),
    )


def _gf2_times_x(value: int, k: int) -> int:
    value <<= 1
    if value >> k:
        value ^= PRIMITIVE_POLYNOMIALS[k]
    return value


def complete(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FamilyInstance:
    """
    K_n with Z_n as regular group. The arc-transitive group is AGL(1, n)
    when n is a prime or a power of two with a tabulated field polynomial,
    otherwise the full symmetric group.
    """
    if n < 2:
        raise ValueError(f"a complete graph needs at least 2 vertices, got {n}")
    graph = Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))
    k = n.bit_length() - 1
    if is_prime(n):
        arc = [rotation(n), affine_map(n, primitive_root(n))]
    elif n == 1 << k and k in PRIMITIVE_POLYNOMIALS:
        translations = [Permutation(tuple(x ^ (1 << bit) for x in range(n))) for bit in range(k)]
        scaling = Permutation(tuple(_gf2_times_x(x, k) for x in range(n)))
        arc = translations + [scaling]
    else:
        transposition = list(range(n))
        transposition[0], transposition[1] = 1, 0
        arc = [rotation(n), Permutation(tuple(transposition))]
    return FamilyInstance(f"K{n}", graph,
                          regular_group=_group(n, [rotation(n)], order_cap),
                          arc_group=_group(n, arc, order_cap))


def complete_bipartite(a: int, b: int, order_cap: int = DEFAULT_ORDER_CAP) -> FamilyInstance:
    """
    K_{a,b} on parts 0..a-1 and a..a+b-1. For a == b the regular group is
    Z_a x Z_2 and the arc-transitive group is generated by independent
    shifts of each part and the swap, of order 2a^2.
    """
    if a < 1 or b < 1:
        raise ValueError(f"both parts must be nonempty, got {a} and {b}")
    graph = Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))
    name = f"K{a},{b}"
    if a != b:
        return FamilyInstance(name, graph)

    n = 2 * a

    def perm(f: Callable[[int], int]) -> Permutation:
        return Permutation(tuple(f(v) for v in range(n)))

    shift_a = perm(lambda v: (v + 1) % a if v < a else v)
    shift_b = perm(lambda v: v if v < a else a + (v - a + 1) % a)
    both = perm(lambda v: (v + 1) % a if v < a else a + (v - a + 1) % a)
    swap = perm(lambda v: v + a if v < a else v - a)
    return FamilyInstance(name, graph,
                          regular_group=_group(n, [both, swap], order_cap),
                          arc_group=_group(n, [shift_a, shift_b, swap], order_cap))


def connection_set(n: int, jumps: Sequence[int]) -> List[int]:
    """Symmetric closure ±jumps in Z_n, validated"""
    seen = set()
    for j in jumps:
        r = j % n
        if r == 0:
            raise ValueError(f"jump {j} is zero modulo {n}")
        if r in seen:
            raise ValueError(f"jump {j} repeats another jump up to sign modulo {n}")
        seen.update({r, (-r) % n})
    return sorted(seen)


def circulant_graph(n: int, jumps: Sequence[int]) -> Graph:
    connection_set(n, jumps)
    edges: List[Edge] = []
    for i in range(n):
        for j in jumps:
            r = j % n
            if 2 * r % n == 0 and i >= r:
                continue
            edges.append((i, (i + r) % n))
    return Graph(n, tuple(edges))


def multiplier_group(n: int, connection: Sequence[int]) -> List[int]:
    """Units a of Z_n with a * S == S"""
    target = set(connection)
    return [a for a in range(1, n) if gcd(a, n) == 1 and {a * s % n for s in target} == target]


def circulant(n: int, jumps: Sequence[int], order_cap: int = DEFAULT_ORDER_CAP) -> FamilyInstance:
    """
    Cay(Z_n, ±jumps). The affine group Z_n ⋊ M, M the multipliers fixing
    the connection set, is emitted when M is transitive on it. No multiplier
    sends 1 to n/2, so odd-valency circulants never get an arc group here.
    """
    if n < 2:
        raise ValueError(f"a circulant needs at least 2 vertices, got {n}")
    graph = circulant_graph(n, jumps)
    connection = connection_set(n, jumps)
    multipliers = multiplier_group(n, connection)
    arc_group = None
    if {a * connection[0] % n for a in multipliers} == set(connection):
        arc_group = _group(n, [rotation(n)] + [affine_map(n, a) for a in multipliers], order_cap)
    else:
        logger.debug(f"Multipliers {multipliers} are not transitive on {connection}")
    name = f"Cay(Z{n},{{{','.join(map(str, connection))}}})"
    return FamilyInstance(name, graph, regular_group=_group(n, [rotation(n)], order_cap), arc_group=arc_group)


def parse_abelian_group(name: str) -> List[int]:
    """'z2xz2' -> [2, 2]"""
    parts = name.lower().split("x")
    if not parts or not all(re.fullmatch(r"z\d+", p) for p in parts):
        raise ValueError(f"unknown group {name!r}; expected something like z2xz2 or z6")
    moduli = [int(p[1:]) for p in parts]
    if any(m < 1 for m in moduli):
        raise ValueError(f"cyclic factors must have positive order in {name!r}")
    return moduli


def parse_connection_set(text: str, rank: int) -> List[Tuple[int, ...]]:
    """'{(1,0),(0,1)}' for products, '{1,4}' for a cyclic group"""
    tuples = re.findall(r"\(([^()]*)\)", text)
    if tuples:
        items = [tuple(int(x) for x in t.split(",")) for t in tuples]
    else:
        items = [(int(x),) for x in re.findall(r"-?\d+", text)]
    for item in items:
        if len(item) != rank:
            raise ValueError(f"element {item} does not have {rank} coordinates")
    return items


def cayley(group_name: str, connection_text: str, order_cap: int = DEFAULT_ORDER_CAP) -> FamilyInstance:
    """
    Cayley graph on a product of cyclic groups.

    Vertices are group elements in breadth-first order from the identity,
    stepping through the standard generators in order; the edge {g, g+s}
    is added once, from whichever endpoint is enumerated first.
    """
    moduli = parse_abelian_group(group_name)
    rank = len(moduli)

    def add(x: Tuple[int, ...], y: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple((a + b) % m for a, b, m in zip(x, y, moduli))

    connection = [tuple(c % m for c, m in zip(item, moduli)) for item in parse_connection_set(connection_text, rank)]
    identity = (0,) * rank
    if identity in connection:
        raise ValueError("the connection set contains the identity")
    if len(set(connection)) != len(connection):
        raise ValueError("the connection set lists an element twice")
    for s in connection:
        inverse = tuple((-c) % m for c, m in zip(s, moduli))
        if inverse not in connection:
            raise ValueError(f"the connection set is not closed under inverses: {inverse} missing for {s}")

    basis = [tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)]
    index: Dict[Tuple[int, ...], int] = {identity: 0}
    elements = [identity]
    position = 0
    while position < len(elements):
        g = elements[position]
        position += 1
        for e in basis:
            h = add(g, e)
            if h not in index:
                index[h] = len(elements)
                elements.append(h)

    edges = []
    for i, g in enumerate(elements):
        for s in connection:
            j = index[add(g, s)]
            if i < j:
                edges.append((i, j))

    n = len(elements)
    translations = [Permutation(tuple(index[add(g, e)] for g in elements)) for e in basis]
    return FamilyInstance(f"Cay({group_name},{len(connection)})", Graph(n, tuple(edges)),
                          regular_group=_group(n, translations, order_cap))


def octahedron(order_cap: int = DEFAULT_ORDER_CAP) -> FamilyInstance:
    """K_{2,2,2} as Cay(Z6, {1,2,4,5}); antipodes differ by 3"""
    base = circulant(6, [1, 2], order_cap)
    antipodal_swap = Permutation.from_cycles(6, (0, 3))
    arc = [rotation(6), affine_map(6, -1), antipodal_swap]
    return FamilyInstance("octahedron", base.graph, regular_group=base.regular_group,
                          arc_group=_group(6, arc, order_cap))


def _petersen_labels() -> List[frozenset]:
    outer = [frozenset({2 * i % 5, (2 * i + 1) % 5}) for i in range(5)]
    inner = [frozenset({(2 * i + 2) % 5, (2 * i + 4) % 5}) for i in range(5)]
    return outer + inner


def petersen(order_cap: int = DEFAULT_ORDER_CAP) -> FamilyInstance:
    """
    Outer 5-cycle, spokes and inner pentagram. Vertices carry 2-subsets of
    {0..4} (adjacent iff disjoint), which is how S5 acts on them.
    """
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    labels = _petersen_labels()
    vertex_of = {label: v for v, label in enumerate(labels)}

    def induced(symbol_map: Sequence[int]) -> Permutation:
        return Permutation(tuple(vertex_of[frozenset(symbol_map[s] for s in label)] for label in labels))

    s5 = [induced([1, 0, 2, 3, 4]), induced([1, 2, 3, 4, 0])]
    return FamilyInstance("petersen", Graph(10, tuple(edges)), arc_group=_group(10, s5, order_cap))


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its command-line parameters"""
    family: str
    parameters: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")

    def _ints(self, count: Optional[int] = None) -> List[int]:
        try:
            values = [int(p) for p in self.parameters]
        except ValueError:
            raise ValueError(f"{self.family} expects integer parameters, got {list(self.parameters)}")
        if count is not None and len(values) != count:
            raise ValueError(f"{self.family} expects {count} parameter(s), got {len(values)}")
        return values

    def build(self, order_cap: int = DEFAULT_ORDER_CAP) -> FamilyInstance:
        if self.family == "cycle":
            return cycle(*self._ints(1), order_cap=order_cap)
        if self.family == "complete":
            return complete(*self._ints(1), order_cap=order_cap)
        if self.family == "complete_bipartite":
            return complete_bipartite(*self._ints(2), order_cap=order_cap)
        if self.family == "circulant":
            values = self._ints()
            if len(values) < 2:
                raise ValueError("circulant expects n followed by at least one jump")
            return circulant(values[0], values[1:], order_cap=order_cap)
        if self.family == "cayley":
            if len(self.parameters) != 2:
                raise ValueError("cayley expects a group name and a connection set")
            return cayley(self.parameters[0], self.parameters[1], order_cap=order_cap)
        if self.family == "octahedron":
            self._ints(0)
            return octahedron(order_cap)
        self._ints(0)
        return petersen(order_cap)


FAMILIES = ("cycle", "complete", "complete_bipartite", "circulant", "cayley", "octahedron", "petersen")
