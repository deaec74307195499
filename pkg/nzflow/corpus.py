#!/usr/bin/env python3
"""
Corpus of (graph, solvable arc-transitive group) pairs for the three-flow
pipeline, plus seeded sampling of arc-transitive circulants (even valency)
and of odd-valency pairs that exercise the derived-series steps.
"""

import logging
import random
from dataclasses import dataclass
from math import gcd
from typing import List, Optional

from .config import DEFAULT_ORDER_CAP
from .families import FamilyInstance, circulant, complete, complete_bipartite, is_prime, octahedron, primitive_root
from .graphcore import Graph
from .permgrp import PermGroup, Permutation

logger = logging.getLogger(__name__)

COMPLETE_ORDERS = (5, 7, 8, 11, 13)
BIPARTITE_PARTS = (4, 5, 6, 7, 8, 10, 11, 13)
CIRCULANTS = (
    (13, (1, 5)),
    (17, (1, 4)),
    (13, (1, 3, 4)),
    (19, (1, 7, 8)),
    (25, (1, 7)),
)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: Graph
    group: PermGroup


def heisenberg_cover(with_scaling: bool = True, order_cap: int = DEFAULT_ORDER_CAP, p: int = 5) -> FamilyInstance:
    """
    p-fold cover of K_{p,p} for a prime p >= 5: vertices (side, x, i) over
    Z_p, with (A, x, i) adjacent to (B, y, j) iff j - i = x*y.

    The group is generated by the central shift of i, the two Heisenberg
    shears and the side swap, of order 2p^3; the scaling (x, i) -> (rx, r^2 i)
    by a primitive root r multiplies it by p - 1 and raises the derived
    length to 3.
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"the Heisenberg cover needs a prime p >= 5, got {p}")

    def vertex(side: int, x: int, i: int) -> int:
        return side * p * p + (x % p) * p + (i % p)

    points = [(side, x, i) for side in range(2) for x in range(p) for i in range(p)]
    edges = [(vertex(0, x, i), vertex(1, y, (i + x * y) % p))
             for x in range(p) for i in range(p) for y in range(p)]

    def perm(on_a, on_b) -> Permutation:
        images = [0] * (2 * p * p)
        for side, x, i in points:
            images[vertex(side, x, i)] = vertex(*(on_a(x, i) if side == 0 else on_b(x, i)))
        return Permutation(tuple(images))

    central = perm(lambda x, i: (0, x, i + 1), lambda y, j: (1, y, j + 1))
    shear_a = perm(lambda x, i: (0, x + 1, i), lambda y, j: (1, y, j + y))
    shear_b = perm(lambda x, i: (0, x, i - x), lambda y, j: (1, y + 1, j))
    swap = perm(lambda x, i: (1, x, -i), lambda y, j: (0, y, -j))
    generators = [central, shear_a, shear_b, swap]
    if with_scaling:
        r = primitive_root(p)
        generators.append(perm(lambda x, i: (0, r * x, r * r * i), lambda y, j: (1, r * y, r * r * j)))

    name = "heisenberg-cover" + ("" if p == 5 else f"-{p}") + ("-scaled" if with_scaling else "")
    return FamilyInstance(name, Graph(2 * p * p, tuple(edges)), arc_group=PermGroup(2 * p * p, generators, order_cap))


def default_corpus(order_cap: int = DEFAULT_ORDER_CAP) -> List[CorpusEntry]:
    """Fixed list of solvable arc-transitive pairs with valency at least four"""
    instances = [complete(n, order_cap) for n in COMPLETE_ORDERS]
    instances += [complete_bipartite(a, a, order_cap) for a in BIPARTITE_PARTS]
    instances.append(octahedron(order_cap))
    instances += [circulant(n, jumps, order_cap) for n, jumps in CIRCULANTS]
    instances += [heisenberg_cover(False, order_cap), heisenberg_cover(True, order_cap)]

    entries = []
    for instance in instances:
        if instance.arc_group is None:
            logger.warning(f"{instance.name} has no arc-transitive group; skipped")
            continue
        entries.append(CorpusEntry(instance.name, instance.graph, instance.arc_group))
    return entries


def sample_circulants(seed: int, count: int, max_n: int = 40,
                      order_cap: int = DEFAULT_ORDER_CAP) -> List[CorpusEntry]:
    """
    Random arc-transitive circulants: the connection set is the orbit of 1
    under a random unit together with -1, kept when its valency is >= 4.
    """
    rng = random.Random(seed)
    entries: List[CorpusEntry] = []
    attempts = 0
    while len(entries) < count and attempts < 100 * count:
        attempts += 1
        n = rng.randint(7, max_n)
        unit = rng.randrange(2, n - 1)
        connection = _orbit_of_one(n, unit)
        if connection is None or len(connection) < 4 or len(connection) == n - 1:
            continue
        jumps = sorted({min(s, n - s) for s in connection})
        instance = circulant(n, jumps, order_cap)
        if instance.arc_group is not None:
            entries.append(CorpusEntry(instance.name, instance.graph, instance.arc_group))
    logger.info(f"Sampled {len(entries)} circulants with seed {seed} in {attempts} attempts")
    return entries


def _orbit_of_one(n: int, unit: int) -> Optional[List[int]]:
    if gcd(unit, n) != 1:
        return None
    orbit = {1}
    frontier = [1]
    while frontier:
        s = frontier.pop()
        for t in (s * unit % n, (-s) % n):
            if t not in orbit:
                orbit.add(t)
                frontier.append(t)
    return sorted(orbit)


def sample_odd_valency(seed: int, count: int, max_valency: int = 13,
                       order_cap: int = DEFAULT_ORDER_CAP) -> List[CorpusEntry]:
    """
    Random solvable arc-transitive pairs of odd valency d >= 5 with d prime
    to 3, so the pipeline goes through the derived series instead of a
    shortcut: K_{d,d} with its group of order 2d^2, or, for prime d, a
    Heisenberg cover with or without the scaling.
    """
    valencies = [d for d in range(5, max_valency + 1, 2) if d % 3]
    if not valencies:
        raise ValueError(f"no odd valency between 5 and {max_valency} is prime to 3")
    primes = [d for d in valencies if is_prime(d)]
    rng = random.Random(seed)
    entries: List[CorpusEntry] = []
    for _ in range(count):
        if primes and rng.random() < 0.5:
            instance = heisenberg_cover(rng.random() < 0.5, order_cap, p=rng.choice(primes))
        else:
            d = rng.choice(valencies)
            instance = complete_bipartite(d, d, order_cap)
        entries.append(CorpusEntry(instance.name, instance.graph, instance.arc_group))
    logger.info(f"Sampled {len(entries)} odd-valency instances with seed {seed}")
    return entries
