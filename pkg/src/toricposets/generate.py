"""Families of test instances: exhaustive labeled graphs, atlas graphs, random quivers and posets."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

import networkx as nx

from .errors import InputError
from .quiver import Graph, Quiver, transitive_reduction
from .toric import DEFAULT_CAP, orientation_space


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every simple graph on ``1..n`` (``2^(n choose 2)`` of them)."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def atlas_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """One graph per isomorphism class with ``min_n..max_n`` vertices (``max_n <= 7``)."""
    if max_n > 7:
        raise InputError("the graph atlas stops at 7 vertices")
    for h in nx.graph_atlas_g():
        k = h.number_of_nodes()
        if min_n <= k <= max_n:
            yield Graph(k, frozenset((min(a, b) + 1, max(a, b) + 1) for a, b in h.edges()))


def acyclic_orientation_masks(g: Graph) -> list[int]:
    """Edge bitmasks of all acyclic orientations, sorted.

    Each acyclic orientation is induced by a vertex order; the search below
    builds the order one vertex at a time and prunes repeated prefixes by the
    set of vertices already placed, so every orientation is produced once.
    """
    space = orientation_space(g)
    full = (1 << (g.n + 1)) - 2
    found: set[int] = set()
    seen: set[tuple[int, int]] = set()
    stack = [(0, 0)]  # (placed vertex mask, orientation bits fixed so far)
    while stack:
        placed, o = stack.pop()
        if placed == full:
            found.add(o)
            continue
        for v in range(1, g.n + 1):
            if placed >> v & 1:
                continue
            # edges from v to unplaced vertices point away from v
            out = 0
            for u in g.adjacency[v]:
                if not placed >> u & 1:
                    k = space.index[(min(u, v), max(u, v))]
                    if v < u:
                        out |= 1 << k
            key = (placed | 1 << v, o | out)
            if key not in seen:
                seen.add(key)
                stack.append(key)
    return sorted(found)


def acyclic_orientations(g: Graph) -> list[Quiver]:
    space = orientation_space(g)
    return [space.decode(o) for o in acyclic_orientation_masks(g)]


def all_acyclic_quivers(n: int) -> Iterator[Quiver]:
    """Every acyclic quiver on the labels ``1..n``."""
    for g in labeled_graphs(n):
        yield from acyclic_orientations(g)


def class_partition(g: Graph, cap: int = DEFAULT_CAP) -> list[frozenset]:
    """Acyclic orientations of ``g`` grouped by flip reachability (as edge bitmasks)."""
    space = orientation_space(g)
    left = set(acyclic_orientation_masks(g))
    out = []
    while left:
        start = min(left)
        block = frozenset(space.search(start, cap=cap))
        out.append(block)
        left -= block
    return out


def fingerprint_partition(g: Graph) -> list[frozenset]:
    space = orientation_space(g)
    groups: dict = {}
    for o in acyclic_orientation_masks(g):
        groups.setdefault(space.flow_differences(o), set()).add(o)
    return [frozenset(b) for b in groups.values()]


def toric_classes(g: Graph) -> list[Quiver]:
    """One canonical representative per toric poset on ``g``."""
    space = orientation_space(g)
    return sorted((min((space.decode(o) for o in block), key=lambda q: q.key) for block in class_partition(g)),
                  key=lambda q: q.key)


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    return Graph(n, frozenset(e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p))


def random_quiver(n: int, rng: random.Random, p: float = 0.5) -> Quiver:
    """Random acyclic quiver: random edges oriented along a random vertex order."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    pos = {v: k for k, v in enumerate(order)}
    arcs = set()
    for a, b in itertools.combinations(range(1, n + 1), 2):
        if rng.random() < p:
            arcs.add((a, b) if pos[a] < pos[b] else (b, a))
    return Quiver(n, frozenset(arcs))


@dataclass(frozen=True)
class BoundedPoset:
    hasse: Quiver
    zero: int
    one: int


def random_bounded_poset(n: int, rng: random.Random, p: float = 0.5, relabel: bool = True) -> BoundedPoset:
    """Hasse diagram of a random poset on ``n - 2`` elements with a bottom and a top adjoined.

    Without relabeling the bottom is 1 and the top is ``n``.
    """
    if n < 3:
        raise InputError("a bounded poset with an interior needs n >= 3")
    inner = transitive_reduction(random_quiver(n - 2, rng, p))
    arcs = {(a + 1, b + 1) for a, b in inner.arcs}
    zero, one = 1, n
    for v in range(1, n - 1):
        if inner.is_source(v):
            arcs.add((zero, v + 1))
        if inner.is_sink(v):
            arcs.add((v + 1, one))
    q = Quiver(n, frozenset(arcs))
    if relabel:
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        q = Quiver(n, frozenset((perm[a - 1], perm[b - 1]) for a, b in q.arcs))
        zero, one = perm[zero - 1], perm[one - 1]
    return BoundedPoset(q, zero, one)


def random_hasse(n: int, rng: random.Random, p: float = 0.5) -> Quiver:
    return transitive_reduction(random_quiver(n, rng, p))


__all__ = [
    "BoundedPoset", "acyclic_orientation_masks", "acyclic_orientations", "all_acyclic_quivers", "atlas_graphs",
    "class_partition", "fingerprint_partition", "labeled_graphs", "random_bounded_poset", "random_graph",
    "random_hasse", "random_quiver", "toric_classes",
]
