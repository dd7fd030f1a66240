"""Simple graphs, acyclic quivers, sink/source flips and linear extensions.

Vertices are always the contiguous labels ``1..n``.  Vertex sets are handled
internally as integer bitmasks where bit ``v`` stands for vertex ``v`` (bit 0
is unused), which keeps the reachability and extension code allocation-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InputError, PreconditionError

Edge = tuple[int, int]
Arc = tuple[int, int]
LinearExtension = tuple[int, ...]


def _check_n(n) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f"vertex count must be a positive integer, got {n!r}")


def _check_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    out = []
    for pair in pairs:
        try:
            a, b = pair
        except (TypeError, ValueError):
            raise InputError(f"expected a vertex pair, got {pair!r}") from None
        for x in (a, b):
            if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= n:
                raise InputError(f"vertex label {x!r} outside 1..{n}")
        if a == b:
            raise InputError(f"loop at vertex {a}")
        out.append((a, b))
    return out


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``1..n``; edges are stored as ``(i, j)`` with ``i < j``."""

    n: int
    edges: frozenset

    def __post_init__(self):
        _check_n(self.n)
        pairs = _check_pairs(self.n, self.edges)
        norm = frozenset((min(a, b), max(a, b)) for a, b in pairs)
        if len(norm) != len(pairs):
            raise InputError("repeated edge")
        object.__setattr__(self, "edges", norm)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        """``adjacency[v]`` is the neighbour set of ``v`` (index 0 is empty)."""
        adj: list[set] = [set() for _ in range(self.n + 1)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    @cached_property
    def components(self) -> tuple[frozenset, ...]:
        """Connected components, ordered by their smallest vertex."""
        seen: set[int] = set()
        comps = []
        for s in range(1, self.n + 1):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) == 1

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def distances_from(self, s: int) -> dict[int, int]:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in self.adjacency[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        return dist


@dataclass(frozen=True)
class Quiver:
    """Acyclic simple quiver on ``1..n``; ``(i, j)`` in ``arcs`` means ``i -> j``.

    Equality is equality of ``n`` and the arc set.  Instances are immutable and
    cache their derived adjacency and reachability data.
    """

    n: int
    arcs: frozenset

    def __post_init__(self):
        _check_n(self.n)
        pairs = _check_pairs(self.n, self.arcs)
        arcs = frozenset(pairs)
        if len(arcs) != len(pairs):
            raise InputError("repeated arc")
        for a, b in arcs:
            if (b, a) in arcs:
                raise InputError(f"anti-parallel arcs between {a} and {b}")
        object.__setattr__(self, "arcs", arcs)
        if not is_acyclic(self.n, arcs):
            raise InputError("quiver contains a directed cycle")

    @classmethod
    def _trusted(cls, n: int, arcs: frozenset) -> "Quiver":
        """Build without validation; callers guarantee every invariant."""
        q = object.__new__(cls)
        object.__setattr__(q, "n", n)
        object.__setattr__(q, "arcs", arcs)
        return q

    def __repr__(self) -> str:
        return f"Quiver({self.n}, {sorted(self.arcs)})"

    @cached_property
    def key(self) -> tuple:
        """Canonical encoding ``(n, sorted arcs)``; also the sort order of quivers."""
        return (self.n, tuple(sorted(self.arcs)))

    def __hash__(self) -> int:
        return hash(self.key)

    @cached_property
    def graph(self) -> Graph:
        g = object.__new__(Graph)
        object.__setattr__(g, "n", self.n)
        object.__setattr__(g, "edges", frozenset((min(a, b), max(a, b)) for a, b in self.arcs))
        return g

    @cached_property
    def succ_mask(self) -> tuple[int, ...]:
        out = [0] * (self.n + 1)
        for a, b in self.arcs:
            out[a] |= 1 << b
        return tuple(out)

    @cached_property
    def pred_mask(self) -> tuple[int, ...]:
        out = [0] * (self.n + 1)
        for a, b in self.arcs:
            out[b] |= 1 << a
        return tuple(out)

    @cached_property
    def topological_order(self) -> tuple[int, ...]:
        return next(_extensions(self.pred_mask, mask_of(range(1, self.n + 1))))

    @cached_property
    def descendants(self) -> tuple[int, ...]:
        """``descendants[v]``: bitmask of vertices reachable from ``v`` (including ``v``)."""
        out = [0] * (self.n + 1)
        for v in reversed(self.topological_order):
            m = 1 << v
            for w in bits(self.succ_mask[v]):
                m |= out[w]
            out[v] = m
        return tuple(out)

    @cached_property
    def ancestors(self) -> tuple[int, ...]:
        out = [0] * (self.n + 1)
        for v in self.topological_order:
            m = 1 << v
            for w in bits(self.pred_mask[v]):
                m |= out[w]
            out[v] = m
        return tuple(out)

    def has_arc(self, a: int, b: int) -> bool:
        return (a, b) in self.arcs

    def is_source(self, v: int) -> bool:
        return self.pred_mask[v] == 0

    def is_sink(self, v: int) -> bool:
        return self.succ_mask[v] == 0


def is_acyclic(n: int, arcs: Iterable[tuple[int, int]]) -> bool:
    """True iff the directed graph on ``1..n`` with these arcs has a topological order."""
    _check_n(n)
    pairs = _check_pairs(n, arcs)
    indeg = [0] * (n + 1)
    out: list[list[int]] = [[] for _ in range(n + 1)]
    for a, b in pairs:
        out[a].append(b)
        indeg[b] += 1
    stack = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for w in out[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == n


def sources(q: Quiver) -> frozenset:
    return frozenset(v for v in range(1, q.n + 1) if q.pred_mask[v] == 0)


def sinks(q: Quiver) -> frozenset:
    return frozenset(v for v in range(1, q.n + 1) if q.succ_mask[v] == 0)


def flip(q: Quiver, v: int) -> Quiver:
    """Reverse every arc at ``v``, which must be a source or a sink."""
    if not isinstance(v, int) or not 1 <= v <= q.n:
        raise InputError(f"vertex {v!r} outside 1..{q.n}")
    if q.pred_mask[v] and q.succ_mask[v]:
        raise PreconditionError(f"vertex {v} is neither a source nor a sink")
    arcs = frozenset((b, a) if v in (a, b) else (a, b) for a, b in q.arcs)
    return Quiver._trusted(q.n, arcs)


def _extensions(pred_mask: Sequence[int], remaining: int) -> Iterator[LinearExtension]:
    # recursive source removal, smallest available vertex first -> lexicographic order
    order: list[int] = []

    def rec(rem: int) -> Iterator[LinearExtension]:
        if not rem:
            yield tuple(order)
            return
        for v in bits(rem):
            if not pred_mask[v] & rem:
                order.append(v)
                yield from rec(rem & ~(1 << v))
                order.pop()

    return rec(remaining)


def iter_linear_extensions(q: Quiver, vertices: Iterable[int] | None = None) -> Iterator[LinearExtension]:
    """Lexicographic linear extensions of ``q`` restricted to ``vertices`` (default: all)."""
    rem = mask_of(range(1, q.n + 1)) if vertices is None else mask_of(vertices)
    return _extensions(q.pred_mask, rem)


def linear_extensions(q: Quiver) -> list[LinearExtension]:
    return list(iter_linear_extensions(q))


def is_linear_extension(q: Quiver, w: Sequence[int]) -> bool:
    if sorted(w) != list(range(1, q.n + 1)):
        return False
    pos = {v: i for i, v in enumerate(w)}
    return all(pos[a] < pos[b] for a, b in q.arcs)


def induced_poset_leq(q: Quiver, a: int, b: int) -> bool:
    """True iff there is a directed path ``a ~> b`` (reflexive)."""
    return bool(q.descendants[a] >> b & 1)


def comparable(q: Quiver, a: int, b: int) -> bool:
    return induced_poset_leq(q, a, b) or induced_poset_leq(q, b, a)


def transitive_reduction(q: Quiver) -> Quiver:
    """Drop every arc implied by a longer directed path (the Hasse diagram)."""
    keep = frozenset(
        (a, b) for a, b in q.arcs
        if not any(k != b and q.descendants[k] >> b & 1 for k in bits(q.succ_mask[a]))
    )
    return Quiver._trusted(q.n, keep)


def is_transitively_reduced(q: Quiver) -> bool:
    return len(transitive_reduction(q).arcs) == len(q.arcs)


def relabel(q: Quiver, perm: Sequence[int]) -> Quiver:
    """Relabel vertex ``v`` as ``perm[v - 1]``."""
    if sorted(perm) != list(range(1, q.n + 1)):
        raise InputError(f"{tuple(perm)} is not a permutation of 1..{q.n}")
    return Quiver._trusted(q.n, frozenset((perm[a - 1], perm[b - 1]) for a, b in q.arcs))
