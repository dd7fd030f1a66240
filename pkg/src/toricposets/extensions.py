"""Toric total orders and three ways of enumerating the toric total extensions of a class."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InputError, InvariantViolation, PreconditionError, ResourceError
from .quiver import Quiver, iter_linear_extensions, linear_extensions, mask_of
from .toric import (
    DEFAULT_CAP,
    flip_class,
    make_source,
    orientation_space,
    quivers_with_source,
    toric_transitive_closure,
)

METHODS = ("brute", "partition", "recursive")


@dataclass(frozen=True, order=True)
class ToricTotalOrder:
    """A cyclic word, stored as its rotation that starts at label 1."""

    canonical: tuple

    def __str__(self) -> str:
        return "[(" + ",".join(map(str, self.canonical)) + ")]"

    def __len__(self) -> int:
        return len(self.canonical)


@dataclass(frozen=True)
class ToricExtensionSet:
    items: frozenset
    source: str = field(default="", compare=False)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[ToricTotalOrder]:
        return iter(sorted(self.items))

    def __contains__(self, w) -> bool:
        return w in self.items

    def words(self) -> list[tuple]:
        return [t.canonical for t in sorted(self.items)]


def cyclic_canonical(w: Sequence[int]) -> ToricTotalOrder:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InputError(f"{w} is not a permutation of 1..{len(w)}")
    if not w:
        return ToricTotalOrder(())
    i = w.index(1)
    return ToricTotalOrder(w[i:] + w[:i])


def _rotate(w: tuple) -> ToricTotalOrder:
    # trusted fast path for words already known to be permutations
    i = w.index(1)
    return ToricTotalOrder(w[i:] + w[:i])


def ltor_bruteforce(q: Quiver, cap: int = DEFAULT_CAP) -> ToricExtensionSet:
    """Rotation classes of the linear extensions of every member of the flip class."""
    items = {_rotate(w) for m in flip_class(q, cap) for w in iter_linear_extensions(m)}
    return ToricExtensionSet(frozenset(items), "brute")


def ltor_partition(q: Quiver, v: int = 1, cap: int = DEFAULT_CAP) -> ToricExtensionSet:
    """Union over class members with source ``v`` of ``[v w]`` for extensions ``w`` of the rest.

    The blocks contributed by different members must be disjoint; an overlap
    raises :class:`InvariantViolation`.
    """
    if not 1 <= v <= q.n:
        raise InputError(f"vertex {v!r} outside 1..{q.n}")
    rest = [u for u in range(1, q.n + 1) if u != v]
    items: set = set()
    for m in sorted(quivers_with_source(q, v, cap), key=lambda x: x.key):
        block = {_rotate((v,) + w) for w in iter_linear_extensions(m, rest)}
        if not items.isdisjoint(block):
            raise InvariantViolation(f"blocks overlap at member {m}")
        items |= block
    return ToricExtensionSet(frozenset(items), "partition")


def add_arc(q: Quiver, a: int, b: int) -> Quiver:
    for x in (a, b):
        if not isinstance(x, int) or not 1 <= x <= q.n:
            raise InputError(f"vertex {x!r} outside 1..{q.n}")
    if a == b:
        raise InputError(f"loop at vertex {a}")
    if q.graph.has_edge(a, b):
        raise InputError(f"vertices {a} and {b} are already adjacent")
    if q.descendants[b] >> a & 1:
        raise PreconditionError(f"arc {a}->{b} would close a directed cycle")
    return Quiver._trusted(q.n, q.arcs | {(a, b)})


@dataclass
class RecursionNode:
    """One call of the recursive enumeration.

    ``kind`` is ``"leaf"`` (complete closure), ``"join"`` (disconnected: one
    child with ``pair`` added) or ``"split"`` (two children ``a->b`` and
    ``b->a`` after making ``pivot`` a source).
    """

    quiver: Quiver
    closure: Quiver
    kind: str
    pair: tuple | None = None
    pivot: int | None = None
    children: list = field(default_factory=list)
    leaf: ToricTotalOrder | None = None

    def leaves(self) -> Iterator[ToricTotalOrder]:
        if self.leaf is not None:
            yield self.leaf
        for c in self.children:
            yield from c.leaves()

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)


def _split_pair(c: Quiver) -> tuple[int, int, int] | None:
    g = c.graph
    for v in range(1, c.n + 1):
        nb = sorted(g.adjacency[v])
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if not g.has_edge(a, b):
                    return v, a, b
    return None


def _join_pair(c: Quiver) -> tuple[int, int]:
    comps = c.graph.components
    where = {u: k for k, comp in enumerate(comps) for u in comp}
    for a in range(1, c.n + 1):
        for b in range(a + 1, c.n + 1):
            if where[a] != where[b]:
                return a, b
    raise InvariantViolation("disconnected graph without a cross pair")


def ltor_recursion_tree(q: Quiver, cap: int = DEFAULT_CAP) -> RecursionNode:
    """Build the full recursion tree; leaves are the toric total extensions."""
    budget = [cap]

    def rec(x: Quiver) -> RecursionNode:
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceError(f"recursion exceeds cap of {cap} nodes")
        c = toric_transitive_closure(x)
        g = c.graph
        if g.is_complete():
            return RecursionNode(x, c, "leaf", leaf=_rotate(c.topological_order))
        if not g.is_connected():
            a, b = _join_pair(c)
            return RecursionNode(x, c, "join", pair=(a, b), children=[rec(add_arc(c, a, b))])
        found = _split_pair(c)
        if found is None:
            raise InvariantViolation("connected non-complete closure without a distance-2 pair")
        v, a, b = found
        cv, _ = make_source(c, v)
        kids = [rec(add_arc(cv, a, b)), rec(add_arc(cv, b, a))]
        return RecursionNode(x, c, "split", pair=(a, b), pivot=v, children=kids)

    return rec(q)


def ltor_recursive(q: Quiver, cap: int = DEFAULT_CAP) -> ToricExtensionSet:
    tree = ltor_recursion_tree(q, cap)
    items: set = set()
    for w in tree.leaves():
        if w in items:
            raise InvariantViolation(f"toric total order {w} produced twice")
        items.add(w)
    return ToricExtensionSet(frozenset(items), "recursive")


def ltor(q: Quiver, method: str = "recursive", v: int = 1, cap: int = DEFAULT_CAP) -> ToricExtensionSet:
    if method == "brute":
        return ltor_bruteforce(q, cap)
    if method == "partition":
        return ltor_partition(q, v, cap)
    if method == "recursive":
        return ltor_recursive(q, cap)
    raise InputError(f"unknown method {method!r}; expected one of {METHODS}")


def count_ltor(q: Quiver, method: str = "recursive", cap: int = DEFAULT_CAP) -> int:
    return len(ltor(q, method, cap=cap))


def bounded_bijection(p: Quiver, zero: int, one: int) -> tuple[Quiver, dict]:
    """``Q = p + (zero -> one)`` and the map sending each extension of ``p`` to its rotation class.

    The map is checked to be a bijection onto the toric total extensions of ``Q``.
    """
    for x in (zero, one):
        if not isinstance(x, int) or not 1 <= x <= p.n:
            raise InputError(f"vertex {x!r} outside 1..{p.n}")
    if zero == one:
        raise InputError("bottom and top must differ")
    srcs = [u for u in range(1, p.n + 1) if p.is_source(u)]
    snks = [u for u in range(1, p.n + 1) if p.is_sink(u)]
    if srcs != [zero] or snks != [one]:
        raise InputError(f"not bounded by {zero} and {one}: sources {srcs}, sinks {snks}")
    if p.has_arc(zero, one):
        if p.n > 2:
            raise InputError("bottom-to-top arc in a Hasse diagram with more than two vertices")
        q = p
    else:
        q = Quiver._trusted(p.n, p.arcs | {(zero, one)})
    theta = {w: _rotate(w) for w in linear_extensions(p)}
    image = set(theta.values())
    if len(image) != len(theta) or image != set(ltor_partition(q, zero).items):
        raise InvariantViolation("rotation map is not a bijection onto the toric total extensions")
    return q, theta


def words_of(items: Iterable[ToricTotalOrder]) -> list[tuple]:
    return [t.canonical for t in sorted(items)]


__all__ = [
    "METHODS", "RecursionNode", "ToricExtensionSet", "ToricTotalOrder", "add_arc", "bounded_bijection",
    "count_ltor", "cyclic_canonical", "ltor", "ltor_bruteforce", "ltor_partition", "ltor_recursion_tree",
    "ltor_recursive", "words_of",
]
