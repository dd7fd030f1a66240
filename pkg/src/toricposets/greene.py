"""Greene's rational function, its toric analogue, and checks of their closed forms."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import networkx as nx

from .errors import InputError, InvariantViolation
from .extensions import ToricTotalOrder, add_arc, bounded_bijection, cyclic_canonical, ltor
from .planar import BoundedRegion
from .quiver import Quiver, is_transitively_reduced, iter_linear_extensions
from .ratfun import RationalFunction, SparsePolynomial, poly_mul, rf_equal, rf_mul, rf_sum
from .report import Report
from .toric import toric_hasse


def _need_two(n: int) -> None:
    if n < 2:
        raise InputError("the rational functions are only defined for at least two vertices")


def _chain_term(n: int, w: Sequence[int], closed: bool) -> RationalFunction:
    pairs = list(zip(w, w[1:]))
    if closed:
        pairs.append((w[-1], w[0]))
    return RationalFunction.reciprocal_product(n, pairs)


def psi_poset(q: Quiver) -> RationalFunction:
    """Sum over linear extensions ``w`` of ``1 / prod (x_{w_k} - x_{w_{k+1}})``."""
    _need_two(q.n)
    return rf_sum((_chain_term(q.n, w, False) for w in iter_linear_extensions(q)), q.n)


def psi_tor_word(w: ToricTotalOrder | Sequence[int], n: int | None = None) -> RationalFunction:
    """The cyclic product term of one toric total order.

    ``n`` (default: the word length) sets the number of variables, which lets a
    word on a subset of the labels live in a larger ring.
    """
    word = w.canonical if isinstance(w, ToricTotalOrder) else tuple(w)
    if len(word) < 2:
        raise InputError("a toric total order needs at least two letters")
    if len(set(word)) != len(word):
        raise InputError(f"repeated letter in {word}")
    n = len(word) if n is None else n
    if max(word) > n or min(word) < 1:
        raise InputError(f"letters of {word} outside 1..{n}")
    return _chain_term(n, word, True)


def psi_tor(q: Quiver, method: str = "recursive") -> RationalFunction:
    _need_two(q.n)
    return rf_sum((psi_tor_word(w) for w in ltor(q, method)), q.n)


def greene_strongly_planar(q: Quiver, regions: Iterable[BoundedRegion]) -> RationalFunction:
    """``prod (x_min - x_max)`` over regions divided by ``prod (x_i - x_j)`` over cover relations.

    Zero when the diagram is disconnected.  Every region is checked to have a
    unique source and a unique sink on its boundary.
    """
    _need_two(q.n)
    if not is_transitively_reduced(q):
        raise InputError("quiver is not a Hasse diagram: it has a transitively implied arc")
    regions = list(regions)
    for r in regions:
        r.validate(q)
    if not q.graph.is_connected():
        return RationalFunction.zero(q.n)
    num = SparsePolynomial.constant(q.n)
    for r in regions:
        num = _times_linear(num, r.min_v, r.max_v)
    return RationalFunction(num, sorted(q.arcs))


def _times_linear(p: SparsePolynomial, i: int, j: int) -> SparsePolynomial:
    return poly_mul(p, SparsePolynomial.linear(p.n, i, j))


def bounded_quiver(p: Quiver, zero: int, one: int) -> Quiver:
    if p.has_arc(zero, one):
        return p
    return add_arc(p, zero, one)


def psi_tor_bounded(p: Quiver, zero: int, one: int, check: bool = True) -> RationalFunction:
    """``psi_poset(p) / (x_one - x_zero)``; with ``check`` also compared with the toric sum."""
    q, _ = bounded_bijection(p, zero, one)
    value = rf_mul(psi_poset(p), RationalFunction.reciprocal_product(p.n, [(one, zero)]))
    if check:
        direct = psi_tor(q)
        if not rf_equal(value, direct):
            raise InvariantViolation(f"bounded factorization fails: {value} vs {direct}")
    return value


@dataclass(frozen=True)
class ShuffleWords:
    left: tuple
    right: tuple
    items: tuple

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


def shuffle(b: Sequence, c: Sequence) -> ShuffleWords:
    """All interleavings of ``b`` and ``c``.

    Ordered as if every letter of ``b`` preceded every letter of ``c``, which is
    plain lexicographic order when ``max(b) < min(c)``.
    """
    b, c = tuple(b), tuple(c)
    if set(b) & set(c) or len(set(b)) != len(b) or len(set(c)) != len(c):
        raise InputError("shuffled sequences must consist of distinct labels")
    out: list[tuple] = []
    word: list = []

    def rec(i: int, j: int) -> None:
        if i == len(b) and j == len(c):
            out.append(tuple(word))
            return
        if i < len(b):
            word.append(b[i])
            rec(i + 1, j)
            word.pop()
        if j < len(c):
            word.append(c[j])
            rec(i, j + 1)
            word.pop()

    rec(0, 0)
    return ShuffleWords(b, c, tuple(out))


def _kk_check_labels(b, c, zero, one, n) -> None:
    labels = list(b) + list(c) + [zero, one]
    if len(set(labels)) != len(labels):
        raise InputError("labels of b, c, bottom and top must be distinct")
    if any(not 1 <= x <= n for x in labels):
        raise InputError(f"labels outside 1..{n}")


def kk_closed_form(b: Sequence[int], c: Sequence[int], zero: int, one: int, n: int) -> RationalFunction:
    """``(-1)^k / (prod (x_{b_{r+1}} - x_{b_r}) * prod (x_{c_s} - x_{c_{s+1}}))`` with both chains capped by bottom and top."""
    _kk_check_labels(b, c, zero, one, n)
    bb = [zero, *b, one]
    cc = [zero, *c, one]
    pairs = [(bb[r + 1], bb[r]) for r in range(len(bb) - 1)]
    pairs += [(cc[s], cc[s + 1]) for s in range(len(cc) - 1)]
    return RationalFunction.reciprocal_product(n, pairs, (-1) ** len(b))


def kk_quiver(k: int, j: int) -> tuple[Quiver, tuple, tuple, int, int]:
    """Two chains of lengths ``k`` and ``j`` between a bottom 1 and a top ``k+j+2``, plus the bottom-to-top arc."""
    n = k + j + 2
    zero, one = 1, n
    b = tuple(range(2, k + 2))
    c = tuple(range(k + 2, k + j + 2))
    arcs = set()
    for chain in (b, c):
        path = [zero, *chain, one]
        arcs |= set(zip(path, path[1:]))
    arcs.add((zero, one))
    return Quiver(n, frozenset(arcs)), b, c, zero, one


def _default_ends(b, c) -> tuple[int, int]:
    n = len(b) + len(c) + 2
    free = sorted(set(range(1, n + 1)) - set(b) - set(c))
    if len(free) != 2:
        raise InputError("cannot infer bottom and top labels; pass them explicitly")
    return free[0], free[1]


def verify_kk(b: Sequence[int], c: Sequence[int], zero: int | None = None, one: int | None = None,
              with_quiver: bool = True) -> Report:
    """Compare the shuffle sum with its closed form and, optionally, with the toric sum of the chain quiver."""
    b, c = tuple(b), tuple(c)
    if zero is None or one is None:
        zero, one = _default_ends(b, c)
    n = len(b) + len(c) + 2
    _kk_check_labels(b, c, zero, one, n)
    lhs = rf_sum((psi_tor_word(cyclic_canonical((one, zero) + a)) for a in shuffle(b, c)), n)
    closed = kk_closed_form(b, c, zero, one, n)
    rev = psi_tor_word(cyclic_canonical((one,) + b[::-1] + (zero,) + c))
    rhs = rf_mul(RationalFunction.constant(n, (-1) ** len(b)), rev)
    ok = rf_equal(lhs, closed) and rf_equal(lhs, rhs)
    values = {"sum": str(lhs), "closed_form": str(closed), "terms": comb(len(b) + len(c), len(b))}
    if with_quiver:
        arcs = {(zero, one)}
        for chain in (b, c):
            path = [zero, *chain, one]
            arcs |= set(zip(path, path[1:]))
        q = Quiver(n, frozenset(arcs))
        toric = psi_tor(q)
        values["toric"] = str(toric)
        ok = ok and rf_equal(lhs, toric)
    return Report("kk", ok, None, {"b": list(b), "c": list(c), "zero": zero, "one": one}, values)


def verify_shuffle_vanishing(a: Sequence[int], b: Sequence[int], pivot: int) -> Report:
    a, b = tuple(a), tuple(b)
    n = len(a) + len(b) + 1
    if sorted(a + b + (pivot,)) != list(range(1, n + 1)):
        raise InputError(f"pivot, a and b must use the labels 1..{n} exactly once")
    total = rf_sum((psi_tor_word(cyclic_canonical((pivot,) + w)) for w in shuffle(a, b)), n)
    return Report("shuffle-vanishing", total.is_zero(), None,
                  {"a": list(a), "b": list(b), "pivot": pivot}, {"sum": str(total)})


def cut_vertex_hypothesis(q: Quiver) -> tuple[bool, list[int]]:
    """``(holds, cut vertices)`` for: disconnected with at least three vertices, or has a cut vertex."""
    g = nx.Graph()
    g.add_nodes_from(range(1, q.n + 1))
    g.add_edges_from(q.graph.edges)
    cuts = sorted(nx.articulation_points(g))
    disconnected = not nx.is_connected(g)
    return (disconnected and q.n >= 3) or bool(cuts), cuts


def verify_cut_vertex_vanishing(q: Quiver, method: str = "recursive") -> Report:
    holds, cuts = cut_vertex_hypothesis(q)
    value = psi_tor(q, method)
    values = {"psi_tor": str(value), "cut_vertices": cuts, "connected": q.graph.is_connected()}
    if holds:
        return Report("cut-vertex", value.is_zero(), True, _qjson(q), values)
    return Report("cut-vertex", True, False, _qjson(q), values, note="hypothesis not met")


def verify_denominator(q: Quiver, method: str = "recursive") -> Report:
    """Every denominator factor of the toric sum must be an edge of the toric Hasse diagram."""
    value = psi_tor(q, method)
    hasse = toric_hasse(q).graph.edges
    factors = sorted({(f.i, f.j) for f in value.denominator})
    outside = [e for e in factors if e not in hasse]
    unused = sorted(set(hasse) - set(factors))
    values = {"psi_tor": str(value), "factors": factors, "hasse_edges": sorted(hasse), "unused_edges": unused,
              "proper": bool(unused)}
    if q.n < 3:
        return Report("denominator", True, False, _qjson(q), values, note="two-vertex case excluded")
    return Report("denominator", not outside, True, _qjson(q), values,
                  note=f"factors outside the toric Hasse diagram: {outside}" if outside else "")


def _qjson(q: Quiver) -> dict:
    return {"n": q.n, "arcs": [list(a) for a in sorted(q.arcs)]}


__all__ = [
    "ShuffleWords", "bounded_quiver", "cut_vertex_hypothesis", "greene_strongly_planar",
    "is_transitively_reduced", "kk_closed_form", "kk_quiver", "psi_poset", "psi_tor", "psi_tor_bounded",
    "psi_tor_word", "shuffle", "verify_cut_vertex_vanishing", "verify_denominator", "verify_kk",
    "verify_shuffle_vanishing",
]
