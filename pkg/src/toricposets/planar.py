"""Combinatorial embeddings: rotation systems, face tracing and bounded regions.

A rotation system lists, for each vertex, its neighbours in cyclic order.
Faces are traced by leaving each vertex along the neighbour that follows the
one we arrived from.  For strong planarity the diagram is augmented with a
bottom ``n+1`` below every minimal element and a top ``n+2`` above every
maximal element; the caller's rotation system describes that augmented graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Iterable, Sequence

from .errors import InputError, ResourceError
from .quiver import Graph, Quiver
from .report import Report

DEFAULT_SEARCH_CAP = 200_000


@dataclass(frozen=True)
class RotationSystem:
    """``order[v - 1]`` is the cyclic neighbour sequence of vertex ``v``."""

    order: tuple

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[int]]) -> "RotationSystem":
        return cls(tuple(tuple(x) for x in lists))

    @property
    def n(self) -> int:
        return len(self.order)

    def around(self, v: int) -> tuple:
        return self.order[v - 1]

    def validate(self, g: Graph) -> None:
        if self.n != g.n:
            raise InputError(f"rotation system has {self.n} vertices, graph has {g.n}")
        for v in range(1, g.n + 1):
            rot = self.around(v)
            if len(set(rot)) != len(rot) or set(rot) != set(g.adjacency[v]):
                raise InputError(f"rotation at {v} is {rot}, incident vertices are {sorted(g.adjacency[v])}")

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.order]


@dataclass(frozen=True)
class BoundedRegion:
    delta: frozenset
    min_v: int
    max_v: int
    cycle: tuple = field(default=(), compare=False)

    def validate(self, q: Quiver) -> None:
        """Raise unless ``min_v``/``max_v`` are the unique source/sink of the region boundary."""
        if self.min_v not in self.delta or self.max_v not in self.delta:
            raise InputError(f"region extremes {self.min_v}, {self.max_v} not in {sorted(self.delta)}")
        if self.cycle:
            srcs, snks = cycle_extremes(q, self.cycle)
        else:
            inside = self.delta
            srcs = [v for v in sorted(inside) if not any((u, v) in q.arcs for u in inside)]
            snks = [v for v in sorted(inside) if not any((v, u) in q.arcs for u in inside)]
        if srcs != [self.min_v] or snks != [self.max_v]:
            raise InputError(f"region {sorted(self.delta)} has sources {srcs} and sinks {snks}")

    def to_json(self) -> dict:
        return {"delta": sorted(self.delta), "min": self.min_v, "max": self.max_v, "cycle": list(self.cycle)}


def cycle_extremes(q: Quiver, cycle: Sequence[int]) -> tuple[list[int], list[int]]:
    """Sources and sinks of a closed vertex walk under the orientation of ``q``."""
    k = len(cycle)
    srcs, snks = [], []
    for t, v in enumerate(cycle):
        prev, nxt = cycle[t - 1], cycle[(t + 1) % k]
        out_prev = (v, prev) in q.arcs
        out_next = (v, nxt) in q.arcs
        if out_prev and out_next:
            srcs.append(v)
        elif not out_prev and not out_next:
            snks.append(v)
    return sorted(srcs), sorted(snks)


def faces(g: Graph, rot: RotationSystem) -> list[tuple[int, ...]]:
    """Face boundary walks as vertex tuples; each directed edge side is used exactly once.

    Raises :class:`InputError` if the graph is disconnected or the rotation
    system violates Euler's formula.
    """
    rot.validate(g)
    if not g.is_connected():
        raise InputError("face tracing needs a connected graph")
    if not g.edges:
        return [(1,)]
    pos = {v: {u: k for k, u in enumerate(rot.around(v))} for v in range(1, g.n + 1)}
    unused = {(a, b) for a, b in g.edges} | {(b, a) for a, b in g.edges}
    out = []
    for start in sorted(unused):
        if start not in unused:
            continue
        walk = []
        dart = start
        while dart in unused:
            unused.discard(dart)
            u, v = dart
            walk.append(u)
            around = rot.around(v)
            dart = (v, around[(pos[v][u] + 1) % len(around)])
        if dart != start:
            raise InputError("face tracing did not close up")
        out.append(tuple(walk))
    if g.n - len(g.edges) + len(out) != 2:
        raise InputError(f"rotation system not planar: V - E + F = {g.n - len(g.edges) + len(out)}")
    return out


def face_cycle(walk: Sequence[int]) -> tuple[int, ...]:
    """The simple cycle left after removing edges the walk traverses twice (bridges).

    Raises :class:`InputError` when the remaining edges are not one simple cycle.
    """
    k = len(walk)
    sides = [(walk[t], walk[(t + 1) % k]) for t in range(k)]
    undirected = [frozenset(s) for s in sides]
    counts: dict = {}
    for e in undirected:
        counts[e] = counts.get(e, 0) + 1
    kept = [s for s, e in zip(sides, undirected) if counts[e] == 1]
    if not kept:
        return ()
    succ = {}
    for a, b in kept:
        if a in succ:
            raise InputError(f"face boundary {tuple(walk)} is not a simple cycle")
        succ[a] = b
    cycle = [kept[0][0]]
    while True:
        nxt = succ[cycle[-1]]
        if nxt == cycle[0]:
            break
        cycle.append(nxt)
    if len(cycle) != len(kept):
        raise InputError(f"face boundary {tuple(walk)} is not a simple cycle")
    return tuple(cycle)


def bounded_regions(q: Quiver, rot: RotationSystem, outer: int) -> list[BoundedRegion]:
    """Every face other than ``outer`` as a region with a unique minimum and maximum."""
    walks = faces(q.graph, rot)
    if not 0 <= outer < len(walks):
        raise InputError(f"outer face id {outer} outside 0..{len(walks) - 1}")
    out = []
    for fid, walk in enumerate(walks):
        if fid == outer:
            continue
        region = _region_of(q, walk)
        if region is not None:
            out.append(region)
    return out


def _region_of(q: Quiver, walk: Sequence[int]) -> BoundedRegion | None:
    cycle = face_cycle(walk)
    if not cycle:
        return None
    srcs, snks = cycle_extremes(q, cycle)
    if len(srcs) != 1 or len(snks) != 1:
        raise InputError(f"not a strongly planar embedding: face {cycle} has sources {srcs} and sinks {snks}")
    return BoundedRegion(frozenset(cycle), srcs[0], snks[0], cycle)


def augment(q: Quiver) -> tuple[Quiver, int, int]:
    """``q`` plus a bottom ``n+1`` below every source and a top ``n+2`` above every sink."""
    zero, one = q.n + 1, q.n + 2
    arcs = set(q.arcs)
    arcs |= {(zero, v) for v in range(1, q.n + 1) if q.is_source(v)}
    arcs |= {(v, one) for v in range(1, q.n + 1) if q.is_sink(v)}
    return Quiver(q.n + 2, frozenset(arcs)), zero, one


def strongly_planar_check(q: Quiver, rot: RotationSystem, outer: int | None = None) -> Report:
    """Check a rotation system of the augmented diagram and extract the regions of ``q``.

    ``outer`` is the face id of the augmented embedding to treat as unbounded;
    it must contain the bottom and the top.  When omitted, each such face is
    tried in order and the first that works is used.
    """
    aug, zero, one = augment(q)
    info = {"n": q.n, "arcs": [list(a) for a in sorted(q.arcs)], "zero": zero, "one": one}
    try:
        walks = faces(aug.graph, rot)
    except InputError as exc:
        return Report("planar", False, None, info, {}, note=str(exc))
    candidates = [f for f, w in enumerate(walks) if zero in w and one in w]
    if outer is not None:
        if outer not in candidates:
            return Report("planar", False, None, info, {"faces": walks},
                          note=f"face {outer} does not contain both bottom and top")
        candidates = [outer]
    reason = "no face contains both bottom and top"
    for fid in candidates:
        try:
            regions = [_region_of(aug, w) for f, w in enumerate(walks) if f != fid]
        except InputError as exc:
            reason = str(exc)
            continue
        inner = [r for r in regions if r is not None and zero not in r.delta and one not in r.delta]
        values = {"outer": fid, "faces": [list(w) for w in walks], "regions": [r.to_json() for r in inner]}
        return Report("planar", True, None, info, values)
    return Report("planar", False, None, info, {"faces": [list(w) for w in walks]}, note=reason)


def regions_from_report(report: Report) -> list[BoundedRegion]:
    return [BoundedRegion(frozenset(r["delta"]), r["min"], r["max"], tuple(r["cycle"]))
            for r in report.values.get("regions", [])]


def _cyclic_orders(items: Sequence[int]) -> Iterable[tuple]:
    items = sorted(items)
    if len(items) <= 2:
        yield tuple(items)
        return
    head, rest = items[0], items[1:]
    for perm in itertools.permutations(rest):
        yield (head,) + perm


def search_strongly_planar(q: Quiver, cap: int = DEFAULT_SEARCH_CAP) -> tuple[RotationSystem, Report] | None:
    """Exhaustive search for a rotation system of the augmented diagram passing the check.

    Only for small diagrams: the number of rotation systems is the product of
    ``(deg - 1)!`` over vertices and must not exceed ``cap``.
    """
    aug, _, _ = augment(q)
    g = aug.graph
    degs = [len(g.adjacency[v]) for v in range(1, g.n + 1)]
    total = prod(factorial(max(d - 1, 0)) for d in degs)
    if total > cap:
        raise ResourceError(f"{total} rotation systems exceed the search cap {cap}")
    choices = [list(_cyclic_orders(g.adjacency[v])) for v in range(1, g.n + 1)]
    for combo in itertools.product(*choices):
        rot = RotationSystem(combo)
        report = strongly_planar_check(q, rot)
        if report.passed:
            return rot, report
    return None


__all__ = [
    "BoundedRegion", "RotationSystem", "augment", "bounded_regions", "cycle_extremes", "face_cycle", "faces",
    "regions_from_report", "search_strongly_planar", "strongly_planar_check",
]
