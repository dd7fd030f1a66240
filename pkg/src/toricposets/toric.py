"""Toric posets: flip classes of acyclic quivers and the structure attached to them.

Flip-class searches run on an :class:`OrientationSpace`, which encodes an
orientation of a fixed graph as an integer with one bit per edge (bit set
means the edge ``(i, j)``, ``i < j``, is directed ``i -> j``).  Flipping a
vertex is then a single XOR with its incidence mask.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import InputError, InvariantViolation, PreconditionError, ResourceError
from .quiver import Edge, Graph, Quiver, LinearExtension, bits, flip, is_linear_extension, mask_of

DEFAULT_CAP = 10**6


class OrientationSpace:
    """Orientations of one graph as edge bitmasks."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.n
        self.edges = graph.edge_list
        self.index = {e: k for k, e in enumerate(self.edges)}
        inc = [0] * (self.n + 1)
        low = [0] * (self.n + 1)
        for k, (i, j) in enumerate(self.edges):
            inc[i] |= 1 << k
            inc[j] |= 1 << k
            low[i] |= 1 << k
        self.inc = tuple(inc)
        # edges pointing away from v when set
        self.low = tuple(low)
        self.high = tuple(a ^ b for a, b in zip(inc, low))

    def encode(self, q: Quiver) -> int:
        if q.graph != self.graph:
            raise InputError("quiver does not orient this graph")
        o = 0
        for a, b in q.arcs:
            if a < b:
                o |= 1 << self.index[(a, b)]
        return o

    def decode(self, o: int) -> Quiver:
        arcs = frozenset((i, j) if o >> k & 1 else (j, i) for k, (i, j) in enumerate(self.edges))
        return Quiver._trusted(self.n, arcs)

    def is_source(self, o: int, v: int) -> bool:
        return o & self.inc[v] == self.low[v]

    def is_sink(self, o: int, v: int) -> bool:
        return o & self.inc[v] == self.high[v]

    def flippable(self, o: int, allowed: int) -> Iterable[int]:
        for v in bits(allowed):
            m = o & self.inc[v]
            if m == self.low[v] or m == self.high[v]:
                yield v

    def is_acyclic(self, o: int) -> bool:
        # peel sources; an orientation is acyclic iff this empties the graph
        remaining = mask_of(range(1, self.n + 1))
        live_edges = (1 << len(self.edges)) - 1
        progress = True
        while remaining and progress:
            progress = False
            for v in bits(remaining):
                m = self.inc[v] & live_edges
                if o & m == self.low[v] & m:
                    remaining &= ~(1 << v)
                    live_edges &= ~self.inc[v]
                    progress = True
        return not remaining

    @cached_property
    def forest(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """BFS spanning forest from the lowest vertex of each component: ``(parent, depth)``."""
        parent = [0] * (self.n + 1)
        depth = [-1] * (self.n + 1)
        for s in range(1, self.n + 1):
            if depth[s] >= 0:
                continue
            depth[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in sorted(self.graph.adjacency[u]):
                    if depth[w] < 0:
                        depth[w] = depth[u] + 1
                        parent[w] = u
                        queue.append(w)
        return tuple(parent), tuple(depth)

    @cached_property
    def tree_edges(self) -> tuple[Edge, ...]:
        parent, _ = self.forest
        return tuple(sorted((min(v, p), max(v, p)) for v, p in enumerate(parent) if p))

    @cached_property
    def circuits(self) -> tuple[tuple[Edge, tuple[tuple[int, int], ...]], ...]:
        """Fundamental circuits as ``(non-tree edge, ((edge index, +1|-1), ...))``.

        The sign is +1 when the walk traverses the edge from its smaller to its
        larger endpoint.  Each circuit starts with its non-tree edge ``(u, w)``
        walked ``u -> w`` and returns to ``u`` along the tree.
        """
        parent, depth = self.forest
        tree = set(self.tree_edges)
        out = []
        for u, w in self.edges:
            if (u, w) in tree:
                continue
            up_w, up_u = [w], [u]
            a, b = w, u
            while depth[a] > depth[b]:
                a = parent[a]
                up_w.append(a)
            while depth[b] > depth[a]:
                b = parent[b]
                up_u.append(b)
            while a != b:
                a, b = parent[a], parent[b]
                up_w.append(a)
                up_u.append(b)
            walk = [u] + up_w + up_u[-2::-1]
            steps = []
            for x, y in zip(walk, walk[1:]):
                k = self.index[(min(x, y), max(x, y))]
                steps.append((k, 1 if x < y else -1))
            out.append(((u, w), tuple(steps)))
        return tuple(out)

    def flow_differences(self, o: int) -> tuple[int, ...]:
        out = []
        for _, steps in self.circuits:
            d = 0
            for k, s in steps:
                d += s if o >> k & 1 else -s
            out.append(d)
        return tuple(out)

    def search(self, start: int, forbidden: int = 0, cap: int = DEFAULT_CAP, target: int | None = None):
        """BFS in the flip graph avoiding flips at ``forbidden``; returns the parent map."""
        allowed = mask_of(range(1, self.n + 1)) & ~forbidden
        parents: dict[int, tuple[int, int] | None] = {start: None}
        queue = deque([start])
        while queue:
            o = queue.popleft()
            if o == target:
                break
            for v in self.flippable(o, allowed):
                o2 = o ^ self.inc[v]
                if o2 not in parents:
                    parents[o2] = (o, v)
                    if len(parents) > cap:
                        raise ResourceError(f"flip graph exceeds cap of {cap} quivers")
                    queue.append(o2)
        return parents


@lru_cache(maxsize=4096)
def orientation_space(graph: Graph) -> OrientationSpace:
    return OrientationSpace(graph)


@dataclass(frozen=True)
class FlowDifferenceVector:
    """Flow differences of the fundamental circuits of a fixed spanning forest."""

    tree: tuple
    values: tuple  # ((non-tree edge, d), ...)


@dataclass(frozen=True)
class ToricPoset:
    representative: Quiver
    graph: Graph
    fingerprint: FlowDifferenceVector


@dataclass(frozen=True)
class ToricChainCertificate:
    vertices: tuple
    witness: frozenset


def fingerprint(q: Quiver) -> FlowDifferenceVector:
    space = orientation_space(q.graph)
    values = space.flow_differences(space.encode(q))
    return FlowDifferenceVector(space.tree_edges, tuple(zip((e for e, _ in space.circuits), values)))


def _class_masks(q: Quiver, cap: int) -> tuple[OrientationSpace, dict]:
    space = orientation_space(q.graph)
    return space, space.search(space.encode(q), cap=cap)


def flip_class(q: Quiver, cap: int = DEFAULT_CAP) -> frozenset:
    """All quivers reachable from ``q`` by source/sink flips (including ``q``)."""
    space, found = _class_masks(q, cap)
    return frozenset(space.decode(o) for o in found)


def canonical_representative(q: Quiver, cap: int = DEFAULT_CAP) -> Quiver:
    return min(flip_class(q, cap), key=lambda x: x.key)


def toric_poset(q: Quiver, cap: int = DEFAULT_CAP) -> ToricPoset:
    rep = canonical_representative(q, cap)
    return ToricPoset(rep, rep.graph, fingerprint(rep))


def same_toric_poset(q1: Quiver, q2: Quiver) -> bool:
    if q1.graph != q2.graph:
        raise InputError("quivers have different underlying graphs")
    return fingerprint(q1).values == fingerprint(q2).values


def quivers_with_source(q: Quiver, v: int, cap: int = DEFAULT_CAP) -> frozenset:
    space, found = _class_masks(q, cap)
    return frozenset(space.decode(o) for o in found if space.is_source(o, v))


def make_source(q: Quiver, v: int) -> tuple[Quiver, list[int]]:
    """A class member with ``v`` as a source, reached by flipping a linear-extension suffix.

    The extension used places every non-descendant of ``v`` before ``v``, so the
    flips are exactly ``v``'s proper descendants (from the end) and then ``v``.
    """
    if q.is_source(v):
        return q, []
    rem = mask_of(range(1, q.n + 1))
    order = []
    while rem:
        avail = [u for u in bits(rem) if not q.pred_mask[u] & rem]
        u = next((x for x in avail if x != v), v)
        order.append(u)
        rem &= ~(1 << u)
    i = order.index(v)
    seq = order[i:][::-1]
    out = q
    for u in seq:
        out = flip(out, u)
    if not out.is_source(v):
        raise InvariantViolation(f"make_source failed to make {v} a source")
    return out, seq


def rotate_by_linear_extension(q: Quiver, w: Sequence[int]) -> Quiver:
    """Flip at ``w[0], w[1], ...`` in turn; each flip is at a source and the result is ``q``."""
    if not is_linear_extension(q, w):
        raise PreconditionError(f"{tuple(w)} is not a linear extension")
    out = q
    for v in w:
        if not out.is_source(v):
            raise InvariantViolation(f"vertex {v} is not a source when its turn comes")
        out = flip(out, v)
    return out


def is_toric_directed_path(q: Quiver, seq: Sequence[int]) -> bool:
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        raise InputError("toric directed path vertices must be distinct")
    if len(seq) <= 1:
        return True
    if not all((a, b) in q.arcs for a, b in zip(seq, seq[1:])):
        return False
    return (seq[0], seq[-1]) in q.arcs


def toric_chain_certificate(q: Quiver, s: Iterable[int]) -> ToricChainCertificate | None:
    """A toric directed path through every vertex of ``s``, or ``None``."""
    s = set(s)
    if not s:
        raise InputError("toric chain candidate must be nonempty")
    topo = {v: i for i, v in enumerate(q.topological_order)}
    ordered = sorted(s, key=topo.__getitem__)
    if len(ordered) == 1:
        return ToricChainCertificate(tuple(ordered), frozenset())
    for a, b in zip(ordered, ordered[1:]):
        if not q.descendants[a] >> b & 1:
            return None
    first, last = ordered[0], ordered[-1]
    anc, desc = q.ancestors[first], q.descendants[last]
    for p, r in sorted(q.arcs):
        if anc >> p & 1 and desc >> r & 1:
            stops = [p] + [x for x in ordered if x not in (p, r)] + [r]
            path = [p]
            for x in stops[1:]:
                path.extend(_directed_path(q, path[-1], x)[1:])
            witness = frozenset(zip(path, path[1:])) | {(p, r)}
            return ToricChainCertificate(tuple(path), witness)
    return None


def _directed_path(q: Quiver, a: int, b: int) -> list[int]:
    path = [a]
    while path[-1] != b:
        u = path[-1]
        path.append(next(w for w in bits(q.succ_mask[u]) if q.descendants[w] >> b & 1))
    return path


def _totally_ordered(q: Quiver, s: Iterable[int]) -> bool:
    s = list(s)
    return all(
        q.descendants[a] >> b & 1 or q.descendants[b] >> a & 1
        for i, a in enumerate(s) for b in s[i + 1:]
    )


def is_toric_chain(q: Quiver, s: Iterable[int], strategy: str = "criterion", cap: int = DEFAULT_CAP) -> bool:
    """Whether ``s`` is totally ordered in every member of the flip class of ``q``.

    ``strategy="criterion"`` looks for a toric directed path of ``q`` containing
    ``s``; ``strategy="brute"`` checks every class member directly.
    """
    s = frozenset(s)
    if not s:
        raise InputError("toric chain candidate must be nonempty")
    if strategy == "criterion":
        return toric_chain_certificate(q, s) is not None
    if strategy == "brute":
        return all(_totally_ordered(m, s) for m in flip_class(q, cap))
    raise InputError(f"unknown strategy {strategy!r}")


def torically_comparable(q: Quiver, a: int, b: int) -> bool:
    if a == b:
        raise InputError("torical comparability needs two distinct vertices")
    return bool(toric_comparability(q)[a] >> b & 1)


def toric_comparability(q: Quiver) -> tuple[int, ...]:
    """``out[v]``: bitmask of vertices lying on a common toric chain with ``v`` (including ``v``)."""
    out = [1 << v for v in range(q.n + 1)]
    for p, r in q.arcs:
        on_path = q.descendants[p] & q.ancestors[r]
        for a in bits(on_path):
            out[a] |= (q.descendants[a] | q.ancestors[a]) & on_path
    return tuple(out)


def toric_hasse(q: Quiver) -> Quiver:
    """Drop each arc ``i -> j`` whose endpoints sit non-consecutively on a toric directed path.

    Such an arc closes a toric directed path ``i ~> j`` of length > 1 that
    extends, below ``i`` or above ``j``, to a longer toric directed path.
    """
    keep = set()
    for i, j in q.arcs:
        long_path = any(k != j and q.descendants[k] >> j & 1 for k in bits(q.succ_mask[i]))
        if long_path:
            anc, desc = q.ancestors[i], q.descendants[j]
            if any((p, r) != (i, j) and anc >> p & 1 and desc >> r & 1 for p, r in q.arcs):
                continue
        keep.add((i, j))
    return Quiver._trusted(q.n, frozenset(keep))


def toric_transitive_closure(q: Quiver) -> Quiver:
    comp = toric_comparability(q)
    arcs = set(q.arcs)
    for a in range(1, q.n + 1):
        for b in bits(comp[a] & q.descendants[a] & ~(1 << a)):
            if (a, b) not in arcs:
                arcs.add((a, b))
    return Quiver._trusted(q.n, frozenset(arcs))


def build_v_incomparability_graph(q: Quiver, v: int) -> tuple[Graph, dict]:
    """The graph ``G^v`` and the map from original vertices to its labels.

    ``v*`` gets label 1 and the vertices torically incomparable with ``v`` get
    ``2, 3, ...`` in increasing order.  Torically comparable vertices are not in
    the map except ``v`` itself (mapped to 1).
    """
    comp = toric_comparability(q)
    incomparable = [w for w in range(1, q.n + 1) if not comp[v] >> w & 1]
    label = {v: 1}
    label.update({w: k for k, w in enumerate(incomparable, start=2)})
    closure = toric_transitive_closure(q).graph
    dist = closure.distances_from(v)
    edges = set()
    for a, b in q.graph.edges:
        if a in label and b in label and v not in (a, b):
            edges.add((label[a], label[b]))
    for w in incomparable:
        if dist.get(w) == 2:
            edges.add((1, label[w]))
    edges = frozenset((min(e), max(e)) for e in edges)
    return Graph(len(label), edges), label


def phi(qv: Quiver, v: int) -> Quiver:
    """Orient ``G^v`` from a member ``qv`` of the class having ``v`` as a source."""
    if not qv.is_source(v):
        raise PreconditionError(f"vertex {v} is not a source")
    gv, label = build_v_incomparability_graph(qv, v)
    closure = toric_transitive_closure(qv)
    near = closure.graph.adjacency[v]
    inverse = {k: w for w, k in label.items()}
    arcs = set()
    for a, b in gv.edges:
        if a == 1:
            u = inverse[b]
            dirs = {(w, u) in closure.arcs for w in near if closure.graph.has_edge(w, u)}
            if len(dirs) != 1:
                raise InvariantViolation(f"orientation of edge to {u} is not well defined: {dirs}")
            arcs.add((1, b) if dirs.pop() else (b, 1))
        else:
            x, y = inverse[a], inverse[b]
            arcs.add((a, b) if (x, y) in qv.arcs else (b, a))
    try:
        return Quiver(gv.n, frozenset(arcs))
    except InputError as exc:
        raise InvariantViolation(f"phi produced an invalid quiver: {exc}") from None


def flip_sequence(q1: Quiver, q2: Quiver, forbidden: Iterable[int] = (), cap: int = DEFAULT_CAP) -> list[int] | None:
    """Shortest flip sequence ``q1 -> q2`` that never flips a forbidden vertex, or ``None``."""
    if q1.graph != q2.graph:
        raise InputError("quivers have different underlying graphs")
    space = orientation_space(q1.graph)
    start, goal = space.encode(q1), space.encode(q2)
    parents = space.search(start, mask_of(forbidden), cap, target=goal)
    if goal not in parents:
        return None
    seq = []
    o = goal
    while parents[o] is not None:
        o, v = parents[o]
        seq.append(v)
    return seq[::-1]


def restricted_flip_component(q: Quiver, forbidden: Iterable[int], cap: int = DEFAULT_CAP) -> frozenset:
    """Quivers reachable from ``q`` without flipping any forbidden vertex."""
    space = orientation_space(q.graph)
    found = space.search(space.encode(q), mask_of(forbidden), cap)
    return frozenset(space.decode(o) for o in found)


__all__ = [
    "DEFAULT_CAP", "FlowDifferenceVector", "OrientationSpace", "ToricChainCertificate", "ToricPoset",
    "build_v_incomparability_graph", "canonical_representative", "fingerprint", "flip_class",
    "flip_sequence", "is_toric_chain", "is_toric_directed_path", "make_source", "orientation_space",
    "phi", "quivers_with_source", "restricted_flip_component", "rotate_by_linear_extension",
    "same_toric_poset", "toric_chain_certificate", "toric_comparability", "toric_hasse", "toric_poset",
    "toric_transitive_closure", "torically_comparable",
]
