"""JSON quiver documents.

Schema (UTF-8 JSON object)::

    {"n": 4, "arcs": [[1, 2], [1, 3], [2, 4], [3, 4]],
     "labels": ["a", "b", "c", "d"],            # optional display names
     "zero": 1, "one": 4,                        # optional bottom and top
     "rotation": {"order": [[...], ...],         # optional embedding
                  "augmented": true, "outer": 0},
     "regions": [{"delta": [...], "min": 1, "max": 6}]}

Vertices are 1-based.  When ``labels`` is present, arc endpoints, ``zero``,
``one`` and region entries may also be given by label; they are mapped to
their 1-based positions on parsing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InputError
from .planar import BoundedRegion, RotationSystem
from .quiver import Quiver


@dataclass(frozen=True)
class Rotation:
    system: RotationSystem
    augmented: bool = True
    outer: int | None = None


@dataclass(frozen=True)
class QuiverDocument:
    quiver: Quiver
    labels: tuple | None = None
    zero: int | None = None
    one: int | None = None
    rotation: Rotation | None = None
    regions: tuple = field(default=())
    name: str = ""

    @property
    def n(self) -> int:
        return self.quiver.n

    def label(self, v: int) -> str:
        return str(self.labels[v - 1]) if self.labels else str(v)


def _vertex(x, index: dict | None, n: int, what: str) -> int:
    if index is not None and not isinstance(x, int) and x in index:
        return index[x]
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{what}: unknown vertex {x!r}")
    if not 1 <= x <= n:
        raise InputError(f"{what}: vertex {x} outside 1..{n}")
    return x


def from_json(data) -> QuiverDocument:
    if not isinstance(data, dict):
        raise InputError("a quiver document must be a JSON object")
    unknown = set(data) - {"n", "arcs", "labels", "zero", "one", "rotation", "regions", "name"}
    if unknown:
        raise InputError(f"unknown fields {sorted(unknown)}")
    n = data.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"field n must be a positive integer, got {n!r}")
    labels = data.get("labels")
    index = None
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n:
            raise InputError("labels must be a list of length n")
        if len(set(map(str, labels))) != n:
            raise InputError("labels must be distinct")
        index = {lab: k for k, lab in enumerate(labels, start=1)}
        labels = tuple(labels)
    arcs = data.get("arcs", [])
    if not isinstance(arcs, list):
        raise InputError("arcs must be a list of pairs")
    pairs = []
    for arc in arcs:
        if not isinstance(arc, (list, tuple)) or len(arc) != 2:
            raise InputError(f"arc {arc!r} is not a pair")
        pairs.append((_vertex(arc[0], index, n, "arc"), _vertex(arc[1], index, n, "arc")))
    q = Quiver(n, frozenset(pairs))
    if len(q.arcs) != len(pairs):
        raise InputError("repeated arc")
    zero = _vertex(data["zero"], index, n, "zero") if data.get("zero") is not None else None
    one = _vertex(data["one"], index, n, "one") if data.get("one") is not None else None
    rotation = None
    if data.get("rotation") is not None:
        block = data["rotation"]
        if not isinstance(block, dict) or not isinstance(block.get("order"), list):
            raise InputError("rotation must be an object with an order list")
        augmented = bool(block.get("augmented", True))
        size = n + 2 if augmented else n
        order = block["order"]
        if len(order) != size:
            raise InputError(f"rotation order must list {size} vertices")
        system = RotationSystem.from_lists([[_vertex(u, None, size, "rotation") for u in row] for row in order])
        outer = block.get("outer")
        if outer is not None and (isinstance(outer, bool) or not isinstance(outer, int)):
            raise InputError("outer must be a face id")
        rotation = Rotation(system, augmented, outer)
    regions = []
    for r in data.get("regions", []) or []:
        try:
            delta = frozenset(_vertex(u, index, n, "region") for u in r["delta"])
            regions.append(BoundedRegion(delta, _vertex(r["min"], index, n, "region"),
                                         _vertex(r["max"], index, n, "region"),
                                         tuple(_vertex(u, index, n, "region") for u in r.get("cycle", []))))
        except (KeyError, TypeError):
            raise InputError(f"malformed region {r!r}") from None
    return QuiverDocument(q, labels, zero, one, rotation, tuple(regions), str(data.get("name", "")))


def to_json(doc: QuiverDocument) -> dict:
    out: dict = {}
    if doc.name:
        out["name"] = doc.name
    out["n"] = doc.n
    out["arcs"] = [list(a) for a in sorted(doc.quiver.arcs)]
    if doc.labels is not None:
        out["labels"] = list(doc.labels)
    if doc.zero is not None:
        out["zero"] = doc.zero
    if doc.one is not None:
        out["one"] = doc.one
    if doc.rotation is not None:
        block = {"order": doc.rotation.system.to_lists(), "augmented": doc.rotation.augmented}
        if doc.rotation.outer is not None:
            block["outer"] = doc.rotation.outer
        out["rotation"] = block
    if doc.regions:
        out["regions"] = [r.to_json() for r in doc.regions]
    return out


def loads(text: str) -> QuiverDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    return from_json(data)


def dumps(doc: QuiverDocument) -> str:
    return json.dumps(to_json(doc), indent=2)


def load(path: str | Path) -> QuiverDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return loads(text)


def save(doc: QuiverDocument, path: str | Path) -> None:
    Path(path).write_text(dumps(doc) + "\n", encoding="utf-8")


def document(q: Quiver, **kw) -> QuiverDocument:
    return QuiverDocument(q, **kw)
