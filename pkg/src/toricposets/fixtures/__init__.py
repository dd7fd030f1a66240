"""Small named quivers used as worked examples, shipped as JSON documents."""

from __future__ import annotations

import json
from importlib import resources

from ..errors import InputError
from ..io import QuiverDocument, from_json, loads
from ..quiver import Quiver


def names() -> list[str]:
    root = resources.files(__name__)
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load(name: str) -> QuiverDocument:
    path = resources.files(__name__) / f"{name}.json"
    if not path.is_file():
        raise InputError(f"no fixture named {name!r}")
    return loads(path.read_text(encoding="utf-8"))


def quiver(name: str) -> Quiver:
    return load(name).quiver


def generated_planar() -> list[QuiverDocument]:
    """Strongly planar diagrams with embeddings, produced by ``scripts/make_planar_fixtures.py``."""
    path = resources.files(__name__) / "generated" / "planar.json"
    return [from_json(d) for d in json.loads(path.read_text(encoding="utf-8"))]
