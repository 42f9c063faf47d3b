"""JSON encodings for families, relations, graphs and inverse systems."""
from __future__ import annotations

import json
import sys
from pathlib import Path

from .families import IndexedFamily, make_family
from .graphs import SimpleGraph, make_graph
from .koenig import InverseSystem, make_inverse_system
from .relations import FiniteRelation, make_relation


class InputError(ValueError):
    """Malformed input document."""


def load_json(path: str | Path):
    text = Path(path).read_text() if str(path) != "-" else sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _require(doc, key, kind):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"missing required key {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise InputError(f"key {key!r} must be a {kind.__name__}")
    return value


def family_from_json(doc) -> IndexedFamily:
    """``{"universe": [...], "family": {"0": [...], ...}}``; universe optional."""
    family = _require(doc, "family", dict)
    universe = doc.get("universe")
    if universe is not None and not isinstance(universe, list):
        raise InputError("'universe' must be a list")
    for k, v in family.items():
        if not isinstance(v, list):
            raise InputError(f"set of index {k!r} must be a list")
    return make_family(family, universe)


def family_to_json(family: IndexedFamily) -> dict:
    return {
        "universe": list(family.universe),
        "family": {str(i): list(s) for i, s in family.items()},
    }


def relation_from_json(doc) -> FiniteRelation:
    """``{"left": [...], "right": [...], "pairs": [[a, b], ...]}``."""
    left = _require(doc, "left", list)
    right = _require(doc, "right", list)
    pairs = _require(doc, "pairs", list)
    if any(not isinstance(p, list) or len(p) != 2 for p in pairs):
        raise InputError("every pair must be a two-element list")
    return make_relation(left, right, [tuple(p) for p in pairs])


def graph_from_json(doc) -> tuple[SimpleGraph, dict | None]:
    """``{"vertices": [...], "edges": [[u, v], ...], "colors": {...}}``; colors optional."""
    vertices = _require(doc, "vertices", list)
    edges = _require(doc, "edges", list)
    if any(not isinstance(e, list) or len(e) != 2 for e in edges):
        raise InputError("every edge must be a two-element list")
    colors = doc.get("colors")
    if colors is not None and not isinstance(colors, dict):
        raise InputError("'colors' must be an object")
    return make_graph(vertices, [tuple(e) for e in edges]), colors


def system_from_json(doc) -> InverseSystem:
    """``{"levels": [[...], ...], "step": {"x": "y", ...}}``."""
    levels = _require(doc, "levels", list)
    step = _require(doc, "step", dict)
    if any(not isinstance(level, list) for level in levels):
        raise InputError("every level must be a list")
    return make_inverse_system(levels, step)


def key(token) -> str:
    return token if isinstance(token, str) else json.dumps(token)
