"""Polytope JSON files: ``{"vertices": [["0", "0"], ["4", "1"], ["1/2", "3"]]}``."""

from __future__ import annotations

import json
from pathlib import Path

from .exact import format_rational, parse_rational
from .polytope import RationalPolytope, make_polytope


class MalformedInput(ValueError):
    pass


def polytope_from_json(obj) -> RationalPolytope:
    if not isinstance(obj, dict) or not isinstance(obj.get("vertices"), list):
        raise MalformedInput('expected an object with a "vertices" list')
    rows = obj["vertices"]
    if not rows or not all(isinstance(r, list) and r for r in rows):
        raise MalformedInput("vertices must be a nonempty list of nonempty coordinate lists")
    if len({len(r) for r in rows}) != 1:
        raise MalformedInput("all vertices must have the same length")
    try:
        pts = [tuple(parse_rational(x) for x in r) for r in rows]
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc
    return make_polytope(pts)


def polytope_to_json(P: RationalPolytope) -> dict:
    return {"vertices": [[format_rational(x) for x in v] for v in P.vertices]}


def load_polytope(path) -> RationalPolytope:
    try:
        obj = json.loads(Path(path).read_text())
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: invalid JSON ({exc.msg})") from exc
    return polytope_from_json(obj)
