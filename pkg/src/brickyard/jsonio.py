"""
JSON wire formats.

Arc:       {"color": "green"|"red", "bottom": int, "top": int,
            "sides": ["L"|"R", ...]}        (interior nodes, increasing)
Diagram:   {"nodes": int, "arcs": [Arc, ...]}
Permutation: [int, ...]
StringBrick: {"n": int, "support": [p, q], "actions": ["down"|"up", ...]}
Representation: {"algebra": "RA"|"PiD4", "n": int?, "char": p,
            "dims": {vertex: int}, "maps": {arrow: [[int, ...], ...]}}
SemibrickPair: {"universe": "RA"|"PiD4", "n": int?, "char": int?,
            "D": [brick, ...], "U": [brick, ...]}
"""
from __future__ import annotations

from typing import Any, Optional

import numpy as np

from .arcs import Arc
from .pairs import SemibrickPair
from .quiver import DEFAULT_CHAR, Representation, d4_presentation, ra_presentation
from .strings import StringBrick
from .universe import BrickUniverse, get_arc_universe, get_matrix_universe


class FormatError(ValueError):
    pass


def arc_to_json(arc: Arc) -> dict:
    return {
        "color": arc.color,
        "bottom": arc.bottom,
        "top": arc.top,
        "sides": list(arc.sides),
    }


def arc_from_json(data: Any) -> Arc:
    try:
        return Arc(data["color"], int(data["bottom"]), int(data["top"]), tuple(data["sides"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad arc: {exc}") from exc


def diagram_to_json(nodes: int, arcs) -> dict:
    return {"nodes": nodes, "arcs": [arc_to_json(a) for a in sorted(arcs)]}


def diagram_from_json(data: Any) -> tuple[int, list[Arc]]:
    try:
        nodes = int(data["nodes"])
        arcs = [arc_from_json(a) for a in data["arcs"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad diagram: {exc}") from exc
    for a in arcs:
        if a.top > nodes:
            raise FormatError(f"arc {a} does not fit on {nodes} nodes")
    return nodes, arcs


def permutation_from_json(data: Any) -> tuple[int, ...]:
    if not isinstance(data, (list, tuple)):
        raise FormatError("a permutation is a JSON array of integers")
    return tuple(int(x) for x in data)


def brick_to_json(brick: StringBrick) -> dict:
    return {"n": brick.n, "support": list(brick.support), "actions": list(brick.actions)}


def brick_from_json(data: Any) -> StringBrick:
    try:
        return StringBrick(int(data["n"]), tuple(data["support"]), tuple(data["actions"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad string brick: {exc}") from exc


def rep_to_json(rep: Representation) -> dict:
    out: dict = {
        "algebra": "RA" if rep.algebra.name.startswith("RA") else "PiD4",
        "char": rep.p,
        "dims": {str(v): rep.dim_at(v) for v in rep.algebra.vertices},
        "maps": {name: mat.tolist() for name, mat in rep.maps.items() if mat.size},
    }
    if out["algebra"] == "RA":
        out["n"] = len(rep.algebra.vertices)
    return out


def rep_from_json(data: Any, char: Optional[int] = None) -> Representation:
    try:
        kind = data["algebra"]
        p = int(data.get("char", char or DEFAULT_CHAR))
        if kind == "RA":
            algebra = ra_presentation(int(data["n"]))
        elif kind == "PiD4":
            algebra = d4_presentation()
        else:
            raise FormatError(f"unknown algebra {kind!r}")
        dims = [int(data["dims"].get(str(v), 0)) for v in algebra.vertices]
        maps = {name: np.array(mat) for name, mat in data.get("maps", {}).items()}
        return Representation(algebra, p, dims, maps)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad representation: {exc}") from exc


def pair_to_json(pair: SemibrickPair) -> dict:
    u = pair.universe
    out: dict = {"universe": u.label}
    if u.label == "RA":
        out["n"] = u.rank
        out["D"] = [brick_to_json(u.string_form(x)) for x in pair.D]
        out["U"] = [brick_to_json(u.string_form(x)) for x in pair.U]
    else:
        out["char"] = u.char
        out["D"] = [rep_to_json(x) for x in pair.D]
        out["U"] = [rep_to_json(x) for x in pair.U]
    return out


def pair_from_json(data: Any, char: int = DEFAULT_CHAR) -> SemibrickPair:
    try:
        kind = data["universe"]
        if kind == "RA":
            n = int(data["n"])
            universe: BrickUniverse = get_arc_universe(n, char)
            D = [brick_from_json(b) for b in data.get("D", [])]
            U = [brick_from_json(b) for b in data.get("U", [])]
            for b in D + U:
                if b.n != n:
                    raise FormatError(f"brick {b} does not live in RA_{n}")
        elif kind == "PiD4":
            p = int(data.get("char", char))
            universe = get_matrix_universe("PiD4", char=p)
            D = [universe.intern(rep_from_json(b, p)) for b in data.get("D", [])]
            U = [universe.intern(rep_from_json(b, p)) for b in data.get("U", [])]
        else:
            raise FormatError(f"unknown universe {kind!r}")
        return SemibrickPair(universe, D, U)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad semibrick pair: {exc}") from exc
