"""JSON file formats: point sets and ray families.

Rationals cross the boundary as 'p/q' strings, never as floats; emission is
canonical (sorted keys, fixed separators) so normalized round trips are
byte stable.
"""

from __future__ import annotations

import json

from .geom import Color, Direction, Point, PointSet, format_rational, parse_rational
from .rays import Ray, RayFamily, Regime

POINTSET_SCHEMA = "rayconf.pointset/1"
RAYFAMILY_SCHEMA = "rayconf.rayfamily/1"


def pointset_to_obj(points: PointSet) -> dict:
    return {
        "schema": POINTSET_SCHEMA,
        "points": [
            {
                "x": format_rational(p.x),
                "y": format_rational(p.y),
                "color": p.color.value,
            }
            for p in points
        ],
    }


def pointset_from_obj(obj: dict) -> PointSet:
    if obj.get("schema") != POINTSET_SCHEMA:
        raise ValueError(f"expected schema {POINTSET_SCHEMA}")
    return PointSet(
        Point(parse_rational(e["x"]), parse_rational(e["y"]), Color(e["color"]))
        for e in obj["points"]
    )


def rayfamily_to_obj(family: RayFamily) -> dict:
    return {
        "schema": RAYFAMILY_SCHEMA,
        "regime": family.regime.value,
        "rays": [
            {
                "apex": {"x": format_rational(r.apex.x), "y": format_rational(r.apex.y)},
                "dir": {"x": format_rational(r.direction.dx), "y": format_rational(r.direction.dy)},
                "color": r.color.value,
            }
            for r in family.rays
        ],
    }


def rayfamily_from_obj(obj: dict) -> RayFamily:
    if obj.get("schema") != RAYFAMILY_SCHEMA:
        raise ValueError(f"expected schema {RAYFAMILY_SCHEMA}")
    rays = []
    for e in obj["rays"]:
        apex = Point(
            parse_rational(e["apex"]["x"]),
            parse_rational(e["apex"]["y"]),
            Color(e["color"]),
        )
        rays.append(
            Ray(apex, Direction(parse_rational(e["dir"]["x"]), parse_rational(e["dir"]["y"])))
        )
    return RayFamily(rays, Regime(obj["regime"]))


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def write_json(path: str, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(obj))


def read_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
