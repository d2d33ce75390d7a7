"""Feasibility decision for collinear point sets.

Any realization from collinear points can be perturbed so that every ray is
perpendicular to the carrier line, one of two opposite directions per point.
Scanning the points along the line, the letters realized so far always form
a contiguous cyclic arc of the target word, extended on one end per point.
That gives a quadratic reachability problem over (start, length) arcs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .configs import Configuration
from .geom import Direction, PointSet, PositionClass, direction_between, dot_point, position_class
from .rays import Ray, RayFamily, Regime, configuration_at_infinity

_AFTER = 1   # ray toward the left normal of the carrier direction
_BEFORE = 0  # opposite ray


@dataclass(frozen=True)
class LineDecision:
    feasible: bool
    witness: Optional[RayFamily]
    nodes_reached: int


def _carrier(points: PointSet) -> Direction:
    if position_class(points) is not PositionClass.COLLINEAR:
        raise ValueError("decide_line requires a collinear point set")
    d = direction_between(points[0], points[1])
    dx, dy = d.axis_key()
    return Direction(dx, dy)


def _sorted_along(points: PointSet, d: Direction) -> list:
    return sorted(points, key=lambda p: dot_point(p, d))


def decide_line(points: PointSet, config: Configuration) -> LineDecision:
    """Decide feasibility from collinear points, recovering a witness.

    The state (start, length) is the cyclic slice of the word realized by the
    points scanned so far; the next point extends it before the start (ray
    against the normal) or after the end (ray along the normal).  The first
    predecessor found is kept, scanning before-edges first.
    """
    points.require_balanced()
    if len(points) != len(config):
        raise ValueError("point count must equal the configuration length")
    d = _carrier(points)
    ordered = _sorted_along(points, d)
    word = config.word
    m = len(word)

    colors = [p.color.letter for p in ordered]
    preds: dict = {}
    frontier = set()
    for start in range(m):
        if word[start] == colors[0]:
            state = (start, 1)
            preds.setdefault(state, (None, _AFTER))
            frontier.add(state)
    nodes = len(preds)
    for level in range(1, m):
        ch = colors[level]
        nxt = set()
        for start, length in sorted(frontier):
            before = ((start - 1) % m, length + 1)
            if word[before[0]] == ch:
                if before not in preds:
                    preds[before] = ((start, length), _BEFORE)
                nxt.add(before)
            after = (start, length + 1)
            if word[(start + length) % m] == ch:
                if after not in preds:
                    preds[after] = ((start, length), _AFTER)
                nxt.add(after)
        frontier = nxt
        nodes += len(nxt)
        if not frontier:
            return LineDecision(False, None, nodes)

    final = min(frontier)
    ups = []
    state = final
    while state is not None:
        prev, edge = preds[state]
        ups.append(edge == _AFTER)
        state = prev
    ups.reverse()

    normal = d.left_normal()
    rays = [
        Ray(p, normal if up else -normal) for p, up in zip(ordered, ups)
    ]
    witness = RayFamily(rays, Regime.PAIRWISE_DISJOINT)
    return LineDecision(True, witness, nodes)


def line_oracle(points: PointSet) -> set:
    """Exact feasible set for collinear points by exhausting 2^(2n) rays.

    Every point shoots one of the two perpendicular rays; each family is
    materialized and read through configuration_at_infinity.
    """
    points.require_balanced()
    if len(points) > 20:
        raise ValueError("line_oracle supports at most 20 points")
    d = _carrier(points)
    ordered = _sorted_along(points, d)
    normal = d.left_normal()
    up = [Ray(p, normal) for p in ordered]
    down = [Ray(p, -normal) for p in ordered]
    words = set()
    for mask in range(1 << len(ordered)):
        rays = [up[i] if (mask >> i) & 1 else down[i] for i in range(len(ordered))]
        words.add(configuration_at_infinity(RayFamily(rays)))
    return words
