"""Colored rays, pairwise classification, and the color word at infinity."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .configs import Configuration, canonicalize
from .geom import (
    Color,
    Direction,
    Point,
    PointSet,
    ccw_key,
    cross,
    dot,
    dot_point,
)


@dataclass(frozen=True)
class Ray:
    apex: Point
    direction: Direction

    @property
    def color(self) -> Color:
        return self.apex.color

    def point_at(self, t: Fraction) -> tuple[Fraction, Fraction]:
        return (self.apex.x + t * self.direction.dx, self.apex.y + t * self.direction.dy)


class PairClass(enum.Enum):
    DISJOINT = "disjoint"
    APEX_TOUCH = "apex-touch"
    OVERLAP = "overlap"
    CROSS = "cross"
    CONTAINMENT = "containment"


NONCROSSING_CLASSES = frozenset(
    {PairClass.DISJOINT, PairClass.APEX_TOUCH, PairClass.OVERLAP, PairClass.CONTAINMENT}
)


def classify_vec(a1, d1, a2, d2) -> PairClass:
    """Tuple-core ray classification; works on int or Fraction coordinates.

    All decisions are sign tests, so no divisions are ever performed.
    """
    c = d1[0] * d2[1] - d1[1] * d2[0]
    wx = a2[0] - a1[0]
    wy = a2[1] - a1[1]
    if c == 0:
        offset = d1[0] * wy - d1[1] * wx
        if offset != 0:
            return PairClass.DISJOINT
        # collinear supporting lines; t_sign = sign of a2's parameter on h1
        t_sign = d1[0] * wx + d1[1] * wy
        if d1[0] * d2[0] + d1[1] * d2[1] > 0:
            return PairClass.CONTAINMENT
        if t_sign > 0:
            return PairClass.OVERLAP
        if t_sign == 0:
            return PairClass.APEX_TOUCH
        return PairClass.DISJOINT
    # distinct crossing lines: h1.apex + t1 d1 = h2.apex + t2 d2 with
    # t1 = num1 / c and t2 = num2 / c; only signs are needed
    num1 = wx * d2[1] - wy * d2[0]
    num2 = wx * d1[1] - wy * d1[0]
    s1 = (num1 > 0) - (num1 < 0)
    s2 = (num2 > 0) - (num2 < 0)
    sc = 1 if c > 0 else -1
    if s1 * sc < 0 or s2 * sc < 0:
        return PairClass.DISJOINT
    if s1 == 0 or s2 == 0:
        return PairClass.APEX_TOUCH
    return PairClass.CROSS


def classify_pair(h1: Ray, h2: Ray) -> PairClass:
    """Exact classification of the intersection of two rays.

    DISJOINT: empty intersection.  APEX_TOUCH: exactly one point which is an
    apex.  CROSS: exactly one point interior to both rays.  CONTAINMENT: one
    ray a subset of the other.  OVERLAP: infinite intersection, neither ray
    containing the other.
    """
    if h1 == h2:
        raise ValueError("identical rays cannot be classified")
    return classify_vec(
        h1.apex.xy, (h1.direction.dx, h1.direction.dy),
        h2.apex.xy, (h2.direction.dx, h2.direction.dy),
    )


class Regime(enum.Enum):
    PAIRWISE_DISJOINT = "pairwise-disjoint"
    NONCROSSING_CANONICAL = "noncrossing-canonical"
    FULL_CROSSING = "full-crossing"
    PROPER = "proper"
    UNRESTRICTED = "unrestricted"


@dataclass(frozen=True)
class RayFamily:
    rays: tuple[Ray, ...]
    regime: Regime = Regime.UNRESTRICTED

    def __init__(self, rays: Iterable[Ray], regime: Regime = Regime.UNRESTRICTED):
        object.__setattr__(self, "rays", tuple(rays))
        object.__setattr__(self, "regime", regime)

    def __len__(self):
        return len(self.rays)

    def __iter__(self):
        return iter(self.rays)

    def apexes(self) -> PointSet:
        return PointSet(r.apex for r in self.rays)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    regime: Regime
    violations: tuple = ()

    def __bool__(self):
        return self.ok


def _regime_ok(kind: PairClass, regime: Regime) -> bool:
    if regime is Regime.PAIRWISE_DISJOINT:
        return kind is PairClass.DISJOINT
    if regime is Regime.NONCROSSING_CANONICAL:
        return kind in NONCROSSING_CLASSES
    if regime is Regime.FULL_CROSSING:
        # every pair must meet in exactly one point
        return kind in (PairClass.CROSS, PairClass.APEX_TOUCH)
    if regime is Regime.PROPER:
        return kind is not PairClass.CONTAINMENT
    return True


def validate_family(family: RayFamily, points: Optional[PointSet] = None) -> ValidationReport:
    """Check the family's declared pairwise regime; optionally check apexes.

    For NONCROSSING_CANONICAL with an associated point set, every direction
    must furthermore lie in the canonical difference set of the points.
    """
    if points is not None:
        apex_multiset = sorted((r.apex.x, r.apex.y, r.apex.color.value) for r in family.rays)
        point_multiset = sorted((p.x, p.y, p.color.value) for p in points)
        if apex_multiset != point_multiset:
            raise ValueError("ray family apexes do not match the point set")
    violations = []
    rays = family.rays
    for i in range(len(rays)):
        for j in range(i + 1, len(rays)):
            kind = classify_pair(rays[i], rays[j])
            if not _regime_ok(kind, family.regime):
                violations.append((i, j, kind))
    if family.regime is Regime.NONCROSSING_CANONICAL and points is not None:
        allowed = {
            Direction(q.x - p.x, q.y - p.y)
            for p in points
            for q in points
            if p.xy != q.xy
        }
        for i, r in enumerate(rays):
            if r.direction not in allowed:
                violations.append((i, i, "direction-not-canonical"))
    return ValidationReport(ok=not violations, regime=family.regime, violations=tuple(violations))


def _clockwise_sorted(rays: Iterable[Ray]) -> list[Ray]:
    """Rays in the clockwise reading order used at infinity.

    Primary key: direction angle, clockwise.  Inside a parallel class the
    order is by strictly decreasing apex . n with n the left normal; rays on
    one common line tie-break by increasing apex . d.  This is the exact
    limit of reading a huge circle after rotating every ray counterclockwise
    by a vanishing angle.
    """
    decorated = []
    for ray in rays:
        d = ray.direction
        n = d.left_normal()
        offset = dot_point(ray.apex, n)
        along = dot_point(ray.apex, d)
        decorated.append(((ccw_key(d), offset, -along), ray))
    decorated.sort(key=lambda item: item[0])
    ordered = [ray for _key, ray in reversed(decorated)]
    return ordered


def configuration_at_infinity(family: RayFamily) -> Configuration:
    """The canonical cyclic color word induced by the family at infinity."""
    rays = list(family.rays)
    if len(set((r.apex.xy, r.direction) for r in rays)) != len(rays):
        raise ValueError("two identical rays have no well-defined reading order")
    word = "".join(r.color.letter for r in _clockwise_sorted(rays))
    return canonicalize(word)


def crossing_count(family: RayFamily) -> int:
    rays = family.rays
    return sum(
        1
        for i in range(len(rays))
        for j in range(i + 1, len(rays))
        if classify_pair(rays[i], rays[j]) is PairClass.CROSS
    )


def inverse_family(family: RayFamily, regime: Regime = Regime.UNRESTRICTED) -> RayFamily:
    """Same apexes, opposite directions."""
    return RayFamily((Ray(r.apex, -r.direction) for r in family.rays), regime)
