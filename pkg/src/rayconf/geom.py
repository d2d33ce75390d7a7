"""Exact rational planar primitives and point-set position predicates.

Every coordinate is a ``fractions.Fraction``; every predicate is a sign test
on exact integer arithmetic.  Nothing in this module ever rounds.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not an exact rational: {value!r}")


def format_rational(q: Scalar) -> str:
    """Serialize a rational as 'p/q', omitting the denominator when it is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the 'p/q' form emitted by :func:`format_rational`."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


class Color(enum.Enum):
    RED = "R"
    BLUE = "B"

    @property
    def letter(self) -> str:
        return "r" if self is Color.RED else "b"

    @staticmethod
    def from_letter(ch: str) -> "Color":
        ch = ch.lower()
        if ch == "r":
            return Color.RED
        if ch == "b":
            return Color.BLUE
        raise ValueError(f"unknown color letter {ch!r}")


RED = Color.RED
BLUE = Color.BLUE


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction
    color: Color

    def __post_init__(self):
        object.__setattr__(self, "x", to_fraction(self.x))
        object.__setattr__(self, "y", to_fraction(self.y))
        if not isinstance(self.color, Color):
            raise TypeError("color must be a Color")

    @property
    def xy(self) -> tuple[Fraction, Fraction]:
        return (self.x, self.y)

    def translate(self, dx: Scalar, dy: Scalar) -> "Point":
        return Point(self.x + dx, self.y + dy, self.color)

    def __repr__(self):
        return f"Point({format_rational(self.x)}, {format_rational(self.y)}, {self.color.value})"


@dataclass(frozen=True)
class Direction:
    """A ray direction, stored as the unique coprime integer pair.

    Two Directions compare equal exactly when one is a positive scalar
    multiple of the other.  ``axis_key`` identifies the parallel class
    (sign of the first nonzero component fixed positive).
    """

    dx: int
    dy: int

    def __post_init__(self):
        dx, dy = self.dx, self.dy
        if isinstance(dx, Fraction) or isinstance(dy, Fraction):
            fx, fy = Fraction(dx), Fraction(dy)
            scale = fx.denominator * fy.denominator // math.gcd(fx.denominator, fy.denominator)
            dx, dy = int(fx * scale), int(fy * scale)
        if dx == 0 and dy == 0:
            raise ValueError("zero direction")
        g = math.gcd(dx, dy)
        object.__setattr__(self, "dx", dx // g)
        object.__setattr__(self, "dy", dy // g)

    def __neg__(self) -> "Direction":
        return Direction(-self.dx, -self.dy)

    def axis_key(self) -> tuple[int, int]:
        """Canonical key of the parallel class (direction modulo sign)."""
        dx, dy = self.dx, self.dy
        if dx < 0 or (dx == 0 and dy < 0):
            dx, dy = -dx, -dy
        return (dx, dy)

    def left_normal(self) -> "Direction":
        """The counterclockwise (left) normal."""
        return Direction(-self.dy, self.dx)

    def __repr__(self):
        return f"Direction({self.dx}, {self.dy})"


def direction_between(src: Point, dst: Point) -> Direction:
    return Direction(dst.x - src.x, dst.y - src.y)


def cross(a: Direction, b: Direction) -> int:
    return a.dx * b.dy - a.dy * b.dx


def dot(a: Direction, b: Direction) -> int:
    return a.dx * b.dx + a.dy * b.dy


def dot_point(p: Point, d: Direction) -> Fraction:
    return p.x * d.dx + p.y * d.dy


class Orientation(enum.IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    """Sign of the exact cross product of (b - a, c - a)."""
    det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if det > 0:
        return Orientation.CCW
    if det < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def side_of_line(anchor: Point, d: Direction, p: Point) -> int:
    """+1 if p is strictly left of the directed line, -1 right, 0 on it."""
    det = d.dx * (p.y - anchor.y) - d.dy * (p.x - anchor.x)
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


class PositionClass(enum.Enum):
    STRONG_GENERAL = "strong-general"
    GENERAL = "general"
    COLLINEAR = "collinear"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class PointSet:
    points: tuple[Point, ...]

    def __init__(self, points: Iterable[Point]):
        pts = tuple(points)
        if len(set((p.x, p.y) for p in pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    @property
    def reds(self) -> tuple[Point, ...]:
        return tuple(p for p in self.points if p.color is Color.RED)

    @property
    def blues(self) -> tuple[Point, ...]:
        return tuple(p for p in self.points if p.color is Color.BLUE)

    def is_balanced(self) -> bool:
        return len(self.reds) == len(self.blues)

    def require_balanced(self):
        if not self.is_balanced():
            raise ValueError(
                f"point set is not balanced: {len(self.reds)} red vs {len(self.blues)} blue"
            )


def position_class(s: PointSet) -> PositionClass:
    """Classify a point set as collinear / strong general / general / degenerate.

    Strong general position forbids three collinear points and any two
    distinct point pairs spanning parallel lines.  Collinearity of the whole
    set takes precedence, so 2-point sets classify as collinear.
    """
    pts = s.points
    n = len(pts)
    if n < 2:
        raise ValueError("position_class needs at least 2 points")
    a, b = pts[0], pts[1]
    if all(orientation(a, b, p) is Orientation.COLLINEAR for p in pts[2:]):
        return PositionClass.COLLINEAR
    three_collinear = False
    for i in range(n):
        if three_collinear:
            break
        for j in range(i + 1, n):
            if any(
                orientation(pts[i], pts[j], pts[k]) is Orientation.COLLINEAR
                for k in range(j + 1, n)
            ):
                three_collinear = True
                break
    if three_collinear:
        return PositionClass.DEGENERATE
    axes = {}
    parallel_pair = False
    for i in range(n):
        for j in range(i + 1, n):
            key = direction_between(pts[i], pts[j]).axis_key()
            if key in axes:
                parallel_pair = True
            axes[key] = (i, j)
    return PositionClass.GENERAL if parallel_pair else PositionClass.STRONG_GENERAL


@dataclass(frozen=True)
class HalfplaneCounts:
    left: dict
    right: dict
    on: dict


def halfplane_counts(s: PointSet, line: tuple[Point, Direction]) -> HalfplaneCounts:
    """Exact per-color classification of points against a directed line."""
    anchor, d = line
    left = {Color.RED: 0, Color.BLUE: 0}
    right = {Color.RED: 0, Color.BLUE: 0}
    on = {Color.RED: 0, Color.BLUE: 0}
    for p in s:
        side = side_of_line(anchor, d, p)
        bucket = left if side > 0 else right if side < 0 else on
        bucket[p.color] += 1
    return HalfplaneCounts(left=left, right=right, on=on)


# -- angular order helpers ---------------------------------------------------
#
# Directions are compared counterclockwise starting at east=(1,0).  The key
# is (half, axis flag, -cot), exact because cot is a Fraction; it gives the
# same order as atan2 without ever leaving Q.

def ccw_key(d: Direction) -> tuple:
    if d.dy == 0:
        return (0 if d.dx > 0 else 1, 0, Fraction(0))
    # cot is strictly decreasing on both open half-turns, so -dx/dy sorts
    # each half by ascending angle
    return (0 if d.dy > 0 else 1, 1, Fraction(-d.dx, d.dy))


def cw_in_closed_wedge(frm: Direction, d: Direction, to: Direction,
                       include_from: bool = True, include_to: bool = True) -> bool:
    """Is d inside the clockwise sweep from frm to to?

    The sweep is the set of directions passed when rotating ``frm`` clockwise
    until reaching ``to`` (positive sweep; equal endpoints mean an empty open
    sweep).  Endpoint membership is controlled by the include flags.
    """
    return v_cw_wedge(
        (frm.dx, frm.dy), (d.dx, d.dy), (to.dx, to.dy), include_from, include_to
    )


def cw_angle_less_than_pi(u: Direction, v: Direction) -> bool:
    """True when the clockwise angle from u to v is strictly below pi.

    Angle zero (equal directions) counts as below pi.
    """
    c = cross(u, v)
    if c < 0:
        return True
    if c == 0:
        return dot(u, v) > 0
    return False


# -- exact helpers on raw coordinate pairs -----------------------------------
#
# These accept plain (x, y) tuples whose entries are ints or Fractions; every
# test is a sign of a polynomial, so both types stay exact.  The hot integer
# paths in the deciders go through these.

def vsub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def vcross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def vdot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def v_on_ray(apex, d, p) -> bool:
    w = vsub(p, apex)
    return vcross(d, w) == 0 and vdot(d, w) >= 0


def v_cw_wedge(frm, d, to, include_from: bool, include_to: bool) -> bool:
    """Tuple-core of :func:`cw_in_closed_wedge`."""
    if vcross(frm, d) == 0 and vdot(frm, d) > 0:
        return include_from
    if vcross(to, d) == 0 and vdot(to, d) > 0:
        return include_to
    cab = vcross(to, frm)
    if cab == 0 and vdot(to, frm) > 0:
        return False
    cad = vcross(to, d)
    cdb = vcross(d, frm)
    if cab > 0:
        return cad > 0 and cdb > 0
    if cab < 0:
        return cad > 0 or cdb > 0
    return cad > 0


def convex_position(points: Sequence[Point]) -> bool:
    """Every point a vertex of the convex hull, no three collinear."""
    pts = list(points)
    n = len(pts)
    if n < 3:
        return True
    hull = convex_hull(pts)
    return len(hull) == n


def convex_hull(points: Sequence[Point]) -> list[Point]:
    """Strict convex hull (no collinear vertices kept), counterclockwise."""
    pts = sorted(set(points), key=lambda p: (p.x, p.y))
    if len(pts) <= 2:
        return pts

    def build(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orientation(out[-2], out[-1], p) is not Orientation.CCW:
                out.pop()
            out.append(p)
        return out

    lower = build(pts)
    upper = build(reversed(pts))
    return lower[:-1] + upper[:-1]
