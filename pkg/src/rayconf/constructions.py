"""Named point-set constructions and their constructive realizers.

Irrational constructions (regular gons, rings) are approximated by rationals
at a configurable number of decimal digits and re-validated exactly; every
proof-level "infinitesimal" becomes an explicit rational magnitude found by
halving until exact validation passes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

import mpmath

from .configs import BlockTuple, Configuration, canonicalize, to_blocks
from .geom import (
    BLUE,
    Color,
    Direction,
    Point,
    PointSet,
    PositionClass,
    RED,
    convex_position,
    convex_hull,
    orientation,
    Orientation,
    position_class,
    vcross,
    vsub,
)
from .rays import (
    Ray,
    RayFamily,
    Regime,
    configuration_at_infinity,
    inverse_family,
    validate_family,
)


class ConstructionError(RuntimeError):
    """A construction failed to certify its own postcondition."""


# -- universal point set and realizers -----------------------------------------

def universal_point_set(n: int, perturb: bool = False) -> PointSet:
    """Reds (i, 1) for i in [n]; blues (j/n, 0) for j in [n].

    Every configuration of size 2n is feasible from this set.  With
    ``perturb`` the set is nudged into strong general position by a rational
    jitter below 1/n^3, re-validated exactly.
    """
    if n < 1:
        raise ValueError("n must be positive")
    reds = [Point(i, 1, RED) for i in range(1, n + 1)]
    blues = [Point(Fraction(j, n), 0, BLUE) for j in range(1, n + 1)]
    points = PointSet(reds + blues)
    if not perturb:
        return points
    return perturb_to_strong_general(points, Fraction(1, 4 * n ** 3))


def perturb_to_strong_general(points: PointSet, magnitude: Fraction) -> PointSet:
    """Deterministic rational jitter below ``magnitude``, verified exactly."""
    base = list(points)
    mu = magnitude / (4 * len(base) ** 3)
    for _ in range(64):
        jittered = [
            Point(
                p.x + mu * (m + 1),
                p.y + mu * (m + 1) ** 2 + mu * mu * (m + 1) ** 3,
                p.color,
            )
            for m, p in enumerate(base)
        ]
        try:
            cand = PointSet(jittered)
        except ValueError:
            mu /= 2
            continue
        if position_class(cand) is PositionClass.STRONG_GENERAL:
            return cand
        mu /= 2
    raise ConstructionError("could not reach strong general position")


def _block_prefix_dirs(blocks: BlockTuple, n: int) -> list[int]:
    """t_j = sum of red block sizes whose blue prefix is still short of j."""
    reds = blocks.blocks[0::2]
    blues = blocks.blocks[1::2]
    ts = []
    for j in range(1, n + 1):
        s = 0
        acc = 0
        while s + 1 <= len(blues) and acc + blues[s] < j:
            acc += blues[s]
            s += 1
        ts.append(sum(reds[: s + 1]))
    return ts


def _line_intersection(p: tuple, d: tuple, q: tuple, e: tuple) -> tuple:
    den = d[0] * e[1] - d[1] * e[0]
    if den == 0:
        raise ConstructionError("parallel support lines")
    t = Fraction((q[0] - p[0]) * e[1] - (q[1] - p[1]) * e[0], den)
    return (p[0] + t * d[0], p[1] + t * d[1])


def universal_realizer(n: int, config: Configuration) -> RayFamily:
    """Pairwise-disjoint rays from the universal set reading as ``config``.

    Blue rays point up-right with slopes grouped by the red block prefix
    sums, tilted pairwise-nonparallel; red rays aim away from the successive
    intersection points of consecutive blue support lines, which slots each
    red block between two blue groups at infinity.
    """
    if config.n != n:
        raise ValueError("configuration size does not match n")
    points = universal_point_set(n)
    reds = points.points[:n]
    blues = points.points[n:]
    blocks = to_blocks(config)
    ts = _block_prefix_dirs(blocks, n)
    eta = Fraction(1, 8 * n ** 3)
    for _ in range(64):
        blue_dirs = [
            Direction(Fraction(ts[j]) + (j + 1) * eta, 1) for j in range(n)
        ]
        anchors = []
        y0 = -Fraction(blues[0].x) / (Fraction(ts[0]) + eta)
        anchors.append((Fraction(0), y0))
        for j in range(1, n):
            anchors.append(
                _line_intersection(
                    blues[j - 1].xy, (Fraction(ts[j - 1]) + j * eta, Fraction(1)),
                    blues[j].xy, (Fraction(ts[j]) + (j + 1) * eta, Fraction(1)),
                )
            )
        rays = [None] * (2 * n)
        for j in range(n, 0, -1):
            lo = ts[j - 2] if j >= 2 else 0
            hi = ts[j - 1]
            for i in range(lo + 1, hi + 1):
                if rays[i - 1] is None:
                    a = anchors[j - 1]
                    rays[i - 1] = Ray(
                        reds[i - 1],
                        Direction(reds[i - 1].x - a[0], reds[i - 1].y - a[1]),
                    )
        for j in range(n):
            rays[n + j] = Ray(blues[j], blue_dirs[j])
        if any(r is None for r in rays):
            raise ConstructionError("red block assignment left a gap")
        family = RayFamily(rays, Regime.PAIRWISE_DISJOINT)
        if validate_family(family).ok and configuration_at_infinity(family) == config:
            return family
        eta /= 2
    raise ConstructionError("universal realizer failed to certify")


def fc_universal_realizer(n: int, config: Configuration) -> RayFamily:
    """Full-crossing realizer: the inverses of the disjoint realizer.

    The support lines of the disjoint family pairwise meet strictly below the
    blue row, where every inverse ray travels, so all pairs cross.
    """
    disjoint = universal_realizer(n, config)
    family = inverse_family(disjoint, Regime.FULL_CROSSING)
    if not validate_family(family).ok:
        raise ConstructionError("inverse family is not full-crossing")
    if configuration_at_infinity(family) != config:
        raise ConstructionError("inverse family reads differently")
    return family


def opposite_horizontal_realizer(points: PointSet) -> RayFamily:
    """A pairwise-disjoint family realizing the two-block word r^n b^n.

    All red rays share one direction and all blue rays its opposite; the
    direction is chosen outside every pairwise difference so that no two
    rays are collinear.
    """
    points.require_balanced()
    n = len(points) // 2
    forbidden = {
        Direction(q.x - p.x, q.y - p.y).axis_key()
        for p in points
        for q in points
        if p.xy != q.xy
    }
    d = None
    k = 0
    while d is None:
        k += 1
        cand = Direction(1, k)
        if cand.axis_key() not in forbidden:
            d = cand
    rays = [
        Ray(p, d if p.color is RED else -d) for p in points
    ]
    family = RayFamily(rays, Regime.PAIRWISE_DISJOINT)
    if not validate_family(family).ok:
        raise ConstructionError("opposite-horizontal family not disjoint")
    target = canonicalize("r" * n + "b" * n)
    if configuration_at_infinity(family) != target:
        raise ConstructionError("opposite-horizontal family reads differently")
    return family


# -- alternation-limit construction --------------------------------------------

def clustered_set(k: int, perturb: bool = True) -> PointSet:
    """n = k^2 reds in a short row above k tight blue clusters on the axis.

    Rays from this set realize only O(sqrt(n)) color alternations.  The
    perturbed variant is in strong general position.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = k * k
    blues = [
        Point(2 * (i - 1) + Fraction(j, n * n), 0, BLUE)
        for i in range(1, k + 1)
        for j in range(1, k + 1)
    ]
    reds = [Point(Fraction(j, n), 1, RED) for j in range(1, n + 1)]
    points = PointSet(reds + blues)
    if not perturb:
        return points
    return perturb_to_strong_general(points, Fraction(1, 4 * n ** 4))


# -- regular-gon constructions ---------------------------------------------------

def _approx_unit_angle(num: int, den: int, precision: int) -> tuple[Fraction, Fraction]:
    """Rational cos/sin of 2*pi*num/den with ``precision`` decimal digits."""
    with mpmath.workdps(precision + 15):
        theta = 2 * mpmath.pi * mpmath.mpf(num) / den
        scale = mpmath.mpf(10) ** precision
        c = Fraction(int(mpmath.nint(mpmath.cos(theta) * scale)), 10 ** precision)
        s = Fraction(int(mpmath.nint(mpmath.sin(theta) * scale)), 10 ** precision)
    return c, s


def scaled_roots_of_unity(count: int, lam: Fraction, precision: int,
                          color: Color) -> list[Point]:
    lam = Fraction(lam)
    out = []
    for k in range(count):
        c, s = _approx_unit_angle(k, count, precision)
        out.append(Point(lam * c, lam * s, color))
    return out


def alternating_gon(n: int, precision: int = 30) -> PointSet:
    """Vertices of a regular 2n-gon, colors alternating, rational approx."""
    if n < 2:
        raise ValueError("n must be at least 2")
    pts = []
    for k in range(2 * n):
        c, s = _approx_unit_angle(k, 2 * n, precision)
        pts.append(Point(c, s, RED if k % 2 == 0 else BLUE))
    points = PointSet(pts)
    if not convex_position(points.points):
        raise ConstructionError(
            "precision too low to certify convex position of the gon"
        )
    return points


@dataclass(frozen=True)
class RingPair:
    inner: PointSet
    outer: PointSet
    lam: Fraction
    precision: int

    def combined(self) -> PointSet:
        return PointSet(self.inner.points + self.outer.points)


def ring_pair(n: int, lam, precision: int = 30) -> RingPair:
    """Red unit ring K_1(n) inside a blue ring K_lam(n), lam > 1."""
    lam = Fraction(lam)
    if lam <= 1:
        raise ValueError("lam must exceed 1")
    inner = PointSet(scaled_roots_of_unity(n, Fraction(1), precision, RED))
    outer = PointSet(scaled_roots_of_unity(n, lam, precision, BLUE))
    for ring in (inner, outer):
        if not convex_position(ring.points):
            raise ConstructionError("precision too low to certify the rings")
    max_inner = max(p.x * p.x + p.y * p.y for p in inner)
    min_outer = min(p.x * p.x + p.y * p.y for p in outer)
    if not max_inner < min_outer:
        raise ConstructionError("rings are not radially separated")
    return RingPair(inner=inner, outer=outer, lam=lam, precision=precision)


# -- threshold formulas -----------------------------------------------------------

def _up(x, precision: int) -> Fraction:
    q = 10 ** precision
    return Fraction(int(mpmath.ceil(x * q)) + 1, q)


def _down(x, precision: int) -> Fraction:
    q = 10 ** precision
    return Fraction(int(mpmath.floor(x * q)) - 1, q)


def f_bound(n: int, l: int, precision: int = 30) -> Fraction:
    """1 / sin(pi (ceil(n/l) - 2) / (4 n)), rounded up (conservative)."""
    if l < 3:
        raise ValueError("l must be at least 3")
    m = ceil(Fraction(n, l)) - 2
    if m <= 0 or m >= 4 * n:
        raise ValueError("no certified window for these parameters")
    with mpmath.workdps(precision + 20):
        value = 1 / mpmath.sin(mpmath.pi * m / (4 * n))
        return _up(value, precision)


def g_bound(n: int, k: int, precision: int = 30) -> Fraction:
    """[cos(pi/n) - cos((ceil(n/k)-1) pi/n)] / [2 sin(pi/n)], rounded down."""
    if k < 3:
        raise ValueError("k must be at least 3")
    m = ceil(Fraction(n, k)) - 1
    if m < 1 or m > n:
        raise ValueError("no certified window for these parameters")
    with mpmath.workdps(precision + 20):
        value = (mpmath.cos(mpmath.pi / n) - mpmath.cos(m * mpmath.pi / n)) / (
            2 * mpmath.sin(mpmath.pi / n)
        )
        return _down(value, precision)


def width_lower_bound(n: int, m: int, precision: int = 30) -> Fraction:
    """cos(pi/n) - cos((m-1) pi/n): minimum width of an m-subset of K_1(n).

    Rounded down so the certified inequality is conservative.
    """
    if not 3 <= m <= n // 2:
        raise ValueError("need 3 <= m <= n/2")
    with mpmath.workdps(precision + 20):
        value = mpmath.cos(mpmath.pi / n) - mpmath.cos((m - 1) * mpmath.pi / n)
        return _down(value, precision)


def wedge_point_bound(n: int, lam, precision: int = 30) -> Fraction:
    """(2n/pi) asin(1/lam) + 1: cap on ring points inside a tangent wedge."""
    lam = Fraction(lam)
    if lam <= 1:
        raise ValueError("lam must exceed 1")
    with mpmath.workdps(precision + 20):
        inv_lam = mpmath.mpf(lam.denominator) / lam.numerator
        value = 2 * n / mpmath.pi * mpmath.asin(inv_lam) + 1
        return _up(value, precision)


def exact_width_squared(points) -> Fraction:
    """Squared width of a planar set: the narrowest enclosing slab.

    Computed over hull edges: the width of a convex polygon is the least of
    the maximal distances from an edge line.
    """
    pts = list(points)
    hull = convex_hull(pts)
    if len(hull) < 3:
        raise ValueError("width needs at least 3 points not on one line")
    best = None
    for a, b in zip(hull, hull[1:] + hull[:1]):
        d = vsub(b.xy, a.xy)
        den = d[0] * d[0] + d[1] * d[1]
        peak = max(vcross(d, vsub(p.xy, a.xy)) ** 2 for p in pts)
        cand = Fraction(peak, den)
        if best is None or cand < best:
            best = cand
    return best


def wedge_members(ring: PointSet, p: Point) -> tuple[Point, ...]:
    """Ring points strictly inside the open tangent wedge of p toward the
    unit disk: the line from p must pass within distance 1 of the origin,
    on the origin side of p."""
    out = []
    px, py = p.xy
    norm_p = px * px + py * py
    if norm_p <= 1:
        raise ValueError("wedge apex must be outside the unit disk")
    for q in ring:
        if q.xy == p.xy:
            continue
        dx, dy = q.x - px, q.y - py
        toward = -(dx * px + dy * py)
        if toward <= 0:
            continue
        c = dx * py - dy * px
        if c * c < dx * dx + dy * dy:
            out.append(q)
    return tuple(out)


# -- crossing-hard construction ----------------------------------------------------

def crossing_hard_set(n: int, eps) -> PointSet:
    """Reds on the negative axis, blues split between two tight disks.

    The returned set is balanced, in general position, avoids both axes, and
    spans no vertical or horizontal pair; realizing the fully alternating
    word from it forces quadratically many crossings.
    """
    eps = Fraction(eps)
    if n < 2 or not 0 < eps < Fraction(1, 2):
        raise ValueError("need n >= 2 and 0 < eps < 1/2")
    top = n // 2
    bottom = n - top
    mu = eps / (8 * n ** 4)
    for _ in range(64):
        reds = [
            Point(-i + mu * i * i, mu * (2 * i + 1), RED) for i in range(1, n + 1)
        ]
        blues = []
        for j in range(top):
            blues.append(
                Point(eps * Fraction(j + 1, 4 * top) + mu * (j + 1),
                      1 + mu * (j + 1) ** 2 + mu * (j + 1), BLUE)
            )
        for j in range(bottom):
            blues.append(
                Point(eps * Fraction(j + 1, 4 * bottom) + mu * (j + 2) ** 2,
                      -1 - mu * (j + 2) ** 2 + mu * (j + 1), BLUE)
            )
        try:
            points = PointSet(reds + blues)
        except ValueError:
            mu /= 2
            continue
        if _crossing_hard_ok(points, top, bottom, eps):
            return points
        mu /= 2
    raise ConstructionError("could not certify the crossing-hard set")


def _crossing_hard_ok(points: PointSet, top: int, bottom: int, eps: Fraction) -> bool:
    if position_class(points) not in (
        PositionClass.GENERAL, PositionClass.STRONG_GENERAL
    ):
        return False
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    if any(x == 0 for x in xs) or any(y == 0 for y in ys):
        return False
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        return False
    blues = points.blues
    for j, b in enumerate(blues):
        center_y = 1 if j < top else -1
        if b.x ** 2 + (b.y - center_y) ** 2 >= eps * eps:
            return False
    return True
