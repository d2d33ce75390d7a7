"""Full-crossing tooling: certificate search, negative evidence, minima.

There is no canonical-position lemma for pairwise-crossing rays, so the
searches here are certificate-producing and one-sided: a hit is a validated
realization, a miss is evidence only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .configs import Configuration, enumerate_configurations
from .constructions import fc_universal_realizer, universal_point_set
from .general import (
    GammaMethod,
    ReadingSearch,
    canonical_directions,
    decide_general,
    general_oracle,
)
from .geom import Direction, Point, PointSet
from .rays import (
    PairClass,
    Ray,
    RayFamily,
    Regime,
    classify_pair,
    configuration_at_infinity,
    crossing_count,
    validate_family,
)

_CROSSING_CLASSES = frozenset({PairClass.CROSS, PairClass.APEX_TOUCH})
_PROPER_CLASSES = frozenset(
    {PairClass.CROSS, PairClass.APEX_TOUCH, PairClass.DISJOINT, PairClass.OVERLAP}
)


class ChiStrategy(enum.Enum):
    CONCURRENT_POINT = "concurrent"
    V_GRID = "vgrid"
    DENSE_GRID = "dense"


@dataclass(frozen=True)
class ChiCertificate:
    family: RayFamily
    configuration: Configuration


def _certify(family: RayFamily, config: Configuration) -> Optional[ChiCertificate]:
    if not validate_family(family).ok:
        return None
    if configuration_at_infinity(family) != config:
        return None
    return ChiCertificate(family=family, configuration=config)


def _concurrent_candidates(points: PointSet):
    pts = points.points
    n = len(pts)
    sx = sum(p.x for p in pts)
    sy = sum(p.y for p in pts)
    yield (Fraction(sx, n), Fraction(sy, n))
    for a, b, c in combinations(pts, 3):
        center = _circumcenter(a, b, c)
        if center is not None:
            yield center


def _circumcenter(a: Point, b: Point, c: Point):
    d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
    if d == 0:
        return None
    na = a.x * a.x + a.y * a.y
    nb = b.x * b.x + b.y * b.y
    nc = c.x * c.x + c.y * c.y
    ux = (na * (b.y - c.y) + nb * (c.y - a.y) + nc * (a.y - b.y)) / d
    uy = (na * (c.x - a.x) + nb * (a.x - c.x) + nc * (b.x - a.x)) / d
    return (ux, uy)


def _concurrent_family(points: PointSet, z) -> Optional[RayFamily]:
    """Rays through a common interior point are automatically full-crossing,
    unless the point aligns with a pair of apexes."""
    zx, zy = z
    rays = []
    for p in points:
        if p.x == zx and p.y == zy:
            return None
        rays.append(Ray(p, Direction(zx - p.x, zy - p.y)))
    fam = RayFamily(rays, Regime.FULL_CROSSING)
    if not validate_family(fam).ok:
        return None
    return fam


def dense_grid_directions(count: int) -> tuple[Direction, ...]:
    """Rational unit-circle directions near the count-th roots of unity,
    rotated by a third of a step to dodge the axes."""
    from mpmath import tan, pi, workdps

    dirs = []
    with workdps(30):
        for k in range(count):
            theta = pi * (3 * k + 1) / (3 * count) * 2
            t = Fraction(int(tan(theta / 2) * 2 ** 24), 2 ** 24)
            dirs.append(Direction(1 - t * t, 2 * t))
    return tuple(dict.fromkeys(dirs))


def chi_search(points: PointSet, config: Configuration,
               strategy: ChiStrategy = ChiStrategy.CONCURRENT_POINT,
               grid: int = 360) -> Optional[ChiCertificate]:
    """Search for a full-crossing realization of the configuration.

    A returned certificate is always validated; ``None`` means the searched
    space holds no realization and is NOT a proof of chi-infeasibility.
    """
    points.require_balanced()
    if len(points) != len(config):
        raise ValueError("point count must equal configuration length")
    n = len(points) // 2
    if points == universal_point_set(n):
        return _certify(fc_universal_realizer(n, config), config)
    if strategy is ChiStrategy.CONCURRENT_POINT:
        for z in _concurrent_candidates(points):
            fam = _concurrent_family(points, z)
            if fam is None:
                continue
            cert = _certify(fam, config)
            if cert is not None:
                return cert
        return None
    if strategy is ChiStrategy.V_GRID:
        dirs = canonical_directions(points)
    else:
        dirs = dense_grid_directions(grid)
    search = ReadingSearch(points, dirs, _CROSSING_CLASSES)
    for assignment in search.assignments(config.word):
        fam = RayFamily(
            (Ray(points[i], d) for i, d in sorted(assignment.items())),
            Regime.FULL_CROSSING,
        )
        cert = _certify(fam, config)
        if cert is not None:
            return cert
    return None


@dataclass(frozen=True)
class MinCrossingResult:
    best_count: Optional[int]
    family: Optional[RayFamily]
    exhaustive: bool


def min_crossing_search(points: PointSet, config: Configuration,
                        budget: int = 2_000_000) -> MinCrossingResult:
    """Minimum crossings over pairwise-proper canonical realizations.

    Exact over direction assignments from V (closed under negation); an
    upper bound on the continuous minimum.  ``budget`` caps the number of
    families inspected; a partial sweep is flagged non-exhaustive.
    """
    points.require_balanced()
    if len(points) > 6:
        raise ValueError("min_crossing_search supports at most 6 points")
    if len(points) != len(config):
        raise ValueError("point count must equal the configuration length")
    dirs = canonical_directions(points)
    search = ReadingSearch(points, dirs, _PROPER_CLASSES)
    best = None
    best_family = None
    seen = 0
    exhaustive = True
    for assignment in search.assignments(config.word):
        fam = RayFamily(
            (Ray(points[i], d) for i, d in sorted(assignment.items())),
            Regime.PROPER,
        )
        count = crossing_count(fam)
        if best is None or count < best:
            best = count
            best_family = fam
            if best == 0:
                break
        seen += 1
        if seen >= budget:
            exhaustive = False
            break
    return MinCrossingResult(best_count=best, family=best_family,
                             exhaustive=exhaustive)


def alternation_limit(points: PointSet, method: GammaMethod = GammaMethod.ORACLE) -> int:
    """Largest alternation number over the feasible configurations."""
    points.require_balanced()
    n2 = len(points)
    if method is GammaMethod.ORACLE:
        if n2 > 6:
            raise ValueError("alternation_limit via oracle supports at most 6 points")
        feasible = general_oracle(points)
    else:
        if n2 > 8:
            raise ValueError("alternation_limit via dp supports at most 8 points")
        feasible = [
            c for c in enumerate_configurations(n2 // 2) if decide_general(points, c)
        ]
    return max(c.alternation_number() for c in feasible)
