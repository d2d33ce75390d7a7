import math
import random
from fractions import Fraction

import pytest

from rayconf import (
    BLUE,
    RED,
    Direction,
    PairClass,
    Point,
    PointSet,
    Ray,
    RayFamily,
    Regime,
    canonical_directions,
    canonicalize,
    classify_pair,
    configuration_at_infinity,
    crossing_count,
    inverse_family,
    universal_realizer,
    validate_family,
)
from rayconf.geom import ccw_key

from conftest import random_point_set


def ray(x, y, dx, dy, color=RED):
    return Ray(Point(x, y, color), Direction(dx, dy))


def test_classify_examples():
    assert classify_pair(ray(0, 0, 0, 1), ray(1, 0, 0, 1)) is PairClass.DISJOINT
    assert classify_pair(ray(0, 0, 1, 1), ray(2, 0, -1, 1)) is PairClass.CROSS
    assert classify_pair(ray(0, 0, 1, 0), ray(1, 0, 1, 0)) is PairClass.CONTAINMENT
    # facing collinear rays overlap on a segment
    assert classify_pair(ray(0, 0, 1, 0), ray(5, 0, -1, 0)) is PairClass.OVERLAP
    # collinear pointing apart
    assert classify_pair(ray(0, 0, -1, 0), ray(5, 0, 1, 0)) is PairClass.DISJOINT
    # one ray ends exactly on the other's apex
    assert classify_pair(ray(0, 0, 1, 0), ray(1, 1, 0, -1)) is PairClass.APEX_TOUCH
    with pytest.raises(ValueError):
        classify_pair(ray(0, 0, 1, 0), ray(0, 0, 1, 0))


def test_classify_symmetric():
    rng = random.Random(5)
    for _ in range(300):
        r1 = ray(rng.randint(-9, 9), rng.randint(-9, 9),
                 rng.randint(-4, 4) or 1, rng.randint(-4, 4) or 1)
        r2 = ray(rng.randint(-9, 9), rng.randint(-9, 9),
                 rng.randint(-4, 4) or 1, rng.randint(-4, 4) or 1, BLUE)
        if (r1.apex.xy, r1.direction) == (r2.apex.xy, r2.direction):
            continue
        assert classify_pair(r1, r2) is classify_pair(r2, r1)


def test_configuration_at_infinity_parallel_tiebreak():
    fam = RayFamily([ray(0, 0, 0, 1, RED), ray(1, 0, 0, 1, BLUE)])
    assert configuration_at_infinity(fam).word == "rb"


def test_configuration_identical_rays_error():
    fam = RayFamily([ray(0, 0, 0, 1, RED), ray(0, 0, 0, 1, RED)])
    with pytest.raises(ValueError):
        configuration_at_infinity(fam)


def test_one_point_set_two_words():
    """One set realizing both words of size two, families validated."""
    for word in ("rbrb", "rrbb"):
        fam = universal_realizer(2, canonicalize(word))
        assert validate_family(fam).ok
        assert configuration_at_infinity(fam).word == word


def test_opposite_horizontal_from_every_set():
    for seed in range(5):
        points = random_point_set(8, seed)
        from rayconf import opposite_horizontal_realizer
        fam = opposite_horizontal_realizer(points)
        assert configuration_at_infinity(fam) == canonicalize("rrrrbbbb")


def test_transform_invariance():
    fam = universal_realizer(3, canonicalize("rrbrbb"))
    word = configuration_at_infinity(fam)
    moved = RayFamily(
        [Ray(r.apex.translate(7, -3), r.direction) for r in fam.rays], fam.regime
    )
    assert configuration_at_infinity(moved) == word
    scaled = RayFamily(
        [Ray(Point(r.apex.x * 5, r.apex.y * 5, r.apex.color), r.direction)
         for r in fam.rays],
        fam.regime,
    )
    assert configuration_at_infinity(scaled) == word
    # rational rotation by the 3-4-5 triangle angle
    c, s = Fraction(4, 5), Fraction(3, 5)

    def rot_point(p):
        return Point(c * p.x - s * p.y, s * p.x + c * p.y, p.color)

    rotated = RayFamily(
        [Ray(rot_point(r.apex),
             Direction(c * r.direction.dx - s * r.direction.dy,
                       s * r.direction.dx + c * r.direction.dy))
         for r in fam.rays],
        fam.regime,
    )
    assert configuration_at_infinity(rotated) == word


def test_nonparallel_families_read_by_angle_sort():
    rng = random.Random(11)
    for _ in range(50):
        rays = []
        dirs = set()
        for i in range(6):
            while True:
                d = Direction(rng.randint(-9, 9) or 1, rng.randint(-9, 9) or 2)
                if d not in dirs:
                    dirs.add(d)
                    break
            rays.append(Ray(Point(rng.randint(-9, 9), rng.randint(-9, 9) + 20 * i,
                                  RED if i % 2 else BLUE), d))
        fam = RayFamily(rays)
        expected = canonicalize(
            "".join(r.color.letter
                    for r in sorted(rays, key=lambda r: ccw_key(r.direction),
                                    reverse=True))
        )
        assert configuration_at_infinity(fam) == expected


def _numeric_word(family, eps=1e-9, radius=1e12):
    """Float oracle: rotate every ray counterclockwise by eps, intersect a
    huge circle, read clockwise."""
    hits = []
    for r in family.rays:
        ax, ay = float(r.apex.x), float(r.apex.y)
        dx, dy = float(r.direction.dx), float(r.direction.dy)
        norm = math.hypot(dx, dy)
        dx, dy = dx / norm, dy / norm
        ce, se = math.cos(eps), math.sin(eps)
        dx, dy = dx * ce - dy * se, dx * se + dy * ce
        b = ax * dx + ay * dy
        c = ax * ax + ay * ay - radius * radius
        t = -b + math.sqrt(b * b - c)
        hits.append((math.atan2(ay + t * dy, ax + t * dx), r.color.letter))
    hits.sort(key=lambda item: -item[0])
    return canonicalize("".join(letter for _a, letter in hits))


def test_symbolic_tiebreak_matches_numeric_oracle():
    """Spec invariant: 1000 random canonical families read identically under
    the exact rules and the epsilon-rotated large-circle numeric oracle."""
    rng = random.Random(99)
    done = 0
    while done < 1000:
        points = random_point_set(4, rng.randint(0, 10 ** 6), box=20)
        dirs = canonical_directions(points)
        rays = [Ray(p, rng.choice(dirs)) for p in points]
        fam = RayFamily(rays, Regime.NONCROSSING_CANONICAL)
        if not validate_family(fam).ok:
            continue
        assert configuration_at_infinity(fam) == _numeric_word(fam)
        done += 1


def test_crossing_count_examples():
    assert crossing_count(RayFamily([ray(0, 0, 1, 1), ray(2, 0, -1, 1, BLUE)])) == 1
    concurrent = RayFamily([
        ray(2, 0, -1, 0, RED), ray(-2, 0, 1, 0, BLUE),
        ray(0, 2, 0, -1, RED), ray(0, -2, 0, 1, BLUE),
    ])
    assert crossing_count(concurrent) == 6
    disjoint = RayFamily([ray(0, 0, 0, 1), ray(1, 0, 0, 1, BLUE)])
    assert crossing_count(disjoint) == 0


def test_validate_family_regimes():
    up0, up1 = ray(0, 0, 0, 1, RED), ray(1, 0, 0, 1, BLUE)
    assert validate_family(RayFamily([up0, up1], Regime.PAIRWISE_DISJOINT)).ok
    concurrent = RayFamily([
        ray(2, 0, -1, 0, RED), ray(-2, 0, 1, 0, BLUE),
        ray(0, 2, 0, -1, RED), ray(0, -2, 0, 1, BLUE),
    ], Regime.FULL_CROSSING)
    assert validate_family(concurrent).ok
    parallel_fc = RayFamily([up0, up1], Regime.FULL_CROSSING)
    assert not validate_family(parallel_fc).ok
    contains = RayFamily([ray(0, 0, 1, 0), ray(1, 0, 1, 0, BLUE)], Regime.PROPER)
    assert not validate_family(contains).ok
    overlap = RayFamily([ray(0, 0, 1, 0), ray(5, 0, -1, 0, BLUE)], Regime.PROPER)
    assert validate_family(overlap).ok


def test_validate_apex_mismatch():
    fam = RayFamily([ray(0, 0, 0, 1, RED), ray(1, 0, 0, 1, BLUE)])
    wrong = PointSet([Point(0, 0, RED), Point(2, 0, BLUE)])
    with pytest.raises(ValueError):
        validate_family(fam, wrong)


def test_inverse_family():
    fam = RayFamily([ray(0, 0, 0, 1)])
    assert inverse_family(fam).rays[0].direction == Direction(0, -1)
    assert inverse_family(inverse_family(fam)).rays == fam.rays


def test_inverse_of_interior_full_crossing_is_disjoint():
    # four rays through the origin from apexes on pairwise distinct lines
    apexes = [(2, 1, RED), (-1, 2, BLUE), (-2, -3, RED), (3, -2, BLUE)]
    concurrent = RayFamily(
        [ray(x, y, -x, -y, c) for x, y, c in apexes], Regime.FULL_CROSSING
    )
    assert validate_family(concurrent).ok
    inv = inverse_family(concurrent, Regime.PAIRWISE_DISJOINT)
    assert validate_family(inv).ok
    assert configuration_at_infinity(inv) == configuration_at_infinity(concurrent)
