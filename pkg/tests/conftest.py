import random

import pytest

from rayconf import BLUE, RED, Point, PointSet, PositionClass, position_class


def random_point_set(size, seed, box=10**4, require=PositionClass.STRONG_GENERAL):
    """Deterministic random balanced set in the requested position class."""
    rng = random.Random(seed)
    attempt = seed
    while True:
        used = set()
        pts = []
        for i in range(size):
            while True:
                xy = (rng.randint(-box, box), rng.randint(-box, box))
                if xy not in used:
                    used.add(xy)
                    break
            pts.append(Point(xy[0], xy[1], RED if i < size // 2 else BLUE))
        points = PointSet(pts)
        if require is None or position_class(points) is require:
            return points
        attempt += 99991
        rng = random.Random(attempt)


def random_collinear_colors(size, seed):
    """Random colors for collinear points on the x axis, balanced."""
    rng = random.Random(seed)
    colors = [RED] * (size // 2) + [BLUE] * (size // 2)
    rng.shuffle(colors)
    xs = sorted(rng.sample(range(-10 * size, 10 * size), size))
    return PointSet(Point(x, 0, c) for x, c in zip(xs, colors))


@pytest.fixture
def square():
    return PointSet([
        Point(0, 0, RED), Point(1, 0, BLUE), Point(1, 1, RED), Point(0, 1, BLUE),
    ])
