from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rayconf import (
    BLUE,
    RED,
    Direction,
    Orientation,
    Point,
    PointSet,
    PositionClass,
    format_rational,
    halfplane_counts,
    orientation,
    parse_rational,
    position_class,
)
from rayconf.geom import ccw_key, cw_angle_less_than_pi, cw_in_closed_wedge

coords = st.integers(min_value=-50, max_value=50)


def pt(x, y, color=RED):
    return Point(x, y, color)


def test_orientation_examples():
    assert orientation(pt(0, 0), pt(1, 0), pt(2, 0)) is Orientation.COLLINEAR
    assert orientation(pt(0, 0), pt(1, 0), pt(0, 1)) is Orientation.CCW
    assert orientation(pt(0, 0), pt(0, 1), pt(1, 0)) is Orientation.CW


@given(coords, coords, coords, coords, coords, coords)
def test_orientation_antisymmetry(ax, ay, bx, by, cx, cy):
    a, b, c = pt(ax, ay), pt(bx, by), pt(cx, cy)
    assert orientation(a, b, c) == -orientation(b, a, c)
    assert orientation(a, b, c) == -orientation(a, c, b)


@given(coords, coords, coords, coords, coords, coords,
       st.integers(-30, 30), st.integers(-30, 30), st.integers(1, 9))
def test_orientation_translation_scale_invariance(ax, ay, bx, by, cx, cy, tx, ty, s):
    a, b, c = pt(ax, ay), pt(bx, by), pt(cx, cy)
    moved = [Point(p.x * s + tx, p.y * s + ty, p.color) for p in (a, b, c)]
    assert orientation(a, b, c) == orientation(*moved)


@given(st.fractions())
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_rational_format():
    assert format_rational(Fraction(3, 1)) == "3"
    assert format_rational(Fraction(-7, 4)) == "-7/4"


def test_position_class_examples(square):
    assert position_class(square) is PositionClass.GENERAL
    strong = PointSet([pt(0, 0), pt(1, 0), pt(0, 1, BLUE), pt(2, 3, BLUE)])
    assert position_class(strong) is PositionClass.STRONG_GENERAL
    line = PointSet([pt(0, 0), pt(1, 0), pt(2, 0, BLUE)])
    assert position_class(line) is PositionClass.COLLINEAR
    degenerate = PointSet([pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1, BLUE)])
    assert position_class(degenerate) is PositionClass.DEGENERATE
    with pytest.raises(ValueError):
        position_class(PointSet([pt(0, 0)]))


def test_strong_general_has_no_collinear_triple():
    strong = PointSet([pt(0, 0), pt(1, 0), pt(0, 1, BLUE), pt(2, 3, BLUE)])
    pts = strong.points
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            for k in range(j + 1, len(pts)):
                triple = PointSet([pts[i], pts[j], pts[k]])
                assert position_class(triple) is not PositionClass.COLLINEAR


def test_halfplane_counts_examples():
    s = PointSet([pt(0, 1, RED), pt(0, -1, BLUE)])
    counts = halfplane_counts(s, (pt(0, 0), Direction(1, 0)))
    assert counts.left == {RED: 1, BLUE: 0}
    assert counts.right == {RED: 0, BLUE: 1}

    on_line = halfplane_counts(s, (pt(0, 0), Direction(0, 1)))
    assert on_line.on == {RED: 1, BLUE: 1}

    sq = PointSet([pt(0, 0), pt(1, 0, BLUE), pt(1, 1), pt(0, 1, BLUE)])
    diag = halfplane_counts(sq, (pt(0, 0), Direction(1, 1)))
    assert diag.on == {RED: 2, BLUE: 0}
    assert diag.left == {RED: 0, BLUE: 1}
    assert diag.right == {RED: 0, BLUE: 1}


def test_direction_normalization():
    assert Direction(4, -6) == Direction(2, -3)
    assert Direction(Fraction(1, 3), Fraction(1, 2)) == Direction(2, 3)
    assert Direction(2, 3).axis_key() == Direction(-2, -3).axis_key()
    assert -Direction(1, 0) == Direction(-1, 0)
    with pytest.raises(ValueError):
        Direction(0, 0)


def _angle_sorted(dirs):
    return sorted(dirs, key=ccw_key)


def test_ccw_key_total_order():
    east, ne, north, west, south = (
        Direction(1, 0), Direction(1, 1), Direction(0, 1),
        Direction(-1, 0), Direction(0, -1),
    )
    assert _angle_sorted([north, south, ne, west, east]) == [east, ne, north, west, south]


def test_cw_wedge_membership():
    north, east, ne, west, sw = (
        Direction(0, 1), Direction(1, 0), Direction(1, 1),
        Direction(-1, 0), Direction(-1, -1),
    )
    assert cw_in_closed_wedge(north, ne, east)
    assert not cw_in_closed_wedge(north, west, east)
    assert cw_in_closed_wedge(north, north, east, include_from=True)
    assert not cw_in_closed_wedge(north, north, east, include_from=False)
    # wide sweep passing through south
    assert cw_in_closed_wedge(east, sw, west)
    assert not cw_in_closed_wedge(east, ne, west)


def test_cw_angle_less_than_pi():
    assert cw_angle_less_than_pi(Direction(0, 1), Direction(1, 0))
    assert cw_angle_less_than_pi(Direction(0, 1), Direction(0, 1))
    assert not cw_angle_less_than_pi(Direction(0, 1), Direction(0, -1))
    assert not cw_angle_less_than_pi(Direction(1, 0), Direction(0, 1))


def test_point_set_distinctness():
    with pytest.raises(ValueError):
        PointSet([pt(0, 0, RED), pt(0, 0, BLUE)])
