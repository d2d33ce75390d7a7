"""Constructive lower-bound machinery: cut, matching, extraction, families.

The pipeline realizes exponentially many configurations from any balanced
set: a ham-sandwich cut, a non-crossing bichromatic matching across it, a
monotone subfamily of the matched segments, and one independent two-way
perturbation per chosen segment.  Every "small enough" angle from the proofs
is an explicit rational found by halving until exact validation passes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from scipy.optimize import linear_sum_assignment

from .configs import BlockTuple, from_blocks
from .geom import (
    BLUE,
    Direction,
    Point,
    PointSet,
    PositionClass,
    RED,
    halfplane_counts,
    position_class,
    side_of_line,
    vcross,
    vdot,
    vsub,
)
from .rays import (
    PairClass,
    Ray,
    RayFamily,
    Regime,
    classify_pair,
    configuration_at_infinity,
    validate_family,
)


class PipelineError(RuntimeError):
    """A constructive step failed to certify its postcondition."""


def _rot_ccw(d: Direction, tau: Fraction) -> Direction:
    return Direction(d.dx - tau * d.dy, d.dy + tau * d.dx)


def _rot_cw(d: Direction, tau: Fraction) -> Direction:
    return Direction(d.dx + tau * d.dy, d.dy - tau * d.dx)


# -- ham-sandwich cut ----------------------------------------------------------

def ham_sandwich(points: PointSet) -> tuple[Point, Direction]:
    """A directed line with exactly floor(n/2) reds strictly right and
    floor(n/2) blues strictly left, and no point on the line.

    Found by exhausting lines through point pairs with the four symbolic
    placements of the two carriers, realized as exact shifted or tilted
    lines and re-verified by exact counting.
    """
    points.require_balanced()
    n = len(points) // 2
    m = n // 2
    pts = points.points
    for a in pts:
        for b in pts:
            if a.xy == b.xy:
                continue
            d = Direction(b.x - a.x, b.y - a.y)
            reds_right = 0
            blues_left = 0
            carriers = []
            degenerate = False
            for p in pts:
                side = side_of_line(a, d, p)
                if side == 0:
                    if p.xy not in (a.xy, b.xy):
                        degenerate = True
                        break
                    carriers.append(p)
                    continue
                if p.color is RED and side < 0:
                    reds_right += 1
                if p.color is BLUE and side > 0:
                    blues_left += 1
            if degenerate:
                continue
            for side_a in (-1, 1):
                for side_b in (-1, 1):
                    rr = reds_right
                    bl = blues_left
                    for p, s in ((a, side_a), (b, side_b)):
                        if p.color is RED and s < 0:
                            rr += 1
                        if p.color is BLUE and s > 0:
                            bl += 1
                    if rr != m or bl != m:
                        continue
                    line = _realize_split(points, a, b, d, side_a, side_b, m)
                    if line is not None:
                        return line
    raise PipelineError("no ham-sandwich line found")


def _realize_split(points, a, b, d, side_a, side_b, m):
    ln = d.left_normal()
    mid = ((a.x + b.x) / 2, (a.y + b.y) / 2)
    delta = Fraction(1, 1024)
    for _ in range(80):
        if side_a == side_b:
            anchor = Point(a.x - side_a * delta * ln.dx, a.y - side_a * delta * ln.dy, a.color)
            cand = (anchor, d)
        else:
            # counterclockwise tilt around the midpoint sends a left, b right
            tilted = _rot_ccw(d, delta) if side_a > 0 else _rot_cw(d, delta)
            cand = (Point(mid[0], mid[1], a.color), tilted)
        counts = halfplane_counts(points, cand)
        if (
            counts.right[RED] == m
            and counts.left[BLUE] == m
            and counts.on[RED] == 0
            and counts.on[BLUE] == 0
        ):
            return cand
        delta /= 2
    return None


# -- non-crossing matching -------------------------------------------------------

@dataclass(frozen=True)
class MatchedPair:
    red_end: Point
    blue_end: Point


def _segments_interact(p1, p2, q1, q2) -> bool:
    """Closed intersection test for segments with all-distinct endpoints."""
    d1 = vsub(p2, p1)
    d2 = vsub(q2, q1)
    s1 = vcross(d1, vsub(q1, p1))
    s2 = vcross(d1, vsub(q2, p1))
    s3 = vcross(d2, vsub(p1, q1))
    s4 = vcross(d2, vsub(p2, q1))
    if ((s1 > 0) != (s2 > 0) or 0 in (s1, s2)) and (
        (s3 > 0) != (s4 > 0) or 0 in (s3, s4)
    ):
        # conservative: any touching or proper crossing counts
        if s1 == 0 and s2 == 0:
            lo1, hi1 = sorted((vdot(d1, p1), vdot(d1, p2)))
            lo2, hi2 = sorted((vdot(d1, q1), vdot(d1, q2)))
            return not (hi1 < lo2 or hi2 < lo1)
        return True
    return False


def noncrossing_matching(red_side, blue_side, line) -> list[MatchedPair]:
    """Perfect red-blue matching by pairwise-disjoint segments crossing the
    cut line.

    Seeded with the minimum-total-length assignment (crossing-free by the
    triangle-inequality exchange argument), then any surviving crossing is
    uncrossed; each swap strictly shortens the matching, so this terminates.
    """
    reds = list(red_side)
    blues = list(blue_side)
    if len(reds) != len(blues):
        raise ValueError("sides must have equal sizes")
    if not reds:
        return []
    anchor, d = line
    red_sides = {side_of_line(anchor, d, p) for p in reds}
    blue_sides = {side_of_line(anchor, d, p) for p in blues}
    if len(red_sides) != 1 or len(blue_sides) != 1 or red_sides == blue_sides or 0 in red_sides | blue_sides:
        raise ValueError("reds and blues must lie strictly on opposite sides")
    cost = [
        [float((r.x - b.x) ** 2 + (r.y - b.y) ** 2) ** 0.5 for b in blues]
        for r in reds
    ]
    rows, cols = linear_sum_assignment(cost)
    match = {int(i): int(j) for i, j in zip(rows, cols)}
    for _ in range(len(reds) * len(reds) * 4 + 8):
        crossing = None
        items = sorted(match.items())
        for ii in range(len(items)):
            for jj in range(ii + 1, len(items)):
                i1, j1 = items[ii]
                i2, j2 = items[jj]
                if _segments_interact(
                    reds[i1].xy, blues[j1].xy, reds[i2].xy, blues[j2].xy
                ):
                    crossing = (i1, i2)
                    break
            if crossing:
                break
        if crossing is None:
            return [MatchedPair(reds[i], blues[j]) for i, j in sorted(match.items())]
        i1, i2 = crossing
        match[i1], match[i2] = match[i2], match[i1]
    raise PipelineError("uncrossing did not terminate")


# -- Erdos-Szekeres extraction ----------------------------------------------------

def _longest_increasing(seq, strict=True):
    n = len(seq)
    best_len = [1] * n
    prev = [-1] * n
    for i in range(n):
        for j in range(i):
            ok = seq[j] < seq[i] if strict else seq[j] <= seq[i]
            if ok and best_len[j] + 1 > best_len[i]:
                best_len[i] = best_len[j] + 1
                prev[i] = j
    end = max(range(n), key=lambda i: (best_len[i], -i))
    out = []
    while end != -1:
        out.append(end)
        end = prev[end]
    return out[::-1]


def es_monotone(seq):
    """Indices of a longest strictly monotone subsequence and its kind.

    For distinct values the result has length at least ceil(sqrt(m)).
    """
    if not seq:
        raise ValueError("sequence must be nonempty")
    inc = _longest_increasing(seq)
    dec = _longest_increasing([_Neg(x) for x in seq])
    if len(inc) >= len(dec):
        return inc, "increasing"
    return dec, "decreasing"


class _Neg:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return other.v < self.v

    def __eq__(self, other):
        return self.v == other.v


def es_three_way(seq):
    """Longest of: strictly increasing, strictly decreasing, constant.

    Guaranteed length at least ceil(m^(1/3)).
    """
    if not seq:
        raise ValueError("sequence must be nonempty")
    inc = _longest_increasing(seq)
    dec = _longest_increasing([_Neg(x) for x in seq])
    counts = {}
    for i, x in enumerate(seq):
        counts.setdefault(x, []).append(i)
    const = max(counts.values(), key=len)
    best = max((inc, "increasing"), (dec, "decreasing"), (const, "constant"),
               key=lambda t: len(t[0]))
    return best


# -- the 2^k family -----------------------------------------------------------------

@dataclass(frozen=True)
class LowerBoundResult:
    families: tuple
    configurations: frozenset
    k: int
    line: tuple
    pairs: tuple

    def count_bound_holds(self) -> bool:
        return len(self.configurations) * 2 * len(self.families[0]) >= 2 ** self.k


_GRID_DIRECTIONS = None


def _direction_grid():
    # rational points on the circle via tan(theta/2) in (-1, 1): right half
    # plane, then negations; the two vertical axes are added explicitly
    global _GRID_DIRECTIONS
    if _GRID_DIRECTIONS is None:
        dirs = [Direction(0, 1), Direction(0, -1)]
        steps = 48
        for i in range(-steps + 1, steps):
            t = Fraction(2 * i + 1, 2 * steps)
            dirs.append(Direction(1 - t * t, 2 * t))
            dirs.append(Direction(-(1 - t * t), -2 * t))
        _GRID_DIRECTIONS = tuple(dirs)
    return _GRID_DIRECTIONS


def _escape_direction(apex: Point, obstacles, chosen_axes, assigned):
    """A ray direction from ``apex`` disjoint from every obstacle ray and
    previously assigned ray, and not parallel to any chosen segment.

    Candidates: slight tilts of the obstacle directions (these thread the
    arbitrarily narrow channels between nearly parallel obstacle rays), then
    a coarse grid over the whole circle.
    """
    def candidates():
        for ray in obstacles:
            d = ray.direction
            for t in range(6, 60, 6):
                tau = Fraction(1, 2 ** t)
                yield _rot_ccw(d, tau)
                yield _rot_cw(d, tau)
                yield _rot_ccw(-d, tau)
                yield _rot_cw(-d, tau)
        yield from _direction_grid()

    for cand in candidates():
        if cand.axis_key() in chosen_axes:
            continue
        ray = Ray(apex, cand)
        if all(
            classify_pair(ray, other) is PairClass.DISJOINT
            for other in obstacles + assigned
        ):
            return cand
    raise PipelineError("no escape direction found for a free point")


def lb_family(points: PointSet) -> LowerBoundResult:
    """All 2^k perturbed families of the lower-bound construction.

    Chosen matched segments get both endpoint rays along the segment line,
    rotated per segment either clockwise or counterclockwise by one shared
    exact angle; the remaining points shoot fixed escape rays.  Distinct sign
    vectors give distinct readings up to rotation, so at least 2^k / (2n)
    configurations arise.
    """
    points.require_balanced()
    if len(points) > 24:
        raise ValueError("lb_family supports at most 24 points")
    pc = position_class(points)
    if pc not in (PositionClass.STRONG_GENERAL, PositionClass.GENERAL):
        raise ValueError("lb_family needs (strong) general position")
    n = len(points) // 2
    m = n // 2
    line = ham_sandwich(points)
    anchor, d = line
    if m == 0:
        fam = _parallel_fallback(points)
        return LowerBoundResult(
            families=(fam,),
            configurations=frozenset({configuration_at_infinity(fam)}),
            k=0,
            line=line,
            pairs=(),
        )
    reds_right = [p for p in points if p.color is RED and side_of_line(anchor, d, p) < 0]
    blues_left = [p for p in points if p.color is BLUE and side_of_line(anchor, d, p) > 0]
    assert len(reds_right) == m and len(blues_left) == m
    matching = noncrossing_matching(reds_right, blues_left, line)

    def along(p):
        return vdot((d.dx, d.dy), p.xy)

    def cut_position(pair: MatchedPair):
        r, b = pair.red_end.xy, pair.blue_end.xy
        seg = vsub(b, r)
        num = vcross((d.dx, d.dy), vsub(r, anchor.xy))
        den = vcross((d.dx, d.dy), seg)
        t = -Fraction(num, den)
        return along(Point(r[0] + t * seg[0], r[1] + t * seg[1], RED))

    matching = sorted(matching, key=cut_position)

    def angle_key(pair: MatchedPair):
        w = vsub(pair.blue_end.xy, pair.red_end.xy)
        c = vcross((d.dx, d.dy), w)
        assert c != 0
        if c < 0:
            w = (-w[0], -w[1])
            c = -c
        return Fraction(-vdot((d.dx, d.dy), w), c)

    keys = [angle_key(pair) for pair in matching]
    if pc is PositionClass.STRONG_GENERAL:
        chosen_idx, kind = es_monotone(keys)
    else:
        chosen_idx, kind = es_three_way(keys)
    chosen = [matching[i] for i in chosen_idx]

    if kind == "constant":
        return _constant_branch(points, line, chosen, len(chosen), matching)
    # Double rays along a segment stay pairwise disjoint only when the
    # segment angles shrink along the direction of extension; an increasing
    # family extends through the red ends instead (the mirrored sense).
    sense = 1 if kind == "decreasing" else -1
    while chosen:
        try:
            return _monotone_branch(points, line, chosen, len(chosen), sense)
        except PipelineError:
            if len(chosen) == 1:
                raise
            chosen = chosen[:-1]
    raise PipelineError("no usable monotone subfamily")


def _parallel_fallback(points: PointSet) -> RayFamily:
    seen = {
        Direction(q.x - p.x, q.y - p.y).axis_key()
        for p in points
        for q in points
        if p.xy != q.xy
    }
    j = 1
    while Direction(1, j).axis_key() in seen:
        j += 1
    d = Direction(1, j)
    fam = RayFamily([Ray(p, d) for p in points], Regime.PAIRWISE_DISJOINT)
    if not validate_family(fam).ok:
        raise PipelineError("parallel fallback family invalid")
    return fam


def _monotone_branch(points, line, chosen, k, sense):
    chosen_points = {p.xy for pair in chosen for p in (pair.red_end, pair.blue_end)}
    deltas = []
    obstacles = []
    chosen_axes = set()
    for pair in chosen:
        delta = Direction(
            sense * (pair.blue_end.x - pair.red_end.x),
            sense * (pair.blue_end.y - pair.red_end.y),
        )
        deltas.append(delta)
        far_apex = pair.red_end if sense > 0 else pair.blue_end
        obstacles.append(Ray(far_apex, delta))
        chosen_axes.add(delta.axis_key())
    # the obstacle rays must be pairwise non-crossing, else the sense is wrong
    for i in range(len(obstacles)):
        for j in range(i + 1, len(obstacles)):
            if classify_pair(obstacles[i], obstacles[j]) is PairClass.CROSS:
                raise PipelineError("chosen segment rays cross")
    assigned = []
    for p in points:
        if p.xy in chosen_points:
            continue
        w = _escape_direction(p, obstacles, chosen_axes, assigned)
        assigned.append(Ray(p, w))

    tau = Fraction(1, 2 ** 20)
    for _ in range(200):
        families = []
        ok = True
        for signs in range(2 ** k):
            rays = list(assigned)
            for idx, pair in enumerate(chosen):
                rot = _rot_ccw if (signs >> idx) & 1 else _rot_cw
                tilted = rot(deltas[idx], tau)
                rays.append(Ray(pair.red_end, tilted))
                rays.append(Ray(pair.blue_end, tilted))
            fam = RayFamily(rays, Regime.PAIRWISE_DISJOINT)
            if not validate_family(fam).ok:
                ok = False
                break
            families.append(fam)
        if ok:
            words = frozenset(configuration_at_infinity(f) for f in families)
            if len(words) * len(points) >= 2 ** k:
                return LowerBoundResult(
                    families=tuple(families),
                    configurations=words,
                    k=k,
                    line=line,
                    pairs=tuple(chosen),
                )
        tau /= 2
    raise PipelineError("no valid perturbation angle found")


def _constant_branch(points, line, chosen, k, matching):
    """All matched segments parallel: tilt one shared direction so that no
    two points are collinear along it and each chosen pair is adjacent in
    the across order, then shoot every ray along that direction."""
    pair0 = chosen[0]
    delta = Direction(
        pair0.blue_end.x - pair0.red_end.x, pair0.blue_end.y - pair0.red_end.y
    )
    pair_axes = {
        Direction(q.x - p.x, q.y - p.y).axis_key()
        for p in points
        for q in points
        if p.xy != q.xy
    }
    chosen_points = {p.xy for pair in chosen for p in (pair.red_end, pair.blue_end)}
    tau = Fraction(1, 2 ** 20)
    for _ in range(200):
        tilted = _rot_ccw(delta, tau)
        if tilted.axis_key() in pair_axes or not _pairs_adjacent(points, chosen, tilted):
            tau /= 2
            continue
        families = []
        ok = True
        for signs in range(2 ** k):
            rays = []
            for p in points:
                if p.xy not in chosen_points:
                    rays.append(Ray(p, -tilted))
            for idx, pair in enumerate(chosen):
                if (signs >> idx) & 1:
                    rays.append(Ray(pair.red_end, tilted))
                    rays.append(Ray(pair.blue_end, -tilted))
                else:
                    rays.append(Ray(pair.red_end, -tilted))
                    rays.append(Ray(pair.blue_end, tilted))
            fam = RayFamily(rays, Regime.PAIRWISE_DISJOINT)
            if not validate_family(fam).ok:
                ok = False
                break
            families.append(fam)
        if ok:
            words = frozenset(configuration_at_infinity(f) for f in families)
            if len(words) * len(points) >= 2 ** k:
                return LowerBoundResult(
                    families=tuple(families),
                    configurations=words,
                    k=k,
                    line=line,
                    pairs=tuple(chosen),
                )
        tau /= 2
    raise PipelineError("no valid common tilt found")


def _pairs_adjacent(points, chosen, d: Direction) -> bool:
    offs = sorted((vcross((d.dx, d.dy), p.xy), p.xy) for p in points)
    order = {xy: i for i, (_o, xy) in enumerate(offs)}
    if len({o for o, _ in offs}) != len(offs):
        return False
    for pair in chosen:
        if abs(order[pair.red_end.xy] - order[pair.blue_end.xy]) != 1:
            return False
    return True


# -- the two-alternation realizer ----------------------------------------------------

def conf2_realizer(points: PointSet, t: int):
    """A witness for one of the two claimed alternation-two block tuples.

    A hull vertex p and the mate q with exactly t-1 same-color-as-q points
    strictly left of the directed line p->q anchor the construction; all
    rays run along +-(p-q) and the whole family is rotated by one exact
    angle that pushes q's ray into the left halfplane.
    """
    points.require_balanced()
    n = len(points) // 2
    if not 1 <= t <= n - 1:
        raise ValueError("t must be in [1, n-1]")
    pc = position_class(points)
    if pc not in (PositionClass.STRONG_GENERAL, PositionClass.GENERAL):
        raise ValueError("conf2_realizer needs (strong) general position")
    p = min(points, key=lambda q: (q.x, q.y))
    if p.color is RED:
        which = "A"
        mates = [q for q in points if q.color is BLUE]
        blocks = BlockTuple((n - 1, n - t, 1, t))
    else:
        which = "B"
        mates = [q for q in points if q.color is RED]
        blocks = BlockTuple((n - t, 1, t, n - 1))
    target = from_blocks(blocks)
    q = None
    for cand in mates:
        d = Direction(cand.x - p.x, cand.y - p.y)
        left = sum(
            1
            for other in mates
            if other.xy != cand.xy and side_of_line(p, d, other) > 0
        )
        if left == t - 1:
            q = cand
            break
    if q is None:
        raise PipelineError("no mate with the required left count")
    toward = Direction(q.x - p.x, q.y - p.y)
    away = -toward
    rays = []
    for u in points:
        if u.xy == p.xy:
            rays.append((u, away))
        elif u.color is p.color:
            rays.append((u, toward))
        else:
            rays.append((u, away))
    tau = Fraction(1, 2 ** 16)
    for _ in range(200):
        fam = RayFamily(
            [Ray(u, _rot_cw(dd, tau)) for u, dd in rays], Regime.PAIRWISE_DISJOINT
        )
        if validate_family(fam).ok and configuration_at_infinity(fam) == target:
            return which, fam
        tau /= 2
    raise PipelineError("conf2 realizer failed to certify")
