"""Feasibility of configurations from point sets in general position.

The decision follows the canonical-position framework: a configuration is
feasible by pairwise-disjoint rays iff it is realizable by non-crossing rays
whose directions lie in the difference set V of the points.  A realizing
family is either separable by a line with direction in V, or admits a triple
of points whose rays split the plane into three regions (a triangle variant
and a quadrilateral variant).  Every region is a pocket whose rays use
directions from one clockwise arc [from, to] of width at most a half turn;
feasibility of a word inside such a pocket is decided by an exact recursion
that peels the extreme point of the pocket and branches on its direction.

Cross-validation: ``general_oracle`` exhausts all canonical direction
assignments for tiny sets, pruning on the non-crossing predicate.

Everything hot runs on integers: coordinates are rescaled once per decision
by the common denominator and directions are indexed into V, after which
every predicate is an integer sign test.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import lcm

from .configs import Configuration, enumerate_configurations
from .geom import (
    Direction,
    Point,
    PointSet,
    PositionClass,
    ccw_key,
    cross,
    cw_angle_less_than_pi,
    position_class,
    v_cw_wedge,
    v_on_ray,
    vcross,
    vsub,
)
from .rays import (
    NONCROSSING_CLASSES,
    PairClass,
    Ray,
    RayFamily,
    Regime,
    classify_vec,
    configuration_at_infinity,
)


def canonical_directions(points: PointSet) -> tuple[Direction, ...]:
    """The deduplicated difference set {p - q}, sorted counterclockwise."""
    dirs = {
        Direction(q.x - p.x, q.y - p.y)
        for p in points
        for q in points
        if p.xy != q.xy
    }
    return tuple(sorted(dirs, key=ccw_key))


# -- region tuples (public view) ----------------------------------------------

@dataclass(frozen=True)
class PiTuple:
    p_i: Point
    p_j: Point
    u: Direction
    v: Direction


@dataclass(frozen=True)
class SigmaTuple:
    p_i: Point
    p_j: Point
    u: Direction
    v: Direction
    w: Direction


@dataclass(frozen=True)
class LambdaTuple:
    p_i: Point
    u: Direction
    v: Direction


def _dt(d: Direction) -> tuple:
    return (d.dx, d.dy)


def validate_tuple(tup) -> None:
    """Raise ValueError unless the tuple satisfies its defining invariants."""
    if isinstance(tup, PiTuple):
        if tup.p_i.xy == tup.p_j.xy:
            raise ValueError("pi tuple needs two distinct points")
        if not cw_angle_less_than_pi(tup.u, tup.v):
            raise ValueError("pi tuple needs clockwise angle u->v below pi")
        kind = classify_vec(tup.p_i.xy, _dt(tup.u), tup.p_j.xy, _dt(tup.v))
        if kind not in NONCROSSING_CLASSES:
            raise ValueError("pi tuple rays must be non-crossing")
        return
    if isinstance(tup, LambdaTuple):
        if tup.u == tup.v:
            raise ValueError("lambda tuple needs distinct directions")
        if not cw_angle_less_than_pi(tup.u, tup.v):
            raise ValueError("lambda tuple needs clockwise angle u->v below pi")
        return
    if isinstance(tup, SigmaTuple):
        if tup.p_i.xy == tup.p_j.xy:
            raise ValueError("sigma tuple needs two distinct points")
        if cross(tup.u, tup.v) > 0:
            raise ValueError("sigma tuple needs clockwise angle u->v at most pi")
        kind = classify_vec(tup.p_i.xy, _dt(tup.u), tup.p_j.xy, _dt(tup.w))
        if kind not in NONCROSSING_CLASSES:
            raise ValueError("sigma tuple rays u/w must be non-crossing")
        if not v_cw_wedge(_dt(tup.u), _dt(tup.w), _dt(tup.v), False, False):
            raise ValueError("sigma tuple needs cyclic order u, w, v clockwise")
        w = _dt(tup.w)
        diff = vsub(tup.p_j.xy, tup.p_i.xy)
        if vcross(w, diff) == 0:
            raise ValueError("sigma tuple apex may not lie on the w line")
        den = vcross(_dt(tup.v), w)
        if den == 0:
            raise ValueError("sigma tuple ray v must cross the w line")
        num = vcross(diff, w)
        if (num > 0) != (den > 0):
            raise ValueError("sigma tuple ray v must cross the w line")
        return
    raise TypeError(f"not a region tuple: {tup!r}")


# -- membership cores (tuple coordinates, int or Fraction) ---------------------

def _pi_member(pi_xy, pj_xy, u, v, x_xy) -> bool:
    """Membership in the region between h(p_i,u) (in) and h(p_j,v) (out),
    floored by the segment p_i p_j and opening clockwise from u to v."""
    if x_xy == pi_xy:
        return True
    if x_xy == pj_xy:
        return False
    if v_on_ray(pi_xy, u, x_xy):
        return True
    if v_on_ray(pj_xy, v, x_xy):
        return False
    d_ij = vsub(pj_xy, pi_xy)
    dx_i = vsub(x_xy, pi_xy)
    if not v_cw_wedge(u, dx_i, d_ij, True, False):
        return False
    dx_j = vsub(x_xy, pj_xy)
    d_ji = (-d_ij[0], -d_ij[1])
    return not v_cw_wedge(v, dx_j, d_ji, True, True)


def _sigma_member(pi_xy, pj_xy, u, v, w, x_xy) -> bool:
    if x_xy == pi_xy:
        return True
    if x_xy == pj_xy:
        return False
    side_x = vcross(w, vsub(x_xy, pj_xy))
    side_i = vcross(w, vsub(pi_xy, pj_xy))
    if side_x == 0 or (side_x > 0) != (side_i > 0):
        return False
    if v_on_ray(pi_xy, u, x_xy):
        return True
    return v_cw_wedge(u, vsub(x_xy, pi_xy), v, True, True)


def _lambda_member(pi_xy, u, v, x_xy) -> bool:
    if x_xy == pi_xy:
        return True
    if v_on_ray(pi_xy, u, x_xy):
        return True
    if v_on_ray(pi_xy, v, x_xy):
        return False
    return v_cw_wedge(u, vsub(x_xy, pi_xy), v, True, False)


def region_points(tup, points: PointSet) -> tuple[Point, ...]:
    """The points of S inside the tuple's region, in point-set order."""
    validate_tuple(tup)
    if isinstance(tup, PiTuple):
        member = lambda x: _pi_member(tup.p_i.xy, tup.p_j.xy, _dt(tup.u), _dt(tup.v), x.xy)
    elif isinstance(tup, SigmaTuple):
        member = lambda x: _sigma_member(
            tup.p_i.xy, tup.p_j.xy, _dt(tup.u), _dt(tup.v), _dt(tup.w), x.xy
        )
    else:
        member = lambda x: _lambda_member(tup.p_i.xy, _dt(tup.u), _dt(tup.v), x.xy)
    return tuple(p for p in points if member(p))


def _interval_of(tup) -> tuple[Direction, Direction]:
    """The clockwise direction arc available to rays confined to the region."""
    if isinstance(tup, SigmaTuple):
        # rays may not cross the line supporting h(p_j, w): admissible
        # directions stop at w
        return (tup.u, tup.w)
    return (tup.u, tup.v)


# -- the pocket recursion ------------------------------------------------------

class _Pocket:
    """Integer-scaled exact state for one point set: caches plus the memo.

    Directions are referred to by their index into V throughout.
    """

    def __init__(self, points: PointSet):
        self.points = points.points
        self.n = len(self.points)
        scale = lcm(*(c.denominator for p in self.points for c in p.xy))
        self.xy = tuple((int(p.x * scale), int(p.y * scale)) for p in self.points)
        self.V = canonical_directions(points)
        self.nv = len(self.V)
        self.vts = [(d.dx, d.dy) for d in self.V]
        self.vindex = {d: k for k, d in enumerate(self.V)}
        self.vneg = [self.vindex[-d] for d in self.V]
        self.colors = tuple(p.color.letter for p in self.points)
        self.red_mask = sum(1 << i for i in range(self.n) if self.colors[i] == "r")
        self.full_mask = (1 << self.n) - 1
        self._offsets = {}
        self._along = {}
        self._intervals = {}
        self._regions = {}
        self.memo = {}

    def offsets(self, di: int) -> tuple:
        got = self._offsets.get(di)
        if got is None:
            dx, dy = self.vts[di]
            got = tuple(dx * y - dy * x for x, y in self.xy)
            self._offsets[di] = got
        return got

    def along(self, di: int) -> tuple:
        got = self._along.get(di)
        if got is None:
            dx, dy = self.vts[di]
            got = tuple(dx * x + dy * y for x, y in self.xy)
            self._along[di] = got
        return got

    def interval_dirs(self, fi: int, ti: int) -> tuple:
        """V indices strictly clockwise after V[fi], up to and including V[ti]."""
        key = fi * self.nv + ti
        got = self._intervals.get(key)
        if got is None:
            ft, tt = self.vts[fi], self.vts[ti]
            got = tuple(
                k for k in range(self.nv)
                if v_cw_wedge(ft, self.vts[k], tt, False, True)
            )
            self._intervals[key] = got
        return got

    def pi_mask(self, ia: int, ib: int, ua: int, va: int) -> int:
        key = ("p", ia, ib, ua, va)
        got = self._regions.get(key)
        if got is None:
            pi, pj = self.xy[ia], self.xy[ib]
            u, v = self.vts[ua], self.vts[va]
            got = 0
            for i, xy in enumerate(self.xy):
                if _pi_member(pi, pj, u, v, xy):
                    got |= 1 << i
            self._regions[key] = got
        return got

    def sigma_mask(self, ia: int, ib: int, ua: int, va: int, wa: int) -> int:
        key = ("s", ia, ib, ua, va, wa)
        got = self._regions.get(key)
        if got is None:
            pi, pj = self.xy[ia], self.xy[ib]
            u, v, w = self.vts[ua], self.vts[va], self.vts[wa]
            got = 0
            for i, xy in enumerate(self.xy):
                if _sigma_member(pi, pj, u, v, w, xy):
                    got |= 1 << i
            self._regions[key] = got
        return got

    def lambda_mask(self, ia: int, ua: int, va: int) -> int:
        key = ("l", ia, ua, va)
        got = self._regions.get(key)
        if got is None:
            pi = self.xy[ia]
            u, v = self.vts[ua], self.vts[va]
            got = 0
            for i, xy in enumerate(self.xy):
                if _lambda_member(pi, u, v, xy):
                    got |= 1 << i
            self._regions[key] = got
        return got

    @staticmethod
    def _bits(mask: int):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def wslice(self, mask: int, text: str, fi: int, ti: int):
        """Assignment ((point index, dir index), ...) realizing ``text``
        inside the clockwise direction arc [V[fi], V[ti]], or None.

        The recursion peels the point with extreme offset across the from
        direction: it either shoots that direction itself (reading first) or
        shoots some x strictly beyond, in which case every other point must
        fall angularly on one side of it around the peeled apex; both sides
        recurse on the adjacent sub-arcs.
        """
        key = (mask, text, fi, ti)
        got = self.memo.get(key, 0)
        if got != 0:
            return got if got is not True else None
        result = self._wslice_compute(mask, text, fi, ti)
        self.memo[key] = result if result is not None else True
        return result

    def _forced_reading(self, mask: int, di: int):
        offs = self.offsets(di)
        alo = self.along(di)
        return sorted(self._bits(mask), key=lambda i: (-offs[i], alo[i]))

    def _wslice_compute(self, mask, text, fi, ti):
        if mask.bit_count() != len(text):
            return None
        if not mask:
            return ()
        if fi == ti:
            order = self._forced_reading(mask, fi)
            if any(self.colors[i] != ch for i, ch in zip(order, text)):
                return None
            return tuple((i, fi) for i in order)
        offs = self.offsets(fi)
        alo = self.along(fi)
        top = min(self._bits(mask), key=lambda i: (-offs[i], alo[i]))
        if self.colors[top] == text[0]:
            rest = self.wslice(mask ^ (1 << top), text[1:], fi, ti)
            if rest is not None:
                return ((top, fi),) + rest
        others = mask ^ (1 << top)
        ft = self.vts[fi]
        tt = self.vts[ti]
        xy = self.xy
        top_xy = xy[top]
        for x in self.interval_dirs(fi, ti):
            xt = self.vts[x]
            mask_a = 0
            ok = True
            for z in self._bits(others):
                dz = (xy[z][0] - top_xy[0], xy[z][1] - top_xy[1])
                if v_cw_wedge(ft, dz, xt, True, False):
                    mask_a |= 1 << z
                elif not v_cw_wedge(xt, dz, tt, True, True):
                    ok = False
                    break
            if not ok:
                continue
            m = mask_a.bit_count()
            if text[m] != self.colors[top]:
                continue
            left = self.wslice(mask_a, text[:m], fi, x)
            if left is None:
                continue
            right = self.wslice(others ^ mask_a, text[m + 1:], x, ti)
            if right is None:
                continue
            return left + ((top, x),) + right
        return None


# -- feasibility tables --------------------------------------------------------

@dataclass
class FeasibilityTables:
    """Write-once memo of region-tuple feasibility, keyed by cyclic slice.

    Keys are (tuple key, (start, length)); tuple keys are the index form of
    PiTuple / SigmaTuple / LambdaTuple.
    """

    t_pi: dict = field(default_factory=dict)
    t_sigma: dict = field(default_factory=dict)
    t_lambda: dict = field(default_factory=dict)

    def _table_for(self, tupkey):
        kind = tupkey[0]
        if kind == "p":
            return self.t_pi
        if kind == "s":
            return self.t_sigma
        return self.t_lambda

    def query(self, pocket: _Pocket, tupkey, mask: int, slice_key, text: str,
              fi: int, ti: int):
        table = self._table_for(tupkey)
        key = (tupkey, slice_key)
        if key in table:
            return table[key]
        value = pocket.wslice(mask, text, fi, ti)
        table[key] = value
        return value


# -- decomposition enumeration ---------------------------------------------------

@dataclass(frozen=True)
class _Decomposition:
    parts: tuple  # (mask, fi, ti, tupkey-or-None) in clockwise reading order


class _GeneralContext:
    """Everything reusable across configurations for one point set."""

    def __init__(self, points: PointSet):
        self.points = points
        self.pocket = _Pocket(points)
        self.tables = FeasibilityTables()
        p = self.pocket
        self.angle_lt, self.angle_lt_t = self._angle_masks()
        self.nc, self.cr = self._pair_masks()
        self.sides = self._side_masks()
        self.separable = self._separable_candidates()
        parts_seen = set()
        self.decompositions = []
        for parts in self._triangle_parts() + self._quad_parts():
            sig = tuple((m, fi, ti) for (m, fi, ti, _t) in parts)
            if sig in parts_seen:
                continue
            parts_seen.add(sig)
            self.decompositions.append(_Decomposition(parts))

    def _angle_masks(self):
        p = self.pocket
        nv = p.nv
        rows = [0] * nv
        rows_t = [0] * nv
        for a in range(nv):
            da = p.vts[a]
            for b in range(nv):
                db = p.vts[b]
                c = da[0] * db[1] - da[1] * db[0]
                if c < 0 or (c == 0 and da[0] * db[0] + da[1] * db[1] > 0):
                    rows[a] |= 1 << b
                    rows_t[b] |= 1 << a
        return rows, rows_t

    def _pair_masks(self):
        p = self.pocket
        n, nv, xy, vts = p.n, p.nv, p.xy, p.vts
        nc = {}
        cr = {}
        for i in range(n):
            for j in range(i + 1, n):
                nrows_ij = [0] * nv
                nrows_ji = [0] * nv
                crows_ij = [0] * nv
                crows_ji = [0] * nv
                for a in range(nv):
                    for b in range(nv):
                        kind = classify_vec(xy[i], vts[a], xy[j], vts[b])
                        if kind in NONCROSSING_CLASSES:
                            nrows_ij[a] |= 1 << b
                            nrows_ji[b] |= 1 << a
                        if kind is PairClass.CROSS:
                            crows_ij[a] |= 1 << b
                            crows_ji[b] |= 1 << a
                nc[(i, j)] = nrows_ij
                nc[(j, i)] = nrows_ji
                cr[(i, j)] = crows_ij
                cr[(j, i)] = crows_ji
        return nc, cr

    def _side_masks(self):
        """sides[(i, k)] = mask over V of u with k strictly left of h(i, u)."""
        p = self.pocket
        out = {}
        for i in range(p.n):
            for k in range(p.n):
                if i == k:
                    continue
                diff = vsub(p.xy[k], p.xy[i])
                m = 0
                for a, d in enumerate(p.vts):
                    if d[0] * diff[1] - d[1] * diff[0] > 0:
                        m |= 1 << a
                out[(i, k)] = m
        return out

    def _separable_candidates(self):
        """Lines with direction in V strictly splitting the set."""
        p = self.pocket
        out = []
        seen = set()
        for ui in range(p.nv):
            offs = p.offsets(ui)
            for hi in sorted(set(offs))[1:]:
                right = sum(1 << i for i in range(p.n) if offs[i] < hi)
                if not right or right == p.full_mask:
                    continue
                key = (ui, right)
                if key not in seen:
                    seen.add(key)
                    out.append((ui, right))
        return out

    @staticmethod
    def _vbits(mask: int):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def _avoid_triangle_masks(self, a: int, b: int, c: int):
        """Directions whose ray from each vertex misses the open triangle."""
        p = self.pocket
        xy = p.xy
        out = []
        for vertex, o1, o2 in ((a, b, c), (b, c, a), (c, a, b)):
            d1 = vsub(xy[o1], xy[vertex])
            d2 = vsub(xy[o2], xy[vertex])
            lo, hi = (d1, d2) if vcross(d1, d2) < 0 else (d2, d1)
            m = 0
            for ai, d in enumerate(p.vts):
                if not v_cw_wedge(lo, d, hi, False, False):
                    m |= 1 << ai
            out.append(m)
        return out

    def _triple_partition(self, masks, intervals, tupkeys):
        full = self.pocket.full_mask
        m0, m1, m2 = masks
        if m0 | m1 | m2 != full or m0 & m1 or m0 & m2 or m1 & m2:
            return None
        return tuple(
            (mask, fi, ti, tupkey)
            for mask, (fi, ti), tupkey in zip(masks, intervals, tupkeys)
        )

    def _triangle_parts(self):
        """Case (i): three pi regions around an empty untouched triangle."""
        p = self.pocket
        n, xy = p.n, p.xy
        out = []
        for tri in combinations(range(n), 3):
            a, b, c = tri
            if vcross(vsub(xy[b], xy[a]), vsub(xy[c], xy[a])) > 0:
                b, c = c, b
            if any(
                _strictly_inside_triangle(xy[a], xy[b], xy[c], xy[k])
                for k in range(n)
                if k not in tri
            ):
                continue
            avoid_a, avoid_b, avoid_c = self._avoid_triangle_masks(a, b, c)
            nc_ab, nc_bc, nc_ca = self.nc[(a, b)], self.nc[(b, c)], self.nc[(c, a)]
            for u in self._vbits(avoid_a):
                vmask = self.angle_lt[u] & nc_ab[u] & avoid_b
                for v in self._vbits(vmask):
                    wmask = self.angle_lt[v] & nc_bc[v] & self.angle_lt_t[u] & avoid_c
                    for w in self._vbits(wmask):
                        if u == v == w:
                            continue
                        if not (nc_ca[w] >> u) & 1:
                            continue
                        masks = (
                            p.pi_mask(a, b, u, v),
                            p.pi_mask(b, c, v, w),
                            p.pi_mask(c, a, w, u),
                        )
                        parts = self._triple_partition(
                            masks,
                            ((u, v), (v, w), (w, u)),
                            (("p", a, b, u, v), ("p", b, c, v, w), ("p", c, a, w, u)),
                        )
                        if parts is not None:
                            out.append(parts)
        return out

    def _quad_parts(self):
        """Case (ii): sigma, pi, sigma regions behind an empty quadrilateral
        cut off by the back extension of the first fence ray."""
        p = self.pocket
        n, xy = p.n, p.xy
        pts = p.points
        out = []
        for tri in combinations(range(n), 3):
            for a, b, c in permutations(tri):
                cr_ab = self.cr[(a, b)]
                cr_ac = self.cr[(a, c)]
                nc_ab, nc_bc, nc_ca = self.nc[(a, b)], self.nc[(b, c)], self.nc[(c, a)]
                side_ba = self.sides[(b, a)]
                side_ac_mask = self.sides[(a, c)]
                for u in range(p.nv):
                    if not (side_ac_mask >> u) & 1:
                        continue
                    nu = p.vneg[u]
                    vmask = self.angle_lt[u] & nc_ab[u] & cr_ab[nu] & side_ba
                    if not vmask:
                        continue
                    for v in self._vbits(vmask):
                        wmask = self.angle_lt[v] & nc_bc[v] & self.angle_lt_t[u]
                        for w in self._vbits(wmask):
                            if u == v == w:
                                continue
                            if not (nc_ca[w] >> u) & 1:
                                continue
                            if not (cr_ac[nu] >> p.vneg[w]) & 1:
                                continue
                            q_j = _ray_cross_point(pts[a], -p.V[u], pts[b], p.V[v])
                            q_i = _ray_cross_point(pts[a], -p.V[u], pts[c], -p.V[w])
                            quad = (q_i, q_j, pts[b].xy, pts[c].xy)
                            if not _quad_convex_cw(quad):
                                continue
                            if any(
                                _inside_convex_cw(quad, pts[k].xy)
                                for k in range(n)
                                if k not in (a, b, c)
                            ):
                                continue
                            masks = (
                                p.sigma_mask(a, b, u, nu, v),
                                p.pi_mask(b, c, v, w),
                                p.sigma_mask(c, a, w, p.vneg[w], u),
                            )
                            parts = self._triple_partition(
                                masks,
                                ((u, v), (v, w), (w, u)),
                                (
                                    ("s", a, b, u, nu, v),
                                    ("p", b, c, v, w),
                                    ("s", c, a, w, p.vneg[w], u),
                                ),
                            )
                            if parts is not None:
                                out.append(parts)
        return out


def _strictly_inside_triangle(xy_a, xy_b, xy_c, xy_x) -> bool:
    s1 = vcross(vsub(xy_b, xy_a), vsub(xy_x, xy_a))
    s2 = vcross(vsub(xy_c, xy_b), vsub(xy_x, xy_b))
    s3 = vcross(vsub(xy_a, xy_c), vsub(xy_x, xy_c))
    return (s1 > 0 and s2 > 0 and s3 > 0) or (s1 < 0 and s2 < 0 and s3 < 0)


def _ray_cross_point(a: Point, da: Direction, b: Point, db: Direction):
    den = cross(da, db)
    wx, wy = b.x - a.x, b.y - a.y
    t = Fraction(wx * db.dy - wy * db.dx, den)
    return (a.x + t * da.dx, a.y + t * da.dy)


def _quad_convex_cw(quad) -> bool:
    m = len(quad)
    for k in range(m):
        ox, oy = quad[k]
        ax, ay = quad[(k + 1) % m]
        bx, by = quad[(k + 2) % m]
        if (ax - ox) * (by - oy) - (ay - oy) * (bx - ox) >= 0:
            return False
    return True


def _inside_convex_cw(quad, xy) -> bool:
    x, y = xy
    m = len(quad)
    for k in range(m):
        ox, oy = quad[k]
        ax, ay = quad[(k + 1) % m]
        if (ax - ox) * (y - oy) - (ay - oy) * (x - ox) >= 0:
            return False
    return True


_CONTEXT_CACHE: dict = {}


def _context_for(points: PointSet) -> _GeneralContext:
    ctx = _CONTEXT_CACHE.get(points)
    if ctx is None:
        ctx = _GeneralContext(points)
        _CONTEXT_CACHE.clear()
        _CONTEXT_CACHE[points] = ctx
    return ctx


def _try_decomposition(ctx: _GeneralContext, rotation: str, rot_shift: int, parts):
    pocket = ctx.pocket
    pos = 0
    for mask, _fi, _ti, _tup in parts:
        size = mask.bit_count()
        text = rotation[pos:pos + size]
        if (mask & pocket.red_mask).bit_count() != text.count("r"):
            return None
        pos += size
    pos = 0
    assignment = ()
    for mask, fi, ti, tupkey in parts:
        size = mask.bit_count()
        text = rotation[pos:pos + size]
        if tupkey is not None:
            slice_key = ((rot_shift + pos) % len(rotation), size)
            got = ctx.tables.query(pocket, tupkey, mask, slice_key, text, fi, ti)
        else:
            got = pocket.wslice(mask, text, fi, ti)
        if got is None:
            return None
        assignment += got
        pos += size
    return assignment


def _decide_general_ex(points: PointSet, config: Configuration):
    """Full decision; returns (feasible, witness RayFamily or None)."""
    points.require_balanced()
    if len(points) != len(config):
        raise ValueError("point count must equal configuration length")
    if len(points) > 10:
        raise ValueError("decide_general supports at most 10 points")
    if len(points) == 2:
        if config.word == "rb":
            p, q = points[0], points[1]
            fam = RayFamily(
                [Ray(p, Direction(p.x - q.x, p.y - q.y)),
                 Ray(q, Direction(q.x - p.x, q.y - p.y))],
                Regime.PAIRWISE_DISJOINT,
            )
            return True, fam
        return False, None
    pc = position_class(points)
    if pc is PositionClass.COLLINEAR:
        raise ValueError("collinear input: use decide_line")
    if pc is PositionClass.DEGENERATE:
        raise ValueError("degenerate position: use line or oracle methods")
    ctx = _context_for(points)
    pocket = ctx.pocket
    word = config.word
    m = len(word)
    seen_rotations = set()
    for shift in range(m):
        rotation = word[shift:] + word[:shift]
        if rotation in seen_rotations:
            continue
        seen_rotations.add(rotation)
        for ui, right in ctx.separable:
            left = pocket.full_mask ^ right
            nui = pocket.vneg[ui]
            parts = ((right, ui, nui, None), (left, nui, ui, None))
            got = _try_decomposition(ctx, rotation, shift, parts)
            if got is not None:
                return True, _assignment_family(pocket, got)
        for decomp in ctx.decompositions:
            got = _try_decomposition(ctx, rotation, shift, decomp.parts)
            if got is not None:
                return True, _assignment_family(pocket, got)
    return False, None


def _assignment_family(pocket: _Pocket, assignment) -> RayFamily:
    rays = [None] * pocket.n
    for i, di in assignment:
        rays[i] = Ray(pocket.points[i], pocket.V[di])
    assert all(r is not None for r in rays)
    return RayFamily(rays, Regime.NONCROSSING_CANONICAL)


def decide_general(points: PointSet, config: Configuration) -> bool:
    """True iff the configuration is realizable by pairwise-disjoint rays."""
    feasible, _witness = _decide_general_ex(points, config)
    return feasible


# -- exhaustive oracle -----------------------------------------------------------

class ReadingSearch:
    """Exhaustive direction-assignment search walked in reading order.

    Candidate rays are (point, direction) pairs; an allowed pairwise
    classification set defines the regime (non-crossing for the feasibility
    oracle, crossing for the full-crossing search).  Reading keys follow the
    clockwise semantics of the word at infinity: class rank clockwise from
    the anchor class, then decreasing offset, then increasing position along
    the shared direction.  Positions of a family are totally ordered by that
    key, so every family is visited along exactly one placement order and the
    target word prunes prefixes.

    Domains are kept per point as direction bitmasks, so dead points surface
    immediately while the domains are narrowed.
    """

    def __init__(self, points: PointSet, directions, allowed_classes):
        points.require_balanced()
        self.points = points
        self.n = n = len(points)
        pts = points.points
        V = tuple(sorted(set(directions), key=ccw_key))
        self.V = V
        self.nv = nv = len(V)
        scale = lcm(*(c.denominator for p in pts for c in p.xy))
        xy = [(int(p.x * scale), int(p.y * scale)) for p in pts]
        vt = [(d.dx, d.dy) for d in V]
        self.colors = [p.color.letter for p in pts]
        self.color_points = {
            "r": [i for i in range(n) if self.colors[i] == "r"],
            "b": [i for i in range(n) if self.colors[i] == "b"],
        }
        rows = [[[0] * n for _ in range(nv)] for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                rows_i = rows[i]
                rows_j = rows[j]
                for a in range(nv):
                    ra = rows_i[a]
                    for b in range(nv):
                        if classify_vec(xy[i], vt[a], xy[j], vt[b]) in allowed_classes:
                            ra[j] |= 1 << b
                            rows_j[b][i] |= 1 << a
        self.rows = rows
        self.off = [
            [vt[a][0] * xy[i][1] - vt[a][1] * xy[i][0] for a in range(nv)]
            for i in range(n)
        ]
        self.alo = [
            [vt[a][0] * xy[i][0] + vt[a][1] * xy[i][1] for a in range(nv)]
            for i in range(n)
        ]
        self.full_dir = (1 << nv) - 1
        self._tables_cache = {}

    def _root_tables(self, anchor_class: int):
        """Rank of each class and suffix masks of classes at rank >= r."""
        got = self._tables_cache.get(anchor_class)
        if got is not None:
            return got
        nv = self.nv
        rank_of = [0] * nv
        for c in range(nv):
            rank_of[c] = (anchor_class - c) % nv
        suffix = [0] * (nv + 1)
        for r in range(nv - 1, -1, -1):
            suffix[r] = suffix[r + 1] | (1 << ((anchor_class - r) % nv))
        self._tables_cache[anchor_class] = (rank_of, suffix)
        return rank_of, suffix

    def _roots(self, word: str):
        n = self.n
        rotations = sorted({word[s:] + word[:s] for s in range(len(word))})
        for rot in rotations:
            for i0 in self.color_points[rot[0]]:
                rows_i0 = self.rows[i0]
                for a0 in range(self.nv):
                    row = rows_i0[a0]
                    if any(row[j] == 0 for j in range(n) if j != i0):
                        continue
                    yield rot, i0, a0

    def first_assignment(self, word: str):
        """The first assignment realizing the word, or None."""
        for rot, i0, a0 in self._roots(word):
            rank_of, suffix = self._root_tables(a0)
            doms = self.rows[i0][a0]
            tail = self._extend_first(
                rot, 1, a0, 0, self.off[i0][a0], self.alo[i0][a0],
                1 << i0, doms, rank_of, suffix,
            )
            if tail is not None:
                chosen = ((i0, a0),) + tail
                return {i: self.V[a] for i, a in chosen}
        return None

    def readable(self, word: str) -> bool:
        return self.first_assignment(word) is not None

    def assignments(self, word: str):
        """Yield every assignment (point -> direction) reading as the word."""
        seen = set()
        for rot, i0, a0 in self._roots(word):
            rank_of, suffix = self._root_tables(a0)
            doms = self.rows[i0][a0]
            for tail in self._extend_all(
                rot, 1, a0, 0, self.off[i0][a0], self.alo[i0][a0],
                1 << i0, doms, rank_of, suffix,
            ):
                chosen = ((i0, a0),) + tail
                key = frozenset(chosen)
                if key in seen:
                    continue
                seen.add(key)
                yield {i: self.V[a] for i, a in chosen}

    def _extend_first(self, rot, level, prev_a, prev_rank, prev_off, prev_alo,
                      used, doms, rank_of, suffix):
        if level == self.n:
            return ()
        n = self.n
        rows = self.rows
        remaining = [j2 for j2 in range(n) if not (used >> j2) & 1]
        for j in self.color_points[rot[level]]:
            if (used >> j) & 1:
                continue
            cands = doms[j]
            off_j = self.off[j]
            alo_j = self.alo[j]
            rows_j = rows[j]
            others = [j2 for j2 in remaining if j2 != j]
            while cands:
                low = cands & -cands
                a = low.bit_length() - 1
                cands ^= low
                if a == prev_a:
                    if off_j[a] > prev_off or (
                        off_j[a] == prev_off and alo_j[a] <= prev_alo
                    ):
                        continue
                    rank = prev_rank
                    mask = None
                else:
                    rank = rank_of[a]
                    mask = suffix[rank]
                row = rows_j[a]
                nxt = list(doms)
                dead = False
                if mask is None:
                    for j2 in others:
                        d2 = nxt[j2] & row[j2]
                        if d2 == 0:
                            dead = True
                            break
                        nxt[j2] = d2
                else:
                    for j2 in others:
                        d2 = nxt[j2] & row[j2] & mask
                        if d2 == 0:
                            dead = True
                            break
                        nxt[j2] = d2
                if dead:
                    continue
                tail = self._extend_first(
                    rot, level + 1, a, rank, off_j[a], alo_j[a],
                    used | (1 << j), nxt, rank_of, suffix,
                )
                if tail is not None:
                    return ((j, a),) + tail
        return None

    def _extend_all(self, rot, level, prev_a, prev_rank, prev_off, prev_alo,
                    used, doms, rank_of, suffix):
        if level == self.n:
            yield ()
            return
        n = self.n
        rows = self.rows
        for j in self.color_points[rot[level]]:
            if (used >> j) & 1:
                continue
            cands = doms[j]
            off_j = self.off[j]
            alo_j = self.alo[j]
            rows_j = rows[j]
            while cands:
                low = cands & -cands
                a = low.bit_length() - 1
                cands ^= low
                if a == prev_a:
                    if off_j[a] > prev_off or (
                        off_j[a] == prev_off and alo_j[a] <= prev_alo
                    ):
                        continue
                    rank = prev_rank
                    mask = None
                else:
                    rank = rank_of[a]
                    mask = suffix[rank]
                row = rows_j[a]
                used2 = used | (1 << j)
                nxt = list(doms)
                dead = False
                for j2 in range(n):
                    if (used2 >> j2) & 1:
                        continue
                    d2 = nxt[j2] & row[j2]
                    if mask is not None:
                        d2 &= mask
                    if d2 == 0:
                        dead = True
                        break
                    nxt[j2] = d2
                if dead:
                    continue
                for tail in self._extend_all(
                    rot, level + 1, a, rank, off_j[a], alo_j[a],
                    used2, nxt, rank_of, suffix,
                ):
                    yield ((j, a),) + tail



def general_oracle(points: PointSet) -> set:
    """Exact feasible set for tiny inputs by exhausting V assignments.

    Realizability by pairwise-disjoint rays is equivalent to realizability by
    non-crossing rays with directions in the difference set V, so a complete
    search over V assignments is exact.  The search walks assignments in
    clockwise reading order, which lets the target word prune prefixes; the
    enumerated space is the same as the naive per-point product.
    """
    points.require_balanced()
    n = len(points)
    if n > 6:
        raise ValueError("general_oracle supports at most 6 points")
    ctx = ReadingSearch(points, canonical_directions(points), NONCROSSING_CLASSES)
    return {
        c for c in enumerate_configurations(n // 2) if ctx.readable(c.word)
    }


def _general_oracle_naive(points: PointSet) -> set:
    """Literal product enumeration with pairwise pruning; for cross-checks."""
    points.require_balanced()
    n = len(points)
    V = canonical_directions(points)
    pts = points.points
    scale = lcm(*(c.denominator for p in pts for c in p.xy))
    xy = tuple((int(p.x * scale), int(p.y * scale)) for p in pts)
    vt = [(d.dx, d.dy) for d in V]
    nv = len(V)
    compat = {}
    for i in range(n):
        for j in range(i + 1, n):
            for a in range(nv):
                mask = 0
                for b in range(nv):
                    if classify_vec(xy[i], vt[a], xy[j], vt[b]) in NONCROSSING_CLASSES:
                        mask |= 1 << b
                compat[(i, j, a)] = mask
    full = (1 << nv) - 1
    words = set()
    chosen = [0] * n

    def search(level, domains):
        if level == n:
            fam = RayFamily(Ray(pts[i], V[chosen[i]]) for i in range(n))
            words.add(configuration_at_infinity(fam))
            return
        dom = domains[level]
        while dom:
            bit = dom & -dom
            a = bit.bit_length() - 1
            dom ^= bit
            chosen[level] = a
            nxt = list(domains)
            ok = True
            for j in range(level + 1, n):
                nxt[j] &= compat[(level, j, a)]
                if nxt[j] == 0:
                    ok = False
                    break
            if ok:
                search(level + 1, nxt)

    search(0, [full] * n)
    return words


class GammaMethod(enum.Enum):
    ORACLE = "oracle"
    DP = "dp"


def gamma(points: PointSet, method: GammaMethod = GammaMethod.ORACLE) -> int:
    """Number of distinct feasible configurations from the point set."""
    points.require_balanced()
    n2 = len(points)
    if method is GammaMethod.ORACLE:
        if n2 > 6:
            raise ValueError("gamma via oracle supports at most 6 points")
        return len(general_oracle(points))
    if n2 > 8:
        raise ValueError("gamma via dp supports at most 8 points")
    return sum(
        1 for c in enumerate_configurations(n2 // 2) if decide_general(points, c)
    )
