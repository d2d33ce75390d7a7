"""Shooting-type sequences: forbidden-substring counts and realizations.

From alternating collinear pairs (red then blue), each pair shoots its two
vertical rays one of four ways; a type sequence induces the up word u and
the down word d, and the circle reads u followed by reversed d.  Sequences
avoiding 12, 14, 132, 134, 432, 434 are pairwise nonequivalent, which any
growth-rate argument needs.
"""

from __future__ import annotations

from .configs import Configuration, canonicalize
from .geom import BLUE, Direction, Point, PointSet, RED
from .rays import Ray, RayFamily, Regime, configuration_at_infinity

ALPHABET = "1234"
FORBIDDEN = ("12", "14", "132", "134", "432", "434")


def _normalize(sigma) -> str:
    if not isinstance(sigma, str):
        sigma = "".join(str(int(s)) for s in sigma)
    if not sigma or any(ch not in ALPHABET for ch in sigma):
        raise ValueError(f"type sequence must be nonempty over 1-4: {sigma!r}")
    return sigma


def is_admissible(sigma) -> bool:
    sigma = _normalize(sigma)
    return not any(bad in sigma for bad in FORBIDDEN)


def count_sigma(n: int) -> int:
    """Admissible sequences of length n, by the split linear recurrence.

    h1 and h3 reattach freely to any shorter sequence; a trailing 2 (or 4 by
    symmetry) forbids a previous 1 and restricts a previous 3.  The transfer
    matrix [[2,2,0,0],[0,2,1,1],[1,0,0,0],[0,1,0,0]] recomputes the same
    values as a cross-check.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 4
    if n == 2:
        return 14
    h1 = [0, 1, 4]
    h2 = [0, 1, 3]
    for m in range(3, n + 1):
        h1.append(2 * h1[m - 1] + 2 * h2[m - 1])
        h2.append(2 * h2[m - 1] + h1[m - 2] + h2[m - 2])
    state = (h1[2], h2[2], h1[1], h2[1])
    matrix = ((2, 2, 0, 0), (0, 2, 1, 1), (1, 0, 0, 0), (0, 1, 0, 0))
    for _ in range(n - 2):
        state = tuple(sum(r * s for r, s in zip(row, state)) for row in matrix)
    assert state[0] == h1[n] and state[1] == h2[n]
    return 2 * h1[n] + 2 * h2[n]


def enumerate_sigma(n: int) -> list[str]:
    """All admissible sequences of length n, lexicographic."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > 12:
        raise ValueError("enumerate_sigma supports n <= 12")
    out = []

    def grow(prefix: str):
        if len(prefix) == n:
            out.append(prefix)
            return
        for ch in ALPHABET:
            cand = prefix + ch
            tail = cand[-3:]
            if any(tail.endswith(bad) for bad in FORBIDDEN):
                continue
            grow(cand)

    grow("")
    return out


def count_sigma_prime(n: int) -> int:
    """Sequences over {1,2} with no triple repeat: the Fibonacci recurrence
    f(n) = f(n-1) + f(n-2) with f(1) = 2, f(2) = 4."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 2
    a, b = 2, 4
    for _ in range(n - 2):
        a, b = b, a + b
    return b


def _count_sigma_prime_brute(n: int) -> int:
    total = 0
    stack = [""]
    while stack:
        prefix = stack.pop()
        if len(prefix) == n:
            total += 1
            continue
        for ch in "12":
            cand = prefix + ch
            if cand.endswith("111") or cand.endswith("222"):
                continue
            stack.append(cand)
    return total


def ud_map(sigma) -> tuple[str, str]:
    """The up word and down word induced by a type sequence.

    Per pair, left to right: type 1 sends both rays up, type 2 both down,
    type 3 the red up and the blue down, type 4 the reverse.
    """
    sigma = _normalize(sigma)
    up = []
    down = []
    for ch in sigma:
        if ch == "1":
            up.append("rb")
        elif ch == "2":
            down.append("rb")
        elif ch == "3":
            up.append("r")
            down.append("b")
        else:
            up.append("b")
            down.append("r")
    return "".join(up), "".join(down)


def concatenated_word(sigma) -> Configuration:
    """canonicalize(u followed by reversed d): the predicted circle word."""
    u, d = ud_map(sigma)
    return canonicalize(u + d[::-1])


def vertical_realize(sigma) -> tuple[PointSet, RayFamily, Configuration]:
    """Geometric realization: alternating collinear pairs, vertical rays.

    Returns the point set, the family, and the configuration actually read
    at infinity (which must agree with the concatenation rule).
    """
    sigma = _normalize(sigma)
    if len(sigma) > 10:
        raise ValueError("vertical_realize supports n <= 10")
    up = Direction(0, 1)
    down = Direction(0, -1)
    points = []
    rays = []
    for i, ch in enumerate(sigma):
        red = Point(2 * i + 1, 0, RED)
        blue = Point(2 * i + 2, 0, BLUE)
        points.extend((red, blue))
        if ch == "1":
            rays.append(Ray(red, up))
            rays.append(Ray(blue, up))
        elif ch == "2":
            rays.append(Ray(red, down))
            rays.append(Ray(blue, down))
        elif ch == "3":
            rays.append(Ray(red, up))
            rays.append(Ray(blue, down))
        else:
            rays.append(Ray(red, down))
            rays.append(Ray(blue, up))
    family = RayFamily(rays, Regime.PAIRWISE_DISJOINT)
    return PointSet(points), family, configuration_at_infinity(family)


def nonequivalence_check(n: int) -> dict:
    """Do all admissible sequences of length n induce distinct (u, d) pairs?"""
    if n > 8:
        raise ValueError("nonequivalence_check supports n <= 8")
    seqs = enumerate_sigma(n)
    pairs = {ud_map(s) for s in seqs}
    return {"length": n, "sequences": len(seqs), "distinct_pairs": len(pairs),
            "ok": len(pairs) == len(seqs)}
