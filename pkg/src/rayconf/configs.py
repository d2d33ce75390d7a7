"""Balanced cyclic two-color words: canonical form, blocks, counting.

A configuration is a cyclic word over {r, b} with equally many r's and b's,
stored as its lexicographically minimal rotation under r < b.  That rotation
always starts with 'r' and ends with 'b'.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

ALPHABET = ("r", "b")


def _validate_word(word: str) -> str:
    word = word.lower()
    if not word:
        raise ValueError("configuration word must be nonempty")
    if any(ch not in ALPHABET for ch in word):
        raise ValueError(f"configuration word must use letters r/b: {word!r}")
    if word.count("r") != word.count("b"):
        raise ValueError(f"configuration word must be balanced: {word!r}")
    return word


def _min_rotation(word: str) -> str:
    """Booth's least-rotation algorithm (r < b by ASCII luck: 'b' < 'r'...).

    ASCII order has 'b' < 'r', which is the wrong way around, so the word is
    mapped to digits with r -> '0', b -> '1' first.
    """
    s = word.replace("r", "0").replace("b", "1")
    s2 = s + s
    n = len(s)
    f = [-1] * len(s2)
    k = 0
    for j in range(1, len(s2)):
        sj = s2[j]
        i = f[j - k - 1]
        while i != -1 and sj != s2[k + i + 1]:
            if sj < s2[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s2[k + i + 1]:
            if sj < s2[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return word[k:] + word[:k]


@dataclass(frozen=True)
class Configuration:
    """A balanced cyclic word held in canonical rotation."""

    word: str

    def __post_init__(self):
        word = _validate_word(self.word)
        if word != _min_rotation(word):
            raise ValueError(f"word {word!r} is not in canonical rotation")
        object.__setattr__(self, "word", word)

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return self.word

    def rotations(self) -> list[str]:
        w = self.word
        return [w[i:] + w[:i] for i in range(len(w))]

    def alternation_number(self) -> int:
        return to_blocks(self).k


def canonicalize(raw: str) -> Configuration:
    """Canonical representative of the rotation orbit of a balanced word."""
    return Configuration(_min_rotation(_validate_word(raw)))


@dataclass(frozen=True)
class BlockTuple:
    """Monochromatic block lengths (r_1, b_1, ..., r_k, b_k)."""

    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(int(b) for b in self.blocks)
        if len(blocks) == 0 or len(blocks) % 2 != 0:
            raise ValueError("block tuple must have even positive length")
        if any(b < 1 for b in blocks):
            raise ValueError("all blocks must be nonempty")
        if sum(blocks[0::2]) != sum(blocks[1::2]):
            raise ValueError("red and blue block sums must agree")
        object.__setattr__(self, "blocks", blocks)

    @property
    def k(self) -> int:
        return len(self.blocks) // 2


def to_blocks(config: Configuration) -> BlockTuple:
    """Block view of the canonical word (starts red, ends blue)."""
    word = config.word
    runs = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        runs.append(j - i)
        i = j
    return BlockTuple(tuple(runs))


def from_blocks(blocks: BlockTuple) -> Configuration:
    word = "".join(
        ("r" if i % 2 == 0 else "b") * size for i, size in enumerate(blocks.blocks)
    )
    return canonicalize(word)


def _totient(m: int) -> int:
    result = m
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def count_configurations(n: int) -> int:
    """Number of balanced binary necklaces of length 2n.

    Burnside over the rotation group: (1/2n) * sum over d | n of
    phi(d) * C(2n/d, n/d).
    """
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _totient(d) * math.comb(2 * n // d, n // d)
    assert total % (2 * n) == 0
    return total // (2 * n)


def enumerate_configurations(n: int) -> list[Configuration]:
    """All canonical configurations with n letters of each color, sorted.

    Enumerates the C(2n, n) balanced words as bitmasks and keeps one
    representative per rotation orbit; fine for the supported n <= 12.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > 12:
        raise ValueError("enumerate_configurations supports n <= 12")
    length = 2 * n
    full = (1 << length) - 1
    canonical_masks = set()
    for blue_positions in combinations(range(length), n):
        mask = 0
        for pos in blue_positions:
            mask |= 1 << pos
        best = mask
        m = mask
        for _ in range(length - 1):
            m = ((m << 1) | (m >> (length - 1))) & full
            if m < best:
                best = m
        canonical_masks.add(best)
    words = []
    for mask in canonical_masks:
        word = "".join("b" if (mask >> i) & 1 else "r" for i in range(length))
        words.append(_min_rotation(word))
    words = sorted(set(words))
    assert len(words) == len(canonical_masks)
    return [Configuration(w) for w in words]
