from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from rayconf import (
    BlockTuple,
    Configuration,
    canonicalize,
    count_configurations,
    enumerate_configurations,
    from_blocks,
    to_blocks,
)


def brute_orbit_count(n):
    """Independent necklace count: canonical bitmask per rotation orbit."""
    length = 2 * n
    full = (1 << length) - 1
    seen = set()
    for blues in combinations(range(length), n):
        mask = sum(1 << b for b in blues)
        best = mask
        m = mask
        for _ in range(length - 1):
            m = ((m << 1) | (m >> (length - 1))) & full
            best = min(best, m)
        seen.add(best)
    return len(seen)


def test_canonicalize_examples():
    assert canonicalize("brrb").word == "rrbb"
    assert canonicalize("rb").word == "rb"
    assert canonicalize("rbrb").word == "rbrb"


def test_canonicalize_rejects_bad_words():
    with pytest.raises(ValueError):
        canonicalize("rrb")
    with pytest.raises(ValueError):
        canonicalize("")
    with pytest.raises(ValueError):
        canonicalize("rx")
    with pytest.raises(ValueError):
        Configuration("brrb")  # not canonical


@given(st.integers(1, 5), st.data())
def test_canonicalize_constant_on_rotations(n, data):
    word = data.draw(st.permutations("r" * n + "b" * n))
    word = "".join(word)
    canon = canonicalize(word)
    for j in range(2 * n):
        rotated = word[j:] + word[:j]
        assert canonicalize(rotated) == canon


def test_canonical_starts_red_ends_blue():
    for c in enumerate_configurations(4):
        assert c.word[0] == "r" and c.word[-1] == "b"


def test_block_examples():
    assert to_blocks(canonicalize("rrbb")).blocks == (2, 2)
    assert to_blocks(canonicalize("rbrb")).blocks == (1, 1, 1, 1)
    assert to_blocks(canonicalize("rbrb")).k == 2
    assert from_blocks(BlockTuple((2, 1, 1, 2))) == canonicalize("rrbrbb")


def test_blocks_round_trip():
    for c in enumerate_configurations(5):
        assert from_blocks(to_blocks(c)) == c


def test_block_tuple_validation():
    with pytest.raises(ValueError):
        BlockTuple((2, 1))
    with pytest.raises(ValueError):
        BlockTuple((1, 0, 1, 2))
    with pytest.raises(ValueError):
        BlockTuple(())


def test_count_examples():
    assert [count_configurations(n) for n in range(1, 7)] == [1, 2, 4, 10, 26, 80]


def test_count_matches_brute_force():
    for n in range(1, 8):
        assert count_configurations(n) == brute_orbit_count(n)


def test_count_bounds():
    for n in range(1, 13):
        gamma = count_configurations(n)
        assert comb(2 * n, n) // (2 * n) <= gamma <= comb(2 * n, n)


def test_enumerate_examples():
    assert [c.word for c in enumerate_configurations(1)] == ["rb"]
    assert {c.word for c in enumerate_configurations(2)} == {"rrbb", "rbrb"}
    words3 = {c.word for c in enumerate_configurations(3)}
    assert len(words3) == 4 and {"rrrbbb", "rbrbrb"} <= words3


def test_enumerate_matches_count():
    for n in range(1, 8):
        assert len(enumerate_configurations(n)) == count_configurations(n)


def test_enumerate_sorted_deterministic():
    words = [c.word for c in enumerate_configurations(5)]
    assert words == sorted(words)


def test_alternation_number():
    assert canonicalize("rrbb").alternation_number() == 1
    assert canonicalize("rbrbrb").alternation_number() == 3
