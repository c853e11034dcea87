import itertools

import pytest

from brickyard.permutations import (
    ascents,
    descents,
    identity_word,
    inversions,
    is_weak_cover,
    longest_word,
    perm_stats,
    symmetric_group,
    validate_word,
    weak_leq,
)


def test_stats_213():
    stats = perm_stats((2, 1, 3))
    assert stats.inversions == {(1, 2)}
    assert stats.descents == {(1, 2)}
    assert stats.ascents == {(1, 3)}


def test_stats_53412():
    stats = perm_stats((5, 3, 4, 1, 2))
    assert stats.ascents == {(1, 2), (3, 4)}
    assert stats.descents == {(3, 5), (1, 4)}


def test_stats_identity():
    for m in range(1, 7):
        stats = perm_stats(identity_word(m))
        assert stats.inversions == frozenset()
        assert stats.descents == frozenset()
        assert stats.ascents == {(i, i + 1) for i in range(1, m)}


def test_descents_plus_ascents_is_n():
    for w in symmetric_group(5):
        assert len(descents(w)) + len(ascents(w)) == 4


def test_validate_word_rejects():
    with pytest.raises(ValueError):
        validate_word((1, 1, 2))
    with pytest.raises(ValueError):
        validate_word((0, 1, 2))


def test_weak_leq_examples():
    assert weak_leq((2, 1, 3), (2, 3, 1))
    assert weak_leq((3, 2, 1), (3, 2, 1))
    assert not weak_leq((3, 2, 1), (1, 2, 3))


def test_weak_leq_size_mismatch():
    with pytest.raises(ValueError):
        weak_leq((1, 2), (1, 2, 3))


def test_weak_order_is_partial_order():
    words = list(symmetric_group(4))
    for u in words:
        assert weak_leq(u, u)
    for u, w in itertools.permutations(words, 2):
        if weak_leq(u, w) and weak_leq(w, u):
            assert u == w
    for u, v, w in itertools.product(words, repeat=3):
        if weak_leq(u, v) and weak_leq(v, w):
            assert weak_leq(u, w)


def test_s3_hasse_diagram():
    # Six elements, six cover relations, exactly the edges of the rank-2
    # weak order: 123 < 213, 132; 213 < 231; 132 < 312; 231, 312 < 321.
    words = list(symmetric_group(3))
    covers = {
        (u, w) for u, w in itertools.permutations(words, 2) if is_weak_cover(u, w)
    }
    expected = {
        ((1, 2, 3), (2, 1, 3)),
        ((1, 2, 3), (1, 3, 2)),
        ((2, 1, 3), (2, 3, 1)),
        ((1, 3, 2), (3, 1, 2)),
        ((2, 3, 1), (3, 2, 1)),
        ((3, 1, 2), (3, 2, 1)),
    }
    assert covers == expected


def test_longest_word_inversions():
    w = longest_word(4)
    assert len(inversions(w)) == 6
