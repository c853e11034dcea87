"""
Permutations of {1, ..., m} in one-line notation.

A permutation w is stored as a tuple (w(1), ..., w(m)).  Throughout the
package m = n + 1 where n is the rank of the ambient algebra, so the
symmetric group acting here is S_{n+1}.

Inversions, descents and ascents are all normalised as pairs (p, q) with
p < q:

- (p, q) is an *inversion* of w when q appears before p in the word;
- (p, q) is a *descent* when q is immediately followed by p;
- (p, q) is an *ascent* when p is immediately followed by q.

Every adjacent position contributes either a descent or an ascent, so
|descents| + |ascents| = m - 1.  The weak order compares inversion sets by
containment.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, NamedTuple, Sequence

Word = tuple[int, ...]


class PermStats(NamedTuple):
    inversions: frozenset[tuple[int, int]]
    descents: frozenset[tuple[int, int]]
    ascents: frozenset[tuple[int, int]]


def is_permutation_word(word: Sequence[int]) -> bool:
    """
    Check that word is a permutation of {1, ..., m} with m = len(word).

    >>> [is_permutation_word(w) for w in [(), (1,), (2, 1, 3), (1, 1, 2), (0, 1)]]
    [True, True, True, False, False]
    """
    return sorted(word) == list(range(1, len(word) + 1))


def validate_word(word: Sequence[int]) -> Word:
    """Return word as a tuple, raising ValueError if it is not a permutation."""
    w = tuple(word)
    if not is_permutation_word(w):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w!r}")
    return w


def identity_word(m: int) -> Word:
    """
    >>> identity_word(4)
    (1, 2, 3, 4)
    """
    return tuple(range(1, m + 1))


def longest_word(m: int) -> Word:
    """
    The longest element of S_m, i.e. the decreasing word.

    >>> longest_word(4)
    (4, 3, 2, 1)
    """
    return tuple(range(m, 0, -1))


def symmetric_group(m: int) -> Iterator[Word]:
    """All permutations of {1, ..., m} in lexicographic order."""
    return itertools.permutations(range(1, m + 1))


def inversions(word: Sequence[int]) -> frozenset[tuple[int, int]]:
    """
    >>> sorted(inversions((2, 1, 3)))
    [(1, 2)]
    >>> sorted(inversions((3, 2, 1)))
    [(1, 2), (1, 3), (2, 3)]
    """
    return frozenset(
        (word[j], word[i])
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[i] > word[j]
    )


def descents(word: Sequence[int]) -> frozenset[tuple[int, int]]:
    """
    >>> sorted(descents((5, 3, 4, 1, 2)))
    [(1, 4), (3, 5)]
    """
    return frozenset(
        (word[i + 1], word[i]) for i in range(len(word) - 1) if word[i] > word[i + 1]
    )


def ascents(word: Sequence[int]) -> frozenset[tuple[int, int]]:
    """
    >>> sorted(ascents((5, 3, 4, 1, 2)))
    [(1, 2), (3, 4)]
    """
    return frozenset(
        (word[i], word[i + 1]) for i in range(len(word) - 1) if word[i] < word[i + 1]
    )


def perm_stats(word: Sequence[int]) -> PermStats:
    """
    Inversions, descents and ascents of a permutation, all as (p, q) with p < q.

    >>> stats = perm_stats((2, 1, 3))
    >>> (sorted(stats.inversions), sorted(stats.descents), sorted(stats.ascents))
    ([(1, 2)], [(1, 2)], [(1, 3)])
    """
    w = validate_word(word)
    return PermStats(inversions(w), descents(w), ascents(w))


def weak_leq(u: Sequence[int], w: Sequence[int]) -> bool:
    """
    The weak order: u <= w iff inv(u) is contained in inv(w).

    >>> weak_leq((2, 1, 3), (2, 3, 1))
    True
    >>> weak_leq((3, 2, 1), (1, 2, 3))
    False
    """
    u, w = validate_word(u), validate_word(w)
    if len(u) != len(w):
        raise ValueError("permutations of different sizes are incomparable")
    return inversions(u) <= inversions(w)


def is_weak_cover(u: Sequence[int], w: Sequence[int]) -> bool:
    """True when w covers u in the weak order (one extra inversion)."""
    u, w = validate_word(u), validate_word(w)
    if len(u) != len(w):
        raise ValueError("permutations of different sizes are incomparable")
    iu, iw = inversions(u), inversions(w)
    return iu <= iw and len(iw - iu) == 1
