"""
Tiny dense linear algebra over a prime field F_p, on numpy integer arrays.

Matrices are int64 arrays with entries reduced into [0, p).  Everything here
is exact; p must be prime so that nonzero pivots are invertible.
"""
from __future__ import annotations

import numpy as np


class LinAlgError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def validate_char(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"field characteristic must be prime: {p}")
    return p


def mod(a: np.ndarray, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    r = mod(a, p).copy()
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        support = np.nonzero(r[row:, col])[0]
        if support.size == 0:
            continue
        lead = row + int(support[0])
        if lead != row:
            r[[row, lead]] = r[[lead, row]]
        inv = pow(int(r[row, col]), p - 2, p)
        r[row] = (r[row] * inv) % p
        for other in range(rows):
            if other != row and r[other, col]:
                r[other] = (r[other] - r[other, col] * r[row]) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a: np.ndarray, p: int) -> int:
    if 0 in a.shape:
        return 0
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """A matrix whose columns form a basis of ker(a)."""
    rows, cols = a.shape
    if cols == 0:
        return zeros(0, 0)
    if rows == 0:
        return eye(cols)
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros(cols, len(free))
    for j, c in enumerate(free):
        basis[c, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = (-r[i, c]) % p
    return basis


def column_space(a: np.ndarray, p: int) -> np.ndarray:
    """A matrix whose columns form a basis of the column space of a."""
    if 0 in a.shape:
        return zeros(a.shape[0], 0)
    _, pivots = rref(a, p)
    return mod(a[:, pivots], p)


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """One solution X of a X = b, or raise LinAlgError when inconsistent."""
    rows, cols = a.shape
    b = mod(b, p)
    if b.shape[0] != rows:
        raise LinAlgError("shape mismatch")
    if cols == 0:
        if np.any(b):
            raise LinAlgError("inconsistent system")
        return zeros(0, b.shape[1])
    aug = np.concatenate([mod(a, p), b], axis=1)
    r, pivots = rref(aug, p)
    if any(c >= cols for c in pivots):
        raise LinAlgError("inconsistent system")
    x = zeros(cols, b.shape[1])
    for i, c in enumerate(pivots):
        x[c] = r[i, cols:]
    return x


def is_invertible(a: np.ndarray, p: int) -> bool:
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]


def complement_projection(basis: np.ndarray, dim: int, p: int) -> np.ndarray:
    """
    A surjection q: F_p^dim -> F_p^(dim - rank) with kernel the column space
    of ``basis``.
    """
    if basis.shape[1] == 0:
        return eye(dim)
    _, pivots = rref(basis.T, p)  # pivot coordinates of the subspace
    free = [i for i in range(dim) if i not in pivots]
    # Full change of basis sending (subspace basis | complementary unit
    # vectors) to the standard basis; q keeps the complementary coordinates.
    full = np.concatenate([basis, eye(dim)[:, free]], axis=1)
    inverse = solve(full, eye(dim), p)
    return inverse[basis.shape[1] :, :]
