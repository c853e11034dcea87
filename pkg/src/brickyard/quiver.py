"""
Quiver representations with relations over a prime field: the linear-algebra
oracle for Hom, Ext^1, extensions and factorizations.

Two presets are provided:

- ``ra_presentation(n)``: the gentle algebra RA_n, arrows a_i: i -> i+1 and
  a_i*: i+1 -> i with every 2-cycle a relation;
- ``d4_presentation()``: the D4 preprojective algebra, central vertex 1,
  leaves 2, 3, 4, arrows a_i: i -> 1 and a_i*: 1 -> i, the 2-cycle at each
  leaf a relation, and the sum of the three 2-cycles at the center a
  relation.

Relation paths are written in application order: ("a1", "a1*") is the map
first a_1, then a_1*, i.e. the cycle based at vertex 1.  Both presets list a
minimal generating set of relations, which is what makes the three-term
complex below compute Ext^1.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
import random
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from . import linalg
from .linalg import LinAlgError, validate_char
from .strings import DOWN, StringBrick

DEFAULT_CHAR = 101


class Arrow(NamedTuple):
    name: str
    source: int
    target: int


Relation = tuple[tuple[int, tuple[str, ...]], ...]


class CocycleError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class AlgebraPresentation:
    name: str
    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Relation, ...]

    def __post_init__(self) -> None:
        by_name = {a.name: a for a in self.arrows}
        if len(by_name) != len(self.arrows):
            raise ValueError("arrow names must be distinct")
        for rel in self.relations:
            if len({self.path_endpoints(path) for _, path in rel}) != 1:
                raise ValueError(f"relation terms with mixed endpoints: {rel}")
            if any(len(path) < 2 for _, path in rel):
                raise ValueError("relations must lie in paths of length >= 2")

    @functools.cached_property
    def arrow_by_name(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def path_endpoints(self, path: tuple[str, ...]) -> tuple[int, int]:
        arrows = [self.arrow_by_name[x] for x in path]
        for first, second in itertools.pairwise(arrows):
            if first.target != second.source:
                raise ValueError(f"path does not compose: {path}")
        return arrows[0].source, arrows[-1].target

    def vertex_index(self, v: int) -> int:
        return self.vertices.index(v)


@functools.lru_cache(maxsize=None)
def ra_presentation(n: int) -> AlgebraPresentation:
    if n < 1:
        raise ValueError("RA_n needs n >= 1")
    arrows = []
    relations = []
    for i in range(1, n):
        arrows.append(Arrow(f"a{i}", i, i + 1))
        arrows.append(Arrow(f"a{i}*", i + 1, i))
        relations.append(((1, (f"a{i}", f"a{i}*")),))
        relations.append(((1, (f"a{i}*", f"a{i}")),))
    return AlgebraPresentation(f"RA{n}", tuple(range(1, n + 1)), tuple(arrows), tuple(relations))


@functools.lru_cache(maxsize=None)
def d4_presentation() -> AlgebraPresentation:
    arrows = []
    leaf_cycles = []
    center_terms = []
    for i in (2, 3, 4):
        arrows.append(Arrow(f"a{i}", i, 1))
        arrows.append(Arrow(f"a{i}*", 1, i))
        leaf_cycles.append(((1, (f"a{i}", f"a{i}*")),))
        center_terms.append((1, (f"a{i}*", f"a{i}")))
    relations = tuple(leaf_cycles) + (tuple(center_terms),)
    return AlgebraPresentation("PiD4", (1, 2, 3, 4), tuple(arrows), relations)


class Representation:
    """
    A representation of a bound quiver over F_p: one dimension per vertex and
    one matrix per arrow, every relation evaluating to zero.

    ``maps[name]`` has shape (dim target, dim source).
    """

    def __init__(
        self,
        algebra: AlgebraPresentation,
        p: int,
        dims: Sequence[int],
        maps: Optional[dict[str, np.ndarray]] = None,
        check: bool = True,
    ) -> None:
        self.algebra = algebra
        self.p = validate_char(p)
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != len(algebra.vertices):
            raise ValueError("one dimension per vertex is required")
        if any(d < 0 for d in self.dims):
            raise ValueError("dimensions must be nonnegative")
        self.maps = {}
        maps = maps or {}
        for arrow in algebra.arrows:
            shape = (self.dim_at(arrow.target), self.dim_at(arrow.source))
            mat = maps.get(arrow.name)
            mat = linalg.zeros(*shape) if mat is None else linalg.mod(np.asarray(mat), p)
            if mat.shape != shape:
                raise ValueError(f"map for {arrow.name} has shape {mat.shape}, wanted {shape}")
            self.maps[arrow.name] = mat
        if check:
            self.assert_relations()

    def dim_at(self, vertex: int) -> int:
        return self.dims[self.algebra.vertex_index(vertex)]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def path_matrix(self, path: tuple[str, ...]) -> np.ndarray:
        src, _ = self.algebra.path_endpoints(path)
        mat = linalg.eye(self.dim_at(src))
        for name in path:
            mat = linalg.matmul(self.maps[name], mat, self.p)
        return mat

    def relation_value(self, rel: Relation) -> np.ndarray:
        src, tgt = self.algebra.path_endpoints(rel[0][1])
        total = linalg.zeros(self.dim_at(tgt), self.dim_at(src))
        for coeff, path in rel:
            total = (total + coeff * self.path_matrix(path)) % self.p
        return total

    def satisfies_relations(self) -> bool:
        return all(not self.relation_value(rel).any() for rel in self.algebra.relations)

    def assert_relations(self) -> None:
        for rel in self.algebra.relations:
            if self.relation_value(rel).any():
                raise ValueError(f"relation {rel} fails on the representation")

    def __repr__(self) -> str:
        return f"Representation({self.algebra.name}, dims={self.dims})"


def simple_rep(algebra: AlgebraPresentation, vertex: int, p: int) -> Representation:
    dims = [1 if v == vertex else 0 for v in algebra.vertices]
    return Representation(algebra, p, dims)


def rep_of_string(brick: StringBrick, p: int = DEFAULT_CHAR) -> Representation:
    """
    The RA_n representation of a string brick: one-dimensional spaces on the
    support, identity on each acting arrow.
    """
    algebra = ra_presentation(brick.n)
    dims = [1 if v in brick.vertices else 0 for v in algebra.vertices]
    maps = {}
    lo, hi = brick.support
    for edge in range(lo, hi):
        name = f"a{edge}" if brick.action_at(edge) == DOWN else f"a{edge}*"
        maps[name] = np.array([[1]])
    return Representation(algebra, p, dims, maps)


def direct_sum(reps: Sequence[Representation]) -> Representation:
    if not reps:
        raise ValueError("empty direct sum needs an algebra; use zero_rep")
    algebra, p = reps[0].algebra, reps[0].p
    dims = [sum(r.dim_at(v) for r in reps) for v in algebra.vertices]
    maps = {}
    for arrow in algebra.arrows:
        blocks = [r.maps[arrow.name] for r in reps]
        maps[arrow.name] = _block_diag(blocks)
    return Representation(algebra, p, dims, maps, check=False)


def rep_power(rep: Representation, e: int) -> Representation:
    if e == 0:
        return Representation(rep.algebra, rep.p, [0] * len(rep.algebra.vertices))
    return direct_sum([rep] * e)


def _block_diag(blocks: Sequence[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = linalg.zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


Intertwiner = dict[int, np.ndarray]


def _offsets(sizes: Sequence[int]) -> list[int]:
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    return offsets


def hom_space(M: Representation, N: Representation) -> list[Intertwiner]:
    """
    A basis of the intertwiners M -> N: families of vertex maps commuting
    with every arrow.
    """
    _check_same_algebra(M, N)
    algebra, p = M.algebra, M.p
    sizes = [N.dim_at(v) * M.dim_at(v) for v in algebra.vertices]
    offsets = _offsets(sizes)
    total = offsets[-1]
    if total == 0:
        return []
    rows = []
    for arrow in algebra.arrows:
        s, t = arrow.source, arrow.target
        block_rows = N.dim_at(t) * M.dim_at(s)
        if block_rows == 0:
            continue
        row = linalg.zeros(block_rows, total)
        si, ti = algebra.vertex_index(s), algebra.vertex_index(t)
        # vec(phi_t @ M_a) = (I kron M_a^T) vec(phi_t), row-major layout
        if sizes[ti]:
            row[:, offsets[ti] : offsets[ti + 1]] = np.kron(linalg.eye(N.dim_at(t)), M.maps[arrow.name].T)
        # vec(N_a @ phi_s) = (N_a kron I) vec(phi_s)
        if sizes[si]:
            row[:, offsets[si] : offsets[si + 1]] -= np.kron(N.maps[arrow.name], linalg.eye(M.dim_at(s)))
        rows.append(row % p)
    system = np.concatenate(rows, axis=0) if rows else linalg.zeros(0, total)
    kernel = linalg.nullspace(system, p)
    basis = []
    for j in range(kernel.shape[1]):
        vec = kernel[:, j]
        phi: Intertwiner = {}
        for v in algebra.vertices:
            i = algebra.vertex_index(v)
            phi[v] = vec[offsets[i] : offsets[i + 1]].reshape(N.dim_at(v), M.dim_at(v))
        basis.append(phi)
    return basis


def hom_dim(M: Representation, N: Representation) -> int:
    return len(hom_space(M, N))


Cocycle = dict[str, np.ndarray]


def _cocycle_offsets(M: Representation, N: Representation) -> tuple[list[int], int]:
    sizes = [
        N.dim_at(a.target) * M.dim_at(a.source) for a in M.algebra.arrows
    ]
    offsets = _offsets(sizes)
    return offsets, offsets[-1]


def ext_space(M: Representation, N: Representation) -> tuple[int, list[Cocycle]]:
    """
    Ext^1(M, N) as (dimension, representing cocycles), computed from the
    three-term complex Hom(vertices) -> Hom(arrows) -> Hom(relations).  A
    cocycle assigns each arrow a map M_source -> N_target; the class is the
    extension N -> E -> M built by extension_from_cocycle.
    """
    _check_same_algebra(M, N)
    algebra, p = M.algebra, M.p
    offsets, total = _cocycle_offsets(M, N)
    if total == 0:
        return 0, []
    # d1: evaluate each relation on the would-be extension, differentiating
    # each path at every position.
    d1_rows = []
    for rel in algebra.relations:
        src, tgt = algebra.path_endpoints(rel[0][1])
        block_rows = N.dim_at(tgt) * M.dim_at(src)
        if block_rows == 0:
            continue
        row = linalg.zeros(block_rows, total)
        for coeff, path in rel:
            for pos, name in enumerate(path):
                prefix = M.path_matrix(path[:pos]) if pos else linalg.eye(M.dim_at(src))
                suffix = (
                    N.path_matrix(path[pos + 1 :])
                    if pos + 1 < len(path)
                    else linalg.eye(N.dim_at(tgt))
                )
                i = algebra.arrows.index(algebra.arrow_by_name[name])
                if offsets[i + 1] == offsets[i]:
                    continue
                row[:, offsets[i] : offsets[i + 1]] += coeff * np.kron(suffix, prefix.T)
        d1_rows.append(row % p)
    d1 = np.concatenate(d1_rows, axis=0) if d1_rows else linalg.zeros(0, total)
    cocycle_basis = linalg.nullspace(d1, p)
    # d0: coboundaries from changing the splitting.
    vert_sizes = [N.dim_at(v) * M.dim_at(v) for v in algebra.vertices]
    vert_offsets = _offsets(vert_sizes)
    d0 = linalg.zeros(total, vert_offsets[-1])
    for i, arrow in enumerate(algebra.arrows):
        if offsets[i + 1] == offsets[i]:
            continue
        s, t = arrow.source, arrow.target
        si, ti = algebra.vertex_index(s), algebra.vertex_index(t)
        if vert_sizes[si]:
            d0[offsets[i] : offsets[i + 1], vert_offsets[si] : vert_offsets[si + 1]] += np.kron(
                N.maps[arrow.name], linalg.eye(M.dim_at(s))
            )
        if vert_sizes[ti]:
            d0[offsets[i] : offsets[i + 1], vert_offsets[ti] : vert_offsets[ti + 1]] -= np.kron(
                linalg.eye(N.dim_at(t)), M.maps[arrow.name].T
            )
    d0 = d0 % p
    boundaries = linalg.column_space(d0, p)
    dim = cocycle_basis.shape[1] - boundaries.shape[1]
    # Representatives: kernel basis columns extending a basis of the image.
    stacked = np.concatenate([boundaries, cocycle_basis], axis=1)
    _, pivots = linalg.rref(stacked, p)
    chosen = [c - boundaries.shape[1] for c in pivots if c >= boundaries.shape[1]]
    assert len(chosen) == dim, "image of d0 must lie inside ker d1"
    cocycles = []
    for j in chosen:
        vec = cocycle_basis[:, j]
        cocycles.append(_unpack_cocycle(vec, offsets, M, N))
    return dim, cocycles


def _unpack_cocycle(
    vec: np.ndarray, offsets: list[int], M: Representation, N: Representation
) -> Cocycle:
    algebra = M.algebra
    out: Cocycle = {}
    for i, arrow in enumerate(algebra.arrows):
        rows, cols = N.dim_at(arrow.target), M.dim_at(arrow.source)
        out[arrow.name] = vec[offsets[i] : offsets[i + 1]].reshape(rows, cols)
    return out


def ext_dim(M: Representation, N: Representation) -> int:
    return ext_space(M, N)[0]


def extension_from_cocycle(
    cocycle: Cocycle, quotient: Representation, sub: Representation
) -> Representation:
    """
    The middle term of sub -> E -> quotient for a class of
    Ext^1(quotient, sub): block upper-triangular arrow action with the
    cocycle in the corner.  Raises CocycleError when the relations fail.
    """
    _check_same_algebra(quotient, sub)
    algebra, p = quotient.algebra, quotient.p
    dims = [sub.dim_at(v) + quotient.dim_at(v) for v in algebra.vertices]
    maps = {}
    for arrow in algebra.arrows:
        top = np.concatenate([sub.maps[arrow.name], linalg.mod(cocycle[arrow.name], p)], axis=1)
        bottom = np.concatenate(
            [
                linalg.zeros(quotient.dim_at(arrow.target), sub.dim_at(arrow.source)),
                quotient.maps[arrow.name],
            ],
            axis=1,
        )
        maps[arrow.name] = np.concatenate([top, bottom], axis=0)
    rep = Representation(algebra, p, dims, maps, check=False)
    if not rep.satisfies_relations():
        raise CocycleError("cocycle violates the algebra relations")
    return rep


def universal_extension(T: Representation, S: Representation) -> Representation:
    """
    The universal extension S^e -> E -> T with e = dim Ext^1(T, S), built by
    stacking a cocycle basis.  Requires S to be a brick without
    self-extensions; then Ext^1(E, S) = 0.
    """
    if not is_brick(S):
        raise ValueError("universal extension needs a brick on the socle side")
    if ext_dim(S, S) != 0:
        raise ValueError("universal extension needs Ext(S, S) = 0")
    e, basis = ext_space(T, S)
    if e == 0:
        return T
    socle = rep_power(S, e)
    stacked = {
        a.name: np.concatenate([c[a.name] for c in basis], axis=0)
        for a in T.algebra.arrows
    }
    return extension_from_cocycle(stacked, T, socle)


def couniversal_extension(T: Representation, S: Representation) -> Representation:
    """
    The dual universal extension T -> E -> S^e with e = dim Ext^1(S, T):
    the cocycle basis of Ext^1(S, T) stacked side by side.
    """
    if not is_brick(S):
        raise ValueError("couniversal extension needs a brick on the top side")
    if ext_dim(S, S) != 0:
        raise ValueError("couniversal extension needs Ext(S, S) = 0")
    e, basis = ext_space(S, T)
    if e == 0:
        return T
    top = rep_power(S, e)
    stacked = {
        a.name: np.concatenate([c[a.name] for c in basis], axis=1)
        for a in T.algebra.arrows
    }
    return extension_from_cocycle(stacked, top, T)


def hom_image_factorization(
    f: Intertwiner, M: Representation, N: Representation
) -> tuple[Representation, Representation, Representation]:
    """
    Kernel, image and cokernel of an intertwiner f: M -> N, as
    representations with the induced arrow maps.
    """
    _check_same_algebra(M, N)
    algebra, p = M.algebra, M.p
    ker_basis = {v: linalg.nullspace(f[v], p) for v in algebra.vertices}
    im_basis = {v: linalg.column_space(f[v], p) for v in algebra.vertices}
    coker_proj = {
        v: linalg.complement_projection(im_basis[v], N.dim_at(v), p) for v in algebra.vertices
    }
    ker_maps, im_maps, coker_maps = {}, {}, {}
    for arrow in algebra.arrows:
        s, t = arrow.source, arrow.target
        # M_a restricts to kernels, N_a to images, and descends to cokernels.
        ker_maps[arrow.name] = linalg.solve(
            ker_basis[t], linalg.matmul(M.maps[arrow.name], ker_basis[s], p), p
        )
        im_maps[arrow.name] = linalg.solve(
            im_basis[t], linalg.matmul(N.maps[arrow.name], im_basis[s], p), p
        )
        coker_maps[arrow.name] = _descend(coker_proj, N, arrow, p)
    kernel = Representation(
        algebra, p, [ker_basis[v].shape[1] for v in algebra.vertices], ker_maps
    )
    image = Representation(algebra, p, [im_basis[v].shape[1] for v in algebra.vertices], im_maps)
    cokernel = Representation(
        algebra, p, [coker_proj[v].shape[0] for v in algebra.vertices], coker_maps
    )
    return kernel, image, cokernel


def _descend(
    proj: dict[int, np.ndarray], N: Representation, arrow: Arrow, p: int
) -> np.ndarray:
    qs, qt = proj[arrow.source], proj[arrow.target]
    # X with X @ qs = qt @ N_a; qs is surjective, so solve on a right inverse.
    if qs.shape[0] == 0:
        return linalg.zeros(qt.shape[0], 0)
    right_inv = linalg.solve(qs, linalg.eye(qs.shape[0]), p)
    return linalg.matmul(linalg.matmul(qt, N.maps[arrow.name], p), right_inv, p)


def is_brick(M: Representation) -> bool:
    return hom_dim(M, M) == 1


def is_iso_class_equal(M: Representation, N: Representation, samples: int = 200) -> bool:
    """
    Whether M and N are isomorphic: equal dimension vectors plus an
    invertible intertwiner, searched over F_p-combinations of a Hom basis
    (exhaustively up to dimension 2, sampled beyond).
    """
    _check_same_algebra(M, N)
    if M.dims != N.dims:
        return False
    if M.total_dim == 0:
        return True
    basis = hom_space(M, N)
    if not basis:
        return False
    p = M.p

    def invertible(coeffs: Sequence[int]) -> bool:
        return all(
            linalg.is_invertible(
                sum(c * phi[v] for c, phi in zip(coeffs, basis)) % p, p
            )
            for v in M.algebra.vertices
            if M.dim_at(v)
        )

    if len(basis) == 1:
        return invertible((1,))
    if len(basis) == 2:
        candidates = [(1, c) for c in range(p)] + [(0, 1)]
        return any(invertible(c) for c in candidates)
    rng = random.Random(0)
    return any(
        invertible([rng.randrange(p) for _ in basis]) for _ in range(samples)
    )


def _check_same_algebra(M: Representation, N: Representation) -> None:
    if M.algebra is not N.algebra and M.algebra != N.algebra:
        raise ValueError("representations live over different algebras")
    if M.p != N.p:
        raise ValueError("representations live over different fields")


def d4_named_modules(p: int = DEFAULT_CHAR) -> dict[str, Representation]:
    """
    The modules featuring in the D4 counterexample: M = 1/3, N = 1/2,
    N' = 2/1/4, E = 1/23/1/4, plus the four simples.
    """
    algebra = d4_presentation()
    mods = {f"S{i}": simple_rep(algebra, i, p) for i in (1, 2, 3, 4)}
    mods["M"] = Representation(algebra, p, [1, 0, 1, 0], {"a3*": [[1]]})
    mods["N"] = Representation(algebra, p, [1, 1, 0, 0], {"a2*": [[1]]})
    mods["N'"] = Representation(algebra, p, [1, 1, 0, 1], {"a2": [[1]], "a4*": [[1]]})
    # Vertex-1 basis (u, v): u the head, v the middle copy; the center
    # relation forces the two downward squares to cancel.
    mods["E"] = Representation(
        algebra,
        p,
        [2, 1, 1, 1],
        {
            "a2*": [[1, 0]],
            "a3*": [[1, 0]],
            "a2": [[0], [1]],
            "a3": [[0], [p - 1]],
            "a4*": [[0, 1]],
        },
    )
    return mods
