"""
Brick universes: a uniform interface over the brick operations the mutation
engine needs.  Two families are provided:

- ArcUniverse(n): bricks of RA_n as string bricks, with Hom and Ext decided
  by arc combinatorics (graph-map bases, arrow splices, two-sided arc maps).
  This is the fast path; its answers agree with the matrix oracle, which the
  test suite checks exhaustively.
- MatrixUniverse(kind, ...): bricks as quiver representations over F_p, all
  operations by dense linear algebra.  Supports RA(n) and the D4
  preprojective algebra.

The minimal Filt(S)-approximations driving mutation stack a Hom basis: the
left flavor is the diagonal map T -> S^d, the right flavor the codiagonal
map S^d -> T, with d the Hom dimension.
"""
from __future__ import annotations

import enum
import functools
from typing import Hashable, Optional, Sequence

import numpy as np

from . import linalg, quiver, strings
from .quiver import DEFAULT_CHAR, Representation
from .strings import DOWN, UP, StringBrick

DIAGONAL = "diagonal"  # frm -> to^d
CODIAGONAL = "codiagonal"  # frm^d -> to


class MapClass(enum.Enum):
    ZERO = "zero"
    MONO = "mono"
    EPI = "epi"
    NEITHER = "neither"


class BrickUniverse:
    """Shared plumbing: caches and the completability memo."""

    label: str
    rank: int

    def __init__(self) -> None:
        self._hom_cache: dict = {}
        self._ext_cache: dict = {}
        self.completable_memo: dict = {}

    # -- interface -------------------------------------------------------
    def key(self, x) -> Hashable:
        raise NotImplementedError

    def render(self, x) -> str:
        raise NotImplementedError

    def is_brick(self, x) -> bool:
        raise NotImplementedError

    def hom_dim(self, x, y) -> int:
        raise NotImplementedError

    def ext_dim(self, x, y) -> int:
        """dim Ext^1(x, y), i.e. classes of sequences y -> E -> x."""
        raise NotImplementedError

    def classify_approximation(self, frm, to, flavor: str) -> MapClass:
        raise NotImplementedError

    def cokernel_of_approximation(self, frm, to, flavor: str):
        raise NotImplementedError

    def kernel_of_approximation(self, frm, to, flavor: str):
        raise NotImplementedError

    def universal_extension(self, T, S):
        """S^e -> E -> T with e = dim Ext^1(T, S)."""
        raise NotImplementedError

    def couniversal_extension(self, T, S):
        """T -> E -> S^e with e = dim Ext^1(S, T)."""
        raise NotImplementedError

    def simples(self) -> tuple:
        raise NotImplementedError

    def longest_chain(self) -> int:
        """Length bound for chains in the lattice of torsion classes."""
        raise NotImplementedError

    def string_form(self, x) -> StringBrick:
        raise NotImplementedError


class ArcUniverse(BrickUniverse):
    """Bricks of RA_n handled through their arcs."""

    def __init__(self, n: int, char: int = DEFAULT_CHAR):
        super().__init__()
        if n < 1:
            raise ValueError("RA_n needs n >= 1")
        self.n = n
        self.rank = n
        self.label = "RA"
        self.char = linalg.validate_char(char)

    def __repr__(self) -> str:
        return f"ArcUniverse(RA_{self.n})"

    @functools.cached_property
    def _twin(self) -> "MatrixUniverse":
        return MatrixUniverse("RA", n=self.n, char=self.char)

    def _check(self, x) -> StringBrick:
        if not isinstance(x, StringBrick) or x.n != self.n:
            raise ValueError(f"not a brick of RA_{self.n}: {x!r}")
        return x

    def key(self, x):
        return self._check(x)

    def render(self, x) -> str:
        return x.layers()

    def is_brick(self, x) -> bool:
        return isinstance(x, StringBrick) and x.n == self.n

    def string_form(self, x) -> StringBrick:
        return self._check(x)

    def hom_dim(self, x, y) -> int:
        k = (x, y)
        if k not in self._hom_cache:
            self._hom_cache[k] = strings.hom_dim_by_arcs(x, y)
        return self._hom_cache[k]

    def ext_dim(self, x, y) -> int:
        k = (x, y)
        if k not in self._ext_cache:
            self._ext_cache[k] = strings.ext_dim_by_arcs(x, y)
        return self._ext_cache[k]

    def classify_approximation(self, frm, to, flavor: str) -> MapClass:
        basis = strings.hom_arc_basis(frm, to)
        d = len(basis)
        if d == 0:
            return MapClass.ZERO
        if d == 1:
            image = strings.sigma(basis[0], self.n + 1)
            if image == frm:
                return MapClass.MONO
            if image == to:
                return MapClass.EPI
            return MapClass.NEITHER
        covered: set[int] = set()
        for g in basis:
            covered.update(strings.sigma(g, self.n + 1).vertices)
        if flavor == DIAGONAL:
            # frm -> to^d: never epi; mono iff the basis images cover frm.
            return MapClass.MONO if covered == set(frm.vertices) else MapClass.NEITHER
        # frm^d -> to: never mono; epi iff the images cover to.
        return MapClass.EPI if covered == set(to.vertices) else MapClass.NEITHER

    def cokernel_of_approximation(self, frm, to, flavor: str):
        if self.hom_dim(frm, to) == 1:
            # A mono approximation embeds frm as a submodule of to.
            return strings.quotient_by_submodule(to, frm)
        return self._via_twin("cokernel_of_approximation", frm, to, flavor)

    def kernel_of_approximation(self, frm, to, flavor: str):
        if self.hom_dim(frm, to) == 1:
            return strings.kernel_of_epi(frm, to)
        return self._via_twin("kernel_of_approximation", frm, to, flavor)

    def universal_extension(self, T, S):
        e = self.ext_dim(T, S)
        if e == 0:
            return T
        if self.hom_dim(T, S) == 0 and self.hom_dim(S, T) == 0:
            # Hom-orthogonal bricks only extend across adjacent supports, so
            # e = 1 and the middle term is the spliced string.
            return strings.splice_extension(T, S)
        return self._via_twin("universal_extension", T, S)

    def couniversal_extension(self, T, S):
        e = self.ext_dim(S, T)
        if e == 0:
            return T
        if self.hom_dim(T, S) == 0 and self.hom_dim(S, T) == 0:
            return strings.splice_extension(S, T)
        return self._via_twin("couniversal_extension", T, S)

    def _via_twin(self, op: str, *args):
        twin = self._twin
        converted = [twin.of_string(a) if isinstance(a, StringBrick) else a for a in args]
        result = getattr(twin, op)(*converted)
        return twin.string_form(result)

    def simples(self) -> tuple[StringBrick, ...]:
        return tuple(strings.simple_brick(self.n, v) for v in range(1, self.n + 1))

    def all_bricks(self) -> tuple[StringBrick, ...]:
        return strings.enumerate_bricks(self.n)

    def longest_chain(self) -> int:
        return self.n * (self.n + 1) // 2


class MatrixUniverse(BrickUniverse):
    """Bricks as representations over F_p; RA(n) or the D4 preset."""

    def __init__(self, kind: str, n: Optional[int] = None, char: int = DEFAULT_CHAR):
        super().__init__()
        self.char = linalg.validate_char(char)
        if kind == "RA":
            if n is None:
                raise ValueError("RA universe needs n")
            self.algebra = quiver.ra_presentation(n)
            self.n = n
            self.rank = n
        elif kind == "PiD4":
            self.algebra = quiver.d4_presentation()
            self.n = None
            self.rank = 4
        else:
            raise ValueError(f"unknown universe kind {kind!r}")
        self.label = kind
        self._interned: dict = {}
        self._brick_cache: dict = {}
        self._key_cache: dict = {}

    def __repr__(self) -> str:
        return f"MatrixUniverse({self.algebra.name}, char={self.char})"

    def of_string(self, brick: StringBrick) -> Representation:
        if self.label != "RA":
            raise ValueError("string bricks live in the RA universes")
        return self.intern(quiver.rep_of_string(brick, self.char))

    def intern(self, rep: Representation) -> Representation:
        k = self.key(rep)
        return self._interned.setdefault(k, rep)

    def key(self, x):
        if self.label == "RA":
            return self.string_form(x)
        return self._fingerprint(x)

    def string_form(self, x) -> StringBrick:
        if isinstance(x, StringBrick):
            return x
        if self.label != "RA":
            raise ValueError("only RA modules have a string form")
        support = [v for v in self.algebra.vertices if x.dim_at(v)]
        if any(x.dim_at(v) != 1 for v in support) or (
            support and support != list(range(support[0], support[-1] + 1))
        ):
            raise ValueError(f"module {x} is not a string brick")
        if not support:
            raise ValueError("the zero module is not a brick")
        actions = []
        for edge in range(support[0], support[-1]):
            down = bool(x.maps[f"a{edge}"].any())
            up = bool(x.maps[f"a{edge}*"].any())
            if down == up:
                raise ValueError(f"module {x} is not a string brick at edge {edge}")
            actions.append(DOWN if down else UP)
        return StringBrick(self.n, (support[0], support[-1]), tuple(actions))

    def _fingerprint(self, x: Representation):
        # Cached per object; the interner keeps the objects alive.
        hit = self._key_cache.get(id(x))
        if hit is not None:
            return hit[1]
        simples = [quiver.simple_rep(self.algebra, v, self.char) for v in self.algebra.vertices]
        fp = (
            x.dims,
            tuple(quiver.hom_dim(x, s) for s in simples),
            tuple(quiver.hom_dim(s, x) for s in simples),
        )
        self._key_cache[id(x)] = (x, fp)
        return fp

    def render(self, x) -> str:
        if self.label == "RA":
            return self.string_form(x).layers()
        return f"{self.algebra.name}{list(x.dims)}"

    def is_brick(self, x) -> bool:
        hit = self._brick_cache.get(id(x))
        if hit is None:
            hit = (x, quiver.is_brick(x))
            self._brick_cache[id(x)] = hit
        return hit[1]

    def hom_dim(self, x, y) -> int:
        k = (self.key(x), self.key(y))
        if k not in self._hom_cache:
            self._hom_cache[k] = quiver.hom_dim(x, y)
        return self._hom_cache[k]

    def ext_dim(self, x, y) -> int:
        k = (self.key(x), self.key(y))
        if k not in self._ext_cache:
            self._ext_cache[k] = quiver.ext_dim(x, y)
        return self._ext_cache[k]

    def _stacked(self, frm: Representation, to: Representation, flavor: str):
        basis = quiver.hom_space(frm, to)
        d = len(basis)
        if d == 0:
            return None, None, None
        if flavor == DIAGONAL:
            source, target = frm, quiver.rep_power(to, d)
            f = {
                v: np.concatenate([phi[v] for phi in basis], axis=0) % self.char
                for v in self.algebra.vertices
            }
        else:
            source, target = quiver.rep_power(frm, d), to
            f = {
                v: np.concatenate([phi[v] for phi in basis], axis=1) % self.char
                for v in self.algebra.vertices
            }
        return f, source, target

    def classify_approximation(self, frm, to, flavor: str) -> MapClass:
        f, source, target = self._stacked(frm, to, flavor)
        if f is None:
            return MapClass.ZERO
        mono = all(
            linalg.rank(f[v], self.char) == source.dim_at(v) for v in self.algebra.vertices
        )
        epi = all(
            linalg.rank(f[v], self.char) == target.dim_at(v) for v in self.algebra.vertices
        )
        if mono and not epi:
            return MapClass.MONO
        if epi and not mono:
            return MapClass.EPI
        if mono and epi:
            raise ValueError("approximation is an isomorphism; the pair was invalid")
        return MapClass.NEITHER

    def cokernel_of_approximation(self, frm, to, flavor: str):
        f, source, target = self._stacked(frm, to, flavor)
        _, _, coker = quiver.hom_image_factorization(f, source, target)
        return self.intern(coker)

    def kernel_of_approximation(self, frm, to, flavor: str):
        f, source, target = self._stacked(frm, to, flavor)
        ker, _, _ = quiver.hom_image_factorization(f, source, target)
        return self.intern(ker)

    def universal_extension(self, T, S):
        return self.intern(quiver.universal_extension(T, S))

    def couniversal_extension(self, T, S):
        return self.intern(quiver.couniversal_extension(T, S))

    def simples(self) -> tuple[Representation, ...]:
        return tuple(
            self.intern(quiver.simple_rep(self.algebra, v, self.char))
            for v in self.algebra.vertices
        )

    def longest_chain(self) -> int:
        if self.label == "RA":
            return self.n * (self.n + 1) // 2
        return 12  # positive roots of D4


@functools.lru_cache(maxsize=None)
def get_arc_universe(n: int, char: int = DEFAULT_CHAR) -> ArcUniverse:
    return ArcUniverse(n, char)


@functools.lru_cache(maxsize=None)
def get_matrix_universe(
    kind: str, n: Optional[int] = None, char: int = DEFAULT_CHAR
) -> MatrixUniverse:
    return MatrixUniverse(kind, n=n, char=char)
