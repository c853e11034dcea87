"""
Semibrick pairs and their mutation calculus: validity, single mutation
compatibility, left and right mutation, completability (by depth-capped
mutation search), pairwise completability (by the brick-pair trichotomy),
full-rank completion through arc diagrams, and the one-sided completions.

A semibrick pair D + U[1] keeps the unshifted bricks in D and the shifted
ones in U.  Validity means: D and U are semibricks (pairwise hom-orthogonal
bricks) and Hom(S, T) = 0 = Ext(S, T) for every S in D, T in U.
"""
from __future__ import annotations

import dataclasses
import itertools
import random
from typing import Iterable, Optional, Sequence

from .arcs import GREEN, RED, ArcDiagram, delta, delta_bar, delta_inverse
from .permutations import Word, symmetric_group, validate_word
from .strings import StringBrick, sigma, sigma_inverse
from .universe import (
    CODIAGONAL,
    DIAGONAL,
    ArcUniverse,
    BrickUniverse,
    MapClass,
    get_arc_universe,
)


class MutationError(ValueError):
    pass


class NotFullRankError(ValueError):
    pass


class SemibrickPair:
    """
    An ordered snapshot of a semibrick pair over a universe.  Members are
    stored sorted by canonical key; D and U may not overlap.
    """

    def __init__(self, universe: BrickUniverse, D: Iterable, U: Iterable):
        self.universe = universe
        self.D = tuple(sorted(D, key=universe.key))
        self.U = tuple(sorted(U, key=universe.key))
        keys = [universe.key(x) for x in self.D + self.U]
        if len(set(keys)) != len(keys):
            raise ValueError("semibrick pair members must be distinct bricks")

    @property
    def size(self) -> int:
        return len(self.D) + len(self.U)

    def is_full_rank(self) -> bool:
        return self.size == self.universe.rank

    def key(self):
        u = self.universe
        return (
            tuple(u.key(x) for x in self.D),
            tuple(u.key(x) for x in self.U),
        )

    def render(self) -> str:
        u = self.universe
        d = ", ".join(u.render(x) for x in self.D) or "-"
        shifted = ", ".join(u.render(x) for x in self.U) or "-"
        return f"{{{d}}} + {{{shifted}}}[1]"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SemibrickPair)
            and self.universe.label == other.universe.label
            and self.key() == other.key()
        )

    def __hash__(self) -> int:
        return hash((self.universe.label, self.key()))

    def __repr__(self) -> str:
        return f"SemibrickPair({self.render()})"


@dataclasses.dataclass(frozen=True)
class Violation:
    where: str  # "D", "U" or "mixed"
    kind: str  # "hom" or "ext"
    pair: tuple[str, str]

    def as_dict(self) -> dict:
        return {"where": self.where, "kind": self.kind, "pair": list(self.pair)}


def is_semibrick_pair(
    universe: BrickUniverse, D: Sequence, U: Sequence
) -> tuple[bool, Optional[Violation]]:
    """
    Check the full definition, reporting the first violating ordered pair.
    Raises ValueError when some member is not a brick of the universe.
    """
    for x in tuple(D) + tuple(U):
        if not universe.is_brick(x):
            raise ValueError(f"not a brick: {x!r}")
    for name, part in (("D", D), ("U", U)):
        for x, y in itertools.permutations(part, 2):
            if universe.hom_dim(x, y):
                return False, Violation(name, "hom", (universe.render(x), universe.render(y)))
    for S in D:
        for T in U:
            if universe.hom_dim(S, T):
                return False, Violation("mixed", "hom", (universe.render(S), universe.render(T)))
            if universe.ext_dim(S, T):
                return False, Violation("mixed", "ext", (universe.render(S), universe.render(T)))
    return True, None


def singly_left_compatible(pair: SemibrickPair, S) -> tuple[bool, dict]:
    """
    Whether the minimal left Filt(S)-approximation of every T in U is mono
    or epi; returns the per-T classification.
    """
    u = pair.universe
    if u.key(S) not in {u.key(x) for x in pair.D}:
        raise ValueError("mutation point must lie in D")
    classes = {T: u.classify_approximation(T, S, DIAGONAL) for T in pair.U}
    return all(c is not MapClass.NEITHER for c in classes.values()), classes


def singly_right_compatible(pair: SemibrickPair, T) -> tuple[bool, dict]:
    """Dual of singly_left_compatible, at a shifted brick T in U."""
    u = pair.universe
    if u.key(T) not in {u.key(x) for x in pair.U}:
        raise ValueError("mutation point must lie in U")
    classes = {S: u.classify_approximation(T, S, CODIAGONAL) for S in pair.D}
    return all(c is not MapClass.NEITHER for c in classes.values()), classes


def singly_left_compatible_everywhere(pair: SemibrickPair) -> bool:
    return all(singly_left_compatible(pair, S)[0] for S in pair.D)


def mutate_left(pair: SemibrickPair, S) -> SemibrickPair:
    """
    The left mutation at S in D: S moves to the shifted side, the remaining
    members of D are replaced by their universal extensions by S, and each
    shifted T follows its approximation (zero: unchanged; mono: the cokernel
    lands in D; epi: the kernel stays shifted).
    """
    ok, classes = singly_left_compatible(pair, S)
    if not ok:
        bad = [pair.universe.render(T) for T, c in classes.items() if c is MapClass.NEITHER]
        raise MutationError(f"not singly left compatible at {pair.universe.render(S)}: {bad}")
    u = pair.universe
    key_s = u.key(S)
    new_d = [u.universal_extension(T, S) for T in pair.D if u.key(T) != key_s]
    new_u = [S]
    for T in pair.U:
        c = classes[T]
        if c is MapClass.ZERO:
            new_u.append(T)
        elif c is MapClass.MONO:
            new_d.append(u.cokernel_of_approximation(T, S, DIAGONAL))
        else:
            new_u.append(u.kernel_of_approximation(T, S, DIAGONAL))
    return SemibrickPair(u, new_d, new_u)


def mutate_right(pair: SemibrickPair, T) -> SemibrickPair:
    """
    The right mutation at T in U: inverse to mutate_left at T wherever both
    are defined.
    """
    ok, classes = singly_right_compatible(pair, T)
    if not ok:
        bad = [pair.universe.render(S) for S, c in classes.items() if c is MapClass.NEITHER]
        raise MutationError(f"not singly right compatible at {pair.universe.render(T)}: {bad}")
    u = pair.universe
    key_t = u.key(T)
    new_u = [u.couniversal_extension(Tp, T) for Tp in pair.U if u.key(Tp) != key_t]
    new_d = [T]
    for S in pair.D:
        c = classes[S]
        if c is MapClass.ZERO:
            new_d.append(S)
        elif c is MapClass.MONO:
            new_d.append(u.cokernel_of_approximation(T, S, CODIAGONAL))
        else:
            new_u.append(u.kernel_of_approximation(T, S, CODIAGONAL))
    return SemibrickPair(u, new_d, new_u)


@dataclasses.dataclass
class CompletabilityResult:
    completable: bool
    sequence: Optional[tuple[str, ...]]  # rendered mutation points, in order
    terminal: Optional[SemibrickPair]
    explored: int

    def as_dict(self) -> dict:
        return {
            "completable": self.completable,
            "mutation_trace": list(self.sequence) if self.sequence is not None else None,
            "explored": self.explored,
        }


def is_completable(pair: SemibrickPair, want_witness: bool = False) -> CompletabilityResult:
    """
    Decide completability by depth-first search over left mutations,
    succeeding on a state with empty D.  The depth cap is the longest chain
    of torsion classes: completable pairs descend that lattice at every
    mutation, so no completable branch can exceed it, while descendants of
    non-completable pairs are never completable.  Results are memoised per
    universe.
    """
    u = pair.universe
    memo = u.completable_memo
    cap = u.longest_chain()
    explored = 0

    def dfs(state: SemibrickPair, depth: int) -> bool:
        nonlocal explored
        if not state.D:
            return True
        k = state.key()
        if k in memo:
            return memo[k]
        if depth >= cap:
            return False
        explored += 1
        result = False
        for S in state.D:
            ok, _ = singly_left_compatible(state, S)
            if not ok:
                continue
            if dfs(mutate_left(state, S), depth + 1):
                result = True
                break
        memo[k] = result
        return result

    completable = dfs(pair, 0)
    if not (completable and want_witness):
        return CompletabilityResult(completable, None, None, explored)

    # Replay a successful branch, guided by the memo.
    sequence: list[str] = []
    state = pair
    while state.D:
        for S in state.D:
            ok, _ = singly_left_compatible(state, S)
            if not ok:
                continue
            nxt = mutate_left(state, S)
            if not nxt.D or memo.get(nxt.key()) or dfs(nxt, 0):
                sequence.append(u.render(S))
                state = nxt
                break
        else:
            raise RuntimeError("completable state without a completable mutation")
    return CompletabilityResult(True, tuple(sequence), state, explored)


def pair_mutation_compatible(universe: BrickUniverse, S, T) -> bool:
    """
    The brick-pair trichotomy for a rank-2 semibrick pair {S} + {T}[1] over
    a universe whose bricks have scalar endomorphisms and no
    self-extensions: compatible iff Hom(T, S) = 0 or the canonical map
    T -> S is mono or epi.  (A mono or epi forces the Hom space to be
    one-dimensional, so dimension 2 or more means neither exists.)
    """
    d = universe.hom_dim(T, S)
    if d == 0:
        return True
    if d > 1:
        return False
    return universe.classify_approximation(T, S, DIAGONAL) in (MapClass.MONO, MapClass.EPI)


def is_pairwise_completable(pair: SemibrickPair) -> tuple[bool, Optional[tuple[str, str]]]:
    """
    Whether every mixed rank-2 subpair {S} + {T}[1] is completable, decided
    through the trichotomy; returns the first obstructing pair.
    """
    u = pair.universe
    for S in pair.D:
        for T in pair.U:
            if not pair_mutation_compatible(u, S, T):
                return False, (u.render(S), u.render(T))
    return True, None


def smc_from_permutation(word: Sequence[int], universe: Optional[ArcUniverse] = None) -> SemibrickPair:
    """
    The 2-term simple minded collection attached to a permutation: descents
    give the unshifted bricks, ascents the shifted ones.

    >>> smc_from_permutation((5, 3, 4, 1, 2)).render()
    '{2/13, 4/3} + {1, 3}[1]'
    """
    w = validate_word(word)
    n = len(w) - 1
    if universe is None:
        universe = get_arc_universe(n)
    elif getattr(universe, "n", None) != n:
        raise ValueError("permutation size does not match the universe rank")
    nodes = n + 1
    D = [sigma(a, nodes) for a in delta(w).arcs]
    U = [sigma(a, nodes) for a in delta_bar(w).arcs]
    return SemibrickPair(universe, D, U)


def _string_members(pair: SemibrickPair) -> tuple[list[StringBrick], list[StringBrick]]:
    u = pair.universe
    return [u.string_form(x) for x in pair.D], [u.string_form(x) for x in pair.U]


def complete_full_rank(pair: SemibrickPair) -> Word:
    """
    For a pairwise completable semibrick pair of full rank over RA_n,
    produce the permutation whose collection it is: the n arcs chain into a
    directed path through all n + 1 nodes, and reading the path gives the
    word.  Raises NotFullRankError off rank and distinct diagnostics when
    the arcs fail to chain (which certifies a violated precondition).
    """
    universe = pair.universe
    n = universe.rank
    if pair.size != n:
        raise NotFullRankError(f"need |D| + |U| = {n}, got {pair.size}")
    D, U = _string_members(pair)
    arcs = [sigma_inverse(b, GREEN) for b in D] + [sigma_inverse(b, RED) for b in U]
    nxt: dict[int, int] = {}
    incoming: set[int] = set()
    for a in arcs:
        if a.src in nxt:
            raise ValueError(f"two arcs leave node {a.src}; degree exceeds a chain")
        if a.tar in incoming:
            raise ValueError(f"two arcs enter node {a.tar}; degree exceeds a chain")
        nxt[a.src] = a.tar
        incoming.add(a.tar)
    starts = [v for v in range(1, n + 2) if v in nxt and v not in incoming]
    if not starts:
        raise ValueError("arc graph contains a cycle")
    if len(starts) != 1:
        raise ValueError("arc graph is disconnected")
    walk = [starts[0]]
    while walk[-1] in nxt:
        walk.append(nxt[walk[-1]])
    if len(walk) != n + 1:
        raise ValueError("arc graph is disconnected")
    word = tuple(walk)
    rebuilt = smc_from_permutation(word)
    if sorted(rebuilt.D) != sorted(D) or sorted(rebuilt.U) != sorted(U):
        raise ValueError("arc sides disagree with the chained permutation")
    return word


def completion_of_U(universe: BrickUniverse, U: Sequence) -> tuple:
    """
    The unique semibrick D' with D' + U[1] a 2-term simple minded
    collection, through the red diagram of U.
    """
    bricks = [universe.string_form(x) for x in U]
    n = universe.rank
    try:
        diagram = ArcDiagram(n + 1, frozenset(sigma_inverse(b, RED) for b in bricks))
    except ValueError as exc:
        raise ValueError(f"U is not a semibrick: {exc}") from exc
    w = delta_inverse(diagram, RED)
    return tuple(sigma(a, n + 1) for a in delta(w).sorted_arcs())


def completion_of_D(universe: BrickUniverse, D: Sequence) -> tuple:
    """The unique semibrick U' with D + U'[1] a 2-term SMC."""
    bricks = [universe.string_form(x) for x in D]
    n = universe.rank
    try:
        diagram = ArcDiagram(n + 1, frozenset(sigma_inverse(b, GREEN) for b in bricks))
    except ValueError as exc:
        raise ValueError(f"D is not a semibrick: {exc}") from exc
    w = delta_inverse(diagram, GREEN)
    return tuple(sigma(a, n + 1) for a in delta_bar(w).sorted_arcs())


def wide_hull_simples(pair: SemibrickPair) -> Optional[tuple]:
    """
    The simples of the smallest wide subcategory containing the pair, read
    off the terminal state of a successful mutation search; None when the
    pair is not mutation compatible.
    """
    if not pair.D:
        return pair.U
    result = is_completable(pair, want_witness=True)
    if not result.completable:
        return None
    return result.terminal.U


def permutation_oracle_completable(pair: SemibrickPair) -> bool:
    """
    The independent completability criterion for RA_n: some permutation's
    collection contains the pair.
    """
    universe = pair.universe
    D, U = _string_members(pair)
    dk, uk = frozenset(D), frozenset(U)
    for dset, uset in _permutation_tables(universe.rank):
        if dk <= dset and uk <= uset:
            return True
    return False


_PERMUTATION_TABLES: dict[int, list] = {}


def _permutation_tables(n: int) -> list[tuple[frozenset, frozenset]]:
    if n not in _PERMUTATION_TABLES:
        nodes = n + 1
        table = []
        for w in symmetric_group(nodes):
            dset = frozenset(sigma(a, nodes) for a in delta(w).arcs)
            uset = frozenset(sigma(a, nodes) for a in delta_bar(w).arcs)
            table.append((dset, uset))
        _PERMUTATION_TABLES[n] = table
    return _PERMUTATION_TABLES[n]


def all_semibricks(n: int) -> list[tuple[StringBrick, ...]]:
    """Every semibrick of RA_n, as a sorted tuple of bricks."""
    nodes = n + 1
    return [
        tuple(sorted(sigma(a, nodes) for a in delta(w).arcs)) for w in symmetric_group(nodes)
    ]


def all_semibrick_pairs(n: int, universe: Optional[BrickUniverse] = None) -> list[SemibrickPair]:
    """
    Every semibrick pair of RA_n: both sides range over the semibricks, and
    the mixed Hom/Ext conditions are checked through a cached table.
    """
    if universe is None:
        universe = get_arc_universe(n)
    semibricks = all_semibricks(n)
    mixed_ok = {}

    def ok(S: StringBrick, T: StringBrick) -> bool:
        if (S, T) not in mixed_ok:
            mixed_ok[(S, T)] = universe.hom_dim(S, T) == 0 and universe.ext_dim(S, T) == 0
        return mixed_ok[(S, T)]

    pairs = []
    for D in semibricks:
        for U in semibricks:
            if all(ok(S, T) for S in D for T in U):
                pairs.append(SemibrickPair(universe, D, U))
    return pairs


def sample_semibrick_pairs(n: int, count: int, seed: int) -> list[SemibrickPair]:
    """A reproducible sample (with replacement) of RA_n semibrick pairs."""
    population = all_semibrick_pairs(n)
    rng = random.Random(seed)
    return [population[rng.randrange(len(population))] for _ in range(count)]


def all_smcs(n: int, universe: Optional[ArcUniverse] = None) -> list[SemibrickPair]:
    if universe is None:
        universe = get_arc_universe(n)
    return [smc_from_permutation(w, universe) for w in symmetric_group(n + 1)]
