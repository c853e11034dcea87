"""
Named exhaustive verification suites.  Each suite replays one of the
structural facts about RA_n or the D4 preprojective algebra at desk scale
and reports pass/fail with a witness for any failure.

All suites are deterministic; the sampled one takes a seed.
"""
from __future__ import annotations

import itertools
from typing import Callable, Optional

from . import pairs as engine
from . import quiver, strings
from .arcs import GREEN, RED, ArcDiagram, delta, delta_bar, delta_inverse
from .arcs import is_left_of, noncrossing
from .permutations import symmetric_group
from .pairs import SemibrickPair
from .strings import StringBrick, sigma, sigma_inverse
from .universe import get_arc_universe, get_matrix_universe


class SuiteError(ValueError):
    pass


def _report(name: str, n: Optional[int], ok: bool, checked: int, **extra) -> dict:
    out = {"suite": name, "n": n, "pass": bool(ok), "checked": checked}
    out.update(extra)
    return out


def _require(n: Optional[int], lo: int, hi: int, default: int) -> int:
    if n is None:
        return default
    if not lo <= n <= hi:
        raise SuiteError(f"n must lie in [{lo}, {hi}]")
    return n


def suite_brick_census(n: Optional[int] = None, seed: int = 0) -> dict:
    n = _require(n, 1, 8, 4)
    count = len(strings.enumerate_bricks(n))
    expected = 2 ** (n + 1) - n - 2
    return _report("brick-census", n, count == expected, count, expected=expected)


def suite_reading_census(n: Optional[int] = None, seed: int = 0) -> dict:
    """delta is injective, lands on valid diagrams, and round-trips."""
    n = _require(n, 1, 6, 4)
    seen = set()
    checked = 0
    for w in symmetric_group(n + 1):
        d = delta(w)  # the constructor enforces the compatibility conditions
        if delta_inverse(d, GREEN) != w or delta_inverse(delta_bar(w), RED) != w:
            return _report("reading-census", n, False, checked, witness=list(w))
        seen.add(d.arcs)
        checked += 1
    ok = len(seen) == checked
    return _report("reading-census", n, ok, checked, distinct=len(seen))


def suite_oracle_hom(n: Optional[int] = None, seed: int = 0) -> dict:
    """Arc-counted Hom dimensions match the intertwiner solve, all pairs."""
    n = _require(n, 1, 5, 3)
    bricks = strings.enumerate_bricks(n)
    reps = {b: quiver.rep_of_string(b) for b in bricks}
    checked = 0
    for s, t in itertools.product(bricks, repeat=2):
        arc_dim = strings.hom_dim_by_arcs(s, t)
        mat_dim = quiver.hom_dim(reps[s], reps[t])
        checked += 1
        if arc_dim != mat_dim:
            return _report(
                "oracle-hom", n, False, checked,
                witness={"pair": [s.layers(), t.layers()], "arc": arc_dim, "matrix": mat_dim},
            )
    return _report("oracle-hom", n, True, checked)


def suite_oracle_ext(n: Optional[int] = None, seed: int = 0) -> dict:
    """Arc-detected Ext classes match the cocycle complex, all pairs."""
    n = _require(n, 1, 5, 3)
    bricks = strings.enumerate_bricks(n)
    reps = {b: quiver.rep_of_string(b) for b in bricks}
    checked = 0
    for s, t in itertools.product(bricks, repeat=2):
        arc_dim = strings.ext_dim_by_arcs(s, t)
        mat_dim = quiver.ext_dim(reps[s], reps[t])
        checked += 1
        if arc_dim != mat_dim:
            return _report(
                "oracle-ext", n, False, checked,
                witness={"pair": [s.layers(), t.layers()], "arc": arc_dim, "matrix": mat_dim},
            )
    return _report("oracle-ext", n, True, checked)


def suite_kstone(n: Optional[int] = None, seed: int = 0) -> dict:
    """Every brick of RA_n has scalar endomorphisms and no self-extensions."""
    n = _require(n, 1, 5, 4)
    checked = 0
    for b in strings.enumerate_bricks(n):
        rep = quiver.rep_of_string(b)
        checked += 1
        if quiver.hom_dim(rep, rep) != 1 or quiver.ext_dim(rep, rep) != 0:
            return _report("kstone", n, False, checked, witness=b.layers())
    return _report("kstone", n, True, checked)


def suite_kstone_d4(n: Optional[int] = None, seed: int = 0) -> dict:
    mods = quiver.d4_named_modules()
    names = ["M", "N", "N'", "E", "S1", "S2"]
    checked = 0
    for name in names:
        rep = mods[name]
        checked += 1
        if quiver.hom_dim(rep, rep) != 1 or quiver.ext_dim(rep, rep) != 0:
            return _report("kstone-d4", None, False, checked, witness=name)
    return _report("kstone-d4", None, True, checked, modules=names)


def _rank2_pairs(n: int):
    universe = get_arc_universe(n)
    bricks = strings.enumerate_bricks(n)
    for s, t in itertools.product(bricks, repeat=2):
        ok, _ = engine.is_semibrick_pair(universe, [s], [t])
        if ok:
            yield SemibrickPair(universe, [s], [t])


def suite_kstone_trichotomy(n: Optional[int] = None, seed: int = 0) -> dict:
    """Mutation compatibility of rank-2 pairs equals the hom trichotomy."""
    n = _require(n, 1, 4, 3)
    universe = get_arc_universe(n)
    checked = 0
    for X in _rank2_pairs(n):
        S, T = X.D[0], X.U[0]
        tri = engine.pair_mutation_compatible(universe, S, T)
        search = engine.is_completable(X).completable
        checked += 1
        if tri != search:
            return _report(
                "kstone-trichotomy", n, False, checked,
                witness={"pair": X.render(), "trichotomy": tri, "search": search},
            )
    return _report("kstone-trichotomy", n, True, checked)


def suite_rank2_arc_criterion(n: Optional[int] = None, seed: int = 0) -> dict:
    """
    Empirical record for the converse of the pairwise compatibility
    proposition: do the arc conditions (no interior crossing, no equal
    sources or targets, left-of at shared endpoints) characterise rank-2
    semibrick pairs?
    """
    n = _require(n, 1, 4, 3)
    universe = get_arc_universe(n)
    bricks = strings.enumerate_bricks(n)
    checked = 0
    for s, t in itertools.product(bricks, repeat=2):
        alpha = sigma_inverse(s, GREEN)
        beta = sigma_inverse(t, RED)
        conditions = noncrossing(alpha, beta) and alpha.curve() != beta.curve()
        if conditions and (alpha.src == beta.src or alpha.tar == beta.tar):
            conditions = False
        if conditions and alpha.tar == beta.src:
            conditions = is_left_of(alpha, beta)
        if conditions and beta.tar == alpha.src:
            conditions = is_left_of(beta, alpha)
        algebraic, _ = engine.is_semibrick_pair(universe, [s], [t])
        checked += 1
        if conditions != algebraic:
            return _report(
                "rank2-arc-criterion", n, False, checked,
                witness={"pair": [s.layers(), t.layers()], "arcs": conditions, "algebra": algebraic},
            )
    return _report("rank2-arc-criterion", n, True, checked)


def suite_a3_pairwise(n: Optional[int] = None, seed: int = 0) -> dict:
    """Exhaustive over RA_3: pairwise completable implies completable."""
    n = _require(n, 3, 3, 3)
    checked = 0
    for X in engine.all_semibrick_pairs(3):
        if not engine.is_pairwise_completable(X)[0]:
            continue
        checked += 1
        if not engine.is_completable(X).completable:
            return _report("a3-pairwise", n, False, checked, witness=X.render())
    return _report("a3-pairwise", n, True, checked)


def suite_a4_counterexample(n: Optional[int] = None, seed: int = 0) -> dict:
    """The rank-4 witness: pairwise completable but not completable."""
    from .strings import DOWN, UP

    universe = get_arc_universe(4)
    X = SemibrickPair(
        universe,
        [StringBrick(4, (2, 4), (DOWN, DOWN))],
        [StringBrick(4, (4, 4)), StringBrick(4, (1, 3), (UP, UP))],
    )
    facts = {
        "semibrick_pair": engine.is_semibrick_pair(universe, X.D, X.U)[0],
        "singly_left": engine.singly_left_compatible_everywhere(X),
        "pairwise": engine.is_pairwise_completable(X)[0],
        "not_completable": not engine.is_completable(X).completable,
    }
    Xp = engine.mutate_left(X, X.D[0])
    expected = SemibrickPair(
        universe,
        [StringBrick(4, (2, 3), (DOWN,))],
        [StringBrick(4, (2, 4), (DOWN, DOWN)), StringBrick(4, (1, 3), (UP, UP))],
    )
    facts["mutation_matches"] = Xp == expected
    ok, classes = engine.singly_left_compatible(Xp, Xp.D[0])
    facts["mutated_not_singly_left"] = not ok
    return _report("a4-counterexample", 4, all(facts.values()), len(facts),
                   witness=X.render(), facts=facts)


def suite_d4_counterexample(n: Optional[int] = None, seed: int = 0) -> dict:
    """The D4 witness of the same phenomenon, over the matrix universe."""
    universe = get_matrix_universe("PiD4")
    mods = quiver.d4_named_modules(universe.char)
    M, N, Np, E = (universe.intern(mods[k]) for k in ("M", "N", "N'", "E"))
    hom_facts = {
        "Hom(N,N')=0": quiver.hom_dim(N, Np) == 0,
        "Hom(N,M)=0": quiver.hom_dim(N, M) == 0,
        "Hom(N',M)=0": quiver.hom_dim(Np, M) == 0,
        "Hom(M,N')=0": quiver.hom_dim(M, Np) == 0,
        "Ext(N,M)=0": quiver.ext_dim(N, M) == 0,
        "Ext(N,N')=0": quiver.ext_dim(N, Np) == 0,
    }
    Xp = SemibrickPair(universe, [N], [Np, M])
    facts = dict(hom_facts)
    facts["X'_semibrick_pair"] = engine.is_semibrick_pair(universe, Xp.D, Xp.U)[0]
    facts["X'_not_singly_left"] = not engine.singly_left_compatible_everywhere(Xp)
    X = engine.mutate_right(Xp, M)
    facts["X_is_{M,N}+{E}[1]"] = sorted(universe.key(x) for x in X.D) == sorted(
        [universe.key(M), universe.key(N)]
    ) and [universe.key(x) for x in X.U] == [universe.key(E)]
    facts["X_singly_left"] = engine.singly_left_compatible_everywhere(X)
    facts["X_not_completable"] = not engine.is_completable(X).completable
    return _report("d4-counterexample", None, all(facts.values()), len(facts), facts=facts)


def suite_fullrank_smc(n: Optional[int] = None, seed: int = 0) -> dict:
    """
    Every pairwise completable full-rank pair is a 2-term simple minded
    collection, and the chain completion reproduces its permutation.
    """
    n = _require(n, 2, 4, 3)
    universe = get_arc_universe(n)
    smc_keys = {X.key() for X in engine.all_smcs(n, universe)}
    checked = 0
    for X in engine.all_semibrick_pairs(n, universe):
        if X.size != n or not engine.is_pairwise_completable(X)[0]:
            continue
        checked += 1
        if X.key() not in smc_keys:
            return _report("fullrank-smc", n, False, checked, witness=X.render())
        w = engine.complete_full_rank(X)
        if engine.smc_from_permutation(w, universe) != X:
            return _report("fullrank-smc", n, False, checked,
                           witness={"pair": X.render(), "word": list(w)})
    return _report("fullrank-smc", n, True, checked)


def suite_single_brick(n: Optional[int] = None, seed: int = 0) -> dict:
    """Full-rank pairs with a singleton side are always SMCs."""
    n = _require(n, 2, 4, 3)
    universe = get_arc_universe(n)
    smc_keys = {X.key() for X in engine.all_smcs(n, universe)}
    checked = 0
    for X in engine.all_semibrick_pairs(n, universe):
        if X.size != n or (len(X.D) != 1 and len(X.U) != 1):
            continue
        checked += 1
        if X.key() not in smc_keys:
            return _report("single-brick-smc", n, False, checked, witness=X.render())
    return _report("single-brick-smc", n, True, checked)


def suite_surjection(n: Optional[int] = None, seed: int = 0) -> dict:
    """
    For every semibrick pair, the one-sided completions hit the members:
    each S in D has a quotient in completion_of_U(U) and each T in U a
    submodule in completion_of_D(D), witnessed by closed subarcs.
    """
    n = _require(n, 1, 4, 3)
    universe = get_arc_universe(n)
    checked = 0
    for X in engine.all_semibrick_pairs(n, universe):
        Dp = engine.completion_of_U(universe, X.U)
        Up = engine.completion_of_D(universe, X.D)
        checked += 1
        for S in X.D:
            if not any(_is_quotient(R, S) for R in Dp):
                return _report("surjection", n, False, checked,
                               witness={"pair": X.render(), "member": S.layers()})
        for T in X.U:
            if not any(_is_submodule(V, T) for V in Up):
                return _report("surjection", n, False, checked,
                               witness={"pair": X.render(), "member": T.layers()})
    return _report("surjection", n, True, checked)


def _is_quotient(R: StringBrick, S: StringBrick) -> bool:
    from .arcs import is_predecessor_closed

    return is_predecessor_closed(sigma_inverse(R, GREEN), sigma_inverse(S, GREEN))


def _is_submodule(V: StringBrick, T: StringBrick) -> bool:
    from .arcs import is_successor_closed

    return is_successor_closed(sigma_inverse(V, GREEN), sigma_inverse(T, GREEN))


def suite_no_common_quotients(n: Optional[int] = None, seed: int = 0) -> dict:
    """
    For full-rank pairs: when the quotient sets D'(S) are pairwise disjoint
    the pair is already an SMC (dually for submodule sets).
    """
    n = _require(n, 2, 4, 3)
    universe = get_arc_universe(n)
    smc_keys = {X.key() for X in engine.all_smcs(n, universe)}
    checked = 0
    for X in engine.all_semibrick_pairs(n, universe):
        if X.size != n:
            continue
        Dp = engine.completion_of_U(universe, X.U)
        quotient_sets = [frozenset(R for R in Dp if _is_quotient(R, S)) for S in X.D]
        disjoint = all(
            not (a & b) for a, b in itertools.combinations(quotient_sets, 2)
        )
        checked += 1
        if disjoint and X.key() not in smc_keys:
            return _report("no-common-quotients", n, False, checked, witness=X.render())
        Up = engine.completion_of_D(universe, X.D)
        sub_sets = [frozenset(V for V in Up if _is_submodule(V, T)) for T in X.U]
        disjoint_u = all(not (a & b) for a, b in itertools.combinations(sub_sets, 2))
        if disjoint_u and X.key() not in smc_keys:
            return _report("no-common-quotients", n, False, checked, witness=X.render())
    return _report("no-common-quotients", n, True, checked)


def suite_oracle_completability(n: Optional[int] = None, seed: int = 0) -> dict:
    """
    The mutation search agrees with the permutation-containment criterion:
    exhaustively for n <= 3, and on 10000 seeded samples for n = 4 (the
    whole population is also swept, it is under a thousand pairs).
    """
    n = _require(n, 1, 4, 3)
    checked = 0
    if n <= 3:
        population = engine.all_semibrick_pairs(n)
    else:
        population = engine.all_semibrick_pairs(n) + engine.sample_semibrick_pairs(n, 10000, seed)
    for X in population:
        search = engine.is_completable(X).completable
        oracle = engine.permutation_oracle_completable(X)
        checked += 1
        if search != oracle:
            return _report("oracle-completability", n, False, checked,
                           witness={"pair": X.render(), "search": search, "oracle": oracle})
    return _report("oracle-completability", n, True, checked)


def suite_smc_census(n: Optional[int] = None, seed: int = 0) -> dict:
    """
    (n+1)! distinct SMCs, each of full rank and maximal: no brick extends
    one while preserving the semibrick pair conditions.
    """
    n = _require(n, 1, 4, 3)
    universe = get_arc_universe(n)
    smcs = engine.all_smcs(n, universe)
    keys = {X.key() for X in smcs}
    if len(keys) != len(smcs):
        return _report("smc-census", n, False, len(smcs), witness="collision")
    bricks = strings.enumerate_bricks(n)
    checked = 0
    for X in smcs:
        checked += 1
        if X.size != n:
            return _report("smc-census", n, False, checked, witness=X.render())
        members = set(X.D) | set(X.U)
        for b in bricks:
            if b in members:
                continue
            if engine.is_semibrick_pair(universe, list(X.D) + [b], X.U)[0]:
                return _report("smc-census", n, False, checked,
                               witness={"pair": X.render(), "extends": b.layers()})
            if engine.is_semibrick_pair(universe, X.D, list(X.U) + [b])[0]:
                return _report("smc-census", n, False, checked,
                               witness={"pair": X.render(), "extends": b.layers()})
    return _report("smc-census", n, True, checked)


def suite_mutation_duality(n: Optional[int] = None, seed: int = 0) -> dict:
    """mutate_right undoes mutate_left wherever the left mutation applies."""
    n = _require(n, 1, 3, 3)
    universe = get_arc_universe(n)
    checked = 0
    for X in engine.all_semibrick_pairs(n, universe):
        for S in X.D:
            ok, _ = engine.singly_left_compatible(X, S)
            if not ok:
                continue
            Y = engine.mutate_left(X, S)
            back = engine.mutate_right(Y, S)
            checked += 1
            if back != X:
                return _report("mutation-duality", n, False, checked,
                               witness={"pair": X.render(), "at": S.layers()})
    return _report("mutation-duality", n, True, checked)


def suite_mutation_closure(n: Optional[int] = None, seed: int = 0) -> dict:
    """Left mutation outputs remain semibrick pairs (exhaustive, small n)."""
    n = _require(n, 1, 3, 3)
    universe = get_arc_universe(n)
    checked = 0
    for X in engine.all_semibrick_pairs(n, universe):
        for S in X.D:
            ok, _ = engine.singly_left_compatible(X, S)
            if not ok:
                continue
            Y = engine.mutate_left(X, S)
            checked += 1
            if not engine.is_semibrick_pair(universe, Y.D, Y.U)[0]:
                return _report("mutation-closure", n, False, checked,
                               witness={"pair": X.render(), "at": S.layers()})
    return _report("mutation-closure", n, True, checked)


def suite_field_independence(n: Optional[int] = None, seed: int = 0) -> dict:
    """
    Completability over the matrix universe does not depend on the field
    characteristic (2, 3 and the default 101).
    """
    n = _require(n, 1, 3, 2)
    verdicts = []
    for char in (2, 3, 101):
        universe = get_matrix_universe("RA", n=n, char=char)
        outcome = []
        for X in engine.all_semibrick_pairs(n):
            Y = SemibrickPair(
                universe,
                [universe.of_string(b) for b in X.D],
                [universe.of_string(b) for b in X.U],
            )
            outcome.append(engine.is_completable(Y).completable)
        verdicts.append(outcome)
    ok = verdicts[0] == verdicts[1] == verdicts[2]
    return _report("field-independence", n, ok, 3 * len(verdicts[0]))


def suite_size3_reduction(n: Optional[int] = None, seed: int = 0) -> dict:
    """
    The rank-3 reduction, read off exhaustively: all pairwise completable
    pairs are completable iff all those of size 3 are.
    """
    n = _require(n, 1, 4, 4)
    def completable_filter(size_limit):
        for X in engine.all_semibrick_pairs(n):
            if size_limit is not None and X.size != size_limit:
                continue
            if engine.is_pairwise_completable(X)[0]:
                yield engine.is_completable(X).completable

    every = all(completable_filter(None))
    size3 = all(completable_filter(3))
    return _report("size3-reduction", n, every == size3, 2,
                   property_holds=every, size3_holds=size3)


SUITES: dict[str, Callable[..., dict]] = {
    "brick-census": suite_brick_census,
    "reading-census": suite_reading_census,
    "oracle-hom": suite_oracle_hom,
    "oracle-ext": suite_oracle_ext,
    "kstone": suite_kstone,
    "kstone-d4": suite_kstone_d4,
    "kstone-trichotomy": suite_kstone_trichotomy,
    "rank2-arc-criterion": suite_rank2_arc_criterion,
    "a3-pairwise": suite_a3_pairwise,
    "a4-counterexample": suite_a4_counterexample,
    "d4-counterexample": suite_d4_counterexample,
    "fullrank-smc": suite_fullrank_smc,
    "single-brick-smc": suite_single_brick,
    "surjection": suite_surjection,
    "no-common-quotients": suite_no_common_quotients,
    "oracle-completability": suite_oracle_completability,
    "smc-census": suite_smc_census,
    "mutation-duality": suite_mutation_duality,
    "mutation-closure": suite_mutation_closure,
    "field-independence": suite_field_independence,
    "size3-reduction": suite_size3_reduction,
}


def verify_suite(name: str, n: Optional[int] = None, seed: int = 0) -> dict:
    """Run a registered suite; unknown names and out-of-range n raise."""
    key = name.lower()
    if key not in SUITES:
        raise SuiteError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    return SUITES[key](n=n, seed=seed)
