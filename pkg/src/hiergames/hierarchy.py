"""Hierarchical game specs: prefix-threshold games on leveled universes.

A spec (kind, n, k) describes a game on the universe {1^n1, ..., m^nm}:

  disjunctive: X wins iff SOME i has x_1 + ... + x_i >= k_i,
  conjunctive: X wins iff EVERY i has x_1 + ... + x_i >= k_i,

with k strictly increasing (conjunctive: the last pair may be equal). Distinct
specs can describe the same game; canon_check tests the canonical-form
conditions under which the m levels are strictly ordered by desirability, and
canonicalize_semantic rebuilds the canonical spec of any spec's game from the
game itself (merging equivalent levels).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    Coalition,
    ExplicitGame,
    LevelRelation,
    Multiset,
    is_winning,
    iter_coalitions,
    level_relation,
    maximal_losing,
)

__all__ = [
    "DISJUNCTIVE",
    "CONJUNCTIVE",
    "HierSpec",
    "CanonReport",
    "ShiftExtremal",
    "hier_is_winning",
    "realize",
    "canon_check",
    "canonicalize_semantic",
    "merge_levels",
    "truncate",
    "shift_maximal_losing",
    "shift_extremal",
    "recover_disjunctive",
    "recover_conjunctive",
]

DISJUNCTIVE = "disjunctive"
CONJUNCTIVE = "conjunctive"


@dataclass(frozen=True)
class HierSpec:
    """A disjunctive or conjunctive prefix-threshold spec.

    Validation enforces positive counts and thresholds, the kind's
    monotonicity law on k, and non-degeneracy: the full coalition must win
    (otherwise the spec describes a game with no winning coalitions at all,
    which no amount of thresholds can make interesting).
    """

    kind: str
    n: tuple[int, ...]
    k: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in (DISJUNCTIVE, CONJUNCTIVE):
            raise ValueError(f"kind must be {DISJUNCTIVE!r} or {CONJUNCTIVE!r}, got {self.kind!r}")
        n = tuple(int(v) for v in self.n)
        k = tuple(int(v) for v in self.k)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        if len(n) != len(k) or not n:
            raise ValueError(f"n and k must be equal-length and nonempty, got {n} / {k}")
        if any(v < 1 for v in n):
            raise ValueError(f"level counts must be >= 1, got {n}")
        if any(v < 1 for v in k):
            raise ValueError(f"thresholds must be >= 1, got {k}")
        m = len(k)
        for i in range(1, m):
            strict = self.kind == DISJUNCTIVE or i < m - 1
            if k[i] < k[i - 1] or (strict and k[i] == k[i - 1]):
                raise ValueError(f"thresholds must increase ({self.kind}), got {k}")
        prefixes = Multiset(n).prefix_totals()
        ok = (
            any(prefixes[i] >= k[i] for i in range(m))
            if self.kind == DISJUNCTIVE
            else all(prefixes[i] >= k[i] for i in range(m))
        )
        if not ok:
            raise ValueError(f"degenerate spec, full coalition loses: n={n} k={k}")

    @property
    def m(self) -> int:
        return len(self.n)

    def universe(self) -> Multiset:
        return Multiset(self.n)

    def deltas(self) -> tuple[int, ...]:
        """(k_1, k_2 - k_1, ..., k_m - k_{m-1})."""
        return tuple(b - a for a, b in zip((0,) + self.k, self.k))

    def __str__(self) -> str:
        tag = "E" if self.kind == DISJUNCTIVE else "A"
        return f"H_{tag}(n={self.n}, k={self.k})"


def hier_is_winning(spec: HierSpec, coalition: Coalition) -> bool:
    """Prefix-threshold test, O(m)."""
    if not spec.universe().fits(coalition):
        raise ValueError(f"{coalition} does not fit in universe {spec.universe()}")
    acc = 0
    hits = 0
    for x, k in zip(coalition.counts, spec.k):
        acc += x
        if acc >= k:
            hits += 1
    return hits > 0 if spec.kind == DISJUNCTIVE else hits == spec.m


def realize(spec: HierSpec, cap: int | None = None) -> ExplicitGame:
    """Explicit game of a spec: minimal winning coalitions by lattice scan.

    A winning coalition is minimal iff removing any single unit loses.
    Cost O(product(n_i + 1) * m), guarded by the enumeration cap.
    """
    universe = spec.universe()
    minimal = []
    for x in iter_coalitions(universe, cap):
        if not hier_is_winning(spec, x):
            continue
        if all(
            x.counts[i] == 0 or not hier_is_winning(spec, x.with_unit(i, -1))
            for i in range(spec.m)
        ):
            minimal.append(x)
    return ExplicitGame(universe, frozenset(minimal))


@dataclass(frozen=True)
class CanonReport:
    """Canonical-form report for a spec.

    condition_a: k_1 <= n_1.
    condition_b: one flag per level 2..m. Middle levels require
        k_i < k_{i-1} + n_i for both kinds. The last level allows equality for
        the disjunctive kind (that boundary is the canonical form of games
        whose last level is dummy) and stays strict for the conjunctive kind
        (equality there collapses the last two levels into one class).
    canonical: condition_a and all of condition_b. Exactly then the m levels
        of the realized game are strictly ordered by desirability.
    dummy_last_level / passer_first_level / blocker_first_level: formula-level
        flags; passer means a single top-level player wins alone, blocker
        means every first-level player is a vetoer.
    normalized_spec: same game, with an out-of-range disjunctive k_m clamped
        to k_{m-1} + n_m; other specs pass through unchanged.
    """

    canonical: bool
    condition_a: bool
    condition_b: tuple[bool, ...]
    dummy_last_level: bool
    passer_first_level: bool
    blocker_first_level: bool
    normalized_spec: HierSpec


def canon_check(spec: HierSpec) -> CanonReport:
    n, k, m = spec.n, spec.k, spec.m
    cond_a = k[0] <= n[0]
    cond_b = []
    for i in range(1, m):
        bound = k[i - 1] + n[i]
        if i == m - 1 and spec.kind == DISJUNCTIVE:
            cond_b.append(k[i] <= bound)
        else:
            cond_b.append(k[i] < bound)
    if spec.kind == DISJUNCTIVE:
        dummy = m >= 2 and k[-1] >= k[-2] + n[-1]
        passer = k[0] == 1
        prefixes = spec.universe().prefix_totals()
        blocker = all(k[i] >= prefixes[i] for i in range(m))
    else:
        dummy = m >= 2 and k[-1] == k[-2]
        passer = m == 1 and k[0] == 1
        blocker = k[0] == n[0]
    normalized = spec
    if spec.kind == DISJUNCTIVE and m >= 2 and k[-1] > k[-2] + n[-1]:
        normalized = HierSpec(spec.kind, n, k[:-1] + (k[-2] + n[-1],))
    return CanonReport(
        canonical=cond_a and all(cond_b),
        condition_a=cond_a,
        condition_b=tuple(cond_b),
        dummy_last_level=dummy,
        passer_first_level=passer,
        blocker_first_level=blocker,
        normalized_spec=normalized,
    )


def truncate(spec: HierSpec) -> HierSpec:
    """Drop the last level: ((n_1..n_{m-1}), (k_1..k_{m-1})), same kind."""
    if spec.m < 2:
        raise ValueError("cannot truncate a one-level spec")
    return HierSpec(spec.kind, spec.n[:-1], spec.k[:-1])


def _class_partition(game: ExplicitGame, cap: int | None) -> list[list[int]]:
    # adjacent comparisons suffice: desirability never increases along levels
    classes: list[list[int]] = [[0]]
    for lvl in range(1, game.universe.m):
        rel = level_relation(game, lvl - 1, lvl, cap)
        if rel is LevelRelation.EQUIVALENT:
            classes[-1].append(lvl)
        elif rel is LevelRelation.STRICTLY_ABOVE:
            classes.append([lvl])
        else:
            raise RuntimeError(f"level {lvl} more desirable than {lvl - 1} in {game.universe}")
    return classes


def merge_levels(game: ExplicitGame, classes: list[list[int]]) -> ExplicitGame:
    """Collapse each listed class of equally desirable levels into one level.

    Sound only when the levels inside each class really are interchangeable;
    then a merged coalition wins iff any (equivalently every) way of spreading
    it over the original levels wins, and summing the minimal winning
    coalitions classwise generates exactly the merged game.
    """

    def squash(counts: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sum(counts[i] for i in cls) for cls in classes)

    merged_universe = Multiset(squash(game.universe.counts))
    merged_wmin = frozenset(Coalition(squash(w.counts)) for w in game.min_winning)
    return ExplicitGame(merged_universe, merged_wmin)


def canonicalize_semantic(
    spec: HierSpec, cap: int | None = None
) -> tuple[HierSpec, tuple[int, ...]]:
    """Canonical spec of the game described by `spec`, plus the level mapping.

    Realizes the game, merges equivalence classes of levels, and recovers the
    thresholds from the game itself (largest losing prefixes for disjunctive,
    smallest winning prefixes for conjunctive). The recovered spec is verified
    against the merged game coalition by coalition, so the result provably
    describes the same game. mapping[i] is the class index of original level i.
    """
    game = realize(spec, cap)
    classes = _class_partition(game, cap)
    merged = merge_levels(game, classes)
    recover = recover_disjunctive if spec.kind == DISJUNCTIVE else recover_conjunctive
    canonical = recover(merged, cap)
    if canonical is None:
        raise RuntimeError(f"merged game of {spec} failed threshold recovery")
    mapping = []
    for cls_index, cls in enumerate(classes):
        mapping.extend([cls_index] * len(cls))
    return canonical, tuple(mapping)


def recover_disjunctive(game: ExplicitGame, cap: int | None = None) -> Optional[HierSpec]:
    """Canonical disjunctive spec describing `game`, or None.

    Candidate thresholds: k_i = 1 + (largest i-prefix among losing
    coalitions). The candidate is then checked against the game on the whole
    lattice; any mismatch, or a candidate violating spec validation, means the
    game is not disjunctive-hierarchical on this universe.
    """
    return _recover(game, DISJUNCTIVE, cap)


def recover_conjunctive(game: ExplicitGame, cap: int | None = None) -> Optional[HierSpec]:
    """Canonical conjunctive spec describing `game`, or None.

    Candidate thresholds: k_i = smallest i-prefix among winning coalitions.
    """
    return _recover(game, CONJUNCTIVE, cap)


def _recover(game: ExplicitGame, kind: str, cap: int | None) -> Optional[HierSpec]:
    if not game.min_winning or any(w.size == 0 for w in game.min_winning):
        return None
    m = game.universe.m
    best: list[Optional[int]] = [None] * m
    for x in iter_coalitions(game.universe, cap):
        winning = is_winning(game, x)
        if kind == DISJUNCTIVE and not winning:
            for i in range(m):
                p = x.prefix(i)
                if best[i] is None or p > best[i]:
                    best[i] = p
        elif kind == CONJUNCTIVE and winning:
            for i in range(m):
                p = x.prefix(i)
                if best[i] is None or p < best[i]:
                    best[i] = p
    if any(b is None for b in best):
        return None
    k = tuple(b + 1 for b in best) if kind == DISJUNCTIVE else tuple(best)
    try:
        spec = HierSpec(kind, game.universe.counts, k)
    except ValueError:
        return None
    if not canon_check(spec).canonical:
        return None
    for x in iter_coalitions(game.universe, cap):
        if hier_is_winning(spec, x) != is_winning(game, x):
            return None
    return spec


@dataclass(frozen=True)
class ShiftExtremal:
    """Shift-minimal winning and shift-maximal losing coalitions of a game.

    A shift moves one unit from a level to a strictly less desirable level.
    Shift-minimal winning: minimal winning, and every shift of it loses.
    Shift-maximal losing: maximal losing, and every inverse shift of it wins.
    """

    shift_min_winning: frozenset[Coalition]
    shift_max_losing: frozenset[Coalition]


def shift_extremal(game: ExplicitGame, cap: int | None = None) -> ShiftExtremal:
    """Both shift-extremal antichains of a game with strictly ordered levels.

    Raises ValueError unless level i is strictly more desirable than level j
    for every i < j (merge equivalent levels first; shifts between equally
    desirable levels would not change the game).
    """
    m = game.universe.m
    n = game.universe.counts
    for i in range(m):
        for j in range(i + 1, m):
            if level_relation(game, i, j, cap) is not LevelRelation.STRICTLY_ABOVE:
                raise ValueError(f"levels {i} and {j} are not strictly ordered")

    def shifts(x: Coalition, weakening: bool):
        for i in range(m):
            for j in range(i + 1, m):
                src, dst = (i, j) if weakening else (j, i)
                if x.counts[src] >= 1 and x.counts[dst] < n[dst]:
                    yield x.with_unit(src, -1).with_unit(dst, 1)

    smw = frozenset(
        w
        for w in game.min_winning
        if not any(is_winning(game, y) for y in shifts(w, weakening=True))
    )
    sml = frozenset(
        x
        for x in maximal_losing(game, cap)
        if all(is_winning(game, y) for y in shifts(x, weakening=False))
    )
    return ShiftExtremal(shift_min_winning=smw, shift_max_losing=sml)


def shift_maximal_losing(spec: HierSpec) -> Coalition:
    """The unique shift-maximal losing coalition of a canonical disjunctive
    spec without passers or dummies: (k_1 - 1, k_2 - k_1, ..., k_m - k_{m-1}).

    Raises ValueError for conjunctive specs, non-canonical specs, passers
    (k_1 = 1), or a dummy last level, where this closed form does not apply.
    """
    if spec.kind != DISJUNCTIVE:
        raise ValueError("closed form applies to disjunctive specs")
    report = canon_check(spec)
    if not report.canonical:
        raise ValueError(f"{spec} is not canonical")
    if report.passer_first_level:
        raise ValueError(f"{spec} has passers (k_1 = 1)")
    if report.dummy_last_level:
        raise ValueError(f"{spec} has a dummy last level")
    d = spec.deltas()
    return Coalition((spec.k[0] - 1,) + d[1:])
