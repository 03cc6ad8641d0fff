"""Verification harness: classifier-vs-oracle sweeps and the structural scan.

run_sweep walks a canonical grid of specs, classifies each one structurally,
reclassifies it with the LP oracle on the realized game, verifies any
certificate arithmetically, and reports every disagreement. The classifier
and the oracle share no decision logic, so agreement across a grid is real
evidence, not an echo.

structural_scan enumerates every monotone game on a small universe (as
nonempty antichains of nonempty coalitions) and tests the structural
equivalences on the complete ones:

  unique shift-maximal losing coalition  <=>  disjunctive hierarchical,
  unique shift-minimal winning coalition <=>  conjunctive hierarchical,

after reordering levels by desirability and merging equivalent levels, which
is what "hierarchical" means for a game rather than a spec.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from .classifier import Verdict, classify_rough
from .core import (
    Coalition,
    EnumerationCapError,
    ExplicitGame,
    LevelRelation,
    Multiset,
    is_complete,
    iter_coalitions,
    level_relation,
)
from .hierarchy import (
    CONJUNCTIVE,
    DISJUNCTIVE,
    HierSpec,
    canon_check,
    merge_levels,
    realize,
    recover_conjunctive,
    recover_disjunctive,
    shift_extremal,
)
from .oracle import oracle_classify, verify_representation

__all__ = [
    "SweepRecord",
    "SweepReport",
    "StructuralReport",
    "sweep_specs",
    "run_sweep",
    "structural_scan",
]


@dataclass(frozen=True)
class SweepRecord:
    """One grid point: structural verdict, oracle verdict, certificate check."""

    spec: HierSpec
    verdict: Verdict
    oracle_class: Optional[str]
    cert_verified: Optional[bool]
    classify_seconds: float
    oracle_seconds: float
    skipped: Optional[str] = None

    @property
    def agree(self) -> bool:
        if self.skipped is not None:
            return True  # nothing to compare
        if self.oracle_class is not None and self.oracle_class != self.verdict.game_class:
            return False
        return self.cert_verified is not False


@dataclass(frozen=True)
class SweepReport:
    kind: str
    levels: int
    nmax: int
    kmax: Optional[int]
    records: tuple[SweepRecord, ...]

    @property
    def disagreements(self) -> tuple[SweepRecord, ...]:
        return tuple(r for r in self.records if not r.agree)

    @property
    def all_agree(self) -> bool:
        return not self.disagreements

    def class_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for r in self.records:
            counts[r.verdict.game_class] = counts.get(r.verdict.game_class, 0) + 1
        return counts


def sweep_specs(
    kind: str, levels: int, nmax: int, kmax: Optional[int] = None
) -> Iterator[HierSpec]:
    """All canonical specs of a kind on `levels` levels with n_i <= nmax.

    Canonical by construction: k_1 ranges over 1..n_1 and each increment
    k_i - k_{i-1} over the canonical band (1..n_i-1 for middle levels;
    1..n_m disjunctive / 0..n_m-1 conjunctive for the last). kmax, when
    given, drops specs whose largest threshold exceeds it. Deterministic
    lexicographic order.
    """
    if kind not in (DISJUNCTIVE, CONJUNCTIVE):
        raise ValueError(f"unknown kind {kind!r}")
    if levels < 1 or nmax < 1:
        raise ValueError("levels and nmax must be >= 1")
    for n in product(range(1, nmax + 1), repeat=levels):
        ranges = [range(1, n[0] + 1)]
        for i in range(1, levels):
            if i < levels - 1:
                ranges.append(range(1, n[i]))
            elif kind == DISJUNCTIVE:
                ranges.append(range(1, n[i] + 1))
            else:
                ranges.append(range(0, n[i]))
        for deltas in product(*ranges):
            k = []
            acc = 0
            for d in deltas:
                acc += d
                k.append(acc)
            if kmax is not None and k[-1] > kmax:
                continue
            spec = HierSpec(kind, n, tuple(k))
            assert canon_check(spec).canonical, spec
            yield spec


def run_sweep(
    kind: str,
    levels: int,
    nmax: int,
    kmax: Optional[int] = None,
    oracle: bool = True,
    cap: int | None = None,
) -> SweepReport:
    """Classify a whole grid, cross-validating against the oracle.

    Specs whose realization overflows the enumeration cap are recorded as
    skipped (with the structural verdict kept, certificate unverified).
    """
    records = []
    for spec in sweep_specs(kind, levels, nmax, kmax):
        t0 = time.perf_counter()
        verdict = classify_rough(spec)
        t1 = time.perf_counter()
        oracle_class: Optional[str] = None
        cert_verified: Optional[bool] = None
        skipped: Optional[str] = None
        t2 = t1
        if oracle:
            try:
                game = realize(spec, cap)
                oracle_class = oracle_classify(game, cap)
                if verdict.certificate is not None:
                    mode = "weighted" if verdict.game_class == "weighted" else "rough"
                    cert_verified = verify_representation(
                        game, verdict.certificate, mode, cap
                    )
                t2 = time.perf_counter()
            except EnumerationCapError as exc:
                skipped = str(exc)
                oracle_class = None
                cert_verified = None
                t2 = time.perf_counter()
        records.append(
            SweepRecord(
                spec=spec,
                verdict=verdict,
                oracle_class=oracle_class,
                cert_verified=cert_verified,
                classify_seconds=t1 - t0,
                oracle_seconds=t2 - t1,
                skipped=skipped,
            )
        )
    return SweepReport(kind, levels, nmax, kmax, tuple(records))


@dataclass(frozen=True)
class StructuralReport:
    """Outcome of the antichain scan on one universe."""

    universe: Multiset
    total_games: int
    complete_games: int
    unique_shift_max_losing: int
    disjunctive_hierarchical: int
    unique_shift_min_winning: int
    conjunctive_hierarchical: int
    mismatches: tuple[str, ...]

    @property
    def holds(self) -> bool:
        return not self.mismatches


def _antichains(coalitions: list[Coalition]) -> Iterator[frozenset[Coalition]]:
    items = sorted(coalitions, key=lambda c: c.counts)

    def rec(idx: int, chosen: list[Coalition]) -> Iterator[frozenset[Coalition]]:
        if idx == len(items):
            if chosen:
                yield frozenset(chosen)
            return
        yield from rec(idx + 1, chosen)
        cand = items[idx]
        if all(
            not cand.contains(other) and not other.contains(cand) for other in chosen
        ):
            chosen.append(cand)
            yield from rec(idx + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


def _order_and_merge(game: ExplicitGame) -> ExplicitGame:
    """Sort levels by descending desirability, merging equivalent ones.

    Requires a complete game; the result has strictly ordered levels."""
    classes: list[list[int]] = []
    for lvl in range(game.universe.m):
        placed = False
        for idx, cls in enumerate(classes):
            rel = level_relation(game, lvl, cls[0])
            if rel is LevelRelation.EQUIVALENT:
                cls.append(lvl)
                placed = True
                break
            if rel is LevelRelation.STRICTLY_ABOVE:
                classes.insert(idx, [lvl])
                placed = True
                break
            if rel is LevelRelation.INCOMPARABLE:
                raise ValueError("game is not complete")
        if not placed:
            classes.append([lvl])
    return merge_levels(game, classes)


def structural_scan(universe: Multiset, cap: int | None = None) -> StructuralReport:
    """Test the shift-extremal uniqueness equivalences over one universe.

    Enumerates every game (nonempty antichain of nonempty coalitions), keeps
    the complete ones, and for each checks both directions of both
    equivalences. Any failure lands in mismatches with enough detail to
    replay it.
    """
    coalitions = [c for c in iter_coalitions(universe, cap) if c.size > 0]
    total = 0
    complete = 0
    usml = 0
    disj = 0
    usmw = 0
    conj = 0
    mismatches: list[str] = []
    for members in _antichains(coalitions):
        total += 1
        game = ExplicitGame(universe, members)
        if not is_complete(game, cap):
            continue
        complete += 1
        ordered = _order_and_merge(game)
        extremal = shift_extremal(ordered, cap)
        d = recover_disjunctive(ordered, cap)
        c = recover_conjunctive(ordered, cap)
        unique_max = len(extremal.shift_max_losing) == 1
        unique_min = len(extremal.shift_min_winning) == 1
        usml += unique_max
        usmw += unique_min
        disj += d is not None
        conj += c is not None
        detail = f"universe={universe} min_winning={sorted(w.counts for w in members)}"
        if unique_max != (d is not None):
            mismatches.append(
                f"{detail}: unique shift-max losing={unique_max} but disjunctive recovery={d}"
            )
        if unique_min != (c is not None):
            mismatches.append(
                f"{detail}: unique shift-min winning={unique_min} but conjunctive recovery={c}"
            )
    return StructuralReport(
        universe=universe,
        total_games=total,
        complete_games=complete,
        unique_shift_max_losing=usml,
        disjunctive_hierarchical=disj,
        unique_shift_min_winning=usmw,
        conjunctive_hierarchical=conj,
        mismatches=tuple(mismatches),
    )
