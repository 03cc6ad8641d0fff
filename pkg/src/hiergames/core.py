"""Multiset universes, coalitions, and explicit monotone simple games.

Players come in levels: the universe {1^n1, ..., m^nm} has n_i interchangeable
players at level i. A coalition is a submultiset, stored as a vector of
per-level counts. A game is given by the antichain of its minimal winning
coalitions; losing maxima, the desirability preorder on levels, completeness,
and special players (dummies, passers, blockers) are all derived from it.

Everything here is exact and deterministic. Full enumerations of the coalition
lattice are guarded by a configurable cap (HIERGAME_ENUM_CAP) so that a typo
in a universe cannot silently turn into a billion-element loop.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable, Iterator

__all__ = [
    "DEFAULT_ENUM_CAP",
    "ENUM_CAP_ENV",
    "EnumerationCapError",
    "Multiset",
    "Coalition",
    "ExplicitGame",
    "LevelRelation",
    "SpecialPlayers",
    "enumeration_cap",
    "iter_coalitions",
    "is_winning",
    "maximal_losing",
    "level_relation",
    "is_complete",
    "special_players",
]

DEFAULT_ENUM_CAP = 10**7
ENUM_CAP_ENV = "HIERGAME_ENUM_CAP"


class EnumerationCapError(RuntimeError):
    """Raised when a requested enumeration would exceed the coalition cap."""


def enumeration_cap() -> int:
    """Current enumeration cap: HIERGAME_ENUM_CAP if set, else the default."""
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap <= 0:
        raise ValueError(f"{ENUM_CAP_ENV} must be positive, got {cap}")
    return cap


def _int_tuple(values: Iterable[int], what: str, minimum: int) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"{what} entries must be ints, got {v!r}")
        if v < minimum:
            raise ValueError(f"{what} entries must be >= {minimum}, got {v}")
        out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class Multiset:
    """Universe of players: counts[i] players at level i (0-indexed internally)."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = _int_tuple(self.counts, "universe count", 1)
        if not counts:
            raise ValueError("universe needs at least one level")
        object.__setattr__(self, "counts", counts)

    @property
    def m(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def prefix_totals(self) -> tuple[int, ...]:
        """(N_1, ..., N_m) where N_i = n_1 + ... + n_i."""
        out, acc = [], 0
        for c in self.counts:
            acc += c
            out.append(acc)
        return tuple(out)

    def coalition_count(self) -> int:
        return math.prod(c + 1 for c in self.counts)

    def full(self) -> Coalition:
        return Coalition(self.counts)

    def fits(self, coalition: Coalition) -> bool:
        return len(coalition.counts) == self.m and all(
            x <= n for x, n in zip(coalition.counts, self.counts)
        )

    def complement(self, coalition: Coalition) -> Coalition:
        if not self.fits(coalition):
            raise ValueError(f"{coalition} is not a submultiset of {self}")
        return Coalition(tuple(n - x for x, n in zip(coalition.counts, self.counts)))

    def __str__(self) -> str:
        return "{" + ",".join(f"{i + 1}^{c}" for i, c in enumerate(self.counts)) + "}"


@dataclass(frozen=True)
class Coalition:
    """Submultiset of some universe, as a vector of per-level counts."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", _int_tuple(self.counts, "coalition count", 0))

    @property
    def size(self) -> int:
        return sum(self.counts)

    def prefix(self, i: int) -> int:
        """Count of members at levels 0..i inclusive."""
        return sum(self.counts[: i + 1])

    def contains(self, other: Coalition) -> bool:
        """Pointwise >=; both coalitions must live in the same universe."""
        if len(self.counts) != len(other.counts):
            raise ValueError("coalitions from different universes")
        return all(a >= b for a, b in zip(self.counts, other.counts))

    def with_unit(self, level: int, delta: int = 1) -> Coalition:
        new = list(self.counts)
        new[level] += delta
        return Coalition(tuple(new))

    def __str__(self) -> str:
        parts = [f"{i + 1}^{c}" for i, c in enumerate(self.counts) if c > 0]
        return "{" + ",".join(parts) + "}" if parts else "{}"


def iter_coalitions(universe: Multiset, cap: int | None = None) -> Iterator[Coalition]:
    """All submultisets of the universe, in lexicographic count order.

    Raises EnumerationCapError when the lattice has more than `cap` members
    (default: enumeration_cap()).
    """
    limit = enumeration_cap() if cap is None else cap
    total = universe.coalition_count()
    if total > limit:
        raise EnumerationCapError(
            f"universe {universe} has {total} coalitions, cap is {limit}"
        )
    for counts in product(*(range(n + 1) for n in universe.counts)):
        yield Coalition(counts)


def _minimal_antichain(members: Iterable[Coalition]) -> frozenset[Coalition]:
    pool = set(members)
    keep = set()
    for x in pool:
        if not any(y is not x and x.contains(y) and x != y for y in pool):
            keep.add(x)
    # equal duplicates collapse in the set; strict containments are dropped above
    return frozenset(keep)


@dataclass(frozen=True)
class ExplicitGame:
    """Monotone simple game given by its minimal winning coalitions.

    The constructor accepts any generating set of winning coalitions and
    normalizes it to the minimal antichain, so equality of ExplicitGame values
    is equality of games. The empty antichain (nothing wins) and the antichain
    {empty coalition} (everything wins) are representable; most derived
    operations treat them as edge cases rather than rejecting them.
    """

    universe: Multiset
    min_winning: frozenset[Coalition]

    def __post_init__(self) -> None:
        members = []
        for w in self.min_winning:
            if not isinstance(w, Coalition):
                raise TypeError(f"min_winning entries must be Coalition, got {w!r}")
            if not self.universe.fits(w):
                raise ValueError(f"{w} does not fit in universe {self.universe}")
            members.append(w)
        object.__setattr__(self, "min_winning", _minimal_antichain(members))

    @property
    def m(self) -> int:
        return self.universe.m


def is_winning(game: ExplicitGame, coalition: Coalition) -> bool:
    """True iff the coalition contains some minimal winning coalition."""
    if not game.universe.fits(coalition):
        raise ValueError(f"{coalition} does not fit in universe {game.universe}")
    return any(coalition.contains(w) for w in game.min_winning)


def maximal_losing(game: ExplicitGame, cap: int | None = None) -> frozenset[Coalition]:
    """Antichain of losing coalitions all of whose strict supersets win.

    Enumerates the full coalition lattice (cap applies). A losing coalition is
    maximal iff every single-unit extension wins, by monotonicity.
    """
    n = game.universe.counts
    losing = {x for x in iter_coalitions(game.universe, cap) if not is_winning(game, x)}
    out = []
    for x in losing:
        if all(
            x.counts[i] == n[i] or x.with_unit(i) not in losing
            for i in range(len(n))
        ):
            out.append(x)
    return frozenset(out)


class LevelRelation(Enum):
    """Desirability comparison of two player levels."""

    EQUIVALENT = "equivalent"
    STRICTLY_ABOVE = "strictly_above"
    STRICTLY_BELOW = "strictly_below"
    INCOMPARABLE = "incomparable"


def level_relation(game: ExplicitGame, i: int, j: int, cap: int | None = None) -> LevelRelation:
    """Compare levels i and j (0-indexed) in the desirability preorder.

    Level i is at least as desirable as j iff for every coalition X avoiding
    one unit of each, X + {j} winning implies X + {i} winning. Tested by
    enumerating coalitions with capacity n_i - 1 and n_j - 1 at the two levels.
    """
    m = game.universe.m
    if i == j or not (0 <= i < m and 0 <= j < m):
        raise ValueError(f"need two distinct levels in 0..{m - 1}, got {i}, {j}")
    caps = list(game.universe.counts)
    caps[i] -= 1
    caps[j] -= 1
    limit = enumeration_cap() if cap is None else cap
    if math.prod(c + 1 for c in caps) > limit:
        raise EnumerationCapError(f"level comparison on {game.universe} exceeds cap {limit}")
    i_ge_j = True
    j_ge_i = True
    for counts in product(*(range(c + 1) for c in caps)):
        x = Coalition(counts)
        wi = is_winning(game, x.with_unit(i))
        wj = is_winning(game, x.with_unit(j))
        if wj and not wi:
            i_ge_j = False
        if wi and not wj:
            j_ge_i = False
        if not i_ge_j and not j_ge_i:
            return LevelRelation.INCOMPARABLE
    if i_ge_j and j_ge_i:
        return LevelRelation.EQUIVALENT
    return LevelRelation.STRICTLY_ABOVE if i_ge_j else LevelRelation.STRICTLY_BELOW


def is_complete(game: ExplicitGame, cap: int | None = None) -> bool:
    """True iff every pair of levels is comparable in desirability."""
    m = game.universe.m
    return all(
        level_relation(game, i, j, cap) is not LevelRelation.INCOMPARABLE
        for i in range(m)
        for j in range(i + 1, m)
    )


@dataclass(frozen=True)
class SpecialPlayers:
    """Level indices (0-based) of the three special kinds.

    dummies: levels absent from every minimal winning coalition.
    passers: levels whose single player already wins alone.
    blockers: levels whose total removal from the full coalition makes it lose.
    """

    dummies: frozenset[int]
    passers: frozenset[int]
    blockers: frozenset[int]


def special_players(game: ExplicitGame) -> SpecialPlayers:
    m = game.universe.m
    dummies = frozenset(
        i for i in range(m) if all(w.counts[i] == 0 for w in game.min_winning)
    )
    zero = (0,) * m
    passers = frozenset(
        i for i in range(m) if is_winning(game, Coalition(zero).with_unit(i))
    )
    full = game.universe.full()
    blockers = frozenset(
        i
        for i in range(m)
        if not is_winning(game, full.with_unit(i, -full.counts[i]))
    )
    return SpecialPlayers(dummies=dummies, passers=passers, blockers=blockers)
