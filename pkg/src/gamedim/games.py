"""Core model for coalitions and simple games.

A simple game over members 1..n is an upward-closed family of winning
coalitions.  Weighted games realize the threshold rule
``sum(weights[m] for m in C) >= quota``; arbitrary simple games are built as
unions and intersections of weighted or explicitly listed games.  All weight
and quota arithmetic is exact (``fractions.Fraction``), never floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

MAX_MEMBERS = 64
ENUMERATION_GUARD = 20


@dataclass(frozen=True)
class Coalition:
    """A subset of the members 1..n, stored as a bitmask (bit i-1 = member i).

    Canonical by construction: membership order and duplicates cannot be
    represented, and two coalitions over the same member count are equal
    iff their member sets are equal.
    """

    n: int
    mask: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_MEMBERS:
            raise ValueError(f"member count must be in 1..{MAX_MEMBERS}, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"coalition mask {self.mask:#x} out of range for n={self.n}")

    @classmethod
    def from_indices(cls, indices: Iterable[int], n: int) -> "Coalition":
        mask = 0
        for i in indices:
            if not 1 <= i <= n:
                raise ValueError(f"member index {i} out of range 1..{n}")
            bit = 1 << (i - 1)
            if mask & bit:
                raise ValueError(f"duplicate member index {i}")
            mask |= bit
        return cls(n, mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, member: int) -> bool:
        return 1 <= member <= self.n and bool(self.mask >> (member - 1) & 1)

    def _check_same_ground(self, other: "Coalition") -> None:
        if self.n != other.n:
            raise ValueError(f"member count mismatch: {self.n} vs {other.n}")

    def union(self, other: "Coalition") -> "Coalition":
        self._check_same_ground(other)
        return Coalition(self.n, self.mask | other.mask)

    def intersection(self, other: "Coalition") -> "Coalition":
        self._check_same_ground(other)
        return Coalition(self.n, self.mask & other.mask)

    def difference(self, other: "Coalition") -> "Coalition":
        self._check_same_ground(other)
        return Coalition(self.n, self.mask & ~other.mask)

    def symmetric_difference(self, other: "Coalition") -> "Coalition":
        self._check_same_ground(other)
        return Coalition(self.n, self.mask ^ other.mask)

    def issubset(self, other: "Coalition") -> bool:
        self._check_same_ground(other)
        return self.mask & ~other.mask == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __xor__ = symmetric_difference
    __le__ = issubset

    def __str__(self) -> str:
        return "{" + ",".join(str(m) for m in self.members) + "}"


def coalition_sort_key(c: Coalition) -> tuple[int, tuple[int, ...]]:
    """Canonical ordering for coalition lists: by size, then member tuple."""
    return (len(c), c.members)


class SimpleGame:
    """Base for all game expressions; subclasses implement `contains`."""

    n: int

    def contains(self, coalition: Coalition) -> bool:
        raise NotImplementedError

    def _check_dimension(self, coalition: Coalition) -> None:
        if coalition.n != self.n:
            raise ValueError(
                f"member count mismatch: game over {self.n}, coalition over {coalition.n}"
            )


@dataclass(frozen=True)
class WeightedGame(SimpleGame):
    """Threshold rule: winning iff the members' weight sum meets the quota.

    Weights must be nonnegative; weights and quota are held as exact
    rationals, so membership never depends on rounding.
    """

    n: int
    weights: tuple[Fraction, ...]
    quota: Fraction

    def __init__(self, n: int, weights: Sequence[Fraction | int | str], quota: Fraction | int | str):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in weights))
        object.__setattr__(self, "quota", Fraction(quota))
        if len(self.weights) != n:
            raise ValueError(f"expected {n} weights, got {len(self.weights)}")
        for i, w in enumerate(self.weights):
            if w < 0:
                raise ValueError(f"weight of member {i + 1} is negative: {w}")

    def contains(self, coalition: Coalition) -> bool:
        self._check_dimension(coalition)
        total = sum((self.weights[m - 1] for m in coalition.members), Fraction(0))
        return total >= self.quota


class ExplicitGame(SimpleGame):
    """Game given by a listed winning family, evaluated under upward closure.

    The declared family is kept verbatim so `check_monotone` can detect a
    listing that is not upward closed; membership queries use only the
    minimal declared coalitions (any superset of one is winning).
    """

    def __init__(self, n: int, winning: Iterable[Coalition]):
        self.n = n
        masks = set()
        for c in winning:
            if c.n != n:
                raise ValueError(f"coalition over {c.n} members in a game over {n}")
            masks.add(c.mask)
        self._declared = frozenset(masks)
        minimal = []
        for m in sorted(masks, key=int.bit_count):
            if not any(mm & m == mm for mm in minimal):
                minimal.append(m)
        self._minimal = tuple(minimal)

    @property
    def declared_winning(self) -> tuple[Coalition, ...]:
        return tuple(
            sorted((Coalition(self.n, m) for m in self._declared), key=coalition_sort_key)
        )

    def declared_contains(self, coalition: Coalition) -> bool:
        self._check_dimension(coalition)
        return coalition.mask in self._declared

    def contains(self, coalition: Coalition) -> bool:
        self._check_dimension(coalition)
        return any(m & coalition.mask == m for m in self._minimal)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExplicitGame):
            return NotImplemented
        return self.n == other.n and self._declared == other._declared

    def __hash__(self) -> int:
        return hash((self.n, self._declared))

    def __repr__(self) -> str:
        return f"ExplicitGame(n={self.n}, winning={len(self._declared)} listed)"


def _common_n(parts: Sequence[SimpleGame]) -> int:
    if not parts:
        raise ValueError("combination over an empty list of games")
    n = parts[0].n
    for g in parts[1:]:
        if g.n != n:
            raise ValueError(f"member count mismatch among parts: {g.n} vs {n}")
    return n


class IntersectionGame(SimpleGame):
    """Winning iff winning in every part."""

    def __init__(self, parts: Sequence[SimpleGame]):
        self.parts = tuple(parts)
        self.n = _common_n(self.parts)

    def contains(self, coalition: Coalition) -> bool:
        self._check_dimension(coalition)
        return all(g.contains(coalition) for g in self.parts)


class UnionGame(SimpleGame):
    """Winning iff winning in at least one part."""

    def __init__(self, parts: Sequence[SimpleGame]):
        self.parts = tuple(parts)
        self.n = _common_n(self.parts)

    def contains(self, coalition: Coalition) -> bool:
        self._check_dimension(coalition)
        return any(g.contains(coalition) for g in self.parts)


def all_coalitions(n: int) -> Iterator[Coalition]:
    """All 2**n coalitions over 1..n, in mask order."""
    for mask in range(1 << n):
        yield Coalition(n, mask)


def _guard(n: int, what: str) -> None:
    if n > ENUMERATION_GUARD:
        raise ValueError(
            f"{what} scans all 2^n coalitions and is limited to "
            f"n <= {ENUMERATION_GUARD}; got n = {n}"
        )


def check_monotone(game: ExplicitGame) -> bool:
    """Whether the declared winning family is upward closed.

    Scans every coalition, so it is guarded at n <= 20.  A declared family
    passes iff every superset of a declared winner is itself declared.
    """
    if not isinstance(game, ExplicitGame):
        raise ValueError("check_monotone requires an explicitly listed game")
    _guard(game.n, "check_monotone")
    for c in all_coalitions(game.n):
        if game.contains(c) and not game.declared_contains(c):
            return False
    return True


def minimal_winning(game: SimpleGame) -> tuple[Coalition, ...]:
    """The winning coalitions whose every proper subset loses, canonically sorted.

    Exhaustive over all coalitions, guarded at n <= 20.  Membership of every
    game expression here is monotone, so it suffices to test single-member
    removals.
    """
    _guard(game.n, "minimal_winning")
    out = []
    for c in all_coalitions(game.n):
        if not game.contains(c):
            continue
        if all(not game.contains(Coalition(game.n, c.mask & ~(1 << (m - 1)))) for m in c.members):
            out.append(c)
    return tuple(sorted(out, key=coalition_sort_key))


# --- JSON descriptions -------------------------------------------------------
#
# Game: {"n": int, "kind": "weighted"|"explicit"|"intersection"|"union", ...}
# with weights/quota as strings parsed exactly (decimal "0.65" or ratio
# "13/20") and coalitions as sorted index arrays.


def coalition_to_json(c: Coalition) -> list[int]:
    return list(c.members)


def coalition_from_json(indices: Sequence[int], n: int) -> Coalition:
    return Coalition.from_indices(indices, n)


def _fraction_from_json(value: int | str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(f"expected an integer or exact string, got {value!r}")
    return Fraction(value)


def game_from_json(obj: dict) -> SimpleGame:
    """Parse the JSON game description; raises ValueError on malformed input."""
    if not isinstance(obj, dict) or "kind" not in obj or "n" not in obj:
        raise ValueError("game description needs 'n' and 'kind'")
    n = obj["n"]
    if not isinstance(n, int):
        raise ValueError("'n' must be an integer")
    kind = obj["kind"]
    if kind == "weighted":
        return WeightedGame(
            n,
            [_fraction_from_json(w) for w in obj["weights"]],
            _fraction_from_json(obj["quota"]),
        )
    if kind == "explicit":
        return ExplicitGame(n, [coalition_from_json(w, n) for w in obj["winning"]])
    if kind in ("intersection", "union"):
        parts = [game_from_json(p) for p in obj["parts"]]
        cls = IntersectionGame if kind == "intersection" else UnionGame
        return cls(parts)
    raise ValueError(f"unknown game kind {kind!r}")


def game_to_json(game: SimpleGame) -> dict:
    if isinstance(game, WeightedGame):
        return {
            "n": game.n,
            "kind": "weighted",
            "weights": [str(w) for w in game.weights],
            "quota": str(game.quota),
        }
    if isinstance(game, ExplicitGame):
        return {
            "n": game.n,
            "kind": "explicit",
            "winning": [coalition_to_json(c) for c in game.declared_winning],
        }
    if isinstance(game, IntersectionGame):
        return {"n": game.n, "kind": "intersection", "parts": [game_to_json(p) for p in game.parts]}
    if isinstance(game, UnionGame):
        return {"n": game.n, "kind": "union", "parts": [game_to_json(p) for p in game.parts]}
    raise ValueError(f"cannot serialize game of type {type(game).__name__}")
