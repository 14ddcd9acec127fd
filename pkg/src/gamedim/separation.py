"""Exact feasibility oracle for weighted separation.

Decides whether some weighted game can keep a given list of winning
coalitions winning while declaring a given list of losing coalitions losing,
i.e. whether nonnegative weights a and a quota b exist with

    a(W) >= b      for every winning constraint W,
    a(L) <  b      for every losing target L.

Gap normalization lemma: the strict inequalities a(L) < b may be replaced by
a(L) <= b - 1 without changing feasibility.  If (a, b) satisfies the strict
system over the rationals, scaling both by k = 1 / min(b - a(L)) > 0 gives a
solution with gap at least 1; conversely any gap-1 solution is strictly
feasible.  All closed constraints are invariant under positive scaling.

The solver is exact rational Fourier-Motzkin elimination with constraint
deduplication, chosen over simplex because the instances here are tiny and
elimination has no pivoting or degeneracy subtleties.  Feasible systems
yield an explicit witness (re-checked by substitution before returning);
infeasible ones yield a nonnegative-combination certificate that is likewise
re-checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .games import Coalition, SimpleGame, minimal_winning

SEPARATION_GUARD = 14

# One inequality sum(coeffs[i] * x_i) <= rhs, with multipliers tracking how it
# was derived as a nonnegative combination of the original constraints.
_Row = tuple[tuple[int, ...], Fraction, tuple[Fraction, ...]]


@dataclass(frozen=True)
class SeparationInstance:
    """Winning coalitions to preserve and losing coalitions to separate."""

    n: int
    winning_constraints: tuple[Coalition, ...]
    losing_targets: tuple[Coalition, ...]

    def __init__(self, n: int, winning_constraints: Sequence[Coalition],
                 losing_targets: Sequence[Coalition]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "winning_constraints", tuple(winning_constraints))
        object.__setattr__(self, "losing_targets", tuple(losing_targets))
        if not self.winning_constraints:
            raise ValueError("winning_constraints must be non-empty")
        if not self.losing_targets:
            raise ValueError("losing_targets must be non-empty")
        for c in self.winning_constraints + self.losing_targets:
            if c.n != n:
                raise ValueError(f"coalition over {c.n} members in an instance over {n}")


@dataclass(frozen=True)
class Separable:
    """Witness weighted game: meets every winning constraint, misses every target."""

    weights: tuple[Fraction, ...]
    quota: Fraction


@dataclass(frozen=True)
class NotSeparable:
    """No separating weighted game exists; the note names a refuting combination."""

    farkas_note: str


def _normalized(coeffs: tuple[int, ...], rhs: Fraction,
                mults: tuple[Fraction, ...]) -> _Row:
    g = 0
    for c in coeffs:
        g = math.gcd(g, abs(c))
    if g > 1:
        coeffs = tuple(c // g for c in coeffs)
        rhs = rhs / g
        mults = tuple(m / g for m in mults)
    return coeffs, rhs, mults


def _deduped(rows: list[_Row]) -> list[_Row]:
    # Identical coefficient vectors: only the tightest right-hand side binds.
    best: dict[tuple[int, ...], tuple[Fraction, tuple[Fraction, ...]]] = {}
    for coeffs, rhs, mults in rows:
        cur = best.get(coeffs)
        if cur is None or rhs < cur[0]:
            best[coeffs] = (rhs, mults)
    return [(c, r, m) for c, (r, m) in sorted(best.items())]


def _contradiction(rows: list[_Row]) -> tuple[Fraction, ...] | None:
    for coeffs, rhs, mults in rows:
        if rhs < 0 and not any(coeffs):
            return mults
    return None


def _solve(constraints: list[tuple[tuple[int, ...], int]], nvars: int
           ) -> tuple[list[Fraction] | None, tuple[Fraction, ...] | None]:
    """Fourier-Motzkin elimination over sum(c_i x_i) <= rhs rows.

    Returns (witness, None) if feasible, else (None, farkas multipliers over
    the input constraints).
    """
    n0 = len(constraints)
    rows = _deduped([
        _normalized(tuple(coeffs), Fraction(rhs),
                    tuple(Fraction(1 if i == idx else 0) for i in range(n0)))
        for idx, (coeffs, rhs) in enumerate(constraints)
    ])
    systems: list[list[_Row]] = []
    order: list[int] = []
    remaining = list(range(nvars))
    while remaining:
        bad = _contradiction(rows)
        if bad is not None:
            return None, bad

        def fanout(v: int) -> tuple[int, int]:
            pos = sum(1 for r in rows if r[0][v] > 0)
            neg = sum(1 for r in rows if r[0][v] < 0)
            return pos * neg, v

        v = min(remaining, key=fanout)
        remaining.remove(v)
        systems.append(rows)
        order.append(v)
        pos = [r for r in rows if r[0][v] > 0]
        neg = [r for r in rows if r[0][v] < 0]
        new = [r for r in rows if r[0][v] == 0]
        for ca, ra, ma in pos:
            for cb, rb, mb in neg:
                p, q = ca[v], -cb[v]
                new.append(_normalized(
                    tuple(q * x + p * y for x, y in zip(ca, cb)),
                    q * ra + p * rb,
                    tuple(q * x + p * y for x, y in zip(ma, mb)),
                ))
        rows = _deduped(new)
    bad = _contradiction(rows)
    if bad is not None:
        return None, bad

    # Back-substitute in reverse elimination order; Fourier-Motzkin guarantees
    # the interval for each variable is non-empty given the later choices.
    values: list[Fraction | None] = [None] * nvars
    for i in range(len(order) - 1, -1, -1):
        v = order[i]
        lo: Fraction | None = None
        hi: Fraction | None = None
        for coeffs, rhs, _ in systems[i]:
            cv = coeffs[v]
            if cv == 0:
                continue
            rest = rhs - sum(coeffs[j] * values[j]
                             for j in range(nvars) if j != v and coeffs[j])
            bound = rest / cv
            if cv > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is not None and hi is not None:
            if lo > hi:
                raise RuntimeError("elimination produced an empty interval")
            values[v] = (lo + hi) / 2
        elif lo is not None:
            values[v] = lo
        elif hi is not None:
            values[v] = hi
        else:
            values[v] = Fraction(0)
    assert all(v is not None for v in values)
    return list(values), None  # type: ignore[arg-type]


def _inclusion_minimal(coalitions: Sequence[Coalition]) -> list[Coalition]:
    out: list[Coalition] = []
    for c in sorted(coalitions, key=len):
        if not any(o.issubset(c) for o in out):
            out.append(c)
    return out


def _inclusion_maximal(coalitions: Sequence[Coalition]) -> list[Coalition]:
    out: list[Coalition] = []
    for c in sorted(coalitions, key=len, reverse=True):
        if not any(c.issubset(o) for o in out):
            out.append(c)
    return out


def lp_feasible(instance: SeparationInstance) -> Separable | NotSeparable:
    """Decide weighted separability of the instance in exact arithmetic.

    Variables are the n member weights plus the quota.  Winning constraints
    dominated by a subset constraint are dropped first (monotonicity makes
    the inclusion-minimal ones sufficient), as are losing targets contained
    in another target.
    """
    n = instance.n
    winning = _inclusion_minimal(instance.winning_constraints)
    losing = _inclusion_maximal(instance.losing_targets)
    constraints: list[tuple[tuple[int, ...], int]] = []
    labels: list[str] = []
    for i in range(n):
        coeffs = [0] * (n + 1)
        coeffs[i] = -1
        constraints.append((tuple(coeffs), 0))
        labels.append(f"weight[{i + 1}] >= 0")
    for w in winning:
        coeffs = [0] * (n + 1)
        for m in w.members:
            coeffs[m - 1] = -1
        coeffs[n] = 1
        constraints.append((tuple(coeffs), 0))
        labels.append(f"weight({w}) >= quota")
    for l in losing:
        coeffs = [0] * (n + 1)
        for m in l.members:
            coeffs[m - 1] = 1
        coeffs[n] = -1
        constraints.append((tuple(coeffs), -1))
        labels.append(f"weight({l}) <= quota - 1")

    witness, farkas = _solve(constraints, n + 1)
    if witness is not None:
        weights, quota = tuple(witness[:n]), witness[n]
        for w in instance.winning_constraints:
            if sum(weights[m - 1] for m in w.members) < quota:
                raise RuntimeError(f"witness violates winning constraint {w}")
        for l in instance.losing_targets:
            if sum(weights[m - 1] for m in l.members) > quota - 1:
                raise RuntimeError(f"witness violates losing target {l}")
        if any(x < 0 for x in weights):
            raise RuntimeError("witness has a negative weight")
        return Separable(weights, quota)

    assert farkas is not None
    total = Fraction(0)
    combined = [Fraction(0)] * (n + 1)
    terms = []
    for lam, (coeffs, rhs), label in zip(farkas, constraints, labels):
        if lam < 0:
            raise RuntimeError("negative multiplier in refutation")
        if lam == 0:
            continue
        for j, c in enumerate(coeffs):
            combined[j] += lam * c
        total += lam * rhs
        terms.append(f"{lam} * [{label}]")
    if any(combined) or total >= 0:
        raise RuntimeError("refutation does not combine to a contradiction")
    note = (
        "nonnegative combination " + " + ".join(terms)
        + f" gives the contradiction 0 <= {total}"
    )
    return NotSeparable(note)


def is_nonseparable_exhaustive(game: SimpleGame, targets: Sequence[Coalition]) -> bool:
    """Ground truth for non-separability on small games.

    True iff no single weighted game can extend `game` while losing every
    coalition in `targets`, decided against all minimal winning coalitions.
    Guarded at n <= 14.
    """
    if game.n > SEPARATION_GUARD:
        raise ValueError(
            f"exhaustive non-separability check limited to n <= {SEPARATION_GUARD}; "
            f"got n = {game.n}"
        )
    targets = tuple(targets)
    if not targets:
        raise ValueError("no losing targets given")
    for c in targets:
        if game.contains(c):
            raise ValueError(f"target {c} is winning, not losing")
    winning = minimal_winning(game)
    if not winning:
        # With no winning coalitions, any positive quota separates.
        return False
    result = lp_feasible(SeparationInstance(game.n, winning, targets))
    return isinstance(result, NotSeparable)


def instance_from_json(obj: dict) -> SeparationInstance:
    """Parse {"n": int, "winning_constraints": [[...]], "losing_targets": [[...]]}."""
    if not isinstance(obj, dict):
        raise ValueError("instance description must be an object")
    try:
        n = obj["n"]
        winning = obj["winning_constraints"]
        losing = obj["losing_targets"]
    except KeyError as missing:
        raise ValueError(f"instance description misses key {missing}") from None
    if not isinstance(n, int):
        raise ValueError("'n' must be an integer")
    return SeparationInstance(
        n,
        [Coalition.from_indices(ix, n) for ix in winning],
        [Coalition.from_indices(ix, n) for ix in losing],
    )
