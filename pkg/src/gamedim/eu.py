"""The EU council voting rule on the 2014 member populations.

A coalition wins if it has at least 55% of the member states (16 of 28) and
at least 65% of the total population, or outright if it has at least 25
member states.  Percent thresholds are read as closed inequalities in exact
rational arithmetic: the population rule holds iff 20*pop(C) >= 13*T.

The module also bundles a reference family of 15 losing and 12 winning
coalitions (labels L1..L15 and W1..W12) together with the pair and triple
label sets used by the certificate and cover machinery.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .games import Coalition, IntersectionGame, SimpleGame, UnionGame, WeightedGame

N_MEMBERS = 28
MEMBER_QUOTA = 16  # smallest integer >= 55% of 28
OUTRIGHT_QUOTA = 25

# (index, state, population on 01.01.2014)
MEMBERS_2014: tuple[tuple[int, str, int], ...] = (
    (1, "Germany", 80780000),
    (2, "France", 65856609),
    (3, "United Kingdom", 64308261),
    (4, "Italy", 60782668),
    (5, "Spain", 46507760),
    (6, "Poland", 38495659),
    (7, "Romania", 19942642),
    (8, "Netherlands", 16829289),
    (9, "Belgium", 11203992),
    (10, "Greece", 10992589),
    (11, "Czech Republic", 10512419),
    (12, "Portugal", 10427301),
    (13, "Hungary", 9879000),
    (14, "Sweden", 9644864),
    (15, "Austria", 8507786),
    (16, "Bulgaria", 7245677),
    (17, "Denmark", 5627235),
    (18, "Finland", 5451270),
    (19, "Slovakia", 5415949),
    (20, "Ireland", 4604029),
    (21, "Croatia", 4246700),
    (22, "Lithuania", 2943472),
    (23, "Slovenia", 2061085),
    (24, "Latvia", 2001468),
    (25, "Estonia", 1315819),
    (26, "Cyprus", 858000),
    (27, "Luxembourg", 549680),
    (28, "Malta", 425384),
)


@dataclass(frozen=True)
class MemberTable:
    """The 28 member states with their populations, indexed 1..28."""

    entries: tuple[tuple[int, str, int], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != N_MEMBERS:
            raise ValueError(f"wrong row count: expected {N_MEMBERS}, got {len(self.entries)}")
        seen = set()
        for index, name, population in self.entries:
            if not 1 <= index <= N_MEMBERS:
                raise ValueError(f"member index {index} out of range 1..{N_MEMBERS}")
            if index in seen:
                raise ValueError(f"duplicate member index {index}")
            seen.add(index)
            if population <= 0:
                raise ValueError(f"nonpositive population for {name!r}: {population}")

    @property
    def populations(self) -> dict[int, int]:
        return {index: population for index, _, population in self.entries}

    @property
    def names(self) -> dict[int, str]:
        return {index: name for index, name, _ in self.entries}

    @property
    def total_population(self) -> int:
        return sum(population for _, _, population in self.entries)

    def population_of(self, coalition: Coalition) -> int:
        if coalition.n != N_MEMBERS:
            raise ValueError(f"coalition over {coalition.n} members, table has {N_MEMBERS}")
        pops = self.populations
        return sum(pops[m] for m in coalition.members)


def default_members() -> MemberTable:
    return MemberTable(MEMBERS_2014)


def load_members(stream: io.TextIOBase | str) -> MemberTable:
    """Parse a member table from CSV with header ``index,name,population``."""
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError("empty member table") from None
    if [h.strip().lower() for h in header] != ["index", "name", "population"]:
        raise ValueError(f"bad header {header!r}, expected index,name,population")
    entries = []
    for row in reader:
        if not row:
            continue
        if len(row) != 3:
            raise ValueError(f"malformed row {row!r}")
        try:
            index = int(row[0])
            population = int(row[2])
        except ValueError:
            raise ValueError(f"malformed row {row!r}") from None
        entries.append((index, row[1].strip(), population))
    return MemberTable(tuple(entries))


@dataclass(frozen=True)
class RuleReport:
    """Per-rule evaluation of one coalition."""

    winning: bool
    rule55: bool
    rule65: bool
    rule25: bool
    population_sum: int


@dataclass(frozen=True)
class EuGame:
    """The council game with its composition (members AND population) OR outright."""

    table: MemberTable
    game: SimpleGame
    member_quota: int
    population_quota: Fraction

    def classify(self, coalition: Coalition) -> RuleReport:
        if coalition.n != N_MEMBERS:
            raise ValueError(f"coalition over {coalition.n} members, game over {N_MEMBERS}")
        population = self.table.population_of(coalition)
        rule55 = len(coalition) >= self.member_quota
        rule65 = population >= self.population_quota
        rule25 = len(coalition) >= OUTRIGHT_QUOTA
        return RuleReport(
            winning=(rule55 and rule65) or rule25,
            rule55=rule55,
            rule65=rule65,
            rule25=rule25,
            population_sum=population,
        )

    def is_winning(self, coalition: Coalition) -> bool:
        return self.game.contains(coalition)


def build_eu_game(table: MemberTable | None = None) -> EuGame:
    """Assemble the council game from a member table (2014 data by default)."""
    if table is None:
        table = default_members()
    pops = table.populations
    population_weights = [pops[i] for i in range(1, N_MEMBERS + 1)]
    population_quota = Fraction(13 * table.total_population, 20)
    members_55 = WeightedGame(N_MEMBERS, [1] * N_MEMBERS, MEMBER_QUOTA)
    population_65 = WeightedGame(N_MEMBERS, population_weights, population_quota)
    outright_25 = WeightedGame(N_MEMBERS, [1] * N_MEMBERS, OUTRIGHT_QUOTA)
    game = UnionGame([IntersectionGame([members_55, population_65]), outright_25])
    return EuGame(
        table=table,
        game=game,
        member_quota=MEMBER_QUOTA,
        population_quota=population_quota,
    )


# --- reference coalitions ----------------------------------------------------

_LOSING_INDICES: tuple[tuple[int, ...], ...] = (
    (2, 3, 5, 6, 8, 9, 10, 11, 12, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (1, 4, 5, 7, 8, 9, 10, 11, 12, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (2, 3, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27),
    (3, 4, 5, 6, 7, 8, 9, 12, 13, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (2, 4, 5, 6, 7, 9, 10, 12, 13, 14, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (3, 4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 15, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (2, 3, 4, 7, 8, 9, 10, 11, 12, 13, 14, 15, 17, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (1, 3, 5, 7, 8, 9, 10, 11, 12, 13, 14, 16, 17, 18, 19, 20, 22, 23, 24, 25, 26, 27, 28),
    (2, 4, 5, 6, 7, 8, 11, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (1, 2, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 21, 23, 24, 25, 26, 27, 28),
    (1, 4, 5, 6, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (2, 4, 5, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 27, 28),
    (1, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15),
)

_WINNING_INDICES: tuple[tuple[int, ...], ...] = (
    (1, 2, 4, 5, 6, 13, 14, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (3, 4, 5, 6, 8, 9, 10, 11, 12, 13, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (1, 2, 5, 6, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (2, 3, 4, 5, 6, 7, 13, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (2, 4, 5, 6, 7, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (1, 3, 4, 5, 9, 10, 11, 12, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (2, 3, 4, 5, 6, 10, 11, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (2, 4, 5, 6, 7, 8, 9, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (1, 2, 5, 6, 8, 10, 11, 12, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
    (2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
)

LOSING_FAMILY: tuple[Coalition, ...] = tuple(
    Coalition.from_indices(ix, N_MEMBERS) for ix in _LOSING_INDICES
)
WINNING_FAMILY: tuple[Coalition, ...] = tuple(
    Coalition.from_indices(ix, N_MEMBERS) for ix in _WINNING_INDICES
)

LOSING_LABELS: tuple[str, ...] = tuple(f"L{i}" for i in range(1, 16))
WINNING_LABELS: tuple[str, ...] = tuple(f"W{i}" for i in range(1, 13))


def reference_coalitions() -> tuple[tuple[Coalition, ...], tuple[Coalition, ...]]:
    """The bundled (losing L1..L15, winning W1..W12) coalitions."""
    return LOSING_FAMILY, WINNING_FAMILY


def labeled_coalition(label: str) -> Coalition:
    """Look up a bundled coalition by its label, e.g. ``L15`` or ``W3``."""
    label = label.strip().upper()
    try:
        kind, num = label[0], int(label[1:])
        if kind == "L" and 1 <= num <= len(LOSING_FAMILY):
            return LOSING_FAMILY[num - 1]
        if kind == "W" and 1 <= num <= len(WINNING_FAMILY):
            return WINNING_FAMILY[num - 1]
    except (IndexError, ValueError):
        pass
    raise ValueError(f"unknown coalition label {label!r}")


# Non-separable label sets over L1..L15: 75 pairs and 5 triples.  Each pair
# {i, j} marks {Li, Lj} as non-separable; triples likewise.
NONSEPARABLE_PAIRS: tuple[tuple[int, int], ...] = (
    (1, 5), (1, 8), (1, 9), (1, 10), (1, 11), (1, 13), (1, 14), (1, 15),
    (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (2, 10), (2, 11), (2, 15),
    (3, 4), (3, 5), (3, 7), (3, 9), (3, 10), (3, 12), (3, 13), (3, 14), (3, 15),
    (4, 6), (4, 8), (4, 9), (4, 11), (4, 12), (4, 13), (4, 14), (4, 15),
    (5, 7), (5, 8), (5, 11), (5, 14), (5, 15),
    (6, 7), (6, 8), (6, 9), (6, 11), (6, 13), (6, 14), (6, 15),
    (7, 9), (7, 10), (7, 11), (7, 13), (7, 14), (7, 15),
    (8, 9), (8, 10), (8, 11), (8, 12), (8, 14), (8, 15),
    (9, 10), (9, 11), (9, 12), (9, 13), (9, 14), (9, 15),
    (10, 11), (10, 14), (10, 15),
    (11, 12), (11, 13), (11, 15),
    (12, 13), (12, 15),
    (13, 14), (13, 15),
    (14, 15),
)

NONSEPARABLE_TRIPLES: tuple[tuple[int, int, int], ...] = (
    (1, 2, 12),
    (1, 4, 7),
    (1, 6, 12),
    (4, 5, 10),
    (5, 10, 12),
)

# Witnessing winning triples (labels into W1..W12) for each losing triple.
TRIPLE_WITNESS_LABELS: dict[tuple[int, int, int], tuple[int, int, int]] = {
    (1, 2, 12): (2, 7, 11),
    (1, 4, 7): (3, 10, 12),
    (1, 6, 12): (4, 8, 10),
    (4, 5, 10): (2, 5, 9),
    (5, 10, 12): (1, 2, 6),
}

ANCHOR_LABEL = 15  # L15, the one reference losing coalition failing the member rule


def nonseparable_edge_labels() -> tuple[frozenset[int], ...]:
    """All 80 non-separable label sets (75 pairs then 5 triples)."""
    return tuple(frozenset(p) for p in NONSEPARABLE_PAIRS) + tuple(
        frozenset(t) for t in NONSEPARABLE_TRIPLES
    )
