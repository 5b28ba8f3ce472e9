"""Greedy receive-antenna selection ranked by the per-antenna SINR gain."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .engine import AntennaRow, IrcState, add_antenna, gain_one_antenna
from .errors import EmptyPool, InsufficientCandidates, IrcError


@dataclass
class CandidatePool:
    """Candidate antennas keyed by a stable integer id."""

    rows: dict[int, AntennaRow]
    used: set[int] = field(default_factory=set)

    def __post_init__(self):
        self.rows = dict(self.rows)
        self.used = set(self.used)
        unknown = self.used - self.rows.keys()
        if unknown:
            raise IrcError(f"used ids not in pool: {sorted(unknown)}")

    @classmethod
    def from_rows(cls, rows) -> "CandidatePool":
        """Pool with ids ``0..len(rows)-1`` in the given order."""
        if isinstance(rows, Mapping):
            return cls(dict(rows))
        return cls(dict(enumerate(rows)))

    def available(self) -> list[int]:
        return sorted(self.rows.keys() - self.used)


@dataclass(frozen=True)
class Pick:
    antenna_id: int
    xi: float
    sinr: float


@dataclass
class SelectionTrace:
    picks: list[Pick] = field(default_factory=list)

    @property
    def ids(self) -> list[int]:
        return [p.antenna_id for p in self.picks]

    @property
    def total_gain(self) -> float:
        return sum(p.xi for p in self.picks)


def rank_candidates(state: IrcState, pool: CandidatePool) -> list[tuple[int, float]]:
    """Unused candidates with their gain, best first; ties go to the lower id."""
    ids = pool.available()
    if not ids:
        raise EmptyPool("no unused candidates in pool")
    scored = [(i, gain_one_antenna(state, pool.rows[i]).xi) for i in ids]
    scored.sort(key=lambda item: (-item[1], item[0]))
    return scored


def greedy_select(
    state: IrcState, pool: CandidatePool, k: int
) -> tuple[IrcState, SelectionTrace]:
    """Add ``k`` antennas one at a time, each time taking the best-ranked one.

    Candidates are re-ranked after every addition because the gains depend
    on the updated inverse. ``pool`` itself is not modified.
    """
    if k < 0:
        raise IrcError(f"k must be nonnegative, got {k}")
    trace = SelectionTrace()
    if k == 0:
        return state, trace
    if not pool.available():
        raise EmptyPool("no unused candidates in pool")
    if k > len(pool.available()):
        raise InsufficientCandidates(
            f"asked for {k} antennas but only {len(pool.available())} are available"
        )
    work = CandidatePool(pool.rows, pool.used)
    for _ in range(k):
        best_id, best_xi = rank_candidates(state, work)[0]
        state = add_antenna(state, work.rows[best_id])
        work.used.add(best_id)
        trace.picks.append(Pick(best_id, best_xi, state.sinr))
    return state, trace
