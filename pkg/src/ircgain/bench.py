"""Timing of the incremental gain chain against full SINR recomputation."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .engine import cumulative_gain, init_state, irc_sinr_direct, stack_rows
from .errors import ConfigError, IrcError
from .instances import random_channel_set, random_rows

DEFAULT_GRID = "nr=4,z=8,a=0;nr=4,z=8,a=12;nr=8,z=8,a=8;nr=16,z=8,a=16;nr=4,z=16,a=12"
AGREEMENT_TOL = 1e-9


@dataclass(frozen=True)
class GridPoint:
    n_r: int
    z: int
    a: int


@dataclass(frozen=True)
class BenchRow:
    n_r: int
    z: int
    a: int
    sinr: float
    incremental_s: float
    recompute_s: float

    @property
    def speedup(self) -> float:
        return self.recompute_s / self.incremental_s


class AgreementError(IrcError):
    pass


def parse_grid(spec: str) -> list[GridPoint]:
    """Parse ``"nr=4,z=8,a=12;nr=8,z=8,a=4"`` into grid points."""
    points = []
    for chunk in filter(None, (c.strip() for c in spec.split(";"))):
        fields = {}
        for item in chunk.split(","):
            key, sep, value = item.partition("=")
            key = key.strip()
            if not sep or key not in ("nr", "z", "a"):
                raise ConfigError(f"bad grid entry {item!r}; expected nr=, z=, a=")
            try:
                fields[key] = int(value)
            except ValueError:
                raise ConfigError(f"grid key {key!r}: {value!r} is not an integer") from None
        missing = {"nr", "z", "a"} - fields.keys()
        if missing:
            raise ConfigError(f"grid point {chunk!r} is missing {sorted(missing)}")
        if fields["nr"] < 1 or fields["z"] < 1 or fields["a"] < 0:
            raise ConfigError(f"grid point {chunk!r} needs nr >= 1, z >= 1, a >= 0")
        points.append(GridPoint(fields["nr"], fields["z"], fields["a"]))
    if not points:
        raise ConfigError("empty grid")
    return points


def _best_time(fn, repeats: int):
    best, out = float("inf"), None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_point(pt: GridPoint, rng: np.random.Generator, sigma2: float = 0.1,
                repeats: int = 5) -> BenchRow:
    ucs = random_channel_set(rng, pt.n_r, pt.z - 1, sigma2)
    rows = random_rows(rng, pt.z - 1, pt.a)
    systems = [stack_rows(ucs, rows[:i]) for i in range(pt.a + 1)]

    def incremental():
        state = init_state(ucs)
        _, state = cumulative_gain(state, rows)
        return state.sinr

    def recompute():
        return [irc_sinr_direct(s) for s in systems][-1]

    t_inc, sinr_inc = _best_time(incremental, repeats)
    t_rec, sinr_rec = _best_time(recompute, repeats)
    if abs(sinr_inc - sinr_rec) > AGREEMENT_TOL * max(1.0, abs(sinr_rec)):
        raise AgreementError(
            f"nr={pt.n_r} z={pt.z} a={pt.a}: incremental {sinr_inc!r} != recompute {sinr_rec!r}"
        )
    return BenchRow(pt.n_r, pt.z, pt.a, sinr_rec, t_inc, t_rec)


def run_bench(points, seed: int = 42, repeats: int = 5) -> list[BenchRow]:
    rng = np.random.default_rng(seed)
    return [bench_point(pt, rng, repeats=repeats) for pt in points]


def format_table(rows: list[BenchRow]) -> str:
    header = f"{'nr':>4} {'z':>4} {'a':>4} {'sinr':>12} {'incremental_s':>14} {'recompute_s':>14} {'speedup':>8}"
    lines = [header]
    for r in rows:
        lines.append(
            f"{r.n_r:>4} {r.z:>4} {r.a:>4} {r.sinr:>12.6g} {r.incremental_s:>14.6e} "
            f"{r.recompute_s:>14.6e} {r.speedup:>8.3g}"
        )
    return "\n".join(lines)
