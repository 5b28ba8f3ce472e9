"""Uplink CoMP Monte-Carlo: single-cell vs. multi-cell IRC-SINR over an SIR sweep.

Each cell has one BS with ``antennas_per_bs`` antennas and ``ues_per_cell``
single-antenna UEs. UE ``u`` lives in cell ``u // ues_per_cell``. Own-cell
channels are scaled to unit energy, cross-cell channels to energy
``10**(-sir_db/10)``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .engine import UserChannelSet, cumulative_gain, init_state, irc_sinr_direct
from .errors import ConfigError, EmptyList, NegativeSnr, UnknownBs, UnknownUe

DEFAULT_SIR_POINTS_DB = (-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0)
AGGREGATIONS = ("pooled", "per_iteration")


@dataclass
class ScenarioConfig:
    n_cells: int = 4
    ues_per_cell: int = 2
    antennas_per_bs: int = 4
    sigma2: float = 0.1
    sir_points_db: list[float] = field(default_factory=lambda: list(DEFAULT_SIR_POINTS_DB))
    iterations: int = 25
    seed: int = 42
    aggregation: str = "pooled"

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        for key in ("n_cells", "ues_per_cell", "antennas_per_bs", "iterations"):
            if int(getattr(self, key)) < 1:
                raise ConfigError(f"{key} must be >= 1, got {getattr(self, key)}")
        if not self.sigma2 > 0:
            raise ConfigError(f"sigma2 must be > 0, got {self.sigma2}")
        if len(self.sir_points_db) == 0:
            raise ConfigError("sir_points_db must be nonempty")
        if not 0 <= int(self.seed) < 2**64:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.aggregation not in AGGREGATIONS:
            raise ConfigError(f"aggregation must be one of {AGGREGATIONS}, got {self.aggregation!r}")

    @property
    def n_ues(self) -> int:
        return self.n_cells * self.ues_per_cell

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class ChannelRealization:
    """``channels[ue, bs]`` is the UE's channel vector to that BS's antennas."""

    channels: np.ndarray
    own_cell: np.ndarray

    @property
    def n_ues(self) -> int:
        return self.channels.shape[0]

    @property
    def n_bs(self) -> int:
        return self.channels.shape[1]


@dataclass(frozen=True)
class SweepRow:
    sir_db: float
    single_cell_sm_db: float
    multi_cell_sim_sm_db: float
    multi_cell_theory_sm_db: float


@dataclass(frozen=True)
class PointSamples:
    """Per-(iteration, UE) linear SINRs at one SIR point."""

    sir_db: float
    single: np.ndarray
    multi: np.ndarray
    theory: np.ndarray


def substream(seed: int, sir_index: int, iteration: int) -> np.random.Generator:
    """Independent generator for one (SIR point, iteration) cell."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), sir_index, iteration]))


def generate_realization(
    cfg: ScenarioConfig, sir_db: float, rng: np.random.Generator
) -> ChannelRealization:
    n_ues, n_bs, n_ant = cfg.n_ues, cfg.n_cells, cfg.antennas_per_bs
    raw = (rng.standard_normal((n_ues, n_bs, n_ant))
           + 1j * rng.standard_normal((n_ues, n_bs, n_ant))) / np.sqrt(2.0)
    own_cell = np.arange(n_ues) // cfg.ues_per_cell
    target = np.full((n_ues, n_bs), 10.0 ** (-float(sir_db) / 10.0))
    target[np.arange(n_ues), own_cell] = 1.0
    energy = np.sum(np.abs(raw) ** 2, axis=2)
    channels = raw * np.sqrt(target / energy)[:, :, None]
    return ChannelRealization(channels=channels, own_cell=own_cell)


def per_ue_channel_set(
    real: ChannelRealization, ue: int, bs_subset: Sequence[int], sigma2: float
) -> UserChannelSet:
    """Stack the channels over ``bs_subset`` antennas, in the given order.

    Every other UE in the network becomes an interferer column of ``P``.
    """
    if not 0 <= ue < real.n_ues:
        raise UnknownUe(f"ue {ue} not in 0..{real.n_ues - 1}")
    if len(bs_subset) == 0:
        raise UnknownBs("bs_subset must be nonempty")
    for bs in bs_subset:
        if not 0 <= bs < real.n_bs:
            raise UnknownBs(f"bs {bs} not in 0..{real.n_bs - 1}")
    bs_idx = list(bs_subset)
    stacked = real.channels[:, bs_idx, :].reshape(real.n_ues, -1)  # (ue, antennas)
    others = [u for u in range(real.n_ues) if u != ue]
    return UserChannelSet(stacked[ue], stacked[others].T, sigma2)


def bs_order(real: ChannelRealization, ue: int) -> list[int]:
    """Own BS first, then the remaining BSs in ascending id."""
    own = int(real.own_cell[ue])
    return [own] + [b for b in range(real.n_bs) if b != own]


def spectral_mean(snrs) -> float:
    """SNR giving the same total spectral efficiency as ``snrs``::

        ((1 + s_1) ... (1 + s_A)) ** (1 / A) - 1

    Evaluated through ``log1p`` to stay accurate for large sets.
    """
    arr = np.asarray(snrs, dtype=float).ravel()
    if arr.size == 0:
        raise EmptyList("spectral mean of an empty set")
    if np.any(arr < 0):
        raise NegativeSnr(f"negative SNR {arr.min()}")
    return float(np.expm1(np.mean(np.log1p(arr))))


def to_db(value: float) -> float:
    with np.errstate(divide="ignore"):
        return float(10.0 * np.log10(value))


def simulate_point(cfg: ScenarioConfig, sir_index: int) -> PointSamples:
    sir_db = float(cfg.sir_points_db[sir_index])
    shape = (cfg.iterations, cfg.n_ues)
    single, multi, theory = np.empty(shape), np.empty(shape), np.empty(shape)
    n_ant = cfg.antennas_per_bs
    for it in range(cfg.iterations):
        real = generate_realization(cfg, sir_db, substream(cfg.seed, sir_index, it))
        for ue in range(cfg.n_ues):
            order = bs_order(real, ue)
            own = per_ue_channel_set(real, ue, order[:1], cfg.sigma2)
            full = per_ue_channel_set(real, ue, order, cfg.sigma2)
            single[it, ue] = irc_sinr_direct(own)
            multi[it, ue] = irc_sinr_direct(full)
            gain, _ = cumulative_gain(init_state(own), full.rows()[n_ant:])
            theory[it, ue] = single[it, ue] + gain
    return PointSamples(sir_db, single, multi, theory)


def _aggregate(samples: np.ndarray, aggregation: str) -> float:
    if aggregation == "pooled":
        return spectral_mean(samples)
    return float(np.mean([spectral_mean(row) for row in samples]))


def run_sweep(cfg: ScenarioConfig) -> list[SweepRow]:
    cfg.validate()
    rows = []
    for j in range(len(cfg.sir_points_db)):
        pt = simulate_point(cfg, j)
        rows.append(SweepRow(
            sir_db=pt.sir_db,
            single_cell_sm_db=to_db(_aggregate(pt.single, cfg.aggregation)),
            multi_cell_sim_sm_db=to_db(_aggregate(pt.multi, cfg.aggregation)),
            multi_cell_theory_sm_db=to_db(_aggregate(pt.theory, cfg.aggregation)),
        ))
    return rows
