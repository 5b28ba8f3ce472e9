"""Randomized property suites run by ``ircgain selftest``.

Each trial draws its instance from a generator seeded by
``(seed, suite index, trial index)``, so any single trial can be replayed
without running the ones before it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .engine import (
    cumulative_gain,
    gain_one_antenna,
    init_state,
    irc_sinr_covariance_oracle,
    irc_sinr_direct,
    stack_rows,
)
from .instances import crandn, pick_sigma2, random_channel_set, random_row, random_rows
from .linalg import hermitian_inverse, rank_one_inverse_update
from .selection import CandidatePool, greedy_select

XI_FLOOR = -1e-12
TOL = 1e-9


@dataclass
class Trial:
    """Outcome of one randomized check.

    ``error`` is the suite's headline number (for the nonnegativity suite,
    the gain itself); ``ok`` says whether the check held.
    """

    error: float
    ok: bool
    instance: dict

    def __post_init__(self):
        self.error = float(self.error)
        self.ok = bool(self.ok)


def _nonnegativity(rng) -> Trial:
    n_r = int(rng.integers(1, 9))
    n_int = int(rng.integers(0, 8))
    sigma2 = pick_sigma2(rng)
    ucs = random_channel_set(rng, n_r, n_int, sigma2)
    row = random_row(rng, n_int)
    xi = gain_one_antenna(init_state(ucs), row).xi
    return Trial(xi, xi >= XI_FLOOR, {"ucs": ucs, "row": row})


def _woodbury(rng) -> Trial:
    dim = int(rng.integers(1, 9))
    m = int(rng.integers(1, 9))
    sigma2 = pick_sigma2(rng)
    q = crandn(rng, m, dim)
    gram = sigma2 * np.eye(dim) + q.conj().T @ q
    rho = crandn(rng, dim)
    updated = rank_one_inverse_update(hermitian_inverse(gram), rho)
    direct = np.linalg.inv(gram + np.outer(rho.conj(), rho))
    err = float(np.max(np.abs(updated - direct)))
    return Trial(err, err <= TOL, {"Q": q, "sigma2": sigma2, "rho": rho})


def _telescoping(rng) -> Trial:
    n_r = int(rng.integers(1, 9))
    n_int = int(rng.integers(0, 8))
    a = int(rng.integers(0, 13))
    sigma2 = pick_sigma2(rng)
    ucs = random_channel_set(rng, n_r, n_int, sigma2)
    rows = random_rows(rng, n_int, a)
    total, _ = cumulative_gain(init_state(ucs), rows)
    full = irc_sinr_direct(stack_rows(ucs, rows))
    err = abs(total - (full - irc_sinr_direct(ucs))) / max(1.0, full)
    return Trial(err, err <= TOL, {"ucs": ucs, "rows": rows})


def _covariance(rng) -> Trial:
    n_r = int(rng.integers(1, 9))
    n_int = int(rng.integers(0, 8))
    ucs = random_channel_set(rng, n_r, n_int, pick_sigma2(rng))
    direct = irc_sinr_direct(ucs)
    oracle = irc_sinr_covariance_oracle(ucs)
    err = abs(direct - oracle) / abs(oracle)
    return Trial(err, err <= TOL, {"ucs": ucs})


def best_subset_sinr(ucs, rows, k: int) -> float:
    """Exhaustive maximum of the stacked-system SINR over all ``k``-subsets."""
    return max(
        irc_sinr_direct(stack_rows(ucs, list(combo)))
        for combo in itertools.combinations(rows, k)
    )


def _greedy(rng) -> Trial:
    n_r = int(rng.integers(1, 9))
    n_int = int(rng.integers(0, 8))
    pool_size = int(rng.integers(1, 6))
    k = int(rng.integers(0, min(3, pool_size) + 1))
    ucs = random_channel_set(rng, n_r, n_int, pick_sigma2(rng))
    rows = random_rows(rng, n_int, pool_size)
    final, trace = greedy_select(init_state(ucs), CandidatePool.from_rows(rows), k)
    best = best_subset_sinr(ucs, rows, k)
    excess = final.sinr - best
    ok = excess <= TOL * max(1.0, best) and all(p.xi >= XI_FLOOR for p in trace.picks)
    return Trial(best - final.sinr, ok, {"ucs": ucs, "rows": rows, "k": k})


@dataclass
class Suite:
    name: str
    run: Callable[[np.random.Generator], Trial]
    metric: str
    reduce: Callable = max


SUITES = [
    Suite("nonnegativity", _nonnegativity, "min xi", min),
    Suite("woodbury", _woodbury, "max abs error"),
    Suite("telescoping", _telescoping, "max scaled error"),
    Suite("covariance", _covariance, "max relative error"),
    Suite("greedy", _greedy, "max greedy gap"),
]
SUITE_NAMES = [s.name for s in SUITES]


def trial_rng(seed: int, suite_index: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), suite_index, trial]))


def run_trial(seed: int, suite_name: str, trial: int) -> Trial:
    idx = SUITE_NAMES.index(suite_name)
    return SUITES[idx].run(trial_rng(seed, idx, trial))


@dataclass
class SuiteResult:
    name: str
    metric: str
    trials: int
    value: float
    failures: list[tuple[int, Trial]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_suite(suite: Suite, seed: int, trials: int) -> SuiteResult:
    idx = SUITE_NAMES.index(suite.name)
    values, failures = [], []
    for i in range(trials):
        res = suite.run(trial_rng(seed, idx, i))
        values.append(res.error)
        if not res.ok:
            failures.append((i, res))
    value = suite.reduce(values) if values else float("nan")
    return SuiteResult(suite.name, suite.metric, trials, value, failures)


def run_all(seed: int, trials: int, names=None) -> list[SuiteResult]:
    chosen = [s for s in SUITES if names is None or s.name in names]
    return [run_suite(s, seed, trials) for s in chosen]
