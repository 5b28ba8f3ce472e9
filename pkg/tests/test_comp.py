import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ircgain.comp import (
    ScenarioConfig,
    bs_order,
    generate_realization,
    per_ue_channel_set,
    run_sweep,
    simulate_point,
    spectral_mean,
    substream,
)
from ircgain.errors import ConfigError, EmptyList, NegativeSnr, UnknownBs, UnknownUe

snr_lists = st.lists(st.floats(0.0, 1e4, allow_nan=False), min_size=1, max_size=30)


class TestSpectralMean:
    def test_equal_inputs(self):
        assert spectral_mean([2.5, 2.5, 2.5]) == pytest.approx(2.5, abs=1e-12)

    def test_zero(self):
        assert spectral_mean([0.0]) == 0.0

    def test_one_three(self):
        assert spectral_mean([1.0, 3.0]) == pytest.approx(math.sqrt(8) - 1, abs=1e-12)

    def test_errors(self):
        with pytest.raises(EmptyList):
            spectral_mean([])
        with pytest.raises(NegativeSnr):
            spectral_mean([1.0, -0.1])

    @given(snr_lists)
    def test_rate_preserved(self, snrs):
        sm = spectral_mean(snrs)
        total = sum(math.log2(1 + s) for s in snrs)
        assert abs(total - len(snrs) * math.log2(1 + sm)) <= 1e-12 * max(1.0, total)

    @given(snr_lists, st.randoms(use_true_random=False))
    def test_permutation_and_bounds(self, snrs, rnd):
        sm = spectral_mean(snrs)
        shuffled = list(snrs)
        rnd.shuffle(shuffled)
        assert spectral_mean(shuffled) == pytest.approx(sm, rel=1e-12, abs=1e-15)
        assert min(snrs) * (1 - 1e-12) <= sm <= max(snrs) * (1 + 1e-12)

    @given(snr_lists, st.integers(0, 29), st.floats(1e-3, 10.0))
    def test_strictly_monotone(self, snrs, idx, bump):
        idx %= len(snrs)
        bigger = list(snrs)
        bigger[idx] += bump
        assert spectral_mean(bigger) > spectral_mean(snrs)


class TestRealization:
    def test_norms(self):
        cfg = ScenarioConfig()
        for sir_db in (-10.0, 0.0, 10.0, 17.5):
            real = generate_realization(cfg, sir_db, substream(1, 0, 0))
            energy = np.sum(np.abs(real.channels) ** 2, axis=2)
            for ue in range(cfg.n_ues):
                for bs in range(cfg.n_cells):
                    want = 1.0 if bs == real.own_cell[ue] else 10 ** (-sir_db / 10)
                    assert abs(energy[ue, bs] - want) <= 1e-12

    def test_sir_ten_db(self):
        real = generate_realization(ScenarioConfig(), 10.0, substream(3, 1, 2))
        assert abs(np.sum(np.abs(real.channels[0, 1]) ** 2) - 0.1) <= 1e-12

    def test_deterministic_substreams(self):
        cfg = ScenarioConfig()
        a = generate_realization(cfg, 0.0, substream(9, 2, 3)).channels
        b = generate_realization(cfg, 0.0, substream(9, 2, 3)).channels
        c = generate_realization(cfg, 0.0, substream(9, 2, 4)).channels
        np.testing.assert_array_equal(a, b)
        assert not np.array_equal(a, c)

    def test_ue_to_cell_map(self):
        real = generate_realization(ScenarioConfig(), 0.0, substream(0, 0, 0))
        assert list(real.own_cell) == [0, 0, 1, 1, 2, 2, 3, 3]
        assert bs_order(real, 5) == [2, 0, 1, 3]


class TestPerUeChannelSet:
    def setup_method(self):
        self.sir_db = 5.0
        self.real = generate_realization(ScenarioConfig(), self.sir_db, substream(0, 0, 0))

    def test_single_cell(self):
        ucs = per_ue_channel_set(self.real, 3, [1], 0.1)
        assert ucs.h.shape == (4,)
        assert np.vdot(ucs.h, ucs.h).real == pytest.approx(1.0, abs=1e-12)
        assert ucs.P.shape == (4, 7)

    def test_all_cells(self):
        ucs = per_ue_channel_set(self.real, 3, bs_order(self.real, 3), 0.1)
        assert ucs.h.shape == (16,)
        sir = 10 ** (self.sir_db / 10)
        assert abs(np.vdot(ucs.h, ucs.h).real - (1 + 3 / sir)) <= 1e-9
        assert ucs.P.shape == (16, 7)
        # interferer columns are the other UEs, stacked in the same bs order
        np.testing.assert_array_equal(ucs.P[:4, 0], self.real.channels[0, 1])
        np.testing.assert_array_equal(ucs.P[4:8, 3], self.real.channels[4, 0])

    def test_unknown(self):
        with pytest.raises(UnknownUe):
            per_ue_channel_set(self.real, 8, [0], 0.1)
        with pytest.raises(UnknownBs):
            per_ue_channel_set(self.real, 0, [4], 0.1)
        with pytest.raises(UnknownBs):
            per_ue_channel_set(self.real, 0, [], 0.1)


class TestSweep:
    def test_config_validation(self):
        with pytest.raises(ConfigError):
            ScenarioConfig(n_cells=0)
        with pytest.raises(ConfigError):
            ScenarioConfig(sigma2=0.0)
        with pytest.raises(ConfigError):
            ScenarioConfig(sir_points_db=[])
        with pytest.raises(ConfigError):
            ScenarioConfig(aggregation="mean")
        with pytest.raises(ConfigError):
            ScenarioConfig(seed=-1)

    def test_default_sir_points(self):
        assert ScenarioConfig().sir_points_db == [-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0]

    def test_degenerate_single_ue(self):
        rows = run_sweep(ScenarioConfig(n_cells=1, ues_per_cell=1, iterations=3,
                                        sir_points_db=[-10.0, 0.0, 10.0]))
        for r in rows:
            assert r.single_cell_sm_db == r.multi_cell_sim_sm_db == r.multi_cell_theory_sm_db

    def test_per_realization_identity(self):
        cfg = ScenarioConfig(iterations=5, sir_points_db=[-10.0, 20.0])
        for j in range(2):
            pt = simulate_point(cfg, j)
            np.testing.assert_allclose(pt.theory, pt.multi, rtol=1e-9, atol=0)
            assert np.all(pt.multi >= pt.single - 1e-12)

    def test_deterministic(self):
        cfg = ScenarioConfig(iterations=2, sir_points_db=[0.0, 5.0], seed=7)
        assert run_sweep(cfg) == run_sweep(cfg)
        other = run_sweep(ScenarioConfig(iterations=2, sir_points_db=[0.0, 5.0], seed=8))
        assert other != run_sweep(cfg)

    def test_per_iteration_aggregation(self):
        base = dict(iterations=4, sir_points_db=[0.0], seed=3)
        pooled = run_sweep(ScenarioConfig(**base))[0]
        per_it = run_sweep(ScenarioConfig(aggregation="per_iteration", **base))[0]
        pt = simulate_point(ScenarioConfig(**base), 0)
        want = 10 * np.log10(np.mean([spectral_mean(r) for r in pt.single]))
        assert per_it.single_cell_sm_db == pytest.approx(want, abs=1e-12)
        assert pooled.single_cell_sm_db == pytest.approx(10 * np.log10(spectral_mean(pt.single)))
