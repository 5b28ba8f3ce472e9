"""Published five-antenna, three-interferer numerical example."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import (
    AntennaRow,
    UserChannelSet,
    gain_one_antenna,
    init_state,
    irc_sinr_direct,
)

SIGMA2 = 0.1
N_R = 4

H1 = np.array([
    0.0841 + 0.0833j,
    -0.2455 - 0.0302j,
    -0.5794 + 0.5822j,
    0.3141 + 0.3893j,
    0.0808 - 0.1263j,
])

P = np.array([
    [0.0896 + 0.4466j, -0.2823 + 0.0291j, -0.0967 + 0.1620j],
    [0.2063 - 0.0202j, 0.0948 - 0.2504j, -0.2243 - 0.1287j],
    [-0.0261 + 0.1448j, 0.3144 - 0.2070j, 0.2673 - 0.1650j],
    [0.1745 - 0.1172j, -0.1434 - 0.0410j, -0.2230 + 0.2557j],
    [-0.0984 - 0.2849j, -0.0457 + 0.3269j, 0.0004 + 0.3256j],
])

# Published values. The two SINRs are listed in an order that contradicts the
# positive gain, so they are compared as an unordered pair.
PUBLISHED_SINRS = (5.3994, 5.8966)
PUBLISHED_GAIN = 0.4972
PUBLISHED_TOL = 5e-4
IDENTITY_TOL = 1e-9


def channel_set(h=H1, P=P, sigma2=SIGMA2) -> UserChannelSet:
    return UserChannelSet(h, P, sigma2)


@dataclass(frozen=True)
class ExampleReport:
    sinr_small: float
    sinr_large: float
    xi: float
    direct_gain: float

    @property
    def identity_ok(self) -> bool:
        return abs(self.xi - self.direct_gain) <= IDENTITY_TOL

    @property
    def gain_ok(self) -> bool:
        return abs(self.xi - PUBLISHED_GAIN) <= PUBLISHED_TOL

    @property
    def sinr_errors(self) -> tuple[float, float]:
        """Errors against the published pair, matched in sorted order."""
        ours = sorted((self.sinr_small, self.sinr_large))
        ref = sorted(PUBLISHED_SINRS)
        return abs(ours[0] - ref[0]), abs(ours[1] - ref[1])

    @property
    def sinrs_ok(self) -> bool:
        return max(self.sinr_errors) <= PUBLISHED_TOL

    @property
    def ok(self) -> bool:
        return self.identity_ok and self.gain_ok and self.sinrs_ok

    def lines(self) -> list[str]:
        def mark(flag):
            return "ok" if flag else "MISMATCH"

        e_lo, e_hi = self.sinr_errors
        return [
            f"IRC-SINR with {N_R} antennas:     {self.sinr_small:.6g} ({self.sinr_small:.4f})",
            f"IRC-SINR with {N_R + 1} antennas:     {self.sinr_large:.6g} ({self.sinr_large:.4f})",
            f"closed-form gain xi:          {self.xi:.6g} ({self.xi:.4f})",
            f"direct SINR difference:       {self.direct_gain:.6g} ({self.direct_gain:.4f})",
            f"check xi == direct difference (tol {IDENTITY_TOL:g}): "
            f"{mark(self.identity_ok)} |diff| = {abs(self.xi - self.direct_gain):.3e}",
            f"check xi == {PUBLISHED_GAIN} (tol {PUBLISHED_TOL:g}): "
            f"{mark(self.gain_ok)} |diff| = {abs(self.xi - PUBLISHED_GAIN):.3e}",
            f"check SINRs == {{{PUBLISHED_SINRS[0]}, {PUBLISHED_SINRS[1]}}} (tol {PUBLISHED_TOL:g}): "
            f"{mark(self.sinrs_ok)} |diff| = {e_lo:.3e}, {e_hi:.3e}",
        ]


def verify_example(h=H1, P=P, sigma2=SIGMA2) -> ExampleReport:
    full = channel_set(h, P, sigma2)
    small = full.truncated(N_R)
    state = init_state(small)
    row = AntennaRow(full.h[N_R], full.P[N_R])
    sinr_small = irc_sinr_direct(small)
    sinr_large = irc_sinr_direct(full)
    return ExampleReport(
        sinr_small=sinr_small,
        sinr_large=sinr_large,
        xi=gain_one_antenna(state, row).xi,
        direct_gain=sinr_large - sinr_small,
    )
