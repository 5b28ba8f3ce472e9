"""IRC-SINR evaluation and the closed-form gain of one extra receive antenna.

Conventions: ``h`` is the desired UE's channel (length ``n_r``), ``P`` holds
the interferers' channels as columns (``n_r x (Z-1)``). A new antenna adds
the scalar ``h_new`` to ``h`` and the row ``rho`` to ``P``.

The incremental state caches

* ``A = (sigma2 I + P^H P)^{-1}``
* ``c = P^H h``
* ``g = h^H h``

so that ``sinr = (g - c^H A c) / sigma2`` and adding an antenna costs
``O((Z-1)^2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, IrcError, NonFiniteInput
from .linalg import (
    as_matrix,
    as_vector,
    hermitian_inverse,
    hermitian_solve,
    quadratic_form,
    rank_one_inverse_update,
)

IMAG_TOL = 1e-12


def _check_sigma2(sigma2: float) -> float:
    sigma2 = float(sigma2)
    if not np.isfinite(sigma2):
        raise NonFiniteInput("sigma2 must be finite")
    if sigma2 <= 0.0:
        raise IrcError(f"sigma2 must be positive, got {sigma2}")
    return sigma2


@dataclass(frozen=True)
class UserChannelSet:
    """Desired channel ``h``, interferer matrix ``P`` and noise variance.

    ``P`` may have zero columns (no interferers). A 1-D or empty ``P`` is
    reshaped to ``(len(h), 0)``.
    """

    h: np.ndarray
    P: np.ndarray
    sigma2: float

    def __post_init__(self):
        h = as_vector(self.h, "h")
        P = np.asarray(self.P, dtype=np.complex128)
        if P.size == 0:
            P = np.zeros((h.shape[0], 0), dtype=np.complex128)
        P = as_matrix(P, "P")
        if P.shape[0] != h.shape[0]:
            raise DimensionMismatch(f"h has length {h.shape[0]} but P has {P.shape[0]} rows")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "sigma2", _check_sigma2(self.sigma2))

    @property
    def n_antennas(self) -> int:
        return self.h.shape[0]

    @property
    def n_interferers(self) -> int:
        return self.P.shape[1]

    def rows(self) -> list["AntennaRow"]:
        """Split the system into one :class:`AntennaRow` per antenna."""
        return [AntennaRow(self.h[i], self.P[i]) for i in range(self.n_antennas)]

    def truncated(self, n: int) -> "UserChannelSet":
        """The same UE observed by the first ``n`` antennas only."""
        return UserChannelSet(self.h[:n], self.P[:n], self.sigma2)


@dataclass(frozen=True)
class AntennaRow:
    """One new antenna: desired-UE channel ``h_new`` and interferer row ``rho``."""

    h_new: complex
    rho: np.ndarray

    def __post_init__(self):
        h_new = complex(self.h_new)
        if not np.isfinite(h_new):
            raise NonFiniteInput("h_new must be finite")
        object.__setattr__(self, "h_new", h_new)
        object.__setattr__(self, "rho", as_vector(self.rho, "rho"))


@dataclass(frozen=True)
class GainTerms:
    y: complex
    t: float
    xi: float


@dataclass(frozen=True)
class IrcState:
    """Incremental IRC state at ``n_antennas`` receive antennas."""

    n_antennas: int
    A: np.ndarray = field(repr=False)
    c: np.ndarray = field(repr=False)
    g: float
    sigma2: float
    sinr: float

    @property
    def n_interferers(self) -> int:
        return self.c.shape[0]

    def cached_sinr(self) -> float:
        """SINR recomputed from the cached ``A``, ``c`` and ``g``."""
        return _sinr_from_cache(self.A, self.c, self.g, self.sigma2)


def _sinr_from_cache(A: np.ndarray, c: np.ndarray, g: float, sigma2: float) -> float:
    proj = quadratic_form(A, c.conj()) if c.size else 0j  # c^H A c
    return max(0.0, (g - proj.real) / sigma2)


def irc_sinr_direct(ucs: UserChannelSet) -> float:
    """IRC-SINR of the desired UE::

        (h^H h - h^H P (sigma2 I + P^H P)^{-1} P^H h) / sigma2

    With no interferers this is the MRC value ``|h|^2 / sigma2``. The
    result is clipped at zero against roundoff.
    """
    h, P, s2 = ucs.h, ucs.P, ucs.sigma2
    g = float(np.vdot(h, h).real)
    if P.shape[1] == 0:
        return g / s2
    c = P.conj().T @ h
    gram = s2 * np.eye(P.shape[1]) + P.conj().T @ P
    proj = np.vdot(c, hermitian_solve(gram, c)).real
    return max(0.0, (g - proj) / s2)


def irc_sinr_covariance_oracle(ucs: UserChannelSet) -> float:
    """IRC-SINR as ``h^H (sigma2 I + P P^H)^{-1} h``.

    Independent of :func:`irc_sinr_direct`: it inverts the antenna-domain
    interference-plus-noise covariance with a general LU solve.
    """
    h, P, s2 = ucs.h, ucs.P, ucs.sigma2
    if h.shape[0] == 0:
        return 0.0
    cov = s2 * np.eye(h.shape[0]) + P @ P.conj().T
    return float(np.vdot(h, np.linalg.solve(cov, h)).real)


def init_state(ucs: UserChannelSet) -> IrcState:
    P = ucs.P
    A = hermitian_inverse(ucs.sigma2 * np.eye(P.shape[1]) + P.conj().T @ P)
    c = P.conj().T @ ucs.h
    g = float(np.vdot(ucs.h, ucs.h).real)
    return IrcState(
        n_antennas=ucs.n_antennas,
        A=A,
        c=c,
        g=g,
        sigma2=ucs.sigma2,
        sinr=_sinr_from_cache(A, c, g, ucs.sigma2),
    )


def _check_row(state: IrcState, row: AntennaRow) -> None:
    if row.rho.shape[0] != state.n_interferers:
        raise DimensionMismatch(
            f"rho has length {row.rho.shape[0]}, state has {state.n_interferers} interferers"
        )


def gain_one_antenna(state: IrcState, row: AntennaRow) -> GainTerms:
    """SINR gain from adding ``row`` to ``state``.

    With ``y = c^H A rho^H`` and ``t = rho A rho^H``::

        xi = |y - conj(h_new)|^2 / (sigma2 (1 + t))

    which is nonnegative by construction.
    """
    _check_row(state, row)
    rho = row.rho
    if rho.size == 0:
        y, t = 0j, 0.0
    else:
        a_rho = state.A @ rho.conj()
        y = complex(np.vdot(state.c, a_rho))
        tq = complex(rho @ a_rho)
        if abs(tq.imag) > IMAG_TOL * max(1.0, abs(tq.real)):
            raise IrcError(f"rho A rho^H has imaginary part {tq.imag:.3e}; A is not Hermitian")
        t = tq.real
    xi = abs(y - row.h_new.conjugate()) ** 2 / (state.sigma2 * (1.0 + t))
    return GainTerms(y=y, t=t, xi=xi)


def add_antenna(state: IrcState, row: AntennaRow) -> IrcState:
    """Return the state with one more receive antenna."""
    terms = gain_one_antenna(state, row)
    return _apply(state, row, terms.xi)


def _apply(state: IrcState, row: AntennaRow, xi: float) -> IrcState:
    return IrcState(
        n_antennas=state.n_antennas + 1,
        A=rank_one_inverse_update(state.A, row.rho),
        c=state.c + row.rho.conj() * row.h_new,
        g=state.g + abs(row.h_new) ** 2,
        sigma2=state.sigma2,
        sinr=state.sinr + xi,
    )


def cumulative_gain(state: IrcState, rows: Iterable[AntennaRow]) -> tuple[float, IrcState]:
    """Sum of per-antenna gains along ``rows`` and the final state."""
    total = 0.0
    for row in rows:
        xi = gain_one_antenna(state, row).xi
        state = _apply(state, row, xi)
        total += xi
    return total, state


def stack_rows(ucs: UserChannelSet, rows: Sequence[AntennaRow]) -> UserChannelSet:
    """``ucs`` extended by ``rows`` appended as new antennas."""
    if not rows:
        return ucs
    h = np.concatenate([ucs.h, [r.h_new for r in rows]])
    P = np.vstack([ucs.P] + [r.rho.reshape(1, -1) for r in rows])
    return UserChannelSet(h, P, ucs.sigma2)
