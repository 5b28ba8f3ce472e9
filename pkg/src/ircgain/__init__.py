"""IRC-SINR evaluation with closed-form per-antenna gains."""

from .comp import (
    ChannelRealization,
    ScenarioConfig,
    SweepRow,
    generate_realization,
    per_ue_channel_set,
    run_sweep,
    spectral_mean,
)
from .engine import (
    AntennaRow,
    GainTerms,
    IrcState,
    UserChannelSet,
    add_antenna,
    cumulative_gain,
    gain_one_antenna,
    init_state,
    irc_sinr_covariance_oracle,
    irc_sinr_direct,
)
from .linalg import hermitian_inverse, hermitian_solve, rank_one_inverse_update
from .selection import CandidatePool, SelectionTrace, greedy_select, rank_candidates

__version__ = "0.1.0"
