"""Exception types raised across the package."""


class IrcError(ValueError):
    """Base class for all errors raised by :mod:`ircgain`."""


class DimensionMismatch(IrcError):
    pass


class NotHermitian(IrcError):
    pass


class NotPositiveDefinite(IrcError):
    pass


class DegenerateDenominator(IrcError):
    pass


class NonFiniteInput(IrcError):
    pass


class EmptyPool(IrcError):
    pass


class InsufficientCandidates(IrcError):
    pass


class EmptyList(IrcError):
    pass


class NegativeSnr(IrcError):
    pass


class UnknownUe(IrcError, KeyError):
    pass


class UnknownBs(IrcError, KeyError):
    pass


class ConfigError(IrcError):
    """Bad configuration key or value; the message names the offending key."""
