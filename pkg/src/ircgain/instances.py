"""Random problem instances shared by the self-test and the benchmark."""

from __future__ import annotations

import numpy as np

from .engine import AntennaRow, UserChannelSet

SIGMA2_CHOICES = (0.01, 0.1, 1.0)


def crandn(rng: np.random.Generator, *shape) -> np.ndarray:
    """Circularly-symmetric complex Gaussian entries with unit variance."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_channel_set(rng, n_r: int, n_int: int, sigma2: float) -> UserChannelSet:
    return UserChannelSet(crandn(rng, n_r), crandn(rng, n_r, n_int), sigma2)


def random_row(rng, n_int: int) -> AntennaRow:
    return AntennaRow(complex(crandn(rng, 1)[0]), crandn(rng, n_int))


def random_rows(rng, n_int: int, count: int) -> list[AntennaRow]:
    return [random_row(rng, n_int) for _ in range(count)]


def pick_sigma2(rng) -> float:
    return float(SIGMA2_CHOICES[rng.integers(len(SIGMA2_CHOICES))])


def to_jsonable(obj):
    """Convert arrays/complex values to nested lists of ``[re, im]`` pairs."""
    if isinstance(obj, UserChannelSet):
        return {"h": to_jsonable(obj.h), "P": to_jsonable(obj.P), "sigma2": obj.sigma2}
    if isinstance(obj, AntennaRow):
        return {"h_new": to_jsonable(obj.h_new), "rho": to_jsonable(obj.rho)}
    if isinstance(obj, np.ndarray):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, np.generic):
        return obj.item()
    return obj
