"""Flat ``key = value`` scenario files.

Blank lines and anything after ``#`` are ignored. ``sir_points_db`` takes a
comma-separated list.
"""

from __future__ import annotations

from dataclasses import fields
from pathlib import Path

from .comp import ScenarioConfig
from .errors import ConfigError


def _parse_list(text: str) -> list[float]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    return [float(t) for t in items]


_CONVERTERS = {
    "n_cells": int,
    "ues_per_cell": int,
    "antennas_per_bs": int,
    "iterations": int,
    "seed": int,
    "sigma2": float,
    "sir_points_db": _parse_list,
    "aggregation": str,
}
KNOWN_KEYS = tuple(f.name for f in fields(ScenarioConfig))


def convert(key: str, value: str, where: str = ""):
    if key not in _CONVERTERS:
        raise ConfigError(f"unknown key {key!r}{where}; known keys: {', '.join(KNOWN_KEYS)}")
    try:
        return _CONVERTERS[key](value.strip())
    except ValueError as exc:
        raise ConfigError(f"key {key!r}{where}: cannot parse {value.strip()!r} ({exc})") from None


def parse_pairs(lines, source: str = "<config>") -> dict:
    out = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        where = f" ({source} line {lineno})"
        if not sep or not key:
            raise ConfigError(f"expected key=value{where}, got {raw.strip()!r}")
        out[key] = convert(key, value, where)
    return out


def load_file(path) -> dict:
    path = Path(path)
    return parse_pairs(path.read_text().splitlines(), str(path))


def parse_override(text: str) -> tuple[str, object]:
    key, sep, value = text.partition("=")
    key = key.strip()
    if not sep:
        raise ConfigError(f"override {text!r} is not key=value")
    return key, convert(key, value, " (override)")


def build_config(file_values: dict | None = None, overrides: dict | None = None) -> ScenarioConfig:
    values = dict(file_values or {})
    values.update(overrides or {})
    return ScenarioConfig(**values)
