"""Configuration for the verification driver.

A config is a flat JSON object; every field has a default, so an empty
object (or no config file at all) runs the full default sweep.  Rationals
travel as "num/den" strings to keep the interface exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .scalars import ParseError, parse_rational

MAX_CHARGE = 16
MAX_TRUNCATION = 64

SUITE_NAMES = (
    "hermite",
    "contiguous",
    "orthogonality",
    "operators",
    "eigenstate",
    "reconstruction",
    "differential",
    "norm",
)

DEFAULT_K_VALUES = ("-1", "0", "1/2", "1", "2")


class ConfigError(ValueError):
    """The suite configuration failed to parse or validate."""


@dataclass(frozen=True)
class SuiteConfig:
    suites: Tuple[str, ...] = SUITE_NAMES
    q_range: Tuple[int, int] = (0, 3)
    k_values: Tuple[Fraction, ...] = tuple(Fraction(s) for s in DEFAULT_K_VALUES)
    truncation: int = 14
    fd_step: float = 1e-4
    tolerance: float = 1e-6
    output_path: str = "qk_report.json"
    format: str = "json"

    def charges(self) -> range:
        return range(self.q_range[0], self.q_range[1] + 1)


def validate(cfg: SuiteConfig) -> SuiteConfig:
    seen = set()
    for name in cfg.suites:
        if name not in SUITE_NAMES:
            raise ConfigError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
        if name in seen:
            raise ConfigError(f"duplicate suite {name!r}")
        seen.add(name)
    if not cfg.suites:
        raise ConfigError("no suites requested")
    lo, hi = cfg.q_range
    if not (0 <= lo <= hi <= MAX_CHARGE):
        raise ConfigError(f"q_range must satisfy 0 <= lo <= hi <= {MAX_CHARGE}")
    if not cfg.k_values:
        raise ConfigError("k_values must be nonempty")
    if not (1 <= cfg.truncation <= MAX_TRUNCATION):
        raise ConfigError(f"truncation must be in [1, {MAX_TRUNCATION}]")
    if cfg.truncation < hi:
        raise ConfigError("truncation must be at least the largest charge")
    if not (0.0 < cfg.fd_step <= 0.1):
        raise ConfigError("fd_step must be in (0, 0.1]")
    if cfg.tolerance < 0.0:
        raise ConfigError("tolerance must be nonnegative")
    if cfg.format not in ("json", "csv"):
        raise ConfigError("format must be 'json' or 'csv'")
    if not cfg.output_path:
        raise ConfigError("output_path must be nonempty")
    return cfg


def from_mapping(data: dict) -> SuiteConfig:
    if not isinstance(data, dict):
        raise ConfigError("config root must be a JSON object")
    known = {
        "suites",
        "q_range",
        "k_values",
        "truncation",
        "fd_step",
        "tolerance",
        "output_path",
        "format",
    }
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config fields: {', '.join(sorted(unknown))}")

    kwargs = {}
    if "suites" in data:
        if not isinstance(data["suites"], list):
            raise ConfigError("suites must be a list of suite names")
        kwargs["suites"] = tuple(data["suites"])
    if "q_range" in data:
        qr = data["q_range"]
        if not (isinstance(qr, list) and len(qr) == 2 and all(isinstance(v, int) for v in qr)):
            raise ConfigError("q_range must be a two-integer list [lo, hi]")
        kwargs["q_range"] = (qr[0], qr[1])
    if "k_values" in data:
        kv = data["k_values"]
        if not isinstance(kv, list) or not all(isinstance(s, str) for s in kv):
            raise ConfigError('k_values must be a list of "num/den" strings')
        try:
            kwargs["k_values"] = tuple(parse_rational(s) for s in kv)
        except ParseError as exc:
            raise ConfigError(str(exc)) from None
    if "truncation" in data:
        if not isinstance(data["truncation"], int):
            raise ConfigError("truncation must be an integer")
        kwargs["truncation"] = data["truncation"]
    for key in ("fd_step", "tolerance"):
        if key in data:
            if not isinstance(data[key], (int, float)) or isinstance(data[key], bool):
                raise ConfigError(f"{key} must be a number")
            kwargs[key] = float(data[key])
    if "output_path" in data:
        if not isinstance(data["output_path"], str):
            raise ConfigError("output_path must be a string")
        kwargs["output_path"] = data["output_path"]
    if "format" in data:
        kwargs["format"] = data["format"]

    return validate(SuiteConfig(**kwargs))


def load_config(path: str) -> SuiteConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from None
    return from_mapping(data)
