"""Python front end for the lmhd spectral MHD solver."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _core
from ._core import ConfigError, InvalidArgument, g_value, initial_condition

__all__ = [
    "ConfigError",
    "InvalidArgument",
    "RunResult",
    "check_series",
    "g_value",
    "initial_condition",
    "osgood",
    "read_series",
    "run",
]

FIELDS: tuple[str, ...] = tuple(_core.record_field_names())


@dataclass
class RunResult:
    status: str
    exit_code: int
    message: str
    steps: int
    series: dict[str, np.ndarray]
    summary: dict

    @property
    def ok(self) -> bool:
        return self.exit_code == 0


def _columns(table: np.ndarray) -> dict[str, np.ndarray]:
    return {name: table[:, i].copy() for i, name in enumerate(FIELDS)}


def _result(raw: dict) -> RunResult:
    return RunResult(
        status=raw["status"],
        exit_code=raw["exit_code"],
        message=raw["message"],
        steps=raw["steps"],
        series=_columns(raw["series"]),
        summary=json.loads(raw["summary_json"]),
    )


def run(config: str | Path | dict) -> RunResult:
    """Run an experiment from a config file path or a dict of key = value entries."""
    if isinstance(config, dict):
        text = "\n".join(f"{k} = {v}" for k, v in config.items())
        return _result(_core.run_config_text(text))
    return _result(_core.run_config_file(str(config)))


def read_series(path: str | Path) -> dict[str, np.ndarray]:
    return _columns(_core.read_series(str(path)))


def check_series(series: dict[str, np.ndarray], params: dict | None = None, dim: int = 2) -> dict:
    """Re-run the inequality checks on a series; `params` holds config entries (params.nu, ...)."""
    table = np.column_stack([np.asarray(series[name], dtype=float) for name in FIELDS])
    text = "\n".join(f"{k} = {v}" for k, v in (params or {}).items())
    return json.loads(_core.check_series(table, text, dim))


def osgood(name: str, limit: str = "", **params: float) -> dict:
    return _core.osgood(name, params, limit)
