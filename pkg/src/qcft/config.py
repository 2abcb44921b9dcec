"""Run configuration: defaults, QCFT_ORDER environment override, config file,
command-line flags (highest precedence)."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import ConfigParse
from .series import DEFAULT_ORDER


@dataclass(frozen=True)
class RunConfig:
    order: int = DEFAULT_ORDER
    float_tolerance: float = 1e-8
    exact_only: bool = False
    output_path: str | None = None

    def __post_init__(self):
        if self.order < 8:
            raise ValueError(f"order {self.order} < 8")
        if not (0 < self.float_tolerance <= 1e-2):
            raise ValueError(f"tolerance {self.float_tolerance} outside (0, 1e-2]")


_KEYS = {"order", "tolerance", "exact_only", "output"}


def _parse_bool(value: str, line: int) -> bool:
    if value.lower() in ("true", "1", "yes"):
        return True
    if value.lower() in ("false", "0", "no"):
        return False
    raise ConfigParse(f"expected a boolean, got {value!r}", line)


def load_config(path: str | Path | None = None,
                order: int | None = None,
                tolerance: float | None = None,
                exact_only: bool | None = None,
                output: str | None = None) -> RunConfig:
    """Merge defaults, the QCFT_ORDER environment variable, an optional
    `key = value` config file, and explicit flag overrides (flags win)."""
    cfg = RunConfig()
    env_order = os.environ.get("QCFT_ORDER")
    if env_order is not None:
        try:
            cfg = replace(cfg, order=int(env_order))
        except ValueError as e:
            raise ConfigParse(f"QCFT_ORDER: {e}", 0)

    if path is not None:
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise ConfigParse("expected 'key = value'", lineno)
            key, _, value = stripped.partition("=")
            key, value = key.strip(), value.strip()
            if key not in _KEYS:
                raise ConfigParse(f"unknown key {key!r}", lineno)
            try:
                if key == "order":
                    cfg = replace(cfg, order=int(value))
                elif key == "tolerance":
                    cfg = replace(cfg, float_tolerance=float(value))
                elif key == "exact_only":
                    cfg = replace(cfg, exact_only=_parse_bool(value, lineno))
                else:
                    cfg = replace(cfg, output_path=value)
            except ConfigParse:
                raise
            except ValueError as e:
                raise ConfigParse(str(e), lineno)

    updates = {}
    if order is not None:
        updates["order"] = order
    if tolerance is not None:
        updates["float_tolerance"] = tolerance
    if exact_only is not None:
        updates["exact_only"] = exact_only
    if output is not None:
        updates["output_path"] = output
    if updates:
        try:
            cfg = replace(cfg, **updates)
        except ValueError as e:
            raise ConfigParse(str(e), 0)
    return cfg
