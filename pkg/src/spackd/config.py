"""
Configuration system for spackd.

Settings are resolved from (lowest to highest priority):

1. Defaults (this module)
2. User config (~/.config/spackd/config.toml)
3. Project config (pyproject.toml [tool.spackd])
4. Local config (.spackd.toml in the working directory)
5. Environment (SPACKD_BUDGET)
6. Explicit CLI flags

Mathematical inputs (sequence, k, t, colors, window) are never configurable;
only operational limits live here.
"""

import os
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any

from .utils.errors import ConfigError

# Python 3.11+ has tomllib built-in, older versions need tomli
if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

BUDGET_ENV_VAR = "SPACKD_BUDGET"


def _as_int(key: str, value: Any) -> int:
    if isinstance(value, (bool, float)):
        raise ConfigError(f"{key} must be an integer, got {value!r}")
    try:
        return int(value)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"{key} must be an integer, got {value!r}") from e


@dataclass(frozen=True)
class SpackdConfig:
    """
    Immutable operational settings.

    Attributes:
        node_budget: Search nodes before a window search reports timeout
        workers: Worker processes for the split search (1 = sequential)
        split_depth: Prefix length enumerated before handing subtrees to workers
        window_start_factor: First lower-bound window is this multiple of k+t
        window_max_factor: Largest lower-bound window, as a multiple of k+t
        torus_state_cap: Upper bound on width*height*colors for torus enumeration
        matrix_rows: Default row count for rendered matrices
        sweep_limit: Largest t covered by the selfcheck agreement sweep
    """

    node_budget: int = 10**9
    workers: int = 1
    split_depth: int = 6
    window_start_factor: int = 2
    window_max_factor: int = 16
    torus_state_cap: int = 5000
    matrix_rows: int = 8
    sweep_limit: int = 30

    def with_overrides(self, overrides: dict[str, Any]) -> "SpackdConfig":
        """
        Return a new config with the specified overrides applied.

        Unknown keys and None values are ignored.
        """
        known = {f.name for f in fields(self)}
        valid = {}
        for key, value in overrides.items():
            if key in known and value is not None:
                valid[key] = _as_int(key, value)
        if not valid:
            return self
        return replace(self, **valid)

    @classmethod
    def load(cls, start: Path | None = None) -> "SpackdConfig":
        """
        Load config from files and the environment.

        Args:
            start: Directory used to find .spackd.toml and pyproject.toml
                   (default: current working directory)
        """
        config = cls()
        start = start or Path.cwd()

        user_config = Path.home() / ".config" / "spackd" / "config.toml"
        if user_config.exists():
            config = config.with_overrides(cls._load_toml(user_config))

        pyproject = cls._find_pyproject(start)
        if pyproject:
            config = config.with_overrides(cls._load_pyproject(pyproject))

        local_config = start / ".spackd.toml"
        if local_config.exists():
            config = config.with_overrides(cls._load_toml(local_config))

        budget = os.environ.get(BUDGET_ENV_VAR)
        if budget:
            try:
                config = config.with_overrides({"node_budget": budget})
            except ConfigError as e:
                raise ConfigError(f"{BUDGET_ENV_VAR}={budget!r} is not an integer") from e

        return config

    @staticmethod
    def _load_toml(path: Path) -> dict[str, Any]:
        with open(path, "rb") as f:
            try:
                data = tomllib.load(f)
            except tomllib.TOMLDecodeError as e:
                raise ConfigError(f"{path}: {e}") from e
        # Accept both a flat file and a [spackd] table
        return dict(data.get("spackd", data))

    @staticmethod
    def _load_pyproject(path: Path) -> dict[str, Any]:
        """Load the [tool.spackd] section, or an empty dict."""
        with open(path, "rb") as f:
            try:
                data = tomllib.load(f)
            except tomllib.TOMLDecodeError as e:
                raise ConfigError(f"{path}: {e}") from e
        return dict(data.get("tool", {}).get("spackd", {}))

    @staticmethod
    def _find_pyproject(start: Path) -> Path | None:
        """Find pyproject.toml by walking up from start."""
        current = start.parent if start.is_file() else start
        for parent in [current] + list(current.parents):
            pyproject = parent / "pyproject.toml"
            if pyproject.exists():
                return pyproject
        return None
