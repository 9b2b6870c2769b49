"""
core/config.py
Runtime settings for the CLI, the REPL and the scripts.

Values come from the process environment, optionally seeded from a .env
file (kept out of the repo), and are overridden by command-line flags.

    SIGMA_OUTPUT            human | json
    SIGMA_STRICT            1/true/yes/on to turn chain warnings into errors
    SIGMA_ORACLE_MAX_BASES  oracle bound, 0..16
    SIGMA_LOG_LEVEL         DEBUG, INFO, WARNING, ...
    SIGMA_PROMPT            REPL prompt
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

from dotenv import load_dotenv

from core.errors import ConfigError
from core.models import MAX_UNIVERSE_BASES

OUTPUT_MODES = ("human", "json")
_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off", ""}


@dataclass(frozen=True)
class Settings:
    output: str = "human"
    strict: bool = False
    oracle_max_bases: int = MAX_UNIVERSE_BASES
    log_level: str = "WARNING"
    prompt: str = "σ> "

    @property
    def json_output(self) -> bool:
        return self.output == "json"

    @classmethod
    def from_env(
        cls,
        env_file: Optional[str] = None,
        environ: Optional[Mapping[str, str]] = None,
    ) -> "Settings":
        """
        Read settings from `environ` (default: os.environ after loading .env).

        Raises:
            ConfigError: on an unknown output mode, a non-integer oracle bound
            or an unknown log level.
        """
        if environ is None:
            load_dotenv(env_file)
            environ = os.environ

        defaults = cls()
        output = environ.get("SIGMA_OUTPUT", defaults.output).strip().lower()
        if output not in OUTPUT_MODES:
            raise ConfigError(f"SIGMA_OUTPUT must be one of {OUTPUT_MODES}, got {output!r}")

        strict = _parse_bool("SIGMA_STRICT", environ.get("SIGMA_STRICT", ""))

        raw_bound = environ.get("SIGMA_ORACLE_MAX_BASES", str(defaults.oracle_max_bases))
        try:
            bound = int(raw_bound)
        except ValueError:
            raise ConfigError(f"SIGMA_ORACLE_MAX_BASES must be an integer, got {raw_bound!r}") from None
        if bound < 0:
            raise ConfigError(f"SIGMA_ORACLE_MAX_BASES must be non-negative, got {bound}")

        level = environ.get("SIGMA_LOG_LEVEL", defaults.log_level).strip().upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ConfigError(f"SIGMA_LOG_LEVEL is not a logging level: {level!r}")

        return cls(
            output=output,
            strict=strict,
            oracle_max_bases=min(bound, MAX_UNIVERSE_BASES),
            log_level=level,
            prompt=environ.get("SIGMA_PROMPT", defaults.prompt),
        )

    def with_overrides(self, **changes) -> "Settings":
        """Copy with the given fields replaced; None values are ignored."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _parse_bool(name: str, raw: str) -> bool:
    value = raw.strip().lower()
    if value in _TRUE:
        return True
    if value in _FALSE:
        return False
    raise ConfigError(f"{name} must be a boolean, got {raw!r}")
