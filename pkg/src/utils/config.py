"""Configuration management for the application."""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv

from ..utils.exceptions import ConfigurationError

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

ENV_PREFIX = "EULERCERT_"
FORMATS = ("csv", "json")


def _env(name: str, default: Optional[str] = None) -> Optional[str]:
    value = os.getenv(ENV_PREFIX + name)
    return default if value in (None, "") else value


class Config:
    """Settings from EULERCERT_* environment variables and config/*.json files."""

    def __init__(self) -> None:
        # Selectors
        self.FAMILY = _env("FAMILY")
        self.SUITE = _env("SUITE")
        self.CHECK = _env("CHECK")

        # Ranges and engine limits
        self.N = self._int("N", None)
        self.N_MAX = self._int("N_MAX", None)
        self.BRUTE_CAP = self._int("BRUTE_CAP", 10)
        self.SERIES_ORDER = self._int("SERIES_ORDER", 32)
        self.SEED = self._int("SEED", 0)
        self.JOBS = self._int("JOBS", 1)
        self.SAMPLES = self._int("SAMPLES", 64)

        # Output
        self.FORMAT = (_env("FORMAT", "json") or "json").lower()
        out = _env("OUT")
        self.OUT: Optional[Path] = Path(out) if out else None

        # Paths
        self.BASE_DIR = Path(__file__).parent.parent.parent
        self.CONFIG_DIR = Path(_env("CONFIG_DIR") or self.BASE_DIR / "config")
        self.SUITE_DEFAULTS_PATH = self.CONFIG_DIR / "suite_defaults.json"

        # Logging
        self.LOG_LEVEL = (_env("LOG_LEVEL", "WARNING") or "WARNING").upper()
        self.LOG_FILE = _env("LOG_FILE")

        # Validate configuration
        self._validate()

    @staticmethod
    def _int(name: str, default: Optional[int]) -> Optional[int]:
        raw = _env(name)
        if raw is None:
            return default
        try:
            return int(raw)
        except ValueError:
            raise ConfigurationError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}")

    def _validate(self) -> None:
        """Validate configuration settings."""
        if self.FORMAT not in FORMATS:
            raise ConfigurationError(f"{ENV_PREFIX}FORMAT must be one of {FORMATS}, got {self.FORMAT!r}")
        if self.JOBS is not None and self.JOBS < 1:
            raise ConfigurationError(f"{ENV_PREFIX}JOBS must be at least 1, got {self.JOBS}")
        if self.BRUTE_CAP is not None and self.BRUTE_CAP < 1:
            raise ConfigurationError(f"{ENV_PREFIX}BRUTE_CAP must be at least 1, got {self.BRUTE_CAP}")
        if self.SERIES_ORDER is not None and self.SERIES_ORDER < 0:
            raise ConfigurationError(f"{ENV_PREFIX}SERIES_ORDER must be nonnegative")
        if self.SAMPLES is not None and self.SAMPLES < 0:
            raise ConfigurationError(f"{ENV_PREFIX}SAMPLES must be nonnegative")
        if not isinstance(getattr(logging, self.LOG_LEVEL, None), int):
            raise ConfigurationError(f"Unknown log level {self.LOG_LEVEL!r}")

    def load_json_config(self, file_path: Path) -> Dict[str, Any]:
        """Load JSON configuration file."""
        try:
            if not file_path.exists():
                logger.warning(f"Configuration file not found: {file_path}")
                return {}

            with open(file_path, "r", encoding="utf-8") as f:
                return dict(json.load(f))
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"Invalid JSON in {file_path}: {e}")
        except Exception as e:
            raise ConfigurationError(f"Error loading {file_path}: {e}")

    def get_suite_defaults(self) -> Dict[str, Any]:
        """Default n_max per table family, verify suite and certify check."""
        return self.load_json_config(self.SUITE_DEFAULTS_PATH)

    def default_n_max(self, command: str, selector: Optional[str]) -> Optional[int]:
        section = self.get_suite_defaults().get(command, {})
        if not isinstance(section, dict):
            raise ConfigurationError(f"suite_defaults.json: '{command}' must be an object")
        value = section.get(selector or "", section.get("default"))
        return None if value is None else int(value)

    def setup_logging(self, level: Optional[str] = None) -> None:
        """Set up logging configuration."""
        log_format = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        handlers: List[logging.Handler] = [logging.StreamHandler()]
        if self.LOG_FILE:
            handlers.append(logging.FileHandler(self.LOG_FILE))

        # Configure root logger
        logging.basicConfig(
            level=getattr(logging, (level or self.LOG_LEVEL).upper()),
            format=log_format,
            handlers=handlers,
            force=True,
        )
