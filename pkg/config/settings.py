"""
Application settings and configuration management.

Defaults live on the dataclass; ``Settings.load()`` overlays values from the
environment (a ``.env`` file is honoured through python-dotenv).
"""
import os
import json
import logging
from pathlib import Path
from dataclasses import dataclass, fields, asdict
from typing import Optional, Dict, Any
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_EXPORTS_DIR = Path.cwd() / "exports"

# Environment variable -> settings field
ENV_OVERRIDES: Dict[str, str] = {
    "BUCKFIRE_FIRE_CAP": "fire_cap",
    "BUCKFIRE_POLICY": "default_policy",
    "BUCKFIRE_MC_CHUNK_SIZE": "mc_chunk_size",
    "BUCKFIRE_MC_WORKERS": "mc_workers",
    "BUCKFIRE_LOG_LEVEL": "log_level",
}


@dataclass
class Settings:
    """Engine settings."""

    # Abacus settings
    fire_cap: int = 10**9  # Safety cap on total fires per run
    default_policy: str = "lowest"  # lowest, highest, queue, random

    # Monte Carlo settings
    mc_chunk_size: int = 100_000  # Trials per independently seeded chunk
    mc_workers: int = 1  # Worker processes for chunk simulation

    # Output settings
    log_level: str = "WARNING"
    float_digits: int = 17

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def apply(self, values: Dict[str, Any]) -> None:
        """
        Apply raw (string or typed) values onto this instance.
        Unknown keys and unusable values are skipped with a warning.
        """
        types = {f.name: f.type for f in fields(self)}
        for key, raw in values.items():
            if key not in types:
                logger.warning("Ignoring unknown setting %r", key)
                continue
            if types[key] in (int, "int"):
                try:
                    value = int(raw)
                except (TypeError, ValueError):
                    logger.warning("Ignoring non-integer value %r for %s", raw, key)
                    continue
                if value <= 0:
                    logger.warning("Ignoring non-positive value %r for %s", raw, key)
                    continue
                setattr(self, key, value)
            else:
                setattr(self, key, str(raw))

    @classmethod
    def load(cls) -> 'Settings':
        """
        Build settings from defaults plus BUCKFIRE_* environment variables.
        """
        load_dotenv()
        settings = cls()
        overrides = {
            field_name: os.environ[env_name]
            for env_name, field_name in ENV_OVERRIDES.items()
            if os.environ.get(env_name)
        }
        settings.apply(overrides)
        return settings

    @classmethod
    def from_file(cls, path: Path) -> 'Settings':
        """
        Load settings from a JSON file, falling back to defaults when the
        file is missing or unreadable.
        """
        settings = cls()
        if not Path(path).exists():
            return settings
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (json.JSONDecodeError, IOError) as e:
            logger.warning("Could not load settings from %s: %s", path, e)
            return settings
        if isinstance(data, dict):
            settings.apply(data)
        return settings


# Singleton settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get the global settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings.load()
    return _settings


def reset_settings() -> None:
    """Drop the cached settings so the next call reloads the environment."""
    global _settings
    _settings = None
