"""
HNN Order Lab - Settings
Defaults, then .env, then environment variables, then CLI flags
"""

import logging
import os
from dataclasses import dataclass, replace
from typing import Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

FORMATS = ("text", "json")


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"⚠️ Ignoring {name}={raw!r}: not an integer, using {default}")
        return default


@dataclass(frozen=True)
class Settings:
    depth: int = 6
    threads: int = 1
    format: str = "text"
    seed: int = 12345
    report_dir: str = os.path.join("data", "reports")
    log_level: str = "INFO"

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.depth < 1:
            raise ValueError(f"depth must be at least 1, got {self.depth}")
        if self.threads < 1:
            raise ValueError(f"threads must be at least 1, got {self.threads}")

    def override(self, **values) -> "Settings":
        """Copy with every non-None value applied"""
        return replace(self, **{k: v for k, v in values.items() if v is not None})


def load_settings(env_file: Optional[str] = None) -> Settings:
    load_dotenv(env_file)
    defaults = Settings()
    fmt = os.getenv("HNNLAB_FORMAT", defaults.format).strip().lower()
    if fmt not in FORMATS:
        logger.warning(f"⚠️ Ignoring HNNLAB_FORMAT={fmt!r}, using {defaults.format}")
        fmt = defaults.format
    return Settings(
        depth=max(1, _int_env("HNNLAB_DEPTH", defaults.depth)),
        threads=max(1, _int_env("HNNLAB_THREADS", defaults.threads)),
        format=fmt,
        seed=_int_env("HNNLAB_SEED", defaults.seed),
        report_dir=os.getenv("HNNLAB_REPORT_DIR", defaults.report_dir),
        log_level=os.getenv("LOG_LEVEL", defaults.log_level).upper(),
    )
