"""
Environment-backed settings loader.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv


@dataclass
class Settings:
    jobs: Optional[int] = None
    results_dir: Path = Path("results")


def load_settings() -> Settings:
    # Load from .env if present
    load_dotenv()

    def _int_env(name: str) -> Optional[int]:
        raw = os.getenv(name)
        if raw is None or not raw.strip():
            return None
        try:
            value = int(raw)
        except ValueError as e:
            raise ValueError(f"{name} must be an integer, got {raw!r}") from e
        if value < 1:
            raise ValueError(f"{name} must be at least 1, got {value}")
        return value

    return Settings(
        jobs=_int_env("RINGPROB_JOBS"),
        results_dir=Path(os.getenv("RINGPROB_RESULTS_DIR") or "results"),
    )
