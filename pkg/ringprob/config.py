"""
Loading, validating, and generating ringprob configuration files.
"""
from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import ValidationError

from .schema import AppConfig, Caps, ExtractionSettings, RunConfig, ScanPreset

DEFAULT_CONFIG_PATH = Path("configs/config.yaml")


# ---------- Default generators ----------


def default_scan_presets() -> Dict[str, ScanPreset]:
    """Parameter grids swept by ``ringprob scan --preset``."""
    return {
        "zero": ScanPreset(family="zero", params=list(range(2, 65))),
        "cyclic": ScanPreset(family="cyclic", params=list(range(2, 65))),
        "cyclic-prime": ScanPreset(family="cyclic", params=[2, 3, 5, 7]),
        "matrix": ScanPreset(family="matrix", params=[2, 3]),
        "triangular": ScanPreset(family="triangular", params=[2, 3, 5]),
    }


def default_run_config() -> AppConfig:
    """Generate the built-in configuration used when no config file exists."""
    return AppConfig(
        caps=Caps(),
        extraction=ExtractionSettings(sample_size=64, bookkeeping=True),
        objective="max",
        jobs=1,
        scan_presets=default_scan_presets(),
    )


# ---------- Load helpers ----------


def _load_yaml(path: Path):
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")
    with path.open("r", encoding="utf-8") as f:
        data = yaml.safe_load(f)
    return data


def _parse_app_config(data: Optional[dict]) -> AppConfig:
    if not data:
        return default_run_config()
    if not isinstance(data, dict):
        raise ValueError("Config file must be a mapping.")
    merged: Dict[str, Any] = default_run_config().model_dump()
    for key, value in data.items():
        if key == "scan":
            key = "scan_presets"
        if isinstance(value, dict) and isinstance(merged.get(key), dict) and key != "scan_presets":
            merged[key] = {**merged[key], **value}
        else:
            merged[key] = value
    try:
        return AppConfig(**merged)
    except ValidationError as e:
        raise ValueError(f"Invalid config: {e}") from e


def load_app_config(path: Optional[Path] = None) -> AppConfig:
    """Read the YAML config, falling back to built-in defaults when the file is missing."""
    path = path or DEFAULT_CONFIG_PATH
    if not path.exists():
        return default_run_config()
    return _parse_app_config(_load_yaml(path))


def build_run_config(
    app: AppConfig,
    command: str,
    inputs: Optional[list] = None,
    mode: Optional[str] = None,
    output_format: Optional[str] = None,
    max_order: Optional[int] = None,
    jobs: Optional[int] = None,
    objective: Optional[str] = None,
) -> RunConfig:
    """Merge CLI flags over the app config; caps may only be lowered."""
    caps = app.caps.model_dump()
    if max_order is not None:
        caps["max_order"] = max_order
    return RunConfig(
        command=command,
        inputs=[str(p) for p in inputs or []],
        mode=mode or "cp",
        output_format=output_format or "json",
        caps=Caps(**caps),
        jobs=jobs or app.jobs,
        objective=objective or app.objective,
        extraction=app.extraction,
    )


def write_default_config(path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    data = default_run_config().model_dump()
    data["scan"] = data.pop("scan_presets")
    with path.open("w", encoding="utf-8") as f:
        yaml.safe_dump(data, f, sort_keys=False)


__all__ = [
    "DEFAULT_CONFIG_PATH",
    "build_run_config",
    "default_run_config",
    "default_scan_presets",
    "load_app_config",
    "write_default_config",
]
