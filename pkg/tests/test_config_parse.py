from __future__ import annotations

from pathlib import Path

import pytest
import yaml

from ringprob import config as cfg
from ringprob.schema import DEFAULT_CAPS
from ringprob.settings import load_settings

ROOT = Path(__file__).resolve().parents[1]


def test_missing_config_falls_back_to_defaults(tmp_path):
    app = cfg.load_app_config(tmp_path / "absent.yaml")
    assert app == cfg.default_run_config()
    assert app.caps.enumeration_candidates == 8**9
    assert set(app.scan_presets) == {"zero", "cyclic", "cyclic-prime", "matrix", "triangular"}


def test_shipped_config_matches_defaults():
    app = cfg.load_app_config(ROOT / "configs" / "config.yaml")
    assert app == cfg.default_run_config()


def test_partial_config_merges_over_defaults(tmp_path):
    payload = {
        "caps": {"oracle_order": 64},
        "extraction": {"sample_size": 8},
        "objective": "lex",
        "scan": {"tiny": {"family": "cyclic", "params": [2, 3]}},
    }
    path = tmp_path / "config.yaml"
    path.write_text(yaml.safe_dump(payload, sort_keys=False), encoding="utf-8")

    app = cfg.load_app_config(path)
    assert app.caps.oracle_order == 64
    assert app.caps.max_order == DEFAULT_CAPS.max_order
    assert app.extraction.sample_size == 8
    assert app.extraction.bookkeeping is True
    assert app.objective == "lex"
    assert list(app.scan_presets) == ["tiny"]
    assert app.scan_presets["tiny"].params == [2, 3]


def test_empty_config_file(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("", encoding="utf-8")
    assert cfg.load_app_config(path) == cfg.default_run_config()


@pytest.mark.parametrize(
    "payload",
    [["not", "a", "mapping"], {"objective": "median"}, {"jobs": 0}, {"caps": {"max_order": 0}}],
)
def test_invalid_config_is_rejected(tmp_path, payload):
    path = tmp_path / "config.yaml"
    path.write_text(yaml.safe_dump(payload), encoding="utf-8")
    with pytest.raises(ValueError):
        cfg.load_app_config(path)


def test_run_config_caps_may_only_be_lowered():
    app = cfg.default_run_config()
    run = cfg.build_run_config(app, "info", inputs=["a.json"], max_order=16)
    assert run.caps.max_order == 16
    assert run.inputs == ["a.json"]
    assert run.mode == "cp"
    assert run.jobs == 1
    with pytest.raises(ValueError):
        cfg.build_run_config(app, "info", max_order=DEFAULT_CAPS.max_order + 1)


def test_run_config_flags_override_app_config():
    app = cfg.default_run_config().model_copy(update={"objective": "sum", "jobs": 3})
    run = cfg.build_run_config(app, "oracle", mode="zp", output_format="text")
    assert (run.mode, run.output_format, run.objective, run.jobs) == ("zp", "text", "sum", 3)
    run = cfg.build_run_config(app, "oracle", objective="lex", jobs=5)
    assert (run.objective, run.jobs) == ("lex", 5)


def test_default_config_round_trips(tmp_path):
    path = tmp_path / "nested" / "config.yaml"
    cfg.write_default_config(path)
    raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    assert "scan" in raw and "scan_presets" not in raw
    assert cfg.load_app_config(path) == cfg.default_run_config()


def test_settings_from_environment(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("RINGPROB_JOBS", "4")
    monkeypatch.setenv("RINGPROB_RESULTS_DIR", str(tmp_path / "out"))
    settings = load_settings()
    assert settings.jobs == 4
    assert settings.results_dir == tmp_path / "out"

    monkeypatch.delenv("RINGPROB_JOBS")
    monkeypatch.delenv("RINGPROB_RESULTS_DIR")
    settings = load_settings()
    assert settings.jobs is None
    assert settings.results_dir == Path("results")


@pytest.mark.parametrize("raw", ["zero", "0", "-2"])
def test_settings_reject_bad_jobs(monkeypatch, tmp_path, raw):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("RINGPROB_JOBS", raw)
    with pytest.raises(ValueError):
        load_settings()
