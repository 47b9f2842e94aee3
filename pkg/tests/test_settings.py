import pytest

from utils.settings import Settings, load_settings


@pytest.fixture
def empty_env(tmp_path):
    path = tmp_path / ".env"
    path.write_text("", encoding="utf-8")
    return str(path)


def test_defaults(empty_env):
    settings = load_settings(empty_env)
    assert settings.depth == 6
    assert settings.threads == 1
    assert settings.format == "text"
    assert settings.seed == 12345


def test_environment_overrides(empty_env, monkeypatch):
    monkeypatch.setenv("HNNLAB_DEPTH", "9")
    monkeypatch.setenv("HNNLAB_THREADS", "4")
    monkeypatch.setenv("HNNLAB_FORMAT", "JSON")
    monkeypatch.setenv("HNNLAB_SEED", "7")
    settings = load_settings(empty_env)
    assert (settings.depth, settings.threads, settings.format, settings.seed) == (9, 4, "json", 7)


def test_env_file_values(tmp_path):
    path = tmp_path / "lab.env"
    path.write_text("HNNLAB_DEPTH=8\nHNNLAB_REPORT_DIR=out/reports\n", encoding="utf-8")
    settings = load_settings(str(path))
    assert settings.depth == 8
    assert settings.report_dir == "out/reports"


def test_bad_environment_values_fall_back(empty_env, monkeypatch):
    monkeypatch.setenv("HNNLAB_DEPTH", "deep")
    monkeypatch.setenv("HNNLAB_THREADS", "0")
    monkeypatch.setenv("HNNLAB_FORMAT", "xml")
    settings = load_settings(empty_env)
    assert settings.depth == 6
    assert settings.threads == 1
    assert settings.format == "text"


def test_flags_override_settings():
    settings = Settings().override(depth=3, threads=None, format="json")
    assert settings.depth == 3
    assert settings.threads == 1
    assert settings.format == "json"


@pytest.mark.parametrize("values", [{"depth": 0}, {"threads": 0}, {"format": "xml"}])
def test_invalid_settings(values):
    with pytest.raises(ValueError):
        Settings().override(**values)
