import pytest
from pydantic import ValidationError

from spectra.config import DEFAULT_MAX_EDGES, SpectraSettings, get_algorithm_config, get_settings


def test_defaults():
    settings = get_settings()
    assert settings.MAX_EDGES == DEFAULT_MAX_EDGES == 10
    assert settings.VIOLATION_CAP == 100
    assert settings.SCHEMA_VERSION == 1
    assert settings.LOG_LEVEL == "WARNING"


def test_environment_override(monkeypatch):
    monkeypatch.setenv("SPECTRA_MAX_EDGES", "12")
    monkeypatch.setenv("SPECTRA_SAMPLES", "50")
    settings = SpectraSettings()
    assert settings.MAX_EDGES == 12
    assert settings.SAMPLES == 50


def test_invalid_environment(monkeypatch):
    monkeypatch.setenv("SPECTRA_TEMPERATURE_DECAY", "2")
    with pytest.raises(ValidationError):
        SpectraSettings()


def test_settings_are_cached():
    assert get_settings() is get_settings()


def test_algorithm_config():
    assert set(get_algorithm_config("search")) == {
        "budget", "restarts", "seed", "initial_temperature", "decay",
    }
    assert get_algorithm_config("gradient") == {"max_count": 10_000}
    assert get_algorithm_config("unknown") == {}
