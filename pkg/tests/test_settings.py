import logging

import pytest

from modules.config.settings import AnalysisConfig
from modules.custom_errors import ConfigurationError
from modules.utils.logging import BaseLogger


def test_defaults():
    config = AnalysisConfig()
    config.validate()
    assert config.closure.cap is None
    assert config.orbit.member_cap == 10000
    assert config.output.element_listing_threshold == 60


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("LINE_GROUPOIDS_CAP", "120")
    monkeypatch.setenv("LINE_GROUPOIDS_WORD_LENGTH", "6")
    monkeypatch.setenv("LOG_LEVEL", "debug")
    monkeypatch.setenv("DEBUG_MODE", "true")
    config = AnalysisConfig.from_env()
    assert config.closure.cap == 120
    assert config.parabolic.max_word_length == 6
    assert config.debug_mode


@pytest.mark.parametrize("name, value", [
    ("LINE_GROUPOIDS_CAP", "many"),
    ("LINE_GROUPOIDS_CAP", "0"),
    ("LINE_GROUPOIDS_WORD_LENGTH", "9"),
    ("LOG_LEVEL", "LOUD"),
])
def test_invalid_environment(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigurationError):
        AnalysisConfig.from_env()


def test_logger_level_can_be_changed():
    BaseLogger.set_level("DEBUG")
    assert BaseLogger.get_logger().level == logging.DEBUG
    BaseLogger.set_level("WARNING")
    assert BaseLogger.get_logger().level == logging.WARNING
