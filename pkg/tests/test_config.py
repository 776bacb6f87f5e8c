"""
Tests for environment-driven settings and logging setup.
"""

import logging

import pytest
from pydantic import ValidationError

from allipoly.core.config import get_settings
from allipoly.core.log_setup import configure_logging


class TestSettings:
    """Test cases for Settings."""

    def test_defaults(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test default guards."""
        monkeypatch.delenv("ALLIPOLY_BRUTE_FORCE_MAX_ORDER", raising=False)
        settings = get_settings()
        assert settings.guard_config.canonical_max_order == 8
        assert settings.guard_config.census_force_max_order == 8
        assert settings.parallel_config.default_threads >= 1

    def test_environment_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test ALLIPOLY_-prefixed variables."""
        monkeypatch.setenv("ALLIPOLY_BRUTE_FORCE_MAX_ORDER", "20")
        monkeypatch.setenv("ALLIPOLY_DEFAULT_THREADS", "4")
        settings = get_settings()
        assert settings.guard_config.brute_force_max_order == 20
        assert settings.parallel_config.default_threads == 4

    def test_invalid_thread_default(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that a zero thread default is rejected."""
        monkeypatch.setenv("ALLIPOLY_DEFAULT_THREADS", "0")
        with pytest.raises(ValidationError):
            get_settings()


class TestLogging:
    """Test cases for configure_logging."""

    def test_sets_root_level(self) -> None:
        """Test that the root level follows the argument."""
        root = logging.getLogger()
        previous_level, previous_handlers = root.level, list(root.handlers)
        try:
            configure_logging("debug")
            assert root.level == logging.DEBUG
            configure_logging("nonsense")
            assert root.level == logging.INFO
        finally:
            root.handlers = previous_handlers
            root.setLevel(previous_level)
