"""Tests for environment-driven settings and logging setup."""

import logging

import pytest

from torus_tqft.config import (
    DEFAULT_BRUTE_FORCE_BOUND,
    FunarGrid,
    Settings,
    get_settings,
    parse_grid,
)
from torus_tqft.exceptions import ParseError
from torus_tqft.log import configure_logging, get_logger


@pytest.fixture
def clean_env(monkeypatch):
    for name in ("TORUS_TQFT_GRID", "TORUS_TQFT_LOG_LEVEL", "TORUS_TQFT_BRUTE_FORCE_BOUND"):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


@pytest.mark.unit
class TestGrid:
    def test_parse(self):
        grid = parse_grid("1, -1;5:4, 13:3")
        assert grid == FunarGrid((1, -1), ((5, 4), (13, 3)))
        assert grid.triples() == [(1, 5, 4), (-1, 5, 4), (1, 13, 3), (-1, 13, 3)]

    @pytest.mark.parametrize("text", ["1,2", "1;5", "x;5:4", "1;5:y", "1;5:4;2"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_grid(text)

    def test_bad_token_position(self):
        with pytest.raises(ParseError) as info:
            parse_grid("1,x;5:4")
        assert info.value.position == 2


@pytest.mark.unit
class TestSettings:
    def test_defaults(self, clean_env):
        settings = get_settings()
        assert settings == Settings()
        assert settings.brute_force_bound == DEFAULT_BRUTE_FORCE_BOUND
        assert len(settings.grid.triples()) == 8

    def test_environment_overrides(self, clean_env):
        clean_env.setenv("TORUS_TQFT_GRID", "3;5:4")
        clean_env.setenv("TORUS_TQFT_BRUTE_FORCE_BOUND", "12")
        clean_env.setenv("TORUS_TQFT_LOG_LEVEL", "DEBUG")
        settings = Settings.from_env()
        assert settings.grid.triples() == [(3, 5, 4)]
        assert settings.brute_force_bound == 12
        assert settings.log_level == "DEBUG"

    def test_bad_bound(self, clean_env):
        clean_env.setenv("TORUS_TQFT_BRUTE_FORCE_BOUND", "lots")
        with pytest.raises(ParseError):
            Settings.from_env()


@pytest.mark.unit
class TestLogging:
    def test_package_namespace(self):
        assert get_logger("sl2z.words").name == "torus_tqft.sl2z.words"
        assert get_logger("torus_tqft.cli").name == "torus_tqft.cli"

    def test_configure_sets_level(self):
        logger = configure_logging("debug")
        assert logger.level == logging.DEBUG
        assert configure_logging("nonsense").level == logging.WARNING
        configure_logging("WARNING")
