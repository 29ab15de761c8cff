"""Test installation and package configuration."""

import importlib
import subprocess
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).parent.parent


class TestPackageInstallation:
    """Test package installation and configuration."""

    def test_package_import(self):
        """Test that torus_tqft package can be imported."""
        try:
            import torus_tqft

            assert hasattr(torus_tqft, "__version__")
        except ImportError as e:
            pytest.fail(f"Failed to import torus_tqft: {e}")

    def test_package_version(self):
        """Test package version matches the manifest."""
        import torus_tqft

        assert isinstance(torus_tqft.__version__, str)
        pyproject = (ROOT / "pyproject.toml").read_text(encoding="utf-8")
        assert f'version = "{torus_tqft.__version__}"' in pyproject

    def test_package_metadata(self):
        import torus_tqft

        for attr in ("__author__", "__license__"):
            value = getattr(torus_tqft, attr)
            assert isinstance(value, str) and value, f"Package attribute {attr} is empty"

    def test_package_structure(self):
        """Test main submodules exist."""
        for submodule in ("scalars", "sl2z", "cobcat", "tqft", "parsing", "reproduce", "cli"):
            try:
                importlib.import_module(f"torus_tqft.{submodule}")
            except ImportError as e:
                pytest.fail(f"Failed to import submodule torus_tqft.{submodule}: {e}")


class TestDependencies:
    """Test runtime dependencies are importable."""

    @pytest.mark.parametrize("dep", ["dotenv", "sympy", "pydantic", "typer", "rich"])
    def test_core_dependency_available(self, dep):
        try:
            importlib.import_module(dep)
        except ImportError:
            pytest.fail(f"Core dependency '{dep}' not available")

    def test_pydantic_major_version(self):
        import pydantic

        assert pydantic.VERSION.startswith("2.")


class TestConfigurationFiles:
    """Test the manifest and test configuration."""

    def test_pyproject(self):
        pyproject = (ROOT / "pyproject.toml").read_text(encoding="utf-8")
        assert 'name = "torus-tqft"' in pyproject
        assert 'torus-tqft = "torus_tqft.cli:app"' in pyproject
        assert "[tool.hatch.build.targets.wheel]" in pyproject

    def test_pytest_markers(self):
        config = (ROOT / "pytest.ini").read_text(encoding="utf-8")
        for marker in ("slow", "integration", "unit", "property"):
            assert f"{marker}:" in config


class TestInstallationCommands:
    """Test the CLI runs as a module."""

    @pytest.mark.slow
    def test_cli_module_help(self):
        result = subprocess.run(
            [sys.executable, "-m", "torus_tqft.cli", "--help"],
            capture_output=True,
            text=True,
            timeout=60,
            cwd=ROOT,
        )
        assert result.returncode == 0, result.stderr
        assert "decompose" in result.stdout
        assert "reproduce" in result.stdout
