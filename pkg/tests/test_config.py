"""Tests for configuration loading and precedence."""

import argparse

import pytest
from pydantic import ValidationError

from jointspec.errors import DomainError
from jointspec.main import apply_cli_flags, apply_tolerance_overrides, load_config
from jointspec.models import RunConfig


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Keep JSM_* variables from the calling shell out of the tests."""
    for name in ("JSM_SEED", "JSM_TRUNC", "JSM_TOLERANCES__CLT_FINAL"):
        monkeypatch.delenv(name, raising=False)


def namespace(**kwargs):
    defaults = {"seed": None, "trials": None, "trunc": None, "out": None, "workers": None,
                "log_level": None, "tol": None}
    return argparse.Namespace(**{**defaults, **kwargs})


class TestDefaults:
    """Test built-in values."""

    def test_defaults(self):
        """Test the documented defaults."""
        config = RunConfig()
        assert config.seed == 0
        assert config.trunc == 8
        assert config.output == "text"
        assert config.n_grid == (10, 100, 1000, 10000)
        assert config.caps.measure_dim == 9
        assert config.tolerances.clt_final == 0.05
        assert config.logging.level == "WARNING"

    def test_missing_default_file(self, tmp_path, monkeypatch):
        """Test no config.yaml in the working directory means defaults."""
        monkeypatch.chdir(tmp_path)
        assert load_config().seed == 0

    def test_missing_explicit_file(self, tmp_path):
        """Test an explicit --config path must exist."""
        with pytest.raises(DomainError):
            load_config(tmp_path / "nope.yaml")


class TestYaml:
    """Test YAML loading."""

    def test_values(self, tmp_path):
        """Test nested sections are read."""
        path = tmp_path / "config.yaml"
        path.write_text("seed: 5\ntolerances:\n  clt_final: 0.1\ncaps:\n  hike_length: 6\nlogging:\n  level: debug\n")
        config = load_config(path)
        assert config.seed == 5
        assert config.tolerances.clt_final == 0.1
        assert config.caps.hike_length == 6
        assert config.logging.level == "DEBUG"

    def test_not_a_mapping(self, tmp_path):
        """Test a YAML list is refused."""
        path = tmp_path / "config.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(DomainError):
            load_config(path)

    def test_bad_n_grid(self, tmp_path):
        """Test a decreasing n grid fails validation."""
        path = tmp_path / "config.yaml"
        path.write_text("n_grid: [100, 10]\n")
        with pytest.raises(ValidationError):
            load_config(path)

    def test_bad_level(self):
        """Test unknown log levels fail validation."""
        with pytest.raises(ValidationError):
            RunConfig(logging={"level": "LOUD"})


class TestPrecedence:
    """Test defaults < YAML < environment < CLI flags."""

    def test_env_over_yaml(self, tmp_path, monkeypatch):
        """Test JSM_SEED beats the file."""
        path = tmp_path / "config.yaml"
        path.write_text("seed: 5\n")
        monkeypatch.setenv("JSM_SEED", "7")
        assert load_config(path).seed == 7

    def test_nested_env(self, monkeypatch):
        """Test the __ delimiter reaches nested sections."""
        monkeypatch.setenv("JSM_TOLERANCES__CLT_FINAL", "0.2")
        assert RunConfig().tolerances.clt_final == 0.2

    def test_cli_over_env(self, monkeypatch):
        """Test --seed beats JSM_SEED."""
        monkeypatch.setenv("JSM_SEED", "7")
        config = apply_cli_flags(RunConfig(), namespace(seed=11, out="csv"))
        assert config.seed == 11
        assert config.output == "csv"

    def test_cli_keeps_other_env_values(self, monkeypatch):
        """Test flags only replace what they name; JSM_TRUNC survives --seed."""
        monkeypatch.setenv("JSM_SEED", "7")
        monkeypatch.setenv("JSM_TRUNC", "5")
        config = apply_cli_flags(RunConfig(), namespace(seed=11, log_level="INFO"))
        assert config.seed == 11
        assert config.trunc == 5
        assert config.logging.level == "INFO"

    def test_tol_over_env(self, monkeypatch):
        """Test --tol beats a nested JSM_ variable."""
        monkeypatch.setenv("JSM_TOLERANCES__CLT_FINAL", "0.2")
        config = apply_cli_flags(RunConfig(), namespace(tol=["clt_final=0.3"]))
        assert config.tolerances.clt_final == 0.3

    def test_cli_over_env_and_yaml(self, tmp_path, monkeypatch):
        """Test the full chain: file, then environment, then flags."""
        path = tmp_path / "config.yaml"
        path.write_text("seed: 5\ntrunc: 4\n")
        monkeypatch.setenv("JSM_SEED", "7")
        config = apply_cli_flags(load_config(path), namespace(seed=11))
        assert config.seed == 11
        assert config.trunc == 4

    def test_cli_validation(self):
        """Test flags go through the same validation."""
        with pytest.raises(ValidationError):
            apply_cli_flags(RunConfig(), namespace(trials=0))


class TestToleranceOverrides:
    """Test --tol NAME=VAL."""

    def test_override(self):
        """Test one tolerance changes and the rest stay."""
        config = apply_tolerance_overrides(RunConfig(), ["mgf=1e-6"])
        assert config.tolerances.mgf == 1e-6
        assert config.tolerances.mass == 1e-10

    @pytest.mark.parametrize("item", ["nope=1", "mgf", "mgf=abc"])
    def test_bad_overrides(self, item):
        """Test unknown names, missing '=' and non-numbers raise DomainError."""
        with pytest.raises(DomainError):
            apply_tolerance_overrides(RunConfig(), [item])
