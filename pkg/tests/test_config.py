"""
Tests for ClosureLabConfig.
"""

import pytest
from pydantic import ValidationError

from chuk_closure_lab.config import ClosureLabConfig
from chuk_closure_lab.separation import SeparationBudgets


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    """No CLOSURE_LAB_ variables and no .env file in the working directory"""
    import os

    for key in list(os.environ):
        if key.startswith("CLOSURE_LAB_"):
            monkeypatch.delenv(key)
    monkeypatch.chdir(tmp_path)
    return monkeypatch


class TestDefaults:
    """Test default values"""

    def test_budgets(self, clean_env):
        """Test the separation and expansion budgets"""
        config = ClosureLabConfig()
        assert config.max_states == 3
        assert config.max_terms == 500
        assert config.group_search_states == 4
        assert config.group_cyclic_order == 16
        assert config.workers == 1
        assert config.expansion_n == 4
        assert config.max_expansion_length == 100_000
        assert config.path_limit == 10_000
        assert config.refute_budget == 5_000

    def test_custom_identity_limits(self, clean_env):
        """Test the pseudoidentity search limits"""
        config = ClosureLabConfig()
        assert config.custom_identity_max_vars == 3
        assert config.custom_identity_max_size == 6

    def test_inverse_style(self, clean_env):
        """Test inverses are primes by default"""
        assert ClosureLabConfig().inverse_style == "prime"

    def test_budgets_model(self, clean_env):
        """Test budgets() mirrors the fields"""
        assert ClosureLabConfig().budgets() == SeparationBudgets(max_states=3, max_terms=500)


class TestEnvironment:
    """Test reading environment variables"""

    def test_override(self, clean_env):
        """Test CLOSURE_LAB_ variables"""
        clean_env.setenv("CLOSURE_LAB_MAX_STATES", "5")
        clean_env.setenv("CLOSURE_LAB_INVERSE_STYLE", "capital")
        config = ClosureLabConfig()
        assert config.max_states == 5
        assert config.inverse_style == "capital"
        assert config.budgets().max_states == 5

    def test_dotenv_file(self, clean_env, tmp_path):
        """Test values from a .env file"""
        (tmp_path / ".env").write_text("CLOSURE_LAB_WORKERS=3\n", encoding="utf-8")
        assert ClosureLabConfig().workers == 3

    def test_unrelated_variables_ignored(self, clean_env):
        """Test variables without the prefix"""
        clean_env.setenv("MAX_STATES", "9")
        assert ClosureLabConfig().max_states == 3


class TestValidation:
    """Test bounds on values"""

    def test_expansion_n_at_least_four(self, clean_env):
        """Test n below 4"""
        clean_env.setenv("CLOSURE_LAB_EXPANSION_N", "3")
        with pytest.raises(ValidationError):
            ClosureLabConfig()

    def test_positive_budgets(self, clean_env):
        """Test a zero budget"""
        with pytest.raises(ValidationError):
            ClosureLabConfig(max_terms=0)

    def test_unknown_style(self, clean_env):
        """Test an inverse style outside prime and capital"""
        with pytest.raises(ValidationError):
            ClosureLabConfig(inverse_style="tilde")

    def test_cyclic_order_at_least_two(self, clean_env):
        """Test a trivial cyclic group bound"""
        with pytest.raises(ValidationError):
            ClosureLabConfig(group_cyclic_order=1)
