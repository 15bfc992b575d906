"""
Tests for the central configuration.
"""

from hardyderiv.core.config.central_config import ENV_PREFIX, CentralConfig, get_config, reload_config


class TestCentralConfig:
    """Defaults, YAML files, environment overrides and validation."""

    def test_defaults(self, fresh_config):
        assert fresh_config.get("numerics.grid_size") == 4096
        assert fresh_config.get("sampling.samples") == 500
        assert fresh_config.get("derivation.exp_max_sup") == 2.0
        assert fresh_config.errors == []

    def test_global_instance(self, fresh_config):
        assert get_config() is fresh_config

    def test_yaml_overrides(self, tmp_path):
        path = tmp_path / "hardyderiv.yaml"
        path.write_text("numerics:\n  grid_size: 1024\nsampling:\n  seed: 9\n")
        config = reload_config(str(path))
        assert config.errors == []
        assert config.get("numerics.grid_size") == 1024
        assert config.get("sampling.seed") == 9
        assert config.get("sampling.samples") == 500

    def test_config_dir(self, tmp_path):
        (tmp_path / "hardyderiv.yaml").write_text("bmoa:\n  osc_depth: 4\n")
        config = CentralConfig(config_dir=str(tmp_path))
        assert config.load_config()
        assert config.get("bmoa.osc_depth") == 4

    def test_validation_errors_are_collected(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("numerics:\n  grid_size: 1000\n")
        config = reload_config(str(path))
        assert any("numerics.grid_size" in error for error in config.errors)

    def test_non_mapping_file(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n")
        assert reload_config(str(path)).errors

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv(f"{ENV_PREFIX}SEED", "17")
        monkeypatch.setenv(f"{ENV_PREFIX}L1_REL_TOL", "1e-8")
        config = reload_config()
        assert config.get("sampling.seed") == 17
        assert config.get("numerics.l1_rel_tol") == 1e-8

    def test_bad_environment_value(self, monkeypatch):
        monkeypatch.setenv(f"{ENV_PREFIX}SAMPLES", "many")
        config = reload_config()
        assert any(f"{ENV_PREFIX}SAMPLES" in error for error in config.errors)

    def test_sections(self, fresh_config):
        numerics = fresh_config.get_numerics_config()
        assert numerics["grid_size"] == 4096
        summary = fresh_config.get_config_summary()
        assert {"numerics", "sampling", "logging", "runner"} <= set(summary)
