import pytest

from plucker import ConfigError, SweepConfig
from plucker.config import load_config, parse_config_file


class TestDefaults:
    def test_default_is_valid(self):
        cfg = SweepConfig().validate()
        assert cfg.k_range == (1, 3)
        assert cfg.n_range == (1, 6)
        assert cfg.primes == (2, 3)

    def test_grassmannian_iteration(self):
        cfg = SweepConfig(k_range=(2, 3), n_range=(2, 4))
        assert list(cfg.grassmannians()) == [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4)]


class TestValidation:
    def test_empty_range(self):
        with pytest.raises(ConfigError):
            SweepConfig(n_range=(4, 2)).validate()

    def test_non_prime(self):
        with pytest.raises(ConfigError):
            SweepConfig(primes=(2, 4)).validate()

    def test_bad_budget(self):
        with pytest.raises(ConfigError):
            SweepConfig(budget=0).validate()

    def test_empty_primes(self):
        with pytest.raises(ConfigError):
            SweepConfig(primes=()).validate()


class TestFileFormat:
    def test_parse(self):
        text = """
        # sweep shape
        k_range = 1:2
        n_range = 2:4
        primes = 2,5
        seed = 7
        """
        cfg = parse_config_file(text)
        assert cfg.k_range == (1, 2)
        assert cfg.n_range == (2, 4)
        assert cfg.primes == (2, 5)
        assert cfg.seed == 7

    def test_unknown_key(self):
        with pytest.raises(ConfigError):
            parse_config_file("nope = 3")

    def test_bad_line(self):
        with pytest.raises(ConfigError):
            parse_config_file("primes 2,3")

    def test_bad_value(self):
        with pytest.raises(ConfigError):
            parse_config_file("seed = x")


class TestPrecedence:
    def test_env_overrides_file(self, tmp_path):
        path = tmp_path / "sweep.cfg"
        path.write_text("seed = 1\nprimes = 2\n")
        cfg = load_config(str(path), env={"PLUCKER_SEED": "99"})
        assert cfg.seed == 99
        assert cfg.primes == (2,)

    def test_flags_override_env(self, tmp_path):
        path = tmp_path / "sweep.cfg"
        path.write_text("seed = 1\n")
        cfg = load_config(str(path), env={"PLUCKER_SEED": "99"}, overrides={"seed": "5"})
        assert cfg.seed == 5

    def test_missing_file(self):
        with pytest.raises(ConfigError):
            load_config("/nonexistent/sweep.cfg", env={})
