"""Tests for configuration loading.
"""
import pytest

from qlaguerre.config import Config, load_config, read_environment, \
    read_file


def test_defaults():
    config = Config()
    assert (config.cap, config.seed, config.samples, config.max_resamples,
            config.output_format, config.output, config.workers) == \
        (10, 42, 20, 100, "text", None, 1)


@pytest.mark.parametrize("settings", [
    dict(cap=0), dict(samples=0), dict(max_resamples=0), dict(workers=0),
    dict(output_format="xml"),
])
def test_validation(settings):
    with pytest.raises(ValueError):
        Config(**settings)


def test_updated_ignores_none():
    config = Config().updated(cap=None, seed=7)
    assert config.cap == 10
    assert config.seed == 7
    assert config == Config(seed=7)


def test_read_file(tmpdir):
    path = tmpdir.join("qlaguerre.ini")
    path.write("[qlaguerre]\ncap = 8\nformat = csv\nbogus = 1\n")
    assert read_file(str(path)) == {"cap": 8, "output_format": "csv"}


def test_read_file_missing_or_broken(tmpdir):
    assert read_file(str(tmpdir.join("absent.ini"))) == {}

    path = tmpdir.join("other.ini")
    path.write("[elsewhere]\ncap = 8\n")
    assert read_file(str(path)) == {}

    path = tmpdir.join("broken.ini")
    path.write("cap = 8\n")
    assert read_file(str(path)) == {}


def test_read_file_bad_value(tmpdir):
    path = tmpdir.join("bad.ini")
    path.write("[qlaguerre]\nseed = many\n")
    with pytest.raises(ValueError):
        read_file(str(path))


def test_environment():
    environ = {"QLAGUERRE_CAP": "6", "QLAGUERRE_SAMPLES": "3", "HOME": "/"}
    assert read_environment(environ) == {"cap": 6, "samples": 3}
    with pytest.raises(ValueError):
        read_environment({"QLAGUERRE_SEED": "x"})


def test_precedence(tmpdir):
    path = tmpdir.join("qlaguerre.ini")
    path.write("[qlaguerre]\ncap = 8\nseed = 5\nsamples = 9\n")
    environ = {"QLAGUERRE_CAP": "6", "QLAGUERRE_SEED": "4"}

    config = load_config(str(path), environ=environ, seed=3)
    assert (config.cap, config.seed, config.samples) == (6, 3, 9)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
