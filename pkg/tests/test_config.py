from pathlib import Path

import pytest

from strobosol.config import ConfigError, parse_config

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"

TINY = """
[grid]
n_points = 256
length = 40

[evolution]
epsilon = 0.5
n_kicks = 5

[initial.soliton]
kind = soliton
"""


def write_cfg(tmp_path, text, name="scenario.cfg"):
    path = tmp_path / name
    path.write_text(text)
    return path


@pytest.mark.parametrize(
    "name",
    [
        "fig2_eps0.1.cfg",
        "fig2_eps0.5.cfg",
        "fig2_eps1.0.cfg",
        "fig3_eps0.5.cfg",
        "moving_v1.cfg",
        "liexperiment.cfg",
    ],
)
def test_bundled_configs_parse(name):
    config = parse_config(CONFIG_DIR / name)
    assert (config.scenario is not None) or (config.physical is not None)


def test_bundled_width_scenario_shape():
    config = parse_config(CONFIG_DIR / "fig3_eps0.5.cfg")
    scenario = config.scenario
    assert scenario.record_at == "both"
    labels = [spec.label for spec in scenario.initials]
    assert labels == ["free", "gaussian", "phi0", "soliton"]
    assert not scenario.initials[0].kicked
    assert all(spec.kicked for spec in scenario.initials[1:])


def test_tiny_scenario_parses(tmp_path):
    config = parse_config(write_cfg(tmp_path, TINY))
    scenario = config.scenario
    assert scenario.grid_points == 256
    assert scenario.epsilon == 0.5
    assert scenario.initials[0].label == "soliton"
    assert config.physical is None


def test_missing_file():
    with pytest.raises(ConfigError, match="not found"):
        parse_config("/nonexistent/path.cfg")


def test_zero_epsilon_rejected(tmp_path):
    bad = TINY.replace("epsilon = 0.5", "epsilon = 0")
    with pytest.raises(ConfigError, match="evolution.epsilon"):
        parse_config(write_cfg(tmp_path, bad))


def test_unknown_key_rejected(tmp_path):
    bad = TINY.replace("n_kicks = 5", "n_kicks = 5\nnkicks = 7")
    with pytest.raises(ConfigError, match="evolution.nkicks"):
        parse_config(write_cfg(tmp_path, bad))


def test_unknown_section_rejected(tmp_path):
    bad = TINY + "\n[plotting]\ncolor = red\n"
    with pytest.raises(ConfigError, match="plotting"):
        parse_config(write_cfg(tmp_path, bad))


def test_unknown_kind_rejected(tmp_path):
    bad = TINY.replace("kind = soliton", "kind = vortex")
    with pytest.raises(ConfigError, match="kind"):
        parse_config(write_cfg(tmp_path, bad))


def test_missing_kind_rejected(tmp_path):
    bad = TINY.replace("kind = soliton", "velocity = 1")
    with pytest.raises(ConfigError, match="kind"):
        parse_config(write_cfg(tmp_path, bad))


def test_no_initial_rejected(tmp_path):
    bad = TINY.split("[initial.soliton]")[0]
    with pytest.raises(ConfigError, match="initial"):
        parse_config(write_cfg(tmp_path, bad))


def test_file_kind_requires_path(tmp_path):
    bad = TINY.replace("kind = soliton", "kind = file")
    with pytest.raises(ConfigError, match="path"):
        parse_config(write_cfg(tmp_path, bad))


def test_gaussian_kick_requires_tau(tmp_path):
    bad = TINY.replace("n_kicks = 5", "n_kicks = 5\nkick = gaussian")
    with pytest.raises(ConfigError, match="tau"):
        parse_config(write_cfg(tmp_path, bad))


def test_tau_must_fit_the_period(tmp_path):
    bad = TINY.replace("n_kicks = 5", "n_kicks = 5\nkick = gaussian\ntau = 0.2")
    with pytest.raises(ConfigError, match="tau"):
        parse_config(write_cfg(tmp_path, bad))


def test_tau_without_gaussian_rejected(tmp_path):
    bad = TINY.replace("n_kicks = 5", "n_kicks = 5\ntau = 0.01")
    with pytest.raises(ConfigError, match="tau"):
        parse_config(write_cfg(tmp_path, bad))


def test_bad_number_names_the_key(tmp_path):
    bad = TINY.replace("length = 40", "length = forty")
    with pytest.raises(ConfigError, match="grid.length"):
        parse_config(write_cfg(tmp_path, bad))


def test_bad_record_mode_rejected(tmp_path):
    bad = TINY + "\n[record]\nat = sometimes\n"
    with pytest.raises(ConfigError, match="record.at"):
        parse_config(write_cfg(tmp_path, bad))


def test_nonpositive_physical_value_rejected(tmp_path):
    text = (CONFIG_DIR / "liexperiment.cfg").read_text()
    bad = text.replace("mass_u = 7.016", "mass_u = -7.016")
    with pytest.raises(ConfigError, match="physical.mass_u"):
        parse_config(write_cfg(tmp_path, bad))


def test_missing_physical_key_rejected(tmp_path):
    text = (CONFIG_DIR / "liexperiment.cfg").read_text()
    bad = "\n".join(l for l in text.splitlines() if not l.startswith("mass_u"))
    with pytest.raises(ConfigError, match="physical.mass_u"):
        parse_config(write_cfg(tmp_path, bad))


def test_empty_config_rejected(tmp_path):
    with pytest.raises(ConfigError):
        parse_config(write_cfg(tmp_path, "# nothing here\n"))
