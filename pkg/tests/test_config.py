"""Config-file format: defaults, unit suffixes, overrides and diagnostics."""

import math

import pytest

from shakebal.config import AppConfig, ConfigError, parse_config
from shakebal.objective import DEFAULT_C1_MAX


def load(tmp_path, text):
    path = tmp_path / "test.cfg"
    path.write_text(text)
    return parse_config(path)


def test_empty_file_gives_pure_defaults(tmp_path):
    cfg = load(tmp_path, "")
    assert cfg == AppConfig()
    assert cfg.objective.c1_max == DEFAULT_C1_MAX
    assert cfg.bench.iteration_budgets == (200, 300)
    assert cfg.bench.repeats == 10


def test_degree_suffix_converts_to_radians(tmp_path):
    cfg = load(tmp_path, "mechanism.alpha = 180deg\n")
    assert cfg.mechanism.alpha == pytest.approx(math.pi)


def test_rad_suffix_and_bare_number(tmp_path):
    cfg = load(tmp_path, "mechanism.alpha = 1.5rad\nmechanism.theta_0 = 1.0\n")
    assert cfg.mechanism.alpha == 1.5
    assert cfg.mechanism.theta_0 == 1.0


def test_scientific_notation_and_comments(tmp_path):
    cfg = load(
        tmp_path,
        """
        # full-line comment
        objective.penalty_weight = 2.5e5   # inline comment
        pso.population = 24
        """,
    )
    assert cfg.objective.penalty_weight == 2.5e5
    assert cfg.pso.population == 24


def test_invariant_violation_names_file_line_and_key(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("mechanism.m_c = 0.4\nmechanism.L = -1\n")
    with pytest.raises(ConfigError) as err:
        parse_config(path)
    message = str(err.value)
    assert "bad.cfg" in message
    assert ":2:" in message
    assert "mechanism.L" in message
    assert "must be > 0" in message


def test_unknown_key_is_rejected(tmp_path):
    with pytest.raises(ConfigError, match="unknown key 'mechanism.mass'"):
        load(tmp_path, "mechanism.mass = 1\n")
    with pytest.raises(ConfigError, match="unknown key"):
        load(tmp_path, "nosection.x = 1\n")


def test_malformed_value_is_rejected(tmp_path):
    with pytest.raises(ConfigError, match="malformed value"):
        load(tmp_path, "mechanism.L = fast\n")
    with pytest.raises(ConfigError, match="expected an integer"):
        load(tmp_path, "pso.population = 12.5\n")


def test_malformed_line_is_rejected(tmp_path):
    with pytest.raises(ConfigError, match="section.key"):
        load(tmp_path, "just some words\n")


def test_bench_lists(tmp_path):
    cfg = load(
        tmp_path,
        "bench.algorithms = pso, bga\nbench.iteration_budgets = 50, 100\nbench.repeats = 3\n",
    )
    assert cfg.bench.algorithms == ("pso", "bga")
    assert cfg.bench.iteration_budgets == (50, 100)
    assert cfg.bench.repeats == 3


def test_bench_rejects_unknown_algorithm(tmp_path):
    with pytest.raises(ConfigError, match="unknown names"):
        load(tmp_path, "bench.algorithms = pso, nope\n")


def test_search_box_follows_the_unbalance_mass(tmp_path):
    cfg = load(tmp_path, "mechanism.m_0 = 0.5\n")
    assert cfg.objective.bounds.upper[0] == pytest.approx(25.0)  # 50 * m_0
    explicit = load(tmp_path, "mechanism.m_0 = 0.5\nobjective.m1_max = 3\nobjective.phi2_max = 90deg\n")
    assert explicit.objective.bounds.upper[0] == 3.0
    assert explicit.objective.bounds.upper[3] == pytest.approx(math.pi / 2)


def test_bad_bounds_are_rejected(tmp_path):
    with pytest.raises(ConfigError, match="bounds"):
        load(tmp_path, "objective.m1_min = 5\nobjective.m1_max = 1\n")


def test_hgapso_reuses_operator_settings(tmp_path):
    cfg = load(tmp_path, "pso.c1 = 0.5\nbga.bits_per_variable = 12\n")
    assert cfg.hgapso.pso.c1 == 0.5
    assert cfg.hgapso.bga.bits_per_variable == 12
