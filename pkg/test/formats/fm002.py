from pytest import raises

from affinesim import AffSimParseError, AffSimSettings
from affinesim.parser import parse_settings_file


def test_packaged_settings(helper):
    settings = parse_settings_file(helper.config_file("settings.yaml"))

    assert settings.log_level == "INFO"
    assert settings.dense_limit == 10
    assert settings.selftest_trials == 20


def test_settings_file(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("dense_limit: 4\nbench_qubits: [5, 6]\nselftest_seed: 3\n")

    settings = parse_settings_file(path)

    assert settings.dense_limit == 4
    assert settings.bench_qubits == [5, 6]
    assert settings.selftest_seed == 3

    # Defaults stay in place
    assert settings.tolerance == AffSimSettings().tolerance


def test_empty_settings_file(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("")

    assert parse_settings_file(path) == AffSimSettings()


def test_settings_rejected(tmp_path):
    bad = {
        "unknown.yaml": "no_such_option: 1\n",
        "type.yaml": "dense_limit: many\n",
        "range.yaml": "selftest_max_qubits: 9\n",
        "level.yaml": "log_level: LOUD\n",
        "seed.yaml": "bench_seed: -1\n",
        "yaml.yaml": "dense_limit: [1\n",
    }

    for name, text in bad.items():
        path = tmp_path / name
        path.write_text(text)

        with raises(AffSimParseError):
            parse_settings_file(path)

    with raises(AffSimParseError):
        parse_settings_file(tmp_path / "missing.yaml")


def test_settings_assignment():
    settings = AffSimSettings()
    settings.dense_limit = 3

    assert settings.dense_limit == 3

    with raises(ValueError):
        settings.dense_limit = -1
