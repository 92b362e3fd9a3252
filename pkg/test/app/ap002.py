from affinesim.app import BaseApp, run
from affinesim.app.base import EXIT_OK


def test_selftest(capsys):
    assert run(["selftest", "--trials", "2"]) == EXIT_OK
    assert capsys.readouterr().out == "selftest ok: 18 trials in 10 suites\n"


def test_bench(capsys):
    assert run(["bench", "--qubits", "5,8", "--gates", "20"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()

    assert len(lines) == 2
    assert lines[0].startswith("bench n=5 gates=20 ms=")
    assert lines[1].startswith("bench n=8 gates=20 ms=")


def test_settings_from_arguments():
    app = BaseApp(["--dense-limit", "3", "--log-level", "warning", "selftest", "--trials", "5"])

    assert app.settings.dense_limit == 3
    assert app.settings.log_level == "WARNING"
    assert app.settings.selftest_trials == 5


def test_timers(capsys):
    assert run(["--show-timers", "check", "-s", "p_gate.sig"]) == EXIT_OK
    assert "Timer [check]" in capsys.readouterr().err
