import json
from fractions import Fraction

import pytest

from genus0.cli import CommandRequest, main, parse_quadratic, parse_rational, run_command, UsageError
from genus0.exactmath import QuadraticNumber


def run_json(capsys, *argv):
    status = main([*argv, "--json"])
    doc = json.loads(capsys.readouterr().out)
    assert set(doc) == {"command", "level", "result", "warnings"}
    assert isinstance(doc["command"], str) and isinstance(doc["warnings"], list)
    assert doc["level"] is None or isinstance(doc["level"], int)
    return status, doc


def test_haupt(capsys):
    status, doc = run_json(capsys, "haupt", "--level", "6")
    assert status == 0
    assert doc["result"]["exponents"] == [5, -1, 1, -5]
    assert doc["result"]["kappa"] == "72"
    assert main(["haupt", "--level", "6"]) == 0
    assert "r_6=-5" in capsys.readouterr().out


def test_cm_text_and_json_agree(capsys):
    status, doc = run_json(capsys, "cm", "--level", "13")
    assert status == 0
    assert doc["result"]["j"] == {"a": "3448440000", "b": "956448000", "d": 13}
    main(["cm", "--level", "13"])
    assert str(QuadraticNumber(3448440000, 956448000, 13)) in capsys.readouterr().out


def test_jmap_serialization(capsys):
    status, doc = run_json(capsys, "jmap", "--level", "2")
    assert status == 0
    assert doc["result"]["j"] == {"num": ["16777216", "196608", "768", "1"], "den": ["0", "0", "1"]}


def test_kcurve_obstructed(capsys):
    assert main(["kcurve", "--level", "2", "--disc", "5"]) == 1
    assert "no strict twist exists" in capsys.readouterr().out


def test_kcurve_witness(capsys):
    status, doc = run_json(capsys, "kcurve", "--level", "2", "--disc", "-2")
    assert status == 0
    assert doc["result"]["witness"] == {"x": "0", "y": "1", "sign": 1}


def test_twists(capsys):
    status, doc = run_json(capsys, "twists", "--level", "2", "--disc", "-1", "--t", "0", "--alpha", "1+sqrt(-1)")
    assert status == 0 and doc["result"]["strict"] is True


def test_genus(capsys):
    status, doc = run_json(capsys, "genus", "--level", "11")
    assert status == 0 and doc["result"]["genus"] == 1
    status, doc = run_json(capsys, "genus")
    assert doc["result"]["genus0_levels"] == [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25]


@pytest.mark.parametrize("argv", [["frobnicate"], ["twists", "--level", "2", "--disc", "3", "--t", "x/y"],
                                  ["twists", "--level", "2", "--disc", "3", "--t", "1", "--alpha", "1+*sqrt(3)"]])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_usage_errors_from_handlers(capsys):
    assert main(["haupt"]) == 2
    assert main(["kcurve", "--level", "2", "--disc", "4"]) == 2
    assert main(["verify", "--suite", "nope"]) == 2
    assert run_command(CommandRequest("nope"))[0] == 2


def test_domain_errors(capsys):
    assert main(["jmap", "--level", "11"]) == 1
    assert main(["twists", "--level", "5", "--disc", "2", "--t", "1"]) == 1


def test_literal_parsers():
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_quadratic("1/2-3*sqrt(5)") == QuadraticNumber(Fraction(1, 2), -3, 5)
    assert parse_quadratic("sqrt(-2)") == QuadraticNumber(0, 1, -2)
    assert parse_quadratic("7") == 7
    for bad in ("", "1 sqrt(2)", "sqrt(x)", "2*"):
        with pytest.raises(UsageError):
            parse_quadratic(bad)


def test_verify_single_suite(capsys):
    assert main(["verify", "--suite", "genus"]) == 0
    assert "PASS genus" in capsys.readouterr().out
