"""End-to-end CLI behaviour: output shape, determinism and exit codes."""

import json

from click.testing import CliRunner

from otlck.cli import main


def run(*args, **kwargs):
    return CliRunner().invoke(main, list(args), **kwargs)


def test_field_info():
    res = run("field", "info", "x^2 - 2")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["degree"] == 2
    assert data["signature"] == [2, 0]
    assert len(data["embeddings"]) == 2


def test_reducible_field_exit_2():
    res = run("field", "info", "x^2 - 1")
    assert res.exit_code == 2
    assert json.loads(res.output)["error"] == "invalid_input"


def test_element_minpoly_and_norm():
    res = run("element", "minpoly", "x^2 - 2", '["1", "1"]')
    assert res.exit_code == 0
    assert json.loads(res.output)["min_poly"] == "x^2 - 2x - 1"
    res2 = run("element", "norm", "x^2 - 2", '["1", "1"]')
    data = json.loads(res2.output)
    assert data["norm"] == "-1"
    assert data["trace"] == "2"


def test_element_bad_json_exit_2():
    res = run("element", "unit", "x^2 - 2", "oops")
    assert res.exit_code == 2


def test_stdin_batch():
    res = run("element", "unit", "x^2 - 2", "-", input='["1","1"]\n["0","1"]\n')
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert [json.loads(l)["unit"] for l in lines] == [True, False]


def test_unit_equalmod():
    res = run("unit", "equalmod", "x^5 - x - 1", '["0","1","0","0","0"]')
    data = json.loads(res.output)
    assert data["equal_modulus"] is False
    assert data["certificate"]["measured_margin"] > 0.2


def test_unit_congruence():
    res = run("unit", "congruence", "x^2 - 2", '["3","2"]', '["0","1"]')
    assert json.loads(res.output)["congruent_to_one"] is True


def test_height_commands():
    res = run("height", "algebraic", "x^2 - x - 1")
    value = float(json.loads(res.output)["height"]["value"])
    assert abs(value - ((1 + 5**0.5) / 2) ** 0.5) < 1e-12
    res2 = run("height", "projective", "--", "1/2", "3", "-5")
    assert json.loads(res2.output)["height"] == "10"
    res3 = run("height", "algebraic", "2/3")
    assert json.loads(res3.output)["height"]["exact"] == "3"


def test_height_relative_to_degree():
    res = run("--relative-to-degree", "2", "height", "algebraic", "x^2 - x - 1")
    value = float(json.loads(res.output)["height"]["value"])
    assert abs(value - (1 + 5**0.5) / 2) < 1e-12


def test_enumerate_lines():
    res = run("enumerate", "--deg", "2", "--bound", "1")
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert len(lines) == 9
    coeffs, height, rou = lines[0].split("\t")
    json.loads(coeffs)
    assert rou in ("true", "false")


def test_enumerate_budget_exit_4():
    res = run("enumerate", "--deg", "6", "--bound", "2", "--budget", "10")
    assert res.exit_code == 4


def test_enumerate_deterministic():
    a = run("enumerate", "--deg", "3", "--bound", "1").output
    b = run("enumerate", "--deg", "3", "--bound", "1").output
    assert a == b


def test_feasible_and_cases():
    assert json.loads(run("feasible", "2", "1").output) == {
        "feasible": True, "m": 0, "q": 2,
    }
    assert json.loads(run("feasible", "3", "2").output) == {"feasible": False}
    data = json.loads(run("cases", "1", "2").output)
    assert data["empty"] is True
    assert json.loads(run("cases", "2", "1").output)["cases"] == [
        {"degree_ratio": 1, "s_prime": 2, "t_prime": 1}
    ]


def test_feasible_invalid_exit_2():
    assert run("feasible", "0", "2").exit_code == 2


def test_subgroup_and_audit():
    res = run("subgroup", "analyze", "x^3 - x - 1", '["0","1","0"]')
    data = json.loads(res.output)
    assert data["rank"] == {"certified": 1, "estimate": 1}
    res2 = run("audit", "x^5 - x - 1", '["0","1","0","0","0"]')
    rep = json.loads(res2.output)
    assert rep["status"] == "CONSISTENT"
    assert rep["lck"] is False


def test_lck_check():
    res = run("lck", "check", "x^3 - x - 1", '["0","1","0"]')
    assert json.loads(res.output)["lck"] is True


def test_text_output_mode():
    res = run("--output", "text", "feasible", "2", "1")
    assert res.exit_code == 0
    assert "feasible: true" in res.output
