"""Configuration parsing, report serialization, and CLI tests."""

import json
from fractions import Fraction as F
from pathlib import Path

import pytest

from fprect import ParseError, check_rectangular, cli, configio
from fprect import reference
from fprect.contraction import check_all
from fprect.solver import picard_iterate

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"


def write(tmp_path, name, obj) -> str:
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


# --- parsing -------------------------------------------------------------------

def test_shipped_space_config_matches_fixture():
    data = configio.load_json(CONFIG_DIR / "main_space.json")
    space = configio.space_from_dict(data)
    fixture = reference.main_space()
    assert space.points == fixture.points
    assert space.table == fixture.table
    assert space.claimed_s == fixture.claimed_s


def test_shipped_instance_config_matches_fixture():
    data = configio.load_json(CONFIG_DIR / "main_instance.json")
    inst = configio.instance_from_dict(data, base_dir=CONFIG_DIR)
    fixture = reference.main_instance()
    assert inst.space.points == fixture.space.points
    assert inst.psi == fixture.psi
    assert inst.weight_phi == fixture.weight_phi
    assert inst.control_phi == fixture.control_phi
    assert inst.F == fixture.F
    assert inst.s == fixture.s


def test_space_roundtrip():
    space = reference.ex2_space()
    again = configio.space_from_dict(configio.space_to_dict(space))
    assert again.points == space.points
    assert again.table == space.table


def test_decimal_literals_parse_exactly():
    space = configio.space_from_dict({
        "points": [{"label": "a", "value": "0"}, {"label": "b", "value": "1"}],
        "entries": [{"a": "a", "b": "b", "d": "0.05"}],
        "fallback": "none",
    })
    from fprect import distance
    assert distance(space, "a", "b") == F(1, 20)


def test_function_spec_roundtrips():
    for spec in (reference.main_weight(), reference.main_control(),
                 reference.kinked_root_psi(), reference.main_psi(),
                 *reference.catalog_compliant_specs()):
        assert configio.function_from_dict(configio.function_to_dict(spec)) == spec


def test_map_roundtrips():
    for self_map in (reference.main_map(),
                     configio.map_from_dict({"constant": "0"}),
                     configio.map_from_dict({"assign": {"a": "b", "b": "a"}})):
        assert configio.map_from_dict(configio.map_to_dict(self_map)) == self_map


def test_instance_roundtrip():
    inst = reference.main_instance()
    again = configio.instance_from_dict(configio.instance_to_dict(inst))
    assert again == inst


def test_parse_error_reports_field_path():
    with pytest.raises(ParseError, match=r"points\[0\]"):
        configio.space_from_dict({"points": [{"label": "a"}]})
    with pytest.raises(ParseError, match="fallback"):
        configio.space_from_dict({
            "points": [{"label": "a", "value": "0"}], "fallback": "huh"})
    with pytest.raises(ParseError, match="not a rational"):
        configio.space_from_dict({
            "points": [{"label": "a", "value": "zebra"}]})


def test_parse_error_reports_json_line(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{\n  "points": [,]\n}')
    with pytest.raises(ParseError, match="line 2"):
        configio.load_json(path)


def test_unknown_catalog_rejected():
    with pytest.raises(ParseError):
        configio.function_from_dict({"catalog": "cclass_99"})


def test_rationals_always_lowest_terms_slash_form():
    space = reference.main_space()
    payload = configio.axiom_report_to_dict(check_rectangular(space))
    assert payload["parameter_s"] == "1/1"
    for w in payload["witnesses"]:
        for key in ("lhs", "rhs"):
            num, den = w[key].split("/")
            assert int(den) > 0


def test_canonical_json_roundtrip_byte_identical():
    space = reference.main_space()
    report = configio.axiom_report_to_dict(check_rectangular(space))
    text = configio.canonical_json(report)
    assert configio.canonical_json(json.loads(text)) == text
    inst = reference.main_instance()
    solved = configio.solve_result_to_dict(picard_iterate(inst, "1/2"))
    text = configio.canonical_json(solved)
    assert configio.canonical_json(json.loads(text)) == text
    pairs = configio.check_report_to_dict(check_all(inst))
    text = configio.canonical_json(pairs)
    assert configio.canonical_json(json.loads(text)) == text


# --- CLI ------------------------------------------------------------------------

def test_cli_verify_space_counterexample_exit(capsys):
    code = cli.main(["verify-space", "--space", str(CONFIG_DIR / "main_space.json"),
                     "--axiom", "rectangular"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL" in out


def test_cli_verify_space_pass_exit(capsys):
    code = cli.main(["verify-space", "--space", str(CONFIG_DIR / "main_space.json"),
                     "--axiom", "b-rectangular", "--s", "3"])
    assert code == 0
    assert "PASS" in capsys.readouterr().out


def test_cli_witness_in_json_output(capsys):
    code = cli.main(["verify-space", "--space", str(CONFIG_DIR / "main_space.json"),
                     "--axiom", "rectangular", "--format", "json",
                     "--all-witnesses"])
    assert code == 1
    payload = json.loads(capsys.readouterr().out)
    assert {"x": "1/5", "u": "1/16", "v": "0", "y": "1/9",
            "lhs": "1/2", "rhs": "1/4"} in payload["witnesses"]
    assert payload["total_violations"] == len(payload["witnesses"])


def test_cli_text_and_json_agree(capsys):
    args = ["verify-space", "--space", str(CONFIG_DIR / "main_space.json"),
            "--axiom", "triangle"]
    cli.main(args)
    text_out = capsys.readouterr().out
    cli.main(args + ["--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    assert f"violations: {payload['total_violations']}" in text_out


def test_cli_minimal_s(capsys):
    code = cli.main(["minimal-s", "--space", str(CONFIG_DIR / "main_space.json"),
                     "--format", "json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["minimal_s"] == "3/1"


def test_cli_solve_fixed_point(capsys):
    code = cli.main(["solve", "--instance", str(CONFIG_DIR / "main_instance.json"),
                     "--from", "1/2", "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["status"] == "fixed_point"
    assert payload["point"] == "0"
    assert payload["trace"]["orbit"] == ["1/2", "1/16", "0", "0", "0"]


def test_cli_solve_periodic_exit(tmp_path, capsys):
    space = {"points": [{"label": c, "value": str(i)} for i, c in enumerate("ab")],
             "entries": [{"a": "a", "b": "b", "d": "1"}], "fallback": "none"}
    inst = {"space": space,
            "map": {"assign": {"a": "b", "b": "a"}},
            "psi": {"catalog": "identity"},
            "weight_phi": {"piecewise": [{"from": "0", "poly": ["0"]}]},
            "control_phi": {"catalog": "linear", "params": {"c": "1/16"}},
            "F": {"catalog": "cclass_1"}, "s": "1"}
    path = write(tmp_path, "swap.json", inst)
    code = cli.main(["solve", "--instance", path, "--from", "a"])
    assert code == 1
    assert "period: 2" in capsys.readouterr().out


def test_cli_solve_max_iter_exit(capsys):
    code = cli.main(["solve", "--instance", str(CONFIG_DIR / "main_instance.json"),
                     "--from", "1/2", "--max-iter", "1"])
    assert code == 3
    assert "max_iter" in capsys.readouterr().out


def test_cli_check_contraction(capsys):
    code = cli.main(["check-contraction", "--instance",
                     str(CONFIG_DIR / "main_instance.json")])
    assert code == 0
    out = capsys.readouterr().out
    assert "global verdict: PASS" in out


def test_cli_check_functions_triple(capsys):
    code = cli.main(["check-functions", "--functions",
                     str(CONFIG_DIR / "tripled_monotone.json")])
    assert code == 0
    out = capsys.readouterr().out
    assert "MONOTONE_TRIPLED: PASS" in out


def test_cli_check_functions_single(tmp_path, capsys):
    path = write(tmp_path, "f.json", {"catalog": "cclass_2",
                                      "params": {"m": "1/2"}})
    code = cli.main(["check-functions", "--functions", path,
                     "--property", "cclass", "--step", "1/2",
                     "--format", "json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["verdict"] is True


def test_cli_replicate(capsys):
    code = cli.main(["replicate", "MAIN_CONTRACTION"])
    assert code == 0
    assert "PASS" in capsys.readouterr().out


def test_replicate_hermetic_and_deterministic():
    from fprect.replicate import CASE_IDS, replicate, replication_to_dict
    for case in CASE_IDS:
        first = replication_to_dict(replicate(case))
        second = replication_to_dict(replicate(case))
        assert first == second
        assert configio.canonical_json(first) == configio.canonical_json(second)


def test_cli_input_error_exit(tmp_path, capsys):
    missing = cli.main(["verify-space", "--space", str(tmp_path / "none.json"),
                        "--axiom", "triangle"])
    assert missing == 2
    path = write(tmp_path, "bad.json", {"points": [{"label": "a"}]})
    bad = cli.main(["verify-space", "--space", path, "--axiom", "triangle"])
    assert bad == 2
    assert "input error" in capsys.readouterr().err
