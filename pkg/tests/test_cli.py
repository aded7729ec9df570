import json

import pytest

from troplane.cli import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_PRECONDITION,
    main,
    parse_matrix,
)
from troplane.errors import InvalidMatrixError, ParseError
from troplane.matrices import TropMatrix3

TWO_ANTENNA_DOC = ('{"entries":[["0","-5","0"],["-7","0","0"],'
                   '["-6","-1","0"]]}')
MONOMIAL_DOC = ('{"entries":[["-inf","0","-inf"],["2","-inf","-inf"],'
                '["-inf","-inf","1"]]}')


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_parse_matrix_round_trip():
    m = parse_matrix(TWO_ANTENNA_DOC)
    assert m == TropMatrix3.of([[0, -5, 0], [-7, 0, 0], [-6, -1, 0]])


def test_parse_matrix_rejects_bad_scalar():
    with pytest.raises(ParseError):
        parse_matrix('{"entries":[["1/0","0","0"],["0","0","0"],["0","0","0"]]}')


def test_parse_matrix_rejects_all_bottom_row():
    with pytest.raises(InvalidMatrixError):
        parse_matrix('{"entries":[["-inf","-inf","-inf"],["0","0","0"],'
                     '["0","0","0"]]}')


def test_analyze_two_antenna(tmp_path, capsys):
    path = _write(tmp_path, "m.json", TWO_ANTENNA_DOC)
    assert main(["analyze", "--input", path]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["canonical"]["params"] == {
        "d": "0", "dv": ["0", "6", "1"], "h": ["0", "1", "0"], "g": "4"}
    assert report["triangle"]["pinwheel"] is False
    ants = sorted((a["direction"], a["length"]) for a in
                  report["triangle"]["antennas"])
    assert ants == [("S", "1"), ("W", "4")]
    assert report["cells"]["total"] == sum(
        report["cells"]["by_dimension"].values())


def test_analyze_monomial_skips_canonicalization(tmp_path, capsys):
    path = _write(tmp_path, "m.json", MONOMIAL_DOC)
    assert main(["analyze", "--input", path]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["classification"] == "bijective-monomial"
    assert report["canonical"] is None
    assert "skipped_reason" in report


def test_analyze_json_has_no_floats(tmp_path, capsys):
    path = _write(tmp_path, "m.json", TWO_ANTENNA_DOC)
    main(["analyze", "--input", path])
    doc = json.loads(capsys.readouterr().out,
                     parse_float=lambda s: pytest.fail(f"float in JSON: {s}"))
    assert doc


def test_analyze_infinite_entry_is_precondition_error(tmp_path, capsys):
    doc = ('{"entries":[["-inf","0","-inf"],["2","-inf","-inf"],'
           '["0","-inf","1"]]}')
    path = _write(tmp_path, "m.json", doc)
    assert main(["analyze", "--input", path]) == EXIT_PRECONDITION
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "precondition"


def test_analyze_bad_input_exit_code(tmp_path, capsys):
    path = _write(tmp_path, "m.json", "{not json")
    assert main(["analyze", "--input", path]) == EXIT_INPUT_ERROR
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "input"


def test_analyze_deterministic(tmp_path, capsys):
    path = _write(tmp_path, "m.json", TWO_ANTENNA_DOC)
    main(["analyze", "--input", path])
    first = capsys.readouterr().out
    main(["analyze", "--input", path])
    assert capsys.readouterr().out == first


def test_figure_svg(tmp_path, capsys):
    path = _write(tmp_path, "m.json", TWO_ANTENNA_DOC)
    out = str(tmp_path / "fig.svg")
    assert main(["figure", "--input", path,
                 "--viewport=-12,12,-12,12", "--out", out]) == EXIT_OK
    svg = open(out).read()
    assert svg.startswith("<?xml")
    assert 'id="antennas"' in svg and 'id="soma-outline"' in svg
    assert main(["figure", "--input", path,
                 "--viewport=-12,12,-12,12"]) == EXIT_OK
    assert capsys.readouterr().out == svg


def test_figure_rejects_degenerate_viewport(tmp_path, capsys):
    path = _write(tmp_path, "m.json", TWO_ANTENNA_DOC)
    assert main(["figure", "--input", path,
                 "--viewport=5,5,0,1"]) == EXIT_INPUT_ERROR
    capsys.readouterr()


def test_verify_small_run(capsys):
    code = main(["verify", "--seed", "7", "--trials", "2"])
    out = capsys.readouterr().out
    assert "semiring-laws: trials=2 pass" in out
    assert code in (0, 1)


def test_verify_seed_determinism(capsys):
    main(["verify", "--seed", "5", "--trials", "3"])
    first = capsys.readouterr().out
    main(["verify", "--seed", "5", "--trials", "3"])
    assert capsys.readouterr().out == first


def test_verify_rejects_bad_trials(capsys):
    assert main(["verify", "--trials", "0"]) == EXIT_INPUT_ERROR
    capsys.readouterr()
