import json
import subprocess
import sys

import pytest

from orthoquantale import catalog
from orthoquantale.cli import CliConfig, main, run_command
from orthoquantale.errors import IndexOutOfRange, IoError, MalformedInput
from orthoquantale.lattice import build_lattice, spec_to_dict, table_to_dict
from orthoquantale.limits import ENV_MOORE_MAX_N, SizeLimits
from orthoquantale.serialize import dumps, parse_endomap_file, parse_lattice_file, table_to_json


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload))
    return path


@pytest.fixture
def mo2_file(tmp_path):
    return write(tmp_path, "mo2.json", table_to_dict(catalog.mo(2)))


@pytest.fixture
def o6_file(tmp_path):
    return write(tmp_path, "o6.json", spec_to_dict(catalog.hexagon_spec()))


def cli(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


# --- parsing -----------------------------------------------------------------


def test_parse_mo2(mo2_file):
    spec = parse_lattice_file(mo2_file)
    assert spec.n == 6 and spec.name == "MO2"
    assert build_lattice(spec).same_tables(catalog.mo(2))


def test_parse_leq_form(tmp_path):
    b2 = catalog.boolean_algebra(2)
    payload = {"name": "B2", "n": 4, "leq": b2.leq.astype(int).tolist(), "ortho": [3, 2, 1, 0]}
    assert build_lattice(parse_lattice_file(write(tmp_path, "b2.json", payload))).same_tables(b2)


def test_parse_rejects_both_relations(tmp_path):
    payload = {"n": 2, "covers": [[0, 1]], "leq": [[1, 1], [0, 1]], "ortho": [1, 0]}
    with pytest.raises(MalformedInput):
        parse_lattice_file(write(tmp_path, "x.json", payload))


def test_parse_rejects_short_ortho(tmp_path):
    payload = {"n": 2, "covers": [[0, 1]], "ortho": [1]}
    with pytest.raises(MalformedInput) as info:
        parse_lattice_file(write(tmp_path, "x.json", payload))
    assert info.value.field == "ortho"


def test_parse_index_out_of_range(tmp_path):
    payload = {"n": 2, "covers": [[0, 2]], "ortho": [1, 0]}
    with pytest.raises(IndexOutOfRange):
        parse_lattice_file(write(tmp_path, "x.json", payload))


def test_parse_bad_json_reports_line(tmp_path):
    with pytest.raises(MalformedInput) as info:
        parse_lattice_file(write(tmp_path, "x.json", '{\n  "n": 2,\n  "ortho": [1 0]\n}'))
    assert info.value.line == 3


@pytest.mark.parametrize(
    "payload, field",
    [([1, 2], None), ({"covers": []}, "n"), ({"n": "two", "covers": [], "ortho": []}, "n"),
     ({"n": 1, "covers": [[0]], "ortho": [0]}, "covers"),
     ({"n": 1, "leq": [[2]], "ortho": [0]}, "leq"),
     ({"n": 1, "covers": [], "ortho": [0], "labels": [1]}, "labels")],
)
def test_parse_field_errors(tmp_path, payload, field):
    with pytest.raises(MalformedInput) as info:
        parse_lattice_file(write(tmp_path, "x.json", payload))
    if field:
        assert info.value.field == field


def test_parse_missing_file(tmp_path):
    with pytest.raises(IoError):
        parse_lattice_file(tmp_path / "nope.json")


def test_parse_endomap_forms(tmp_path):
    t = catalog.mo(2)
    assert parse_endomap_file(write(tmp_path, "a.json", {"image": [0, 5, 5, 5, 5, 5]}), t).image[1] == 5
    assert parse_endomap_file(write(tmp_path, "b.json", [0, 1, 2, 3, 4, 5]), t).image[3] == 3
    with pytest.raises(MalformedInput):
        parse_endomap_file(write(tmp_path, "c.json", {"image": [0, 1]}), t)
    with pytest.raises(IndexOutOfRange):
        parse_endomap_file(write(tmp_path, "d.json", [0, 1, 2, 3, 4, 6]), t)


def test_serialization_is_canonical(tmp_path):
    for table in (catalog.mo(3), catalog.g12(), catalog.boolean_algebra(3)):
        text = table_to_json(table)
        assert text == table_to_json(table)
        again = build_lattice(parse_lattice_file(write(tmp_path, "t.json", text)))
        assert table_to_json(again).replace(f'"{again.name}"', "") == text.replace(
            f'"{table.name}"', "")
        assert again.same_tables(table)


def test_dumps_sorts_keys():
    assert dumps({"b": 1, "a": 2}).index('"a"') < dumps({"b": 1, "a": 2}).index('"b"')


# --- commands ----------------------------------------------------------------


def test_verify_correspondence_mo2(capsys, mo2_file):
    code, out = cli(capsys, "verify-correspondence", mo2_file)
    report = json.loads(out)
    assert code == 0
    assert report["subalgebra_count"] == report["endomorphism_count"] == 1
    assert report["command"] == "verify-correspondence" and "version" in report
    assert report["lattice"] == "MO2"


def test_validate_hexagon(capsys, o6_file):
    code, out = cli(capsys, "validate", o6_file)
    report = json.loads(out)
    assert code == 1
    assert report["violations"] == [{"axiom_id": "orthomodular", "witnesses": [1, 2]}]


def test_validate_good_file(capsys, mo2_file):
    code, out = cli(capsys, "validate", mo2_file)
    assert code == 0 and json.loads(out)["passed"]


def test_catalog_mo2(capsys):
    code, out = cli(capsys, "catalog", "MO", "2")
    assert code == 0
    data = json.loads(out)
    assert data["name"] == "MO2" and data["n"] == 6
    assert out == table_to_json(catalog.mo(2))


def test_catalog_unknown(capsys):
    code, out = cli(capsys, "catalog", "hexagon")
    assert code == 2 and json.loads(out)["error"]["type"] == "ValueError"


def test_center_and_cover(capsys, tmp_path):
    path = write(tmp_path, "g12.json", table_to_dict(catalog.g12()))
    code, out = cli(capsys, "center", path)
    assert code == 0 and json.loads(out)["center"] == [0, 1, 10, 11]
    code, out = cli(capsys, "cover", path, "(a1,{})")
    assert code == 0 and json.loads(out)["cover"] == 10
    code, out = cli(capsys, "cover", path, "2")
    assert json.loads(out)["cover"] == 10
    code, out = cli(capsys, "cover", path, "99")
    assert code == 2


def test_check_bvb_command(capsys, tmp_path, mo2_file):
    good = write(tmp_path, "e.json", {"image": [0, 5, 5, 5, 5, 5]})
    bad = write(tmp_path, "id.json", {"image": [0, 1, 2, 3, 4, 5]})
    code, out = cli(capsys, "check-bvb", mo2_file, good)
    assert code == 0
    code, out = cli(capsys, "check-bvb", mo2_file, bad)
    assert code == 1
    assert "bvb-3" in [v["axiom_id"] for v in json.loads(out)["violations"]]


def test_enumerations(capsys):
    code, out = cli(capsys, "--seed-catalog", "B3", "enumerate-subalgebras")
    assert code == 0 and json.loads(out)["count"] == 5
    code, out = cli(capsys, "enumerate-bvb", "--seed-catalog", "B3")
    assert code == 0 and json.loads(out)["count"] == 5


def test_seed_catalog_g12_records_substitution(capsys):
    code, out = cli(capsys, "--seed-catalog", "G12", "verify-correspondence")
    assert code == 0
    assert "MO2 x B1" in json.loads(out)["note"]


def test_input_errors_exit_2(capsys, tmp_path, o6_file):
    assert cli(capsys, "center", tmp_path / "missing.json")[0] == 2
    assert cli(capsys, "center", write(tmp_path, "x.json", "{"))[0] == 2
    code, out = cli(capsys, "center", o6_file)
    assert code == 2 and json.loads(out)["error"]["type"] == "NotOrthomodular"
    assert cli(capsys, "center")[0] == 2
    assert cli(capsys, "cover", "--seed-catalog", "MO2")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_size_limit_flag_and_env(capsys, monkeypatch):
    code, out = cli(capsys, "--max-n", "5", "--seed-catalog", "MO2", "enumerate-bvb")
    assert code == 2 and json.loads(out)["error"]["type"] == "SizeLimitExceeded"
    monkeypatch.setenv(ENV_MOORE_MAX_N, "4")
    code, _ = cli(capsys, "--seed-catalog", "MO2", "enumerate-bvb")
    assert code == 2
    code, _ = cli(capsys, "--max-n", "6", "--seed-catalog", "MO2", "enumerate-bvb")
    assert code == 0
    monkeypatch.setenv(ENV_MOORE_MAX_N, "0")
    assert cli(capsys, "--seed-catalog", "MO2", "enumerate-bvb")[0] == 2


def test_text_format(capsys, mo2_file):
    code, out = cli(capsys, "--format", "text", "verify-correspondence", mo2_file)
    assert code == 0
    assert "passed: True" in out


def test_run_command_directly(mo2_file):
    config = CliConfig(command="validate", input_path=mo2_file, size_limits=SizeLimits())
    code, out = run_command(config)
    assert code == 0 and json.loads(out)["passed"]
    with pytest.raises(ValueError):
        CliConfig(command="validate", output_format="yaml")


def test_module_entry_point(mo2_file):
    proc = subprocess.run(
        [sys.executable, "-m", "orthoquantale", "verify-correspondence", str(mo2_file)],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["passed"]
