import json
import subprocess
import sys
from pathlib import Path

import pytest

from gitfan.cli import main
from gitfan.fixtures import shipped_fixtures, sl3_flag
from gitfan.geometry import EmbeddingReport, embedding_report
from gitfan.chambers import gitfan
from gitfan.problem_io import dumps, fixture_names, load, loads, problem_to_dict

GOLDEN = Path(__file__).parent / "golden"
FIXTURE_DIR = Path(__file__).parents[1] / "src" / "gitfan" / "data" / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_chambers_sl4(capsys):
    code, out, _ = run(capsys, "chambers", "sl4-example")
    assert code == 0
    assert out.splitlines()[0] == "sl4-example: 9 embeddings"
    assert len(out.splitlines()) == 10


def test_verify_sl4(capsys):
    code, out, _ = run(capsys, "verify", "sl4-example", "--box", "4")
    assert code == 0
    assert out.startswith("PASS: 18 cones matched") and "box 4" in out


def test_verify_small_box_fails(capsys):
    code, _, err = run(capsys, "verify", "sl4-example", "--box", "2")
    assert code == 4 and "ORACLE_MISMATCH" in err


def test_geometry_type1(capsys):
    code, out, _ = run(capsys, "geometry", "sl3-type1-1-1", "--json")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 1
    assert data[0]["picard_index"] == 2 and data[0]["canonical_class"] == [-6]
    code, out, _ = run(capsys, "geometry", "sl3-type1-1-1")
    assert "picard_index: 2" in out and "canonical_class: (-6)" in out


def test_geometry_chi_and_chamber(capsys):
    code, out, _ = run(capsys, "geometry", "sl4-example", "--chi", "3,2,1", "--json")
    assert code == 0
    r = EmbeddingReport.from_dict(json.loads(out)[0])
    code, out2, _ = run(capsys, "geometry", "sl4-example", "--chamber", str(r.chamber_id), "--json")
    assert EmbeddingReport.from_dict(json.loads(out2)[0]).cov_supports == r.cov_supports


def test_geometry_errors(capsys):
    assert run(capsys, "geometry", "sl4-example", "--chi", "2,1,1")[0] == 4
    assert run(capsys, "geometry", "sl4-example", "--chamber", "1")[0] == 4
    assert run(capsys, "geometry", "sl4-example", "--chi", "a,b")[0] == 2


def test_morphisms_golden(capsys):
    code, out, _ = run(capsys, "morphisms", "sl4-example", "--dot")
    assert code == 0
    assert out == (GOLDEN / "sl4_morphisms.dot").read_text()
    code, out, _ = run(capsys, "morphisms", "sl4-example", "--hasse")
    assert out.splitlines()[0] == "9 nodes, 12 edges"


def test_fan_listing(capsys):
    code, out, _ = run(capsys, "fan", "sl4-example")
    assert code == 0 and out.splitlines()[0] == "sl4-example: 18 cones, 4 maximal"
    code, out, _ = run(capsys, "fan", "sl4-example", "--json")
    data = json.loads(out)
    assert len(data["cones"]) == 18 and len(data["interior"]) == 9


def test_subgroup_command(capsys):
    code, out, _ = run(capsys, "subgroup", "sl3-flag", "--json")
    assert code == 0
    vals = {r["query"]: r["value"] for r in json.loads(out)}
    assert vals["kernel [1, 1] observable"] is True
    assert vals["kernel [-1, 0] epimorphic"] is True
    assert vals["kernel [1, 0] observable"] is False


def test_deterministic_output(capsys):
    outs = [run(capsys, "geometry", "sl4-example", "--json")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "fan", str(bad))[0] == 2
    bad.write_text(json.dumps({"schema_version": 1, "rank": 1}))
    assert run(capsys, "fan", str(bad))[0] == 2
    assert run(capsys, "fan", str(tmp_path / "missing.json"))[0] == 2
    data = problem_to_dict(sl3_flag())
    data["schema_version"] = 2
    bad.write_text(json.dumps(data))
    assert run(capsys, "fan", str(bad))[0] == 2


def test_validation_errors(tmp_path, capsys):
    data = {"schema_version": 1, "rank": 2, "weights": [[1, 0], [2, 0]], "supports": {"mode": "all_subsets"}}
    path = tmp_path / "p.json"
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "fan", str(path))
    assert code == 3 and "full-rank" in err
    data = {"schema_version": 1, "rank": 1, "weights": [[1], [2]], "supports": {"mode": "explicit", "sets": [[1]]}}
    path.write_text(json.dumps(data))
    assert run(capsys, "fan", str(path))[0] == 3


def test_big_integers_as_strings():
    big = 2**70
    text = json.dumps(
        {"schema_version": 1, "rank": 1, "weights": [[str(big)], [1]], "supports": {"mode": "all_subsets"}}
    )
    pf = loads(text)
    assert pf.problem.ws.weights[0] == (big,)
    assert json.loads(dumps(pf.problem))["weights"][0] == [str(big)]
    assert loads(dumps(pf.problem)).problem == pf.problem


def test_shipped_fixtures_current():
    shipped = shipped_fixtures()
    assert fixture_names() == sorted(shipped)
    for name, (prob, queries) in shipped.items():
        assert (FIXTURE_DIR / f"{name}.json").read_text() == dumps(prob, queries)
        pf = load(FIXTURE_DIR / f"{name}.json")
        assert pf.problem == prob and list(pf.subgroup_queries) == list(queries)


def test_report_round_trip_through_cli(capsys):
    prob = load("sl4-example").problem
    fan = gitfan(prob)
    _, out, _ = run(capsys, "geometry", "sl4-example", "--json")
    for d in json.loads(out):
        r = EmbeddingReport.from_dict(d)
        assert r == embedding_report(prob, r.chamber_id, fan)


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "gitfan", "chambers", "nilpotent-sl4"], capture_output=True, text=True
    )
    assert res.returncode == 0 and "1 embedding" in res.stdout


def test_bad_command_exit_code(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate", "sl4-example"])
    assert e.value.code == 2
