import json
import shutil
import subprocess
import sys

import pytest

from mvtop.cli import main
from mvtop.errors import InputError
from mvtop.io import (fixtures_dir, frame_from_dict, frame_to_dict, load_json, parse_frame,
                      parse_space, parse_table, resolve, space_from_dict, space_to_dict,
                      table_to_dict)
from mvtop.operators import InteriorOperator, NbhdFunction
from mvtop.spaces import check_axioms

from corpus import FRAMES, SPACES


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return p


# ---- model files -----------------------------------------------------------

def test_fixture_lookup():
    assert resolve("paper3") == resolve("paper3.json") == fixtures_dir() / "paper3.json"
    with pytest.raises(InputError):
        resolve("no-such-model")


@pytest.mark.parametrize("name", SPACES)
def test_space_round_trip(tmp_path, name):
    S = parse_space(name)
    p = write(tmp_path, "s.json", space_to_dict(S))
    T = parse_space(p)
    assert T.carrier == S.carrier and T.chain == S.chain and list(T.opens) == list(S.opens)
    assert T.D.same_values(S.D)


@pytest.mark.parametrize("name", FRAMES)
def test_frame_round_trip(tmp_path, name):
    M = parse_frame(name)
    p = write(tmp_path, "f.json", frame_to_dict(M))
    assert parse_frame(p) == M


@pytest.mark.parametrize("name", ["paper3_interior", "paper3_nbhd"])
def test_table_round_trip(tmp_path, name):
    T = parse_table(name)
    assert isinstance(T, NbhdFunction if name.endswith("nbhd") else InteriorOperator)
    p = write(tmp_path, "t.json", table_to_dict(T))
    assert parse_table(p) == T


def _paper3_data():
    return load_json("paper3")


@pytest.mark.parametrize("patch,match", [
    ({"D": ["1/2", "1"]}, "0"),
    ({"generators": ["x=2/1,y=0,z=0"]}, "2/1"),
    ({"colour": "blue"}, "unknown key"),
    ({"carrier": []}, "empty"),
    ({"generators": ["x=1/2,y=3/5"]}, None),
    ({"generators": ["x=1/3,y=0,z=0"]}, None),
])
def test_bad_space_files(patch, match):
    data = dict(_paper3_data(), **patch)
    with pytest.raises(InputError, match=match):
        space_from_dict(data)


def test_explicit_opens_are_validated():
    data = {"carrier": ["x", "y", "z"], "chain_denominator": 10, "D": "boolean",
            "opens": ["x=0,y=0,z=0", "x=1,y=1,z=1", "x=1/2,y=3/5,z=3/5"]}
    with pytest.raises(InputError, match="topology"):
        space_from_dict(data)
    S = space_from_dict(data, validate=False)
    assert not check_axioms(S).passed
    with pytest.raises(InputError, match="exactly one"):
        space_from_dict(dict(data, generators=[]))


def test_bad_frame_files():
    good = load_json("f3")
    M = frame_from_dict(good)
    assert len(M) == 3
    bad = json.loads(json.dumps(good))
    bad["times"][1][2] = "top"  # m·1 = 1 breaks associativity
    with pytest.raises(InputError, match="times-associative"):
        frame_from_dict(bad)
    bad = json.loads(json.dumps(good))
    bad["join"][0] = ["bot", "m"]
    with pytest.raises(InputError):
        frame_from_dict(bad)
    bad = json.loads(json.dumps(good))
    bad["one"] = "nowhere"
    with pytest.raises(InputError):
        frame_from_dict(bad)


def test_non_total_table_rejected():
    data = load_json("paper3_interior")
    data["table"] = data["table"][:-1]
    from mvtop.io import table_from_dict
    with pytest.raises(InputError, match="missing"):
        table_from_dict(data, "interior", 10**6)


# ---- command line ------------------------------------------------------------

def test_sober_paper3_exit_1(capsys):
    code, out, _ = run(capsys, "sober", "fixtures/paper3.json")
    assert code == 1 and "eta(y) = eta(z)" in out


def test_triangles_paper3_exit_0(capsys):
    code, out, _ = run(capsys, "triangles", "fixtures/paper3.json")
    assert code == 0 and "PASS" in out


def test_spatial_f4_exit_1(capsys):
    code, out, _ = run(capsys, "spatial", "fixtures/f4.json", "--codomain", 10, "--json")
    rep = json.loads(out)
    assert code == 1 and rep["qualifier"] == "over-L10"
    assert (rep["witnesses"][0]["a"], rep["witnesses"][0]["b"]) == ("m", "top")


def test_sober_disc2_qualified(capsys):
    code, out, _ = run(capsys, "sober", "disc2", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and rep["qualifier"] == "over-L2"
    assert set(rep) >= {"command", "passed", "qualifier", "witnesses", "elapsed_ms"}


def test_sober_of_frame_spectrum(capsys):
    assert run(capsys, "sober", "f3")[0] == 0


def test_check_and_generate(capsys, tmp_path):
    code, out, _ = run(capsys, "check", "paper3")
    assert code == 0 and "T0 = False" in out
    out_path = tmp_path / "gen.json"
    code, out, _ = run(capsys, "generate", "--carrier", "x,y,z", "--chain", 10,
                       "--gen", "x=1/2,y=3/5,z=3/5", "--out", out_path)
    assert code == 0 and out.startswith("generate: PASS") and "10 opens" in out
    S = parse_space(out_path)
    assert len(S.opens) == 10


def test_check_failing_space_exit_1(capsys, tmp_path):
    p = write(tmp_path, "bad.json", {"carrier": ["x"], "chain_denominator": 2,
                                     "opens": ["x=0", "x=1/2"]})
    code, out, _ = run(capsys, "check", p)
    assert code == 1 and "top-open" in out


def test_interior_and_nbhd(capsys):
    code, out, _ = run(capsys, "interior", "paper3", "x=1/2,y=7/10,z=7/10")
    assert code == 0 and "= x=1/2,y=3/5,z=3/5" in out
    code, out, _ = run(capsys, "nbhd", "paper3", "x", "x=1/2,y=1,z=1", "--json")
    rep = json.loads(out)
    assert code == 1 and rep["result"]["mu"] == "1/2"
    assert run(capsys, "nbhd", "paper3", "y", "x=3/5,y=1,z=1")[0] == 0


def test_points_and_continuity(capsys):
    code, out, _ = run(capsys, "points", "f3", "--json")
    assert code == 0 and json.loads(out)["result"]["points"] == [{"bot": "0", "m": "1/2", "top": "1"}]
    assert run(capsys, "continuous", "paper3", "paper3", "--map", "y=z,z=y")[0] == 0
    assert run(capsys, "continuous", "paper3", "paper3", "--map", "y=x,z=x")[0] == 1


def test_frame_and_op_check(capsys, tmp_path):
    assert run(capsys, "frame-check", "f4")[0] == 0
    assert run(capsys, "frame-check", "paper3")[0] == 0
    bad = load_json("f3")
    bad["times"][1][2] = "top"
    code, out, _ = run(capsys, "frame-check", write(tmp_path, "f.json", bad))
    assert code == 1 and "times-associative" in out
    assert run(capsys, "op-check", "paper3_interior")[0] == 0
    assert run(capsys, "op-check", "paper3_nbhd")[0] == 0


@pytest.mark.parametrize("patch", [{"D": ["1/2", "1"]}, {"generators": ["x=2/1,y=0,z=0"]},
                                   {"extra": 1}])
def test_input_errors_exit_2(capsys, tmp_path, patch):
    p = write(tmp_path, "bad.json", dict(_paper3_data(), **patch))
    code, _, err = run(capsys, "check", p)
    assert code == 2 and err.startswith("error:")


def test_missing_file_and_limit_exit_2(capsys):
    assert run(capsys, "check", "nowhere.json")[0] == 2
    assert run(capsys, "nbhd", "paper3", "x", "--table", "--limit", 100)[0] == 2


def test_json_reports_are_byte_identical(capsys):
    first = run(capsys, "triangles", "paper3", "--json", "--no-timing")[1]
    second = run(capsys, "triangles", "paper3", "--json", "--no-timing")[1]
    assert first == second
    assert json.loads(first)["elapsed_ms"] == 0


def test_console_script_installed():
    exe = shutil.which("mvtop")
    cmd = [exe] if exe else [sys.executable, "-m", "mvtop.cli"]
    out = subprocess.run(cmd + ["sober", "paper3"], capture_output=True, text=True)
    assert out.returncode == 1 and "eta(y) = eta(z)" in out.stdout
