import io
import json
import subprocess
import sys

import pytest

from takahasi import clifford, groups, rees
from takahasi.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, "--json", *argv)
    assert code == 0
    return json.loads(out)


def test_stallings_rank_and_member(capsys):
    d = run_json(capsys, "stallings", "rank", "ab, ab'", "--rank", "2")
    assert d["rank"] == 2 and d["vertices"] == 2
    code, out = run(capsys, "stallings", "member", "ab, ba", "abba", "--rank", "2")
    assert code == 0 and out.strip() == "true"


def test_stallings_pipeline_from_stdin(capsys, monkeypatch):
    aut = {"alphabet": ["a", "b"], "vertices": 3, "base": 0, "terminals": [0],
           "edges": [[0, "a", 1], [1, "b", 0], [0, "a", 2], [2, "b'", 0]]}
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(aut)))
    d = run_json(capsys, "stallings", "pipeline", "-")
    assert d["rank"] == 2
    assert d["rank"] <= d["ragr_bound"]
    assert set(d["stages"]) == {"a1", "a2", "a3", "a4"}


def test_numeric(capsys):
    d = run_json(capsys, "numeric", "profile", "3,5")
    assert (d["d"], d["p"]) == (1, 8)
    assert d["minimal_generators"] == [3, 5]
    code, out = run(capsys, "numeric", "member", "3,5", "7")
    assert out.strip() == "false"


def test_rees(capsys):
    base = ["--group", "C2", "--I", "1", "--Lambda", "1", "--P", "0", "--gens", "0,1,0"]
    d = run_json(capsys, "rees", "closure", *base)
    assert d["size"] == 2
    d = run_json(capsys, "rees", "bound", *base, "--i", "0", "--lam", "0")
    assert (d["rk_cs"], d["rk_component"], d["bound_holds"]) == (1, 1, True)


def test_rees_structure_file_and_endo(capsys, tmp_path):
    S = rees.ReesStructure(groups.cyclic(3), 1, 1, [[0]])
    path = tmp_path / "s.json"
    path.write_text(S.to_json())
    code, out = run(capsys, "--json", "rees", "per", "--structure", str(path),
                    "--images-from", "0,1,0", "--images", "0,2,0")
    assert code == 0
    d = json.loads(out)
    assert d["R"] == 2


def test_clifford(capsys, tmp_path):
    S = clifford.chain([groups.cyclic(2), groups.cyclic(2)], [(0, 1)])
    path = tmp_path / "s.json"
    path.write_text(S.to_json())
    d = run_json(capsys, "clifford", "green-index", "--structure", str(path), "--gens", "1,1")
    assert (d["green_index"], d["index"]) == (2, 2)
    code, out = run(capsys, "clifford", "index", "--structure", str(path), "--gens", "1,1")
    assert code == 0 and "[S:T] = 2" in out


def test_monoid(capsys):
    d = run_json(capsys, "monoid", "canon", "monoid a b c ; cac = cbc", "cbc")
    assert d["canonical"] == "cac"
    d = run_json(capsys, "monoid", "equal", "monoid a b c ; cac = cbc", "cacac", "cbcbc")
    assert d["equal"] is True
    d = run_json(capsys, "monoid", "fix", "monoid a b ; ab = ba", "a -> b ; b -> a", "--max-length", "6")
    assert d["fixed"] == ["ab", "aabb", "aaabbb"] and d["indecomposables"] == ["ab"]


def test_experiment_json(capsys):
    d = run_json(capsys, "experiment", "exth", "--n-max", "3")
    assert d["passed"] and d["name"] == "exth"


def test_errors_exit_with_usage_code(capsys):
    with pytest.raises(SystemExit) as err:
        main(["experiment", "nope"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["numeric", "member", "3,5"])
    assert err.value.code == 2
    code, _ = run(capsys, "monoid", "fix", "monoid a b c ; cac = cbc", "a -> a ; b -> c ; c -> c")
    assert code == 2


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "takahasi", "--json", "numeric", "profile", "3,5"],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)["p"] == 8
