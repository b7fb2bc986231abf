import json

import pytest

from sak.cli import main
from sak.corpus import seven_vertex_signed
from sak.domino import DominoDecomposition
from sak.io import format_decomposition, format_signed_text
from sak.reductions import gen_complete


@pytest.fixture
def seven_file(tmp_path):
    p = tmp_path / "seven.sg"
    p.write_text(format_signed_text(seven_vertex_signed()))
    return p


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.lstrip().startswith("{") else out)


def test_solve_brute(capsys, seven_file):
    code, rep = run(capsys, "solve", seven_file, "--strategy", "brute")
    assert code == 0 and rep["optimum"] == 4 and rep["schema"] == 1
    assert rep["witness"] == ["v1", "v3", "v4", "v5"]
    assert rep["input"].startswith("sha256:")


def test_solve_auto_small(capsys, tmp_path):
    p = tmp_path / "k5.sg"
    p.write_text(format_signed_text(gen_complete([5], "anti")))
    code, rep = run(capsys, "solve", p)
    assert rep["optimum"] == 1 and rep["strategy"] == "small"


def test_solve_auto_closed(capsys, tmp_path):
    p = tmp_path / "b.sg"
    p.write_text(format_signed_text(gen_complete([3, 2, 1], "balanced")))
    code, rep = run(capsys, "solve", p)
    assert rep["optimum"] == 3 and rep["strategy"] == "closed"


def test_budget_no(capsys, seven_file):
    code, rep = run(capsys, "solve", seven_file, "--budget", "3", "--strategy", "brute")
    assert code == 1 and rep["answer"] == "no"


def test_dp_requires_decomposition(capsys, seven_file):
    assert main(["solve", str(seven_file), "--strategy", "dp"]) == 2


def test_dp_with_decomposition(capsys, seven_file, tmp_path):
    G = seven_vertex_signed()
    d = tmp_path / "seven.td"
    d.write_text(format_decomposition(DominoDecomposition({0: range(5), 1: range(3, 7)}, ((0, 1),), 0), G))
    code, rep = run(capsys, "solve", seven_file, "--strategy", "dp", "--decomposition", d)
    assert code == 0 and rep["optimum"] == 4 and rep["stats"]["width"] == 4


def test_strategies_agree(capsys, seven_file):
    seen = set()
    for s in ("brute", "branch", "ilp", "auto"):
        code, rep = run(capsys, "solve", seven_file, "--strategy", s)
        seen.add(rep["optimum"])
    assert seen == {4}


def test_deterministic_reports(capsys, seven_file):
    a = run(capsys, "solve", seven_file)[1]
    b = run(capsys, "solve", seven_file)[1]
    a.pop("timings"), b.pop("timings")
    assert a == b


def test_verify(capsys, seven_file, tmp_path):
    s = tmp_path / "s"
    s.write_text("v1 v3 v4 v5\n")
    code, rep = run(capsys, "verify", seven_file, s)
    assert code == 0 and rep["accepted"]
    s.write_text("v1 v2 v3\n")
    code, rep = run(capsys, "verify", seven_file, s)
    assert code == 1 and "v4" in {v["vertex"] for v in rep["violations"]}
    s.write_text(" ".join(f"v{i}" for i in range(1, 8)))
    code, rep = run(capsys, "verify", seven_file, s)
    assert code == 0 and rep["boundary"] == [] and "note" in rep
    s.write_text("v9")
    assert main(["verify", str(seven_file), str(s)]) == 3


def test_reduce_hs(capsys, tmp_path):
    src = tmp_path / "h.hs"
    src.write_text("p hs 2 2\ne 1\ne 2\n")
    out = tmp_path / "g.sg"
    assert main(["reduce", "hs", str(src), "-k", "2", "--out", str(out)]) == 0
    side = json.loads((tmp_path / "g.sg.json").read_text())
    assert side["budget"] == 5 and side["witness_accepted"]
    assert sorted(side["witness"]) == ["1", "2", "p", "q", "w"]
    code, rep = run(capsys, "solve", out, "--strategy", "branch", "--budget", "5")
    assert rep["answer"] == "yes" and rep["optimum"] == 5


def test_reduce_vc_and_uoa(capsys, tmp_path):
    src = tmp_path / "k4.ug"
    src.write_text("p ug 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    assert main(["reduce", "vc", str(src), "-k", "3", "--variant", "shared", "--out", str(tmp_path / "vc.sg")]) == 0
    side = json.loads((tmp_path / "vc.sg.json").read_text())
    assert side["n"] == 5 * 4 + 3 * 3 + 1 and side["witness_accepted"]
    assert main(["reduce", "uoa", str(src), "-k", "2", "--out", str(tmp_path / "u.sg")]) == 0
    assert json.loads((tmp_path / "u.sg.json").read_text())["budget"] == 6


def test_gen_and_solve(capsys, tmp_path):
    p = tmp_path / "a.sg"
    assert main(["gen", "complete", "--parts", "3,3", "--mode", "anti", "--out", str(p)]) == 0
    code, rep = run(capsys, "solve", p)
    assert rep["optimum"] == 4
    a = tmp_path / "r1.sg"
    b = tmp_path / "r2.sg"
    main(["gen", "random", "--n", "9", "--seed", "3", "--out", str(a)])
    main(["gen", "random", "--n", "9", "--seed", "3", "--out", str(b)])
    assert a.read_text() == b.read_text()


def test_snd_and_bounds(capsys, tmp_path):
    p = tmp_path / "k4.sg"
    p.write_text(format_signed_text(gen_complete([4], "balanced")))
    code, rep = run(capsys, "check-bounds", p)
    assert rep["existence_precondition"] is False and rep["lower_bound"] == 4
    code, rep = run(capsys, "snd", p)
    assert rep["snd"] == 1 and rep["classes"][0]["kind"] == "P"


def test_usage_and_input_errors(capsys, tmp_path):
    assert main(["solve"]) == 2
    bad = tmp_path / "bad.sg"
    bad.write_text("p sg 2 5 0\n")
    assert main(["solve", str(bad)]) == 3
    assert main(["solve", str(tmp_path / "missing.sg")]) == 3
