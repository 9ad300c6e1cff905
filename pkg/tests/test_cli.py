import json
import xml.etree.ElementTree as ET

import pytest

from lcores import cli, verify
from lcores.affine import RootVector, Word
from lcores.partition import parse_partition


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEnumerate:
    def test_examples(self, capsys):
        assert run(capsys, "enumerate", "--ell", "3", "--k", "2")[:2] == (0, "2\n2,1,1\n2,2,1,1\n")
        assert run(capsys, "enumerate", "--ell", "4", "--k", "0")[1] == "-\n"
        assert run(capsys, "enumerate", "--ell", "4", "--k", "8", "--count")[1] == "45\n"

    def test_at_most(self, capsys):
        _, out, _ = run(capsys, "enumerate", "--ell", "3", "--k", "1", "--at-most")
        assert [parse_partition(line) for line in out.split()] == [(), (1,), (1, 1)]

    def test_bad_k(self, capsys):
        code, out, err = run(capsys, "enumerate", "--ell", "3", "--k", "-1")
        assert code == 2 and out == "" and err.startswith("error:")


class TestMap:
    @pytest.mark.parametrize(
        "argv,expected",
        [
            (["map", "phi", "--ell", "4", "8,5,2,2,1,1,1"], "2,1,1"),
            (["map", "pi-inv", "--ell", "4", "5,2,1,1,1"], "(2,0,0,-2)"),
            (["map", "s", "--i", "2", "--ell", "4", "5,2,1,1,1"], "5,2,1,1,1"),
            (["map", "phi-inv", "--ell", "4", "--k", "8", "2,1,1"], "8,5,2,2,1,1,1"),
            (["map", "phi-rows", "--ell", "4", "8,5,2,2,1,1,1"], "2,1,1"),
            (["map", "phi-tilde", "--ell", "5", "6,4,3,3,2,1,1"], "3,2,1,1,1"),
            (["map", "rho", "--ell", "5", "6,4,3,3,2,1,1"], "3,2,2,2,2,1,1"),
            (["map", "upsilon", "3,2,2,2,2,1,1"], "2,1,1,1,1"),
            (["map", "pi", "(2,0,0,-2)"], "5,2,1,1,1"),
            (["map", "n-vector", "--ell", "4", "6,3,1,1"], "(-1,2,0,-1)"),
            (["map", "s-vector", "--i", "0", "(0,0,0)"], "(1,0,-1)"),
            (["map", "phi", "--ell", "3", "-"], "-"),
        ],
    )
    def test_examples(self, capsys, argv, expected):
        code, out, _ = run(capsys, *argv)
        assert code == 0 and out == expected + "\n"

    def test_outputs_parse_back(self, capsys):
        _, out, _ = run(capsys, "map", "pi-inv", "--ell", "4", "7,4,3,2,1,1,1")
        v = RootVector.parse(out)
        _, out, _ = run(capsys, "map", "pi", str(v))
        assert parse_partition(out) == (7, 4, 3, 2, 1, 1, 1)

    @pytest.mark.parametrize(
        "argv",
        [
            ["map", "phi", "--ell", "3", "2,1"],
            ["map", "phi", "--ell", "3", "1,x"],
            ["map", "phi", "8,5,2,2,1,1,1"],
            ["map", "pi", "(1,1)"],
            ["map", "s", "--ell", "4", "5,2,1,1,1"],
            ["map", "phi-inv", "--ell", "4", "--k", "1", "2,1,1"],
        ],
    )
    def test_domain_errors(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert code == 2 and out == ""
        assert err.startswith("error:") and err.count("\n") == 1

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["map", "nonsense", "1"])
        assert exc.value.code == 2

    def test_abacus(self, capsys):
        _, out, _ = run(capsys, "map", "abacus", "--ell", "4", "5,2,1,1,1")
        assert "(8)" in out and "(9)" not in out


class TestWord:
    def test_examples(self, capsys):
        assert run(capsys, "word", "--ell", "4", "5,2,1,1,1")[1] == "s0 s1 s2 s3 s2 s1 s0 (length 7)\n"
        assert run(capsys, "word", "--ell", "4", "-")[1] == "(length 0)\n"

    def test_subexpr(self, capsys):
        _, out, _ = run(capsys, "word", "--ell", "5", "--subexpr", "9,5,3,2,2,1,1,1,1")
        marked, kept, image = out.splitlines()
        assert marked.startswith("[s2] s3 [s4] [s0] [s1] s2 [s4] [s3] s1")
        assert kept == "kept: 1,3,4,5,7,8"
        assert image == "image: s0 s1 s2 s3 s1 s0 (length 6)"
        assert Word.parse(image[len("image: "):image.index("(")], 4) == Word((0, 1, 2, 3, 1, 0), 4)


class TestRender:
    def test_residues(self, capsys):
        _, out, _ = run(capsys, "render", "--ell", "4", "--annotate", "residues", "5,2,1,1,1")
        assert [line.split() for line in out.splitlines()] == [
            ["0", "1", "2", "3", "0"], ["3", "0"], ["2"], ["1"], ["0"],
        ]

    def test_skew(self, capsys):
        _, out, _ = run(capsys, "render", "--ell", "5", "--annotate", "skew", "6,4,3,3,2,1,1")
        counts = [sum(c.startswith("*") for c in line.split()) for line in out.splitlines()]
        assert counts == [3, 2, 2, 2, 2, 1, 1]

    def test_hooks_and_regions(self, capsys):
        _, out, _ = run(capsys, "render", "--ell", "4", "--annotate", "hooks", "3,1")
        assert [line.split() for line in out.splitlines()] == [["4", "2", "1"], ["1"]]
        _, out, _ = run(capsys, "render", "--ell", "4", "--annotate", "regions", "6,3,1,1")
        assert out.splitlines()[0].split() == ["1", "1", "1", "1", "2", "2"]

    def test_empty(self, capsys):
        assert run(capsys, "render", "--ell", "3", "-") == (0, "", "")

    def test_non_core_is_fine_for_residues(self, capsys):
        assert run(capsys, "render", "--ell", "3", "2,1")[0] == 0


class TestAlcoves:
    def test_stdout(self, capsys):
        code, out, _ = run(capsys, "alcoves", "--k", "6", "--radius", "2")
        assert code == 0
        assert ET.fromstring(out.encode()).tag.endswith("svg")

    def test_file(self, capsys, tmp_path):
        target = tmp_path / "fig.svg"
        code, out, _ = run(capsys, "alcoves", "--k", "6", "--radius", "3", "-o", str(target))
        assert code == 0 and out == ""
        ET.parse(target)

    def test_bad_radius(self, capsys):
        assert run(capsys, "alcoves", "--k", "6", "--radius", "0")[0] == 2


class TestVerify:
    def test_counting(self, capsys):
        assert run(capsys, "verify", "counting", "--ell-max", "6", "--k-max", "10")[:2] == (0, "OK (55 cases)\n")

    def test_theorem_main(self, capsys):
        code, out, _ = run(capsys, "verify", "theorem-main", "--ell", "3", "--coord-box", "3")
        assert code == 0 and out.startswith("OK")

    def test_lengths(self, capsys):
        code, out, _ = run(capsys, "verify", "lengths", "--ell", "3", "--max-boxes", "14")
        assert code == 0 and out.startswith("OK") and "BFS oracle" in out

    @pytest.mark.parametrize("suite", ["roundtrip", "equivariance", "commute"])
    def test_other_suites_small(self, capsys, suite):
        argv = ["verify", suite, "--ell", "3", "--coord-box", "2", "--max-size", "15", "--k-max", "4"]
        code, out, _ = run(capsys, *argv)
        assert code == 0 and out.startswith("OK")

    def test_failure_exit_code(self, capsys, monkeypatch):
        def broken(**kwargs):
            return verify.Report("counting", cases=3, failure="ell=3 k=2: counted 2, binomial gives 3")

        monkeypatch.setitem(verify.SUITES, "counting", broken)
        code, out, _ = run(capsys, "verify", "counting")
        assert code == 1 and out.startswith("FAIL counting: ell=3 k=2")


class TestJson:
    @pytest.mark.parametrize("position", ["before", "after"])
    def test_record(self, capsys, position):
        argv = ["map", "phi", "--ell", "4", "8,5,2,2,1,1,1"]
        argv = ["--json"] + argv if position == "before" else argv + ["--json"]
        _, out, _ = run(capsys, *argv)
        record = json.loads(out)
        assert record == {"op": "phi", "input": {"arg": "8,5,2,2,1,1,1", "ell": 4}, "output": "2,1,1"}

    def test_one_record_per_line(self, capsys):
        _, out, _ = run(capsys, "--json", "enumerate", "--ell", "3", "--k", "2")
        records = [json.loads(line) for line in out.splitlines()]
        assert [r["output"] for r in records] == ["2", "2,1,1", "2,2,1,1"]
        assert all(set(r) == {"op", "input", "output"} for r in records)

    def test_verify_record(self, capsys):
        _, out, _ = run(capsys, "--json", "verify", "counting", "--ell-max", "3", "--k-max", "2")
        assert json.loads(out)["output"] == {"ok": True, "cases": 6, "failure": None}
