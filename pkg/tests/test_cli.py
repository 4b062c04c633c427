import json
from fractions import Fraction

import pytest

from qloop.cli import main
from qloop.dpoly import qstring
from qloop.parser import ParseError, parse_dpoly, parse_module, parse_scalar
from qloop.repcore.io import load_module


class TestParser:
    def test_scalars(self):
        assert parse_scalar("-5/2") == Fraction(-5, 2)
        assert parse_scalar("q^6", 2) == 64
        assert parse_scalar("3*q^-1", 3) == 1

    def test_dpoly(self):
        assert parse_dpoly("str(2,1)*root(3,2)", 2) == qstring(2, 1, 2) * parse_dpoly("root(3,2)")
        assert parse_dpoly("str(2,q^6)", 2) == qstring(2, 64, 2)

    def test_modules(self):
        assert parse_module("eval(1,1)").dim == 2
        assert parse_module("tensor(eval(1,1),eval(1,4))").dim == 4
        assert parse_module("eself(eval(2,1))").dim == 6
        assert parse_module("dual(eval(2,3))").weights == (-2, 0, 2)
        assert parse_module("weyl(str(1,1)*str(1,4))").dim == 4

    @pytest.mark.parametrize("text,pos", [("eval(1,", 7), ("tensr(eval(1,1))", 0), ("eval(1,1))", 9),
                                          ("eval(1,1/0)", 7)])
    def test_errors_carry_position(self, text, pos):
        with pytest.raises(ParseError) as err:
            parse_module(text)
        assert err.value.pos == pos


class TestCommands:
    def test_build_and_report(self, tmp_path, capsys):
        path = tmp_path / "t.json"
        assert main(["build", "tensor(eval(1,1),eval(1,4))", "--out", str(path)]) == 0
        assert "dim=4" in capsys.readouterr().out
        assert load_module(path).dim == 4
        assert main(["report", str(path), "simple"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["simple"] is False and out["certificate"] == ["1", "0", "0", "0"]

    def test_report_hw_and_drinfeld(self, tmp_path, capsys):
        path = tmp_path / "e.json"
        main(["build", "eval(2,1)", "--out", str(path)])
        capsys.readouterr()
        main(["report", str(path), "hw"])
        assert capsys.readouterr().out.count("weight") == 1
        main(["report", str(path), "drinfeld", "--window", "3"])
        data = json.loads(capsys.readouterr().out)
        assert data["x-"]["1"][1][0] == "4"  # (a q^{-m+2j})^r [m-j+1] at j=2, r=1

    def test_build_is_deterministic(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        main(["build", "eself(eval(2,1))", "--out", str(a)])
        main(["build", "eself(eval(2,1))", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_ext1_and_eself(self, tmp_path, capsys):
        src, twisted, cocycles = tmp_path / "v.json", tmp_path / "e.json", tmp_path / "c.json"
        main(["build", "eval(1,1)", "--out", str(src)])
        assert main(["ext1", str(src), "--cocycles", str(cocycles)]) == 0
        assert "dim Ext1 = 1" in capsys.readouterr().out
        assert len(json.loads(cocycles.read_text())) == 1
        assert main(["eself", str(src), "--out", str(twisted)]) == 0
        assert load_module(twisted).dim == 4
        assert main(["ext1", str(src), str(twisted)]) == 0

    def test_weyl_and_ideal(self, capsys):
        assert main(["weyl", "--pi", "str(1,1)*str(1,1)"]) == 0
        assert json.loads(capsys.readouterr().out)["dim"] == 4
        assert main(["ideal-I", "--m", "1", "--a", "1"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["codimension"] == 2 and out["membership"] and out["non_split"]
        assert out["matrices"]["L1"] == [["0", "-4"], ["1", "-4"]]

    def test_verify_exit_codes(self, capsys):
        assert main(["verify", "--suite", "walkprop"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["passed"] and {"name", "expected", "computed", "pass"} <= set(report["checks"][0])

    def test_q_from_environment(self, monkeypatch, capsys):
        monkeypatch.setenv("QLOOP_Q", "3")
        main(["build", "eval(1,1)"])
        assert json.loads(capsys.readouterr().out)["q"] == "3"
        main(["--q", "5", "build", "eval(1,1)"])
        assert json.loads(capsys.readouterr().out)["q"] == "5"

    def test_usage_errors(self, capsys):
        assert main(["build", "eval(1,"]) == 2
        assert "position 7" in capsys.readouterr().err
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "nope"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["--q", "1", "build", "eval(1,1)"])
        assert exc.value.code == 2
        assert main(["report", "/nonexistent.json", "hw"]) == 2
