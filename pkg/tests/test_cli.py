import json

import pytest

from regroot import parse
from regroot.cli import main

from conftest import EXAMPLE_DFA_TEXT

UNARY_AA = """\
states 4
alphabet a
start 1
finals 3
trans a 2 3 4 4
"""

EMPTY_LANG = """\
states 2
alphabet a
start 1
finals
trans a 2 2
"""


@pytest.fixture
def example_path(tmp_path):
    p = tmp_path / "example.dfa"
    p.write_text(EXAMPLE_DFA_TEXT)
    return str(p)


@pytest.fixture
def unary_path(tmp_path):
    p = tmp_path / "aa.dfa"
    p.write_text(UNARY_AA)
    return str(p)


class TestRoot:
    def test_minimized_root_of_example(self, example_path, tmp_path, capsys):
        out = tmp_path / "root.dfa"
        assert main(["root", example_path, "--minimize", "-o", str(out)]) == 0
        assert capsys.readouterr().out == "states=1847\n"
        d = parse(out.read_text())
        assert d.n == 1847

    def test_unminimized_prints_monoid_size(self, example_path, capsys):
        assert main(["root", example_path]) == 0
        assert capsys.readouterr().out == "states=1857\n"

    def test_empty_language(self, tmp_path, capsys):
        p = tmp_path / "empty.dfa"
        p.write_text(EMPTY_LANG)
        out = tmp_path / "out.dfa"
        assert main(["root", str(p), "--minimize", "-o", str(out)]) == 0
        assert capsys.readouterr().out == "states=1\n"
        assert parse(out.read_text()).finals == frozenset()

    def test_missing_file(self, capsys):
        assert main(["root", "/nonexistent/x.dfa"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_parse_error_reports_line(self, tmp_path, capsys):
        p = tmp_path / "bad.dfa"
        p.write_text(EXAMPLE_DFA_TEXT.replace("trans a 2 1 4 5 3", "trans a 2 1 4 5 6"))
        assert main(["root", str(p)]) == 2
        err = capsys.readouterr().err
        assert "line 6" in err and "out of range" in err

    def test_budget_exceeded(self, example_path, capsys):
        assert main(["root", example_path, "--max-elements", "100"]) == 2
        assert "cap" in capsys.readouterr().err


class TestUnaryRootAndMinimize:
    def test_unary_root(self, unary_path, tmp_path, capsys):
        out = tmp_path / "r.dfa"
        assert main(["unary-root", unary_path, "-o", str(out)]) == 0
        assert capsys.readouterr().out == "states=4\n"
        assert parse(out.read_text()).finals == {2, 3}

    def test_unary_root_rejects_two_letters(self, example_path, capsys):
        assert main(["unary-root", example_path]) == 2

    def test_minimize(self, tmp_path, capsys):
        p = tmp_path / "d.dfa"
        p.write_text("states 2\nalphabet a\nstart 1\nfinals 1 2\ntrans a 1 2\n")
        assert main(["minimize", str(p)]) == 0
        assert capsys.readouterr().out == "states=1\n"


class TestMonoid:
    def test_example(self, example_path, capsys):
        assert main(["monoid", example_path]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "size=1857"
        assert "rank 5: 6" in out  # the six powers of the double cycle

    def test_identity_histogram(self, tmp_path, capsys):
        p = tmp_path / "id.dfa"
        p.write_text("states 3\nalphabet a\nstart 1\nfinals\ntrans a 1 2 3\n")
        assert main(["monoid", str(p)]) == 0
        assert capsys.readouterr().out == "size=1\nrank 3: 1\n"

    def test_unary_cycle(self, tmp_path, capsys):
        p = tmp_path / "c5.dfa"
        p.write_text("states 5\nalphabet a\nstart 1\nfinals\ntrans a 2 3 4 5 1\n")
        assert main(["monoid", str(p)]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "size=5"


class TestUkl:
    def test_formula_and_enumeration_agree(self, capsys):
        assert main(["ukl", "-k", "2", "-l", "3", "--enumerate"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out == ["formula=1857", "closure=1857", "AGREE"]

    def test_json_mode(self, capsys):
        assert main(["ukl", "-k", "2", "-l", "3", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"k": 2, "l": 3, "formula": 1857}

    def test_best_split_for_n(self, capsys):
        assert main(["ukl", "-n", "7"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "best k=2 l=5"
        assert out[1] == "formula=610871"
        assert out[2] == "predicted_root_states=610850"

    def test_non_coprime_rejected(self, capsys):
        assert main(["ukl", "-k", "2", "-l", "4"]) == 2

    def test_requires_n_xor_kl(self, capsys):
        assert main(["ukl"]) == 2
        assert main(["ukl", "-k", "2"]) == 2
        assert main(["ukl", "-n", "7", "-k", "2", "-l", "5"]) == 2


class TestScalars:
    def test_stirling(self, capsys):
        assert main(["stirling", "--n", "4", "--k", "2"]) == 0
        assert capsys.readouterr().out == "7\n"

    def test_bound_is_negative_at_seven(self, capsys):
        assert main(["bound", "--n", "7"]) == 0
        assert float(capsys.readouterr().out) < 0

    def test_largest2(self, capsys):
        assert main(["largest2", "--n", "2"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "max=4"

    def test_largest2_budget(self, capsys):
        assert main(["largest2", "--n", "5"]) == 2
        assert "budget" in capsys.readouterr().err


class TestVerify:
    def test_full_tn_small(self, capsys):
        assert main(["verify", "--suite", "full-tn", "--max-n", "3"]) == 0
        out = capsys.readouterr().out
        assert out.count("suite full-tn") == 3
        assert "FAIL" not in out

    def test_json_schema(self, capsys):
        assert main(["verify", "--suite", "lower-bound", "--max-n", "10", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["pass"] is True
        report = payload["reports"][0]
        assert set(report) == {"suite", "params", "cases", "pass"}
        assert report["suite"] == "lower-bound"

    def test_unknown_suite_is_usage_error(self, capsys):
        assert main(["verify", "--suite", "bogus"]) == 2

    def test_over_budget_is_usage_error(self, capsys):
        assert main(["verify", "--suite", "full-tn", "--max-n", "9"]) == 2

    def test_pair_selection(self, capsys):
        assert main(["verify", "--suite", "min-dfa", "-k", "2", "-l", "3"]) == 0
        assert "suite min-dfa" in capsys.readouterr().out

    def test_incomplete_pair(self, capsys):
        assert main(["verify", "--suite", "min-dfa", "-k", "2"]) == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert main(["root", "--help"]) == 0


def test_no_command_is_usage_error(capsys):
    assert main([]) == 2
