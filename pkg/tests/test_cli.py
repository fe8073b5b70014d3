import pytest

from jumpcost import languages
from jumpcost.automata import accepts, parse_automaton, words_upto
from jumpcost.cli import main


@pytest.fixture
def files(tmp_path):
    ab2 = tmp_path / "ab2.aut"
    ab2.write_text(languages.AB_STAR_TEXT)
    asb = tmp_path / "asb.aut"
    asb.write_text(languages.A_STAR_B_STAR_TEXT)
    return {"ab2": str(ab2), "asb": str(asb), "dir": tmp_path}


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out.splitlines(), out.err


class TestCost:
    def test_abs(self, capsys, files):
        assert run(capsys, "cost", "--aut", files["ab2"], "--sem", "abs", "--word", "ababbaab") == (0, ["2"], "")

    def test_max_sequential(self, capsys, files):
        status, out, _ = run(capsys, "cost", "--aut", files["ab2"], "--sem", "max", "--word", "abab")
        assert (status, out) == (0, ["0"])

    def test_both_methods(self, capsys, files):
        status, out, _ = run(capsys, "cost", "--aut", files["ab2"], "--sem", "rev", "--word", "ababbaba", "--method", "both")
        assert (status, out) == (0, ["2", "2"])

    def test_infinite(self, capsys, files):
        status, out, _ = run(capsys, "cost", "--aut", files["ab2"], "--sem", "ham", "--word", "aab", "--method", "oracle")
        assert (status, out) == (0, ["inf"])

    def test_empty_word(self, capsys, files):
        status, out, _ = run(capsys, "cost", "--aut", files["ab2"], "--sem", "abs", "--word", '""')
        assert (status, out) == (0, ["0"])

    def test_oracle_limit(self, capsys, files):
        status, _, err = run(capsys, "cost", "--aut", files["ab2"], "--sem", "abs", "--word", "ab" * 5, "--method", "oracle")
        assert status == 2 and "limit" in err


class TestMember:
    def test_true(self, capsys, files):
        assert run(capsys, "member", "--aut", files["ab2"], "--word", "baba")[:2] == (0, ["true"])

    def test_false(self, capsys, files):
        assert run(capsys, "member", "--aut", files["ab2"], "--word", "aab")[:2] == (1, ["false"])

    def test_empty_word(self, capsys, files):
        assert run(capsys, "member", "--aut", files["ab2"], "--word", '""')[:2] == (0, ["true"])


class TestConstruct:
    def test_rev(self, capsys, files):
        out_file = files["dir"] / "rev2.aut"
        status, out, _ = run(capsys, "construct", "--aut", files["ab2"], "--sem", "rev", "--k", "2", "--out", str(out_file))
        assert status == 0
        written = parse_automaton(out_file.read_text())
        assert written.state_count <= 8
        assert out == [f"states={written.state_count} transitions={len(written.transitions)}"]

    def test_ham_zero_is_sequential(self, capsys, files):
        out_file = files["dir"] / "ham0.aut"
        assert run(capsys, "construct", "--aut", files["ab2"], "--sem", "ham", "--k", "0", "--out", str(out_file))[0] == 0
        written = parse_automaton(out_file.read_text())
        ab2 = languages.ab_star()
        for word in words_upto("ab", 6):
            assert accepts(written, word) == accepts(ab2, word)

    def test_budget(self, capsys, files):
        out_file = files["dir"] / "abs2.aut"
        status, _, _ = run(capsys, "construct", "--aut", files["ab2"], "--sem", "abs", "--k", "2", "--out", str(out_file), "--budget", "1")
        assert status == 2
        assert not out_file.exists()


class TestBounded:
    def test_universal(self, capsys, files):
        assert run(capsys, "bounded", "--aut", files["asb"], "--sem", "rev", "--k", "2", "--universal")[:2] == (0, ["bounded"])

    def test_search(self, capsys, files):
        status, out, _ = run(capsys, "bounded", "--aut", files["ab2"], "--sem", "rev", "--k", "2", "--max-len", "6")
        assert (status, out) == (1, ["unbounded witness=bbaa cost=4"])

    def test_search_without_witness(self, capsys, files):
        status, out, _ = run(capsys, "bounded", "--aut", files["asb"], "--sem", "rev", "--k", "2", "--max-len", "8")
        assert (status, out) == (2, ["unknown up to 8"])

    def test_exact(self, capsys, files):
        status, out, _ = run(capsys, "bounded", "--aut", files["asb"], "--sem", "rev", "--k", "2", "--mode", "exact")
        assert (status, out) == (0, ["bounded"])


class TestReports:
    def test_interplay(self, capsys, files):
        csv_path = files["dir"] / "out" / "report.csv"
        status, out, _ = run(capsys, "interplay", "--aut", files["ab2"], "--max-len", "6", "--out", str(csv_path))
        assert status == 0
        assert out == ["words=29 violations=0"]
        assert csv_path.read_text() == "word,inequality,lhs,rhs\n"
        assert csv_path.with_suffix(".md").exists()

    def test_interplay_too_long(self, capsys, files):
        assert run(capsys, "interplay", "--aut", files["ab2"], "--max-len", "10")[0] == 2

    def test_table2(self, capsys, files):
        out_dir = files["dir"] / "t2"
        status, out, _ = run(capsys, "table2", "--max-len", "6", "--out", str(out_dir))
        assert status == 0
        assert len(out) == 24 and all(line.endswith(" match") for line in out)
        assert (out_dir / "table2.csv").exists() and (out_dir / "table2.md").exists()

    def test_selftest(self, capsys):
        status, out, _ = run(capsys, "selftest", "--count", "3", "--max-len", "3", "--seed", "4")
        assert status == 0
        assert out[-1] == "checks=180 mismatches=0 seed=4"


class TestErrors:
    def test_unknown_symbol(self, capsys, files):
        status, _, err = run(capsys, "member", "--aut", files["ab2"], "--word", "abc")
        assert status == 3 and "alphabet" in err

    def test_missing_file(self, capsys, files):
        assert run(capsys, "member", "--aut", str(files["dir"] / "nope"), "--word", "ab")[0] == 3

    def test_malformed_file(self, capsys, files):
        bad = files["dir"] / "bad.aut"
        bad.write_text("alphabet a\ntrans p a p\n")
        status, _, err = run(capsys, "member", "--aut", str(bad), "--word", "a")
        assert status == 3 and "line 2" in err

    def test_missing_flag(self, capsys, files):
        assert run(capsys, "cost", "--aut", files["ab2"], "--word", "ab")[0] == 3

    @pytest.mark.parametrize(
        "argv",
        [
            ["frobnicate"],
            [],
            ["cost", "--sem", "sum"],
            ["construct", "--k", "-1"],
            ["selftest", "--budget", "0"],
        ],
    )
    def test_usage(self, capsys, argv):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 3
        capsys.readouterr()


def test_output_is_deterministic(capsys, files):
    argv = ["bounded", "--aut", files["ab2"], "--sem", "ham", "--k", "1", "--max-len", "6"]
    assert run(capsys, *argv) == run(capsys, *argv)
