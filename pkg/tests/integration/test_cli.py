"""Integration tests for the paraboson command line."""

import json

import pytest

from main import EXIT_FAILURE, EXIT_SUCCESS, EXIT_USAGE, main
from services.fock.weight_space import clear_caches

pytestmark = pytest.mark.integration


class TestEnumerate:
    """Test the enumerate command end to end."""

    def test_json_count(self, capsys):
        """Test n=3, p=2, deg=2 lists nine basis vectors."""
        code = main(["enumerate", "--n", "3", "--p", "2", "--deg", "2", "--format", "json"])
        assert code == EXIT_SUCCESS
        records = json.loads(capsys.readouterr().out)
        assert len(records) == 9
        assert {tuple(r["shape"]) for r in records} == {(2,), (1, 1)}

    def test_degree_zero(self, capsys):
        """Test degree 0 lists the vacuum alone."""
        assert main(["enumerate", "--n", "3", "--p", "2", "--deg", "0", "--format", "json"]) == EXIT_SUCCESS
        records = json.loads(capsys.readouterr().out)
        assert len(records) == 1
        assert records[0]["vector"] == [{"word": [], "coeff": "1/1"}]

    def test_record_fields(self, capsys):
        """Test a single-box record carries gamma, coefficient and norm."""
        assert main(["enumerate", "--n", "2", "--p", "1", "--deg", "1", "--format", "json"]) == EXIT_SUCCESS
        records = json.loads(capsys.readouterr().out)
        first = records[0]
        assert first["tableau"] == [[1]]
        assert first["gamma"] == [[1, 0], [0, 0]]
        assert first["coeff"] == "1/1"
        assert first["norm2"] == "1/1"

    def test_latex(self, capsys):
        """Test the latex format produces a tabular."""
        assert main(["enumerate", "--n", "2", "--p", "2", "--deg", "2", "--format", "latex"]) == EXIT_SUCCESS
        out = capsys.readouterr().out
        assert "\\begin{tabular}" in out
        assert "\\end{tabular}" in out

    def test_csv_header(self, capsys):
        """Test the csv format starts with its header."""
        assert main(["enumerate", "--n", "2", "--p", "2", "--deg", "1", "--format", "csv"]) == EXIT_SUCCESS
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "degree,shape,tableau,gamma,weight,coeff,norm2,vector"
        assert len(lines) == 3

    def test_text_summary(self, capsys):
        """Test the text format ends with the count."""
        assert main(["enumerate", "--n", "2", "--p", "2", "--deg", "2"]) == EXIT_SUCCESS
        assert capsys.readouterr().out.rstrip().endswith("4 basis vectors")

    def test_out_file(self, tmp_path, capsys):
        """Test --out writes to a file instead of stdout."""
        target = tmp_path / "basis.json"
        assert main(["enumerate", "--n", "2", "--p", "2", "--deg", "1", "--format", "json", "--out", str(target)]) == EXIT_SUCCESS
        assert capsys.readouterr().out == ""
        assert len(json.loads(target.read_text())) == 2


class TestVerify:
    """Test the verify command."""

    def test_relations_pass(self, capsys):
        """Test the generator relations for n=2, p=1 up to degree 3."""
        code = main(["verify", "--n", "2", "--p", "1", "--deg", "3", "--suite", "relations"])
        captured = capsys.readouterr()
        assert code == EXIT_SUCCESS
        assert "seed: 0" in captured.err
        assert captured.out.rstrip().endswith("0 failed")

    def test_json_report(self, capsys):
        """Test the json report carries the suite, seed and check records."""
        code = main(["verify", "--n", "2", "--p", "2", "--deg", "2", "--suite", "appendix", "--seed", "7", "--format", "json"])
        assert code == EXIT_SUCCESS
        report = json.loads(capsys.readouterr().out)[0]
        assert report["suite"] == "appendix"
        assert report["seed"] == 7
        assert report["passed"] is True
        assert all(c["status"] in ("PASSED", "SKIPPED") for c in report["checks"])

    def test_deterministic_for_seed(self, capsys):
        """Test identical arguments give identical output."""
        argv = ["verify", "--n", "2", "--p", "2", "--deg", "2", "--suite", "appendix", "--seed", "11", "--format", "csv"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first

    def test_relations_fit_degree_bound(self, reset_settings, caplog, capsys):
        """Test the relation words are lowered so d + 3 stays within PARABOSON_DEGREE_BOUND."""
        reset_settings.setenv("PARABOSON_DEGREE_BOUND", "4")
        clear_caches()
        try:
            assert main(["verify", "--n", "2", "--p", "1", "--deg", "3", "--suite", "relations"]) == EXIT_SUCCESS
            assert "Word degree lowered from 3 to 1" in caplog.text
        finally:
            clear_caches()

    def test_bases_suite(self, capsys):
        """Test the bases suite for n=2, p=2 up to degree 2."""
        assert main(["verify", "--n", "2", "--p", "2", "--deg", "2", "--suite", "bases"]) == EXIT_SUCCESS

    @pytest.mark.slow
    def test_mz_and_gz_suites(self, capsys):
        """Test the mz and gz suites for n=2, p=3 up to degree 3."""
        assert main(["verify", "--n", "2", "--p", "3", "--deg", "3", "--suite", "mz"]) == EXIT_SUCCESS
        assert main(["verify", "--n", "2", "--p", "3", "--deg", "3", "--suite", "gz"]) == EXIT_SUCCESS


class TestTransition:
    """Test the transition command."""

    def test_vanishing_shape(self, capsys):
        """Test l(lambda) > p succeeds with empty output and a message."""
        code = main(["transition", "--n", "3", "--p", "2", "--lambda", "1,1,1"])
        captured = capsys.readouterr()
        assert code == EXIT_SUCCESS
        assert captured.out == ""
        assert "vanishes" in captured.err

    def test_rank_two_blocks(self, capsys):
        """Test lambda = (2,1) for n=2 gives triangular blocks."""
        code = main(["transition", "--n", "2", "--p", "2", "--lambda", "2,1", "--format", "json"])
        assert code == EXIT_SUCCESS
        records = json.loads(capsys.readouterr().out)
        assert [r["weight"] for r in records] == [[2, 1], [1, 2]]
        assert all(r["triangular"] for r in records)

    def test_latex_brackets(self, capsys):
        """Test the latex format includes the bracket form of each v_A."""
        assert main(["transition", "--n", "2", "--p", "2", "--lambda", "1,1", "--format", "latex"]) == EXIT_SUCCESS
        out = capsys.readouterr().out
        assert "\\begin{tabular}" in out
        assert "$v_{A} = " in out


class TestUsageErrors:
    """Test invalid invocations exit with the usage code."""

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["frobnicate", "--n", "2", "--p", "2"],
            ["enumerate", "--p", "2"],
            ["enumerate", "--n", "0", "--p", "2"],
            ["enumerate", "--n", "2", "--p", "0"],
            ["enumerate", "--n", "2", "--p", "2", "--deg", "-1"],
            ["enumerate", "--n", "2", "--p", "2", "--deg", "99"],
            ["enumerate", "--n", "2", "--p", "2", "--format", "xml"],
            ["transition", "--n", "2", "--p", "2"],
            ["transition", "--n", "2", "--p", "2", "--lambda", "1,2"],
            ["transition", "--n", "2", "--p", "2", "--lambda", "1,1,1"],
            ["verify", "--n", "2", "--p", "2", "--suite", "everything"],
        ],
    )
    def test_usage(self, argv, capsys):
        """Test the exit code is 2."""
        assert main(argv) == EXIT_USAGE

    def test_degree_bound_from_environment(self, reset_settings, capsys):
        """Test PARABOSON_DEGREE_BOUND lowers the accepted degree."""
        reset_settings.setenv("PARABOSON_DEGREE_BOUND", "1")
        clear_caches()
        try:
            assert main(["enumerate", "--n", "2", "--p", "2", "--deg", "2"]) == EXIT_USAGE
            assert main(["enumerate", "--n", "2", "--p", "2", "--deg", "1"]) == EXIT_SUCCESS
        finally:
            clear_caches()

    def test_failure_code_is_distinct(self):
        """Test failures and usage errors use different exit codes."""
        assert EXIT_FAILURE not in (EXIT_SUCCESS, EXIT_USAGE)
