"""
End-to-end tests for the command-line driver.
Each test runs `main` the way `python -m app` does and inspects the output,
the exit code and the files written.
"""
import json

import pytest

from app.cli import EXIT_KERNEL, EXIT_OK, EXIT_REJECTED, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.e2e
class TestEvalCommand:
    """Test `eval FILE DEF` and `eval FILE`."""

    def test_numeral_line(self, capsys, corpus_dir):
        """Test the value line of a natural."""
        code, out, _ = run(capsys, "eval", str(corpus_dir / "corpus.ctt"), "two")
        assert code == EXIT_OK
        assert out == "two = suc (suc 0) (2)\n"

    def test_transport_along_ua(self, capsys, corpus_dir):
        """Test that transport along ua of the identity on N gives back 2."""
        code, out, _ = run(capsys, "eval", str(corpus_dir / "corpus.ctt"), "transport_ua_id")
        assert code == EXIT_OK
        assert out.rstrip().endswith("(2)")

    def test_witness_line(self, capsys, corpus_dir):
        """Test the value line of a truncation."""
        code, out, _ = run(capsys, "eval", str(corpus_dir / "truncation.ctt"), "w_squash_left")
        assert code == EXIT_OK
        assert out == "w_squash_left = witness suc 0 (1)\n"

    def test_trace_and_report_files(self, capsys, corpus_dir, tmp_path):
        """Test the JSON lines written by --trace and --report."""
        trace, report = tmp_path / "trace.jsonl", tmp_path / "report.jsonl"
        code, _, _ = run(
            capsys, "eval", str(corpus_dir / "corpus.ctt"), "comp_nat_const",
            "--trace", str(trace), "--report", str(report),
        )
        assert code == EXIT_OK
        steps = [json.loads(line) for line in trace.read_text().splitlines()]
        assert [s["step"] for s in steps] == list(range(1, len(steps) + 1))
        [record] = [json.loads(line) for line in report.read_text().splitlines()]
        assert record["name"] == "comp_nat_const"
        assert record["numeral"] == 2
        assert record["steps"] == len(steps)

    def test_audit(self, capsys, corpus_dir):
        """Test the audit summary line."""
        code, out, _ = run(capsys, "eval", str(corpus_dir / "corpus.ctt"), "s1_loop_i", "--audit", "20", "--seed", "4")
        assert code == EXIT_OK
        assert out.splitlines()[-1] == "audit: 20 samples, seed 4, 0 violations"

    def test_all_definitions(self, capsys, corpus_dir):
        """Test that omitting DEF evaluates every truncation in file order."""
        code, out, _ = run(capsys, "eval", str(corpus_dir / "truncation.ctt"))
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "w_inc = witness suc (suc (suc 0)) (3)"
        assert len(lines) == 11

    def test_mutant_is_rejected(self, capsys, corpus_dir):
        """Test that a rejected definition exits 2."""
        code, _, err = run(capsys, "eval", str(corpus_dir / "mutants.ctt"), "m_comp_start")
        assert code == EXIT_REJECTED
        assert "RestrictionUnsatisfied" in err

    def test_fuel_exhausted(self, capsys, corpus_dir):
        """Test that running out of fuel exits 3 and prints the recent rules."""
        code, _, err = run(capsys, "eval", str(corpus_dir / "corpus.ctt"), "mul_2_3", "--fuel", "5")
        assert code == EXIT_KERNEL
        assert "FuelExhausted" in err
        assert " at /" in err

    def test_zero_fuel_exhausts_immediately(self, capsys, corpus_dir):
        """Test that --fuel 0 is a budget of zero steps, not the default."""
        code, _, err = run(capsys, "eval", str(corpus_dir / "corpus.ctt"), "mul_2_3", "--fuel", "0")
        assert code == EXIT_KERNEL
        assert "mul_2_3: FuelExhausted: fuel exhausted after 0 steps" in err

    def test_zero_fuel_reads_a_numeral(self, capsys, corpus_dir):
        """Test that a literal numeral needs no steps."""
        code, out, _ = run(capsys, "eval", str(corpus_dir / "corpus.ctt"), "two", "--fuel", "0")
        assert code == EXIT_OK
        assert out == "two = suc (suc 0) (2)\n"

    def test_unknown_definition(self, capsys, corpus_dir):
        """Test that an unknown definition exits 1."""
        code, _, err = run(capsys, "eval", str(corpus_dir / "corpus.ctt"), "nope")
        assert code == EXIT_USAGE
        assert "DefinitionNotFound" in err

    def test_missing_file(self, capsys, tmp_path):
        """Test that a missing file exits 1."""
        code, _, err = run(capsys, "eval", str(tmp_path / "absent.ctt"), "two")
        assert code == EXIT_USAGE
        assert "error" in err

    def test_parse_error(self, capsys, tmp_path):
        """Test that a syntax error exits 2 with its position."""
        path = tmp_path / "bad.ctt"
        path.write_text("a : N = suc )\n")
        code, _, err = run(capsys, "eval", str(path), "a")
        assert code == EXIT_REJECTED
        assert "line 1" in err

    def test_output_is_stable(self, capsys, corpus_dir):
        """Test that repeated runs and a larger budget print the same bytes."""
        path = str(corpus_dir / "corpus.ctt")
        _, first, _ = run(capsys, "eval", path, "comp_glue_open")
        _, second, _ = run(capsys, "eval", path, "comp_glue_open")
        _, more_fuel, _ = run(capsys, "eval", path, "comp_glue_open", "--fuel", "1001000")
        assert first == second == more_fuel


@pytest.mark.e2e
class TestCheckCommand:
    """Test `check FILE`."""

    def test_corpus_ok(self, capsys, corpus_dir):
        """Test that the corpus checks."""
        code, out, _ = run(capsys, "check", str(corpus_dir / "corpus.ctt"))
        assert code == EXIT_OK
        assert all(line.endswith(": ok") for line in out.splitlines())

    def test_path01(self, capsys, corpus_dir):
        """Test that no Path N 0 1 candidate is accepted."""
        code, out, _ = run(capsys, "check", str(corpus_dir / "path01.ctt"))
        assert code == EXIT_REJECTED
        assert not any(line.endswith(": ok") for line in out.splitlines())

    def test_face_in_message(self, capsys, corpus_dir):
        """Test that restriction failures name their face."""
        _, out, _ = run(capsys, "check", str(corpus_dir / "mutants.ctt"))
        assert "m_comp_start: RestrictionUnsatisfied on (i=0):" in out


@pytest.mark.e2e
class TestFacesCommand:
    """Test `faces EXPR`."""

    @pytest.mark.parametrize(
        "expression,expected",
        [
            ("forall i. (j=0) \\/ (i=0)", "(j=0)"),
            ("(i=0) /\\ (i=1)", "0F"),
            ("(i=0) <= (i=0) \\/ (j=1)", "true"),
            ("split (i=0) (i=1)", "(i=0) \\/ (i=1): Neither"),
            ("irr (i=0) \\/ (j=1)", "(i=0), (j=1)"),
        ],
    )
    def test_faces(self, capsys, expression, expected):
        """Test the printed normal form or answer."""
        code, out, _ = run(capsys, "faces", expression)
        assert code == EXIT_OK
        assert out == expected + "\n"
