"""
Command line tests driving argdial.cli.main in-process
"""

import json
import shutil

import pytest

from argdial.cli import main
from argdial.core.config import LOG_LEVEL_ENV, MAX_DEPTH_ENV, SCHEME_PATH_ENV
from argdial.formats import parse_scheme_dsl, serialize_scheme
from argdial.schemes import BUILTIN_IDS, builtin_schemes, structurally_equal

EMBEDDED_SHIFTS = [
    "shift 1 inquiry persuasion embed",
    "shift 6 persuasion inquiry pop",
    "shift 8 inquiry information-seeking-pedagogical replace",
]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in (SCHEME_PATH_ENV, LOG_LEVEL_ENV, MAX_DEPTH_ENV):
        monkeypatch.delenv(name, raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestUsage:
    """Test argument handling and exit codes"""

    def test_no_command(self, capsys):
        """Test that a bare invocation is a usage error"""
        code, out, err = run(capsys)

        assert code == 2
        assert out == ""
        assert "usage: argdial" in err

    def test_unknown_command(self, capsys):
        """Test that an unknown subcommand is a usage error"""
        code, _, _ = run(capsys, "frobnicate")

        assert code == 2

    def test_help(self, capsys):
        """Test that --help exits cleanly"""
        code, out, _ = run(capsys, "--help")

        assert code == 0
        assert "simulate" in out

    def test_bad_environment(self, capsys, monkeypatch):
        """Test that invalid configuration is a usage error"""
        monkeypatch.setenv(MAX_DEPTH_ENV, "deep")

        code, _, err = run(capsys, "dialogues", "list")

        assert code == 2
        assert "error: Invalid argdial configuration" in err


class TestSchemesCommands:
    """Test schemes list and show"""

    def test_list(self, capsys):
        """Test listing the built-in ids in order"""
        code, out, _ = run(capsys, "schemes", "list")

        assert code == 0
        assert out.splitlines() == list(BUILTIN_IDS)

    def test_list_long(self, capsys):
        """Test the tab-separated long listing"""
        _, out, _ = run(capsys, "schemes", "list", "--long")

        assert out.splitlines()[0] == "defeasible_modus_ponens\tC\tpresumable\tbuiltin\tDefeasible Modus Ponens"

    def test_show_dsl(self, capsys):
        """Test printing a scheme as definition text"""
        code, out, _ = run(capsys, "schemes", "show", "argument_from_sign")

        assert code == 0
        assert out == serialize_scheme(builtin_schemes()[1])

    def test_show_toulmin(self, capsys):
        """Test the Toulmin outline"""
        _, out, _ = run(capsys, "schemes", "show", "defeasible_modus_ponens", "--format", "toulmin")

        lines = out.splitlines()
        assert lines[0] == "data: {P}."
        assert lines[1] == "warrant: As a rule, if {P}, then {Q}."
        assert lines[-1] == "CQ2 (undercut): Is the present case an exception to the rule that if {P}, then {Q}?"

    def test_show_unknown(self, capsys):
        """Test that an unknown id is reported"""
        code, out, err = run(capsys, "schemes", "show", "argument_from_nowhere")

        assert code == 1
        assert out == ""
        assert err.startswith("error: ")

    def test_scheme_path_flag(self, capsys, fixtures_dir, tmp_path):
        """Test adding a scheme directory on the command line"""
        shutil.copy(fixtures_dir / "schemes" / "user.scheme", tmp_path)

        _, out, _ = run(capsys, "--scheme-path", str(tmp_path), "schemes", "list")

        assert out.splitlines()[-1] == "argument_from_expert_opinion"

    def test_scheme_path_environment(self, capsys, fixtures_dir, tmp_path, monkeypatch):
        """Test adding a scheme directory through the environment"""
        shutil.copy(fixtures_dir / "schemes" / "user.scheme", tmp_path)
        monkeypatch.setenv(SCHEME_PATH_ENV, str(tmp_path))

        _, out, _ = run(capsys, "schemes", "list", "--long")

        assert out.splitlines()[-1].startswith("argument_from_expert_opinion\tC\tpresumable\tuser\t")

    def test_scheme_path_diagnostics(self, capsys, fixtures_dir):
        """Test that broken files on the scheme path are reported but not fatal"""
        code, out, err = run(capsys, "--scheme-path", str(fixtures_dir / "schemes"), "schemes", "list")

        assert code == 0
        assert "argument_from_expert_opinion" in out.splitlines()
        assert "condition (iv) failed" in err


class TestValidateCommand:
    """Test scheme file validation"""

    def test_valid_file(self, capsys, fixtures_dir):
        """Test a file with one good scheme"""
        path = fixtures_dir / "schemes" / "user.scheme"

        code, out, _ = run(capsys, "validate", str(path))

        assert code == 0
        assert out == f"{path}: ok (1 scheme(s): argument_from_expert_opinion)\n"

    def test_broken_file(self, capsys, fixtures_dir):
        """Test that diagnostics go to stderr with exit status 1"""
        good = fixtures_dir / "schemes" / "user.scheme"
        broken = fixtures_dir / "schemes" / "broken.scheme"

        code, out, err = run(capsys, "validate", str(good), str(broken))

        assert code == 1
        assert out.splitlines() == [
            f"{good}: ok (1 scheme(s): argument_from_expert_opinion)",
            f"{broken}: 1 diagnostic(s)",
        ]
        assert f"{broken}:1:1: scheme 'no_conclusion': condition (iv) failed" in err

    def test_missing_file(self, capsys, tmp_path):
        """Test that an unreadable file counts as a diagnostic"""
        code, _, err = run(capsys, "validate", str(tmp_path / "absent.scheme"))

        assert code == 1
        assert "cannot read file" in err


class TestInstantiateCommand:
    """Test instantiating schemes from the command line"""

    def test_instantiate(self, capsys):
        """Test a complete binding"""
        code, out, _ = run(
            capsys,
            "instantiate",
            "defeasible_modus_ponens",
            "--bind",
            "P=the lemma holds",
            "--bind",
            "Q=the conjecture holds",
        )

        assert code == 0
        assert "the lemma holds." in out
        assert "the conjecture holds." in out

    def test_incomplete_binding(self, capsys):
        """Test that an unbound variable is an error"""
        code, out, err = run(capsys, "instantiate", "defeasible_modus_ponens", "--bind", "P=the lemma holds")

        assert code == 1
        assert out == ""
        assert "unbound Q" in err

    def test_malformed_binding(self, capsys):
        """Test that a binding without '=' is rejected"""
        code, _, err = run(capsys, "instantiate", "defeasible_modus_ponens", "--bind", "P")

        assert code == 1
        assert "--bind expects KEY=TEXT" in err


class TestEvaluateCommand:
    """Test labelling graph files"""

    def test_report(self, capsys, fixtures_dir):
        """Test labels and verdicts for the sign fixture"""
        code, out, _ = run(capsys, "evaluate", str(fixtures_dir / "sign.arg"), "--report")

        lines = out.splitlines()
        assert code == 0
        assert "# label s1 OUT" in lines
        assert lines[-1] == "verdict s1 OUT presumable open 2"

    def test_machine_format(self, capsys, fixtures_dir):
        """Test the JSON output"""
        code, out, _ = run(capsys, "evaluate", str(fixtures_dir / "sign.arg"), "--format", "machine")

        data = json.loads(out)
        assert code == 0
        assert data["labels"]["s1"] == "OUT"
        assert data["labels"]["s1#cq2"] == "IN"

    def test_partial_graph(self, capsys, tmp_path):
        """Test that bad lines are reported while the rest is still labelled"""
        path = tmp_path / "bad.arg"
        path.write_text("node a\nattack a ghost\n")

        code, out, err = run(capsys, "evaluate", str(path))

        assert code == 1
        assert out == "node a\n# label a IN\n"
        assert f"{path}:2:1: " in err


class TestSimulateCommand:
    """Test replaying dialogue scripts"""

    def test_replay(self, capsys, fixtures_dir):
        """Test the embedded persuasion script"""
        code, out, _ = run(capsys, "simulate", str(fixtures_dir / "embedded_persuasion.dlg"))

        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "dialogue inquiry situation open-problem goal stable-resolution"
        assert "status closed" in lines
        assert "label arg1 IN" in lines
        assert lines[-3:] == EMBEDDED_SHIFTS

    def test_max_turns(self, capsys, fixtures_dir):
        """Test stopping a replay early"""
        code, out, _ = run(capsys, "simulate", str(fixtures_dir / "embedded_persuasion.dlg"), "--max-turns", "3")

        assert code == 0
        assert "status timeout" in out.splitlines()
        assert "turn 3" not in out

    def test_max_turns_must_be_positive(self, capsys, fixtures_dir):
        """Test the usage error for a zero turn limit"""
        code, _, _ = run(capsys, "simulate", str(fixtures_dir / "embedded_persuasion.dlg"), "--max-turns", "0")

        assert code == 2

    def test_violation(self, capsys, tmp_path):
        """Test that an out-of-turn move ends the run with status 1"""
        path = tmp_path / "bad.dlg"
        path.write_text('dialogue persuasion\nP2 assert "it is raining."\n')

        code, out, err = run(capsys, "simulate", str(path))

        assert code == 1
        assert "status violation" in out.splitlines()
        assert "error: RuleViolationError" in err

    def test_script_diagnostics(self, capsys, tmp_path):
        """Test that a script with syntax problems is not run"""
        path = tmp_path / "bad.dlg"
        path.write_text("dialogue persuasion\nP1 argue arg9\n")

        code, out, err = run(capsys, "simulate", str(path))

        assert code == 1
        assert out == ""
        assert "undeclared argument 'arg9'" in err

    def test_compliant_prover(self, capsys, tmp_path):
        """Test the generated proponent against the generated sceptic"""
        path = tmp_path / "prove.dlg"
        path.write_text(
            "dialogue persuasion\n"
            'argument a1 argument_from_sign A="a rash" B="measles"\n'
        )

        code, out, _ = run(
            capsys,
            "simulate",
            str(path),
            "--policy-proponent",
            "compliant-prover",
            "--policy-respondent",
            "exhaustive-sceptic",
        )

        assert code == 0
        assert "label a1 IN" in out.splitlines()

    def test_output_file_and_shift_report(self, capsys, fixtures_dir, tmp_path):
        """Test writing a transcript and reading its shifts back"""
        transcript = tmp_path / "embedded.transcript"
        run(capsys, "simulate", str(fixtures_dir / "embedded_persuasion.dlg"), "--output", str(transcript))

        code, out, _ = run(capsys, "shift-report", str(transcript))

        assert code == 0
        assert out.splitlines() == EMBEDDED_SHIFTS


class TestShiftReportCommand:
    """Test shift reports"""

    def test_from_script(self, capsys, fixtures_dir):
        """Test replaying a script for its shifts"""
        code, out, _ = run(capsys, "shift-report", str(fixtures_dir / "embedded_persuasion.dlg"))

        assert code == 0
        assert out.splitlines() == EMBEDDED_SHIFTS

    def test_bad_transcript(self, capsys, tmp_path):
        """Test that malformed shift lines are reported"""
        path = tmp_path / "t.transcript"
        path.write_text("shift 2 inquiry persuasion embed\nshift x inquiry persuasion embed\n")

        code, out, err = run(capsys, "shift-report", str(path))

        assert code == 1
        assert out == "shift 2 inquiry persuasion embed\n"
        assert f"{path}:2:1: turn must be a number" in err


class TestLocalizeCommand:
    """Test deriving schemes by term replacement"""

    def test_localize_ethotic(self, capsys):
        """Test that the moral scheme localizes to the mathematical one"""
        code, out, err = run(capsys, "localize", "ethotic", "--map", "moral=mathematical", "--as", "ethotic_math")

        document = parse_scheme_dsl(out)
        assert code == 0
        assert err == ""
        assert document.schemes[0].id == "ethotic_math"
        assert structurally_equal(document.schemes[0], builtin_schemes()[5])

    def test_unused_term_warns(self, capsys):
        """Test the warning for a term that does not occur"""
        code, _, err = run(capsys, "localize", "ethotic", "--map", "courage=nerve", "--as", "ethotic_nerve")

        assert code == 0
        assert "warning: term 'courage' does not occur in scheme 'ethotic'; no-op" in err

    def test_taken_id(self, capsys):
        """Test that the new id must be free"""
        code, _, err = run(
            capsys, "localize", "ethotic", "--map", "moral=mathematical", "--as", "ethotic_mathematical"
        )

        assert code == 1
        assert "already registered" in err


class TestDialoguesCommand:
    """Test the dialogue type listing"""

    def test_list(self, capsys):
        """Test one line per dialogue type"""
        code, out, _ = run(capsys, "dialogues", "list")

        lines = out.splitlines()
        assert code == 0
        assert len(lines) == 7
        assert lines[0] == "persuasion\tconflict\tstable-resolution\tResolve difference of opinion"
