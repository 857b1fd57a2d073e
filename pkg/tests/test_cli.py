# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from json import loads

import pytest

from msmb.cli import EXIT_FALSE, EXIT_INPUT, EXIT_OK, REGISTER, main
from msmb.core import Report

THREE_FIVE_ELEVEN = ["--matrix", "3 5 11", "--basis", "5 -3 0; 2 1 -1"]


def _run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestCommands:

    def test_check_dim3(self, capsys):
        status, out, _ = _run(capsys, "check-dim3", *THREE_FIVE_ELEVEN)
        assert status == EXIT_OK
        assert out == "NOT distance reducing (c1 < c2+c3 fails: 2 < 2)\n"

    def test_strict(self, capsys):
        status, _, _ = _run(
            capsys, "check-dim3", *THREE_FIVE_ELEVEN, "--strict"
        )
        assert status == EXIT_FALSE

    def test_strict_true_answer(self, capsys):
        status, out, _ = _run(
            capsys, "check-reducing", "--matrix", "2 3 4",
            "--basis", "2 0 -1; 1 -2 1", "--strict"
        )
        assert status == EXIT_OK
        assert out == "distance reducing\n"

    def test_graver_json(self, capsys):
        status, out, _ = _run(
            capsys, "graver", "--matrix", "2 3 4", "--format", "json"
        )
        assert status == EXIT_OK
        report = Report.from_string(out)
        assert report.command == "graver"
        assert len(report.result["moves"]) == 5

    def test_markov_min(self, capsys):
        _, out, _ = _run(capsys, "markov-min", "--matrix", "2 3 4")
        blocks = out.strip().split("\n\n")
        assert blocks[0] == "2 minimal Markov bases"
        assert len(blocks) == 3

    def test_sign_game(self, capsys):
        _, out, _ = _run(capsys, "sign-game", "--signs", "+-0; 0+-")
        assert out == "winnable: (2,3) (1,2)\n"

    def test_connect_with_seed(self, capsys):
        status, out, _ = _run(
            capsys, "connect", "--matrix", "2 3 4",
            "--basis", "2 0 -1; 1 -2 1", "--seed", "3", "--format", "json"
        )
        assert status == EXIT_OK
        result = loads(out)["result"]
        assert result["points"][0] == result["from"]
        assert result["points"][-1] == result["to"]

    def test_connect_needs_both_ends(self, capsys):
        status, _, err = _run(
            capsys, "connect", "--matrix", "2 3 4",
            "--basis", "2 0 -1; 1 -2 1", "--from", "0 4 0"
        )
        assert status == EXIT_INPUT
        assert "--from and --to" in err

    def test_selftest_only(self, capsys):
        status, out, _ = _run(
            capsys, "selftest", "--only", "graver-2-3-4", "sign-game-lost"
        )
        assert status == EXIT_OK
        assert out.splitlines() == [
            "ok   graver-2-3-4: 5 Graver moves",
            "ok   sign-game-lost: not winnable",
        ]

    def test_every_command_is_registered(self):
        assert len(REGISTER) == 21
        assert all(c.help for c in REGISTER.values())


class TestErrors:

    @pytest.mark.parametrize("argv", [
        ["graver", "--matrix", "3 x 5"],
        ["graver", "--matrix", "1 -1"],
        ["graver"],
        ["graver", "--matrix", "2 3 4", "--max-cells", "0"],
        ["verify-markov", "--matrix", "2 3 4", "--basis", "2 0 -1",
         "--bound", "0"],
        ["check-reducing", "--matrix", "2 3 4", "--basis", "1 1 1"],
    ])
    def test_input_errors(self, capsys, argv):
        status, out, err = _run(capsys, *argv)
        assert status == EXIT_INPUT
        assert out == ""
        assert err.startswith("msmb: error: ")

    def test_usage_errors(self, capsys):
        with pytest.raises(SystemExit) as error:
            main(["no-such-command"])
        assert error.value.code == 2
