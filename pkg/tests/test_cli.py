"""CLI surface: golden transcripts, catalogue listing, save/load flow."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from boardforge.catalog import Topic, filter_entries, load_catalog

GOLDEN = Path(__file__).parent / "golden"


def run_cli(args, stdin="", env_extra=None):
    env = dict(os.environ)
    env.pop("BOARDFORGE_SEED", None)
    env.update(env_extra or {})
    return subprocess.run(
        [sys.executable, "-m", "boardforge.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
        env=env,
        timeout=120,
    )


def test_pig_golden_transcript():
    stdin = "roll\nroll\nhold\nroll\nroll\nhold\n"
    args = ["play", "pig", "--agent", "1=hold:20", "--seed", "7"]
    first = run_cli(args, stdin)
    second = run_cli(args, stdin)
    assert first.returncode == 0
    assert first.stdout == second.stdout  # byte-identical across runs
    assert first.stdout == (GOLDEN / "pig_transcript.txt").read_text()


def test_othello_golden_transcript():
    stdin = "c4\nc2\na2\n"
    args = ["play", "othello", "--agent", "1=greedy", "--seed", "5"]
    first = run_cli(args, stdin)
    second = run_cli(args, stdin)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout == (GOLDEN / "othello_transcript.txt").read_text()


def test_env_seed_overrides_flag():
    args = ["play", "pig", "--agent", "1=hold:20", "--seed", "999"]
    stdin = "roll\nhold\n"
    via_env = run_cli(args, stdin, env_extra={"BOARDFORGE_SEED": "7"})
    via_flag = run_cli(["play", "pig", "--agent", "1=hold:20", "--seed", "7"], stdin)
    assert via_env.stdout == via_flag.stdout


def test_list_graphs_topic_rows():
    result = run_cli(["list", "--topic", "Graphs"])
    assert result.returncode == 0
    lines = result.stdout.strip().splitlines()
    assert lines[-1] == "2 game(s)"
    names = [line.split("  ")[0].strip() for line in lines[1:-1]]
    assert names == ["Paletto", "Push Fight"]


@pytest.mark.parametrize(
    "flags,query",
    [
        ((), {}),
        (("--gui", "high"), {"gui_value": "High"}),
        (("--min-rating", "7.0"), {"min_rating": 7.0}),
        (("--category", "Dice", "--max-loc", "50"), {"category": "Dice", "max_loc": 50}),
        (("--players", "4"), {"player_count": 4}),
        (("--topic", "Basics"), {"topic": Topic.BASICS}),
    ],
)
def test_list_row_count_matches_filter_operation(flags, query):
    result = run_cli(["list", *flags])
    assert result.returncode == 0
    lines = result.stdout.strip().splitlines()
    shown = len(lines) - 2  # header + count footer
    expected = len(filter_entries(load_catalog(), **query))
    assert shown == expected
    assert lines[-1] == f"{expected} game(s)"


def test_usage_errors_exit_2():
    assert run_cli(["play", "chess"]).returncode == 2
    assert run_cli(["play", "pig", "--agent", "1=warlock"]).returncode == 2
    assert run_cli(["play", "pig", "--agent", "9=random"]).returncode == 2
    assert run_cli(["play", "nothanks", "--seats", "2"]).returncode == 2
    assert run_cli(["join", "--host", "x", "--port", "1"]).returncode == 2
    bad_flag = run_cli(["list", "--nope"])
    assert bad_flag.returncode == 2


def test_save_and_resume_round_trip(tmp_path):
    save = tmp_path / "game.json"
    run = run_cli(
        ["play", "kalah", "--seed", "3", "--save", str(save)],
        stdin="pit 3\npit 1\n",
    )
    assert run.returncode == 0
    assert "saved to" in run.stdout
    record = json.loads(save.read_text())
    assert record["moves"] == ["pit 3", "pit 1"]
    resumed = run_cli(["play", "kalah", "--load", str(save)], stdin="")
    assert resumed.returncode == 0
    assert "resumed kalah at move 2" in resumed.stdout


def test_load_finished_record_prints_result(tmp_path):
    from boardforge.engine import create_match

    match = create_match("pig", ["P0", "P1"], 17)
    while match.status != "finished":
        seat = match.to_move()
        token = "hold" if match.state.turn_total >= 20 else "roll"
        match.submit(seat, token)
    path = tmp_path / "done.json"
    path.write_text(match.save().to_json())
    result = run_cli(["play", "pig", "--load", str(path)], stdin="")
    assert result.returncode == 0
    assert "result:" in result.stdout
    assert "win" in result.stdout


def test_load_rejects_wrong_game(tmp_path):
    from boardforge.engine import create_match

    path = tmp_path / "record.json"
    path.write_text(create_match("pig", ["A", "B"], 1).save().to_json())
    result = run_cli(["play", "othello", "--load", str(path)], stdin="")
    assert result.returncode == 2


def test_unreadable_record_is_runtime_error(tmp_path):
    result = run_cli(["play", "pig", "--load", str(tmp_path / "missing.json")])
    assert result.returncode == 1


def test_illegal_moves_reprompt_instead_of_crashing():
    stdin = "e4\npass\nd3\n"
    result = run_cli(["play", "othello", "--seed", "5"], stdin=stdin)
    assert result.returncode == 0
    assert result.stdout.count("  !") == 2  # occupied cell, illegal pass
