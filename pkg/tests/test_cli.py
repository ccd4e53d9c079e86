import json
import os
import signal
import socket
import subprocess
import sys
import time
import urllib.request

import pytest

from stickywords.cli import main

from conftest import TABLE2_ORIGINALS, TABLE2_REPLACEMENTS, TABLE2_TREATMENTS


@pytest.fixture()
def built_model_path(fixtures_dir, tmp_path):
    out = tmp_path / "model.json"
    code = main(
        [
            "build-model",
            "--context",
            str(fixtures_dir / "context_titles.txt"),
            "--pop",
            str(fixtures_dir / "pop_keywords.tsv"),
            "--out",
            str(out),
        ]
    )
    assert code == 0
    return out


def _resource_args(fixtures_dir, built_model_path):
    return [
        "--model",
        str(built_model_path),
        "--lexicon",
        str(fixtures_dir / "sentiment_lexicon.tsv"),
    ]


def test_build_model_happy_path(built_model_path, capsys):
    document = json.loads(built_model_path.read_text())
    assert document["format_version"] == 1
    assert document["doc_count"] == 12


def test_build_model_missing_file(tmp_path, capsys):
    code = main(
        ["build-model", "--context", "/nope/titles.txt", "--pop", "/nope/pop.tsv", "--out", str(tmp_path / "m.json")]
    )
    assert code == 2
    assert "/nope/titles.txt" in capsys.readouterr().err


def test_build_model_empty_corpus(fixtures_dir, tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    code = main(
        [
            "build-model",
            "--context",
            str(empty),
            "--pop",
            str(fixtures_dir / "pop_keywords.tsv"),
            "--out",
            str(tmp_path / "m.json"),
        ]
    )
    assert code == 3
    assert "EmptyCorpus" in capsys.readouterr().err


def test_build_model_invalid_pop_line(fixtures_dir, tmp_path, capsys):
    bad = tmp_path / "pop.tsv"
    bad.write_text("death\tNaN-ish\n")
    code = main(
        [
            "build-model",
            "--context",
            str(fixtures_dir / "context_titles.txt"),
            "--pop",
            str(bad),
            "--out",
            str(tmp_path / "m.json"),
        ]
    )
    assert code == 3


def test_analyze_table(fixtures_dir, built_model_path, capsys):
    code = main(["analyze", "End of the library"] + _resource_args(fixtures_dir, built_model_path))
    assert code == 0
    out = capsys.readouterr().out
    assert "end" in out and "library" in out
    assert "title_score" in out


def test_analyze_empty_text(fixtures_dir, built_model_path, capsys):
    code = main(["analyze", ""] + _resource_args(fixtures_dir, built_model_path))
    assert code == 0
    assert "title_score: 0.0000" in capsys.readouterr().out


def test_analyze_json_equivalence(fixtures_dir, built_model_path, capsys):
    code = main(
        ["analyze", "End of the library", "--format", "json"]
        + _resource_args(fixtures_dir, built_model_path)
    )
    assert code == 0
    body = json.loads(capsys.readouterr().out)
    assert [w["word"] for w in body["words"]] == ["end", "library"]
    assert body["title_score"] == max(w["composite"] for w in body["words"])


def test_analyze_env_var_resources(fixtures_dir, built_model_path, capsys, monkeypatch):
    monkeypatch.setenv("STICKY_MODEL", str(built_model_path))
    monkeypatch.setenv("STICKY_LEXICON", str(fixtures_dir / "sentiment_lexicon.tsv"))
    assert main(["analyze", "death of the library"]) == 0
    assert "death" in capsys.readouterr().out


def test_analyze_missing_model(fixtures_dir, capsys):
    code = main(
        ["analyze", "x", "--model", "/nope/model.json", "--lexicon", str(fixtures_dir / "sentiment_lexicon.tsv")]
    )
    assert code == 2
    assert "/nope/model.json" in capsys.readouterr().err


def _optimize_args(fixtures_dir, built_model_path, fmt="jsonl"):
    return [
        "optimize",
        "--titles",
        str(fixtures_dir / "table2_titles.txt"),
        "--thesaurus",
        str(fixtures_dir / "thesaurus.tsv"),
        "--format",
        fmt,
    ] + _resource_args(fixtures_dir, built_model_path)


def test_optimize_emits_table2_substitutions(fixtures_dir, built_model_path, capsys):
    code = main(_optimize_args(fixtures_dir, built_model_path))
    assert code == 0
    records = [json.loads(line) for line in capsys.readouterr().out.strip().split("\n")]
    top_per_title = {}
    for record in records:
        top_per_title.setdefault(record["title_id"], record)
    assert [(r["original"], r["replacement"]) for r in top_per_title.values()] == TABLE2_REPLACEMENTS
    assert [r["treatment_title"] for r in top_per_title.values()] == TABLE2_TREATMENTS
    assert all(r["status"] == "pending" for r in records)


def test_optimize_deterministic_output(fixtures_dir, built_model_path, tmp_path):
    out1 = tmp_path / "a.jsonl"
    out2 = tmp_path / "b.jsonl"
    assert main(_optimize_args(fixtures_dir, built_model_path) + ["--out", str(out1)]) == 0
    assert main(_optimize_args(fixtures_dir, built_model_path) + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_optimize_title_without_candidates(fixtures_dir, built_model_path, tmp_path, capsys):
    titles = tmp_path / "titles.txt"
    titles.write_text("A study of nothing remarkable\n")
    code = main(
        [
            "optimize",
            "--titles",
            str(titles),
            "--thesaurus",
            str(fixtures_dir / "thesaurus.tsv"),
            "--format",
            "jsonl",
        ]
        + _resource_args(fixtures_dir, built_model_path)
    )
    assert code == 0
    assert capsys.readouterr().out.strip() == ""


def test_stats_table_output(fixtures_dir, capsys):
    code = main(["stats", "--responses", str(fixtures_dir / "pilot_responses.csv")])
    assert code == 0
    out = capsys.readouterr().out
    assert "Selection statistics" in out
    assert "equal variances not assumed" in out


def test_stats_json_matches_acceptance_numbers(fixtures_dir, capsys):
    code = main(["stats", "--responses", str(fixtures_dir / "pilot_responses.csv"), "--format", "json"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    selection = report["selection"]
    assert selection["groups"]["original"]["n"] == 87
    assert abs(selection["equal_variances_assumed"]["t"]) == pytest.approx(4.423, abs=0.01)
    assert selection["levene"]["F"] == pytest.approx(40.555, abs=0.1)


def test_stats_missing_variant(tmp_path, capsys):
    log = tmp_path / "log.csv"
    log.write_text("response_id,variant,selected,item_1\nr1,original,1,3\nr2,original,0,2\n")
    code = main(["stats", "--responses", str(log)])
    assert code == 4
    assert "MissingVariant" in capsys.readouterr().err


def test_stats_header_only(tmp_path, capsys):
    log = tmp_path / "log.csv"
    log.write_text("response_id,variant,selected,item_1\n")
    code = main(["stats", "--responses", str(log)])
    assert code == 4
    err = capsys.readouterr().err
    assert "MissingVariant" in err or "TooFewObservations" in err


def test_stats_malformed_row_names_line(tmp_path, capsys):
    log = tmp_path / "log.csv"
    log.write_text(
        "response_id,variant,selected,item_1\n"
        "r1,original,1,3\n"
        "r2,treatment,definitely,3\n"
    )
    code = main(["stats", "--responses", str(log)])
    assert code == 4
    assert "line 3" in capsys.readouterr().err


def _serve_args(fixtures_dir, built_model_path, tmp_path, port):
    return [
        sys.executable,
        "-m",
        "stickywords.cli",
        "serve",
        "--model",
        str(built_model_path),
        "--lexicon",
        str(fixtures_dir / "sentiment_lexicon.tsv"),
        "--thesaurus",
        str(fixtures_dir / "thesaurus.tsv"),
        "--data-dir",
        str(tmp_path / "data"),
        "--port",
        str(port),
    ]


def _free_port():
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


def test_serve_liveness_and_clean_shutdown(fixtures_dir, built_model_path, tmp_path):
    port = _free_port()
    process = subprocess.Popen(
        _serve_args(fixtures_dir, built_model_path, tmp_path, port),
        stdout=subprocess.PIPE,
        stderr=subprocess.STDOUT,
    )
    try:
        deadline = time.time() + 30
        body = None
        while time.time() < deadline:
            try:
                with urllib.request.urlopen(
                    f"http://127.0.0.1:{port}/api/score?text=death", timeout=2
                ) as response:
                    assert response.status == 200
                    body = json.loads(response.read())
                    break
            except OSError:
                time.sleep(0.2)
        assert body is not None, "service never came up"
        assert body["words"][0]["word"] == "death"
    finally:
        process.send_signal(signal.SIGINT)
        code = process.wait(timeout=15)
    # uvicorn drains connections, then re-raises the captured SIGINT so the
    # process reports the conventional interrupted status
    assert code in (0, -signal.SIGINT)


def test_serve_bad_model_exits_2(fixtures_dir, tmp_path):
    process = subprocess.run(
        [
            sys.executable,
            "-m",
            "stickywords.cli",
            "serve",
            "--model",
            "/nope/model.json",
            "--lexicon",
            str(fixtures_dir / "sentiment_lexicon.tsv"),
            "--thesaurus",
            str(fixtures_dir / "thesaurus.tsv"),
            "--data-dir",
            str(tmp_path / "data"),
        ],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert process.returncode == 2
    assert "/nope/model.json" in process.stderr


def test_serve_port_in_use_exits_5(fixtures_dir, built_model_path, tmp_path):
    blocker = socket.socket()
    blocker.bind(("127.0.0.1", 0))
    blocker.listen(1)
    port = blocker.getsockname()[1]
    try:
        process = subprocess.run(
            _serve_args(fixtures_dir, built_model_path, tmp_path, port),
            capture_output=True,
            text=True,
            timeout=60,
        )
    finally:
        blocker.close()
    assert process.returncode == 5
    assert str(port) in process.stderr
