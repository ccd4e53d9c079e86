import pytest

from stickywords.journal import DecisionJournal, DecisionRecord, utc_timestamp


def test_append_and_replay_round_trip(tmp_path):
    journal = DecisionJournal(tmp_path / "journal.tsv")
    first = journal.append("s1", "c1", "accepted")
    second = journal.append("s1", "c2", "rejected")
    assert journal.replay() == [first, second]


def test_record_line_format(tmp_path):
    path = tmp_path / "journal.tsv"
    journal = DecisionJournal(path)
    record = journal.append("s1", "c1", "accepted", timestamp="2026-08-10T12:00:00.000000Z")
    assert path.read_text() == "s1\tc1\taccepted\t2026-08-10T12:00:00.000000Z\n"
    assert record == DecisionRecord("s1", "c1", "accepted", "2026-08-10T12:00:00.000000Z")


def test_replay_missing_file(tmp_path):
    journal = DecisionJournal(tmp_path / "absent.tsv")
    assert journal.replay() == []


def test_replay_drops_torn_final_line(tmp_path):
    path = tmp_path / "journal.tsv"
    journal = DecisionJournal(path)
    journal.append("s1", "c1", "accepted")
    journal.append("s1", "c2", "rejected")
    content = path.read_bytes()
    # simulate a crash mid-append: cut the second record in half
    path.write_bytes(content[: len(content) - 12])
    records = journal.replay()
    assert [r.candidate_id for r in records] == ["c1"]


def test_replay_every_byte_prefix_is_safe(tmp_path):
    path = tmp_path / "journal.tsv"
    journal = DecisionJournal(path)
    journal.append("s1", "c1", "accepted", timestamp="2026-08-10T00:00:00Z")
    journal.append("s1", "c2", "rejected", timestamp="2026-08-10T00:00:01Z")
    journal.append("s2", "c3", "accepted", timestamp="2026-08-10T00:00:02Z")
    content = path.read_bytes()
    full = journal.replay()
    boundaries = [i for i, b in enumerate(content) if b == ord("\n")]
    for cut in range(len(content) + 1):
        path.write_bytes(content[:cut])
        records = DecisionJournal(path).replay()
        complete = sum(1 for b in boundaries if b < cut)
        assert records == full[:complete]


def test_append_rejects_bad_decision(tmp_path):
    journal = DecisionJournal(tmp_path / "journal.tsv")
    with pytest.raises(ValueError):
        journal.append("s1", "c1", "maybe")


def test_append_rejects_delimiter_in_ids(tmp_path):
    journal = DecisionJournal(tmp_path / "journal.tsv")
    with pytest.raises(ValueError):
        journal.append("s\t1", "c1", "accepted")
    with pytest.raises(ValueError):
        journal.append("s1", "c\n1", "accepted")


def test_timestamp_is_rfc3339_utc():
    stamp = utc_timestamp()
    assert stamp.endswith("Z")
    from datetime import datetime

    datetime.fromisoformat(stamp.replace("Z", "+00:00"))
