"""Append-only decision journal.

One tab-separated record per line: session_id, candidate_id, decision,
timestamp (UTC, RFC 3339). Records are flushed and fsynced before the
write is acknowledged, are never mutated, and replaying the file (or any
prefix of it) reconstructs the review state implied by those records.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from datetime import datetime, timezone

from .substitution import DECISIONS


@dataclass(frozen=True)
class DecisionRecord:
    session_id: str
    candidate_id: str
    decision: str
    timestamp: str


def utc_timestamp() -> str:
    return (
        datetime.now(timezone.utc)
        .isoformat(timespec="microseconds")
        .replace("+00:00", "Z")
    )


class DecisionJournal:
    """Single-writer journal file; concurrent appends must be serialized
    by the caller (the review store holds the lock)."""

    def __init__(self, path):
        self.path = path

    def append(self, session_id: str, candidate_id: str, decision: str,
               timestamp: str | None = None) -> DecisionRecord:
        if decision not in DECISIONS:
            raise ValueError(f"decision must be one of {sorted(DECISIONS)}, got {decision!r}")
        for name, value in (("session_id", session_id), ("candidate_id", candidate_id)):
            if "\t" in value or "\n" in value:
                raise ValueError(f"{name} must not contain tabs or newlines: {value!r}")
        record = DecisionRecord(
            session_id=session_id,
            candidate_id=candidate_id,
            decision=decision,
            timestamp=timestamp if timestamp is not None else utc_timestamp(),
        )
        line = f"{record.session_id}\t{record.candidate_id}\t{record.decision}\t{record.timestamp}\n"
        with open(self.path, "a", encoding="utf-8") as handle:
            handle.write(line)
            handle.flush()
            os.fsync(handle.fileno())
        return record

    def replay(self) -> list[DecisionRecord]:
        """Read all well-formed records, in append order.

        A torn final line (crash mid-append) is silently dropped; any
        fully written record is returned bit-exactly.
        """
        if not os.path.exists(self.path):
            return []
        records = []
        with open(self.path, encoding="utf-8") as handle:
            content = handle.read()
        # The trailing newline is the commit marker: whatever follows the
        # last one was torn mid-append and is treated as absent.
        for line in content.split("\n")[:-1]:
            fields = line.split("\t")
            if len(fields) != 4 or fields[2] not in DECISIONS or not all(fields):
                continue
            records.append(DecisionRecord(*fields))
        return records
