"""Review service: sessions, human decisions, ad-hoc scoring, and export.

Sessions are immutable after creation (their candidate lists are exactly
what generation produced); all review state lives in the append-only
decision journal, so restarting the service replays the journal and
reconstructs every candidate status. Scoring resources are immutable and
shared; journal writes are serialized behind a single lock.
"""
from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel

from .corpus import FrequencyModel, load_model
from .errors import (
    AlreadyReviewed,
    ResourceMissing,
    UnknownCandidate,
    UnknownSession,
)
from .journal import DecisionJournal, DecisionRecord, utc_timestamp
from .scoring import ScoreConfig, score_report
from .sentiment import SentimentLexicon, load_lexicon
from .substitution import (
    ACCEPTED,
    PENDING,
    REJECTED,
    SubstitutionCandidate,
    Thesaurus,
    apply_substitution,
    candidate_from_dict,
    candidate_to_dict,
    generate_candidates,
    load_thesaurus,
    review,
)
from .text import Title, tokenize

SESSION_FORMAT_VERSION = 1
DEFAULT_PORT = 8470


@dataclass(frozen=True)
class Resources:
    model: FrequencyModel
    lexicon: SentimentLexicon
    thesaurus: Thesaurus
    config: ScoreConfig


def load_resources(model_path, lexicon_path, thesaurus_path, config: ScoreConfig) -> Resources:
    return Resources(
        model=load_model(model_path),
        lexicon=load_lexicon(lexicon_path, neutral_band=config.neutral_band),
        thesaurus=load_thesaurus(thesaurus_path),
        config=config,
    )


class SessionState:
    """In-memory view of one session: immutable titles/candidates plus the
    journal-backed decision overlay."""

    def __init__(self, session_id: str, created_at: str, titles: list[Title],
                 candidates: list[SubstitutionCandidate]):
        self.session_id = session_id
        self.created_at = created_at
        self.titles = {title.id: title for title in titles}
        self.title_order = [title.id for title in titles]
        self.candidates: dict[str, SubstitutionCandidate] = {
            c.candidate_id: c for c in candidates
        }
        self.decisions: list[DecisionRecord] = []


class ReviewStore:
    """Session and decision persistence under one data directory.

    Layout: sessions/<id>.json for immutable session content, journal.tsv
    for the append-only decision log.
    """

    def __init__(self, resources: Resources, data_dir):
        self.resources = resources
        self.data_dir = Path(data_dir)
        self.sessions_dir = self.data_dir / "sessions"
        self.sessions_dir.mkdir(parents=True, exist_ok=True)
        self.journal = DecisionJournal(self.data_dir / "journal.tsv")
        self._lock = threading.Lock()
        self._sessions: dict[str, SessionState] = {}
        self._load()

    # -- persistence -------------------------------------------------

    def _load(self):
        for path in sorted(self.sessions_dir.glob("*.json")):
            with open(path, encoding="utf-8") as handle:
                document = json.load(handle)
            if document.get("format_version") != SESSION_FORMAT_VERSION:
                raise ValueError(f"unsupported session file {path}")
            titles = [tokenize(t["raw"], title_id=t["id"]) for t in document["titles"]]
            candidates = [
                candidate_from_dict({**c, "status": PENDING}) for c in document["candidates"]
            ]
            state = SessionState(
                session_id=document["session_id"],
                created_at=document["created_at"],
                titles=titles,
                candidates=candidates,
            )
            self._sessions[state.session_id] = state
        for record in self.journal.replay():
            self._apply_record(record)

    def _apply_record(self, record: DecisionRecord):
        state = self._sessions.get(record.session_id)
        if state is None:
            return
        candidate = state.candidates.get(record.candidate_id)
        if candidate is None or candidate.status != PENDING:
            return
        state.candidates[record.candidate_id] = review(candidate, record.decision)
        state.decisions.append(record)

    def _persist_session(self, state: SessionState):
        document = {
            "format_version": SESSION_FORMAT_VERSION,
            "session_id": state.session_id,
            "created_at": state.created_at,
            "titles": [
                {"id": tid, "raw": state.titles[tid].raw} for tid in state.title_order
            ],
            "candidates": [candidate_to_dict(c) for c in state.candidates.values()],
        }
        path = self.sessions_dir / f"{state.session_id}.json"
        tmp = path.with_suffix(".json.tmp")
        with open(tmp, "w", encoding="utf-8") as handle:
            json.dump(document, handle, indent=1)
            handle.write("\n")
        os.replace(tmp, path)

    # -- operations --------------------------------------------------

    def create_session(self, titles: list[tuple[str, str]]) -> SessionState:
        """titles: (id, text) pairs; candidates are generated and persisted
        before the session becomes visible."""
        r = self.resources
        tokenized = []
        seen_ids = set()
        for title_id, raw in titles:
            if "\t" in title_id or "\n" in title_id:
                raise ValueError(f"title id must not contain tabs or newlines: {title_id!r}")
            if title_id in seen_ids:
                raise ValueError(f"duplicate title id: {title_id!r}")
            seen_ids.add(title_id)
            tokenized.append(tokenize(raw, title_id=title_id))
        candidates = []
        for title in tokenized:
            candidates.extend(
                generate_candidates(title, r.model, r.lexicon, r.thesaurus, r.config)
            )
        state = SessionState(
            session_id=uuid.uuid4().hex,
            created_at=utc_timestamp(),
            titles=tokenized,
            candidates=candidates,
        )
        with self._lock:
            self._persist_session(state)
            self._sessions[state.session_id] = state
        return state

    def list_sessions(self) -> list[SessionState]:
        return sorted(self._sessions.values(), key=lambda s: (s.created_at, s.session_id))

    def get_session(self, session_id: str) -> SessionState:
        state = self._sessions.get(session_id)
        if state is None:
            raise UnknownSession(f"unknown session: {session_id}")
        return state

    def candidates(self, session_id: str, status: str | None = None) -> list[SubstitutionCandidate]:
        state = self.get_session(session_id)
        found = list(state.candidates.values())
        if status is not None:
            found = [c for c in found if c.status == status]
        return found

    def record_decision(self, session_id: str, candidate_id: str, decision: str) -> SubstitutionCandidate:
        with self._lock:
            state = self.get_session(session_id)
            candidate = state.candidates.get(candidate_id)
            if candidate is None:
                raise UnknownCandidate(f"unknown candidate: {candidate_id}")
            updated = review(candidate, decision)  # raises AlreadyReviewed
            record = self.journal.append(session_id, candidate_id, decision)
            state.candidates[candidate_id] = updated
            state.decisions.append(record)
            return updated

    def export(self, session_id: str) -> list[tuple[str, str]]:
        """(original, treatment) text pairs for every accepted candidate,
        in candidate rank order."""
        state = self.get_session(session_id)
        pairs = []
        for candidate in state.candidates.values():
            if candidate.status != ACCEPTED:
                continue
            title = state.titles[candidate.title_id]
            treated = apply_substitution(title, candidate)
            pairs.append((title.raw, treated.raw))
        return pairs

    def score_text(self, text: str) -> dict:
        r = self.resources
        title = tokenize(text, title_id="adhoc")
        return score_report(title, r.model, r.lexicon, r.config)

    def treatment_text(self, state: SessionState, candidate: SubstitutionCandidate) -> str:
        return apply_substitution(state.titles[candidate.title_id], candidate).raw


def _candidate_json(store: ReviewStore, state: SessionState, candidate: SubstitutionCandidate) -> dict:
    return {
        **candidate_to_dict(candidate),
        "original_title": state.titles[candidate.title_id].raw,
        "treatment_title": store.treatment_text(state, candidate),
    }


def _session_json(store: ReviewStore, state: SessionState, include_candidates: bool = True) -> dict:
    statuses = [c.status for c in state.candidates.values()]
    out = {
        "session_id": state.session_id,
        "created_at": state.created_at,
        "title_count": len(state.title_order),
        "candidate_count": len(statuses),
        "pending_count": statuses.count(PENDING),
        "accepted_count": statuses.count(ACCEPTED),
        "rejected_count": statuses.count(REJECTED),
    }
    if include_candidates:
        out["titles"] = [
            {"id": tid, "text": state.titles[tid].raw} for tid in state.title_order
        ]
        out["candidates"] = [
            _candidate_json(store, state, c) for c in state.candidates.values()
        ]
        out["decisions"] = [
            {
                "candidate_id": r.candidate_id,
                "decision": r.decision,
                "timestamp": r.timestamp,
            }
            for r in state.decisions
        ]
    return out


# -- HTTP surface ----------------------------------------------------


class TitleIn(BaseModel):
    id: str | None = None
    text: str


class CreateSessionRequest(BaseModel):
    titles: list[str | TitleIn] = []


class DecisionRequest(BaseModel):
    candidate_id: str
    decision: str


class ScoreRequest(BaseModel):
    text: str


def build_app(store: ReviewStore, ui_dir=None) -> FastAPI:
    app = FastAPI(title="sticky review service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/sessions")
    def list_sessions():
        return [_session_json(store, s, include_candidates=False) for s in store.list_sessions()]

    @app.post("/api/sessions", status_code=201)
    def create_session(request: CreateSessionRequest):
        titles = []
        for index, entry in enumerate(request.titles, start=1):
            if isinstance(entry, str):
                titles.append((str(index), entry))
            else:
                titles.append((entry.id if entry.id else str(index), entry.text))
        try:
            state = store.create_session(titles)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return _session_json(store, state)

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str):
        try:
            state = store.get_session(session_id)
        except UnknownSession as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        return _session_json(store, state)

    @app.get("/api/sessions/{session_id}/candidates")
    def list_candidates(session_id: str, status: str | None = Query(default=None)):
        if status is not None and status not in (PENDING, ACCEPTED, REJECTED):
            raise HTTPException(status_code=400, detail=f"invalid status filter: {status}")
        try:
            state = store.get_session(session_id)
            found = store.candidates(session_id, status)
        except UnknownSession as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        return [_candidate_json(store, state, c) for c in found]

    @app.post("/api/sessions/{session_id}/decisions")
    def post_decision(session_id: str, request: DecisionRequest):
        if request.decision not in (ACCEPTED, REJECTED):
            raise HTTPException(
                status_code=400,
                detail=f"decision must be accepted or rejected, got {request.decision!r}",
            )
        try:
            updated = store.record_decision(session_id, request.candidate_id, request.decision)
        except (UnknownSession, UnknownCandidate) as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        except AlreadyReviewed as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        state = store.get_session(session_id)
        return _candidate_json(store, state, updated)

    @app.get("/api/score")
    def get_score(text: str = Query(default="")):
        return store.score_text(text)

    @app.post("/api/score")
    def post_score(request: ScoreRequest):
        return store.score_text(request.text)

    @app.get("/api/sessions/{session_id}/export")
    def export_session(session_id: str, format: str = Query(default="tsv")):
        try:
            pairs = store.export(session_id)
        except UnknownSession as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        if format == "json":
            return [{"original": original, "treatment": treatment} for original, treatment in pairs]
        if format == "tsv":
            lines = ["ORIGINAL\tTREATMENT"]
            lines.extend(f"{original}\t{treatment}" for original, treatment in pairs)
            return PlainTextResponse("\n".join(lines) + "\n")
        raise HTTPException(status_code=400, detail=f"invalid format: {format}")

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
