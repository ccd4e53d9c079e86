"""Command-line surface binding the pipeline stages.

Subcommands mirror the processing stages: build-model (corpus ingestion),
analyze (score one title), optimize (ranked substitution candidates for a
titles file), stats (selection/evaluation report), serve (review service).

Resource paths may come from flags or from STICKY_* environment variables
(STICKY_MODEL, STICKY_LEXICON, STICKY_THESAURUS, STICKY_STOPWORDS,
STICKY_CONTEXT, STICKY_POP, STICKY_CONFIG, STICKY_DATA_DIR, STICKY_UI_DIR).

Exit codes: 0 success, 2 resource error, 3 empty/invalid corpus,
4 malformed data, 5 service startup failure.
"""
from __future__ import annotations

import argparse
import json
import os
import socket
import sys

from .corpus import (
    FrequencyModel,
    build_context_model,
    build_pop_model,
    load_model,
    read_context_corpus,
    read_pop_corpus,
    save_model,
)
from .errors import (
    EmptyCorpus,
    MalformedRecord,
    MissingVariant,
    OutOfScale,
    ResourceMissing,
    StickyError,
    TooFewObservations,
)
from .scoring import load_config, score_report
from .sentiment import load_lexicon
from .service import DEFAULT_PORT, ReviewStore, build_app, load_resources
from .stats import analyze_experiment, format_report, read_response_log, report_to_dict
from .substitution import candidate_to_dict, generate_candidates
from .text import load_stopwords, stopword_hash, tokenize

ENV_PREFIX = "STICKY_"


def _env(name):
    return os.environ.get(ENV_PREFIX + name)


def _require(value, flag, env_name):
    if value is None:
        raise ResourceMissing(f"missing {flag} (or {ENV_PREFIX}{env_name})")
    return value


def _fail(exc) -> None:
    print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)


def _config_from_args(args):
    config_path = getattr(args, "config", None) or _env("CONFIG")
    stopword_path = getattr(args, "stopwords", None) or _env("STOPWORDS")
    return load_config(
        path=config_path,
        stopword_path=stopword_path,
        theta_f=getattr(args, "theta_f", None),
        theta_n=getattr(args, "theta_n", None),
        require_emotive=getattr(args, "require_emotive", None),
        neutral_band=getattr(args, "neutral_band", None),
        min_len=getattr(args, "min_len", None),
    )


def _check_fingerprint(model: FrequencyModel, config) -> None:
    if model.stopword_hash != stopword_hash(config.stopwords) or model.min_len != config.min_len:
        print(
            "warning: model was built with a different stopword/min_len config",
            file=sys.stderr,
        )


def _write_output(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_build_model(args) -> int:
    config = _config_from_args(args)
    context_path = _require(args.context or _env("CONTEXT"), "--context", "CONTEXT")
    pop_path = _require(args.pop or _env("POP"), "--pop", "POP")
    try:
        titles = read_context_corpus(context_path)
        entries = read_pop_corpus(pop_path)
        context = build_context_model(titles)
        popularity = build_pop_model(entries)
    except MalformedRecord as exc:
        _fail(exc)
        return 3
    model = FrequencyModel(
        context=context,
        popularity=popularity,
        stopword_hash=stopword_hash(config.stopwords),
        min_len=config.min_len,
    )
    save_model(model, args.out)
    print(f"model written to {args.out}")
    print(f"context documents: {context.doc_count}")
    print(f"context vocabulary: {len(context.df)}")
    print(f"popularity vocabulary: {len(popularity.counts)} (max count {popularity.max_count})")
    return 0


def cmd_analyze(args) -> int:
    config = _config_from_args(args)
    model = load_model(_require(args.model or _env("MODEL"), "--model", "MODEL"))
    lexicon = load_lexicon(
        _require(args.lexicon or _env("LEXICON"), "--lexicon", "LEXICON"),
        neutral_band=config.neutral_band,
    )
    _check_fingerprint(model, config)
    report = score_report(tokenize(args.text, title_id="adhoc"), model, lexicon, config)
    if args.format == "json":
        _write_output(json.dumps(report, indent=2) + "\n", args.out)
        return 0
    lines = [f"{'word':<20}{'pos':>4}{'familiar':>10}{'novel':>10}{'polarity':>10}{'composite':>11}"]
    for word in report["words"]:
        lines.append(
            f"{word['word']:<20}{word['position']:>4}{word['familiarity']:>10.4f}"
            f"{word['novelty']:>10.4f}{word['polarity']:>10}{word['composite']:>11.4f}"
        )
    lines.append(f"title_score: {report['title_score']:.4f}")
    _write_output("\n".join(lines) + "\n", args.out)
    return 0


def cmd_optimize(args) -> int:
    from .substitution import load_thesaurus

    config = _config_from_args(args)
    model = load_model(_require(args.model or _env("MODEL"), "--model", "MODEL"))
    lexicon = load_lexicon(
        _require(args.lexicon or _env("LEXICON"), "--lexicon", "LEXICON"),
        neutral_band=config.neutral_band,
    )
    thesaurus = load_thesaurus(
        _require(args.thesaurus or _env("THESAURUS"), "--thesaurus", "THESAURUS")
    )
    _check_fingerprint(model, config)
    try:
        titles = read_context_corpus(args.titles)
    except MalformedRecord as exc:
        _fail(exc)
        return 3

    from .substitution import apply_substitution

    lines = []
    for title in titles:
        candidates = generate_candidates(title, model, lexicon, thesaurus, config)
        if args.format == "jsonl":
            for candidate in candidates:
                record = candidate_to_dict(candidate)
                record["original_title"] = title.raw
                record["treatment_title"] = apply_substitution(title, candidate).raw
                lines.append(json.dumps(record))
        else:
            lines.append(f"# title {title.id}: {title.raw}")
            if not candidates:
                lines.append("  (no qualifying candidates)")
            for rank, candidate in enumerate(candidates, start=1):
                lines.append(
                    f"  {rank:>3}. position {candidate.position:>2}  "
                    f"{candidate.original} -> {candidate.replacement}  "
                    f"delta {candidate.delta:+.4f}  "
                    f"familiarity {candidate.replacement_score.familiarity:.4f}  "
                    f"novelty {candidate.replacement_score.novelty:.4f}  "
                    f"polarity {candidate.replacement_score.polarity.label}  "
                    f"[{candidate.status}]"
                )
    _write_output("\n".join(lines) + "\n", args.out)
    return 0


def cmd_stats(args) -> int:
    responses = read_response_log(args.responses)
    reverse_items = frozenset()
    if args.reverse_items:
        reverse_items = frozenset(
            int(index) - 1 for index in args.reverse_items.split(",") if index.strip()
        )
    report = analyze_experiment(responses, reverse_items)
    if args.format == "json":
        _write_output(json.dumps(report_to_dict(report), indent=2) + "\n", args.out)
    else:
        _write_output(format_report(report) + "\n", args.out)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    config = _config_from_args(args)
    resources = load_resources(
        _require(args.model or _env("MODEL"), "--model", "MODEL"),
        _require(args.lexicon or _env("LEXICON"), "--lexicon", "LEXICON"),
        _require(args.thesaurus or _env("THESAURUS"), "--thesaurus", "THESAURUS"),
        config,
    )
    _check_fingerprint(resources.model, config)
    data_dir = args.data_dir or _env("DATA_DIR") or "sticky_data"
    store = ReviewStore(resources, data_dir)
    ui_dir = args.ui_dir or _env("UI_DIR")
    if ui_dir and not os.path.isdir(ui_dir):
        raise ResourceMissing(f"ui directory not found: {ui_dir}")
    app = build_app(store, ui_dir=ui_dir)

    host = args.host or _env("HOST") or "127.0.0.1"
    port = args.port if args.port is not None else int(_env("PORT") or DEFAULT_PORT)
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((host, port))
    except OSError as exc:
        sock.close()
        print(f"error: cannot listen on {host}:{port}: {exc}", file=sys.stderr)
        return 5
    sock.listen(128)
    host, port = sock.getsockname()[:2]
    print(f"review service listening on http://{host}:{port}", flush=True)
    server = uvicorn.Server(uvicorn.Config(app, log_level="warning"))
    server.run(sockets=[sock])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sticky",
        description="Evaluate and rewrite titles around familiar, novel, emotive words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_config_flags(p, thresholds=True):
        p.add_argument("--config", help="JSON config file")
        p.add_argument("--stopwords", help="stopword file (one word per line)")
        p.add_argument("--min-len", type=int, dest="min_len", help="minimum content-word length")
        if thresholds:
            p.add_argument("--theta-f", type=float, dest="theta_f", help="familiarity threshold")
            p.add_argument("--theta-n", type=float, dest="theta_n", help="novelty threshold")
            p.add_argument(
                "--neutral-band", type=float, dest="neutral_band", help="polarity neutral band"
            )
            p.add_argument(
                "--require-emotive",
                action=argparse.BooleanOptionalAction,
                dest="require_emotive",
                default=None,
                help="require non-neutral polarity for sticky words",
            )

    p = sub.add_parser("build-model", help="compile the frequency model file from corpora")
    p.add_argument("--context", help="context corpus (one title per line)")
    p.add_argument("--pop", help="popularity corpus (keyword<TAB>count)")
    p.add_argument("--out", required=True, help="model file to write")
    add_config_flags(p, thresholds=False)
    p.set_defaults(func=cmd_build_model)

    p = sub.add_parser("analyze", help="score one title")
    p.add_argument("text", help="title text")
    p.add_argument("--model", help="compiled model file")
    p.add_argument("--lexicon", help="sentiment lexicon file")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out", help="output path (default stdout)")
    add_config_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("optimize", help="rank substitution candidates for a titles file")
    p.add_argument("--titles", required=True, help="titles file (one per line)")
    p.add_argument("--model", help="compiled model file")
    p.add_argument("--lexicon", help="sentiment lexicon file")
    p.add_argument("--thesaurus", help="thesaurus file")
    p.add_argument("--format", choices=("table", "jsonl"), default="table")
    p.add_argument("--out", help="output path (default stdout)")
    add_config_flags(p)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("stats", help="selection/evaluation report from a response log")
    p.add_argument("--responses", required=True, help="response log CSV")
    p.add_argument("--reverse-items", dest="reverse_items", help="1-based reverse-coded items, comma separated")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("serve", help="run the review service")
    p.add_argument("--model", help="compiled model file")
    p.add_argument("--lexicon", help="sentiment lexicon file")
    p.add_argument("--thesaurus", help="thesaurus file")
    p.add_argument("--data-dir", dest="data_dir", help="session/journal directory")
    p.add_argument("--ui-dir", dest="ui_dir", help="static review UI directory to serve at /")
    p.add_argument("--host", help="listen address (default 127.0.0.1)")
    p.add_argument("--port", type=int, help=f"listen port (default {DEFAULT_PORT})")
    add_config_flags(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceMissing as exc:
        _fail(exc)
        return 2
    except EmptyCorpus as exc:
        _fail(exc)
        return 3
    except (MalformedRecord, MissingVariant, TooFewObservations, OutOfScale) as exc:
        _fail(exc)
        return 4
    except (ValueError, OSError) as exc:
        _fail(exc)
        return 2
    except StickyError as exc:
        _fail(exc)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
