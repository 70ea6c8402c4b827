"""Command-line front end: ``vedsum <command>``.

Commands: summarize, evaluate, compare, sweep-k, embed-cache, rouge.
Exit codes: 0 success, 1 validation/usage error, 2 partial batch failure.
Structured error lines go to stderr as ``vedsum: error: <context>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import data as bundled_data
from .corpus import load_corpus
from .embed import DEFAULT_HASH_DIM, EmbeddingMatrix, ProviderSpec, embed_sentences, write_cache
from .errors import VedsumError
from .harness import (
    comparison_payload,
    compare,
    computed_row,
    evaluate,
    format_pct,
    load_baselines,
    render_comparison_md,
    report_payload,
    sweep_k,
    write_report,
)
from .rouge import rouge_best
from .summarize import DEFAULT_K, DEFAULT_SEED, SummarizerConfig, summarize_corpus, write_summaries


class UsageError(Exception):
    pass


def _error(message: str) -> None:
    print(f"vedsum: error: {message}", file=sys.stderr)


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _provider_from_args(args) -> ProviderSpec:
    if args.provider == "hash":
        return ProviderSpec.hashing(dim=args.dim if args.dim else DEFAULT_HASH_DIM)
    if args.provider == "cache":
        if not args.cache:
            raise UsageError("--cache <file> is required with --provider cache")
        return ProviderSpec.cache(args.cache)
    if args.provider == "http":
        endpoint = args.endpoint or os.environ.get("VEDSUM_ENDPOINT")
        if not endpoint:
            raise UsageError(
                "--endpoint <url> (or VEDSUM_ENDPOINT) is required with --provider http"
            )
        return ProviderSpec.http(endpoint)
    raise UsageError(f"unknown provider {args.provider!r}")


def _config_from_args(args) -> SummarizerConfig:
    return SummarizerConfig(provider=_provider_from_args(args), k=args.k, seed=args.seed)


def _add_provider_flags(parser) -> None:
    parser.add_argument("--provider", choices=["hash", "cache", "http"], default="hash")
    parser.add_argument("--dim", type=int, default=None, help="hash provider dimension")
    parser.add_argument("--cache", type=Path, default=None, help="embedding cache file")
    parser.add_argument("--endpoint", default=None, help="embedding service URL")


def _add_run_flags(parser) -> None:
    parser.add_argument("--corpus", type=Path, required=True)
    _add_provider_flags(parser)
    parser.add_argument("--k", type=int, default=DEFAULT_K)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--jobs", type=int, default=None)
    parser.add_argument("--out", type=Path, required=True)


def cmd_summarize(args) -> int:
    corpus = load_corpus(args.corpus)
    config = _config_from_args(args)
    batch = summarize_corpus(corpus, config, jobs=args.jobs)
    write_summaries(batch.summaries, args.out)
    for cid, err in sorted(batch.errors.items()):
        _error(f"cluster {cid}: {err}")
    print(f"wrote {len(batch.summaries)} summaries to {args.out}")
    return 2 if batch.errors else 0


def cmd_evaluate(args) -> int:
    corpus = load_corpus(args.corpus)
    config = _config_from_args(args)
    report = evaluate(corpus, config, lowercase=not args.no_lowercase, jobs=args.jobs)
    write_report(report, args.out, generated_at=_timestamp())
    print(f"{'Model':<28}{'ROUGE-1':>9}{'ROUGE-2':>9}")
    print(
        f"{report.provider_name:<28}"
        f"{format_pct(report.avg_rouge1_f):>9}"
        f"{format_pct(report.avg_rouge2_f):>9}"
    )
    for cid, message in sorted(report.failures.items()):
        _error(f"cluster {cid}: {message}")
    return 2 if report.failures else 0


def cmd_sweep_k(args) -> int:
    corpus = load_corpus(args.corpus)
    config = _config_from_args(args)
    try:
        k_values = [int(piece) for piece in args.k_values.split(",") if piece.strip()]
    except ValueError as err:
        raise UsageError(f"bad --k-values: {err}") from err
    if not k_values or any(k < 1 for k in k_values):
        raise UsageError("--k-values needs a comma-separated list of integers >= 1")

    results = sweep_k(corpus, config, k_values, lowercase=not args.no_lowercase, jobs=args.jobs)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    document = {
        "generated_at": _timestamp(),
        "sweep": [{"k": k, "report": report_payload(report)} for k, report in results],
    }
    (out / "sweep.json").write_text(
        json.dumps(document, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    lines = ["# K sweep", "", "| k | ROUGE-1 | ROUGE-2 |", "|---:|---:|---:|"]
    for k, report in results:
        lines.append(f"| {k} | {format_pct(report.avg_rouge1_f)} | {format_pct(report.avg_rouge2_f)} |")
    (out / "sweep.md").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"swept k={k_values}, wrote {out / 'sweep.json'}")
    return 0


def cmd_compare(args) -> int:
    computed = []
    for report_path in args.reports:
        with open(report_path, "r", encoding="utf-8") as fh:
            document = json.load(fh)
        payload = document.get("report", document)
        computed.append(
            computed_row(
                payload["provider_name"],
                float(payload["avg_rouge1_f"]),
                float(payload["avg_rouge2_f"]),
            )
        )
    baselines_path = args.baselines or bundled_data.baselines_path()
    table = compare(computed, load_baselines(baselines_path))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    document = {"generated_at": _timestamp(), "comparison": comparison_payload(table)}
    (out / "comparison.json").write_text(
        json.dumps(document, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    markdown = render_comparison_md(table)
    (out / "comparison.md").write_text(markdown, encoding="utf-8")
    print(markdown, end="")
    return 0


def cmd_embed_cache(args) -> int:
    if args.provider == "cache":
        raise UsageError("embed-cache needs --provider hash or http")
    corpus = load_corpus(args.corpus)
    spec = _provider_from_args(args)
    sentences = [s for cluster in corpus.clusters for s in cluster.sentences()]
    if not sentences:
        raise UsageError(f"corpus {args.corpus} has no sentences")
    matrix = embed_sentences(spec, sentences)
    out = Path(args.out)
    if out.parent:
        out.parent.mkdir(parents=True, exist_ok=True)
    write_cache(matrix, out)
    print(f"wrote {len(matrix)} vectors (dim {matrix.dim}) to {out}")
    return 0


def cmd_rouge(args) -> int:
    candidate = Path(args.cand).read_text(encoding="utf-8")
    references = [Path(ref).read_text(encoding="utf-8") for ref in args.ref]
    score = rouge_best(candidate, references, args.n, lowercase=not args.no_lowercase)
    print(
        f"ROUGE-{args.n} P={score.precision:.4f} R={score.recall:.4f} F={score.f1:.4f}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vedsum",
        description="Centroid-based extractive multi-document summarization toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("summarize", help="write per-cluster summaries")
    _add_run_flags(p)
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("evaluate", help="summarize and score a corpus with ROUGE")
    _add_run_flags(p)
    p.add_argument("--no-lowercase", action="store_true")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("sweep-k", help="evaluate across several k values")
    _add_run_flags(p)
    p.add_argument("--k-values", default="1,2,3,4,5,6", help="comma-separated k list")
    p.add_argument("--no-lowercase", action="store_true")
    p.set_defaults(func=cmd_sweep_k)

    p = sub.add_parser("compare", help="rank computed reports against published rows")
    p.add_argument("reports", nargs="+", help="report.json files from evaluate")
    p.add_argument("--baselines", type=Path, default=None)
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("embed-cache", help="embed a whole corpus into a cache file")
    p.add_argument("--corpus", type=Path, required=True)
    _add_provider_flags(p)
    p.add_argument("--out", type=Path, required=True, help="cache file to write")
    p.set_defaults(func=cmd_embed_cache)

    p = sub.add_parser("rouge", help="score one candidate file against reference files")
    p.add_argument("--cand", required=True)
    p.add_argument("--ref", action="append", required=True)
    p.add_argument("--n", type=int, choices=[1, 2], default=1)
    p.add_argument("--no-lowercase", action="store_true")
    p.set_defaults(func=cmd_rouge)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except UsageError as err:
        _error(str(err))
        return 1
    except VedsumError as err:
        _error(str(err))
        return 1
    except OSError as err:
        _error(str(err))
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
