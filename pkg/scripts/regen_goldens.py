#!/usr/bin/env python3
"""Regenerate the frozen golden fixtures under tests/golden/.

Run only when an intentional behaviour change invalidates them, then audit
the diff by hand; the test suite treats any unreviewed drift as a regression.
"""

from __future__ import annotations

import json
from pathlib import Path

from vedsum.cli import run as cli_run
from vedsum.corpus import concatenate_cluster, load_corpus
from vedsum.data import mini_corpus_path
from vedsum.embed import ProviderSpec, embed_sentences
from vedsum.harness import evaluate, report_payload, sweep_k
from vedsum.kmeans import KMeansConfig, kmeans_fit, nearest_to_centroids
from vedsum.summarize import SummarizerConfig, summarize_cluster

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden"


def dump(name: str, payload) -> None:
    (GOLDEN / name).write_text(
        json.dumps(payload, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    print(f"wrote {GOLDEN / name}")


def main() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    corpus = load_corpus(mini_corpus_path())
    provider = ProviderSpec.hashing(256)
    cluster = corpus.cluster("c01")

    ordered = concatenate_cluster(cluster)
    dump(
        "c01_sentences.json",
        {"texts": [s.text for s in ordered], "keys": [s.key for s in ordered]},
    )

    matrix = embed_sentences(provider, ordered)
    result = kmeans_fit(matrix, KMeansConfig(k=2, seed=42))
    dump(
        "c01_kmeans_k2_seed42.json",
        {
            "selection": nearest_to_centroids(result, matrix),
            "assignments": result.assignments.tolist(),
            "inertia": result.inertia,
            "iterations": result.iterations,
        },
    )

    config = SummarizerConfig(provider=provider, k=4, seed=42)
    summary = summarize_cluster(cluster, config)
    dump(
        "c01_summary_k4_seed42.json",
        {"cluster_id": summary.cluster_id, "selected": list(summary.selected), "text": summary.text},
    )

    report = evaluate(corpus, config)
    dump("mini_report_payload.json", report_payload(report))

    curve = [
        {
            "k": k,
            "avg_rouge1_f": rep.avg_rouge1_f,
            "avg_rouge2_f": rep.avg_rouge2_f,
        }
        for k, rep in sweep_k(corpus, config, [1, 2, 3, 4, 5, 6])
    ]
    dump("sweep_k1_6.json", curve)

    # The exact file `vedsum evaluate` writes (timestamp line included; the
    # byte comparison in tests drops it).
    out_dir = GOLDEN / "cli_evaluate"
    out_dir.mkdir(exist_ok=True)
    code = cli_run(
        [
            "evaluate",
            "--corpus", str(mini_corpus_path()),
            "--provider", "hash",
            "--dim", "256",
            "--k", "4",
            "--seed", "42",
            "--out", str(out_dir),
        ]
    )
    if code != 0:
        raise SystemExit(f"evaluate exited with {code}")
    print(f"wrote {out_dir / 'report.json'}")


if __name__ == "__main__":
    main()
