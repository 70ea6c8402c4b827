"""Per-cluster pipeline: concatenate -> embed -> cluster -> select -> render.

Documents of a cluster are concatenated into one sentence sequence, each
sentence is embedded, the vectors are grouped with K-means, and the sentence
nearest each centroid is selected.  Selected sentences are rendered in their
original position order, joined by single spaces.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from .corpus import Cluster, Corpus, concatenate_cluster
from .embed import ProviderSpec, embed_sentences
from .errors import SummarizeError, VedsumError
from .kmeans import KMeansConfig, kmeans_fit, nearest_to_centroids

DEFAULT_K = 4
DEFAULT_SEED = 42


@dataclass(frozen=True)
class SummarizerConfig:
    provider: ProviderSpec
    k: int = DEFAULT_K
    seed: int = DEFAULT_SEED
    max_iters: int = 300
    rel_tol: float = 1e-4

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")

    def with_k(self, k: int) -> "SummarizerConfig":
        return replace(self, k=k)


@dataclass(frozen=True)
class Summary:
    cluster_id: str
    selected: tuple[int, ...]
    text: str


@dataclass(frozen=True)
class BatchResult:
    """Successful summaries plus per-cluster failures of one batch run."""

    summaries: tuple[Summary, ...]
    errors: dict


def summarize_cluster(cluster: Cluster, config: SummarizerConfig) -> Summary:
    """Summarize one cluster; k is clamped to the cluster's sentence count."""
    sentences = concatenate_cluster(cluster)
    try:
        k_eff = min(config.k, len(sentences))
        matrix = embed_sentences(config.provider, sentences)
        result = kmeans_fit(
            matrix,
            KMeansConfig(
                k=k_eff,
                seed=config.seed,
                max_iters=config.max_iters,
                rel_tol=config.rel_tol,
            ),
        )
        picks = nearest_to_centroids(result, matrix)
    except VedsumError as err:
        raise SummarizeError(cluster.cluster_id, err) from err
    # Point index equals global_index by construction of the concatenation.
    selected = tuple(sorted(picks))
    text = " ".join(sentences[i].text for i in selected)
    return Summary(cluster_id=cluster.cluster_id, selected=selected, text=text)


def summarize_corpus(
    corpus: Corpus, config: SummarizerConfig, jobs: int | None = None
) -> BatchResult:
    """Summarize every cluster, collecting per-cluster failures instead of
    aborting the batch.  Output order follows corpus cluster order regardless
    of worker scheduling."""
    workers = jobs if jobs and jobs > 0 else (os.cpu_count() or 1)
    summaries: list[Summary] = []
    errors: dict = {}

    def job(cluster: Cluster):
        return summarize_cluster(cluster, config)

    if workers == 1 or len(corpus.clusters) <= 1:
        outcomes = []
        for cluster in corpus.clusters:
            try:
                outcomes.append(job(cluster))
            except SummarizeError as err:
                outcomes.append(err)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(job, cluster) for cluster in corpus.clusters]
            outcomes = []
            for future in futures:
                try:
                    outcomes.append(future.result())
                except SummarizeError as err:
                    outcomes.append(err)

    for cluster, outcome in zip(corpus.clusters, outcomes):
        if isinstance(outcome, SummarizeError):
            errors[cluster.cluster_id] = outcome
        else:
            summaries.append(outcome)
    return BatchResult(summaries=tuple(summaries), errors=errors)


def write_summaries(summaries, out_dir) -> None:
    """Write ``<out>/<cluster_id>.sum.txt`` plus a machine-readable
    ``summaries.jsonl``."""
    import json
    from pathlib import Path

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    with (out / "summaries.jsonl").open("w", encoding="utf-8", newline="\n") as fh:
        for summary in summaries:
            (out / f"{summary.cluster_id}.sum.txt").write_text(
                summary.text + "\n", encoding="utf-8"
            )
            record = {
                "cluster_id": summary.cluster_id,
                "selected": list(summary.selected),
                "text": summary.text,
            }
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
