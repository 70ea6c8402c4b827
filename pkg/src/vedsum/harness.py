"""Batch evaluation and comparison reporting.

``evaluate`` runs the summarizer over a corpus and scores each cluster
against all of its gold references with best-F ROUGE-1/2; corpus averages
are cluster-level macro means reported as percentages.  ``compare`` merges
computed reports with published baseline rows into one ranked table.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

from .corpus import Corpus
from .errors import BatchErrors, DuplicateName
from .rouge import RougeScore, rouge_best
from .summarize import SummarizerConfig, summarize_corpus


@dataclass(frozen=True)
class ClusterScore:
    cluster_id: str
    rouge1: RougeScore
    rouge2: RougeScore


@dataclass(frozen=True)
class RunReport:
    provider_name: str
    per_cluster: tuple[ClusterScore, ...]
    avg_rouge1_f: float  # percent, unrounded
    avg_rouge2_f: float  # percent, unrounded
    config_echo: SummarizerConfig
    corpus_fingerprint: str
    lowercase: bool
    failures: dict


@dataclass(frozen=True)
class ComparisonRow:
    name: str
    rouge1_pct: float
    rouge2_pct: float
    source: str  # "computed" | "published"
    citation: str | None = None
    best_rouge1: bool = False
    best_rouge2: bool = False


@dataclass(frozen=True)
class ComparisonTable:
    rows: tuple[ComparisonRow, ...]


@dataclass(frozen=True)
class PublishedRow:
    name: str
    rouge1: float
    rouge2: float
    citation: str = ""


@dataclass(frozen=True)
class ComputedRow:
    """The slice of a RunReport that ``compare`` consumes; lets the CLI feed
    rows re-read from report.json files."""

    provider_name: str
    avg_rouge1_f: float
    avg_rouge2_f: float


def computed_row(name: str, rouge1_pct: float, rouge2_pct: float) -> ComputedRow:
    return ComputedRow(name, rouge1_pct, rouge2_pct)


def format_pct(value: float) -> str:
    """Two decimals, half-up, Table-style ("77.44")."""
    return str(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def corpus_fingerprint(root) -> str:
    """Content hash of a corpus directory tree (paths + bytes, dotfiles
    ignored), independent of timestamps."""
    root = Path(root)
    digest = hashlib.sha256()
    files = sorted(
        p for p in root.rglob("*")
        if p.is_file() and not any(part.startswith(".") for part in p.relative_to(root).parts)
    )
    for path in files:
        rel = path.relative_to(root).as_posix()
        data = path.read_bytes()
        digest.update(rel.encode("utf-8"))
        digest.update(b"\0")
        digest.update(len(data).to_bytes(8, "big"))
        digest.update(data)
    return "sha256:" + digest.hexdigest()


def evaluate(
    corpus: Corpus,
    config: SummarizerConfig,
    lowercase: bool = True,
    jobs: int | None = None,
) -> RunReport:
    """Summarize every cluster and score it against all its references.

    Individual cluster failures are recorded in the report; only a batch in
    which no cluster succeeds raises.
    """
    batch = summarize_corpus(corpus, config, jobs=jobs)
    if not batch.summaries:
        raise BatchErrors(batch.errors)

    per_cluster = []
    for summary in batch.summaries:
        cluster = corpus.cluster(summary.cluster_id)
        references = [ref.text for ref in cluster.references]
        per_cluster.append(
            ClusterScore(
                cluster_id=summary.cluster_id,
                rouge1=rouge_best(summary.text, references, 1, lowercase),
                rouge2=rouge_best(summary.text, references, 2, lowercase),
            )
        )
    avg1 = 100.0 * sum(s.rouge1.f1 for s in per_cluster) / len(per_cluster)
    avg2 = 100.0 * sum(s.rouge2.f1 for s in per_cluster) / len(per_cluster)
    return RunReport(
        provider_name=config.provider.name,
        per_cluster=tuple(per_cluster),
        avg_rouge1_f=avg1,
        avg_rouge2_f=avg2,
        config_echo=config,
        corpus_fingerprint=corpus_fingerprint(corpus.root_path),
        lowercase=lowercase,
        failures={cid: str(err) for cid, err in batch.errors.items()},
    )


def sweep_k(
    corpus: Corpus,
    config: SummarizerConfig,
    k_values: list[int],
    lowercase: bool = True,
    jobs: int | None = None,
) -> list[tuple[int, RunReport]]:
    """One evaluation per k, same provider and seed throughout."""
    if not k_values:
        raise ValueError("k_values must be non-empty")
    if any(k < 1 for k in k_values):
        raise ValueError("every k must be >= 1")
    return [
        (k, evaluate(corpus, config.with_k(k), lowercase=lowercase, jobs=jobs))
        for k in k_values
    ]


def compare(reports: list[RunReport], published: list[PublishedRow]) -> ComparisonTable:
    """Merge computed reports and published rows, ranked by ROUGE-1 then
    ROUGE-2 descending, then name; the best value per column is marked."""
    raw: list[tuple[str, float, float, str, str | None]] = []
    for report in reports:
        raw.append((report.provider_name, report.avg_rouge1_f, report.avg_rouge2_f, "computed", None))
    for row in published:
        raw.append((row.name, row.rouge1, row.rouge2, "published", row.citation))

    seen: set[str] = set()
    for name, *_ in raw:
        if name in seen:
            raise DuplicateName(name)
        seen.add(name)

    raw.sort(key=lambda row: (-row[1], -row[2], row[0]))
    best1 = max(row[1] for row in raw) if raw else 0.0
    best2 = max(row[2] for row in raw) if raw else 0.0
    rows = tuple(
        ComparisonRow(
            name=name,
            rouge1_pct=r1,
            rouge2_pct=r2,
            source=source,
            citation=citation,
            best_rouge1=(r1 == best1),
            best_rouge2=(r2 == best2),
        )
        for name, r1, r2, source, citation in raw
    )
    return ComparisonTable(rows=rows)


def load_baselines(path) -> list[PublishedRow]:
    """Read published baseline rows from a JSON file."""
    with Path(path).open("r", encoding="utf-8") as fh:
        payload = json.load(fh)
    rows = []
    for obj in payload:
        if obj.get("source", "published") != "published":
            raise ValueError(f"baseline row {obj.get('name')!r} must have source 'published'")
        rows.append(
            PublishedRow(
                name=str(obj["name"]),
                rouge1=float(obj["rouge1"]),
                rouge2=float(obj["rouge2"]),
                citation=str(obj.get("citation", "")),
            )
        )
    return rows


# serialization ---------------------------------------------------------------


def provider_to_dict(spec) -> dict:
    payload = {"kind": spec.kind, "name": spec.name}
    if spec.dim is not None:
        payload["dim"] = spec.dim
    if spec.cache_path is not None:
        payload["cache_path"] = str(spec.cache_path)
    if spec.endpoint_url is not None:
        payload["endpoint_url"] = spec.endpoint_url
    return payload


def _score_to_dict(score: RougeScore) -> dict:
    return {
        "n": score.n,
        "precision": score.precision,
        "recall": score.recall,
        "f1": score.f1,
    }


def report_payload(report: RunReport) -> dict:
    """The reproducible portion of a report (no timestamps)."""
    return {
        "provider_name": report.provider_name,
        "config": {
            "provider": provider_to_dict(report.config_echo.provider),
            "k": report.config_echo.k,
            "seed": report.config_echo.seed,
            "max_iters": report.config_echo.max_iters,
            "rel_tol": report.config_echo.rel_tol,
            "lowercase": report.lowercase,
        },
        "corpus_fingerprint": report.corpus_fingerprint,
        "per_cluster": [
            {
                "cluster_id": score.cluster_id,
                "rouge1": _score_to_dict(score.rouge1),
                "rouge2": _score_to_dict(score.rouge2),
            }
            for score in report.per_cluster
        ],
        "avg_rouge1_f": report.avg_rouge1_f,
        "avg_rouge2_f": report.avg_rouge2_f,
        "failures": dict(sorted(report.failures.items())),
    }


def render_report_md(report: RunReport) -> str:
    lines = [
        "# Evaluation report",
        "",
        f"Corpus fingerprint: `{report.corpus_fingerprint}`",
        f"Config: k={report.config_echo.k}, seed={report.config_echo.seed}, "
        f"provider={report.provider_name}, lowercase={report.lowercase}",
        "",
        "| Model | ROUGE-1 | ROUGE-2 |",
        "|---|---:|---:|",
        f"| {report.provider_name} | {format_pct(report.avg_rouge1_f)} "
        f"| {format_pct(report.avg_rouge2_f)} |",
        "",
        "## Per-cluster best-F scores",
        "",
        "| Cluster | R1-P | R1-R | R1-F | R2-P | R2-R | R2-F |",
        "|---|---:|---:|---:|---:|---:|---:|",
    ]
    for score in report.per_cluster:
        lines.append(
            f"| {score.cluster_id} "
            f"| {score.rouge1.precision:.4f} | {score.rouge1.recall:.4f} | {score.rouge1.f1:.4f} "
            f"| {score.rouge2.precision:.4f} | {score.rouge2.recall:.4f} | {score.rouge2.f1:.4f} |"
        )
    if report.failures:
        lines += ["", "## Failures", ""]
        for cid, message in sorted(report.failures.items()):
            lines.append(f"- `{cid}`: {message}")
    return "\n".join(lines) + "\n"


def render_comparison_md(table: ComparisonTable) -> str:
    lines = [
        "# Model comparison",
        "",
        "| Model | ROUGE-1 | ROUGE-2 | Source |",
        "|---|---:|---:|---|",
    ]
    for row in table.rows:
        r1 = format_pct(row.rouge1_pct)
        r2 = format_pct(row.rouge2_pct)
        if row.best_rouge1:
            r1 = f"**{r1}**"
        if row.best_rouge2:
            r2 = f"**{r2}**"
        source = row.source if not row.citation else f"{row.source} ({row.citation})"
        lines.append(f"| {row.name} | {r1} | {r2} | {source} |")
    return "\n".join(lines) + "\n"


def comparison_payload(table: ComparisonTable) -> list[dict]:
    rows = []
    for row in table.rows:
        payload = {
            "name": row.name,
            "rouge1": row.rouge1_pct,
            "rouge2": row.rouge2_pct,
            "source": row.source,
            "best_rouge1": row.best_rouge1,
            "best_rouge2": row.best_rouge2,
        }
        if row.citation:
            payload["citation"] = row.citation
        rows.append(payload)
    return rows


def write_report(report: RunReport, out_dir, generated_at: str) -> Path:
    """Write ``report.json`` and ``report.md``; the timestamp is the first
    JSON key so it can be excluded from byte comparisons line-wise."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    document = {"generated_at": generated_at, "report": report_payload(report)}
    json_path = out / "report.json"
    json_path.write_text(
        json.dumps(document, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    (out / "report.md").write_text(render_report_md(report), encoding="utf-8")
    return json_path
