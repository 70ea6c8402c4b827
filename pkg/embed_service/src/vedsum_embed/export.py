"""Offline export: sentences JSONL in, vedsum-format embedding cache out.

Input lines are ``{"key": "<cluster>/<doc>/<index>", "text": "..."}``.
The output is the toolkit's line-oriented cache: a header object carrying
provider/dim plus hub_id and revision for traceability, then one
``{"key", "dim", "vec"}`` row per sentence.
"""

from __future__ import annotations

import json
from pathlib import Path

from .encoder import DEFAULT_BATCH_SIZE, SentenceEncoder
from .models import ModelEntry


def read_sentences_file(path) -> list[tuple[str, str]]:
    rows: list[tuple[str, str]] = []
    with Path(path).open("r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                rows.append((str(obj["key"]), str(obj["text"])))
            except (ValueError, KeyError, TypeError) as err:
                raise ValueError(f"{path}:{line_no}: expected {{'key','text'}}: {err}") from err
    if not rows:
        raise ValueError(f"{path}: no sentences")
    keys = [key for key, _ in rows]
    if len(set(keys)) != len(keys):
        raise ValueError(f"{path}: duplicate keys")
    return rows


def export_cache(
    entry: ModelEntry,
    sentences_file,
    out_cache,
    batch_size: int = DEFAULT_BATCH_SIZE,
    encoder: SentenceEncoder | None = None,
) -> int:
    """Embed every sentence and write the cache file; returns the row count."""
    rows = read_sentences_file(sentences_file)
    encoder = encoder or SentenceEncoder(entry)
    vectors = encoder.encode([text for _, text in rows], batch_size=batch_size)
    out_path = Path(out_cache)
    with out_path.open("w", encoding="utf-8", newline="\n") as fh:
        header = {
            "provider": entry.alias,
            "dim": encoder.dim,
            "hub_id": entry.hub_id,
            "revision": entry.revision,
        }
        fh.write(json.dumps(header, ensure_ascii=False) + "\n")
        for (key, _), vector in zip(rows, vectors):
            record = {"key": key, "dim": encoder.dim, "vec": [float(x) for x in vector]}
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    return len(rows)
