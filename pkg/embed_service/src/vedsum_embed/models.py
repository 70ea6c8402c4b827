"""Model roster: the encoder checkpoints the service knows how to serve."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ModelEntry:
    alias: str
    hub_id: str
    max_tokens: int = 512
    revision: str = "main"
    # PhoBERT checkpoints were pre-trained on word-segmented text
    # (multi-syllable words joined by underscores); callers must feed
    # segmented input, the service only warns.
    needs_word_segmentation: bool = False


ROSTER: dict[str, ModelEntry] = {
    entry.alias: entry
    for entry in [
        ModelEntry("mbert-cased", "bert-base-multilingual-cased"),
        ModelEntry("mbert-uncased", "bert-base-multilingual-uncased"),
        ModelEntry("xlmr-base", "xlm-roberta-base"),
        ModelEntry("xlmr-large", "xlm-roberta-large"),
        ModelEntry("distilbert-multilingual", "distilbert-base-multilingual-cased"),
        ModelEntry("phobert-base", "vinai/phobert-base", max_tokens=256, needs_word_segmentation=True),
        ModelEntry("phobert-large", "vinai/phobert-large", max_tokens=256, needs_word_segmentation=True),
        ModelEntry("vibert4news", "NlpHUST/vibert4news-base-cased"),
    ]
}


def resolve_model(name: str, max_tokens: int | None = None, revision: str | None = None) -> ModelEntry:
    """Look up a roster alias, or treat ``name`` as a hub id / local path."""
    if name in ROSTER:
        entry = ROSTER[name]
        if max_tokens or revision:
            entry = ModelEntry(
                alias=entry.alias,
                hub_id=entry.hub_id,
                max_tokens=max_tokens or entry.max_tokens,
                revision=revision or entry.revision,
                needs_word_segmentation=entry.needs_word_segmentation,
            )
        return entry
    alias = name.replace("/", "-").strip("-") or "custom"
    return ModelEntry(
        alias=alias,
        hub_id=name,
        max_tokens=max_tokens or 512,
        revision=revision or "main",
    )
