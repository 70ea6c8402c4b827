"""Shared encoder: load a checkpoint, mean-pool hidden states, batch inputs."""

from __future__ import annotations

import logging

import numpy as np
import torch

from .models import ModelEntry

log = logging.getLogger("vedsum_embed")

DEFAULT_BATCH_SIZE = 32


class ModelLoadError(Exception):
    def __init__(self, entry: ModelEntry, cause: Exception):
        self.entry = entry
        self.cause = cause
        super().__init__(f"cannot load {entry.hub_id!r} ({entry.alias}): {cause}")


class SentenceEncoder:
    """Wraps one transformer checkpoint in inference mode.

    The sentence vector is the mean of the final-layer hidden states over
    non-padding positions; inputs are truncated to the entry's max_tokens
    (logged, not fatal).
    """

    def __init__(self, entry: ModelEntry, device: str = "cpu"):
        from transformers import AutoModel, AutoTokenizer

        self.entry = entry
        self.device = torch.device(device)
        try:
            self.tokenizer = AutoTokenizer.from_pretrained(
                entry.hub_id, revision=entry.revision
            )
            self.model = AutoModel.from_pretrained(entry.hub_id, revision=entry.revision)
        except Exception as err:
            raise ModelLoadError(entry, err) from err
        self.model.to(self.device)
        self.model.eval()
        self.dim = int(self.model.config.hidden_size)
        if entry.needs_word_segmentation:
            log.warning(
                "%s expects word-segmented input (underscore-joined words); "
                "feed pre-segmented text",
                entry.alias,
            )

    def _warn_truncation(self, texts: list[str]) -> None:
        lengths = [len(ids) for ids in self.tokenizer(texts, truncation=False)["input_ids"]]
        over = sum(1 for n in lengths if n > self.entry.max_tokens)
        if over:
            log.warning(
                "%d/%d inputs exceed %d tokens and were truncated (%s)",
                over,
                len(texts),
                self.entry.max_tokens,
                self.entry.alias,
            )

    def encode(self, texts: list[str], batch_size: int = DEFAULT_BATCH_SIZE) -> np.ndarray:
        """Mean-pooled sentence vectors, one row per input text, float64."""
        if not texts:
            return np.zeros((0, self.dim), dtype=np.float64)
        self._warn_truncation(texts)
        chunks = []
        with torch.no_grad():
            for start in range(0, len(texts), batch_size):
                batch = texts[start : start + batch_size]
                encoded = self.tokenizer(
                    batch,
                    padding=True,
                    truncation=True,
                    max_length=self.entry.max_tokens,
                    return_tensors="pt",
                ).to(self.device)
                hidden = self.model(**encoded).last_hidden_state
                mask = encoded["attention_mask"].unsqueeze(-1).to(hidden.dtype)
                summed = (hidden * mask).sum(dim=1)
                counts = mask.sum(dim=1).clamp(min=1.0)
                chunks.append((summed / counts).cpu().numpy())
        return np.concatenate(chunks, axis=0).astype(np.float64)
