"""ROUGE-N (N=1,2) with clipped n-gram overlap and multi-reference best-F.

Overlap credits each n-gram at most min(candidate count, reference count)
times.  With several gold references the score of the reference with the
highest F-measure is kept, as a self-consistent (P, R, F) triple.  No
stemming or stopword removal is applied.
"""

from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass

from .errors import EmptyReferences


@dataclass(frozen=True)
class RougeScore:
    n: int
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class NGramBag:
    """Multiset of token n-grams of one text."""

    n: int
    counts: Counter

    @classmethod
    def from_tokens(cls, tokens: list[str], n: int) -> "NGramBag":
        grams = Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))
        return cls(n=n, counts=grams)

    def total(self) -> int:
        return sum(self.counts.values())


def _is_punctuation(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def tokenize_for_rouge(text: str, lowercase: bool = True) -> list[str]:
    """NFC-normalize, optionally lowercase, split on whitespace, and strip
    leading/trailing punctuation from each token; empty tokens are dropped."""
    text = unicodedata.normalize("NFC", text)
    if lowercase:
        text = text.lower()
    tokens = []
    for raw in text.split():
        start = 0
        end = len(raw)
        while start < end and _is_punctuation(raw[start]):
            start += 1
        while end > start and _is_punctuation(raw[end - 1]):
            end -= 1
        if end > start:
            tokens.append(raw[start:end])
    return tokens


def _f_measure(precision: float, recall: float) -> float:
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def rouge_n(candidate: str, reference: str, n: int, lowercase: bool = True) -> RougeScore:
    """Clipped n-gram overlap P/R/F between one candidate and one reference."""
    if n not in (1, 2):
        raise ValueError("n must be 1 or 2")
    cand = NGramBag.from_tokens(tokenize_for_rouge(candidate, lowercase), n)
    ref = NGramBag.from_tokens(tokenize_for_rouge(reference, lowercase), n)
    overlap = sum(min(count, ref.counts[gram]) for gram, count in cand.counts.items())
    cand_total = cand.total()
    ref_total = ref.total()
    precision = overlap / cand_total if cand_total else 0.0
    recall = overlap / ref_total if ref_total else 0.0
    return RougeScore(n=n, precision=precision, recall=recall, f1=_f_measure(precision, recall))


def rouge_best(
    candidate: str, references: list[str], n: int, lowercase: bool = True
) -> RougeScore:
    """Score against every reference and keep the highest-F triple.

    Ties go to the lowest reference index.
    """
    if not references:
        raise EmptyReferences("at least one reference is required")
    best: RougeScore | None = None
    for reference in references:
        score = rouge_n(candidate, reference, n, lowercase)
        if best is None or score.f1 > best.f1:
            best = score
    return best
