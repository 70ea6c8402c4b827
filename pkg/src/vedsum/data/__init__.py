"""Bundled data: the mini_corpus fixture and published baseline rows."""

from pathlib import Path

_HERE = Path(__file__).resolve().parent


def mini_corpus_path() -> Path:
    """Directory of the bundled three-cluster demo corpus."""
    return _HERE / "mini_corpus"


def baselines_path() -> Path:
    """JSON file with published comparison rows."""
    return _HERE / "baselines.json"
