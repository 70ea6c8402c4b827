"""Transformer sentence-embedding exporter and server for vedsum."""

from .encoder import ModelLoadError, SentenceEncoder
from .export import export_cache, read_sentences_file
from .models import ROSTER, ModelEntry, resolve_model
from .server import create_app, serve

__version__ = "0.1.0"

__all__ = [
    "ModelEntry",
    "ModelLoadError",
    "ROSTER",
    "SentenceEncoder",
    "create_app",
    "export_cache",
    "read_sentences_file",
    "resolve_model",
    "serve",
    "__version__",
]
