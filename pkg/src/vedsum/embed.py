"""Sentence embedding providers behind one contract.

Three interchangeable backends produce a row-per-sentence matrix:

* ``hash`` — deterministic feature-hashing vectors; needs no model and makes
  the whole pipeline testable and reproducible in CI.
* ``cache`` — vectors precomputed offline (e.g. by a transformer model) and
  stored in a line-oriented JSON file.
* ``http`` — a live embedding service speaking the ``/embed`` wire protocol.

Rows are always in input order, and for the hash and cache kinds the output
is a pure function of the input sentences.
"""

from __future__ import annotations

import json
import math
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np
import requests

from .corpus import SentenceRecord
from .errors import (
    CacheMiss,
    DimensionMismatch,
    DuplicateKey,
    EmptyInput,
    ParseError,
    ProtocolError,
    TransportError,
)

DEFAULT_HASH_DIM = 256
HTTP_BATCH_SIZE = 32
HTTP_TIMEOUT_S = 60.0

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1
# Joins the two tokens of a bigram feature; cannot appear inside a token.
_BIGRAM_SEP = ""


@dataclass(frozen=True)
class EmbeddingMatrix:
    """Dense row-per-sentence vectors from one provider.

    ``keys[i]`` identifies the sentence behind ``vectors[i]`` as
    ``"<cluster_id>/<doc_id>/<sent_index_in_doc>"``.
    """

    provider_name: str
    dim: int
    keys: tuple[str, ...]
    vectors: np.ndarray

    def __post_init__(self):
        vectors = np.asarray(self.vectors, dtype=np.float64)
        object.__setattr__(self, "vectors", vectors)
        if self.dim <= 0:
            raise ValueError("dim must be positive")
        if vectors.ndim != 2 or vectors.shape != (len(self.keys), self.dim):
            raise ValueError(
                f"vectors shape {vectors.shape} does not match "
                f"{len(self.keys)} keys x dim {self.dim}"
            )
        if len(set(self.keys)) != len(self.keys):
            raise ValueError("keys must be unique")
        if vectors.size and not np.isfinite(vectors).all():
            raise ValueError("vectors must be finite")

    def __len__(self) -> int:
        return len(self.keys)

    def rows(self):
        return zip(self.keys, self.vectors)


@dataclass(frozen=True)
class ProviderSpec:
    """Which backend to use and its kind-specific settings."""

    kind: str
    name: str
    dim: int | None = None
    cache_path: Path | None = None
    endpoint_url: str | None = None

    def __post_init__(self):
        required = {"hash": "dim", "cache": "cache_path", "http": "endpoint_url"}
        if self.kind not in required:
            raise ValueError(f"unknown provider kind {self.kind!r}")
        values = {
            "dim": self.dim,
            "cache_path": self.cache_path,
            "endpoint_url": self.endpoint_url,
        }
        for field_name, value in values.items():
            if field_name == required[self.kind]:
                if value is None:
                    raise ValueError(f"{self.kind} provider requires {field_name}")
            elif value is not None:
                raise ValueError(f"{field_name} is not a {self.kind} provider field")
        if self.kind == "hash" and self.dim < 2:
            raise ValueError("hash dim must be >= 2")

    @classmethod
    def hashing(cls, dim: int = DEFAULT_HASH_DIM, name: str | None = None) -> "ProviderSpec":
        return cls(kind="hash", name=name or f"hash-{dim}", dim=dim)

    @classmethod
    def cache(cls, path, name: str | None = None) -> "ProviderSpec":
        path = Path(path)
        return cls(kind="cache", name=name or f"cache:{path.name}", cache_path=path)

    @classmethod
    def http(cls, endpoint_url: str, name: str | None = None) -> "ProviderSpec":
        return cls(kind="http", name=name or f"http:{endpoint_url}", endpoint_url=endpoint_url)


@lru_cache(maxsize=1 << 18)
def _fnv1a64(feature: str) -> int:
    h = _FNV_OFFSET
    for byte in feature.encode("utf-8"):
        h ^= byte
        h = (h * _FNV_PRIME) & _MASK64
    return h


def _features(text: str) -> list[str]:
    tokens = unicodedata.normalize("NFC", text).lower().split()
    bigrams = [a + _BIGRAM_SEP + b for a, b in zip(tokens, tokens[1:])]
    return tokens + bigrams


def _accumulate(text: str, dim: int) -> np.ndarray:
    vec = np.zeros(dim, dtype=np.float64)
    for feature in _features(text):
        h = _fnv1a64(feature)
        sign = 1.0 if (h >> 63) == 0 else -1.0
        vec[h % dim] += sign
    return vec


def hash_embed(text: str, dim: int) -> np.ndarray:
    """Deterministic feature-hashing sentence vector.

    Unigram and adjacent-bigram features of the NFC-normalized, lowercased,
    whitespace-tokenized text are hashed with 64-bit FNV-1a; the hash picks
    the index (mod dim) and its top bit the sign.  The signed counts are
    L2-normalized; empty text yields the zero vector unchanged.
    """
    if dim < 2:
        raise ValueError("dim must be >= 2")
    vec = _accumulate(text, dim)
    norm = math.sqrt(float(np.dot(vec, vec)))
    if norm > 0.0:
        vec /= norm
    return vec


def embed_sentences(spec: ProviderSpec, sentences: list[SentenceRecord]) -> EmbeddingMatrix:
    """Embed ``sentences`` with the backend selected by ``spec``.

    One row per input sentence, in input order.
    """
    if not sentences:
        raise EmptyInput("no sentences to embed")
    keys = tuple(s.key for s in sentences)

    if spec.kind == "hash":
        vectors = np.stack([hash_embed(s.text, spec.dim) for s in sentences])
        return EmbeddingMatrix(spec.name, spec.dim, keys, vectors)

    if spec.kind == "cache":
        cached = _load_cache_file(spec.cache_path)
        rows = []
        for key in keys:
            if key not in cached.index:
                raise CacheMiss(key)
            rows.append(cached.matrix.vectors[cached.index[key]])
        return EmbeddingMatrix(spec.name, cached.matrix.dim, keys, np.stack(rows))

    dim, vectors = http_embed(spec.endpoint_url, [s.text for s in sentences])
    return EmbeddingMatrix(spec.name, dim, keys, np.asarray(vectors, dtype=np.float64))


# cache file format ----------------------------------------------------------
#
# One JSON object per LF-terminated line:
#   {"key": "c01/d1/0", "dim": 768, "vec": [0.013, -0.224, ...]}
# An optional first line may be a header object {"provider": ..., "dim": ...}
# (no "key" field); rows must then match its dim.  Unknown header fields are
# ignored so exporters can record model metadata.


def write_cache(matrix: EmbeddingMatrix, path) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        header = {"provider": matrix.provider_name, "dim": matrix.dim}
        fh.write(json.dumps(header, ensure_ascii=False) + "\n")
        for key, vector in matrix.rows():
            row = {"key": key, "dim": matrix.dim, "vec": [float(x) for x in vector]}
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")


def read_cache(path) -> EmbeddingMatrix:
    path = Path(path)
    provider_name = f"cache:{path.name}"
    dim: int | None = None
    keys: list[str] = []
    vectors: list[list[float]] = []
    seen: set[str] = set()

    def reject_constant(value):
        raise ValueError(f"non-finite constant {value!r}")

    with path.open("r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line, parse_constant=reject_constant)
            except ValueError as err:
                raise ParseError(path, line_no, f"bad JSON: {err}") from err
            if not isinstance(obj, dict):
                raise ParseError(path, line_no, "expected a JSON object")

            if "key" not in obj:
                if line_no != 1:
                    raise ParseError(path, line_no, "header allowed only on line 1")
                if "provider" in obj:
                    provider_name = str(obj["provider"])
                if "dim" in obj:
                    dim = int(obj["dim"])
                continue

            if "vec" not in obj or not isinstance(obj["vec"], list):
                raise ParseError(path, line_no, "row needs a 'vec' array")
            key = str(obj["key"])
            vec = obj["vec"]
            row_dim = int(obj.get("dim", len(vec)))
            if row_dim != len(vec):
                raise DimensionMismatch(
                    f"{path}:{line_no}: declared dim {row_dim} != {len(vec)} components"
                )
            if dim is None:
                dim = row_dim
            elif row_dim != dim:
                raise DimensionMismatch(
                    f"{path}:{line_no}: dim {row_dim} != file dim {dim}"
                )
            if key in seen:
                raise DuplicateKey(key)
            try:
                values = [float(x) for x in vec]
            except (TypeError, ValueError) as err:
                raise ParseError(path, line_no, f"bad vector component: {err}") from err
            if not all(math.isfinite(x) for x in values):
                raise ParseError(path, line_no, "non-finite vector component")
            seen.add(key)
            keys.append(key)
            vectors.append(values)

    if dim is None:
        raise ParseError(path, 1, "cache file has no rows and no header")
    array = np.asarray(vectors, dtype=np.float64).reshape(len(keys), dim)
    return EmbeddingMatrix(provider_name, dim, tuple(keys), array)


@dataclass(frozen=True)
class _LoadedCache:
    matrix: EmbeddingMatrix
    index: dict


@lru_cache(maxsize=8)
def _load_cache_file_stamped(path_str: str, mtime_ns: int, size: int) -> _LoadedCache:
    matrix = read_cache(path_str)
    return _LoadedCache(matrix, {key: i for i, key in enumerate(matrix.keys)})


def _load_cache_file(path: Path) -> _LoadedCache:
    # Memoized on (path, mtime, size) so per-cluster calls do not re-read the
    # file, while edits on disk still invalidate.
    stat = path.stat()
    return _load_cache_file_stamped(str(path), stat.st_mtime_ns, stat.st_size)


# HTTP wire protocol ---------------------------------------------------------
#
# POST <endpoint>/embed with {"sentences": [...]}; 200 response carries
# {"dim": d, "vectors": [[...], ...]}.  Errors use status >= 400 and a body
# {"error": "<message>"}.


def http_embed(
    endpoint: str,
    texts: list[str],
    batch_size: int = HTTP_BATCH_SIZE,
    timeout: float = HTTP_TIMEOUT_S,
) -> tuple[int, list[list[float]]]:
    """Embed ``texts`` via a live service, batching ``batch_size`` per request."""
    if not texts:
        raise EmptyInput("no texts to embed")
    url = endpoint.rstrip("/") + "/embed"
    dim: int | None = None
    vectors: list[list[float]] = []
    for start in range(0, len(texts), batch_size):
        batch = texts[start : start + batch_size]
        try:
            response = requests.post(url, json={"sentences": batch}, timeout=timeout)
        except requests.RequestException as err:
            raise TransportError(url, err) from err
        if response.status_code != 200:
            raise TransportError(url, _error_body(response))
        try:
            payload = response.json()
        except ValueError as err:
            raise ProtocolError(f"response is not JSON: {err}") from err
        if not isinstance(payload, dict) or "dim" not in payload or "vectors" not in payload:
            raise ProtocolError("response must carry 'dim' and 'vectors'")
        batch_dim = int(payload["dim"])
        batch_vectors = payload["vectors"]
        if not isinstance(batch_vectors, list) or len(batch_vectors) != len(batch):
            raise ProtocolError(
                f"expected {len(batch)} vectors, got "
                f"{len(batch_vectors) if isinstance(batch_vectors, list) else 'non-list'}"
            )
        if dim is None:
            dim = batch_dim
        elif batch_dim != dim:
            raise DimensionMismatch(f"service changed dim {dim} -> {batch_dim}")
        for vec in batch_vectors:
            if not isinstance(vec, list) or len(vec) != dim:
                raise DimensionMismatch(f"vector length != dim {dim}")
            vectors.append([float(x) for x in vec])
    return dim, vectors


def _error_body(response) -> str:
    try:
        payload = response.json()
        if isinstance(payload, dict) and "error" in payload:
            return f"HTTP {response.status_code}: {payload['error']}"
    except ValueError:
        pass
    return f"HTTP {response.status_code}"
