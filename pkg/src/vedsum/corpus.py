"""Cluster-of-documents corpus loading.

Directory layout, one subdirectory per cluster::

    <root>/<cluster_id>/docs/<doc_id>.txt      raw document text (required)
    <root>/<cluster_id>/refs/<ref_id>.txt      gold reference summary (required)
    <root>/<cluster_id>/sents/<doc_id>.sents   optional pre-segmented sentences,
                                               one per line

Ids are filenames without extension; dotfiles are ignored.  All text is
NFC-normalized on load so downstream token matching does not depend on how
diacritics were encoded.  Loaded structures are immutable.
"""

from __future__ import annotations

import unicodedata
import warnings
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CorpusShapeWarning, EmptyCluster, EncodingError, MissingDirectory

# Sentence terminators for the fallback segmenter.
_TERMINATORS = ".!?…"
# Closing quotes that stay attached to the sentence they terminate.
_CLOSING_QUOTES = '"”'


@dataclass(frozen=True)
class SentenceRecord:
    """One sentence with its provenance inside a cluster.

    ``global_index`` is the sentence's position in the concatenated cluster
    paragraph (document-major, documents in lexicographic doc_id order).
    """

    cluster_id: str
    doc_id: str
    sent_index_in_doc: int
    global_index: int
    text: str

    @property
    def key(self) -> str:
        """Stable identifier used by embedding caches."""
        return f"{self.cluster_id}/{self.doc_id}/{self.sent_index_in_doc}"


@dataclass(frozen=True)
class ReferenceSummary:
    ref_id: str
    text: str


@dataclass(frozen=True)
class Document:
    doc_id: str
    raw_text: str
    sentences: tuple[SentenceRecord, ...]


@dataclass(frozen=True)
class Cluster:
    cluster_id: str
    documents: tuple[Document, ...]
    references: tuple[ReferenceSummary, ...]

    def sentences(self) -> tuple[SentenceRecord, ...]:
        """All sentences in global_index order."""
        return tuple(s for doc in self.documents for s in doc.sentences)


@dataclass(frozen=True)
class Corpus:
    root_path: Path
    clusters: tuple[Cluster, ...]
    _by_id: dict = field(repr=False, hash=False, compare=False, default_factory=dict)

    def __post_init__(self):
        self._by_id.update({c.cluster_id: c for c in self.clusters})

    def cluster(self, cluster_id: str) -> Cluster:
        return self._by_id[cluster_id]


def segment_sentences(raw_text: str) -> list[str]:
    """Fallback sentence splitter for documents without a ``.sents`` file.

    Splits after ``.``, ``!``, ``?`` or ``…`` when followed by whitespace or
    end-of-text, and on every newline.  A closing quote right after the
    terminator stays attached to the finished sentence, so reported speech in
    news text is not cut in half.  Results are trimmed; empty pieces are
    dropped.
    """
    sentences: list[str] = []
    buf: list[str] = []

    def flush():
        piece = "".join(buf).strip()
        if piece:
            sentences.append(piece)
        buf.clear()

    i = 0
    n = len(raw_text)
    while i < n:
        ch = raw_text[i]
        if ch == "\n":
            flush()
            i += 1
            continue
        buf.append(ch)
        if ch in _TERMINATORS:
            j = i + 1
            while j < n and raw_text[j] in _CLOSING_QUOTES:
                buf.append(raw_text[j])
                j += 1
            if j >= n or raw_text[j].isspace():
                flush()
            i = j
        else:
            i += 1
    flush()
    return sentences


def concatenate_cluster(cluster: Cluster) -> list[SentenceRecord]:
    """Sentences of all documents, document-major, in global_index order."""
    return list(cluster.sentences())


def _read_text(path: Path) -> str:
    try:
        raw = path.read_bytes().decode("utf-8")
    except UnicodeDecodeError as err:
        raise EncodingError(path, err) from err
    return unicodedata.normalize("NFC", raw)


def _listing(directory: Path, suffix: str) -> list[Path]:
    return sorted(
        p for p in directory.iterdir()
        if p.is_file() and not p.name.startswith(".") and p.suffix == suffix
    )


def _load_cluster(cluster_dir: Path) -> Cluster:
    cluster_id = cluster_dir.name
    docs_dir = cluster_dir / "docs"
    refs_dir = cluster_dir / "refs"
    sents_dir = cluster_dir / "sents"
    if not docs_dir.is_dir():
        raise MissingDirectory(docs_dir)
    if not refs_dir.is_dir():
        raise MissingDirectory(refs_dir)

    doc_files = _listing(docs_dir, ".txt")
    ref_files = _listing(refs_dir, ".txt")
    if not doc_files:
        raise EmptyCluster(docs_dir, "cluster has no documents")
    if not ref_files:
        raise EmptyCluster(refs_dir, "cluster has no references")

    if not 2 <= len(doc_files) <= 5:
        warnings.warn(
            f"cluster {cluster_id}: {len(doc_files)} document(s), expected 2-5",
            CorpusShapeWarning,
            stacklevel=3,
        )
    if len(ref_files) != 2:
        warnings.warn(
            f"cluster {cluster_id}: {len(ref_files)} reference(s), expected 2",
            CorpusShapeWarning,
            stacklevel=3,
        )

    documents: list[Document] = []
    global_index = 0
    for doc_file in doc_files:
        doc_id = doc_file.stem
        raw_text = _read_text(doc_file)
        sents_file = sents_dir / f"{doc_id}.sents"
        if sents_file.is_file():
            texts = [line.strip() for line in _read_text(sents_file).split("\n")]
            texts = [t for t in texts if t]
        else:
            texts = segment_sentences(raw_text)
        records = []
        for sent_index, text in enumerate(texts):
            records.append(
                SentenceRecord(
                    cluster_id=cluster_id,
                    doc_id=doc_id,
                    sent_index_in_doc=sent_index,
                    global_index=global_index,
                    text=text,
                )
            )
            global_index += 1
        documents.append(Document(doc_id=doc_id, raw_text=raw_text, sentences=tuple(records)))

    references = tuple(
        ReferenceSummary(ref_id=f.stem, text=_read_text(f)) for f in ref_files
    )
    return Cluster(cluster_id=cluster_id, documents=tuple(documents), references=references)


def load_corpus(root) -> Corpus:
    """Load every cluster under ``root``; see the module docstring for layout."""
    root = Path(root)
    if not root.is_dir():
        raise MissingDirectory(root)
    cluster_dirs = sorted(
        d for d in root.iterdir() if d.is_dir() and not d.name.startswith(".")
    )
    if not cluster_dirs:
        raise MissingDirectory(root, "no cluster directories under")
    clusters = tuple(_load_cluster(d) for d in cluster_dirs)
    return Corpus(root_path=root, clusters=clusters)
