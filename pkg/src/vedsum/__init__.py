"""vedsum: centroid-based extractive multi-document summarization toolkit.

Sentences of a document cluster are embedded, grouped with deterministic
K-means, and the sentence nearest each centroid forms the summary; quality
is measured with multi-reference best-F ROUGE-1/2.
"""

from .corpus import (
    Cluster,
    Corpus,
    Document,
    ReferenceSummary,
    SentenceRecord,
    concatenate_cluster,
    load_corpus,
    segment_sentences,
)
from .embed import (
    EmbeddingMatrix,
    ProviderSpec,
    embed_sentences,
    hash_embed,
    http_embed,
    read_cache,
    write_cache,
)
from .harness import (
    ComparisonTable,
    PublishedRow,
    RunReport,
    compare,
    corpus_fingerprint,
    evaluate,
    load_baselines,
    sweep_k,
)
from .kmeans import KMeansConfig, KMeansResult, kmeans_fit, nearest_to_centroids
from .rouge import RougeScore, rouge_best, rouge_n, tokenize_for_rouge
from .summarize import (
    BatchResult,
    Summary,
    SummarizerConfig,
    summarize_cluster,
    summarize_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "Cluster",
    "Corpus",
    "Document",
    "ReferenceSummary",
    "SentenceRecord",
    "concatenate_cluster",
    "load_corpus",
    "segment_sentences",
    "EmbeddingMatrix",
    "ProviderSpec",
    "embed_sentences",
    "hash_embed",
    "http_embed",
    "read_cache",
    "write_cache",
    "ComparisonTable",
    "PublishedRow",
    "RunReport",
    "compare",
    "corpus_fingerprint",
    "evaluate",
    "load_baselines",
    "sweep_k",
    "KMeansConfig",
    "KMeansResult",
    "kmeans_fit",
    "nearest_to_centroids",
    "RougeScore",
    "rouge_best",
    "rouge_n",
    "tokenize_for_rouge",
    "BatchResult",
    "Summary",
    "SummarizerConfig",
    "summarize_cluster",
    "summarize_corpus",
    "__version__",
]
