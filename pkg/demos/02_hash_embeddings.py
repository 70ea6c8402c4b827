#!/usr/bin/env python3
"""The deterministic feature-hashing embedder and the cache/http providers
that stand in for real transformer encoders."""

import numpy as np

from vedsum import ProviderSpec, embed_sentences, hash_embed, load_corpus, read_cache, write_cache
from vedsum.corpus import concatenate_cluster
from vedsum.data import mini_corpus_path

# hash_embed maps text to a unit vector through 64-bit FNV-1a over unigram
# and adjacent-bigram features.  No model, no randomness: the same text
# always produces the same vector, on any machine.
vec = hash_embed("xin chào các bạn", dim=256)
print("dim:", vec.shape[0])
print("L2 norm:", np.linalg.norm(vec))
print("nonzero components:", np.count_nonzero(vec))
print("deterministic:", np.array_equal(vec, hash_embed("xin chào các bạn", dim=256)))

# Tokenization is whitespace-based after NFC normalization and lowercasing,
# so spacing and letter case do not change the vector:
same = hash_embed("XIN   chào\tcác bạn", dim=256)
print("whitespace/case invariant:", np.array_equal(vec, same))

# Providers share one contract: a matrix with one row per sentence, in input
# order, keyed by "<cluster>/<doc>/<sentence>".
corpus = load_corpus(mini_corpus_path())
sentences = concatenate_cluster(corpus.cluster("c01"))
matrix = embed_sentences(ProviderSpec.hashing(256), sentences)
print(f"\nembedded {len(matrix)} sentences, dim={matrix.dim}")
print("first key:", matrix.keys[0])

# Real transformer vectors are produced offline into a line-oriented JSON
# cache and replayed through the cache provider (same contract, same rows):
cache_file = "/tmp/vedsum_demo_cache.jsonl"
write_cache(matrix, cache_file)
reloaded = read_cache(cache_file)
print("cache round-trip exact:", reloaded.vectors.tobytes() == matrix.vectors.tobytes())

replayed = embed_sentences(ProviderSpec.cache(cache_file), sentences)
print("cache provider serves identical rows:", np.array_equal(replayed.vectors, matrix.vectors))
