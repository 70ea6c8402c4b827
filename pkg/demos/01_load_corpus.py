#!/usr/bin/env python3
"""Walk through the corpus layer: directory layout, sentence records,
fallback segmentation, and cluster concatenation."""

from vedsum import concatenate_cluster, load_corpus, segment_sentences
from vedsum.data import mini_corpus_path

# A corpus is a directory of clusters; each cluster holds 2-5 related news
# documents plus two human-written reference summaries:
#
#   <root>/<cluster_id>/docs/<doc_id>.txt
#   <root>/<cluster_id>/refs/<ref_id>.txt
#   <root>/<cluster_id>/sents/<doc_id>.sents   (optional pre-segmentation)
corpus = load_corpus(mini_corpus_path())
print(f"loaded {len(corpus.clusters)} clusters from {corpus.root_path}\n")

for cluster in corpus.clusters:
    doc_counts = {d.doc_id: len(d.sentences) for d in cluster.documents}
    print(f"cluster {cluster.cluster_id}: docs={doc_counts}, refs={len(cluster.references)}")

# Documents without a .sents file go through the fallback splitter, which
# honours terminators (. ! ? …), newlines, and closing quotes:
sample = 'Ông A nói: "Nước lên nhanh." Mọi người đã rời đi an toàn.'
print("\nfallback segmentation of:", sample)
for i, sentence in enumerate(segment_sentences(sample)):
    print(f"  [{i}] {sentence}")

# Summarization treats a cluster as one concatenated paragraph; every
# sentence keeps its provenance and position:
cluster = corpus.cluster("c01")
print(f"\nconcatenated cluster {cluster.cluster_id}:")
for record in concatenate_cluster(cluster)[:5]:
    print(f"  global_index={record.global_index} key={record.key}")
    print(f"      {record.text}")
print("  ...")
