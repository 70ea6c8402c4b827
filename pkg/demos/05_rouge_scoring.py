#!/usr/bin/env python3
"""ROUGE-1/2 scoring: clipped overlap, precision/recall/F, and the
best-of-references rule used for multi-reference corpora."""

from vedsum import rouge_best, rouge_n, tokenize_for_rouge

candidate = "Giá gạo xuất khẩu tăng lên mức cao nhất hai năm."
reference = "Giá gạo xuất khẩu Việt Nam đạt mức cao nhất hai năm."

# Tokens are lowercased and stripped of surrounding punctuation.
print("candidate tokens:", tokenize_for_rouge(candidate))

for n in (1, 2):
    score = rouge_n(candidate, reference, n)
    print(
        f"ROUGE-{n}: P={score.precision:.4f} R={score.recall:.4f} F={score.f1:.4f}"
    )

# Overlap counts are clipped: repeating a word in the candidate cannot
# inflate the score beyond its count in the reference.
plain = rouge_n("gạo tăng", "gạo tăng giá", 1)
spam = rouge_n("gạo gạo gạo tăng", "gạo tăng giá", 1)
print("\nclipping: recall stays put, precision drops")
print(f"  plain: P={plain.precision:.4f} R={plain.recall:.4f}")
print(f"  spam : P={spam.precision:.4f} R={spam.recall:.4f}")

# With two gold references per cluster, the score of the better-matching
# reference is kept (the whole P/R/F triple, highest F wins).
references = [
    "Xuất khẩu gạo đạt kỷ lục mới trong năm nay.",
    "Giá gạo xuất khẩu đạt mức cao nhất trong hai năm.",
]
best = rouge_best(candidate, references, n=1)
print("\nbest-of-references F:", f"{best.f1:.4f}")
for i, ref in enumerate(references):
    print(f"  ref[{i}] F={rouge_n(candidate, ref, 1).f1:.4f}")
