"""Telling sources apart by the shape of their rank-frequency curves.

Two corpora drawn from the same Zipf law should have nearly identical
rank-probability curves even though they share almost no specific word
counts; a corpus drawn with a different exponent should not.  The
dissimilarity below is the mean squared gap between log-probabilities
at matched ranks, so it compares curve shapes, not vocabularies.
"""

import numpy as np

from zipfentropy import ZipfModel, table_from_counts, zipf_dissimilarity

TOKENS = 10**5
SIZE = 2000


def corpus(s: float, seed: int):
    ranks = ZipfModel(s, SIZE).sample(TOKENS, seed=seed)
    return table_from_counts(np.bincount(ranks)[1:])


a1 = corpus(1.1, seed=1)
a2 = corpus(1.1, seed=2)
b = corpus(1.6, seed=3)

same = zipf_dissimilarity(a1, a2)
different = zipf_dissimilarity(a1, b)

print(f"same source (s=1.1 twice):       {same.value:.5f} over {same.shared_ranks} shared ranks")
print(f"different source (s=1.1 vs 1.6): {different.value:.5f} over {different.shared_ranks} shared ranks")
print()

report = zipf_dissimilarity(a1, b, keep_contributions=True)
contrib = np.asarray(report.per_rank_contributions)
head = contrib[:10].mean()
tail = contrib[-10:].mean()
print("Where the difference lives:")
print(f"  mean contribution, ranks 1..10:      {head:.5f}")
print(f"  mean contribution, last 10 ranks:    {tail:.5f}")
print()
print("A steeper law starves its tail, so the deep ranks dominate the gap;")
print("capping the comparison depth with max_rank makes the measure robust")
print("to corpus-size mismatch.")
