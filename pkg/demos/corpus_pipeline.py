"""End-to-end corpus analysis on a small built-in text.

Tokenize, count, estimate the Zipf exponent by log-log regression, and
compare the plug-in entropy against the Good-Turing smoothed entropy.
The text is deliberately tiny so every number can be eyeballed; swap in
a file of your own via read_tokens to make the estimates meaningful.
"""

from zipfentropy import (
    count,
    empirical_entropy,
    fit_zipf,
    good_turing,
    smoothed_entropy,
    tokenize,
)

TEXT = """
The sea rose and the sea fell, and the boat rode the sea as the wind
rose.  The old man watched the wind and the sea, and the boy watched
the old man: the sea was the whole of the world, and the world was
water and wind and the long patience of an old man in a small boat.
"""

tokens = tokenize(TEXT)
table = count(tokens)
print(f"{table.total_tokens} tokens, {table.distinct_types} distinct types")
print()

print("Top of the rank-frequency table:")
for rank, (name, c) in enumerate(table.entries[:8], start=1):
    print(f"  {rank:>2}  {name:<9} {c:>3}  {c / table.total_tokens:.3f}")
print()

fit = fit_zipf(table)
print(f"Zipf exponent by regression: s_hat = {fit.s_hat:.3f} "
      f"(r^2 = {fit.r_squared:.3f} over ranks {fit.rank_range[0]}..{fit.rank_range[1]})")
print()

dist = good_turing(table)
h_plug = empirical_entropy(table)
h_smooth = smoothed_entropy(dist, table)
print(f"plug-in entropy          {h_plug:.4f} bits/token")
print(f"smoothed entropy         {h_smooth:.4f} bits/token")
print(f"reserved for unseen words {dist.p_unseen_total:.4f} of the probability mass")
print()
print("Smoothing moves mass from observed types toward never-seen ones, so a")
print("singleton-heavy corpus like this one gives up a sizable share of its")
print("observed entropy and holds it in reserve for the unseen vocabulary.")
