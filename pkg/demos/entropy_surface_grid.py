"""Entropy as a function of exponent and lexicon size, as plot-ready data.

Sweeps the bracket midpoint over an (s, N) grid.  Reading across a row
the entropy falls with s; reading down a column it rises with N, with
diminishing returns once s > 1 because the tail mass converges.  Pipe
the CLI equivalent into a plotting tool for the picture:

    zipfentropy surface --s-min 0.5 --s-max 2.5 --s-step 0.1 \
        --n-list 100,10000,1000000 --format csv
"""

from zipfentropy import entropy_surface

S_VALUES = [0.5 + 0.25 * i for i in range(9)]
N_VALUES = [10**k for k in range(2, 7, 2)]

points = entropy_surface(S_VALUES, N_VALUES)

header = "s".rjust(6) + "".join(f"N=10^{len(str(n)) - 1}".rjust(12) for n in N_VALUES)
print(header)
for s in S_VALUES:
    row = [p for p in points if p.s == s]
    cells = "".join(f"{p.h_mid:12.4f}" for p in sorted(row, key=lambda p: p.n))
    print(f"{s:6.2f}{cells}")

print()
widest = max(points, key=lambda p: p.h_gap)
print(f"Widest bracket on this grid: gap {widest.h_gap:.4f} bits at "
      f"s={widest.s}, N={widest.n}.")
print("Steep laws on small lexicons concentrate probability into the few head")
print("ranks the integral has to straddle, so that corner is where the bracket")
print("is loosest; shallow laws dilute the same slack across a huge normalizer.")
