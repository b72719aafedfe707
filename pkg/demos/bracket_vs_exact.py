"""How tight is the integral bracket around the exact Zipf entropy?

The exact entropy needs a full O(N) pass over the lexicon, while the
bracket needs only a handful of head terms plus two antiderivative
evaluations.  This script sweeps lexicon sizes at a fixed exponent and
shows the bracket pinning the exact value from both sides, with a gap
that settles to a constant as N grows.
"""

import time

from zipfentropy import ZipfModel, entropy_bounds, entropy_exact

S = 1.2

print(f"Zipf exponent s = {S}")
print(f"{'N':>10} {'lower':>12} {'exact':>12} {'upper':>12} {'gap':>9}")
for exponent in range(1, 8):
    n = 10**exponent
    model = ZipfModel(S, n)
    b = entropy_bounds(model)
    h = entropy_exact(model)
    assert b.lower <= h <= b.upper
    print(f"{n:>10} {b.lower:>12.6f} {h:>12.6f} {b.upper:>12.6f} {b.upper - b.lower:>9.5f}")

print()
print("Timing the two routes at N = 10^8 (normalizer built once, outside both timers):")
model = ZipfModel(S, 10**8)

start = time.perf_counter()
entropy_exact(model)
exact_time = time.perf_counter() - start

start = time.perf_counter()
b = entropy_bounds(model)
bracket_time = time.perf_counter() - start

print(f"  exact sum      {exact_time * 1e3:10.2f} ms")
print(f"  bracket        {bracket_time * 1e3:10.2f} ms  (midpoint {0.5 * (b.lower + b.upper):.6f})")
print("Past the exact-summation limit the bracket is the only practical route,")
print("and its midpoint sits within half a gap of the truth.")
