"""The infinite-lexicon entropy and how finite lexicons approach it.

For s > 1 the Zipf normalizer converges to the Riemann zeta function and
the entropy has a closed form in zeta(s) and zeta'(s).  Below the sweep
shows two things worth seeing once:

  * finite-lexicon entropies increase toward the infinite value from
    below, fast for large s and slowly near the divergence at s = 1;
  * the infinite-lexicon curve reacts far more sharply to a small change
    of s near 1 than it does anywhere else, which is the regime natural
    languages occupy.
"""

from zipfentropy import ZipfModel, entropy_exact, entropy_infinite, zeta

print(f"{'s':>5} {'N=10^3':>10} {'N=10^5':>10} {'N=10^7':>10} {'infinite':>10}")
for s in (1.1, 1.3, 1.5, 2.0, 3.0):
    finite = [entropy_exact(ZipfModel(s, 10**k)) for k in (3, 5, 7)]
    h_inf = entropy_infinite(s)
    cells = " ".join(f"{h:>10.5f}" for h in finite)
    print(f"{s:>5.1f} {cells} {h_inf:>10.5f}")

print()
print("Sensitivity of the infinite-lexicon entropy to the exponent:")
for lo, hi in ((1.05, 1.10), (1.50, 1.55), (2.00, 2.05)):
    drop = entropy_infinite(lo) - entropy_infinite(hi)
    print(f"  H({lo}) - H({hi}) = {drop:8.4f} bits")

print()
z = zeta(1.5)
print(f"Underlying special values at s=1.5: zeta = {z.zeta:.9f} "
      f"(certified to {z.abs_error_bound:.1e})")
