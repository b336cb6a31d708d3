"""Walkthrough: finite-sum and finite-product sets.

Run with: python3 demos/01_fs_fp_sets.py
"""

from ipkit import extend_state, finite_products, finite_sums, state_of
from ipkit.fsfp import EMPTY_STATE

ys = (2, 3, 5)
print("terms:", ys)
print("FS =", sorted(finite_sums(ys)))   # every non-empty subset sum
print("FP =", sorted(finite_products(ys)))

# duplicates are allowed in the term list; the value sets collapse them
print("\nFS(2,2) =", sorted(finite_sums((2, 2))))

# the incremental identity: adding one term only needs the old set
fs = finite_sums(ys)
y = 7
print("\nappend", y, "->", sorted(fs | {y} | {t + y for t in fs}))
print("recomputed      ->", sorted(finite_sums(ys + (y,))))

# |FS| <= 2^m - 1, with equality exactly when no two subsets collide
powers = (1, 2, 4, 8, 16)
print("\npowers of two:", len(finite_sums(powers)), "distinct sums of", 2 ** len(powers) - 1, "subsets")
ones = (1, 1, 1, 1, 1)
print("all ones:     ", len(finite_sums(ones)), "distinct sums of", 2 ** len(ones) - 1, "subsets")

# the running state used by the search: terms + both sets, always coherent
state = EMPTY_STATE
for y in (6, 6, 24):
    state = extend_state(state, y)
    print(f"\nafter y={y}: fs={sorted(state.fs)}")
    print(f"           fp={sorted(state.fp)}")

# same thing in one call
assert state == state_of((6, 6, 24))

# products leave machine words almost immediately; everything here is exact
big = state_of(tuple(10**6 + i for i in range(8)))
print("\nlargest finite product of eight ~10^6 terms has", len(str(max(big.fp))), "digits")
