"""Walkthrough: finite-depth FS witnesses, refutations, and Hindman colorings.

Run with: python3 demos/04_witnesses_and_colorings.py
"""

from ipkit import (
    Coloring,
    find_fs_witness,
    hindman_finite,
    ip_star_refute,
    parse_spec,
    scale_witness,
)

# an FS witness of depth k inside bound N: k strictly increasing terms from
# [1, N] whose full finite-sum set stays in the target
target = parse_spec("mod(3,0)")
w = find_fs_witness(target, depth=3, bound=30)
print("depth-3 witness for mod(3,0):", w.terms, " FS =", sorted(w.fs))

# terms come from [1, N] but the sums may leave the window; only membership
# in the target is required of them
w2 = find_fs_witness(parse_spec("mod(2,0)"), depth=2, bound=4)
print("terms within 4, sums up to", max(w2.fs), ":", w2.terms)

# refuting an IP* claim at depth (k, N) means exhibiting a witness for the
# complement.  "no refutation" is a statement about this window only.
hit = ip_star_refute(parse_spec("mod(6,0)"), depth=3, bound=10)
print("\nmod(6,0) is refuted at (3,10):", hit.terms, " FS =", sorted(hit.fs))

miss = ip_star_refute(parse_spec("mod(6,0)"), depth=6, bound=60)
print("but at (6,60) no refutation exists:", miss)

# scaling a witness by c turns an FS set in A into one in {x : x/c in A}
scaled = scale_witness(w, 5)
print("\nscaled by 5:", scaled.terms, " FS =", sorted(scaled.fs))

# a coloring assigns each of 1..N one of r colors; hindman_finite looks for
# a monochromatic FS set with sums inside the window
col = Coloring((0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0))  # colors of 1..12
color, found = hindman_finite(col, depth=2)
print(f"\n2-coloring of 1..12: witness {found.terms} in color {color}, sums {sorted(found.fs)}")

# below the threshold there are colorings with no witness at all
bad = Coloring((0, 0, 1, 0, 1, 1, 1, 0))  # {1,2,4,8} vs {3,5,6,7}, N = 8
print("adversarial coloring of 1..8:", hindman_finite(bad, depth=2))

# at N = 9 every 2-coloring gives in; an exhaustive check over all 2^9
# colorings is quick enough to watch
worst = 0
for code in range(2 ** 9):
    col = Coloring(tuple((code >> i) & 1 for i in range(9)))
    got = hindman_finite(col, depth=2)
    assert got is not None
    worst = max(worst, max(got[1].fs))
print("all 512 colorings of 1..9 forced a witness (largest sum needed:", worst, ")")
