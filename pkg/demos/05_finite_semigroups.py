"""Walkthrough: structure of finite semigroups, from the table up.

Run with: python3 demos/05_finite_semigroups.py
"""

from ipkit import (
    FiniteSemigroup,
    group_check,
    ideal_structure,
    idempotent_order,
    idempotents,
    product_formula_check,
)
from ipkit.semigroup import (
    all_semigroups,
    cyclic_group,
    multiplication_mod,
    transformation_semigroup,
)

# a semigroup is just an associative table over {0..n-1}; the constructor
# checks associativity and reports the first bad triple if there is one
sg = multiplication_mod(6)
print("multiplication mod 6, order", sg.order)
print("idempotents:", sorted(idempotents(sg)))  # e*e = e

try:
    FiniteSemigroup(((1, 0), (0, 0)))
except ValueError as exc:
    print("\nbad table:", exc)

# minimal left/right ideals and the kernel (their common union)
ideals = ideal_structure(sg)
print("\nminimal left ideals: ", [sorted(s) for s in ideals.minimal_left])
print("minimal right ideals:", [sorted(s) for s in ideals.minimal_right])
print("kernel:", sorted(ideals.kernel))

# an idempotent is minimal in the e <= f order exactly when it lies in the
# kernel; idempotent_order cross-checks that before reporting
order = idempotent_order(sg)
print("minimal idempotents:", sorted(order.minimal))

# inside the kernel, each (minimal left) n (minimal right) intersection is a
# group; group_check proves it by running the group axioms directly
L = next(iter(ideals.minimal_left))
R = next(iter(ideals.minimal_right))
meet = L & R
print("\nL n R =", sorted(meet), "is a group:", group_check(sg, L, R))

# the shift-then-dilate membership formula, evaluated both ways on a
# concrete semigroup; agreement over all inputs is what the CLI sweeps
agree = all(
    product_formula_check(sg, p, q, subset)
    for p in range(sg.order)
    for q in range(sg.order)
    for subset in [frozenset({0}), frozenset({0, 2, 4}), frozenset(range(6))]
)
print("\nproduct formula agrees on the sampled subsets:", agree)

# small orders can be enumerated outright: 1, 8, 113 tables for n = 1, 2, 3
for n in (1, 2, 3):
    print(f"semigroup tables of order {n}:", len(all_semigroups(n)))

# composition of self-maps of a finite set always closes into a semigroup:
# here a 3-cycle and a constant map generate the rotations plus all three
# constants, and the constants form the kernel
t = transformation_semigroup(((1, 2, 0), (0, 0, 0)))
print("\nclosure of two self-maps of {0,1,2} has order", t.order)
print("its kernel:", sorted(ideal_structure(t).kernel))

# groups are their own kernel with a single idempotent
z5 = cyclic_group(5)
print("\nZ5: kernel =", sorted(ideal_structure(z5).kernel), " idempotents =", sorted(idempotents(z5)))
