"""Walkthrough: target-set expressions and their preimages.

Run with: python3 demos/02_set_expressions.py
"""

from ipkit import (
    Bitmap,
    Complement,
    Congruence,
    Intersection,
    dilation_preimage,
    parse_spec,
    render_spec,
    shift_preimage,
)

# a target set is an expression tree; the DSL is the portable surface form
spec = parse_spec("and(mod(6,0), not(bits(6 36; 1000)))")
print("parsed:", render_spec(spec))
for v in (6, 12, 36, 42, 7):
    print(f"  {v} in A? {spec.contains(v)}")

# bitmaps are finite tables; queries beyond the bound are errors, not False
table = Bitmap(frozenset({2, 3, 5, 7}), bound=10)
print("\n7 in table:", table.contains(7))
try:
    table.contains(11)
except LookupError as exc:
    print("11 in table:", exc)

# evaluation is left to right with short-circuiting, so a cheap congruence
# placed first shields a bounded bitmap from out-of-domain queries
shielded = Intersection((Congruence(6, 0), Complement(Bitmap(frozenset({6}), 100))))
print("\nshielded.contains(601):", shielded.contains(601))  # 601 % 6 != 0, bitmap never asked

# dilation preimage: {x : n*x in A}.  congruences and intervals rewrite in
# closed form instead of wrapping the predicate
print("\ndil 2 of mod(6,0) :", render_spec(dilation_preimage(parse_spec("mod(6,0)"), 2)))
print("dil 2 of mod(6,3) :", render_spec(dilation_preimage(parse_spec("mod(6,3)"), 2)))  # unsatisfiable
print("dil 3 of mod(5,2) :", render_spec(dilation_preimage(parse_spec("mod(5,2)"), 3)))
print("dil 3 of range(10,98):", render_spec(dilation_preimage(parse_spec("range(10,98)"), 3)))

# shift preimage: {x : x + t in A}
print("\nshift 4 of mod(6,3) :", render_spec(shift_preimage(parse_spec("mod(6,3)"), 4)))
print("shift 40 of geq(30)  :", render_spec(shift_preimage(parse_spec("geq(30)"), 40)))

# other node shapes keep a lazy wrapper instead of a rewrite; both forms
# denote the same set, the closed ones are just cheaper and render smaller
mixed = parse_spec("or(mod(4,0), geq(50))")
wrapped = dilation_preimage(mixed, 2)
print("\ndil 2 of", render_spec(mixed), "->", render_spec(wrapped))
assert all(wrapped.contains(v) == mixed.contains(2 * v) for v in range(1, 200))
print("wrapper agrees with the definition on 1..199")

# render and parse are exact inverses, so specs survive certificate files
text = "and(or(mod(3,1),range(2,9)),not(mod(5,0)))"
assert render_spec(parse_spec(text)) == text
print("\nround trip ok:", text)
