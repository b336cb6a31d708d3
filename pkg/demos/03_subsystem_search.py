"""Walkthrough: searching for a sum subsystem whose FS and FP land in a target.

Run with: python3 demos/03_subsystem_search.py
"""

import dataclasses

from ipkit import (
    SearchBudget,
    brute_force_subsystem,
    parse_spec,
    search_subsystem,
    verification_failure,
)

# the ambient sequence: x_1..x_64 = 1..64.  we want disjoint index blocks
# H_1 < H_2 < ... whose block sums y_n have FS u FP inside the target
x = tuple(range(1, 65))
spec = parse_spec("mod(6,0)")
budget = SearchBudget(depth=5, window=64, max_block=4, node_limit=1_000_000)

outcome = search_subsystem(x, spec, budget)
print("outcome:", outcome.kind.value, f"({outcome.nodes} nodes)")
cert = outcome.certificate
for i, (block, y) in enumerate(zip(cert.blocks, cert.ys), start=1):
    print(f"  H{i} = {set(block)}  y{i} = {y}")
print("  FS:", sorted(cert.fs))
print("  FP:", sorted(cert.fp))

# the search verifies its own result from scratch before returning it
print("verified:", cert.verified)

# blocks are tried in canonical order (max index, then size, then entries),
# so the certificate is the canonically first solution and reruns agree
again = search_subsystem(x, spec, budget)
assert again.certificate == cert

# the brute-force route enumerates every block system with an interpreted
# membership check; it exists to disagree with the search if either is wrong
brute = brute_force_subsystem(tuple(range(1, 13)), spec, SearchBudget(depth=2, window=12, max_block=2))
fast = search_subsystem(tuple(range(1, 13)), spec, SearchBudget(depth=2, window=12, max_block=2))
print("\nbrute force and search agree:", brute.certificate == fast.certificate)

# verification is a separate from-scratch recheck, usable on untrusted input;
# the claimed spec text travels inside the certificate
print("\nhonest certificate:", verification_failure(cert))  # None means clean

forged = dataclasses.replace(cert, spec_text="mod(12,0)")
print("forged spec_text: ", verification_failure(forged))

# an unsatisfiable target exhausts the space instead of finding anything
none = search_subsystem(x, parse_spec("none"), SearchBudget(depth=1, window=8, max_block=2))
print("\nimpossible target:", none.kind.value, f"({none.nodes} nodes)")

# a node limit stops early and asserts nothing either way
capped = search_subsystem(x, parse_spec("mod(997,1)"), SearchBudget(depth=3, window=64, max_block=2, node_limit=50))
print("tiny node budget: ", capped.kind.value, f"({capped.nodes} nodes)")
