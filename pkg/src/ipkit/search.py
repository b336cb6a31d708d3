"""Bounded backtracking search for sum subsystems with checkable certificates.

Given a finite sequence x_1..x_N and a target set A, the search looks for
blocks H_1 < H_2 < ... < H_m (each block's largest index below the next
block's smallest) whose block sums y_n = sum over H_n keep the whole set
FS(y_1..y_m) u FP(y_1..y_m) inside A.

Candidate blocks are enumerated in a fixed canonical order: by increasing
largest index, then by increasing size, then lexicographically on the sorted
index list.  Depth-first search over that order makes the result a pure
function of (sequence, target, budget): the first solution in canonical
order, a proof of exhaustion of the bounded space, or a node-limit report
that deliberately claims nothing.

A good stage-m+1 candidate y must satisfy y in A, t+y in A for every t
already in the finite-sum set, and s*y in A for every s in the finite-product
set; that is exactly the stage constraint built by :func:`stage_constraint`,
and it is exact, so pruning on it never changes which complete block systems
are accepted.  :func:`brute_force_subsystem` re-derives the same answer with
no pruning and no incremental state, and :func:`verify_certificate` rechecks
a found certificate from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from itertools import combinations
from math import comb

from .errors import InputError, RefusalError, StructuralError
from .fsfp import (
    EMPTY_STATE,
    FsFpState,
    _check_terms,
    check_block_order,
    extend_state,
)
from .setspec import (
    SetSpec,
    dilation_preimage,
    intersect_all,
    parse_spec,
    render_spec,
    shift_preimage,
)

DEFAULT_MAX_BLOCK = 4
DEFAULT_NODE_LIMIT = 1_000_000

# brute_force_subsystem refuses above this many enumerable block systems
BRUTE_FORCE_CAP = 10_000_000

# verify_certificate enumerates 2^depth subsets; cap keeps hostile documents cheap
VERIFY_DEPTH_CAP = 22


@dataclass(frozen=True)
class SearchBudget:
    """Bounds that replace an unbounded existence argument with a finite search."""

    depth: int
    window: int
    max_block: int = DEFAULT_MAX_BLOCK
    node_limit: int = DEFAULT_NODE_LIMIT

    def __post_init__(self):
        for name in ("depth", "window", "max_block", "node_limit"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise InputError(f"budget field {name} must be an integer >= 1, got {value!r}")


class OutcomeKind(Enum):
    FOUND = "found"
    # complete search of the bounded space, nothing admissible in it
    EXHAUSTED = "exhausted"
    # gave up after node_limit candidate blocks; asserts nothing
    NODE_LIMIT = "node-limit"


@dataclass(frozen=True)
class Certificate:
    """Self-contained record of a successful search, re-checkable by third parties."""

    x: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    ys: tuple[int, ...]
    fs: frozenset[int]
    fp: frozenset[int]
    spec_text: str
    verified: bool = False


@dataclass(frozen=True)
class SearchOutcome:
    kind: OutcomeKind
    certificate: Certificate | None = None
    nodes: int = 0


def iter_blocks(lo: int, hi: int, max_block: int):
    """Canonical enumeration of index blocks inside [lo..hi].

    Order: increasing largest index; among equal largest index, increasing
    size; then lexicographic on the sorted index list.
    """
    for top in range(lo, hi + 1):
        for size in range(1, max_block + 1):
            for rest in combinations(range(lo, top), size - 1):
                yield rest + (top,)


def iter_block_systems(window: int, max_block: int, depth: int):
    """All block systems of given depth inside [1..window], in canonical DFS order."""

    def rec(lo: int, prefix: tuple):
        if len(prefix) == depth:
            yield prefix
            return
        for block in iter_blocks(lo, window, max_block):
            yield from rec(block[-1] + 1, prefix + (block,))

    yield from rec(1, ())


def count_block_systems(window: int, max_block: int, depth: int) -> int:
    """Exact count of the systems :func:`iter_block_systems` would yield."""
    # chains[p] = number of (k-1)-stage systems whose last block tops out at p
    sizes = range(1, max_block + 1)
    chains = {p: sum(comb(p - 1, s - 1) for s in sizes) for p in range(1, window + 1)}
    for _ in range(depth - 1):
        nxt = {}
        for p in range(1, window + 1):
            nxt[p] = sum(
                chains[q] * sum(comb(p - 1 - q, s - 1) for s in sizes)
                for q in range(1, p)
            )
        chains = nxt
    return sum(chains.values())


def stage_constraint(state: FsFpState, target: SetSpec) -> SetSpec:
    """The set of admissible next terms given what is already committed.

    y satisfies the returned spec iff appending y to the state keeps every
    finite sum and finite product inside ``target``.
    """
    parts = [target]
    parts.extend(shift_preimage(target, t) for t in sorted(state.fs))
    parts.extend(dilation_preimage(target, s) for s in sorted(state.fp))
    return intersect_all(parts)


def _extend_constraint(
    constraint: SetSpec, state: FsFpState, y: int, target: SetSpec
) -> tuple[FsFpState, SetSpec]:
    """Accept y: extend the state and refine the constraint incrementally.

    Only the sums and products that are genuinely new contribute preimage
    terms; the result is extensionally equal to rebuilding
    ``stage_constraint`` from the extended state.
    """
    new_state = extend_state(state, y)
    new_sums = new_state.fs - state.fs
    new_prods = new_state.fp - state.fp
    parts = [constraint]
    parts.extend(shift_preimage(target, t) for t in sorted(new_sums))
    parts.extend(dilation_preimage(target, s) for s in sorted(new_prods))
    return new_state, intersect_all(parts)


def _validated_window(x, budget: SearchBudget) -> tuple[int, ...]:
    terms = tuple(x)
    _check_terms(terms, what="sequence terms")
    if budget.window > len(terms):
        raise InputError(
            f"budget window {budget.window} exceeds sequence length {len(terms)}"
        )
    return terms[: budget.window]


def search_subsystem(x, target: SetSpec, budget: SearchBudget) -> SearchOutcome:
    """Depth-first search for a block system of ``budget.depth`` blocks.

    Returns the canonically first certificate, a proof that the bounded space
    holds none, or a node-limit report.  One node = one candidate block
    tested.  Found certificates are re-checked by :func:`verify_certificate`
    before being returned.
    """
    terms = _validated_window(x, budget)
    spec_text = render_spec(target)
    nodes = 0
    limit_hit = False
    path: list[tuple[int, ...]] = []

    def extend(stage: int, lo: int, state: FsFpState, constraint: SetSpec) -> bool:
        nonlocal nodes, limit_hit
        admissible = constraint.predicate()
        for block in iter_blocks(lo, budget.window, budget.max_block):
            if nodes >= budget.node_limit:
                limit_hit = True
                return False
            nodes += 1
            y = sum(terms[i - 1] for i in block)
            if not admissible(y):
                continue
            path.append(block)
            if stage == budget.depth:
                return True
            next_state, next_constraint = _extend_constraint(constraint, state, y, target)
            if extend(stage + 1, block[-1] + 1, next_state, next_constraint):
                return True
            if limit_hit:
                return False
            path.pop()
        return False

    found = extend(1, 1, EMPTY_STATE, target)
    if found:
        blocks = tuple(path)
        ys = tuple(sum(terms[i - 1] for i in block) for block in blocks)
        final = EMPTY_STATE
        for y in ys:
            final = extend_state(final, y)
        cert = Certificate(
            x=terms[: blocks[-1][-1]],
            blocks=blocks,
            ys=ys,
            fs=final.fs,
            fp=final.fp,
            spec_text=spec_text,
        )
        failure = verification_failure(cert)
        if failure is not None:
            raise StructuralError(f"search produced a bad certificate: {failure}")
        return SearchOutcome(OutcomeKind.FOUND, replace(cert, verified=True), nodes)
    if limit_hit:
        return SearchOutcome(OutcomeKind.NODE_LIMIT, None, nodes)
    return SearchOutcome(OutcomeKind.EXHAUSTED, None, nodes)


def brute_force_subsystem(x, target: SetSpec, budget: SearchBudget) -> SearchOutcome:
    """Independent oracle: test every block system in the budget, no pruning.

    Refuses budgets whose enumerable space exceeds ``BRUTE_FORCE_CAP``
    systems.  Membership runs through the interpreted ``contains`` path and
    the whole FS/FP sets are rebuilt per system, sharing nothing with the
    incremental machinery of :func:`search_subsystem`.
    """
    terms = _validated_window(x, budget)
    total = count_block_systems(budget.window, budget.max_block, budget.depth)
    if total > BRUTE_FORCE_CAP:
        raise RefusalError(
            f"brute force refused: {total} block systems exceed cap {BRUTE_FORCE_CAP}"
        )
    spec_text = render_spec(target)
    tested = 0
    for system in iter_block_systems(budget.window, budget.max_block, budget.depth):
        tested += 1
        ys = tuple(sum(terms[i - 1] for i in block) for block in system)
        fs: set[int] = set()
        for r in range(1, len(ys) + 1):
            for combo in combinations(ys, r):
                fs.add(sum(combo))
        fp: set[int] = set()
        for r in range(1, len(ys) + 1):
            for combo in combinations(ys, r):
                prod = 1
                for v in combo:
                    prod *= v
                fp.add(prod)
        if all(target.contains(v) for v in sorted(fs | fp)):
            cert = Certificate(
                x=terms[: system[-1][-1]],
                blocks=system,
                ys=ys,
                fs=frozenset(fs),
                fp=frozenset(fp),
                spec_text=spec_text,
                verified=True,
            )
            return SearchOutcome(OutcomeKind.FOUND, cert, tested)
    return SearchOutcome(OutcomeKind.EXHAUSTED, None, tested)


def verification_failure(cert: Certificate) -> str | None:
    """Recheck a certificate from scratch; None if it holds, else the first failure.

    Structural violations (bad block ordering, indices outside the recorded
    window) raise; value-level mismatches and membership failures are
    reported as strings so tampering is diagnosed, not crashed on.
    """
    target = parse_spec(cert.spec_text)
    blocks = check_block_order(cert.blocks)
    if not blocks:
        raise StructuralError("certificate has no blocks")
    if len(cert.ys) > VERIFY_DEPTH_CAP:
        raise RefusalError(
            f"certificate depth {len(cert.ys)} exceeds verification cap {VERIFY_DEPTH_CAP}"
        )
    for block in blocks:
        if block[-1] > len(cert.x):
            raise StructuralError(
                f"block index {block[-1]} outside recorded window of length {len(cert.x)}"
            )
    ys = tuple(sum(cert.x[i - 1] for i in block) for block in blocks)
    if ys != tuple(cert.ys):
        return f"recomputed block sums {ys} != recorded {tuple(cert.ys)}"
    fs: set[int] = set()
    fp: set[int] = set()
    for r in range(1, len(ys) + 1):
        for combo in combinations(ys, r):
            fs.add(sum(combo))
            prod = 1
            for v in combo:
                prod *= v
            fp.add(prod)
    if frozenset(fs) != cert.fs:
        return "recorded finite-sum set does not match recomputation"
    if frozenset(fp) != cert.fp:
        return "recorded finite-product set does not match recomputation"
    for v in sorted(fs | fp):
        if not target.contains(v):
            return f"element {v} of FS u FP is not in the target set"
    return None


def verify_certificate(cert: Certificate) -> bool:
    """True iff the certificate rechecks from scratch; see :func:`verification_failure`."""
    return verification_failure(cert) is None
