"""Exact finite-sum and finite-product set algebra over positive integers.

For a tuple of terms (y_1, ..., y_m) the finite-sum set is the set of values
sum(F) over all non-empty index subsets F, and the finite-product set the
same with products.  Everything is computed with Python's arbitrary-precision
integers: products of even modest block sums overflow machine words fast.

Terms must be >= 1.  Zero is rejected everywhere: products through 0
degenerate and nothing downstream wants it.

Sets are value sets; two subsets producing the same value collapse to one
element, so |FS| <= 2^m - 1 with equality only for collision-free term lists
such as (1, 2, 4, ..., 2^(m-1)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, StructuralError


def _check_terms(terms, what: str = "terms") -> None:
    if not terms:
        raise InputError(f"{what} must be non-empty")
    for t in terms:
        if not isinstance(t, int) or isinstance(t, bool):
            raise InputError(f"{what} must be integers, got {t!r}")
        if t < 1:
            raise InputError(f"{what} must be >= 1, got {t}")


def finite_sums(ys) -> frozenset[int]:
    """All non-empty subset sums of ``ys``, as a value set."""
    ys = tuple(ys)
    _check_terms(ys)
    acc: set[int] = set()
    for y in ys:
        acc |= {t + y for t in acc}
        acc.add(y)
    return frozenset(acc)


def finite_products(ys) -> frozenset[int]:
    """All non-empty subset products of ``ys``, as a value set."""
    ys = tuple(ys)
    _check_terms(ys)
    acc: set[int] = set()
    for y in ys:
        acc |= {s * y for s in acc}
        acc.add(y)
    return frozenset(acc)


def normalize_block(block) -> tuple[int, ...]:
    """Validate one index block: non-empty, all >= 1, duplicate-free; returns it sorted."""
    indices = tuple(block)
    _check_terms(indices, what="block indices")
    if len(set(indices)) != len(indices):
        raise InputError(f"block {indices} contains duplicate indices")
    return tuple(sorted(indices))


def check_block_order(blocks) -> tuple[tuple[int, ...], ...]:
    """Validate a whole block system: consecutive blocks must satisfy max < min."""
    normalized = tuple(normalize_block(b) for b in blocks)
    for i in range(len(normalized) - 1):
        left, right = normalized[i], normalized[i + 1]
        if left[-1] >= right[0]:
            raise StructuralError(
                f"blocks {i + 1} and {i + 2} out of order: "
                f"max {left[-1]} >= min {right[0]}"
            )
    return normalized


def subsystem_sums(x, blocks) -> tuple[int, ...]:
    """Block sums y_n = sum of x over the n-th block of indices (1-based).

    ``blocks`` must be strictly separated: the largest index of each block is
    below the smallest index of the next.
    """
    x = tuple(x)
    _check_terms(x)
    normalized = check_block_order(blocks)
    for block in normalized:
        if block[-1] > len(x):
            raise InputError(
                f"block index {block[-1]} out of range for sequence of length {len(x)}"
            )
    return tuple(sum(x[i - 1] for i in block) for block in normalized)


@dataclass(frozen=True)
class FsFpState:
    """Terms chosen so far together with their finite-sum and finite-product sets.

    The three fields are kept coherent by construction: ``fs`` and ``fp`` must
    equal the enumerations of ``ys``, which is re-checked on every build.
    """

    ys: tuple[int, ...]
    fs: frozenset[int]
    fp: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "ys", tuple(self.ys))
        object.__setattr__(self, "fs", frozenset(self.fs))
        object.__setattr__(self, "fp", frozenset(self.fp))
        if self.ys:
            _check_terms(self.ys)
            want_fs = finite_sums(self.ys)
            want_fp = finite_products(self.ys)
        else:
            want_fs = frozenset()
            want_fp = frozenset()
        if self.fs != want_fs or self.fp != want_fp:
            raise StructuralError(
                f"incoherent state: fs/fp do not match the enumerations of ys={self.ys}"
            )

    @property
    def depth(self) -> int:
        return len(self.ys)


EMPTY_STATE = FsFpState((), frozenset(), frozenset())


def extend_state(state: FsFpState, y: int) -> FsFpState:
    """Append one term; fs and fp grow by the new element and all its combinations."""
    if not isinstance(y, int) or isinstance(y, bool) or y < 1:
        raise InputError(f"appended term must be an integer >= 1, got {y!r}")
    fs = state.fs | {y} | {t + y for t in state.fs}
    fp = state.fp | {y} | {s * y for s in state.fp}
    return FsFpState(state.ys + (y,), fs, fp)


def state_of(ys) -> FsFpState:
    """Fold :func:`extend_state` over ``ys`` starting from the empty state."""
    ys = tuple(ys)
    _check_terms(ys)
    state = EMPTY_STATE
    for y in ys:
        state = extend_state(state, y)
    return state
