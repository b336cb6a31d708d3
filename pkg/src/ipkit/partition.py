"""Finite-depth FS witnesses, IP* refutation, and finite Hindman colorings.

A set B "looks IP" at depth k if it contains x_1 < ... < x_k together with
every non-empty subset sum; such a tuple is an :class:`FsWitness`.  Finding a
witness inside the complement of A refutes A being IP* (a set meeting every
FS-structured set).  The converse direction does not exist at finite depth:
absence of a witness within bounds proves nothing, which is why the API says
"refute" and never "prove".

Witness terms are required strictly increasing to canonicalize the search;
block sums in a subsystem certificate may repeat, and that asymmetry is
deliberate (a witness is a set-like object, a subsystem is a stage list).

:func:`hindman_finite` plays the partition game on a finite window: all
terms and all their subset sums must stay inside [1..N], where the coloring
is defined, and share one color.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .fsfp import finite_sums
from .setspec import Complement, SetSpec


@dataclass(frozen=True)
class FsWitness:
    """Strictly increasing terms plus their finite-sum set (derived, coherent)."""

    terms: tuple[int, ...]
    fs: frozenset[int] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise InputError("witness needs at least one term")
        for a, b in zip(self.terms, self.terms[1:]):
            if a >= b:
                raise InputError(f"witness terms must be strictly increasing, got {self.terms}")
        object.__setattr__(self, "fs", finite_sums(self.terms))

    @property
    def depth(self) -> int:
        return len(self.terms)


def find_fs_witness(target: SetSpec, depth: int, bound: int) -> FsWitness | None:
    """Lexicographically first witness with terms <= bound and all sums in target.

    Sums may exceed ``bound``; only the terms live inside the window,
    membership of sums is the target's business.  Returns None only after
    complete enumeration (prefixes whose partial sums already escape the
    target are pruned, which skips no viable candidate).
    """
    if depth < 1:
        raise InputError(f"witness depth must be >= 1, got {depth}")
    if bound < depth:
        raise InputError(f"window bound {bound} too small for depth {depth}")
    admissible = target.predicate()
    chosen: list[int] = []

    def extend(last: int, sums: tuple[int, ...]) -> bool:
        for nxt in range(last + 1, bound + 1):
            if not admissible(nxt):
                continue
            ok = True
            for t in sums:
                if not admissible(t + nxt):
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(nxt)
            if len(chosen) == depth:
                return True
            if extend(nxt, sums + tuple(t + nxt for t in sums) + (nxt,)):
                return True
            chosen.pop()
        return False

    if extend(0, ()):
        return FsWitness(tuple(chosen))
    return None


def ip_star_refute(target: SetSpec, depth: int, bound: int) -> FsWitness | None:
    """A witness wholly inside the complement of ``target``, or None.

    A returned witness refutes the claim that ``target`` meets every
    FS-structured set.  None means only: no refutation within (depth, bound).
    """
    return find_fs_witness(Complement(target), depth, bound)


def scale_witness(witness: FsWitness, factor: int) -> FsWitness:
    """Multiply every term by ``factor``; the finite-sum set scales with it.

    If the input avoids the dilation preimage of A by ``factor``, the output
    avoids A itself.
    """
    if factor < 1:
        raise InputError(f"scale factor must be >= 1, got {factor}")
    if factor == 1:
        return witness
    return FsWitness(tuple(factor * t for t in witness.terms))


@dataclass(frozen=True)
class Coloring:
    """A total coloring of [1..N]; colors[v-1] is the color of v."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if not self.colors:
            raise InputError("coloring must cover at least [1..1]")
        for c in self.colors:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise InputError(f"color indices must be integers >= 0, got {c!r}")

    @property
    def bound(self) -> int:
        return len(self.colors)

    @property
    def palette(self) -> int:
        return max(self.colors) + 1

    def color_of(self, value: int) -> int:
        if not 1 <= value <= self.bound:
            raise InputError(f"value {value} outside colored domain [1..{self.bound}]")
        return self.colors[value - 1]


def parse_coloring(text: str) -> Coloring:
    """Parse the "value color_index" line format; every value 1..N must appear once."""
    assignment: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"coloring line {lineno}: expected 'value color', got {line!r}")
        try:
            value, color = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"coloring line {lineno}: non-integer field in {line!r}") from None
        if value in assignment:
            raise InputError(f"coloring line {lineno}: value {value} colored twice")
        assignment[value] = color
    if not assignment:
        raise InputError("coloring file assigns no values")
    bound = max(assignment)
    missing = [v for v in range(1, bound + 1) if v not in assignment]
    if missing:
        raise InputError(f"coloring is not total on [1..{bound}]: missing {missing[:5]}")
    return Coloring(tuple(assignment[v] for v in range(1, bound + 1)))


def hindman_finite(coloring: Coloring, depth: int) -> tuple[int, FsWitness] | None:
    """First monochromatic witness whose terms and sums all stay in [1..N].

    Sums leaving the window disqualify a candidate: the coloring is undefined
    there.  Returns (color, witness) in canonical (lexicographic) order, or
    None after complete enumeration.
    """
    if depth < 1:
        raise InputError(f"witness depth must be >= 1, got {depth}")
    bound = coloring.bound
    colors = coloring.colors
    chosen: list[int] = []

    def extend(last: int, sums: tuple[int, ...], color: int) -> bool:
        for nxt in range(last + 1, bound + 1):
            if colors[nxt - 1] != color:
                continue
            ok = True
            for t in sums:
                total = t + nxt
                if total > bound or colors[total - 1] != color:
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(nxt)
            if len(chosen) == depth:
                return True
            if extend(nxt, sums + tuple(t + nxt for t in sums) + (nxt,), color):
                return True
            chosen.pop()
        return False

    for first in range(1, bound + 1):
        color = colors[first - 1]
        chosen = [first]
        if depth == 1:
            return color, FsWitness((first,))
        if extend(first, (first,), color):
            return color, FsWitness(tuple(chosen))
    return None
