"""Finite-depth combinatorics of sums, products, and semigroup idempotents.

The package searches bounded windows of a sequence for sum subsystems whose
finite sums and finite products all land in a decidable target set, emits
self-contained certificates that third parties can re-check, refutes IP*
claims by exhibiting FS-structured sets in complements, plays the Hindman
partition game on finite colorings, and computes the idempotent/ideal
structure of finite semigroups given as Cayley tables.
"""

from .errors import (
    AssociativityError,
    DomainBoundError,
    InputError,
    RefusalError,
    SpecSyntaxError,
    StructuralError,
)
from .fsfp import (
    FsFpState,
    extend_state,
    finite_products,
    finite_sums,
    normalize_block,
    state_of,
    subsystem_sums,
)
from .partition import (
    Coloring,
    FsWitness,
    find_fs_witness,
    hindman_finite,
    ip_star_refute,
    parse_coloring,
    scale_witness,
)
from .search import (
    Certificate,
    OutcomeKind,
    SearchBudget,
    SearchOutcome,
    brute_force_subsystem,
    search_subsystem,
    stage_constraint,
    verification_failure,
    verify_certificate,
)
from .semigroup import (
    FiniteSemigroup,
    IdealStructure,
    IdempotentOrder,
    group_check,
    ideal_structure,
    idempotent_order,
    idempotents,
    parse_table,
    product_formula_check,
    validate_table,
)
from .setspec import (
    Bitmap,
    Complement,
    Congruence,
    DilationPreimage,
    Empty,
    Full,
    Interval,
    Intersection,
    SetSpec,
    ShiftPreimage,
    Union,
    dilation_preimage,
    parse_spec,
    render_spec,
    shift_preimage,
)

__version__ = "0.1.0"

__all__ = [
    "AssociativityError",
    "Bitmap",
    "Certificate",
    "Coloring",
    "Complement",
    "Congruence",
    "DilationPreimage",
    "DomainBoundError",
    "Empty",
    "FiniteSemigroup",
    "FsFpState",
    "FsWitness",
    "Full",
    "IdealStructure",
    "IdempotentOrder",
    "InputError",
    "Intersection",
    "Interval",
    "OutcomeKind",
    "RefusalError",
    "SearchBudget",
    "SearchOutcome",
    "SetSpec",
    "ShiftPreimage",
    "SpecSyntaxError",
    "StructuralError",
    "Union",
    "brute_force_subsystem",
    "dilation_preimage",
    "extend_state",
    "find_fs_witness",
    "finite_products",
    "finite_sums",
    "group_check",
    "hindman_finite",
    "ideal_structure",
    "idempotent_order",
    "idempotents",
    "ip_star_refute",
    "normalize_block",
    "parse_coloring",
    "parse_spec",
    "parse_table",
    "product_formula_check",
    "render_spec",
    "scale_witness",
    "search_subsystem",
    "shift_preimage",
    "stage_constraint",
    "state_of",
    "subsystem_sums",
    "validate_table",
    "verification_failure",
    "verify_certificate",
]
