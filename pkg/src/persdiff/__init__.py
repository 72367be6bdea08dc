"""Generalized persistence pair-group ranks via blanket-shift differences.

Exact linear algebra over GF(p) or the rationals, multifiltered chain
complexes over finite posets, cycle/boundary presheaves on up-sets, and a
finite-difference calculus on integer commuting squares whose derivative
at (0, 1) recovers the pair-group multiplicities of a generalized
persistence diagram.
"""

from .fields import FieldSpec, InvalidField
from .linalg import (
    DimensionMismatch,
    Matrix,
    NotASubspace,
    Subspace,
    column_space,
    complement_basis,
    contains,
    join,
    kernel,
    matmul,
    meet,
    quotient_dim,
    rref,
)
from .posets import (
    EMPTY_OPEN,
    BlanketMode,
    FinitePoset,
    GradedPair,
    InvalidPair,
    InvalidPoset,
    PairOpen,
    UnknownElement,
    UpSet,
    blankets_of_open,
    degree_blankets,
    describe_open,
    enumerate_diagram_pairs,
    is_up_closed,
    make_pair,
    min_elements,
    pair_blankets,
    principal_up_set,
)
from .complexes import Cell, FilteredComplex, InvalidComplex, Violation
from .memory import (
    MemoryQuery,
    blanket_union,
    boundaries_on_open,
    cycles_on_open,
    homological_memory,
    lifespan_rank,
    lifespan_representatives,
)
from .calculus import (
    ChangeAction,
    GroupObj,
    GroupSquare,
    IntegerFunctor,
    LawReport,
    arr_add,
    arr_inv,
    arr_sub,
    arr_zero,
    check_action_laws,
    check_cad1,
    check_cad2,
    check_monotone,
    compose_squares,
    degree_shift_action,
    derivative_mor,
    derivative_obj,
    identity_square,
    integer_addition_action,
    integer_subtraction_action,
    neg_derivative_mor,
    neg_derivative_obj,
    pair_group_rank,
    rank_square,
    square_subtraction_action,
    union_rank,
    union_rank_derivative,
    union_rank_functor,
)
from .oracle import NotAChain, oracle_barcode
from .io import InputError, load_complex, parse_document
from .diagrams import (
    Bar,
    DiagramEntry,
    chain_diagram_counter,
    compute_barcode,
    compute_diagram,
    diagram_document,
    entries_from_document,
)
from .verify import VerifyReport, run_verification

__version__ = "0.1.0"
