"""Exact Julia Robinson numbers for the totally real towers of good triples.

A good triple (a, b, r) determines a totally real field as the union of the
maximal real subfields of Q(alpha^(1/r^k)) with alpha = (a + i*sqrt(b^2 - a^2))/b.
This package computes the Julia Robinson number ceil(s) + s of its ring of
integers exactly, verifies the algebraic-integrality characterization against
an independent characteristic-polynomial oracle, and generates the explicit
families with JR = ceil(2*sqrt(2t)) + 2*sqrt(2t) and JR = 8t.
"""

from .algebra import (
    CosElement,
    ResourceCapError,
    TowerElement,
    conjugates,
    cos_element,
    embed,
    find_large_conjugate,
    integrality_charpoly,
    integrality_valuations,
    jr_witnesses,
    max_conjugate_bound,
    spread_checks,
    tower_mul,
    tower_trace,
    trace_avg,
    trace_avg_square,
    two_cos,
)
from .families import (
    FamilyEntry,
    exponent_pairs,
    family_8t,
    family_sqrt,
    fields_distinct,
    squarefree_pair,
)
from .field import (
    BadTripleError,
    FieldDescriptor,
    GoodTriple,
    check_good,
    describe,
    descriptor,
    iter_good_triples,
)
from .lattice import (
    EnumerationBudgetError,
    JRResult,
    LatticeWitness,
    SkSpec,
    jr_number,
    quad_form,
    shortest_vector,
    sk_integer_form,
    sk_membership,
    verify_bounds,
)
from .numeth import (
    FactorBudgetError,
    Factorization,
    Rat,
    Surd,
    ceil_sqrt,
    factor,
    find_prime_qr,
    hensel_sqrt,
    is_perfect_square,
    is_prime,
    is_squarefree,
    legendre,
    minkowski_short_residue,
    rad_power,
    signed_mod,
    square_part,
    surd_of_square,
    vp,
)

__version__ = "0.1.0"
