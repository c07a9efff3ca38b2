"""Exact twisted exponents and twisted Frobenius-Schur indicators of
finite-dimensional Hopf algebras over cyclotomic fields."""

from .catalog import BUILTIN_NAMES, Package, builtin, builtin_h8
from .cyclo import CycNumber, Rational, cyc, embed, format_cyc, galois, parse_cyc, zeta
from .errors import *  # noqa: F401,F403
from .linalg import Matrix, map_order
from .reps import Character, Representation, character, regular_representation, verify_representation
from .structures import (
    HopfAlgebra,
    HopfAutomorphism,
    dual,
    dual_automorphism,
    group_algebra,
    group_automorphism,
    make_automorphism,
    tensor_automorphism,
    tensor_product,
    verify_automorphism,
    verify_axioms,
)
from .invariants import (
    find_integral,
    indicator_charsum,
    indicator_report,
    indicator_trace,
    is_large_compared,
    norm,
    q_element,
    twisted_exponent,
    twisted_exponent_via_q,
    twisted_power,
)

__version__ = "0.1.0"
