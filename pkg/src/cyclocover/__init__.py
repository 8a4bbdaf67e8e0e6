"""Cyclically covering subspaces of ``F_q^n``.

``h_zero(q, n)`` decides whether the only cyclically covering subspace of
``F_q^n`` is the whole space, by stripping the p-part of n and applying the
coset trace criterion to the remaining ``m``.  :mod:`cyclocover.oracle`
checks the same question by brute force, and :mod:`cyclocover.group_algebra`
makes the underlying algebra executable.
"""

from __future__ import annotations

from ._kernels import BACKEND
from .budget import DEFAULT_BUDGET, Budget
from .criterion import CosetVerdict, DecisionRecord, coset_trace_nonvanishing, h_zero, h_zero_coprime
from .cyclotomic import CyclotomicCoset, PPartSplit, cyclotomic_cosets, multiplicative_order, p_part_split
from .errors import (
    CycloCoverError,
    DescriptorMismatch,
    DivisionByZero,
    InvalidInput,
    InvalidQ,
    NonMonic,
    NonPrimeCharacteristic,
    NotCoprime,
    OrderUnavailable,
    ParameterMismatch,
    ResourceExceeded,
    ZeroElement,
)
from .finite_field import (
    FieldDescriptor,
    FieldElement,
    build_field,
    element_of_order,
    is_irreducible,
    multiplicative_generator,
    trace_to_base,
)
from .group_algebra import (
    BiGradedElement,
    GroupAlgebraElement,
    TruncatedPoly,
    decompose_semisimple,
    gram_rank,
    psi,
    res_tr,
    shift_multiply,
    universal_inverse,
    verify_psi_iso,
)
from .oracle import cyclic_shift, exact_h_bruteforce, exists_covering_hyperplane, hyperplane_covers

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Budget",
    "DEFAULT_BUDGET",
    "BiGradedElement",
    "CosetVerdict",
    "CycloCoverError",
    "CyclotomicCoset",
    "DecisionRecord",
    "DescriptorMismatch",
    "DivisionByZero",
    "FieldDescriptor",
    "FieldElement",
    "GroupAlgebraElement",
    "InvalidInput",
    "InvalidQ",
    "NonMonic",
    "NonPrimeCharacteristic",
    "NotCoprime",
    "OrderUnavailable",
    "PPartSplit",
    "ParameterMismatch",
    "ResourceExceeded",
    "TruncatedPoly",
    "ZeroElement",
    "build_field",
    "coset_trace_nonvanishing",
    "cyclic_shift",
    "cyclotomic_cosets",
    "decompose_semisimple",
    "element_of_order",
    "exact_h_bruteforce",
    "exists_covering_hyperplane",
    "gram_rank",
    "h_zero",
    "h_zero_coprime",
    "hyperplane_covers",
    "is_irreducible",
    "multiplicative_generator",
    "multiplicative_order",
    "p_part_split",
    "psi",
    "res_tr",
    "shift_multiply",
    "trace_to_base",
    "universal_inverse",
    "verify_psi_iso",
]
