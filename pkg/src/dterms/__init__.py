"""Exact correction-term computations for lens spaces and knot surgeries.

The package computes the rational d-invariants of lens spaces (and their
connected sums) with exact arithmetic, evaluates the surgery formula for
knots with known V-sequences, and mechanizes two sliceness obstructions:
the two-summand reducible-surgery scan and the positive-cable tests.
"""

from .alexander import (
    CyclotomicWitness,
    LaurentPolynomial,
    ObstructionReport,
    Verdict,
    cable_alexander,
    cable_algebraic_slice_obstruction,
    cyclotomic,
    determinant_square_check,
    torsion_coefficients,
    torus_alexander,
    torus_alexander_factors,
)
from .cobordism import (
    ConnectedSum,
    ScanReport,
    ShiftVerdict,
    multiset_sum,
    range_of,
    shift_constant,
    slice_surgery_obstruction,
    two_summand_scan,
)
from .lens import (
    CorrectionMultiset,
    LensSpace,
    RangeScanReport,
    canonicalize,
    clear_cache,
    correction_multiset,
    correction_numerators,
    d_L_p_1_closed_form,
    d_lens,
    d_neg_lens,
    delta_range,
    parse_rational,
    range_bound_scan,
    rational_str,
)
from .surgery import (
    SurgeryShiftWitness,
    VSequence,
    d_one_over_n_surgery,
    d_positive_integer_surgery,
    moser_crosscheck,
    positive_cable_slice_check,
    v_sequence_from_lspace_alexander,
)

__version__ = "0.1.0"

__all__ = [
    "ConnectedSum",
    "CorrectionMultiset",
    "CyclotomicWitness",
    "LaurentPolynomial",
    "LensSpace",
    "ObstructionReport",
    "RangeScanReport",
    "ScanReport",
    "ShiftVerdict",
    "SurgeryShiftWitness",
    "VSequence",
    "Verdict",
    "cable_alexander",
    "cable_algebraic_slice_obstruction",
    "canonicalize",
    "clear_cache",
    "correction_multiset",
    "correction_numerators",
    "cyclotomic",
    "d_L_p_1_closed_form",
    "d_lens",
    "d_neg_lens",
    "d_one_over_n_surgery",
    "d_positive_integer_surgery",
    "delta_range",
    "determinant_square_check",
    "moser_crosscheck",
    "multiset_sum",
    "parse_rational",
    "positive_cable_slice_check",
    "range_bound_scan",
    "range_of",
    "rational_str",
    "shift_constant",
    "slice_surgery_obstruction",
    "torsion_coefficients",
    "torus_alexander",
    "torus_alexander_factors",
    "two_summand_scan",
    "v_sequence_from_lspace_alexander",
]
