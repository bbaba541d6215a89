"""Connected-sum algebra of correction-term multisets and the two-summand scan.

Correction terms add under connected sum, so the multiset of a sum of lens
spaces is the multiset of pairwise sums.  A homology-sphere summand Y
contributes a single unknown constant d(Y): comparing a surgery multiset with
a candidate connected-sum decomposition therefore reduces to *shift
equality* - does some constant c make the multisets match?  The constant is
forced (c = (sum A - sum B) / |A|), so the question is decided by one exact
sorted comparison.

:func:`two_summand_scan` runs that test exhaustively over every candidate
decomposition D(L(pq,1)) =? D(L(p,a) # L(q,b)) + c at desk scale.  Finding
no shift anywhere certifies that a knot whose pq-surgery matches L(pq,1)
(e.g. any slice knot) admits no surgery splitting into two lens spaces plus
a homology sphere.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .lens import (
    CorrectionMultiset,
    LensSpace,
    correction_multiset,
    delta_range,
    rational_str,
)

__all__ = [
    "ConnectedSum",
    "ScanReport",
    "ShiftVerdict",
    "multiset_sum",
    "range_of",
    "shift_constant",
    "slice_surgery_obstruction",
    "two_summand_scan",
]


@dataclass(frozen=True)
class ConnectedSum:
    """A connected sum of lens spaces, plus an optional homology-sphere term.

    ``extra_constant`` is the single correction term d(Y) of an integer
    homology sphere summand Y, when one is given; the multiset of the sum
    shifts by it.
    """

    summands: tuple[LensSpace, ...]
    extra_constant: Fraction | None = None

    def __post_init__(self) -> None:
        if not self.summands:
            raise ValueError("a connected sum needs at least one summand")

    @property
    def total_order(self) -> int:
        """Order of H_1: the product of the summand p values."""
        out = 1
        for L in self.summands:
            out *= L.p
        return out

    def correction_multiset(self) -> CorrectionMultiset:
        acc = correction_multiset(self.summands[0])
        for L in self.summands[1:]:
            acc = multiset_sum(acc, correction_multiset(L))
        if self.extra_constant is not None:
            acc = acc.shifted(self.extra_constant)
        return acc


@dataclass(frozen=True)
class ShiftVerdict:
    """Whether A = B + c for some constant c, and the constant if so."""

    exists: bool
    constant: Fraction | None = None


def multiset_sum(A: CorrectionMultiset, B: CorrectionMultiset) -> CorrectionMultiset:
    """All pairwise sums {a + b}, with multiplicity; size |A| * |B|."""
    return CorrectionMultiset(a + b for a in A for b in B)


def range_of(A: CorrectionMultiset) -> Fraction:
    """max(A) - min(A).  Shift-invariant, additive under multiset_sum."""
    return A.values[-1] - A.values[0]


def shift_constant(A: CorrectionMultiset, B: CorrectionMultiset) -> ShiftVerdict:
    """Decide whether some constant c makes A = B + c as multisets.

    Summing both sides forces c = (sum A - sum B) / |A|, so the candidate is
    computed and then verified elementwise against the sorted multisets.

    >>> A = CorrectionMultiset([Fraction(5, 4), Fraction(1, 4)])
    >>> B = CorrectionMultiset([Fraction(1, 4), Fraction(-3, 4)])
    >>> shift_constant(A, B)
    ShiftVerdict(exists=True, constant=Fraction(1, 1))
    """
    if len(A) != len(B):
        return ShiftVerdict(False)
    c = Fraction(sum(A.values) - sum(B.values), len(A))
    # Adding a constant preserves sorted order, so compare elementwise.
    if all(a == b + c for a, b in zip(A.values, B.values)):
        return ShiftVerdict(True, c)
    return ShiftVerdict(False)


def slice_surgery_obstruction(observed: CorrectionMultiset, p: int, q: int) -> bool:
    """Necessary condition for p/q surgery on a slice knot: D = D(L(p,q)).

    Returns True when ``observed`` equals the lens-space multiset exactly,
    i.e. the observation is consistent with sliceness (and more generally
    with vanishing of the relevant non-negative surgery invariants).
    """
    if len(observed) != p:
        raise ValueError(f"multiset has {len(observed)} elements, expected p = {p}")
    return observed == correction_multiset(LensSpace(p, q))


@dataclass(frozen=True)
class ScanReport:
    """Outcome of the exhaustive two-summand shift-equality scan."""

    pq_max: int
    tuples_checked: int
    filter_rejected: int
    filter_survivors: tuple[tuple[int, int, int, int], ...]
    counterexamples: tuple[tuple[int, int, int, int, Fraction], ...]
    duration_seconds: float = field(compare=False)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "pq_max": self.pq_max,
            "tuples_checked": self.tuples_checked,
            "filter_rejected": self.filter_rejected,
            "filter_survivors": [list(t) for t in self.filter_survivors],
            "counterexamples": [
                {"p": p, "q": q, "a": a, "b": b, "constant": rational_str(c)}
                for p, q, a, b, c in self.counterexamples
            ],
        }


def _coprime_residues(n: int) -> list[int]:
    return [k for k in range(1, n) if math.gcd(n, k) == 1]


def _scan_pair(pair: tuple[int, int]) -> tuple[list, list, int, int]:
    """All (a, b) candidates for one coprime pair p < q.

    Returns (counterexamples, filter survivors, tuples checked, filter
    rejected).  The spread filter runs first: a shift between multisets
    forces their spreads to agree, and spreads add under connected sum, so
    delta(p,a) + delta(q,b) != delta(pq,1) rejects the tuple without
    building the product multiset.
    """
    p, q = pair
    target = correction_multiset(LensSpace(p * q, 1))
    target_range = range_of(target)
    counterexamples = []
    survivors = []
    checked = 0
    rejected = 0
    left = [(a, correction_multiset(LensSpace(p, a)), delta_range(LensSpace(p, a)))
            for a in _coprime_residues(p)]
    right = [(b, correction_multiset(LensSpace(q, b)), delta_range(LensSpace(q, b)))
             for b in _coprime_residues(q)]
    for a, mult_a, delta_a in left:
        for b, mult_b, delta_b in right:
            checked += 1
            if delta_a + delta_b != target_range:
                rejected += 1
                continue
            survivors.append((p, q, a, b))
            verdict = shift_constant(target, multiset_sum(mult_a, mult_b))
            if verdict.exists:
                counterexamples.append((p, q, a, b, verdict.constant))
    return counterexamples, survivors, checked, rejected


def _scan_pairs(pq_max: int) -> list[tuple[int, int]]:
    pairs = []
    for p in range(2, pq_max + 1):
        if p * (p + 1) > pq_max:
            break
        for q in range(p + 1, pq_max // p + 1):
            if math.gcd(p, q) == 1:
                pairs.append((p, q))
    return pairs


def two_summand_scan(
    pq_max: int,
    jobs: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> ScanReport:
    """Scan every decomposition D(L(pq,1)) =? D(L(p,a) # L(q,b)) + constant.

    Covers all coprime 2 <= p < q with pq <= pq_max and all residues
    a coprime to p, b coprime to q.  Enumeration order (p, then q, then a,
    then b) is fixed, and parallel runs merge per-pair results in that same
    order, so reports are deterministic for any ``jobs``.

    An empty counterexample list means no candidate splitting matched.
    """
    if pq_max < 6:
        raise ValueError("pq_max must be at least 6 (smallest case is p=2, q=3)")
    start = time.perf_counter()
    pairs = _scan_pairs(pq_max)
    counterexamples: list = []
    survivors: list = []
    checked = 0
    rejected = 0
    if jobs <= 1:
        done = 0
        for pair in pairs:
            got_c, got_s, n, k = _scan_pair(pair)
            counterexamples.extend(got_c)
            survivors.extend(got_s)
            checked += n
            rejected += k
            done += 1
            if progress is not None and (checked % 2000 < n or done == len(pairs)):
                progress(checked, 0)
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for got_c, got_s, n, k in pool.map(_scan_pair, pairs, chunksize=8):
                counterexamples.extend(got_c)
                survivors.extend(got_s)
                checked += n
                rejected += k
                if progress is not None:
                    progress(checked, 0)
    return ScanReport(
        pq_max=pq_max,
        tuples_checked=checked,
        filter_rejected=rejected,
        filter_survivors=tuple(survivors),
        counterexamples=tuple(counterexamples),
        duration_seconds=time.perf_counter() - start,
    )
