"""Correction terms of lens spaces, computed exactly.

The lens space L(p, q) is the result of p/q surgery on the unknot; it has
p Spin^c structures, indexed here by integers ``0 <= i < p``, and each
carries a rational *correction term* d(L(p,q), i).  The reversed-orientation
values obey the recursion

    d(-L(p,q), i) = (pq - (2i + 1 - p - q)^2) / (4pq) - d(-L(q,r), j)

for ``0 <= i < p + q``, where r = p mod q and j = i mod q, grounded in
d(-L(1,0), 0) = 0, and d(L(p,q), i) = -d(-L(p,q), i).

Everything in this module is exact: values are ``fractions.Fraction`` and
the vectorized evaluator below works on integer numerators over the common
denominator 4pq (every correction term of L(p,q), put over a common
denominator, has denominator dividing 4pq).  No floating point is used
anywhere.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

import numpy as np

__all__ = [
    "LensSpace",
    "CorrectionMultiset",
    "RangeScanReport",
    "canonicalize",
    "clear_cache",
    "correction_multiset",
    "correction_numerators",
    "d_L_p_1_closed_form",
    "d_lens",
    "d_neg_lens",
    "delta_range",
    "parse_rational",
    "range_bound_scan",
    "rational_str",
]


def rational_str(x: Fraction) -> str:
    """Canonical wire form of a rational: "num/den" in lowest terms.

    The denominator is always written, so Fraction(0) is "0/1".

    >>> rational_str(Fraction(-1, 4))
    '-1/4'
    >>> rational_str(Fraction(0))
    '0/1'
    """
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`rational_str`; also accepts bare integers."""
    return Fraction(text.strip())


@dataclass(frozen=True)
class LensSpace:
    """Canonicalized surgery description (p, q) of L(p, q).

    Any q coprime to p is accepted and reduced mod p, so ``LensSpace(3, 5)``
    is L(3, 2) and ``LensSpace(1, k)`` is the three-sphere L(1, 0).
    q = 0 is only valid for p = 1.

    >>> LensSpace(3, 5)
    LensSpace(p=3, q=2)
    >>> LensSpace(1, 7)
    LensSpace(p=1, q=0)
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise TypeError("lens space parameters must be integers")
        if self.p <= 0:
            raise ValueError(f"p must be positive, got {self.p}")
        q = self.q % self.p
        if self.p > 1 and math.gcd(self.p, q) != 1:
            raise ValueError(f"gcd({self.p}, {self.q}) != 1: not a lens space")
        object.__setattr__(self, "q", q)

    @property
    def is_sphere(self) -> bool:
        return self.p == 1


def canonicalize(p: int, q: int) -> LensSpace:
    """Build the canonical L(p, q mod p); rejects p <= 0 and gcd(p, q) != 1."""
    return LensSpace(p, q)


class CorrectionMultiset:
    """Multiset of correction terms, stored as a sorted tuple of Fractions.

    Equality is order-insensitive and multiplicity-sensitive.  The multiset
    of a closed manifold is never empty (size equals the order of H_1), so
    empty construction is rejected.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[Fraction | int]):
        vals = []
        for v in values:
            if isinstance(v, float):
                raise TypeError("correction terms are exact rationals, not floats")
            vals.append(v if isinstance(v, Fraction) else Fraction(v))
        if not vals:
            raise ValueError("a correction-term multiset cannot be empty")
        self._values = tuple(sorted(vals))

    @property
    def values(self) -> tuple[Fraction, ...]:
        """The elements in ascending order (with multiplicity)."""
        return self._values

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CorrectionMultiset):
            return self._values == other._values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._values)

    def __neg__(self) -> "CorrectionMultiset":
        return CorrectionMultiset(-v for v in self._values)

    def shifted(self, c: Fraction | int) -> "CorrectionMultiset":
        """The multiset with ``c`` added to every element."""
        return CorrectionMultiset(v + c for v in self._values)

    def __repr__(self) -> str:
        inner = ", ".join(rational_str(v) for v in self._values)
        return f"CorrectionMultiset([{inner}])"


# Vectors of 4pq * d(-L(p,q), i) stay below 4*p^4 in absolute value, so
# int64 is exact up to this bound; larger p falls back to object arrays of
# Python ints (still exact, just slower).
_INT64_SAFE_P = 30_000


class _NegLensEngine:
    """Memoized integer evaluator for the reversed-orientation recursion.

    For each key (p, q) the cache holds the vector
    ``N[i] = 4pq * d(-L(p,q), i)`` for ``0 <= i < p`` as a read-only numpy
    array.  The recursion touches the inner vector only at indices
    ``i mod q < q``, so length p per key serves the whole Euclidean descent;
    each fresh key costs one vectorized pass.

    Cache writes are idempotent (recomputation yields equal vectors) and
    dict operations are atomic under the GIL, so concurrent use from
    multiple threads is safe and thread-count independent.
    """

    def __init__(self) -> None:
        self._cache: dict[tuple[int, int], np.ndarray] = {}

    def numerators(self, p: int, q: int) -> np.ndarray:
        cached = self._cache.get((p, q))
        if cached is not None:
            return cached
        # Fill the missing tail of the Euclidean chain bottom-up.
        chain = []
        a, b = p, q
        while (a, b) not in self._cache:
            chain.append((a, b))
            if a == 1 or b == 1:
                break
            a, b = b, a % b
        for a, b in reversed(chain):
            vec = self._compute(a, b)
            vec.setflags(write=False)
            self._cache[(a, b)] = vec
        return self._cache[(p, q)]

    def _compute(self, p: int, q: int) -> np.ndarray:
        dtype = np.int64 if p <= _INT64_SAFE_P else object
        if p == 1:
            return np.zeros(1, dtype=dtype)
        i = np.arange(p, dtype=dtype)
        t = 2 * i + (1 - p - q)
        quad = p * q - t * t
        if q == 1:
            return quad
        r = p % q
        M = self.numerators(q, r)
        if dtype is object and M.dtype != np.dtype(object):
            M = M.astype(object)  # lift before multiplying, p * M may exceed int64
        inner = (p * M) // r  # exact: r divides p * M
        return quad - np.resize(inner, p)

    def clear(self) -> None:
        self._cache.clear()


_engine = _NegLensEngine()


def clear_cache() -> None:
    """Drop all memoized correction-term vectors (frees memory after scans)."""
    _engine.clear()


def correction_numerators(L: LensSpace) -> tuple[np.ndarray, int]:
    """Integer numerators of d(L, i) over the common denominator 4pq.

    Returns ``(numerators, denominator)`` with ``numerators[i]`` equal to
    ``denominator * d(L, i)`` for ``0 <= i < p``.  For L(1, 0) the
    denominator is reported as 4.  The array is read-only; fractions are
    not necessarily in lowest terms.
    """
    den = 4 * L.p * max(L.q, 1)
    neg = _engine.numerators(L.p, L.q)
    pos = -neg
    pos.setflags(write=False)
    return pos, den


def d_neg_lens(L: LensSpace, i: int) -> Fraction:
    """Correction term d(-L(p,q), i) of the orientation reversal.

    The index may run through the extended range ``0 <= i < p + q`` accepted
    by the recursion; only ``i < p`` contributes to the multiset of -L.

    >>> d_neg_lens(LensSpace(2, 1), 0)
    Fraction(-1, 4)
    >>> d_neg_lens(LensSpace(3, 2), 2)
    Fraction(1, 2)
    """
    p, q = L.p, L.q
    if not 0 <= i < p + q:
        raise ValueError(f"Spin^c index {i} out of range [0, {p + q}) for L({p},{q})")
    if i < p:
        return Fraction(int(_engine.numerators(p, q)[i]), 4 * p * max(q, 1))
    # Extended indices p <= i < p + q, evaluated scalar-wise.
    quad = Fraction(p * q - (2 * i + 1 - p - q) ** 2, 4 * p * q)
    if q == 1:
        return quad
    r = p % q
    inner = Fraction(int(_engine.numerators(q, r)[i % q]), 4 * q * r)
    return quad - inner


def d_lens(L: LensSpace, i: int) -> Fraction:
    """Correction term d(L(p,q), i), for ``0 <= i < p``.

    >>> d_lens(LensSpace(2, 1), 0)
    Fraction(1, 4)
    >>> d_lens(LensSpace(1, 0), 0)
    Fraction(0, 1)
    """
    if not 0 <= i < L.p:
        raise ValueError(f"Spin^c index {i} out of range [0, {L.p}) for L({L.p},{L.q})")
    return -d_neg_lens(L, i)


def correction_multiset(L: LensSpace) -> CorrectionMultiset:
    """The multiset { d(L, i) : 0 <= i < p } of all correction terms of L.

    >>> correction_multiset(LensSpace(3, 2))
    CorrectionMultiset([-1/2, 1/6, 1/6])
    """
    numer, den = correction_numerators(L)
    return CorrectionMultiset(Fraction(int(n), den) for n in numer)


def d_L_p_1_closed_form(p: int, i: int) -> Fraction:
    """Independent closed form ((2i - p)^2 - p) / (4p) for d(L(p,1), i).

    Obtained by unrolling the recursion once at q = 1; used as an oracle
    against the general evaluator, so it deliberately shares no code with it.
    """
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if not 0 <= i < p:
        raise ValueError(f"index {i} out of range [0, {p})")
    return Fraction((2 * i - p) ** 2 - p, 4 * p)


def delta_range(L: LensSpace) -> Fraction:
    """The spread max D(L) - min D(L) of the correction-term multiset.

    >>> delta_range(LensSpace(4, 1))
    Fraction(1, 1)
    >>> delta_range(LensSpace(3, 1))
    Fraction(2, 3)
    """
    numer, den = correction_numerators(L)
    if len(numer) == 1:
        return Fraction(0)
    return Fraction(int(numer.max() - numer.min()), den)


@dataclass(frozen=True)
class RangeScanReport:
    """Outcome of the exhaustive spread-bound scan delta(p,q) <= p/4."""

    p_max: int
    pairs_checked: int
    violations: tuple[tuple[int, int, Fraction], ...]
    duration_seconds: float = field(compare=False)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "p_max": self.p_max,
            "pairs_checked": self.pairs_checked,
            "violations": [
                {"p": p, "q": q, "delta": rational_str(d)} for p, q, d in self.violations
            ],
        }


def _range_scan_block(bounds: tuple[int, int]) -> tuple[list[tuple[int, int, Fraction]], int]:
    """Scan p in [lo, hi): check 4pq*delta <= p * p^2*q via integer compare."""
    lo, hi = bounds
    violations: list[tuple[int, int, Fraction]] = []
    checked = 0
    for p in range(max(lo, 2), hi):
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            numer, den = correction_numerators(LensSpace(p, q))
            spread = int(numer.max() - numer.min())
            checked += 1
            # delta = spread/(4pq) <= p/4  <=>  spread <= p^2 * q
            if spread > p * p * q:
                violations.append((p, q, Fraction(spread, den)))
    return violations, checked


def range_bound_scan(
    p_max: int,
    jobs: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> RangeScanReport:
    """Exhaustively verify delta(p,q) <= p/4 for all coprime 0 < q < p <= p_max.

    The comparison is exact (integer numerators over 4pq); the expected
    outcome is an empty violation list.  ``jobs > 1`` fans the p-range out
    across worker processes with a deterministic merge.
    """
    if p_max < 2:
        raise ValueError("p_max must be at least 2")
    start = time.perf_counter()
    violations: list[tuple[int, int, Fraction]] = []
    checked = 0
    total_pairs = sum(_totient(p) for p in range(2, p_max + 1))
    if jobs <= 1:
        step = 0
        for p in range(2, p_max + 1):
            got, n = _range_scan_block((p, p + 1))
            violations.extend(got)
            checked += n
            step += n
            if progress is not None and (step >= 2000 or p == p_max):
                progress(checked, total_pairs)
                step = 0
    else:
        from concurrent.futures import ProcessPoolExecutor

        blocks = _split_blocks(2, p_max + 1, 4 * jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for got, n in pool.map(_range_scan_block, blocks):
                violations.extend(got)
                checked += n
                if progress is not None:
                    progress(checked, total_pairs)
    return RangeScanReport(
        p_max=p_max,
        pairs_checked=checked,
        violations=tuple(violations),
        duration_seconds=time.perf_counter() - start,
    )


def _totient(n: int) -> int:
    return sum(1 for k in range(1, n) if math.gcd(n, k) == 1) if n > 1 else 1


def _split_blocks(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous [lo, hi) blocks, weighted toward equal p^2-work per block."""
    if parts <= 1 or hi - lo <= 1:
        return [(lo, hi)]
    cuts = [lo]
    total = sum(p * p for p in range(lo, hi))
    target = total / parts
    acc = 0.0
    for p in range(lo, hi):
        acc += p * p
        if acc >= target and cuts[-1] < p + 1 < hi:
            cuts.append(p + 1)
            acc = 0.0
    cuts.append(hi)
    return [(a, b) for a, b in zip(cuts, cuts[1:]) if a < b]
