"""Integer Laurent polynomials, cyclotomics, and the cable sliceness test.

Alexander polynomials live in Z[t, t^-1] up to units; the canonical
representative used here is *symmetric* (the coefficients of t^k and t^-k
agree) with value +1 at t = 1.  Torus-knot polynomials are assembled from
their cyclotomic factorization, which keeps every root-of-unity argument in
exact integer arithmetic on divisor lattices - no numerical roots anywhere.

The payoff is :func:`cable_algebraic_slice_obstruction`: for a (p, q)-cable
with q > 1, a primitive (p*q1)-th root of unity (q1 a prime factor of q) is
a simple root of the torus factor, which forces a cyclotomic factor onto the
companion's Alexander polynomial that evaluates to q1 > 1 at t = 1 - while
any Alexander polynomial evaluates to 1 there.  A factorization of the kind
f(t) f(1/t), which slice knots must admit, is therefore impossible.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .lens import rational_str

__all__ = [
    "CyclotomicWitness",
    "LaurentPolynomial",
    "ObstructionReport",
    "Verdict",
    "cable_alexander",
    "cable_algebraic_slice_obstruction",
    "cyclotomic",
    "determinant_square_check",
    "torsion_coefficients",
    "torus_alexander",
    "torus_alexander_factors",
]


class LaurentPolynomial:
    """Laurent polynomial with integer coefficients.

    Stored as the lowest exponent plus a dense coefficient vector whose first
    and last entries are nonzero (the zero polynomial is the empty vector).
    All arithmetic is exact.

    >>> trefoil = LaurentPolynomial([1, -1, 1], low=-1)
    >>> trefoil
    LaurentPolynomial('t - 1 + t^-1')
    >>> trefoil.evaluate(1)
    Fraction(1, 1)
    >>> trefoil * trefoil
    LaurentPolynomial('t^2 - 2t + 3 - 2t^-1 + t^-2')
    """

    __slots__ = ("_low", "_coeffs")

    def __init__(self, coeffs: Iterable[int], low: int = 0):
        vals = list(coeffs)
        for c in vals:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {c!r}")
        lead = 0
        while vals and vals[-1] == 0:
            vals.pop()
        while vals and vals[0] == 0:
            vals.pop(0)
            lead += 1
        self._coeffs = tuple(vals)
        self._low = low + lead if vals else 0

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> "LaurentPolynomial":
        """Build from (exponent, coefficient) pairs; repeated exponents add."""
        acc: dict[int, int] = {}
        for e, c in terms:
            acc[e] = acc.get(e, 0) + c
        if not acc:
            return cls.zero()
        low = min(acc)
        high = max(acc)
        return cls([acc.get(e, 0) for e in range(low, high + 1)], low=low)

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls([])

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls([1])

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls([coefficient], low=exponent)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def low_exponent(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no exponent range")
        return self._low

    @property
    def high_exponent(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no exponent range")
        return self._low + len(self._coeffs) - 1

    @property
    def degree_span(self) -> int:
        """high_exponent - low_exponent; 0 for nonzero constants."""
        return self.high_exponent - self.low_exponent

    def coefficient(self, exponent: int) -> int:
        k = exponent - self._low
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Nonzero (exponent, coefficient) pairs, ascending."""
        for k, c in enumerate(self._coeffs):
            if c != 0:
                yield self._low + k, c

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self._low == other._low and self._coeffs == other._coeffs
        if isinstance(other, int):
            return self == LaurentPolynomial([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._low, self._coeffs))

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial([-c for c in self._coeffs], low=self._low)

    def __add__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            other = LaurentPolynomial([other])
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self._low, other._low)
        high = max(self._low + len(self._coeffs), other._low + len(other._coeffs))
        out = [0] * (high - low)
        for k, c in enumerate(self._coeffs):
            out[self._low - low + k] += c
        for k, c in enumerate(other._coeffs):
            out[other._low - low + k] += c
        return LaurentPolynomial(out, low=low)

    def __sub__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial([c * other for c in self._coeffs], low=self._low)
        if self.is_zero or other.is_zero:
            return LaurentPolynomial.zero()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return LaurentPolynomial(out, low=self._low + other._low)

    __radd__ = __add__
    __rmul__ = __mul__

    def evaluate(self, x: int | Fraction) -> Fraction:
        """Exact value at x (a Fraction; negative exponents need x != 0).

        >>> LaurentPolynomial([1, -1, 1], low=-1).evaluate(-1)
        Fraction(-3, 1)
        """
        if isinstance(x, float):
            raise TypeError("evaluation point must be exact (int or Fraction)")
        x = Fraction(x)
        if self.is_zero:
            return Fraction(0)
        if x == 0 and self._low < 0:
            raise ZeroDivisionError("negative exponents cannot be evaluated at 0")
        total = Fraction(0)
        for e, c in self.terms():
            total += c * x**e
        return total

    def substitute_power(self, k: int) -> "LaurentPolynomial":
        """The polynomial with t replaced by t^k (k >= 1)."""
        if k < 1:
            raise ValueError("substitution power must be >= 1")
        return LaurentPolynomial.from_terms((e * k, c) for e, c in self.terms())

    def exact_div(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact quotient self / other; raises ValueError on any remainder."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPolynomial.zero()
        rem = list(self._coeffs)
        div = other._coeffs
        n, m = len(rem), len(div)
        if n < m:
            raise ValueError("not divisible: degree span too small")
        quot = [0] * (n - m + 1)
        for k in range(n - m, -1, -1):
            c, r = divmod(rem[k + m - 1], div[m - 1])
            if r != 0:
                raise ValueError("not divisible: leading coefficient remainder")
            quot[k] = c
            if c != 0:
                for j in range(m):
                    rem[k + j] -= c * div[j]
        if any(rem):
            raise ValueError("not divisible: nonzero remainder")
        return LaurentPolynomial(quot, low=self._low - other._low)

    @property
    def is_symmetric(self) -> bool:
        """True when the coefficients of t^k and t^-k agree for every k."""
        if self.is_zero:
            return True
        return (
            self._low == -(self._low + len(self._coeffs) - 1)
            and self._coeffs == self._coeffs[::-1]
        )

    def alexander_normalized(self) -> "LaurentPolynomial":
        """The unit-multiple t^k * (+-1) * self that is symmetric with value 1 at t=1.

        Raises ValueError when no unit multiple works (odd degree span,
        non-palindromic coefficients, or value at 1 not a unit).
        """
        if self.is_zero:
            raise ValueError("the zero polynomial is not an Alexander polynomial")
        if self._coeffs != self._coeffs[::-1]:
            raise ValueError("coefficients are not palindromic")
        span = len(self._coeffs) - 1
        if span % 2:
            raise ValueError("odd degree span cannot be centered")
        at_one = sum(self._coeffs)
        if at_one not in (1, -1):
            raise ValueError(f"value at t=1 is {at_one}, not a unit")
        coeffs = self._coeffs if at_one == 1 else tuple(-c for c in self._coeffs)
        return LaurentPolynomial(coeffs, low=-(span // 2))

    def to_wire(self) -> str:
        """Serialize as ordered "exp:coeff" pairs ("-1:1, 0:-1, 1:1")."""
        return ", ".join(f"{e}:{c}" for e, c in self.terms())

    @classmethod
    def from_wire(cls, text: str) -> "LaurentPolynomial":
        """Parse the "exp:coeff,exp:coeff" wire form (whitespace tolerated)."""
        text = text.strip()
        if not text:
            return cls.zero()
        terms = []
        for chunk in text.split(","):
            try:
                e_str, c_str = chunk.split(":")
                terms.append((int(e_str.strip()), int(c_str.strip())))
            except ValueError:
                raise ValueError(f"bad polynomial term {chunk.strip()!r}; expected 'exp:coeff'")
        return cls.from_terms(terms)

    def _pretty(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e, c in sorted(self.terms(), reverse=True):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolynomial('{self._pretty()}')"


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _smallest_prime_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> LaurentPolynomial:
    """The n-th cyclotomic polynomial, by exact division of t^n - 1.

    >>> cyclotomic(1)
    LaurentPolynomial('t - 1')
    >>> cyclotomic(6)
    LaurentPolynomial('t^2 - t + 1')
    """
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    poly = LaurentPolynomial([-1] + [0] * (n - 1) + [1])
    for d in _divisors(n)[:-1]:
        poly = poly.exact_div(cyclotomic(d))
    return poly


def torus_alexander_factors(p: int, q: int) -> tuple[int, ...]:
    """Cyclotomic indices in the factorization of the (p, q) torus knot polynomial.

    These are the divisors of pq dividing neither p nor q; each occurs with
    multiplicity one, so every root of the polynomial is a simple root.

    >>> torus_alexander_factors(2, 3)
    (6,)
    >>> torus_alexander_factors(3, 4)
    (6, 12)
    """
    if p < 2 or q < 2:
        raise ValueError("torus factor indices need p, q >= 2")
    if math.gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1: not a torus knot")
    return tuple(d for d in _divisors(p * q) if p % d != 0 and q % d != 0)


def torus_alexander(p: int, q: int) -> LaurentPolynomial:
    """Symmetric-normalized Alexander polynomial of the (p, q) torus knot.

    The degree span is (p-1)(q-1) and the value at t = 1 is 1; q = 1 gives
    the unknotted cable, whose polynomial is the constant 1.

    >>> torus_alexander(2, 3)
    LaurentPolynomial('t - 1 + t^-1')
    """
    if p < 2:
        raise ValueError("longitudinal winding p must be >= 2")
    if q < 1:
        raise ValueError("q must be >= 1")
    if math.gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1: not a torus knot")
    if q == 1:
        return LaurentPolynomial.one()
    poly = LaurentPolynomial.one()
    for d in torus_alexander_factors(p, q):
        poly = poly * cyclotomic(d)
    return poly.alexander_normalized()


def cable_alexander(delta_companion: LaurentPolynomial, p: int, q: int) -> LaurentPolynomial:
    """Alexander polynomial of the (p, q)-cable with the given companion.

    Cabling substitutes t -> t^p into the companion polynomial and multiplies
    by the torus-knot factor.  The companion polynomial must already be
    symmetric-normalized.

    >>> cable_alexander(LaurentPolynomial([1, -1, 1], low=-1), 2, 1)
    LaurentPolynomial('t^2 - 1 + t^-2')
    """
    if not delta_companion.is_symmetric or delta_companion.evaluate(1) != 1:
        raise ValueError("companion polynomial is not symmetric-normalized")
    out = delta_companion.substitute_power(p) * torus_alexander(p, q)
    return out.alexander_normalized()


def determinant_square_check(delta: LaurentPolynomial) -> bool:
    """Whether |delta(-1)| is a perfect square.

    A factorization delta(t) = f(t) f(1/t) forces the determinant |delta(-1)|
    to be the square |f(-1)|^2, so False refutes any such factorization (and
    with it algebraic sliceness); True is merely consistent with one.

    >>> determinant_square_check(torus_alexander(2, 3))
    False
    """
    if not delta.is_symmetric:
        raise ValueError("determinant check expects a symmetric polynomial")
    value = delta.evaluate(-1)
    det = abs(value.numerator)  # symmetric => integer value at -1
    return math.isqrt(det) ** 2 == det


def torsion_coefficients(delta: LaurentPolynomial) -> tuple[int, ...]:
    """Torsion coefficients (t_0, ..., t_{g-1}, 0) of a symmetric polynomial.

    t_i = sum_{j >= 1} j * a_{i+j} where a_k is the coefficient of t^k and
    g is half the degree span; every t_i with i >= g vanishes, which the
    trailing 0 records.

    >>> torsion_coefficients(LaurentPolynomial([1, -1, 1, -1, 1], low=-2))
    (1, 1, 0)
    """
    if delta.is_zero:
        raise ValueError("the zero polynomial has no torsion coefficients")
    if not delta.is_symmetric:
        raise ValueError("torsion coefficients need a symmetric polynomial")
    g = delta.high_exponent
    return tuple(
        sum(j * delta.coefficient(i + j) for j in range(1, g - i + 1))
        for i in range(g + 1)
    )


class Verdict(enum.Enum):
    """Outcome of a sliceness obstruction test."""

    OBSTRUCTED = "obstructed"
    NOT_APPLICABLE = "not-applicable"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CyclotomicWitness:
    """Data certifying the cyclotomic obstruction: Phi_prime(1) = prime > 1."""

    prime: int
    root_order: int
    phi_at_one: int

    def as_dict(self) -> dict:
        return {"prime": self.prime, "root_order": self.root_order, "phi_at_one": self.phi_at_one}


@dataclass(frozen=True)
class ObstructionReport:
    """Structured verdict of a cable sliceness test, with an auditable trace."""

    p: int
    q: int
    verdict: Verdict
    path: str | None = None
    witness: object | None = None
    narrative: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        out: dict = {"p": self.p, "q": self.q, "verdict": self.verdict.value}
        if self.path is not None:
            out["path"] = self.path
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        out["details"] = list(self.narrative)
        return out


def cable_algebraic_slice_obstruction(p: int, q: int) -> ObstructionReport:
    """Decide whether the (p, q)-cable of *any* knot can be algebraically slice.

    For q > 1 the verdict is Obstructed, independent of the companion: a
    primitive (p*q1)-th root of unity (q1 the smallest prime factor of q) is
    a simple root of the torus factor, forces the q1-th cyclotomic onto the
    companion polynomial, and Phi_q1(1) = q1 cannot divide the companion's
    value 1 at t = 1.  For q = 1 the test does not apply.

    Every arithmetic claim in the trace is verified exactly before reporting.
    """
    if p < 2:
        raise ValueError("longitudinal winding p must be >= 2")
    if q < 1:
        raise ValueError("q must be >= 1")
    if math.gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1: not a cable parameter pair")
    if q == 1:
        return ObstructionReport(
            p=p,
            q=q,
            verdict=Verdict.NOT_APPLICABLE,
            path="alexander",
            narrative=(
                f"({p}, 1)-cabling a slice knot yields a slice knot, so no "
                "Alexander-polynomial obstruction exists for q = 1.",
            ),
        )
    q1 = _smallest_prime_factor(q)
    order = p * q1
    if (p * q) % order != 0:
        raise AssertionError("root order must divide pq")
    if order not in torus_alexander_factors(p, q):
        raise AssertionError("expected cyclotomic index missing from torus factorization")
    power_at_p = order // math.gcd(order, p)  # order of xi^p
    if power_at_p != q1 or q1 == 1:
        raise AssertionError("xi^p must be a primitive root of prime order q1 > 1")
    if q % order == 0:
        raise AssertionError("xi would be a q-th root of unity")
    phi_at_one = cyclotomic(q1).evaluate(1)
    if phi_at_one != q1:
        raise AssertionError("prime-index cyclotomic must evaluate to the prime at 1")
    witness = CyclotomicWitness(prime=q1, root_order=order, phi_at_one=q1)
    narrative = (
        f"q = {q} has prime factor q1 = {q1}; let xi be a primitive "
        f"{order}-th root of unity.",
        f"{order} divides pq = {p * q} but xi^p has order {q1} != 1 and "
        f"xi^q != 1, so xi is a (simple) root of the torus factor "
        f"(cyclotomic index {order} appears in its factorization).",
        "In a factorization f(t) f(1/t), xi would be a double root, so the "
        "companion factor evaluated at t^p must vanish at xi; hence xi^p, a "
        f"primitive {q1}-th root of unity, is a root of the companion "
        "polynomial.",
        f"That forces the {q1}-th cyclotomic to divide the companion "
        f"polynomial, so Phi_{q1}(1) = {q1} would divide its value at t = 1, "
        "which is 1.  Impossible.",
    )
    return ObstructionReport(
        p=p,
        q=q,
        verdict=Verdict.OBSTRUCTED,
        path="alexander",
        witness=witness,
        narrative=narrative,
    )
