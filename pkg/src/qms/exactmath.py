"""Exact rational arithmetic, univariate polynomials, and the shared
bisection kernel.

Rationals are ``fractions.Fraction``. Polynomials are univariate in x
over Rational, stored as trimmed low-to-high coefficient tuples, so the
degree is ``len(coeffs) - 1`` and the leading coefficient is nonzero.
Rational functions are kept GCD-reduced with a monic denominator, which
makes equality a pair of tuple comparisons.

The parameter eps of the surface recursions enters as a fixed Rational,
never as a second indeterminate: univariate Euclidean GCD stays valid
and cheap, and identities in eps are checked by sampling.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int]


class QmsError(Exception):
    """Base for all package errors."""


class InputError(QmsError, ValueError):
    """A precondition on caller-supplied values failed."""


class ContractViolation(QmsError):
    """A runtime contract failed (integrability identity, precision)."""


class NotDivisible(ContractViolation):
    """Euclidean remainder nonzero where exact division was promised."""


class ZeroDenominator(ContractViolation):
    pass


class NoSignChange(InputError):
    """Bisection bracket endpoints do not straddle a root."""


def rational(value) -> Fraction:
    """Coerce ints, Fractions, or 'p/q' strings to Fraction.

    Floats are rejected: exact mode must not ingest binary-float
    artifacts.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        s = value.strip()
        if not re.match(r"^[+-]?\d+(/\d+)?$", s):
            raise InputError(f"need an integer or p/q rational: {value!r}")
        try:
            return Fraction(s)
        except ZeroDivisionError:
            raise InputError(f"zero denominator: {value!r}")
    raise InputError(f"not an exact rational: {value!r}")


def _trim(coeffs: Sequence[Fraction]) -> tuple:
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return tuple(coeffs[:i])


class Poly:
    """Univariate polynomial over Fraction, low-to-high coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])

    # -- constructors -------------------------------------------------
    @staticmethod
    def const(c) -> "Poly":
        return Poly([Fraction(c)])

    @staticmethod
    def x() -> "Poly":
        return Poly([0, 1])

    # -- structure ----------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise InputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- ring operations ----------------------------------------------
    def __add__(self, other) -> "Poly":
        other = other if isinstance(other, Poly) else Poly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        other = other if isinstance(other, Poly) else Poly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise InputError("negative polynomial power")
        out = Poly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "Poly") -> tuple:
        """Euclidean division: (q, r) with self = q*other + r."""
        if other.is_zero():
            raise ZeroDenominator("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [Fraction(0)] * (dq + 1)
        inv_lead = 1 / other.lead
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lead
            quo[k] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] -= c * oc
        return Poly(quo), Poly(rem)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    # -- evaluation ---------------------------------------------------
    def __call__(self, v):
        """Horner evaluation; v may be Fraction, float, or mpfr."""
        acc = v * 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly[0]"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return "Poly[" + " + ".join(terms) + "]"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic Euclidean GCD; gcd(0,0) = 0."""
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic()


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    """Exact quotient a/b; NotDivisible when the remainder is nonzero.

    A nonzero remainder downstream signals a violated integrability
    identity, so the error is a contract violation, not a value error.
    """
    if b.is_zero():
        raise ZeroDenominator("exact division by zero polynomial")
    q, r = a.divmod(b)
    if not r.is_zero():
        raise NotDivisible(
            f"remainder of degree {r.degree} in exact division "
            f"(dividend degree {a.degree}, divisor degree {b.degree})"
        )
    return q


class RatFn:
    """Reduced rational function: gcd(num, den) = 1, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        # trusted constructor: use ratfn_reduce for raw pairs
        self.num = num
        self.den = den

    @staticmethod
    def of(value) -> "RatFn":
        if isinstance(value, RatFn):
            return value
        if isinstance(value, Poly):
            return RatFn(value, Poly.const(1))
        return RatFn(Poly.const(value), Poly.const(1))

    def is_poly(self) -> bool:
        return self.den.degree == 0 and self.den.coeffs[0] == 1

    def as_poly(self) -> Poly:
        if not self.is_poly():
            raise NotDivisible(f"denominator {self.den!r} is not 1")
        return self.num

    def __eq__(self, other) -> bool:
        other = RatFn.of(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other) -> "RatFn":
        other = RatFn.of(other)
        return ratfn_reduce(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RatFn":
        return RatFn(-self.num, self.den)

    def __sub__(self, other) -> "RatFn":
        return self + (-RatFn.of(other))

    def __rsub__(self, other) -> "RatFn":
        return (-self) + other

    def __mul__(self, other) -> "RatFn":
        other = RatFn.of(other)
        return ratfn_reduce(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFn":
        other = RatFn.of(other)
        return ratfn_reduce(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFn":
        return RatFn.of(other) / self

    def __call__(self, v):
        dv = self.den(v)
        if dv == 0:
            raise ZeroDenominator(f"pole at {v}")
        return self.num(v) / dv

    def __repr__(self) -> str:
        if self.is_poly():
            return f"RatFn[{self.num!r}]"
        return f"RatFn[{self.num!r} / {self.den!r}]"


def ratfn_reduce(num: Poly, den: Poly) -> RatFn:
    """GCD-reduce num/den to canonical form (monic denominator)."""
    if den.is_zero():
        raise ZeroDenominator("rational function with zero denominator")
    if num.is_zero():
        return RatFn(Poly(), Poly.const(1))
    g = poly_gcd(num, den)
    if g.degree > 0:
        num = poly_exact_div(num, g)
        den = poly_exact_div(den, g)
    lead = den.lead
    if lead != 1:
        num = num * (1 / lead)
        den = den * (1 / lead)
    return RatFn(num, den)


def find_root_bisect(
    f: Callable, lo, hi, tol, max_iter: int = 20000
):
    """Midpoint bisection on a bracketing interval.

    Generic over the number type as long as averaging and comparison
    work (float, mpfr). Returns the midpoint of the final bracket;
    deterministic for fixed inputs.
    """
    if not tol > 0:
        raise InputError("tol must be positive")
    if not lo < hi:
        raise InputError(f"need lo < hi, got [{lo}, {hi}]")
    flo = f(lo)
    if flo == 0:
        return lo
    fhi = f(hi)
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoSignChange(f"f({lo}) and f({hi}) have the same sign")
    lo_neg = flo < 0
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2
        if mid <= lo or mid >= hi:  # float resolution reached
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm < 0) == lo_neg:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2
