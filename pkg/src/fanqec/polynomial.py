"""Dense univariate polynomials with exact integer coefficients.

Coefficients are stored ascending by degree, so ``Poly([-1, 0, 4])`` is
``4x^2 - 1``.  Python integers are arbitrary precision, which keeps every
operation exact at any degree and coefficient size reached here (degrees in
the hundreds, coefficients far past 2**600).  Rational evaluation points use
``fractions.Fraction``; sign queries at rationals go through an integer-only
Horner scheme so that no gcd reduction happens in hot loops.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterable


class NotDivisible(ArithmeticError):
    """Exact division was requested but the divisor does not divide the dividend."""


@dataclasses.dataclass(init=False, frozen=True)
class Poly:
    """Polynomial over the integers, dense ascending coefficient tuple.

    The zero polynomial is the empty tuple and has degree -1.  Trailing zero
    coefficients are stripped on construction, so equal polynomials compare
    equal structurally.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- basic queries ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def __str__(self) -> str:
        return str(list(self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly((other,))
        return self + (-other)

    def __rsub__(self, other: int) -> Poly:
        return Poly((other,)) + (-self)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return Poly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def exact_div(self, divisor: Poly) -> Poly:
        """Quotient q with q * divisor == self, exactly over the integers.

        Raises NotDivisible when no such integer quotient exists; a raise
        here signals a broken identity, which is how the verification suite
        uses it.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return Poly()
        da, db = self.degree, divisor.degree
        if da < db:
            raise NotDivisible(f"degree {da} < degree {db}")
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        quot = [0] * (da - db + 1)
        for k in range(da - db, -1, -1):
            top = rem[k + db]
            if top == 0:
                continue
            if top % lead:
                raise NotDivisible(f"leading coefficient {top} not divisible by {lead}")
            t = top // lead
            quot[k] = t
            for j, bj in enumerate(divisor.coeffs):
                rem[k + j] -= t * bj
        if any(rem):
            raise NotDivisible("nonzero remainder")
        return Poly(quot)

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, x: Fraction | int) -> Fraction:
        """Exact value at a rational point."""
        xf = Fraction(x)
        num, den = xf.numerator, xf.denominator
        if not self.coeffs:
            return Fraction(0)
        acc = self.coeffs[-1]
        bpow = 1
        for c in reversed(self.coeffs[:-1]):
            bpow *= den
            acc = acc * num + c * bpow
        return Fraction(acc, den ** self.degree)

    def sign_at(self, x: Fraction | int) -> int:
        """Exact sign (-1, 0, +1) at a rational point, integer arithmetic only."""
        xf = Fraction(x)
        num, den = xf.numerator, xf.denominator
        if not self.coeffs:
            return 0
        acc = self.coeffs[-1]
        bpow = 1
        for c in reversed(self.coeffs[:-1]):
            bpow *= den
            acc = acc * num + c * bpow
        return (acc > 0) - (acc < 0)

    def evaluate_float(self, x: float) -> float:
        """Horner evaluation in double precision.

        Fine at modest degree; for high-degree family members prefer the
        recurrence-based evaluators, which do not suffer the cancellation
        of huge coefficients.
        """
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))
