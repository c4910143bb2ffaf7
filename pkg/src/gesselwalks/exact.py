"""Exact combinatorial arithmetic for quarter-plane walk counting.

Everything here is pure and exact: integers are Python ints, rationals are
``fractions.Fraction`` values kept in lowest terms.  Floating point never
appears anywhere in the package.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction

__all__ = [
    "binom_general",
    "pochhammer",
    "catalan",
    "gessel_closed_form",
    "ClosedFormFamily",
    "conjectured_value",
]


def binom_general(a: int, t: int) -> int:
    """Binomial coefficient with an arbitrary integer upper index.

    Evaluates the falling-factorial form a(a-1)...(a-t+1)/t!, the convention
    under which the coefficient vanishes exactly when t < 0.  For a < 0 it
    equals (-1)^t * C(-a+t-1, t).

    >>> binom_general(5, 2)
    10
    >>> binom_general(-1, 1)
    -1
    """
    if t < 0:
        return 0
    if a >= 0:
        return math.comb(a, t)
    reflected = math.comb(t - a - 1, t)
    return -reflected if t % 2 else reflected


def pochhammer(q: Fraction | int, n: int) -> Fraction:
    """Rising factorial (q)_n = q(q+1)...(q+n-1), with (q)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    out = Fraction(1)
    base = Fraction(q)
    for s in range(n):
        out *= base + s
    return out


def catalan(n: int) -> int:
    """The n-th Catalan number, C(2n, n) / (n+1)."""
    if n < 0:
        raise ValueError("catalan needs n >= 0")
    return math.comb(2 * n, n) // (n + 1)


def gessel_closed_form(n: int) -> Fraction:
    """Closed form for the count of 2n-step walks returning to the origin:
    16^n (1/2)_n (5/6)_n / ((2)_n (5/3)_n).

    The value always reduces to an integer; a non-integral result would mean
    the evaluation itself is broken, so that case raises instead of rounding.
    """
    if n < 0:
        raise ValueError("gessel_closed_form needs n >= 0")
    value = (
        Fraction(16) ** n
        * pochhammer(Fraction(1, 2), n)
        * pochhammer(Fraction(5, 6), n)
        / (pochhammer(2, n) * pochhammer(Fraction(5, 3), n))
    )
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer value, got {value}")
    return value


class ClosedFormFamily(Enum):
    """Families of walk counts with a printed closed form for small excess."""

    F201 = "f201"  # F(2n; 0, 1)
    VERT = "vert"  # F(2n+2k; 0, n), k = 0..3
    HOR = "hor"    # F(n+2k; n, 0), k = 0..3


def conjectured_value(family: ClosedFormFamily, k: int | None, n: int) -> Fraction:
    """Evaluate one of the printed conjectural closed forms exactly.

    k selects the excess within the VERT and HOR families and must lie in
    the printed range 0..3; the F201 family takes k=None.  Combinations
    without a printed formula raise ValueError.
    """
    if n < 0:
        raise ValueError("conjectured_value needs n >= 0")
    if family is ClosedFormFamily.F201:
        if k is not None:
            raise ValueError("formula not displayed: F201 takes k=None")
        return (16**n * pochhammer(Fraction(1, 2), n) / pochhammer(3, n)) * (
            Fraction(5, 27)
            * pochhammer(Fraction(7, 6), n)
            / pochhammer(Fraction(7, 3), n)
            + Fraction(111 * n * n + 183 * n - 50, 270)
            * pochhammer(Fraction(5, 6), n)
            / pochhammer(Fraction(8, 3), n)
        )
    if family is ClosedFormFamily.VERT:
        if k == 0:
            return 4**n * pochhammer(Fraction(1, 2), n) / pochhammer(2, n)
        if k == 1:
            return 2 * 4**n * (n + 1) * pochhammer(Fraction(3, 2), n) / pochhammer(3, n)
        if k == 2:
            return (
                4**n
                * (n + 1)
                * (8 * n * n + 32 * n + 33)
                * pochhammer(Fraction(3, 2), n)
                / (3 * pochhammer(4, n))
            )
        if k == 3:
            quartic = 64 * n**4 + 672 * n**3 + 2648 * n**2 + 4641 * n + 3060
            return (
                Fraction(4) ** (n - 1)
                * (n + 1)
                * quartic
                * pochhammer(Fraction(3, 2), n)
                / (9 * pochhammer(5, n))
            )
        raise ValueError(f"formula not displayed for (VERT, k={k})")
    if family is ClosedFormFamily.HOR:
        if k == 0:
            return Fraction(1)
        if k == 1:
            return Fraction((n + 1) * (n + 4), 2)
        if k == 2:
            return Fraction((n + 1) * (n**3 + 15 * n**2 + 74 * n + 132), 12)
        if k == 3:
            quintic = n**5 + 32 * n**4 + 407 * n**3 + 2620 * n**2 + 8604 * n + 12240
            return Fraction((n + 1) * quintic, 144)
        raise ValueError(f"formula not displayed for (HOR, k={k})")
    raise ValueError(f"unknown family {family!r}")
