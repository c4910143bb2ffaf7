"""Desk-scale verification of the conjectured closed forms: sequence
comparison against the oracle, the second-order recurrence for the counts
next to the origin, and exact polynomial fits for the excess families with
their claimed structure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

from .exact import gessel_closed_form, pochhammer
from .walks import count_walks, f_tilde

__all__ = [
    "FitError",
    "GesselCheck",
    "verify_gessel",
    "G_RECURRENCE_POLYS",
    "recurrence_residual",
    "default_g",
    "RecurrenceCheck",
    "verify_recurrence_g",
    "FitFamily",
    "PolyFit",
    "claimed_degree",
    "family_target",
    "fit_family",
    "FamilyClaims",
    "verify_family_claims",
    "fit_report",
    "solve_linear_exact",
]


class FitError(ValueError):
    """An ansatz could not be fitted or failed held-out validation."""


@dataclass(frozen=True)
class GesselCheck:
    n_max: int
    ok: bool
    first_mismatch: tuple[int, int, Fraction] | None  # (n, oracle, closed form)


def verify_gessel(n_max: int) -> GesselCheck:
    """Compare the dynamic-programming counts F(2n; 0, 0) with the closed
    form for 0 <= n <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    for n in range(n_max + 1):
        dp = count_walks(2 * n, 0, 0)
        cf = gessel_closed_form(n)
        if cf != dp:
            return GesselCheck(n_max, False, (n, dp, cf))
    return GesselCheck(n_max, True, None)


# Coefficient polynomials (ascending powers of n) of the conjectured
# second-order recurrence for g(n) = F(2n+1; 1, 0), multiplying g(n+1),
# g(n) and g(n-1) in that order.  Factored forms:
#   (n+3)(3n+7)(3n+8),  -8(2n+3)(18n^2+54n+35),  256 n (3n+1)(3n+2).
G_RECURRENCE_POLYS: tuple[tuple[int, ...], ...] = (
    (168, 191, 72, 9),
    (-840, -1856, -1296, -288),
    (0, 512, 2304, 2304),
)


def _poly_at(coeffs: Sequence[int], n: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


def default_g(n: int) -> int:
    return count_walks(2 * n + 1, 1, 0)


def recurrence_residual(n: int, g: Callable[[int], int] | None = None) -> int:
    """Residual of the second-order recurrence at n.

    Terms whose coefficient polynomial vanishes are skipped entirely; at
    n = 0 the g(n-1) coefficient is 0, so g(-1) is never evaluated and the
    boundary instance reduces to 168 g(1) - 840 g(0).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    g = g or default_g
    acc = 0
    for poly, arg in zip(G_RECURRENCE_POLYS, (n + 1, n, n - 1)):
        c = _poly_at(poly, n)
        if c:
            acc += c * g(arg)
    return acc


@dataclass(frozen=True)
class RecurrenceCheck:
    order: int
    coeff_polys: tuple[tuple[int, ...], ...]
    range_checked: int
    holds: bool
    first_failure: tuple[int, int] | None  # (n, residual)


def verify_recurrence_g(
    n_max: int, g: Callable[[int], int] | None = None
) -> RecurrenceCheck:
    """Check that the recurrence residual vanishes for 0 <= n <= n_max - 1."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    g = g or default_g
    for n in range(n_max):
        res = recurrence_residual(n, g)
        if res != 0:
            return RecurrenceCheck(2, G_RECURRENCE_POLYS, n_max - 1, False, (n, res))
    return RecurrenceCheck(2, G_RECURRENCE_POLYS, n_max - 1, True, None)


class FitFamily(Enum):
    P_K = "p"    # first polynomial of the F(2n; 0, k) two-term ansatz
    Q_K = "q"    # second polynomial of the same ansatz
    R_K = "r"    # vertical excess family F(2n+2k; 0, n)
    S_K = "s"    # horizontal excess family F(n+2k; n, 0)
    RT_K = "rt"  # boundary-transform vertical family f_tilde(2n+2k+1; 0, n)


@dataclass(frozen=True)
class PolyFit:
    """An exactly interpolated polynomial from one of the ansatz families,
    together with its validation record."""

    family: FitFamily
    k: int
    coeffs: tuple[Fraction, ...]  # ascending powers of n
    sample_points: tuple[int, ...]
    verified_extra: int

    @property
    def degree(self) -> int:
        for d in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[d]:
                return d
        return 0

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[self.degree]

    def evaluate(self, n: int | Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    @property
    def divisible_by_n_plus_1(self) -> bool:
        return self.evaluate(-1) == 0


def claimed_degree(family: FitFamily, k: int) -> int:
    return {
        FitFamily.P_K: 2 * k - 2,
        FitFamily.Q_K: 2 * k,
        FitFamily.R_K: 2 * k - 1,
        FitFamily.S_K: 2 * k,
        FitFamily.RT_K: 2 * k + 1,
    }[family]


def solve_linear_exact(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction] | None:
    """Gaussian elimination over Fraction; None when the system is singular."""
    n = len(rows)
    m = [list(row) + [rhs[r]] for r, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / m[col][col]
                for c in range(col, n + 1):
                    m[r][c] -= f * m[col][c]
    out = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        acc = m[r][n]
        for c in range(r + 1, n):
            acc -= m[r][c] * out[c]
        out[r] = acc / m[r][r]
    return out


def family_target(family: FitFamily, k: int, n: int) -> Fraction:
    """Oracle value the fitted polynomial must reproduce at n, with the
    ansatz prefactor divided out exactly."""
    if family is FitFamily.S_K:
        return Fraction(count_walks(n + 2 * k, n, 0))
    if family is FitFamily.R_K:
        F = count_walks(2 * n + 2 * k, 0, n)
        return F * pochhammer(k + 2, n) / (4**n * pochhammer(Fraction(3, 2), n))
    if family is FitFamily.RT_K:
        Ft = f_tilde(2 * n + 2 * k + 1, 0, n)
        return Ft * pochhammer(k + 2, n) / (4**n * pochhammer(Fraction(1, 2), n))
    raise ValueError(f"no single-polynomial target for {family}; P/Q are fitted jointly")


def fit_family(family: FitFamily, k: int, held_out: int = 5) -> PolyFit:
    """Fit the ansatz polynomial for (family, k) from consecutive oracle
    samples n = 0, 1, 2, ... and validate it on ``held_out`` further points.

    P_K and Q_K are solved jointly from the two-polynomial ansatz for
    F(2n; 0, k).  k = 0 is refused where the base case is a printed closed
    form rather than a polynomial (R_K, and the P/Q pair).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if held_out < 1:
        raise ValueError("held_out must be positive")
    if family in (FitFamily.P_K, FitFamily.Q_K):
        if k < 1:
            raise ValueError("the k = 0 point is the base closed form; P/Q need k >= 1")
        p, q = _fit_pq(k, held_out)
        return p if family is FitFamily.P_K else q
    if family is FitFamily.R_K and k == 0:
        raise ValueError("r_0(n) = 1/(2n+1) is a closed form, not a polynomial fit")
    deg = claimed_degree(family, k)
    samples = list(range(deg + 1))
    rows = [[Fraction(n) ** a for a in range(deg + 1)] for n in samples]
    rhs = [family_target(family, k, n) for n in samples]
    sol = solve_linear_exact(rows, rhs)
    if sol is None:
        raise FitError(f"ansatz inconsistent at ({family.value}, {k})")
    fit = PolyFit(family, k, tuple(sol), tuple(samples), 0)
    for n in range(deg + 1, deg + 1 + held_out):
        if fit.evaluate(n) != family_target(family, k, n):
            raise FitError(f"conjecture fails at n={n} for ({family.value}, {k})")
    return replace(fit, verified_extra=held_out)


def _pq_weights(k: int, n: int) -> tuple[Fraction, Fraction]:
    wa = pochhammer(Fraction(7, 6), n) / pochhammer(Fraction(3 * k + 4, 3), n)
    wb = pochhammer(Fraction(5, 6), n) / pochhammer(Fraction(3 * k + 5, 3), n)
    return wa, wb


def _pq_target(k: int, n: int) -> Fraction:
    F = count_walks(2 * n, 0, k)
    return F * pochhammer(k + 2, n) / (16**n * pochhammer(Fraction(1, 2), n))


def _fit_pq(k: int, held_out: int) -> tuple[PolyFit, PolyFit]:
    n_p = 2 * k - 1  # coefficients of p_k, degree 2k-2
    n_q = 2 * k + 1  # coefficients of q_k, degree 2k
    total = n_p + n_q
    samples = list(range(total))
    rows = []
    rhs = []
    for n in samples:
        wa, wb = _pq_weights(k, n)
        row = [wa * Fraction(n) ** a for a in range(n_p)]
        row += [wb * Fraction(n) ** b for b in range(n_q)]
        rows.append(row)
        rhs.append(_pq_target(k, n))
    sol = solve_linear_exact(rows, rhs)
    if sol is None:
        raise FitError(f"ansatz inconsistent at (p/q, {k})")
    p = PolyFit(FitFamily.P_K, k, tuple(sol[:n_p]), tuple(samples), 0)
    q = PolyFit(FitFamily.Q_K, k, tuple(sol[n_p:]), tuple(samples), 0)
    for n in range(total, total + held_out):
        wa, wb = _pq_weights(k, n)
        if wa * p.evaluate(n) + wb * q.evaluate(n) != _pq_target(k, n):
            raise FitError(f"conjecture fails at n={n} for (p/q, {k})")
    return replace(p, verified_extra=held_out), replace(q, verified_extra=held_out)


@dataclass(frozen=True)
class FamilyClaims:
    """Which of the claimed structural properties a fit satisfies.

    Fields are None where the family carries no such claim.
    """

    family: FitFamily
    k: int
    degree_expected: int
    degree_actual: int
    degree_ok: bool
    leading_expected: Fraction | None
    leading_ok: bool | None
    divisible_by_n_plus_1: bool | None

    @property
    def ok(self) -> bool:
        checks = [self.degree_ok]
        if self.leading_ok is not None:
            checks.append(self.leading_ok)
        if self.divisible_by_n_plus_1 is not None:
            checks.append(self.divisible_by_n_plus_1)
        return all(checks)


def verify_family_claims(fit: PolyFit) -> FamilyClaims:
    """Check claimed degree, leading coefficient, and (n+1) divisibility."""
    deg_exp = claimed_degree(fit.family, fit.k)
    leading_exp: Fraction | None = None
    leading_ok: bool | None = None
    if fit.family is FitFamily.S_K:
        leading_exp = Fraction(1, math.factorial(fit.k) * math.factorial(fit.k + 1))
        leading_ok = fit.leading_coefficient == leading_exp
    divisible: bool | None = None
    if fit.family in (FitFamily.S_K, FitFamily.R_K) and fit.k >= 1:
        divisible = fit.divisible_by_n_plus_1
    return FamilyClaims(
        fit.family,
        fit.k,
        deg_exp,
        fit.degree,
        fit.degree == deg_exp,
        leading_exp,
        leading_ok,
        divisible,
    )


def fit_report(fit: PolyFit, claims: FamilyClaims | None = None) -> dict:
    """JSON-ready report for one fit."""
    claims = claims or verify_family_claims(fit)
    return {
        "family": fit.family.value,
        "k": fit.k,
        "degree": fit.degree,
        "coeffs": [str(c) for c in fit.coeffs],
        "claims": {
            "degree_expected": claims.degree_expected,
            "degree_ok": claims.degree_ok,
            "leading_expected": (
                str(claims.leading_expected)
                if claims.leading_expected is not None
                else None
            ),
            "leading_ok": claims.leading_ok,
            "divisible_by_n_plus_1": claims.divisible_by_n_plus_1,
        },
        "held_out_ok": fit.verified_extra,
    }
