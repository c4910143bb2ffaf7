"""Truncated trivariate power series over exact integers, and the
functional-equation checks built on them.

A series is a sparse map from exponent triples (ex, ey, ez) to nonzero int
coefficients, truncated at per-variable caps.  x marks the step count, y the
horizontal coordinate, z the vertical coordinate of the walk series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .walks import count_walks

__all__ = [
    "TruncSeries3",
    "make_series",
    "monomial",
    "bump_coeff",
    "series_add",
    "series_neg",
    "series_sub",
    "series_mul",
    "series_coeff",
    "section_y0",
    "section_z0",
    "build_G",
    "build_K",
    "build_H",
    "x_of_yz",
    "substitute_x",
    "CheckReport",
    "verify_kernel_equation",
    "verify_H_equation",
    "verify_root_identity",
    "series_to_json",
]

Caps = tuple[int, int, int]
Mono = tuple[int, int, int]


@dataclass(frozen=True)
class TruncSeries3:
    """Immutable truncated series.  Invariants: every stored exponent is
    within the caps and every stored coefficient is nonzero; construction
    goes through ``make_series`` which enforces both."""

    caps: Caps
    coeffs: dict[Mono, int]

    def coeff(self, mono: Mono) -> int:
        return self.coeffs.get(mono, 0)


def make_series(
    caps: Caps, items: Mapping[Mono, int] | Iterable[tuple[Mono, int]]
) -> TruncSeries3:
    """Normalize items into a series: accumulate duplicates, drop zeros and
    anything beyond the caps."""
    dx, dy, dz = caps
    if isinstance(items, Mapping):
        items = items.items()
    clean: dict[Mono, int] = {}
    for (ex, ey, ez), c in items:
        if ex < 0 or ey < 0 or ez < 0:
            raise ValueError(f"negative exponent in {(ex, ey, ez)}")
        if not c or ex > dx or ey > dy or ez > dz:
            continue
        key = (ex, ey, ez)
        acc = clean.get(key, 0) + c
        if acc:
            clean[key] = acc
        else:
            del clean[key]
    return TruncSeries3(caps, clean)


def monomial(caps: Caps, ex: int, ey: int, ez: int, coef: int = 1) -> TruncSeries3:
    return make_series(caps, {(ex, ey, ez): coef})


def bump_coeff(series: TruncSeries3, mono: Mono, delta: int = 1) -> TruncSeries3:
    """Copy of the series with one coefficient shifted by delta.  The
    negative controls in the functional-equation tests are built with this."""
    items = dict(series.coeffs)
    items[mono] = items.get(mono, 0) + delta
    return make_series(series.caps, items)


def series_add(a: TruncSeries3, b: TruncSeries3) -> TruncSeries3:
    """Sum of two series sharing the same caps."""
    if a.caps != b.caps:
        raise ValueError(f"cap mismatch: {a.caps} vs {b.caps}")
    out = dict(a.coeffs)
    for key, c in b.coeffs.items():
        acc = out.get(key, 0) + c
        if acc:
            out[key] = acc
        else:
            out.pop(key, None)
    return TruncSeries3(a.caps, out)


def series_neg(a: TruncSeries3) -> TruncSeries3:
    return TruncSeries3(a.caps, {k: -c for k, c in a.coeffs.items()})


def series_sub(a: TruncSeries3, b: TruncSeries3) -> TruncSeries3:
    return series_add(a, series_neg(b))


def series_mul(a: TruncSeries3, b: TruncSeries3) -> TruncSeries3:
    """Truncated product; the result caps are the componentwise minimum.

    Within the shared caps the product coefficients are exact, because a
    contribution to exponent e only involves operand exponents at most e.
    """
    dx = min(a.caps[0], b.caps[0])
    dy = min(a.caps[1], b.caps[1])
    dz = min(a.caps[2], b.caps[2])
    out: dict[Mono, int] = {}
    for (ax, ay, az), ac in a.coeffs.items():
        if ax > dx or ay > dy or az > dz:
            continue
        for (bx, by, bz), bc in b.coeffs.items():
            ex = ax + bx
            if ex > dx:
                continue
            ey = ay + by
            if ey > dy:
                continue
            ez = az + bz
            if ez > dz:
                continue
            key = (ex, ey, ez)
            acc = out.get(key, 0) + ac * bc
            if acc:
                out[key] = acc
            else:
                del out[key]
    return TruncSeries3((dx, dy, dz), out)


def series_coeff(a: TruncSeries3, mono: Mono) -> int:
    return a.coeffs.get(tuple(mono), 0)


def section_y0(a: TruncSeries3) -> TruncSeries3:
    """The y = 0 section, kept in the same ring."""
    return TruncSeries3(a.caps, {k: c for k, c in a.coeffs.items() if k[1] == 0})


def section_z0(a: TruncSeries3) -> TruncSeries3:
    """The z = 0 section, kept in the same ring."""
    return TruncSeries3(a.caps, {k: c for k, c in a.coeffs.items() if k[2] == 0})


def build_G(caps: Caps) -> TruncSeries3:
    """Walk-count generating series up to the caps, filled from the oracle."""
    dx, dy, dz = caps
    items: dict[Mono, int] = {}
    for m in range(dx + 1):
        for n1 in range(m % 2, min(m, dy) + 1, 2):
            for n2 in range(min((n1 + m) // 2, dz) + 1):
                v = count_walks(m, n1, n2)
                if v:
                    items[(m, n1, n2)] = v
    return TruncSeries3(caps, items)


def build_K(caps: Caps) -> TruncSeries3:
    """Kernel polynomial x(1+z)(1+y^2 z) - yz; five monomials when the caps
    admit them all."""
    return make_series(
        caps,
        {(1, 0, 0): 1, (1, 0, 1): 1, (1, 2, 1): 1, (1, 2, 2): 1, (0, 1, 1): -1},
    )


def build_H(caps: Caps, G: TruncSeries3 | None = None) -> TruncSeries3:
    """Boundary transform K*G + yz; its coefficients vanish off the axes."""
    if G is None:
        G = build_G(caps)
    caps = G.caps
    return series_add(series_mul(build_K(caps), G), monomial(caps, 0, 1, 1))


@dataclass(frozen=True)
class CheckReport:
    """Result of one functional-equation check.

    ``window`` is the inclusive exponent box actually compared, so a pass
    can never be silently vacuous; ``compared`` counts the candidate
    monomials examined inside it.
    """

    ok: bool
    window: Caps
    compared: int
    first_mismatch: tuple[Mono, int, int] | None

    def __bool__(self) -> bool:
        return self.ok


def _compare(lhs: TruncSeries3, rhs: TruncSeries3, window: Caps) -> CheckReport:
    wx, wy, wz = window
    keys = sorted(
        k
        for k in set(lhs.coeffs) | set(rhs.coeffs)
        if k[0] <= wx and k[1] <= wy and k[2] <= wz
    )
    for k in keys:
        lv = lhs.coeffs.get(k, 0)
        rv = rhs.coeffs.get(k, 0)
        if lv != rv:
            return CheckReport(False, window, len(keys), (k, lv, rv))
    return CheckReport(True, window, len(keys), None)


def verify_kernel_equation(caps: Caps, G: TruncSeries3 | None = None) -> CheckReport:
    """Check K*G = x(1+z)G(x,0,z) + xG(x,y,0) - xG(x,0,0) - yz.

    The kernel has degree 1 in x and 2 in both y (through y^2) and z, so
    the window drops that much from each cap; inside it both sides are
    determined exactly by the truncated data.
    """
    if G is None:
        G = build_G(caps)
    caps = G.caps
    dx, dy, dz = caps
    lhs = series_mul(build_K(caps), G)
    x_poly = monomial(caps, 1, 0, 0)
    x_1pz = make_series(caps, {(1, 0, 0): 1, (1, 0, 1): 1})
    g_y0 = section_y0(G)
    g_z0 = section_z0(G)
    g_00 = section_z0(g_y0)
    rhs = series_sub(
        series_add(series_mul(x_1pz, g_y0), series_mul(x_poly, g_z0)),
        series_add(series_mul(x_poly, g_00), monomial(caps, 0, 1, 1)),
    )
    return _compare(lhs, rhs, (dx - 1, dy - 2, dz - 2))


def verify_H_equation(caps: Caps, G: TruncSeries3 | None = None) -> CheckReport:
    """Check H(x,y,z) = H(x,0,z) + H(x,y,0) - H(x,0,0), i.e. that every
    mixed monomial of H (positive y and z exponents) vanishes."""
    H = build_H(caps, G)
    dx, dy, dz = H.caps
    h_y0 = section_y0(H)
    h_z0 = section_z0(H)
    h_00 = section_z0(h_y0)
    rhs = series_sub(series_add(h_y0, h_z0), h_00)
    return _compare(H, rhs, (dx - 1, dy - 2, dz - 2))


def x_of_yz(caps: Caps) -> TruncSeries3:
    """Power-series root of the kernel in x:

        x(y, z) = yz / ((1+z)(1+y^2 z))
                = sum over a, b >= 0 of (-1)^(a+b) y^(2b+1) z^(a+b+1).

    Only odd powers of y occur.  The x cap of the result is 0; the x
    component of ``caps`` is ignored.
    """
    _, dy, dz = caps
    items: dict[Mono, int] = {}
    for b in range((dy + 1) // 2):
        ey = 2 * b + 1
        for a in range(dz - b):
            ez = a + b + 1
            items[(0, ey, ez)] = 1 if (a + b) % 2 == 0 else -1
    return TruncSeries3((0, dy, dz), items)


def substitute_x(series: TruncSeries3, x_series: TruncSeries3) -> TruncSeries3:
    """Substitute x_series (no constant term, no x dependence) for the x
    variable, by Horner over the x-grouped parts of ``series``."""
    if x_series.coeff((0, 0, 0)):
        raise ValueError("substitution needs a series with zero constant term")
    caps2: Caps = (0, x_series.caps[1], x_series.caps[2])
    parts: dict[int, dict[Mono, int]] = {}
    for (ex, ey, ez), c in series.coeffs.items():
        parts.setdefault(ex, {})[(0, ey, ez)] = c
    acc = TruncSeries3(caps2, {})
    for m in range(series.caps[0], -1, -1):
        acc = series_mul(acc, x_series)
        if m in parts:
            acc = series_add(acc, make_series(caps2, parts[m]))
    return acc


def verify_root_identity(caps: Caps, G: TruncSeries3 | None = None) -> CheckReport:
    """Substitute the kernel root for x in the boundary-transform sections
    and check that H(x(y,z),0,z) + H(x(y,z),y,0) - H(x(y,z),0,0) collapses
    to the single monomial yz.

    Every monomial of the root carries at least one power of z, so x^m
    contributes z-order >= m and the composition is exact for ez up to the
    x cap; that bound is the z window.
    """
    H = build_H(caps, G)
    dx, dy, dz = H.caps
    wz = min(dx, dz)
    X = x_of_yz((0, dy, wz))
    h_y0 = section_y0(H)
    h_z0 = section_z0(H)
    h_00 = section_z0(h_y0)
    lhs = series_sub(
        series_add(substitute_x(h_y0, X), substitute_x(h_z0, X)),
        substitute_x(h_00, X),
    )
    target = monomial((0, dy, wz), 0, 1, 1)
    return _compare(lhs, target, (0, dy, wz))


def series_to_json(series: TruncSeries3) -> list[dict[str, object]]:
    """JSON-ready dump: [{"ex": int, "ey": int, "ez": int, "coef": str}, ...]
    sorted by exponents, coefficients as decimal strings."""
    return [
        {"ex": ex, "ey": ey, "ez": ez, "coef": str(c)}
        for (ex, ey, ez), c in sorted(series.coeffs.items())
    ]
