"""Hilbert series as a rational function: numerator over (1 - t)^arity.

The numerator is the alternating subset sum K(t) = sum over subsets S of the
generators of (-1)^|S| t^(deg lcm S); expanding K(t) / (1 - t)^a recovers the
Hilbert function values.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ResourceCapError
from .monomial import MonomialIdeal, lcm
from .pascal import pascal_F

LATTICE_CAP_DEFAULT = 20


@dataclass(frozen=True)
class SeriesNumerator:
    """Finitely supported numerator polynomial with denominator (1 - t)^arity.

    ``coefficients`` maps degree to a signed integer; zero coefficients are
    not stored.
    """

    arity: int
    coefficients: tuple[tuple[int, int], ...]  # (degree, coefficient), ascending

    def coefficient(self, degree: int) -> int:
        for d, c in self.coefficients:
            if d == degree:
                return c
        return 0

    @property
    def is_zero(self) -> bool:
        return not self.coefficients


def series_numerator(
    I: MonomialIdeal, lattice_cap: int = LATTICE_CAP_DEFAULT
) -> SeriesNumerator:
    """Numerator of HS(R/I, t) over (1 - t)^arity.

    The empty subset contributes the leading 1; each nonempty subset of
    generators contributes (-1)^|S| t^(deg lcm S).
    """
    n = len(I.generators)
    if n > lattice_cap:
        raise ResourceCapError(f"{n} generators exceed lattice cap {lattice_cap}")
    coeffs: dict[int, int] = {0: 1}
    for r in range(1, n + 1):
        sign = -1 if r % 2 == 1 else 1
        for subset in combinations(I.generators, r):
            m = subset[0]
            for g in subset[1:]:
                m = lcm(m, g)
            d = m.degree
            coeffs[d] = coeffs.get(d, 0) + sign
    items = tuple(sorted((d, c) for d, c in coeffs.items() if c != 0))
    return SeriesNumerator(I.arity, items)


def expand_series(num: SeriesNumerator, b_max: int) -> list[int]:
    """First b_max + 1 power-series coefficients of K(t) / (1 - t)^arity.

    Since 1 / (1 - t)^a has coefficients F(a, b), the expansion is an exact
    convolution.  Coefficients of a valid quotient ring are never negative;
    a negative value signals a broken numerator.
    """
    if b_max < 0:
        raise ValueError("b_max must be >= 0")
    values = []
    for b in range(b_max + 1):
        v = sum(c * pascal_F(num.arity, b - d) for d, c in num.coefficients)
        if v < 0:
            raise ValueError(f"negative coefficient {v} at degree {b}: invalid numerator")
        values.append(v)
    return values


def render_series(num: SeriesNumerator) -> str:
    """Text form like ``(1 - t^2 - t^3 + t^5)/(1 - t)^3``.

    Terms appear in ascending degree with explicit signs; zero terms are
    omitted.  The zero numerator renders as plain ``0``.
    """
    if num.is_zero:
        return "0"
    parts: list[str] = []
    for d, c in num.coefficients:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            t = "t" if d == 1 else f"t^{d}"
            body = t if mag == 1 else f"{mag}*{t}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    numerator = " ".join(parts)
    if len(num.coefficients) > 1 or num.coefficients[0][0] != 0:
        numerator = f"({numerator})"
    return f"{numerator}/(1 - t)^{num.arity}"
