"""Restricted even period polynomials.

A weight-k candidate is an even polynomial P(X) = sum p_2i X^2i without
constant term and of degree <= k-4, homogenized to P(X, Y) of degree k-2.
The space E_k is cut out by the two functional equations

    P(X) + X^(k-2) P(1/X) = 0
    P(X) + X^(k-2) P(1 - 1/X) + (X - 1)^(k-2) P(1/(1-X)) = 0

imposed symbolically after clearing denominators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .linalg import Mat, RatVector, kernel, normalize_vector


@dataclass(frozen=True)
class PeriodPoly:
    """P(X) = sum_{i=1}^{(k-4)/2} coeffs[i-1] X^(2i)."""

    k: int
    coeffs: tuple

    def __post_init__(self):
        if self.k % 2 or self.k < 4:
            raise ValueError("weight must be even and >= 4")
        n = (self.k - 4) // 2
        if len(self.coeffs) != n:
            raise ValueError(f"expected {n} coefficients for weight {self.k}")
        object.__setattr__(self, "coeffs",
                           tuple(Fraction(c) for c in self.coeffs))

    def is_antisymmetric(self) -> bool:
        """p_2i = -p_(k-2-2i) for all i."""
        n = len(self.coeffs)
        return all(self.coeffs[i] == -self.coeffs[n - 1 - i] for i in range(n))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        from .words import format_rational
        n = len(self.coeffs)
        parts = []
        # pair X^(k-2-2i) with X^(2i), highest power first
        for i in range(n - 1, (n + 1) // 2 - 1, -1):
            hi, lo = 2 * (i + 1), self.k - 2 - 2 * (i + 1)
            c = self.coeffs[i]
            if not c:
                continue
            pair = f"(X^{hi} - X^{lo})"
            if c == 1:
                parts.append(pair)
            elif c == -1:
                parts.append(f"-{pair}")
            else:
                parts.append(f"{format_rational(c)}{pair}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def ek_dim_formula(k: int) -> int:
    """floor((k-4)/4) - floor((k-2)/6)."""
    if k % 2 or k < 4:
        raise ValueError("weight must be even and >= 4")
    return (k - 4) // 4 - (k - 2) // 6


def _binomial_row_add(row: list, c: Fraction, shift: int, power: int, sign_base: int):
    # accumulate c * (X + sign_base)^power * X^shift into coefficient row
    for t in range(power + 1):
        row[shift + t] += c * math.comb(power, t) * (sign_base ** (power - t))


def ek_basis(k: int) -> List[PeriodPoly]:
    """Exact basis of E_k, normalized to integer coefficients with content 1
    and positive first (lowest-degree) nonzero coefficient."""
    if k % 2 or not 4 <= k <= 60:
        raise ValueError("weight must be even with 4 <= k <= 60")
    n = (k - 4) // 2
    if n == 0:
        return []
    deg = k - 2
    rows = []
    # antisymmetry: p_2i + p_(k-2-2i) = 0
    for i in range(1, n + 1):
        row = [Fraction(0)] * n
        row[i - 1] += 1
        row[n - i] += 1
        rows.append(row)
    # three-term relation, coefficients of X^0 .. X^(k-2):
    #   sum_i p_2i [ X^2i + (X-1)^2i X^(k-2-2i) + (X-1)^(k-2-2i) ] = 0
    cols = []
    for i in range(1, n + 1):
        col = [Fraction(0)] * (deg + 1)
        col[2 * i] += 1
        _binomial_row_add(col, Fraction(1), k - 2 - 2 * i, 2 * i, -1)
        _binomial_row_add(col, Fraction(1), 0, k - 2 - 2 * i, -1)
        cols.append(col)
    for d in range(deg + 1):
        rows.append([cols[j][d] for j in range(n)])
    basis = kernel(Mat(rows))
    assert len(basis) == ek_dim_formula(k)
    return [PeriodPoly(k, tuple(v)) for v in basis]


def check_functional_equations(P: PeriodPoly) -> bool:
    """Exact residual check of both defining functional equations."""
    n = len(P.coeffs)
    if not P.is_antisymmetric():
        return False
    deg = P.k - 2
    residual = [Fraction(0)] * (deg + 1)
    for i in range(1, n + 1):
        c = P.coeffs[i - 1]
        if not c:
            continue
        residual[2 * i] += c
        _binomial_row_add(residual, c, P.k - 2 - 2 * i, 2 * i, -1)
        _binomial_row_add(residual, c, 0, P.k - 2 - 2 * i, -1)
    return not any(residual)


def a_vector(P: PeriodPoly) -> RatVector:
    """Dictionary to bracket-relation coefficients: a_i = p_2i."""
    if not P.is_antisymmetric():
        raise ValueError("polynomial violates the antisymmetry constraint")
    return list(P.coeffs)


@dataclass(frozen=True)
class QVector:
    """Entries q_(2j+1, k-2j-1) for j = 1 .. (k-4)/2."""

    k: int
    entries: tuple

    def index_pairs(self) -> list:
        return [(2 * j + 1, self.k - 2 * j - 1)
                for j in range(1, len(self.entries) + 1)]


def q_vector(P: PeriodPoly) -> QVector:
    """Expand P(X+Y, Y) and divide the coefficient of X^2j Y^(k-2-2j)
    by C(k-2, 2j): q_(2j+1, k-2j-1) = sum_i p_2i C(2i, 2j) / C(k-2, 2j)."""
    n = len(P.coeffs)
    entries = []
    for j in range(1, n + 1):
        num = sum(P.coeffs[i - 1] * math.comb(2 * i, 2 * j) for i in range(1, n + 1))
        entries.append(num / Fraction(math.comb(P.k - 2, 2 * j)))
    return QVector(P.k, tuple(entries))
