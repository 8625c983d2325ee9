"""High-precision numerical zeta values and relation verification.

Single zetas come from mpmath.  Double zetas are summed as
sum_m H_(m-1)^(s) / m^r: an exact prefix plus a Richardson-accelerated
tail whose terms are generated through the Hurwitz zeta function, so no
truncated-series error bound has to be guessed.  The s = 1 column splits
off the logarithmic part of the harmonic numbers through zeta'(r) first.
Rational scalars are recovered by continued-fraction reconstruction
(denominator bound 10^6) and confirmed at a second, higher precision.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath as mp

from .relations import Relation

GUARD_DIGITS = 15
DENOMINATOR_BOUND = 10 ** 6


def zeta_single(k: int, digits: int) -> mp.mpf:
    """zeta(k) to the requested number of decimal digits."""
    if k < 2:
        raise ValueError("zeta(k) requires k >= 2")
    if digits > 100:
        raise ValueError("digits <= 100")
    with mp.workdps(digits + GUARD_DIGITS):
        return +mp.zeta(k)


def zeta_double(r: int, s: int, digits: int) -> mp.mpf:
    """zeta(r, s) = sum_{m > n > 0} 1 / (m^r n^s)."""
    if r < 2:
        raise ValueError("zeta(r, s) requires r >= 2")
    if s < 1:
        raise ValueError("zeta(r, s) requires s >= 1")
    if digits > 50:
        raise ValueError("digits <= 50")
    with mp.workdps(digits + GUARD_DIGITS):
        if s == 1:
            # H_(m-1) = ln m + euler - d_m with d_m smooth in 1/m;
            # sum m^-r ln m = -zeta'(r), sum m^-r = zeta(r)
            g = mp.euler
            main = -mp.zeta(r, derivative=1) + g * mp.zeta(r)

            def dterm(m):
                return (mp.ln(m) + g - mp.harmonic(m - 1)) / mp.mpf(m) ** r

            return +(main - mp.nsum(dterm, [1, mp.inf]))
        zs = mp.zeta(s)

        def term(m):
            # H_(m-1)^(s) = zeta(s) - zeta(s, m)
            return (zs - mp.zeta(s, m)) / mp.mpf(m) ** r

        return +mp.nsum(term, [2, mp.inf])


def reconstruct_rational(x, max_denominator: int = DENOMINATOR_BOUND) -> Fraction:
    """Best continued-fraction approximation with bounded denominator."""
    p, q = mp.libmp.to_rational(mp.mpf(x)._mpf_)
    return Fraction(p, q).limit_denominator(max_denominator)


def verify_relation(rel: Relation, digits: int) -> tuple:
    """Evaluate a double zeta relation numerically.

    Returns (residual, scalar): the rational scalar c with
    sum q_(r,s) zeta(r, s) ~ c * zeta(k), reconstructed by continued
    fractions and confirmed at a second precision, and the absolute
    residual |sum / zeta(k) - c|.  scalar is None when the two
    reconstructions disagree.
    """
    if rel.kind != "double_zeta":
        raise ValueError("only double_zeta relations can be verified numerically")
    scalars = []
    ratios = []
    for d in (digits, digits + 10):
        with mp.workdps(d + GUARD_DIGITS):
            total = mp.mpf(0)
            for (r, s), c in rel.terms:
                if c:
                    total += (mp.mpf(c.numerator) / c.denominator
                              * zeta_double(r, s, d))
            ratio = total / zeta_single(rel.weight, d)
            ratios.append(+ratio)
            scalars.append(reconstruct_rational(ratio))
    if scalars[0] != scalars[1]:
        with mp.workdps(digits + GUARD_DIGITS):
            return +abs(ratios[0]), None
    scalar = scalars[0]
    with mp.workdps(digits + GUARD_DIGITS):
        residual = +abs(ratios[0] - mp.mpf(scalar.numerator) / scalar.denominator)
    return residual, scalar
