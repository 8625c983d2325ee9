"""Shuffle and star regularization of formal zeta symbols.

Z(w) symbols for convergent words span the regularized shuffle algebra;
non-convergent words are rewritten onto convergent ones by the double-sum
shuffle regularization, and words ending in y additionally get star values
Z*(w) built from the exponential generating series of Z*(1, ..., 1).
Setting the regularized stuffle products Z*(u) Z*(v) - Z*(u * v) to zero
yields the linear relations defining the small-weight formal zeta quotient.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .words import (Word, check_word, composition_of_word, format_rational,
                    is_convergent, pi_convergent, shuffle, stuffle,
                    words_of_weight)


class ZetaCombo:
    """Rational combination of Z(w) symbols for convergent words w,
    plus a scalar slot for weight-0 unit terms."""

    __slots__ = ("terms", "scalar")

    def __init__(self, terms: Mapping[Word, Fraction] | None = None, scalar=0):
        self.terms: dict = {}
        if terms:
            for w, c in terms.items():
                c = Fraction(c)
                if not c:
                    continue
                if not is_convergent(w):
                    raise ValueError(f"non-convergent symbol: {w!r}")
                self.terms[w] = c
        self.scalar = Fraction(scalar)

    @classmethod
    def unit(cls) -> "ZetaCombo":
        return cls(scalar=1)

    @classmethod
    def symbol(cls, w: Word) -> "ZetaCombo":
        return cls({w: Fraction(1)})

    def __add__(self, other: "ZetaCombo") -> "ZetaCombo":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        res = ZetaCombo.__new__(ZetaCombo)
        res.terms = out
        res.scalar = self.scalar + other.scalar
        return res

    def __sub__(self, other: "ZetaCombo") -> "ZetaCombo":
        return self + other.scale(-1)

    def scale(self, c) -> "ZetaCombo":
        c = Fraction(c)
        res = ZetaCombo.__new__(ZetaCombo)
        res.terms = {} if not c else {w: c * v for w, v in self.terms.items()}
        res.scalar = c * self.scalar
        return res

    def __mul__(self, other: "ZetaCombo") -> "ZetaCombo":
        """Shuffle multiplication Z(u) Z(v) = Z(u sh v)."""
        res = other.scale(self.scalar) + self.scale(other.scalar)
        res.scalar -= self.scalar * other.scalar
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                for w, m in shuffle(u, v).terms.items():
                    s = res.terms.get(w, 0) + a * b * m
                    if s:
                        res.terms[w] = s
                    else:
                        res.terms.pop(w, None)
        return res

    def __eq__(self, other) -> bool:
        return (isinstance(other, ZetaCombo) and self.terms == other.terms
                and self.scalar == other.scalar)

    def __bool__(self) -> bool:
        return bool(self.terms) or bool(self.scalar)

    def is_zero(self) -> bool:
        return not self

    def coeff(self, w: Word) -> Fraction:
        return self.terms.get(w, Fraction(0))

    def is_homogeneous(self) -> bool:
        lengths = {len(w) for w in self.terms}
        if self.scalar:
            lengths.add(0)
        return len(lengths) <= 1

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        if self.scalar:
            parts.append(format_rational(self.scalar))
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            sym = "Z(" + ", ".join(str(r) for r in composition_of_word(w)) + ")"
            if c == 1:
                parts.append(sym)
            elif c == -1:
                parts.append(f"-{sym}")
            else:
                parts.append(f"{format_rational(c)} {sym}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"ZetaCombo({str(self)})"


def decompose(w: Word) -> tuple:
    """Unique splitting w = y^r . v . x^s with v convergent or empty."""
    check_word(w)
    r = len(w) - len(w.lstrip("y"))
    core = w[r:]
    s = len(core) - len(core.rstrip("x"))
    v = core[: len(core) - s] if s else core
    return r, v, s


@lru_cache(maxsize=None)
def shuffle_regularize(w: Word) -> ZetaCombo:
    """Express Z(w) on convergent words via the double-sum shuffle
    regularization; the identity on already-convergent words."""
    if is_convergent(w):
        return ZetaCombo.symbol(w)
    r, v, s = decompose(w)
    out = ZetaCombo()
    for a in range(r + 1):
        for b in range(s + 1):
            inner = "y" * (r - a) + v + "x" * (s - b)
            poly = shuffle("y" * a, inner)
            acc = {}
            for u, c in poly.terms.items():
                for t, m in shuffle(u, "x" * b).terms.items():
                    acc[t] = acc.get(t, 0) + c * m
            proj = {t: c for t, c in acc.items() if is_convergent(t)}
            sign = -1 if (a + b) % 2 else 1
            out = out + ZetaCombo(proj).scale(sign)
    return out


def regularize_poly(f) -> ZetaCombo:
    """Linear extension of shuffle_regularize to a polynomial."""
    out = ZetaCombo()
    for w, c in f.terms.items():
        out = out + shuffle_regularize(w).scale(c)
    return out


@lru_cache(maxsize=None)
def star_units(N: int) -> tuple:
    """Z*(1, ..., 1) with r ones for r = 0 .. N, as the y^r coefficients of
    exp( sum_{r>=1} ((-1)^(r-1)/r) Z(x^(r-1) y) y^r )."""
    if N > 12:
        raise ValueError("star units are truncated at weight 12")
    # exponent coefficients by y-power; Z(y) = 0 kills the r = 1 term
    expo = [ZetaCombo() for _ in range(N + 1)]
    for r in range(2, N + 1):
        sign = Fraction(1 if (r - 1) % 2 == 0 else -1, r)
        expo[r] = shuffle_regularize("x" * (r - 1) + "y").scale(sign)
    result = [ZetaCombo() for _ in range(N + 1)]
    result[0] = ZetaCombo.unit()
    power = list(result)  # running expo^m / m!
    m = 0
    while True:
        m += 1
        if 2 * m > N:
            break
        nxt = [ZetaCombo() for _ in range(N + 1)]
        for i in range(N + 1):
            if not power[i]:
                continue
            for j in range(2, N + 1 - i):
                if expo[j]:
                    nxt[i + j] = nxt[i + j] + (power[i] * expo[j]).scale(Fraction(1, m))
        power = nxt
        for i in range(N + 1):
            result[i] = result[i] + power[i]
    return tuple(result)


def star_regularize(w: Word) -> ZetaCombo:
    """Z*(w) for a word ending in y: identity on convergent words,
    the star unit on pure y-powers, and the mixing sum
    Z*(y^m v) = sum_r Z*(1^r) Z(y^(m-r) v) otherwise."""
    check_word(w)
    if not w or w[-1] != "y":
        raise ValueError(f"star regularization needs a word ending in y: {w!r}")
    if is_convergent(w):
        return ZetaCombo.symbol(w)
    m = len(w) - len(w.lstrip("y"))
    v = w[m:]
    units = star_units(len(w))
    if not v:
        return units[m]
    out = ZetaCombo()
    for r in range(m + 1):
        out = out + units[r] * shuffle_regularize("y" * (m - r) + v)
    return out


def stuffle_relation(u: Word, v: Word) -> ZetaCombo:
    """The relation Z*(u) Z*(v) - Z*(u * v), resolved onto convergent
    symbols; set to zero in the formal zeta quotient."""
    lhs = star_regularize(u) * star_regularize(v)
    rhs = ZetaCombo()
    for w, c in stuffle(u, v).terms.items():
        rhs = rhs + star_regularize(w).scale(c)
    return lhs - rhs


def _y_pairs(n: int) -> list:
    """All (u, v), u <= v, nonempty words ending in y with |u| + |v| = n."""
    pairs = []
    for a in range(1, n // 2 + 1):
        us = [w for w in words_of_weight(a) if w.endswith("y")]
        vs = [w for w in words_of_weight(n - a) if w.endswith("y")]
        for u in us:
            for v in vs:
                if a == n - a and u > v:
                    continue
                pairs.append((u, v))
    return pairs


def weight_relations(n: int) -> list:
    """All stuffle relations of weight n as ZetaCombos."""
    out = []
    for u, v in _y_pairs(n):
        rel = stuffle_relation(u, v)
        if rel:
            out.append(rel)
    return out


def fz_quotient_dim(n: int) -> tuple:
    """Dimension of the weight-n formal zeta quotient and a reduced
    basis of the relation space (rows over convergent symbols)."""
    if not 2 <= n <= 8:
        raise ValueError("quotient dimensions are desk-scale: 2 <= n <= 8")
    from .linalg import Mat

    symbols = [w for w in words_of_weight(n) if is_convergent(w)]
    index = {w: i for i, w in enumerate(symbols)}
    rows = []
    for rel in weight_relations(n):
        if rel.scalar:
            raise AssertionError("weight-homogeneous relation grew a scalar part")
        rows.append([rel.coeff(w) for w in symbols])
    if not rows:
        return len(symbols), []
    red, pivots = Mat(rows).rref()
    basis = [ZetaCombo(dict(zip(symbols, row))) for row in red.rows[: len(pivots)]]
    return len(symbols) - len(pivots), basis


def sh_basis_dim(n: int) -> int:
    """Dimension of the weight-n space of polynomials annihilated by all
    shuffle-regularization relation rows; equals 2^(n-2)."""
    if not 2 <= n <= 8:
        raise ValueError("2 <= n <= 8")
    from .linalg import Mat

    all_words = words_of_weight(n)
    index = {w: i for i, w in enumerate(all_words)}
    rows = []
    for w in all_words:
        if is_convergent(w):
            continue
        row = [Fraction(0)] * len(all_words)
        row[index[w]] = Fraction(1)
        for t, c in shuffle_regularize(w).terms.items():
            row[index[t]] -= c
        rows.append(row)
    return len(all_words) - Mat(rows).rank()
