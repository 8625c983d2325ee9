"""Dense exact-rational matrices and the specific matrix constructions
used by the period-polynomial / double-zeta correspondence:

    A       closed-form coefficient matrix (and its symbolic twin computed
            from the enveloping-algebra product of depth-1 Lie elements)
    S, T    antidiagonal involution and its eigenvector basis change
    D, B    the binomial matrices entering the q <- a variable change
    M       T^-1 A T, with its identity/zero block structure
    tADB    the symmetric product

All elimination is exact Gauss-Jordan over Fractions with deterministic
pivoting (first nonzero column, topmost nonzero row), so kernel bases are
reproducible.  Kernel vectors are canonicalized to integer entries with
content 1 and positive first nonzero entry.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import List, Sequence

RatVector = List[Fraction]


def _fr(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Mat:
    """Dense matrix over Q."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [[_fr(c) for c in row] for row in rows]
        if self.rows:
            ncols = len(self.rows[0])
            if any(len(r) != ncols for r in self.rows):
                raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat) and self.rows == other.rows

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        ot = other.transpose().rows
        return Mat([[sum(a * b for a, b in zip(row, col)) for col in ot]
                    for row in self.rows])

    def __sub__(self, other: "Mat") -> "Mat":
        return Mat([[a - b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(self.rows, other.rows)])

    def transpose(self) -> "Mat":
        return Mat(list(map(list, zip(*self.rows)))) if self.rows else Mat([])

    def mul_vec(self, v: Sequence) -> RatVector:
        return [sum(a * _fr(b) for a, b in zip(row, v)) for row in self.rows]

    def rref(self) -> tuple:
        """Reduced row echelon form; returns (Mat, pivot column list)."""
        rows = [list(r) for r in self.rows]
        nr, nc = len(rows), self.ncols
        pivots = []
        r = 0
        for c in range(nc):
            if r >= nr:
                break
            p = next((i for i in range(r, nr) if rows[i][c]), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            inv = Fraction(1) / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(nr):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return Mat(rows), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> "Mat":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("not square")
        aug = Mat([row + Mat.identity(n).rows[i] for i, row in enumerate(self.rows)])
        red, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return Mat([row[n:] for row in red.rows])

    def is_symmetric(self) -> bool:
        return self.rows == self.transpose().rows

    # -- serialization --------------------------------------------------

    def to_csv(self) -> str:
        from .words import format_rational
        return "\n".join(",".join(format_rational(c) for c in row) for row in self.rows)

    def to_json(self) -> str:
        from .words import format_rational
        return json.dumps([[format_rational(c) for c in row] for row in self.rows])

    def __str__(self) -> str:
        from .words import format_rational
        cells = [[format_rational(c) for c in row] for row in self.rows]
        width = max((len(s) for row in cells for s in row), default=1)
        return "\n".join("[ " + "  ".join(s.rjust(width) for s in row) + " ]"
                         for row in cells)

    def __repr__(self) -> str:
        return f"Mat({self.rows!r})"


def normalize_vector(v: Sequence) -> RatVector:
    """Scale to integer entries, content 1, first nonzero entry positive."""
    v = [_fr(c) for c in v]
    nonzero = [c for c in v if c]
    if not nonzero:
        return v
    den = math.lcm(*(c.denominator for c in nonzero))
    ints = [c * den for c in v]
    g = math.gcd(*(int(c) for c in ints if c))
    ints = [c / g for c in ints]
    first = next(c for c in ints if c)
    if first < 0:
        ints = [-c for c in ints]
    return ints


def kernel(M: Mat) -> list:
    """Canonical basis of the right null space of M."""
    red, pivots = M.rref()
    nc = M.ncols
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * nc
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red.rows[r][fc]
        basis.append(normalize_vector(v))
    return basis


def same_span(vs: list, ws: list) -> bool:
    """Subspace equality via ranks of stacked bases (double inclusion)."""
    if not vs and not ws:
        return True
    if bool(vs) != bool(ws) or len(vs) != len(ws):
        return False
    rv = Mat(vs).rank()
    rw = Mat(ws).rank()
    return rv == rw == Mat(vs + ws).rank()


# -- correspondence-specific constructions ---------------------------------


def _check_weight(k: int, minimum: int = 12) -> int:
    if k % 2 or k < minimum:
        raise ValueError(f"weight must be even and >= {minimum}, got {k}")
    return (k - 4) // 2


def build_A(k: int) -> Mat:
    """Closed form A_ij = C(2j, 2i) - C(2j, k-2-2i) + [i+j = (k-2)/2]."""
    n = _check_weight(k)
    half = (k - 2) // 2
    return Mat([[math.comb(2 * j, 2 * i) - math.comb(2 * j, k - 2 - 2 * i)
                 + (1 if i + j == half else 0)
                 for j in range(1, n + 1)] for i in range(1, n + 1)])


def build_A_symbolic(k: int) -> Mat:
    """A_ij as the coefficient of x^2i y x^(k-2i-2) y in
    ad_x^2j(y) (.) ad_x^(k-2-2j)(y), the depth-1 truncation pairing."""
    n = _check_weight(k)
    if k > 30:
        raise ValueError("symbolic construction is desk-scale: k <= 30")
    from .lie import ad_x_pow, odot

    cols = []
    for j in range(1, n + 1):
        g = odot(ad_x_pow(2 * j), ad_x_pow(k - 2 - 2 * j))
        cols.append([g.coeff("x" * (2 * i) + "y" + "x" * (k - 2 * i - 2) + "y")
                     for i in range(1, n + 1)])
    return Mat(cols).transpose()


def build_S(k: int) -> Mat:
    """The involution with -1's along the antidiagonal."""
    n = _check_weight(k)
    return Mat([[Fraction(-1) if i + j == n - 1 else Fraction(0)
                 for j in range(n)] for i in range(n)])


def build_T(k: int) -> Mat:
    """Eigenvector basis change: columns v_1..v_m, then w_0 (k = 2 mod 4
    only), then w_1..w_m, copied verbatim from the defining display."""
    n = _check_weight(k)
    m = (k - 4) // 4
    cols = []
    for j in range(1, m + 1):
        v = [Fraction(0)] * n
        v[j - 1] = Fraction(1)
        v[n - j] = Fraction(1)
        cols.append(v)
    if k % 4 == 2:
        w0 = [Fraction(0)] * n
        w0[(k - 6) // 4] = Fraction(1)
        cols.append(w0)
    for j in range(1, m + 1):
        w = [Fraction(0)] * n
        w[j - 1] = Fraction(-1)
        w[n - j] = Fraction(1)
        cols.append(w)
    return Mat(cols).transpose()


def build_D(k: int) -> Mat:
    """Diagonal matrix with D^-1 = diag(C(k-2, 2i))."""
    n = _check_weight(k)
    return Mat([[Fraction(1, math.comb(k - 2, 2 * i)) if i == j else Fraction(0)
                 for j in range(1, n + 1)] for i in range(1, n + 1)])


def build_B(k: int) -> Mat:
    """B_ij = C(2j, 2i)."""
    n = _check_weight(k)
    return Mat([[math.comb(2 * j, 2 * i) for j in range(1, n + 1)]
                for i in range(1, n + 1)])


def conjugate_M(k: int) -> Mat:
    """M = T^-1 A T."""
    return build_T(k).inverse() @ build_A(k) @ build_T(k)


def block_check(M: Mat, k: int) -> bool:
    """Verify the identity upper-left and zero upper-right blocks of M,
    with dimensions (k-4)/4 square when k = 0 mod 4, and (k-2)/4 square
    identity next to a (k-2)/4 x (k-6)/4 zero block when k = 2 mod 4."""
    n = _check_weight(k)
    if k % 4 == 0:
        top, left = (k - 4) // 4, (k - 4) // 4
    else:
        top, left = (k - 2) // 4, (k - 2) // 4
    for i in range(top):
        for j in range(n):
            expected = Fraction(1 if i == j else 0) if j < left else Fraction(0)
            if M.rows[i][j] != expected:
                return False
    return True


def symmetry_product(k: int) -> Mat:
    """tA D B."""
    return build_A(k).transpose() @ build_D(k) @ build_B(k)
