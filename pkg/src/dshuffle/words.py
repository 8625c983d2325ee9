"""Words over {x, y} and sparse rational noncommutative polynomials.

Words are plain Python strings over the alphabet "xy" (the empty string is
the empty word).  Canonical ordering is by length, then lexicographic with
x < y, which is exactly the default string order once lengths agree.
Polynomials are immutable sparse maps from words to nonzero Fractions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

ALPHABET = "xy"

Word = str
Composition = tuple


def check_word(w: str) -> str:
    if any(c not in ALPHABET for c in w):
        raise ValueError(f"not a word over {{x, y}}: {w!r}")
    return w


def weight(w: Word) -> int:
    return len(w)


def depth(w: Word) -> int:
    return w.count("y")


def is_convergent(w: Word) -> bool:
    """True iff w = x.v.y; the empty word is not convergent."""
    return len(w) >= 2 and w[0] == "x" and w[-1] == "y"


def word_key(w: Word) -> tuple:
    return (len(w), w)


def _fr(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class NcPoly:
    """Element of Q<x, y>: a finite map word -> nonzero rational."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Fraction] | None = None):
        clean = {}
        if terms:
            for w, c in terms.items():
                c = _fr(c)
                if c:
                    clean[check_word(w)] = c
        self.terms: dict = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls()

    @classmethod
    def one(cls) -> "NcPoly":
        return cls({"": Fraction(1)})

    @classmethod
    def word(cls, w: Word, c=1) -> "NcPoly":
        return cls({w: _fr(c)})

    # -- queries ------------------------------------------------------

    def coeff(self, w: Word) -> Fraction:
        return self.terms.get(w, Fraction(0))

    def words(self) -> Iterator[Word]:
        return iter(sorted(self.terms, key=word_key))

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        lengths = {len(w) for w in self.terms}
        return len(lengths) <= 1

    def poly_weight(self) -> int | None:
        """Common weight of all terms, or None for the zero polynomial."""
        if not self.terms:
            return None
        lengths = {len(w) for w in self.terms}
        if len(lengths) != 1:
            raise ValueError("polynomial is not weight-homogeneous")
        return lengths.pop()

    def poly_depth(self) -> float:
        """Minimal number of y's in a stored word; inf for the zero polynomial."""
        if not self.terms:
            return math.inf
        return min(w.count("y") for w in self.terms)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "NcPoly") -> "NcPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        res = NcPoly.__new__(NcPoly)
        res.terms = out
        return res

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return self + (-other)

    def __neg__(self) -> "NcPoly":
        res = NcPoly.__new__(NcPoly)
        res.terms = {w: -c for w, c in self.terms.items()}
        return res

    def scale(self, c) -> "NcPoly":
        c = _fr(c)
        res = NcPoly.__new__(NcPoly)
        res.terms = {} if not c else {w: c * v for w, v in self.terms.items()}
        return res

    __mul__ = scale
    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return isinstance(other, NcPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"NcPoly({str(self)})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in self.words():
            c = self.terms[w]
            mono = w if w else "1"
            if c == 1:
                s = mono
            elif c == -1:
                s = f"-{mono}"
            else:
                s = f"{format_rational(c)}{mono}" if w else format_rational(c)
            parts.append(s)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def format_rational(c: Fraction) -> str:
    """Print a rational as "p/q", or "p" when the denominator is 1."""
    c = _fr(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_word(s: str) -> Word:
    return check_word(s)


def coeff(f: NcPoly, w: Word) -> Fraction:
    """The pairing (f | w)."""
    return f.coeff(w)


def pair(f: NcPoly, g: NcPoly) -> Fraction:
    """(f | g) extended linearly in g: sum of g_w * (f | w)."""
    total = Fraction(0)
    for w, c in g.terms.items():
        total += c * f.terms.get(w, 0)
    return total


# -- shuffle and stuffle ------------------------------------------------


@lru_cache(maxsize=None)
def _shuffle_words(u: Word, v: Word) -> tuple:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: dict = {}
    for w, c in _shuffle_words(u[1:], v):
        w2 = u[0] + w
        out[w2] = out.get(w2, 0) + c
    for w, c in _shuffle_words(u, v[1:]):
        w2 = v[0] + w
        out[w2] = out.get(w2, 0) + c
    return tuple(sorted(out.items()))


def shuffle(u: Word, v: Word) -> NcPoly:
    """Shuffle product of two words."""
    check_word(u), check_word(v)
    return NcPoly({w: Fraction(c) for w, c in _shuffle_words(u, v)})


def shuffle_poly(f: NcPoly, g: NcPoly) -> NcPoly:
    """Bilinear extension of the shuffle product."""
    out = NcPoly.zero()
    for u, a in f.terms.items():
        for v, b in g.terms.items():
            out = out + shuffle(u, v).scale(a * b)
    return out


def _y_blocks(w: Word) -> tuple:
    """Write a word ending in y as y_{i_1}...y_{i_r} with y_i = x^(i-1) y."""
    if not w or w[-1] != "y":
        raise ValueError(f"word does not end in y: {w!r}")
    blocks = []
    run = 0
    for c in w:
        if c == "x":
            run += 1
        else:
            blocks.append(run + 1)
            run = 0
    return tuple(blocks)


def _blocks_word(blocks: Iterable[int]) -> Word:
    return "".join("x" * (i - 1) + "y" for i in blocks)


@lru_cache(maxsize=None)
def _stuffle_blocks(u: tuple, v: tuple) -> tuple:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: dict = {}
    for w, c in _stuffle_blocks(u[1:], v):
        w2 = (u[0],) + w
        out[w2] = out.get(w2, 0) + c
    for w, c in _stuffle_blocks(u, v[1:]):
        w2 = (v[0],) + w
        out[w2] = out.get(w2, 0) + c
    for w, c in _stuffle_blocks(u[1:], v[1:]):
        w2 = (u[0] + v[0],) + w
        out[w2] = out.get(w2, 0) + c
    return tuple(sorted(out.items()))


def stuffle(u: Word, v: Word) -> NcPoly:
    """Stuffle product of two nonempty words ending in y."""
    bu, bv = _y_blocks(u), _y_blocks(v)
    return NcPoly({_blocks_word(b): Fraction(c) for b, c in _stuffle_blocks(bu, bv)})


def concat(f: NcPoly, g: NcPoly) -> NcPoly:
    """Bilinear extension of word concatenation."""
    out: dict = {}
    for u, a in f.terms.items():
        for v, b in g.terms.items():
            w = u + v
            s = out.get(w, 0) + a * b
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    res = NcPoly.__new__(NcPoly)
    res.terms = out
    return res


def pi_convergent(f: NcPoly) -> NcPoly:
    """Projection onto the convergent words of f."""
    res = NcPoly.__new__(NcPoly)
    res.terms = {w: c for w, c in f.terms.items() if is_convergent(w)}
    return res


# -- word <-> composition dictionary -------------------------------------


def check_composition(parts) -> tuple:
    parts = tuple(int(p) for p in parts)
    if not parts or any(p < 1 for p in parts) or parts[0] < 2:
        raise ValueError(f"not an admissible composition: {parts}")
    return parts


def word_of_composition(parts) -> Word:
    """(r_1, ..., r_k) -> x^(r_1 - 1) y ... x^(r_k - 1) y."""
    return _blocks_word(check_composition(parts))


def composition_of_word(w: Word) -> tuple:
    """Inverse of word_of_composition; rejects non-convergent words."""
    if not is_convergent(w):
        raise ValueError(f"not a convergent word: {w!r}")
    return _y_blocks(w)


def format_composition(parts) -> str:
    return "(" + ", ".join(str(p) for p in parts) + ")"


def words_of_weight(n: int) -> list:
    """All 2^n words of weight n, in canonical order."""
    if n == 0:
        return [""]
    return ["".join("y" if (i >> b) & 1 else "x" for b in range(n - 1, -1, -1))
            for i in range(2 ** n)]
