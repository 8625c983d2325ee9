"""Orchestration of the full correspondence for a given even weight:
restricted even period polynomial basis -> kernel vectors of A and tA ->
bracket relations between depth-1 Lie elements and double zeta relations,
with every cross-check recorded in a structured report.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .linalg import (Mat, build_A, build_A_symbolic, build_B, build_D,
                     conjugate_M, block_check, kernel, normalize_vector,
                     same_span, symmetry_product)
from .periodpoly import PeriodPoly, a_vector, ek_basis, ek_dim_formula, q_vector
from .words import format_rational


@dataclass(frozen=True)
class Relation:
    """A tagged linear relation in even weight k.

    kind "bracket": terms ((2i+1, k-2i-1), a_i) with the combination of
    Poisson brackets {f_2i+1, f_k-2i-1} vanishing modulo depth 3.
    kind "double_zeta": terms ((r, k-r), q_r) with the combination of
    Z(r, k-r) a scalar multiple of Z(k); scalar_estimate, when present,
    is that multiple as estimated numerically.
    """

    weight: int
    kind: str
    terms: tuple
    scalar_estimate: Optional[Fraction] = None

    def coefficients(self) -> list:
        return [c for _, c in self.terms]

    def to_dict(self) -> dict:
        return {
            "weight": self.weight,
            "kind": self.kind,
            "terms": [{"r": r, "s": s, "coeff": format_rational(c)}
                      for (r, s), c in self.terms],
            "scalar_estimate": (format_rational(self.scalar_estimate)
                                if self.scalar_estimate is not None else None),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        if self.kind == "bracket":
            parts = []
            for (r, s), c in self.terms:
                if not c:
                    continue
                sym = f"{{f{r}, f{s}}}"
                if c == 1:
                    parts.append(sym)
                elif c == -1:
                    parts.append(f"-{sym}")
                else:
                    parts.append(f"{format_rational(c)} {sym}")
            body = _join_signed(parts)
            return f"{body} ≡ 0 (mod depth 3)"
        parts = []
        for (r, s), c in self.terms:
            if not c:
                continue
            sym = f"Z({r},{s})"
            if c == 1:
                parts.append(sym)
            elif c == -1:
                parts.append(f"-{sym}")
            else:
                parts.append(f"{format_rational(c)} {sym}")
        body = _join_signed(parts) if parts else "0"
        return f"{body} ≡ 0 (mod Z({self.weight}))"


def _join_signed(parts: list) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def ihara_relations(k: int) -> List[Relation]:
    """One bracket relation per period polynomial basis element, with
    coefficients (a_1, ..., a_floor((k-4)/4)); first coefficient positive."""
    out = []
    m = (k - 4) // 4
    for P in ek_basis(k):
        a = normalize_vector(a_vector(P)[:m])
        terms = tuple(((2 * i + 1, k - 2 * i - 1), a[i - 1]) for i in range(1, m + 1))
        out.append(Relation(weight=k, kind="bracket", terms=terms))
    return out


def gkz_relations(k: int) -> List[Relation]:
    """One double zeta relation per period polynomial basis element.

    Coefficients are the q-vector scaled to the convention of the printed
    weight-12 relation: twice the primitive integer vector, with the
    coefficient of Z(k-3, 3) (the last q entry) positive.  Terms are listed
    with r descending, Z(k-3, 3) first.  Every emitted vector is verified
    to lie in Ker tA, and the emitted set is checked to span it.
    """
    A = build_A(k)
    ker_t = kernel(A.transpose())
    out = []
    vecs = []
    for P in ek_basis(k):
        q = normalize_vector(q_vector(P).entries)
        if q and q[-1] < 0:
            q = [-c for c in q]
        q = [2 * c for c in q]
        if any(A.transpose().mul_vec(q)):
            raise AssertionError("q-vector fell outside Ker tA")
        vecs.append(q)
        pairs = [(2 * j + 1, k - 2 * j - 1) for j in range(1, len(q) + 1)]
        terms = tuple(((r, s), c) for (r, s), c in
                      sorted(zip(pairs, q), key=lambda t: -t[0][0]))
        out.append(Relation(weight=k, kind="double_zeta", terms=terms))
    if not same_span(vecs, ker_t):
        raise AssertionError("emitted relations do not span Ker tA")
    return out


@dataclass
class CorrespondenceReport:
    """All cross-checks for one even weight, plus the data they used."""

    weight: int
    dim_formula: int
    dim_ek: int
    dim_ker_A: int
    dim_ker_tA: int
    dims_agree: bool
    symbolic_agrees: Optional[bool]
    symmetry_ok: bool
    block_ok: bool
    duality_span_ok: bool
    q_equals_DBa: bool
    matrix_A: Mat
    ker_A: list
    ker_tA: list
    failures: list = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "weight": self.weight,
            "dim_formula": self.dim_formula,
            "dim_ek": self.dim_ek,
            "dim_ker_A": self.dim_ker_A,
            "dim_ker_tA": self.dim_ker_tA,
            "dims_agree": self.dims_agree,
            "symbolic_agrees": self.symbolic_agrees,
            "symmetry_ok": self.symmetry_ok,
            "block_ok": self.block_ok,
            "duality_span_ok": self.duality_span_ok,
            "q_equals_DBa": self.q_equals_DBa,
            "all_ok": self.all_ok,
            "failures": self.failures,
            "ker_A": [[format_rational(c) for c in v] for v in self.ker_A],
            "ker_tA": [[format_rational(c) for c in v] for v in self.ker_tA],
        }


def correspondence_report(k: int) -> CorrespondenceReport:
    """Run every exact cross-check at weight k and record the outcome."""
    if k % 2 or not 12 <= k <= 40:
        raise ValueError("report covers even 12 <= k <= 40")
    failures = []
    A = build_A(k)
    basis = ek_basis(k)
    ker_A = kernel(A)
    ker_tA = kernel(A.transpose())
    dim_formula = ek_dim_formula(k)
    dims_agree = len(basis) == len(ker_A) == len(ker_tA) == dim_formula
    if not dims_agree:
        failures.append("dimension mismatch")

    symbolic_agrees: Optional[bool] = None
    if k <= 30:
        symbolic_agrees = build_A_symbolic(k) == A
        if not symbolic_agrees:
            failures.append("symbolic A differs from closed form")

    symmetry_ok = symmetry_product(k).is_symmetric()
    if not symmetry_ok:
        failures.append("tADB not symmetric")

    block_ok = block_check(conjugate_M(k), k)
    if not block_ok:
        failures.append("block structure violated")

    DB = build_D(k) @ build_B(k)
    image = [normalize_vector(DB.mul_vec(v)) for v in ker_A]
    duality_span_ok = same_span(image, ker_tA)
    if not duality_span_ok:
        failures.append("Ker tA != DB Ker A")

    q_equals_DBa = all(
        list(q_vector(P).entries) == DB.mul_vec(a_vector(P)) for P in basis
    )
    if not q_equals_DBa:
        failures.append("q_vector != DB a_vector")

    return CorrespondenceReport(
        weight=k, dim_formula=dim_formula, dim_ek=len(basis),
        dim_ker_A=len(ker_A), dim_ker_tA=len(ker_tA), dims_agree=dims_agree,
        symbolic_agrees=symbolic_agrees, symmetry_ok=symmetry_ok,
        block_ok=block_ok, duality_span_ok=duality_span_ok,
        q_equals_DBa=q_equals_DBa, matrix_A=A, ker_A=ker_A, ker_tA=ker_tA,
        failures=failures,
    )
