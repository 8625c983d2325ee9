#!/usr/bin/env python3
"""Walk through the full weight-12 story, printing every intermediate object:
the coefficient matrix and its conjugate, both kernels, the period polynomial,
the bracket and double zeta relations, and a high-precision numeric check."""

import argparse

from dshuffle.linalg import build_A, conjugate_M, kernel, symmetry_product
from dshuffle.numzeta import verify_relation
from dshuffle.periodpoly import a_vector, ek_basis, q_vector
from dshuffle.relations import gkz_relations, ihara_relations
from dshuffle.words import format_rational


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--digits", type=int, default=30,
                        help="working precision for the numeric check")
    args = parser.parse_args()
    k = 12

    print("== coefficient matrix A ==")
    print(build_A(k))
    print("\n== conjugate T^-1 A T ==")
    print(conjugate_M(k))
    print("\n== symmetric product tADB ==")
    print(symmetry_product(k))

    print("\n== kernels ==")
    print("Ker A  :", kernel(build_A(k)))
    print("Ker tA :", kernel(build_A(k).transpose()))

    print("\n== restricted even period polynomial ==")
    P = ek_basis(k)[0]
    print(P)
    print("a =", [format_rational(c) for c in a_vector(P)])
    print("q =", [format_rational(c) for c in q_vector(P).entries])

    print("\n== relations ==")
    for rel in ihara_relations(k) + gkz_relations(k):
        print(rel)

    print(f"\n== numeric check at {args.digits} digits ==")
    rel = gkz_relations(k)[0]
    residual, scalar = verify_relation(rel, args.digits)
    print(f"scalar   = {format_rational(scalar)}")
    print(f"residual = {residual}")


if __name__ == "__main__":
    main()
