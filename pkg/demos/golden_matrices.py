"""The boundary-form matrices behind the GKN self-adjointness conditions.

For the n-th power of the Legendre operator, 2n boundary functions are
needed. The canonical choice takes n Legendre polynomials and n second
solutions; stacking their pairwise brackets gives a skew-symmetric matrix
whose full rank certifies linear independence modulo the minimal domain.

Run:  python3 demos/golden_matrices.py
"""

from gkn_legendre import (
    IndexSelection,
    b_block,
    build_matrix,
    canonical_selection,
    det_exact,
    rank_exact,
)
from gkn_legendre.verify import entry_digits


def main():
    print("Canonical matrix for n = 3 (rows P0,P1,P2,Q1,Q2,Q3)")
    print("----------------------------------------------------")
    m3 = build_matrix(canonical_selection(3))
    print(m3.pretty())
    print(f"  rank = {rank_exact(m3.entries)}  (full rank 6 certifies independence)")
    det_m = det_exact(m3.entries)
    det_b = det_exact(b_block(canonical_selection(3)))
    print(f"  det(M) = {det_m} = ({det_b})^2 = det(B)^2")

    print()
    print("P-vs-Q block for n = 4, canonical indices")
    print("------------------------------------------")
    for row in b_block(canonical_selection(4)):
        print("  " + "  ".join(f"{str(e):>6}" for e in row))

    print()
    print("Large indices are no harder in exact arithmetic")
    print("------------------------------------------------")
    exotic = IndexSelection((17, 42, 49, 125), (24, 82, 97, 178), 4)
    b = b_block(exotic)
    print(f"  selection {exotic.key()}")
    print(f"  corner entry [P17,Q24]_4 = {b[0][0]}")
    print(f"  largest entry digits: {entry_digits(b)}")
    print(f"  rank = {rank_exact(b)} of 4")

    print()
    print("Why floating point gives out: entry growth along canonical n")
    print("--------------------------------------------------------------")
    for n in (4, 8, 16, 24, 32):
        m = build_matrix(canonical_selection(n))
        print(
            f"  n={n:>2}: {2 * n}x{2 * n} matrix, max entry {entry_digits(m.entries)} digits,"
            f" rank {rank_exact(m.entries)}"
        )
    print("  doubles carry ~16 digits; beyond n around 16 the ranks above are")
    print("  only decidable with exact integers")


if __name__ == "__main__":
    main()
