"""Graded dimensions of the PC Lie algebras attached to (sl_2, V(m+1)).

Compares each against the reduced contragredient algebra of its Cartan matrix.
"""

import argparse

from pclie.embed import sl2_pentad
from pclie.graded import extend, local_from_pentad, reduced_contragredient
from pclie.pentad import cartan_matrix


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-m", type=int, default=6)
    ap.add_argument("--max-degree", type=int, default=6)
    args = ap.parse_args()
    N = args.max_degree
    for m in range(args.max_m + 1):
        p = sl2_pentad(m)
        C = cartan_matrix(p)
        G = extend(local_from_pentad(p), N)
        Gr = reduced_contragredient(C, N)
        pos = [G.dims[k] for k in range(N + 1)]
        tag = "same" if G.dims == Gr.dims else "DIFFERENT"
        print(f"m={m}  C={C}  dims 0..{N}: {pos}  vs G'(C): {tag}")


if __name__ == "__main__":
    main()
