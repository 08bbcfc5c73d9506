"""Built-in pentads used by the test suite, the CLI and the scripts."""

from __future__ import annotations

import random
from fractions import Fraction

from .linalg import Mat, rank
from .pentad import CartanPentad, cartan_matrix
from .embed import sl2_pentad

RANDOM_SEED = 20131


def a2_rank3() -> CartanPentad:
    """r = 3, n = 2, A = I, tD.D = A_2 Cartan matrix, so C is invertible."""
    return CartanPentad.make(Mat.identity(3), [[1, 0], [-1, 1], [0, -1]], [1, 1])


def rank_deficient() -> CartanPentad:
    """(2, 1; [[0,1],[1,0]], t(1,0), (1)) with C = (0)."""
    return CartanPentad.make([[0, 1], [1, 0]], [[1], [0]], [1])


def random_pentad(r: int = 2, n: int = 3, seed: int = RANDOM_SEED) -> CartanPentad:
    """Small-integer A and D, rational gamma; D of full rank without zero columns
    and C of rank min(r, n)."""
    rng = random.Random(seed)
    while True:
        A = Mat.from_rows([[rng.randint(-3, 3) for _ in range(r)] for _ in range(r)])
        if rank(A) != r:
            continue
        D = Mat.from_rows([[rng.randint(-3, 3) for _ in range(n)] for _ in range(r)])
        if any(all(x == 0 for x in D.col(j)) for j in range(n)):
            continue
        gamma = [Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
                 for _ in range(n)]
        p = CartanPentad(r, n, A, D, tuple(gamma))
        if rank(D) == min(r, n) and rank(cartan_matrix(p)) == min(r, n):
            return p


def random_gamma(n: int, seed: int = RANDOM_SEED + 1) -> tuple:
    rng = random.Random(seed)
    return tuple(Fraction(rng.choice([-5, -3, -1, 1, 2, 7]), rng.randint(1, 4))
                 for _ in range(n))


def zero_column_items() -> dict:
    return {
        "zc_1x2": CartanPentad.make([[1]], [[1, 0]], [1, 1]),
        "zc_1x1": CartanPentad.make([[1]], [[0]], [1]),
        "zc_allzero": CartanPentad.make(Mat.identity(2), [[0, 0], [0, 0]], [1, 1]),
        "sl2_m0": sl2_pentad(0),
    }


def battery() -> dict:
    """sl_2 family m = 0..4, the invertible-C A_2 item, the rank-deficient
    witness and one seeded random 2 x 3 pentad."""
    items = {f"sl2_m{m}": sl2_pentad(m) for m in range(5)}
    items["a2_rank3"] = a2_rank3()
    items["rank_deficient"] = rank_deficient()
    items["random_2x3"] = random_pentad()
    return items
