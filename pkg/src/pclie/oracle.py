"""Independent dimension count for minimal graded Lie algebras.

Positive part of the maximal algebra with a given local part is free on the
generators, spanned by right-normed words [e_i1, [e_i2, [..., e_im]]].  A
combination of degree-m words vanishes in the minimal algebra iff every
chain of m - 1 brackets with degree -1 generators sends it to zero in G_1
(G_1 itself is never cut).  So dim G_m is the rank of the matrix
word -> (all contractions down to degree 1).

This module only reads the raw local data (weights and pairing); it shares no
code with :mod:`pclie.graded` beyond the data class and exact rank.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .graded import LocalPart
from .linalg import vectors_rank

DEFAULT_GUARD = 5


class OracleGuardError(ValueError):
    pass


def _word_weight(local: LocalPart, sign: int, word) -> list:
    w = [Fraction(0)] * local.dim0
    for i in word:
        for k in range(local.dim0):
            w[k] += sign * local.weights[k, i]
    return w


def _opp_bracket(local: LocalPart, sign: int, a: int, j: int) -> list:
    """[g'_j, g_a] in G_0 for g_a of degree ``sign``, g'_j of degree -sign."""
    if sign > 0:
        return [-x for x in local.pairing[a][j]]       # -[e_a, f_j]
    return list(local.pairing[j][a])                    # [e_j, f_a]


def _ad_opposite(local: LocalPart, sign: int, j: int, word: tuple) -> dict:
    """ad(g'_j) applied to a right-normed word of length >= 2, as a combination
    of words one shorter."""
    head, rest = word[0], word[1:]
    out: dict = {}
    # [[g'_j, g_head], rest] = (h . wt(rest)) rest
    h = _opp_bracket(local, sign, head, j)
    c = sum((a * b for a, b in zip(h, _word_weight(local, sign, rest))), Fraction(0))
    if c:
        out[rest] = out.get(rest, 0) + c
    # [g_head, [g'_j, rest]]
    if len(rest) == 1:
        h2 = _opp_bracket(local, sign, rest[0], j)
        wt_head = [sign * local.weights[k, head] for k in range(local.dim0)]
        c2 = -sum((a * b for a, b in zip(h2, wt_head)), Fraction(0))
        if c2:
            out[(head,)] = out.get((head,), 0) + c2
    else:
        for w, cw in _ad_opposite(local, sign, j, rest).items():
            key = (head,) + w
            out[key] = out.get(key, 0) + cw
    return out


def _contraction_rank(local: LocalPart, sign: int, m: int) -> int:
    n = local.n

    @lru_cache(maxsize=None)
    def contract(word: tuple) -> tuple:
        if len(word) == 1:
            return tuple(Fraction(int(i == word[0])) for i in range(n))
        vec: list = []
        for j in range(n):
            block = [Fraction(0)] * (n ** (len(word) - 1))
            for w, c in _ad_opposite(local, sign, j, word).items():
                for t, x in enumerate(contract(w)):
                    if x:
                        block[t] += c * x
            vec.extend(block)
        return tuple(vec)

    rows = [contract(w) for w in product(range(n), repeat=m)]
    return vectors_rank(rows, n ** m)


def oracle_dims(local: LocalPart, N: int, guard: int = DEFAULT_GUARD,
                force: bool = False) -> dict:
    """dim G_m for -N <= m <= N, by brute-force word contraction."""
    if N < 1:
        raise OracleGuardError("max degree must be at least 1")
    if N > guard and not force:
        raise OracleGuardError(f"max degree {N} exceeds oracle guard {guard}; use force")
    dims = {0: local.dim0}
    for m in range(1, N + 1):
        dims[m] = _contraction_rank(local, 1, m) if local.n else 0
        dims[-m] = _contraction_rank(local, -1, m) if local.n else 0
    return dict(sorted(dims.items()))
