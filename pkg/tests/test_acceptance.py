"""Acceptance gate: one PASS/FAIL line per criterion, with runtime bounds.

Run with ``pytest -s tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``.
"""

import sys
import time
from fractions import Fraction

import pytest

from pclie.battery import battery, random_gamma, random_pentad, zero_column_items
from pclie.embed import sl2_pentad
from pclie.graded import (extend, local_from_pentad, reduced_contragredient,
                          verify_antisymmetry, verify_jacobi, verify_transitivity)
from pclie.linalg import Mat
from pclie.oracle import oracle_dims
from pclie.pentad import CartanPentad, cartan_matrix
from pclie.structure import (decompose, gamma_invariance, truncated_center,
                             verify_lemma2, verify_lemma3, verify_theorem2)
from pclie.linalg import in_span

SL2_RANGE = range(5)
GATE_LINES = []


def _gate(number, title, limit, body):
    t0 = time.perf_counter()
    try:
        problems = body()
    except Exception as exc:  # report, then fail below
        problems = [f"{type(exc).__name__}: {exc}"]
    dt = time.perf_counter() - t0
    if dt >= limit:
        problems.append(f"runtime {dt:.2f}s >= {limit}s")
    status = "PASS" if not problems else "FAIL"
    line = f"{status} criterion {number} ({title}) {dt:.3f}s"
    if problems:
        line += ": " + "; ".join(problems)
    GATE_LINES.append(line)
    print(line, flush=True)
    return problems


def c1():
    bad = []
    for m in SL2_RANGE:
        want = Mat.from_rows([[2, -m], [-m, Fraction(m * m, 2)]])
        if cartan_matrix(sl2_pentad(m)) != want:
            bad.append(f"m={m}")
    return bad


def c2():
    bad = []
    for m in SL2_RANGE:
        p = sl2_pentad(m)
        rep = decompose(p)
        if rep.dims[1:] != (0, 0):
            bad.append(f"m={m} dims {rep.dims}")
        t2 = verify_theorem2(p, 3)
        if not t2.passed:
            bad.append(f"m={m} theorem2: {t2.witness}")
    return bad


def c3():
    D = Mat.from_rows([[1, 0], [-1, 1], [0, -1]])
    assert D.T @ D == Mat.from_rows([[2, -1], [-1, 2]])
    p = CartanPentad.make(Mat.identity(3), D, [1, 1])
    rep = decompose(p)
    bad = []
    if not rep.shortcut_invertible:
        bad.append("shortcut_invertible false")
    if rep.dims != (2, 0, 1):
        bad.append(f"dims {rep.dims}")
    G = extend(local_from_pentad(p), 5)
    got = [G.dims[m] for m in range(5)]
    if got != [3, 2, 1, 0, 0] or any(G.dims[m] != G.dims[-m] for m in range(6)):
        bad.append(f"graded dims {G.graded_dims()['dims']}")
    if G.total_dim != 9:
        bad.append(f"total {G.total_dim}")
    return bad


def c4():
    p = CartanPentad.make([[0, 1], [1, 0]], [[1], [0]], [1])
    rep = decompose(p)
    bad = []
    if rep.cartan != Mat.from_rows([[0]]):
        bad.append(f"C = {rep.cartan}")
    if rep.dims != (0, 1, 1):
        bad.append(f"dims {rep.dims}")
    G = extend(local_from_pentad(p), 3)
    center0 = truncated_center(G)[0]
    if not all(in_span(v, center0) for v in rep.basis_z):
        bad.append("z not central")
    Gr = reduced_contragredient(rep.cartan, 3)
    if Gr.total_dim != 2 or any(x != 0 for T in Gr.tables.values() for x in T.flat):
        bad.append(f"reduced part dims {Gr.graded_dims()['dims']}")
    return bad


def c5():
    bad = []
    for name, p in battery().items():
        G = extend(local_from_pentad(p), 4)
        for check in (verify_jacobi, verify_transitivity, verify_antisymmetry):
            rep = check(G)
            if not rep.passed:
                bad.append(f"{name} {rep.name}: {rep.witness}")
        # grading: every bracket lands in degree k+l with weight w_a + w_b
        for (k, l), T in G.tables.items():
            for a, b, c in zip(*[ix.tolist() for ix in T.nonzero()]):
                wk = G.weights[k][a] if k else (0,) * p.r
                wl = G.weights[l][b] if l else (0,) * p.r
                wc = G.weights[k + l][c] if k + l else (0,) * p.r
                if k and l and k + l and tuple(x + y for x, y in zip(wk, wl)) != tuple(wc):
                    bad.append(f"{name} weight of [{k}:{a},{l}:{b}]")
    return bad


def c6():
    bad = []
    for name, p in battery().items():
        loc = local_from_pentad(p)
        got, want = extend(loc, 4).dims, oracle_dims(loc, 4)
        if got != want:
            bad.append(f"{name}: {got} vs oracle {want}")
    return bad


def c7():
    bad = []
    for name, p in zero_column_items().items():
        for check in (verify_lemma2, verify_lemma3):
            rep = check(p, 3)
            if not rep.passed:
                bad.append(f"{name} {rep.name}: {rep.witness}")
    return bad


def c8():
    bad = []
    for m in SL2_RANGE:
        rep = gamma_invariance(sl2_pentad(m), (1, 7), 3)
        if not rep.passed:
            bad.append(f"m={m}: {rep.witness}")
    p = random_pentad()
    rep = gamma_invariance(p, random_gamma(p.n), 3)
    if not rep.passed:
        bad.append(f"random: {rep.witness}")
    return bad


def c9():
    bad, seen = [], 0
    for name, p in battery().items():
        rep = decompose(p)
        if p.r == rep.rank_D == rep.rank_C:
            seen += 1
            if not rep.shortcut_corollary:
                bad.append(f"{name} flag false")
            G = extend(local_from_pentad(p), 4)
            Gr = reduced_contragredient(rep.cartan, 4)
            if G.dims != Gr.dims:
                bad.append(f"{name}: {G.dims} vs {Gr.dims}")
        elif rep.shortcut_corollary:
            bad.append(f"{name} flag true")
    if not seen:
        bad.append("no battery item meets r = rank D = rank C")
    return bad


CRITERIA = [
    (1, "Cartan matrix of the sl2 family", 0.1, c1),
    (2, "sl2 family structure and theorem check", 5, c2),
    (3, "invertible C special case", 5, c3),
    (4, "rank-deficient witness", 1, c4),
    (5, "Jacobi, transitivity, antisymmetry, grading on battery", 60, c5),
    (6, "extend agrees with oracle", 120, c6),
    (7, "zero-column bookkeeping", 5, c7),
    (8, "Gamma invariance", 10, c8),
    (9, "corollary gate", 5, c9),
]


@pytest.mark.parametrize("number,title,limit,body", CRITERIA,
                         ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, limit, body):
    problems = _gate(number, title, limit, body)
    assert not problems, problems


if __name__ == "__main__":
    failed = sum(bool(_gate(*c)) for c in CRITERIA)
    sys.exit(1 if failed else 0)
