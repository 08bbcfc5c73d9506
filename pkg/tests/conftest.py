from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from pclie.battery import battery, zero_column_items
from pclie.graded import GradedLieAlgebra
from pclie.linalg import Mat
from pclie.pentad import CartanPentad


@pytest.fixture(scope="session")
def items():
    return battery()


@pytest.fixture(scope="session")
def zc_items():
    return zero_column_items()


def root_heights(C):
    """Number of positive roots per height for a finite-type Cartan matrix,
    with alpha_j(H_i) = C[i][j].  Uses root strings: beta + alpha_i is a root
    iff p - beta(H_i) > 0, where p is the length of the alpha_i-string below
    beta.  Independent of any Lie bracket computation."""
    n = len(C)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    counts = {1: n}
    h = 1
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * C[i][j] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        h += 1
        roots |= nxt
        layer = sorted(nxt)
        if layer:
            counts[h] = len(layer)
    return counts


def with_central_line(G: GradedLieAlgebra, degree: int) -> GradedLieAlgebra:
    """G plus one extra basis vector in ``degree`` that brackets to zero with
    everything.  Breaks transitivity there, keeps Jacobi."""
    dims = dict(G.dims)
    dims[degree] += 1
    tables = {}
    for (k, l), T in G.tables.items():
        shape = (dims[k], dims[l], dims[k + l])
        new = np.empty(shape, dtype=object)
        new.fill(Fraction(0))
        new[:T.shape[0], :T.shape[1], :T.shape[2]] = T
        tables[k, l] = new
    return GradedLieAlgebra(G.local, G.max_degree, dims, tables)


small_int = st.integers(min_value=-2, max_value=2)


@st.composite
def int_matrices(draw, max_rows=4, max_cols=4):
    rows = draw(st.integers(min_value=0, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    entries = draw(st.lists(st.lists(small_int, min_size=cols, max_size=cols),
                            min_size=rows, max_size=rows))
    return Mat.from_rows(entries, cols)


@st.composite
def square_matrices(draw, min_n=1, max_n=3):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return Mat.from_rows(draw(st.lists(st.lists(small_int, min_size=n, max_size=n),
                                       min_size=n, max_size=n)), n)


@st.composite
def pentads(draw, max_r=3, max_n=3, min_n=0):
    from pclie.linalg import rank
    r = draw(st.integers(min_value=1, max_value=max_r))
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    A = Mat.from_rows(draw(st.lists(st.lists(small_int, min_size=r, max_size=r),
                                    min_size=r, max_size=r)), r)
    if rank(A) != r:
        A = Mat.identity(r)
    D = Mat.from_rows(draw(st.lists(st.lists(small_int, min_size=n, max_size=n),
                                    min_size=r, max_size=r)), n)
    gamma = draw(st.lists(st.sampled_from([-2, -1, 1, 2, 3]).map(Fraction),
                          min_size=n, max_size=n))
    return CartanPentad(r, n, A, D, tuple(gamma))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import GATE_LINES
    if GATE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in GATE_LINES:
            terminalreporter.write_line(line)
