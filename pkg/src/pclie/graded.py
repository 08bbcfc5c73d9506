"""Local Lie algebras and their truncated minimal graded extensions.

A local part is G_-1 + G_0 + G_1 with G_0 abelian and acting diagonally.  The
minimal graded Lie algebra with that local part is built degree by degree: an
element of G_{m+1} (m >= 1) *is* its adjoint action G_-1 -> G_m, and G_{m+1} is
spanned by the actions of [e_i, y] for generators e_i and basis vectors y of
G_m.  Negative degrees are the mirror image, acting on G_1.  Elements that act
as zero never enter a basis, so the result is transitive in every degree
|m| >= 2.

Structure constants are stored per degree pair as object arrays
``tables[k, l][a, b, c]``: the c-th coordinate of [x_a, y_b] for x_a in G_k and
y_b in G_l.  Only pairs with |k|, |l|, |k + l| <= N are recorded.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product

import numpy as np

from .linalg import (IncrementalBasis, LinalgError, Mat, SpanCoordinates,
                     complement_basis, format_scalar, is_zero_vec, kernel_basis,
                     unit_vec, vec_dot, vectors_rank, zero_vec)
from .pentad import CartanPentad, h_vectors
from .reports import Report


class LocalPartError(ValueError):
    pass


class DegreeError(ValueError):
    pass


@dataclass(frozen=True)
class LocalPart:
    """G_-1 (basis f_j), G_0 (basis h_k), G_1 (basis e_j) with

    [h_k, e_j] = weights[k, j] e_j,  [h_k, f_j] = -weights[k, j] f_j,
    [e_i, f_j] = pairing[i][j]  (a vector in G_0).
    """

    dim0: int
    n: int
    weights: Mat
    pairing: tuple

    def weight_of(self, sign: int, j: int) -> tuple:
        return tuple(sign * w for w in self.weights.col(j))

    def pair(self, sign: int, a: int, b: int) -> tuple:
        """[g_a, g'_b] for g of degree ``sign`` and g' of degree ``-sign``."""
        if sign > 0:
            return self.pairing[a][b]
        return tuple(-x for x in self.pairing[b][a])


def check_local(local: LocalPart) -> None:
    if (local.weights.rows, local.weights.cols) != (local.dim0, local.n):
        raise LocalPartError("weights must be dim0 x n")
    if len(local.pairing) != local.n or any(len(r) != local.n for r in local.pairing):
        raise LocalPartError("pairing must be n x n")
    for i, j in product(range(local.n), repeat=2):
        v = local.pairing[i][j]
        if len(v) != local.dim0:
            raise LocalPartError(f"pairing({i},{j}) has wrong length")
        if not is_zero_vec(v) and local.weights.col(i) != local.weights.col(j):
            raise LocalPartError(
                f"pairing({i},{j}) nonzero between generators of different weight")


def local_from_cartan(C: Mat) -> LocalPart:
    """Local part of the contragredient algebra G(C): [E_i, F_j] = delta_ij H_i,
    [H_i, E_j] = C_ij E_j."""
    if C.rows != C.cols:
        raise LocalPartError("Cartan matrix must be square")
    n = C.rows
    pairing = tuple(tuple(unit_vec(n, i) if i == j else zero_vec(n) for j in range(n))
                    for i in range(n))
    return LocalPart(n, n, C, pairing)


def local_from_pentad(p: CartanPentad) -> LocalPart:
    """Local part of L(r, n; A, D, Gamma): eps_i acts on e_j by d_ij and
    [e_i, f_j] = delta_ij h_i."""
    H = h_vectors(p)
    pairing = tuple(tuple(H.row(i) if i == j else zero_vec(p.r) for j in range(p.n))
                    for i in range(p.n))
    return LocalPart(p.r, p.n, p.D, pairing)


def _sign(k: int) -> int:
    return 1 if k > 0 else -1


@dataclass(frozen=True)
class GradedLieAlgebra:
    local: LocalPart
    max_degree: int
    dims: dict
    tables: dict
    weights: dict = field(default_factory=dict)
    generators: dict = field(default_factory=dict)
    operators: dict = field(default_factory=dict)

    def degrees(self) -> list:
        return list(range(-self.max_degree, self.max_degree + 1))

    def dim(self, m: int) -> int:
        if abs(m) > self.max_degree:
            raise DegreeError(f"degree {m} beyond truncation {self.max_degree}")
        return self.dims[m]

    def graded_dims(self) -> dict:
        return {"degrees": self.degrees(), "dims": [self.dims[m] for m in self.degrees()]}

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def table(self, k: int, l: int) -> np.ndarray:
        if (k, l) not in self.tables:
            raise DegreeError(f"bracket of degrees {k}, {l} outside truncation {self.max_degree}")
        return self.tables[k, l]

    def bracket(self, x, k: int, y, l: int) -> tuple:
        """[x, y] for coefficient vectors x in G_k, y in G_l."""
        T = self.table(k, l)
        if len(x) != self.dims[k] or len(y) != self.dims[l]:
            raise DegreeError("coefficient vector length does not match degree")
        out = [Fraction(0)] * self.dims[k + l]
        for a, xa in enumerate(x):
            if not xa:
                continue
            for b, yb in enumerate(y):
                if not yb:
                    continue
                c = xa * yb
                for t in range(len(out)):
                    out[t] += c * T[a, b, t]
        return tuple(out)

    def basis_bracket(self, k: int, a: int, l: int, b: int) -> tuple:
        return tuple(Fraction(x) for x in self.table(k, l)[a, b, :])

    def structure_constants(self) -> list:
        """Nonzero structure constants as JSON-ready records."""
        records = []
        for (k, l) in sorted(self.tables):
            T = self.tables[k, l]
            for a, b in product(range(T.shape[0]), range(T.shape[1])):
                coeffs = T[a, b, :]
                if any(c != 0 for c in coeffs):
                    records.append({"k": k, "l": l, "i": a, "j": b,
                                    "coeffs": [format_scalar(c) for c in coeffs]})
        return records


def _zeros(*shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(Fraction(0))
    return arr


class _Builder:
    def __init__(self, local: LocalPart, N: int):
        self.L = local
        self.N = N
        n, d0 = local.n, local.dim0
        self.dims = {0: d0, 1: n, -1: n}
        self.wt = {0: [zero_vec(d0)] * d0,
                   1: [local.weight_of(1, j) for j in range(n)],
                   -1: [local.weight_of(-1, j) for j in range(n)]}
        self.gens: dict = {}
        self.ops: dict = {}
        # up[m][i][y] = [g_i, y] for g_i of degree sign(m), y in G_m
        self.up: dict = {}
        self.memo: dict = {}

    def grow(self, s: int, m: int) -> None:
        """Build G_{s(m+1)} from G_{sm}."""
        L, n = self.L, self.L.n
        cur, new = s * m, s * (m + 1)
        dc = self.dims[cur]
        images = {}
        for i in range(n):
            gi_wt = self.wt[s][i]
            for y in range(dc):
                op = []
                for j in range(n):
                    # [[g_i, y], g'_j] = [g_i, [y, g'_j]] + [[g_i, g'_j], y]
                    if m == 1:
                        z0 = L.pair(s, y, j)
                        part = [Fraction(0)] * dc
                        part[i] = -vec_dot(z0, gi_wt)
                    else:
                        z = self.ops[cur][y][j]
                        part = [Fraction(0)] * dc
                        below = self.up[s * (m - 1)][i]
                        for c, zc in enumerate(z):
                            if zc:
                                for t, val in enumerate(below[c]):
                                    part[t] += zc * val
                    h = L.pair(s, i, j)
                    part[y] += vec_dot(h, self.wt[cur][y])
                    op.extend(part)
                images[i, y] = tuple(op)
        width = n * dc
        ib = IncrementalBasis(width)
        gens = [key for key in sorted(images) if ib.add(images[key])]
        self.dims[new] = len(gens)
        self.gens[new] = gens
        self.wt[new] = [tuple(a + b for a, b in zip(self.wt[s][i], self.wt[cur][y]))
                        for i, y in gens]
        self.ops[new] = [tuple(tuple(images[key][j * dc:(j + 1) * dc]) for j in range(n))
                         for key in gens]
        coords = SpanCoordinates([images[key] for key in gens], width)
        self.up[cur] = [[coords.coords(images[i, y], check=False) for y in range(dc)]
                        for i in range(n)]

    def bracket(self, k: int, a: int, l: int, b: int) -> tuple:
        key = (k, a, l, b)
        if key in self.memo:
            return self.memo[key]
        out = self._bracket(k, a, l, b)
        self.memo[key] = out
        return out

    def _combine(self, coeffs, k: int, a: int, l: int, flip: bool = False) -> list:
        """sum_c coeffs[c] [x_a, basis_c] with x_a in G_k, basis_c in G_l
        (or [basis_c, x_a] when ``flip``)."""
        out = [Fraction(0)] * self.dims[k + l]
        for c, v in enumerate(coeffs):
            if v:
                br = self.bracket(l, c, k, a) if flip else self.bracket(k, a, l, c)
                for t, val in enumerate(br):
                    out[t] += v * val
        return out

    def _bracket(self, k: int, a: int, l: int, b: int) -> tuple:
        dims = self.dims
        if k == 0 and l == 0:
            return zero_vec(dims[0])
        if k == 0:
            return tuple(self.wt[l][b][a] * x for x in unit_vec(dims[l], b))
        if l == 0:
            return tuple(-x for x in self.bracket(0, b, k, a))
        s = _sign(k)
        if abs(k) == 1:
            if l == -k:
                return tuple(self.L.pair(s, a, b))
            if _sign(l) == s:
                return tuple(self.up[l][a][b])
            return tuple(-x for x in self.ops[l][b][a])
        if l == -s:
            return tuple(self.ops[k][a][b])
        # x_a = [g_i, x'] with g_i of degree s:  [x_a, y] = [g_i, [x', y]] - [x', [g_i, y]]
        i, xp = self.gens[k][a]
        inner = self.bracket(k - s, xp, l, b)
        t1 = self._combine(inner, s, i, k - s + l)
        inner2 = self.bracket(s, i, l, b)
        t2 = self._combine(inner2, k - s, xp, s + l)
        return tuple(p - q for p, q in zip(t1, t2))

    def tables(self) -> dict:
        N, dims = self.N, self.dims
        out = {}
        for k, l in product(range(-N, N + 1), repeat=2):
            if abs(k + l) > N:
                continue
            T = _zeros(dims[k], dims[l], dims[k + l])
            for a, b in product(range(dims[k]), range(dims[l])):
                T[a, b, :] = self.bracket(k, a, l, b)
            out[k, l] = T
        return out


def extend(local: LocalPart, N: int) -> GradedLieAlgebra:
    """Truncated minimal graded Lie algebra with the given local part, degrees -N..N."""
    if N < 1:
        raise DegreeError("max degree must be at least 1")
    check_local(local)
    b = _Builder(local, N)
    for s in (1, -1):
        for m in range(1, N):
            b.grow(s, m)
    return GradedLieAlgebra(
        local=local, max_degree=N, dims=dict(sorted(b.dims.items())), tables=b.tables(),
        weights={m: list(w) for m, w in b.wt.items()},
        generators=b.gens, operators=b.ops)


def center_degree0(C: Mat) -> list:
    """Coefficients c of the central elements sum c_i H_i of G(C): c . C = 0."""
    return kernel_basis(C)


def quotient_degree0(G: GradedLieAlgebra, central: list) -> GradedLieAlgebra:
    """G / span(central) for central elements of degree 0.

    The degree-0 part of the quotient has as basis a fixed coordinate
    complement of ``central``; brackets into degree 0 are projected along
    ``central``.
    """
    d0 = G.dims[0]
    keep = complement_basis(central, d0)
    q = len(keep)
    coords = SpanCoordinates(list(central) + keep, d0)

    def proj(v):
        return coords.coords(tuple(Fraction(x) for x in v))[len(central):]

    U = np.array([[Fraction(x) for x in u] for u in keep], dtype=object).reshape(q, d0)
    tables = {}
    for (k, l), T in G.tables.items():
        if k == 0 and l == 0:
            tables[k, l] = _zeros(q, q, q)
        elif k == 0:
            tables[k, l] = np.tensordot(U, T, axes=([1], [0])) if q else _zeros(0, *T.shape[1:])
        elif l == 0:
            tables[k, l] = (np.tensordot(T, U, axes=([1], [1])).transpose(0, 2, 1)
                            if q else _zeros(T.shape[0], 0, T.shape[2]))
        elif k + l == 0:
            new = _zeros(T.shape[0], T.shape[1], q)
            for a, b in product(range(T.shape[0]), range(T.shape[1])):
                new[a, b, :] = proj(T[a, b, :])
            tables[k, l] = new
        else:
            tables[k, l] = T
    loc = G.local
    weights_mat = Mat.from_rows([loc.weights.vecmul(u) for u in keep], loc.n)
    pairing = tuple(tuple(tuple(proj(loc.pairing[i][j])) for j in range(loc.n))
                    for i in range(loc.n))
    new_local = LocalPart(q, loc.n, weights_mat, pairing)
    weights = {m: [tuple(vec_dot(u, w) for u in keep) for w in ws]
               for m, ws in G.weights.items() if m != 0}
    weights[0] = [zero_vec(q)] * q
    dims = dict(G.dims)
    dims[0] = q
    return replace(G, local=new_local, dims=dims, tables=tables, weights=weights)


def reduced_contragredient(C: Mat, N: int) -> GradedLieAlgebra:
    """G'(C) = G(C) / center, truncated at degree N."""
    G = extend(local_from_cartan(C), N)
    return quotient_degree0(G, center_degree0(C))


def contragredient(C: Mat, N: int) -> GradedLieAlgebra:
    return extend(local_from_cartan(C), N)


# -- verification --------------------------------------------------------------

def _integerize(T: np.ndarray) -> tuple:
    den = 1
    for x in T.flat:
        den = math.lcm(den, Fraction(x).denominator)
    ints = np.empty(T.shape, dtype=object)
    for idx, x in np.ndenumerate(T):
        ints[idx] = int(Fraction(x) * den)
    return ints, den


def _in_range(N: int, *degs) -> bool:
    return all(abs(d) <= N for d in degs)


def verify_jacobi(G: GradedLieAlgebra) -> Report:
    """[[x, y], z] = [x, [y, z]] - [y, [x, z]] for all basis triples whose
    intermediate degrees stay inside the truncation."""
    t0 = time.perf_counter()
    N = G.max_degree
    ints = {key: _integerize(T) for key, T in G.tables.items()}
    checked = 0
    for a, b, c in product(G.degrees(), repeat=3):
        if not _in_range(N, a + b, b + c, a + c, a + b + c):
            continue
        if 0 in (G.dims[a], G.dims[b], G.dims[c], G.dims[a + b + c]):
            continue
        I_ab, d_ab = ints[a, b]
        I_abc, d_abc = ints[a + b, c]
        I_bc, d_bc = ints[b, c]
        I_a_bc, d_a_bc = ints[a, b + c]
        I_ac, d_ac = ints[a, c]
        I_b_ac, d_b_ac = ints[b, a + c]
        D1, D2, D3 = d_ab * d_abc, d_bc * d_a_bc, d_ac * d_b_ac
        Lcm = math.lcm(D1, D2, D3)
        t1 = np.tensordot(I_ab, I_abc, axes=([2], [0]))                     # x y z .
        t2 = np.tensordot(I_bc, I_a_bc, axes=([2], [1])).transpose(2, 0, 1, 3)
        t3 = np.tensordot(I_ac, I_b_ac, axes=([2], [1])).transpose(0, 2, 1, 3)
        diff = t1 * (Lcm // D1) - t2 * (Lcm // D2) + t3 * (Lcm // D3)
        checked += G.dims[a] * G.dims[b] * G.dims[c]
        bad = np.argwhere(diff != 0)
        if len(bad):
            x, y, z, _ = bad[0]
            rep = Report("jacobi", False,
                         f"triple x=G[{a}][{x}], y=G[{b}][{y}], z=G[{c}][{z}]",
                         {"degrees": [a, b, c], "indices": [int(x), int(y), int(z)],
                          "checked": checked})
            rep.seconds = time.perf_counter() - t0
            return rep
    return Report("jacobi", True, None, {"checked": checked},
                  time.perf_counter() - t0)


def verify_antisymmetry(G: GradedLieAlgebra) -> Report:
    t0 = time.perf_counter()
    for (k, l), T in G.tables.items():
        S = G.tables[l, k]
        if T.shape != (S.shape[1], S.shape[0], S.shape[2]):
            return Report("antisymmetry", False, f"shape mismatch for degrees {k},{l}")
        bad = np.argwhere(T + S.transpose(1, 0, 2) != 0)
        if len(bad):
            a, b, _ = bad[0]
            return Report("antisymmetry", False,
                          f"[G[{k}][{a}], G[{l}][{b}]] != -[G[{l}][{b}], G[{k}][{a}]]",
                          seconds=time.perf_counter() - t0)
        if T.shape[2] != G.dims[k + l]:
            return Report("antisymmetry", False, f"grading violated for degrees {k},{l}")
    return Report("antisymmetry", True, seconds=time.perf_counter() - t0)


def verify_transitivity(G: GradedLieAlgebra) -> Report:
    """For 2 <= |m| <= N, no nonzero x in G_m brackets G_{-sign(m)} to zero."""
    t0 = time.perf_counter()
    N = G.max_degree
    per_degree = {}
    witness = None
    for m in [d for d in G.degrees() if abs(d) >= 2]:
        s = _sign(m)
        T = G.tables[m, -s]
        rows = [tuple(T[x, :, :].flat) for x in range(G.dims[m])]
        width = G.dims[-s] * G.dims[m - s]
        ok = vectors_rank(rows, width) == G.dims[m]
        per_degree[str(m)] = ok
        if not ok and witness is None:
            witness = f"degree {m}: an element of G_{m} kills G_{-s}"
    return Report("transitivity", witness is None, witness,
                  {"per_degree": per_degree, "max_degree": N},
                  time.perf_counter() - t0)


# -- matrix files ---------------------------------------------------------------

def load_cartan(path) -> Mat:
    with open(path) as fh:
        data = json.load(fh)
    return cartan_from_dict(data)


def cartan_from_dict(data) -> Mat:
    if not isinstance(data, dict) or "C" not in data:
        raise LocalPartError("matrix file must be an object with field 'C'")
    rows = data["C"]
    if not isinstance(rows, list):
        raise LocalPartError("field 'C': expected a list of rows")
    n = len(rows)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise LocalPartError(f"field 'C': row {i} must have {n} entries")
    try:
        return Mat.from_strings(rows, n)
    except LinalgError as exc:
        raise LocalPartError(f"field 'C': {exc}") from exc


def cartan_to_dict(C: Mat) -> dict:
    return {"C": C.to_strings()}


def dims_from_dict(d: dict) -> dict:
    return dict(zip(d["degrees"], d["dims"]))


__all__ = [
    "LocalPart", "LocalPartError", "DegreeError", "GradedLieAlgebra", "check_local",
    "local_from_cartan", "local_from_pentad", "extend", "center_degree0",
    "quotient_degree0", "reduced_contragredient", "contragredient", "verify_jacobi",
    "verify_antisymmetry", "verify_transitivity", "load_cartan", "cartan_from_dict",
    "cartan_to_dict", "dims_from_dict",
]
