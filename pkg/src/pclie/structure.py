"""Decomposition of the degree-0 part of a PC Lie algebra.

V_0 = U0' + z + Delta, where z = [V_-1, V_1] cap Ann(C_D), U0' is a complement
of z inside [V_-1, V_1] and Delta a complement of [V_-1, V_1] in V_0.  The
algebra U0' + sum_{m != 0} V_m with brackets into degree 0 projected onto U0'
is the reduced contragredient algebra of the Cartan matrix C.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .graded import (GradedLieAlgebra, contragredient, extend, local_from_pentad,
                     reduced_contragredient)
from .linalg import (Mat, SpanCoordinates, complement_basis, format_scalar, in_span,
                     kernel_basis, parse_scalar, rank, rowspace_basis,
                     vectors_rank)
from .pentad import (CartanPentad, PentadError, cartan_matrix, h_vectors,
                     strip_zero_columns, validate, zero_columns)
from .reports import Report


def _vecs_to_strings(vs) -> list:
    return [[format_scalar(x) for x in v] for v in vs]


def _vecs_from_strings(vs) -> list:
    return [tuple(parse_scalar(x) for x in v) for v in vs]


@dataclass(frozen=True)
class StructureReport:
    cartan: Mat
    r: int
    rank_D: int
    rank_C: int
    basis_U0prime: list
    basis_z: list
    basis_Delta: list
    center_coeffs: list
    shortcut_invertible: bool
    shortcut_corollary: bool

    @property
    def dims(self) -> tuple:
        return (len(self.basis_U0prime), len(self.basis_z), len(self.basis_Delta))

    def to_dict(self) -> dict:
        return {
            "cartan": self.cartan.to_strings(),
            "r": self.r,
            "rank_D": self.rank_D,
            "rank_C": self.rank_C,
            "basis_U0prime": _vecs_to_strings(self.basis_U0prime),
            "basis_z": _vecs_to_strings(self.basis_z),
            "basis_Delta": _vecs_to_strings(self.basis_Delta),
            "center_coeffs": _vecs_to_strings(self.center_coeffs),
            "shortcut_invertible": self.shortcut_invertible,
            "shortcut_corollary": self.shortcut_corollary,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "StructureReport":
        n = len(d["cartan"])
        return cls(Mat.from_strings(d["cartan"], n), d["r"], d["rank_D"], d["rank_C"],
                   _vecs_from_strings(d["basis_U0prime"]), _vecs_from_strings(d["basis_z"]),
                   _vecs_from_strings(d["basis_Delta"]),
                   _vecs_from_strings(d["center_coeffs"]),
                   d["shortcut_invertible"], d["shortcut_corollary"])


def decompose(p: CartanPentad) -> StructureReport:
    validate(p)
    H = h_vectors(p)
    C = cartan_matrix(p)
    rank_D, rank_C = rank(p.D), rank(C)
    center = kernel_basis(C)
    z = rowspace_basis([H.vecmul(c) for c in center], p.r)
    row_space = rowspace_basis(H.row_list(), p.r)
    # greedy extension of z to a basis of the row space
    u0 = []
    for v in row_space:
        if vectors_rank(z + u0 + [v], p.r) > len(z) + len(u0):
            u0.append(v)
    delta = complement_basis(row_space, p.r)
    return StructureReport(
        cartan=C, r=p.r, rank_D=rank_D, rank_C=rank_C,
        basis_U0prime=u0, basis_z=z, basis_Delta=delta, center_coeffs=center,
        shortcut_invertible=(rank_C == p.n),
        shortcut_corollary=(p.r == rank_D == rank_C))


def _act(G: GradedLieAlgebra, h, m: int) -> np.ndarray:
    """Matrix of ad(h) on G_m, h a coefficient vector in G_0."""
    T = G.tables[0, m]
    d = G.dims[m]
    M = np.empty((d, d), dtype=object)
    M.fill(Fraction(0))
    for k, hk in enumerate(h):
        if hk:
            M = M + hk * T[k]
    return M


def verify_theorem2(p: CartanPentad, N: int, G: GradedLieAlgebra | None = None,
                    rep: StructureReport | None = None) -> Report:
    """Centrality of z, diagonal action of Delta, [U_m, U_-m] inside U0' + z,
    graded dimensions of U0' + sum U_m against G'(C), and the relations
    [p(h_i), e_j] = C_ij e_j, [p(h_i), f_j] = -C_ij f_j."""
    t0 = time.perf_counter()
    validate(p)
    if G is None:
        G = extend(local_from_pentad(p), N)
    if rep is None:
        rep = decompose(p)
    C = rep.cartan
    details: dict = {"dims": list(rep.dims)}

    def fail(witness):
        return Report("theorem2", False, witness, details, time.perf_counter() - t0)

    nonzero = [m for m in G.degrees() if m != 0]
    # (a) z is central
    for zi, zv in enumerate(rep.basis_z):
        for m in nonzero:
            M = _act(G, zv, m)
            if any(x != 0 for x in M.flat):
                return fail(f"z[{zi}] does not commute with G_{m}")
    # (b) Delta acts diagonally
    for di, dv in enumerate(rep.basis_Delta):
        for m in nonzero:
            M = _act(G, dv, m)
            off = [(a, b) for a, b in product(range(M.shape[0]), repeat=2)
                   if a != b and M[a, b] != 0]
            if off:
                return fail(f"Delta[{di}] not diagonal on G_{m} at {off[0]}")
    # (c) [U_m, U_-m] lies in U0' + z
    target = rep.basis_U0prime + rep.basis_z
    for m in range(1, N + 1):
        T = G.tables[m, -m]
        for a, b in product(range(T.shape[0]), range(T.shape[1])):
            v = tuple(Fraction(x) for x in T[a, b, :])
            if not in_span(v, target):
                return fail(f"[G_{m}[{a}], G_{-m}[{b}]] leaves U0' + z")
    # (d) graded dimensions against G'(C)
    Gr = reduced_contragredient(C, N)
    ours = {m: G.dims[m] for m in nonzero}
    ours[0] = len(rep.basis_U0prime)
    theirs = dict(Gr.dims)
    details["reduced_dims"] = [theirs[m] for m in G.degrees()]
    details["L2_dims"] = [ours[m] for m in G.degrees()]
    for m in G.degrees():
        if ours[m] != theirs[m]:
            return fail(f"degree {m}: {ours[m]} vs G'(C) {theirs[m]}")
    # (e) generator relations after projection along z + Delta
    if p.n:
        basis = rep.basis_U0prime + rep.basis_z + rep.basis_Delta
        coords = SpanCoordinates(basis, p.r)
        k = len(rep.basis_U0prime)
        H = h_vectors(p)
        for i in range(p.n):
            c = coords.coords(H.row(i))[:k]
            hp = [sum((c[t] * rep.basis_U0prime[t][s] for t in range(k)), Fraction(0))
                  for s in range(p.r)]
            for j in range(p.n):
                for deg, sgn in ((1, 1), (-1, -1)):
                    row = _act(G, hp, deg)[j, :]
                    want = [sgn * C[i, j] if t == j else 0 for t in range(p.n)]
                    if any(x != y for x, y in zip(row, want)):
                        return fail(f"[h'_{i}, g_{j}] in degree {deg} != {sgn}*C[{i},{j}]")
    return Report("theorem2", True, None, details, time.perf_counter() - t0)


def verify_corollary(p: CartanPentad, N: int, G: GradedLieAlgebra | None = None) -> Report:
    """When r = rank D = rank C, L and G'(C) have equal dimensions in every degree."""
    t0 = time.perf_counter()
    rep = decompose(p)
    if not rep.shortcut_corollary:
        return Report("corollary", True, None, {"applies": False},
                      time.perf_counter() - t0)
    if G is None:
        G = extend(local_from_pentad(p), N)
    Gr = reduced_contragredient(rep.cartan, N)
    ok = rep.dims[1:] == (0, 0) and G.dims == Gr.dims
    witness = None if ok else f"dims {G.graded_dims()['dims']} vs {Gr.graded_dims()['dims']}"
    return Report("corollary", ok, witness,
                  {"applies": True, "dims": [G.dims[m] for m in G.degrees()]},
                  time.perf_counter() - t0)


def verify_invertible_shortcut(p: CartanPentad, N: int,
                               G: GradedLieAlgebra | None = None) -> Report:
    """For invertible C: L = gl_1^{r-n} + G(C) dimension-wise."""
    t0 = time.perf_counter()
    rep = decompose(p)
    if not rep.shortcut_invertible:
        return Report("invertible_shortcut", True, None, {"applies": False},
                      time.perf_counter() - t0)
    if G is None:
        G = extend(local_from_pentad(p), N)
    Gc = contragredient(rep.cartan, N)
    expected = dict(Gc.dims)
    expected[0] += p.r - p.n
    ok = (not rep.center_coeffs and len(rep.basis_Delta) == p.r - p.n
          and G.dims == expected)
    witness = None if ok else f"dims {G.dims} vs gl1^{p.r - p.n} + G(C) {expected}"
    return Report("invertible_shortcut", ok, witness, {"applies": True},
                  time.perf_counter() - t0)


def verify_lemma2(p: CartanPentad, N: int, G: GradedLieAlgebra | None = None) -> Report:
    """e_i and f_i are central whenever column i of D vanishes."""
    t0 = time.perf_counter()
    validate(p)
    cols = zero_columns(p)
    if G is None:
        G = extend(local_from_pentad(p), N)
    for i in cols:
        for s in (1, -1):
            for l in G.degrees():
                if abs(s + l) > N:
                    continue
                T = G.tables[s, l]
                if any(x != 0 for x in T[i].flat):
                    name = "e" if s > 0 else "f"
                    return Report("lemma2", False, f"[{name}_{i}, G_{l}] != 0",
                                  {"zero_columns": cols}, time.perf_counter() - t0)
    return Report("lemma2", True, None, {"zero_columns": cols}, time.perf_counter() - t0)


def verify_lemma3(p: CartanPentad, N: int, G: GradedLieAlgebra | None = None) -> Report:
    """Dimension bookkeeping for L(p) = gl_1^{2(n-n')} + L(p') with p' the
    pentad with zero columns of D removed."""
    t0 = time.perf_counter()
    validate(p)
    q, removed = strip_zero_columns(p)
    if G is None:
        G = extend(local_from_pentad(p), N)
    Gq = extend(local_from_pentad(q), N)
    details = {"removed": removed, "dims": [G.dims[m] for m in G.degrees()],
               "stripped_dims": [Gq.dims[m] for m in Gq.degrees()]}
    for m in G.degrees():
        want = Gq.dims[m] + (len(removed) if abs(m) == 1 else 0)
        if G.dims[m] != want:
            return Report("lemma3", False, f"degree {m}: {G.dims[m]} != {want}", details,
                          time.perf_counter() - t0)
    return Report("lemma3", True, None, details, time.perf_counter() - t0)


def gamma_invariance(p: CartanPentad, gamma2, N: int,
                     G: GradedLieAlgebra | None = None) -> Report:
    t0 = time.perf_counter()
    validate(p)
    gamma2 = tuple(Fraction(g) for g in gamma2)
    if len(gamma2) != p.n or any(g == 0 for g in gamma2):
        raise PentadError("gamma entry zero" if len(gamma2) == p.n else
                          "shape mismatch: gamma2 length")
    if G is None:
        G = extend(local_from_pentad(p), N)
    G2 = extend(local_from_pentad(p.with_gamma(gamma2)), N)
    ok = G.dims == G2.dims
    details = {"gamma2": [format_scalar(g) for g in gamma2],
               "dims": [G.dims[m] for m in G.degrees()],
               "dims2": [G2.dims[m] for m in G2.degrees()]}
    return Report("gamma_invariance", ok,
                  None if ok else f"dims {details['dims']} vs {details['dims2']}",
                  details, time.perf_counter() - t0)


def truncated_center(G: GradedLieAlgebra) -> dict:
    """Basis of the center of the truncated algebra, per degree.

    An element of G_m counts as central when it brackets to zero with every
    G_l for which the bracket is recorded.  Exploratory only.
    """
    out = {}
    for m in G.degrees():
        if G.dims[m] == 0:
            out[m] = []
            continue
        cols = []
        for l in G.degrees():
            if (m, l) in G.tables:
                T = G.tables[m, l]
                cols.append(T.reshape(T.shape[0], T.shape[1] * T.shape[2]))
        M = Mat.from_rows([[x for blk in cols for x in blk[a]] for a in range(G.dims[m])],
                          sum(blk.shape[1] for blk in cols))
        out[m] = kernel_basis(M)
    return out


__all__ = ["StructureReport", "decompose", "verify_theorem2", "verify_corollary",
           "verify_invertible_shortcut", "verify_lemma2", "verify_lemma3",
           "gamma_invariance", "truncated_center"]
