"""Pentads of Cartan type P(r, n; A, D, Gamma) and their linear-algebra data."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (LinalgError, Mat, format_scalar, kernel_basis,
                     parse_scalar, rank, rowspace_basis)


class PentadError(ValueError):
    pass


@dataclass(frozen=True)
class CartanPentad:
    """Data of P(r, n; A, D, Gamma).

    ``A`` is r x r and invertible, ``D`` is r x n (entry (i, j) is the weight of
    eps_i on e_j) and ``gamma`` is the diagonal of Gamma.  ``n = 0`` is allowed.
    """

    r: int
    n: int
    A: Mat
    D: Mat
    gamma: tuple

    @classmethod
    def make(cls, A, D, gamma) -> "CartanPentad":
        A = A if isinstance(A, Mat) else Mat.from_rows(A)
        gamma = tuple(Fraction(g) for g in gamma)
        D = D if isinstance(D, Mat) else Mat.from_rows(D, len(gamma))
        return cls(A.rows, D.cols, A, D, gamma)

    def with_gamma(self, gamma) -> "CartanPentad":
        return CartanPentad(self.r, self.n, self.A, self.D,
                            tuple(Fraction(g) for g in gamma))

    def to_dict(self) -> dict:
        return {"r": self.r, "n": self.n, "A": self.A.to_strings(),
                "D": self.D.to_strings(),
                "gamma": [format_scalar(g) for g in self.gamma]}

    @classmethod
    def from_dict(cls, data: dict) -> "CartanPentad":
        if not isinstance(data, dict):
            raise PentadError("pentad file must hold a JSON object")
        for key in ("r", "n", "A", "D", "gamma"):
            if key not in data:
                raise PentadError(f"missing field {key!r}")
        r, n = data["r"], data["n"]
        if not isinstance(r, int) or isinstance(r, bool) or r < 1:
            raise PentadError("field 'r': must be a positive integer")
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise PentadError("field 'n': must be a non-negative integer")
        try:
            A = _parse_matrix(data["A"], r, r, "A")
            D = _parse_matrix(data["D"], r, n, "D")
            if not isinstance(data["gamma"], list) or len(data["gamma"]) != n:
                raise PentadError(f"field 'gamma': expected a list of {n} scalars")
            gamma = tuple(parse_scalar(g) for g in data["gamma"])
        except LinalgError as exc:
            raise PentadError(f"bad scalar: {exc}") from exc
        p = cls(r, n, A, D, gamma)
        validate(p)
        return p

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _parse_matrix(rows, nrows: int, ncols: int, name: str) -> Mat:
    if not isinstance(rows, list) or len(rows) != nrows:
        raise PentadError(f"field {name!r}: expected {nrows} rows")
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != ncols:
            raise PentadError(f"field {name!r}: row {i} must have {ncols} entries")
    return Mat.from_strings(rows, ncols)


def load_pentad(path) -> CartanPentad:
    with open(path) as fh:
        return CartanPentad.from_dict(json.load(fh))


def validate(p: CartanPentad) -> None:
    if p.r < 1 or p.n < 0:
        raise PentadError("shape mismatch: need r >= 1 and n >= 0")
    if (p.A.rows, p.A.cols) != (p.r, p.r):
        raise PentadError(f"shape mismatch: A is {p.A.rows}x{p.A.cols}, expected {p.r}x{p.r}")
    if (p.D.rows, p.D.cols) != (p.r, p.n):
        raise PentadError(f"shape mismatch: D is {p.D.rows}x{p.D.cols}, expected {p.r}x{p.n}")
    if len(p.gamma) != p.n:
        raise PentadError(f"shape mismatch: gamma has {len(p.gamma)} entries, expected {p.n}")
    if rank(p.A) != p.r:
        raise PentadError("A singular")
    if any(g == 0 for g in p.gamma):
        raise PentadError("gamma entry zero")


def h_vectors(p: CartanPentad) -> Mat:
    """Rows h_i of Gamma . tD . A, i.e. [e_i, f_i] in the eps-basis."""
    return Mat.diag(p.gamma) @ p.D.T @ p.A


def cartan_matrix(p: CartanPentad) -> Mat:
    """C = Gamma . tD . A . D."""
    return h_vectors(p) @ p.D


@dataclass(frozen=True)
class Lemma1Report:
    rank_D: int
    rank_C: int
    dim_bracket: int
    dim_ann: int
    dim_intersection: int
    h_rows: Mat
    ann_basis: list
    intersection_basis: list

    def to_dict(self) -> dict:
        return {
            "rank_D": self.rank_D, "rank_C": self.rank_C,
            "dim_bracket": self.dim_bracket, "dim_ann": self.dim_ann,
            "dim_intersection": self.dim_intersection,
            "r": self.h_rows.cols,
            "h_rows": self.h_rows.to_strings(),
            "ann_basis": [[format_scalar(x) for x in v] for v in self.ann_basis],
            "intersection_basis": [[format_scalar(x) for x in v]
                                   for v in self.intersection_basis],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Lemma1Report":
        return cls(
            d["rank_D"], d["rank_C"], d["dim_bracket"], d["dim_ann"],
            d["dim_intersection"],
            Mat.from_strings(d["h_rows"], d["r"]),
            [tuple(parse_scalar(x) for x in v) for v in d["ann_basis"]],
            [tuple(parse_scalar(x) for x in v) for v in d["intersection_basis"]])


def lemma1(p: CartanPentad) -> Lemma1Report:
    """Bracket space [V_-1, V_1], annihilator Ann C_D and their intersection.

    Dimensions are read off the computed bases, not from the rank formulas, so
    the formulas can be tested against them.
    """
    H = h_vectors(p)
    C = cartan_matrix(p)
    bracket = rowspace_basis(H.row_list(), p.r)
    ann = kernel_basis(p.D)
    inter = rowspace_basis([H.vecmul(c) for c in kernel_basis(C)], p.r)
    return Lemma1Report(
        rank_D=rank(p.D), rank_C=rank(C),
        dim_bracket=len(bracket), dim_ann=len(ann), dim_intersection=len(inter),
        h_rows=H, ann_basis=ann, intersection_basis=inter)


def zero_columns(p: CartanPentad) -> list:
    return [j for j in range(p.n) if all(x == 0 for x in p.D.col(j))]


def strip_zero_columns(p: CartanPentad) -> tuple:
    removed = zero_columns(p)
    keep = [j for j in range(p.n) if j not in removed]
    D = p.D.delete(cols=removed)
    gamma = tuple(p.gamma[j] for j in keep)
    return CartanPentad(p.r, len(keep), p.A, D, gamma), removed
