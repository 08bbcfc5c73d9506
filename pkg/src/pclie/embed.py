"""Pentads of Cartan type carrying a reductive Lie algebra and a representation.

Input is weight data already extracted from (g, rho, V): a basis of Z + h
(center plus a Cartan subalgebra of the semisimple part), the Gram matrix of
the invariant form there, and one weight column per generator (simple root
vectors first, then lowest-weight module generators).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .linalg import LinalgError, Mat, inverse
from .pentad import CartanPentad, PentadError, _parse_matrix, validate


@dataclass(frozen=True)
class ReductiveData:
    dim_center: int
    dim_cartan: int
    gram: Mat
    columns: Mat

    @property
    def rank(self) -> int:
        return self.dim_center + self.dim_cartan

    def to_dict(self) -> dict:
        return {"dim_center": self.dim_center, "dim_cartan": self.dim_cartan,
                "gram": self.gram.to_strings(), "columns": self.columns.to_strings()}

    @classmethod
    def from_dict(cls, d: dict) -> "ReductiveData":
        for key in ("dim_center", "dim_cartan", "gram", "columns"):
            if key not in d:
                raise PentadError(f"missing field {key!r}")
        r = d["dim_center"] + d["dim_cartan"]
        if r < 1:
            raise PentadError("dim_center + dim_cartan must be positive")
        cols = d["columns"]
        n = len(cols[0]) if cols and isinstance(cols[0], list) else 0
        try:
            gram = _parse_matrix(d["gram"], r, r, "gram")
            columns = _parse_matrix(cols, r, n, "columns")
        except LinalgError as exc:
            raise PentadError(f"bad scalar: {exc}") from exc
        return cls(d["dim_center"], d["dim_cartan"], gram, columns)


def load_reductive(path) -> ReductiveData:
    with open(path) as fh:
        return ReductiveData.from_dict(json.load(fh))


def sl2_pentad(m: int) -> CartanPentad:
    """P(1, 2; (1/8), (2 -m), diag(4, 4)) carrying (sl_2, V(m+1))."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return CartanPentad.make([[Fraction(1, 8)]], [[2, -m]], [4, 4])


def sl2_data(m: int) -> ReductiveData:
    """sl_2 with Killing form K(H, H) = 8 and generators X_alpha, lowest vector of V(m+1)."""
    return ReductiveData(0, 1, Mat.from_rows([[8]]), Mat.from_rows([[2, -m]]))


def pentad_from_reductive(data: ReductiveData) -> CartanPentad:
    """A = (tGram)^-1 so that the form tA^-1 reproduces the Gram matrix; Gamma = 1."""
    g = data.gram
    if g != g.T:
        raise PentadError("gram not symmetric")
    try:
        A = inverse(g.T)
    except LinalgError:
        raise PentadError("gram singular") from None
    n = data.columns.cols
    p = CartanPentad(data.rank, n, A, data.columns, (Fraction(1),) * n)
    validate(p)
    return p


def dumps(obj) -> str:
    return json.dumps(obj.to_dict(), indent=2)
