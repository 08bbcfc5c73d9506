import json
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings

from pclie.battery import a2_rank3, random_gamma, random_pentad, rank_deficient
from pclie.embed import sl2_pentad
from pclie.graded import extend, local_from_pentad, reduced_contragredient
from pclie.linalg import Mat, in_span
from pclie.pentad import CartanPentad, PentadError
from pclie.structure import (StructureReport, decompose, gamma_invariance,
                             truncated_center, verify_corollary,
                             verify_invertible_shortcut, verify_lemma2, verify_lemma3,
                             verify_theorem2)

from conftest import pentads

slow = settings(max_examples=20, deadline=None,
                suppress_health_check=[HealthCheck.too_slow])


@pytest.mark.parametrize("m", range(5))
def test_decompose_sl2_family(m):
    rep = decompose(sl2_pentad(m))
    assert rep.dims == (1, 0, 0)
    assert rep.shortcut_corollary and not rep.shortcut_invertible


def test_decompose_rank_deficient():
    rep = decompose(rank_deficient())
    assert rep.cartan == Mat.from_rows([[0]])
    assert rep.dims == (0, 1, 1)
    assert rep.basis_z == [(0, 1)]
    assert rep.center_coeffs == [(1,)]


def test_decompose_a2_rank3():
    rep = decompose(a2_rank3())
    assert rep.cartan == Mat.from_rows([[2, -1], [-1, 2]])
    assert rep.dims == (2, 0, 1)
    assert rep.shortcut_invertible and not rep.shortcut_corollary


def test_report_round_trip():
    for p in (rank_deficient(), a2_rank3(), random_pentad()):
        rep = decompose(p)
        assert StructureReport.from_dict(json.loads(json.dumps(rep.to_dict()))) == rep


@pytest.mark.parametrize("p", [sl2_pentad(0), sl2_pentad(3), rank_deficient(),
                               a2_rank3(), random_pentad()])
def test_theorem2_examples(p):
    rep = verify_theorem2(p, 3)
    assert rep.passed, rep.witness


def test_rank_deficient_center_up_to_3():
    G = extend(local_from_pentad(rank_deficient()), 3)
    center0 = truncated_center(G)[0]
    assert in_span((0, 1), center0)
    reduced = reduced_contragredient(Mat.from_rows([[0]]), 3)
    assert reduced.total_dim == 2
    assert all(x == 0 for T in reduced.tables.values() for x in T.flat)


def test_corollary_and_shortcut():
    assert verify_corollary(sl2_pentad(2), 3).passed
    assert verify_corollary(a2_rank3(), 3).details == {"applies": False}
    rep = verify_invertible_shortcut(a2_rank3(), 4)
    assert rep.passed and rep.details["applies"]


def test_lemma2_lemma3_examples(zc_items):
    for name, p in zc_items.items():
        assert verify_lemma2(p, 3).passed, name
        rep = verify_lemma3(p, 3)
        assert rep.passed, (name, rep.witness)


def test_lemma3_bookkeeping_shape():
    p = CartanPentad.make([[1]], [[1, 0]], [1, 2])
    rep = verify_lemma3(p, 3)
    assert rep.details["removed"] == [1]
    assert rep.details["dims"] == [0, 0, 2, 1, 2, 0, 0]


def test_gamma_invariance_examples():
    assert gamma_invariance(sl2_pentad(3), (1, 7), 3).passed
    p = random_pentad()
    assert gamma_invariance(p, random_gamma(p.n), 3).passed


def test_gamma_invariance_rejects_zero():
    with pytest.raises(PentadError, match="gamma entry zero"):
        gamma_invariance(sl2_pentad(1), (1, 0), 2)
    with pytest.raises(PentadError, match="shape mismatch"):
        gamma_invariance(sl2_pentad(1), (1,), 2)


@slow
@given(pentads(max_r=3, max_n=3))
def test_decomposition_dims_sum_to_r(p):
    rep = decompose(p)
    assert sum(rep.dims) == p.r
    assert rep.dims == (rep.rank_C, rep.rank_D - rep.rank_C, p.r - rep.rank_D)


@slow
@given(pentads(max_r=2, max_n=3, min_n=1))
def test_theorem2_random(p):
    rep = verify_theorem2(p, 2)
    assert rep.passed, rep.witness


@slow
@given(pentads(max_r=3, max_n=2, min_n=1))
def test_z_is_central_in_truncation(p):
    rep = decompose(p)
    G = extend(local_from_pentad(p), 2)
    c0 = truncated_center(G)[0]
    for v in rep.basis_z:
        assert in_span(v, c0)


@slow
@given(pentads(max_r=2, max_n=2, min_n=1))
def test_shortcut_checks_random(p):
    assert verify_corollary(p, 2).passed
    assert verify_invertible_shortcut(p, 2).passed
    assert verify_lemma2(p, 2).passed
    assert verify_lemma3(p, 2).passed
    assert gamma_invariance(p, (Fraction(-3),) * p.n, 2).passed
