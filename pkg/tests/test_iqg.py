from fractions import Fraction

import pytest

from deltahall.algebra import Element
from deltahall.checks import run_suite
from deltahall.coeff import QuadNumber, vpow
from deltahall.extended import ExtendedDeltaHallAlgebra, ExtLabel, label
from deltahall.iqg import (check_commuting_pair, check_k_relations, discover_rank2_relation, fit_vpower,
                           make_images)
from deltahall.repcat import TruncationError

from conftest import A1, A1A1, A2, KRONECKER, tables


def test_images_a1(a1_2):
    img = make_images(a1_2)
    assert img.b[0] == Element.basis(label(a1_2, a1_2.simple(0)), QuadNumber(0, Fraction(-1, 2), 2))
    assert img.k[0] == Element.basis(label(a1_2, 0, (1,)), QuadNumber(Fraction(-1, 2), 0, 2))


def test_images_a2_q3():
    t = tables(A2, 3, 2)
    assert make_images(t).b[1] == Element.basis(label(t, t.simple(1)), QuadNumber(0, Fraction(-1, 6), 3))


def test_k_relations(a2_2):
    alg = ExtendedDeltaHallAlgebra(a2_2)
    assert check_k_relations(alg, make_images(a2_2)).passed


def test_k_relations_negative_control(a2_2):
    alg = ExtendedDeltaHallAlgebra(a2_2)

    def broken(x, y):
        # drops the K-label of the left factor
        out = Element()
        for lx, cx in x.items():
            for ly, cy in y.items():
                for lab, c in alg.prod(ExtLabel(lx.cls, (0, 0)), ly).items():
                    out.add_term(lab, c * cx * cy)
        return out

    rep = check_k_relations(alg, make_images(a2_2), product_fn=broken)
    assert not rep.passed


def test_commuting_pair():
    t = tables(A1A1, 2, 2)
    alg = ExtendedDeltaHallAlgebra(t)
    img = make_images(t)
    assert check_commuting_pair(alg, img, 0, 1)
    with pytest.raises(ValueError):
        check_commuting_pair(alg, img, 0, 0)


def test_commuting_pair_rejects_adjacent(a2_2):
    with pytest.raises(ValueError):
        check_commuting_pair(ExtendedDeltaHallAlgebra(a2_2), make_images(a2_2), 0, 1)


def test_rank2_preconditions(a2_2):
    alg = ExtendedDeltaHallAlgebra(a2_2)
    with pytest.raises(TruncationError):
        discover_rank2_relation(alg, make_images(a2_2), 0, 1)
    t = tables(KRONECKER, 2, 3)
    with pytest.raises(ValueError):
        discover_rank2_relation(ExtendedDeltaHallAlgebra(t), make_images(t), 0, 1)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_rank2_lambda_is_v(q):
    t = tables(A2, q, 3)
    alg = ExtendedDeltaHallAlgebra(t)
    for i, j in [(0, 1), (1, 0)]:
        res = discover_rank2_relation(alg, make_images(t), i, j)
        assert res.residual_zero
        assert res.lam == vpow(1, q)


def test_fit_vpower():
    assert fit_vpower({2: vpow(1, 2), 3: vpow(1, 3)}) == (1, 1)
    assert fit_vpower({2: vpow(-3, 2) * 5, 3: vpow(-3, 3) * 5}) == (5, -3)
    assert fit_vpower({2: QuadNumber(1, 0, 2), 3: QuadNumber(2, 0, 3)}) is None
    assert fit_vpower({2: QuadNumber(1, 1, 2)}) is None


def test_rank2_suite_on_kronecker_exports_products():
    rep = run_suite("rank2", tables(KRONECKER, 2, 3))
    assert rep.passed
    assert {r["n_ij"] for r in rep.relations} == {2}
    assert all("products" in r for r in rep.relations)


def test_rank1_and_commute_suites():
    assert run_suite("rank1", tables(A1, 3, 2)).passed
    assert run_suite("commute", tables(A1A1, 3, 2)).passed
    with pytest.raises(TruncationError):
        run_suite("commute", tables(A1A1, 2, 1))
