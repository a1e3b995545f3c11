from fractions import Fraction
from itertools import product

import pytest

from deltahall.algebra import Element
from deltahall.coeff import QuadNumber, vpow
from deltahall.delta import (DeltaHallAlgebra, DerivedHallAlgebra, delta_hall_number, derived_aut,
                             derived_hall_number, lin_bracket, theta_generator, three_cycles,
                             three_cycles_unfiltered, xi_inverse, xi_map)
from deltahall.repcat import TruncationError

import oracles
from conftest import A1, A2, KRONECKER, a2_named, cls, tables


def qn(a, b, q=2):
    return QuadNumber(a, b, q)


def test_lin_bracket(a1_2):
    s = a1_2.simple(0)
    assert lin_bracket(a1_2, s, 0, s) == -1
    assert lin_bracket(a1_2, 0, s, 0) == 1
    assert lin_bracket(a1_2, 0, 0, 0) == 0


def test_delta_numbers(a1_2, a2_2):
    s = a1_2.simple(0)
    s2 = cls(a1_2, (2,))
    assert delta_hall_number(a1_2, s, s, s2) == qn(0, Fraction(1, 4))
    assert delta_hall_number(a1_2, s, s, 0) == qn(0, 1)
    n = a2_named(a2_2)
    assert delta_hall_number(a2_2, n["S1"], n["S2"], n["P1"]) == 1
    assert delta_hall_number(a2_2, n["S2"], n["S1"], n["P1"]) == 0


@pytest.mark.parametrize("quiver,q,bound", [(A1, 2, 3), (A2, 2, 2), (A1, 3, 2), (KRONECKER, 2, 2)])
def test_delta_numbers_match_unfiltered_brute_force(quiver, q, bound):
    t = tables(quiver, q, bound)
    for a, b, m in product(range(t.n), repeat=3):
        if t.total(a) + t.total(b) <= bound:
            assert delta_hall_number(t, a, b, m) == oracles.delta_number(t, a, b, m), (a, b, m)


@pytest.mark.parametrize("quiver,q,bound", [(A2, 2, 3), (KRONECKER, 2, 3)])
def test_filtered_cycles_agree_with_join(quiver, q, bound):
    t = tables(quiver, q, bound)
    key = lambda c: (c.l, c.i, c.n, c.multiplicity)
    for a, b, m in product(range(t.n), repeat=3):
        assert sorted(map(key, three_cycles(t, a, b, m))) == sorted(map(key, three_cycles_unfiltered(t, a, b, m)))


def test_products(a1_2, a2_2):
    s = a1_2.simple(0)
    alg = DeltaHallAlgebra(a1_2)
    assert alg.prod(s, s) == Element([(0, qn(0, 1)), (cls(a1_2, (2,)), qn(0, Fraction(1, 4)))])
    for m in range(a1_2.n):
        assert alg.mul(alg.unit(), alg.basis(m)) == alg.basis(m)
    n = a2_named(a2_2)
    alg2 = DeltaHallAlgebra(a2_2)
    assert alg2.prod(n["S2"], n["S1"]) == Element([(n["S1S2"], qn(0, 1))])
    assert alg2.prod(n["S1"], n["S2"]) == Element([(n["P1"], qn(1, 0)), (n["S1S2"], qn(1, 0))])


def test_truncation_is_an_error(a2_2):
    n = a2_named(a2_2)
    with pytest.raises(TruncationError):
        DeltaHallAlgebra(a2_2).prod(n["P1"], n["S1"])


def test_derived_aut(a1_2, a2_2):
    assert derived_aut(a1_2, a1_2.simple(0)) == 1
    assert derived_aut(a1_2, 0) == 1
    assert derived_aut(a2_2, a2_named(a2_2)["P1"]) == 1


def test_derived_numbers(a1_2):
    s = a1_2.simple(0)
    assert derived_hall_number(a1_2, s, s, cls(a1_2, (2,))) == qn(0, Fraction(3, 2))
    assert derived_hall_number(a1_2, s, s, 0) == qn(0, 1)
    for m in range(a1_2.n):
        assert derived_hall_number(a1_2, 0, m, m) == 1


def test_xi(a1_2):
    s2 = cls(a1_2, (2,))
    assert xi_map(a1_2, Element.basis(0, qn(1, 0))) == Element.basis(0, qn(1, 0))
    assert xi_map(a1_2, Element.basis(s2, qn(1, 0))) == Element.basis(s2, qn(Fraction(1, 6), 0))
    x = Element([(s2, qn(2, 1)), (0, qn(0, 3))])
    assert xi_inverse(a1_2, xi_map(a1_2, x)) == x


def test_xi_is_homomorphism_at_q3():
    t = tables(A2, 3, 2)
    der, delta = DerivedHallAlgebra(t), DeltaHallAlgebra(t)
    for a in range(t.n):
        for b in range(t.n):
            if t.total(a) + t.total(b) <= 2:
                ua, ub = der.basis(a), der.basis(b)
                assert xi_map(t, der.mul(ua, ub)) == delta.mul(xi_map(t, ua), xi_map(t, ub))


def test_theta_generator(a1_2, a2_2):
    assert theta_generator(a1_2, 0) == Element.basis(a1_2.simple(0), qn(0, Fraction(-1, 2)))
    assert theta_generator(a2_2, 0) == Element.basis(a2_2.simple(0), qn(0, Fraction(-1, 2)))
    t = tables(A1, 3, 1)
    assert theta_generator(t, 0) == Element.basis(t.simple(0), -vpow(-1, 3) * Fraction(1, 2))


# -- properties on random linear combinations ---------------------------------

from hypothesis import given, settings, strategies as st  # noqa: E402

_T = tables(A2, 2, 3)
_LOW = [m for m in range(_T.n) if _T.total(m) <= 1]
_coeffs = st.builds(lambda a, b: QuadNumber(a, b, 2),
                    st.fractions(-20, 20, max_denominator=6),
                    st.fractions(-20, 20, max_denominator=6))
_elements = st.lists(st.tuples(st.sampled_from(_LOW), _coeffs), max_size=3).map(Element)


@settings(max_examples=60, deadline=None)
@given(_elements, _elements, _elements)
def test_delta_product_associative_and_bilinear(x, y, z):
    alg = DeltaHallAlgebra(_T)
    assert alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z))
    assert alg.mul(x, y + z) == alg.mul(x, y) + alg.mul(x, z)


@settings(max_examples=60, deadline=None)
@given(_elements, _elements)
def test_xi_intertwines_on_combinations(x, y):
    der, delta = DerivedHallAlgebra(_T), DeltaHallAlgebra(_T)
    assert xi_map(_T, der.mul(x, y)) == delta.mul(xi_map(_T, x), xi_map(_T, y))
