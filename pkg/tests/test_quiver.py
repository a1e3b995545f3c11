import json

import pytest
from hypothesis import given, strategies as st

from deltahall.quiver import (HalfK0Class, ParityError, Quiver, bilinear, cartan, euler_form,
                              euler_matrix, half_shift, sym_form)

from conftest import A1, A2, KRONECKER


def test_loops_rejected():
    with pytest.raises(ValueError):
        Quiver(1, ((0, 0),))


def test_bad_vertex_rejected():
    with pytest.raises(ValueError):
        Quiver(2, ((0, 2),))


def test_json_roundtrip(tmp_path):
    p = tmp_path / "q.json"
    p.write_text(json.dumps(KRONECKER.to_json()))
    assert Quiver.load(p) == KRONECKER


def test_cartan():
    assert cartan(A1) == [[2]]
    assert cartan(A2) == [[2, -1], [-1, 2]]
    assert cartan(KRONECKER) == [[2, -2], [-2, 2]]


def test_euler_form_examples():
    assert euler_form(A2, (1, 0), (0, 1)) == -1
    assert euler_form(A2, (0, 1), (1, 0)) == 0
    assert euler_form(A1, (1,), (1,)) == 1
    assert euler_matrix(A2) == [[1, -1], [0, 1]]


def test_sym_form_is_cartan():
    for d in [(1, 0), (0, 1), (1, 1), (2, 1)]:
        for e in [(1, 0), (0, 1), (1, 2)]:
            assert sym_form(A2, d, e) == bilinear(cartan(A2), d, e)


def test_half_shift_examples():
    assert half_shift((1,), (1,), (2,)) == (0,)
    assert half_shift((1,), (1,), (0,)) == (1,)
    assert half_shift((1, 0), (0, 1), (1, 1)) == (0, 0)
    with pytest.raises(ParityError):
        half_shift((1,), (0,), (0,))


def test_half_k0_class():
    h = HalfK0Class.from_k0((1, 0)) + HalfK0Class((1, 1))
    assert h.doubled == (3, 1)
    assert not h.is_integral()
    assert HalfK0Class((2, -4)).to_k0() == (1, -2)


vecs = st.lists(st.integers(-4, 4), min_size=2, max_size=2).map(tuple)


@given(vecs, vecs, vecs)
def test_euler_bilinear(d, e, f):
    s = tuple(x + y for x, y in zip(d, e))
    assert euler_form(KRONECKER, s, f) == euler_form(KRONECKER, d, f) + euler_form(KRONECKER, e, f)
    assert sym_form(KRONECKER, d, f) == sym_form(KRONECKER, f, d)
