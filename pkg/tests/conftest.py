from functools import lru_cache

import pytest

from deltahall.quiver import Quiver
from deltahall.repcat import HallTables, make_rep

A1 = Quiver(1, ())
A2 = Quiver(2, ((0, 1),))
A1A1 = Quiver(2, ())
KRONECKER = Quiver(2, ((0, 1), (0, 1)))


@lru_cache(maxsize=None)
def tables(quiver: Quiver, q: int, bound: int) -> HallTables:
    return HallTables.build(quiver, q, bound)


def cls(t: HallTables, dim, maps=None) -> int:
    """Class id of the representation with the given dimension vector and arrow matrices."""
    if maps is None:
        maps = [[[0] * dim[s] for _ in range(dim[tgt])] for s, tgt in t.quiver.arrows]
    return t.catalog.id_of(make_rep(t.quiver, dim, maps, t.q))


def a2_named(t: HallTables) -> dict[str, int]:
    """S1, S2, P1 (indecomposable of dim (1,1)) and S1+S2 on A2."""
    return {
        "0": t.zero(),
        "S1": t.simple(0),
        "S2": t.simple(1),
        "P1": cls(t, (1, 1), [[[1]]]),
        "S1S2": cls(t, (1, 1), [[[0]]]),
    }


@pytest.fixture
def a1_2():
    return tables(A1, 2, 3)


@pytest.fixture
def a2_2():
    return tables(A2, 2, 2)
