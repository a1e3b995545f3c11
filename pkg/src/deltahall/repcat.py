"""Nilpotent representations of a loop-free quiver over F_p, at desk scale.

The catalog enumerates every matrix tuple of each dimension vector up to a
total-dimension bound and sorts them into isomorphism classes. Because every
tuple is classified, the catalog doubles as a lookup table from any
representation (in any basis) to its class id, and orbit sizes give the
automorphism group orders by orbit-stabilizer.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from . import fp
from .coeff import is_prime
from .fp import Matrix
from .quiver import Quiver, Vec, euler_form

log = logging.getLogger(__name__)

DEFAULT_CAP_MATRICES = 200_000
DEFAULT_CAP_SUBSPACES = 200_000
DEFAULT_CAP_ENDOMORPHISMS = 2_000_000


class CapExceeded(RuntimeError):
    def __init__(self, kind: str, size: int, cap: int, dim: Vec | None = None) -> None:
        where = f" at dimension vector {dim}" if dim is not None else ""
        super().__init__(f"{kind} count {size} exceeds cap {cap}{where}")
        self.kind = kind
        self.size = size
        self.cap = cap
        self.dim = dim


class TruncationError(ValueError):
    """A product or sweep needs classes beyond the catalog bound."""


@dataclass(frozen=True)
class Representation:
    """Vector spaces F_p^dim[i] and one (target x source) matrix per arrow."""

    dim: Vec
    maps: tuple[Matrix, ...]

    @property
    def total(self) -> int:
        return sum(self.dim)

    @property
    def key(self) -> tuple[Vec, tuple[Matrix, ...]]:
        return (self.dim, self.maps)

    def to_json(self) -> dict:
        return {"dim": list(self.dim), "maps": [[list(r) for r in m] for m in self.maps]}


def zero_rep(quiver: Quiver) -> Representation:
    return Representation(quiver.zero(), tuple(() for _ in quiver.arrows))


def make_rep(quiver: Quiver, dim: Sequence[int], maps: Sequence[Sequence[Sequence[int]]], p: int) -> Representation:
    dim = tuple(dim)
    out = []
    for (s, t), m in zip(quiver.arrows, maps, strict=True):
        mat = tuple(tuple(int(x) % p for x in row) for row in m)
        if len(mat) != dim[t] or any(len(r) != dim[s] for r in mat):
            raise ValueError(f"map for arrow {s}->{t} must be {dim[t]}x{dim[s]}")
        out.append(mat)
    return Representation(dim, tuple(out))


def direct_sum(quiver: Quiver, r: Representation, s: Representation) -> Representation:
    dim = tuple(x + y for x, y in zip(r.dim, s.dim))
    maps = []
    for (src, tgt), a, b in zip(quiver.arrows, r.maps, s.maps):
        rows = [list(row) + [0] * s.dim[src] for row in a]
        rows += [[0] * r.dim[src] + list(row) for row in b]
        maps.append(tuple(tuple(x) for x in rows))
    return Representation(dim, tuple(maps))


def is_nilpotent(quiver: Quiver, rep: Representation, p: int) -> bool:
    n = rep.total
    if n == 0 or quiver.is_acyclic():
        return True
    offs = _offsets(rep.dim)
    big = [[0] * n for _ in range(n)]
    for (s, t), m in zip(quiver.arrows, rep.maps):
        for r, row in enumerate(m):
            for c, x in enumerate(row):
                big[offs[t] + r][offs[s] + c] = (big[offs[t] + r][offs[s] + c] + x) % p
    power = tuple(tuple(r) for r in big)
    base = power
    for _ in range(n - 1):
        power = fp.matmul(power, base, p)
    return all(x == 0 for row in power for x in row)


def _offsets(dim: Sequence[int]) -> list[int]:
    offs, acc = [], 0
    for d in dim:
        offs.append(acc)
        acc += d
    return offs


# -- Hom spaces ---------------------------------------------------------------


def _intertwiner_system(quiver: Quiver, r: Representation, s: Representation) -> tuple[list[list[int]], int, list[int]]:
    """Rows of the linear map f -> (f_t R_a - S_a f_s)_a on unknowns f_i: R_i -> S_i."""
    sizes = [s.dim[i] * r.dim[i] for i in range(quiver.vertex_count)]
    offs = _offsets(sizes)
    nvars = sum(sizes)

    def var(i: int, row: int, col: int) -> int:
        return offs[i] + row * r.dim[i] + col

    eqs = []
    for (src, tgt), ra, sa in zip(quiver.arrows, r.maps, s.maps):
        for row in range(s.dim[tgt]):
            for col in range(r.dim[src]):
                eq = [0] * nvars
                for k in range(r.dim[tgt]):
                    eq[var(tgt, row, k)] += ra[k][col]
                for k in range(s.dim[src]):
                    eq[var(src, k, col)] -= sa[row][k]
                eqs.append(eq)
    return eqs, nvars, offs


def hom_basis(quiver: Quiver, r: Representation, s: Representation, p: int) -> list[tuple[int, ...]]:
    eqs, nvars, _ = _intertwiner_system(quiver, r, s)
    return fp.nullspace(eqs, nvars, p)


def hom_dim(quiver: Quiver, r: Representation, s: Representation, p: int) -> int:
    eqs, nvars, _ = _intertwiner_system(quiver, r, s)
    return nvars - fp.rank(eqs, nvars, p)


def ext_dim_direct(quiver: Quiver, r: Representation, s: Representation, p: int) -> int:
    """dim Ext^1(R, S) as the cokernel of the intertwiner map (standard resolution)."""
    eqs, nvars, _ = _intertwiner_system(quiver, r, s)
    return len(eqs) - fp.rank(eqs, nvars, p)


def ext_dim(quiver: Quiver, r: Representation, s: Representation, p: int) -> int:
    e = hom_dim(quiver, r, s, p) - euler_form(quiver, r.dim, s.dim)
    if e < 0:
        raise ArithmeticError(f"negative Ext dimension {e}; hereditary identity violated")
    return e


def _unflatten(vec: Sequence[int], r: Representation, s: Representation) -> list[Matrix]:
    out, k = [], 0
    for i in range(len(r.dim)):
        rows, cols = s.dim[i], r.dim[i]
        out.append(tuple(tuple(vec[k + a * cols: k + (a + 1) * cols]) for a in range(rows)))
        k += rows * cols
    return out


def _hom_elements(quiver: Quiver, r: Representation, s: Representation, p: int, cap: int) -> Iterator[list[Matrix]]:
    basis = hom_basis(quiver, r, s, p)
    size = p ** len(basis)
    if size > cap:
        raise CapExceeded("Hom-space", size, cap, r.dim)
    n = len(basis[0]) if basis else sum(a * b for a, b in zip(r.dim, s.dim))
    for coeffs in product(range(p), repeat=len(basis)):
        vec = [0] * n
        for c, b in zip(coeffs, basis):
            if c:
                for k, x in enumerate(b):
                    if x:
                        vec[k] = (vec[k] + c * x) % p
        yield _unflatten(vec, r, s)


def _all_invertible(mats: Sequence[Matrix], p: int) -> bool:
    return all(fp.is_invertible(m, p) for m in mats)


def is_isomorphic(quiver: Quiver, r: Representation, s: Representation, p: int,
                  cap: int = DEFAULT_CAP_ENDOMORPHISMS) -> bool:
    if r.dim != s.dim:
        return False
    if r.maps == s.maps:
        return True
    return any(_all_invertible(f, p) for f in _hom_elements(quiver, r, s, p, cap))


def aut_order(quiver: Quiver, r: Representation, p: int, cap: int = DEFAULT_CAP_ENDOMORPHISMS) -> int:
    """|Aut(R)|, by counting invertible endomorphism tuples."""
    return sum(1 for f in _hom_elements(quiver, r, r, p, cap) if _all_invertible(f, p))


# -- Catalog ------------------------------------------------------------------


def dim_vectors(n: int, bound: int) -> list[Vec]:
    """All dimension vectors of total <= bound, in catalog order."""
    out = [v for v in product(range(bound + 1), repeat=n) if sum(v) <= bound]
    return sorted(out, key=lambda v: (sum(v), v))


def _tuples(quiver: Quiver, dim: Vec, p: int, reverse: bool = False) -> Iterator[tuple[Matrix, ...]]:
    shapes = [(dim[t], dim[s]) for s, t in quiver.arrows]
    slots = sum(a * b for a, b in shapes)
    values = range(p - 1, -1, -1) if reverse else range(p)
    for flat in product(values, repeat=slots):
        maps, k = [], 0
        for rows, cols in shapes:
            maps.append(tuple(tuple(flat[k + i * cols: k + (i + 1) * cols]) for i in range(rows)))
            k += rows * cols
        yield tuple(maps)


def _signature(quiver: Quiver, rep: Representation, p: int) -> tuple:
    ranks = tuple(fp.rank(m, rep.dim[s], p) for (s, _), m in zip(quiver.arrows, rep.maps))
    return ranks, hom_dim(quiver, rep, rep, p)


@dataclass
class Catalog:
    """Iso-classes of representations with total dimension <= bound."""

    quiver: Quiver
    q: int
    bound: int
    classes: list[Representation] = field(default_factory=list)
    index: dict = field(default_factory=dict, repr=False)
    orbit_sizes: list[int] = field(default_factory=list, repr=False)
    by_dim: dict[Vec, list[int]] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.classes)

    def id_of(self, rep: Representation) -> int:
        try:
            return self.index[rep.key]
        except KeyError:
            raise TruncationError(f"representation of dimension {rep.dim} is outside the catalog") from None

    def dim(self, cid: int) -> Vec:
        return self.classes[cid].dim

    def total(self, cid: int) -> int:
        return self.classes[cid].total

    def with_dim(self, d: Sequence[int]) -> list[int]:
        return self.by_dim.get(tuple(d), [])

    def simple(self, i: int) -> int:
        d = self.quiver.simple(i)
        maps = tuple(tuple((0,) * d[s] for _ in range(d[t])) for s, t in self.quiver.arrows)
        return self.id_of(Representation(d, maps))

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "q": self.q,
            "max_dim": self.bound,
            "classes": [dict(id=i, **rep.to_json()) for i, rep in enumerate(self.classes)],
        }


def enumerate_catalog(quiver: Quiver, q: int, bound: int,
                      cap_matrices: int = DEFAULT_CAP_MATRICES,
                      cap_endomorphisms: int = DEFAULT_CAP_ENDOMORPHISMS,
                      reverse: bool = False) -> Catalog:
    """Classify every representation of total dimension <= bound.

    ``reverse`` walks matrix tuples in the opposite order; used only as an
    independent completeness cross-check (ids then differ).
    """
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    cat = Catalog(quiver, q, bound)
    for dim in dim_vectors(quiver.vertex_count, bound):
        slots = sum(dim[t] * dim[s] for s, t in quiver.arrows)
        if q**slots > cap_matrices:
            raise CapExceeded("matrix-tuple", q**slots, cap_matrices, dim)
        local: dict[tuple, list[int]] = {}
        ids: list[int] = []
        for maps in _tuples(quiver, dim, q, reverse):
            rep = Representation(dim, maps)
            if not is_nilpotent(quiver, rep, q):
                continue
            sig = _signature(quiver, rep, q)
            found = None
            for cid in local.get(sig, ()):
                if is_isomorphic(quiver, cat.classes[cid], rep, q, cap_endomorphisms):
                    found = cid
                    break
            if found is None:
                found = len(cat.classes)
                cat.classes.append(rep)
                cat.orbit_sizes.append(0)
                local.setdefault(sig, []).append(found)
                ids.append(found)
            cat.index[rep.key] = found
            cat.orbit_sizes[found] += 1
        cat.by_dim[dim] = ids
        log.debug("dim %s: %d classes", dim, len(ids))
    return cat


# -- Hall tables --------------------------------------------------------------


def _subspace_lists(n: int, p: int) -> list[list[tuple[Matrix, tuple[int, ...]]]]:
    return [list(fp.subspaces(n, k, p)) for k in range(n + 1)]


def subreps(quiver: Quiver, m: Representation, p: int,
            cap: int = DEFAULT_CAP_SUBSPACES) -> Iterator[tuple[Representation, Representation]]:
    """Yield (sub, quotient) for every subrepresentation X of M."""
    n = quiver.vertex_count
    total = 1
    for d in m.dim:
        total *= sum(fp.gaussian_binomial(d, k, p) for k in range(d + 1))
    if total > cap:
        raise CapExceeded("subspace", total, cap, m.dim)
    lists = [_subspace_lists(d, p) for d in m.dim]
    for b in product(*(range(d + 1) for d in m.dim)):
        for choice in product(*(lists[i][b[i]] for i in range(n))):
            res = _restrict(quiver, m, choice, p)
            if res is not None:
                yield res


def _restrict(quiver: Quiver, m: Representation, choice, p: int) -> tuple[Representation, Representation] | None:
    sub_maps, quo_maps = [], []
    for (s, t), a in zip(quiver.arrows, m.maps):
        us, ps = choice[s]
        ut, pt = choice[t]
        ms, mt = m.dim[s], m.dim[t]
        nonpiv_s = [c for c in range(ms) if c not in ps]
        nonpiv_t = [c for c in range(mt) if c not in pt]
        cols = []
        for u in us:
            w = fp.matvec(a, u, p) if mt else ()
            r = fp.reduce_vector(w, ut, pt, p)
            if any(r):
                return None
            cols.append([w[c] for c in pt])
        sub_maps.append(tuple(tuple(col[row] for col in cols) for row in range(len(pt))))
        qcols = []
        for j in nonpiv_s:
            w = tuple(a[row][j] for row in range(mt))
            r = fp.reduce_vector(w, ut, pt, p)
            qcols.append([r[c] for c in nonpiv_t])
        quo_maps.append(tuple(tuple(col[row] for col in qcols) for row in range(len(nonpiv_t))))
    bdim = tuple(len(c[1]) for c in choice)
    qdim = tuple(d - b for d, b in zip(m.dim, bdim))
    return Representation(bdim, tuple(sub_maps)), Representation(qdim, tuple(quo_maps))


def _hall_row(cat: Catalog, mid: int, cap: int) -> dict[tuple[int, int], int]:
    row: dict[tuple[int, int], int] = {}
    for sub, quo in subreps(cat.quiver, cat.classes[mid], cat.q, cap):
        key = (cat.id_of(quo), cat.id_of(sub))
        row[key] = row.get(key, 0) + 1
    return dict(sorted(row.items()))


_WORKER_CATALOG: Catalog | None = None


def _init_worker(cat: Catalog) -> None:
    global _WORKER_CATALOG
    _WORKER_CATALOG = cat


def _worker_row(args: tuple[int, int]) -> dict[tuple[int, int], int]:
    assert _WORKER_CATALOG is not None
    return _hall_row(_WORKER_CATALOG, *args)


class HallTables:
    """Memoized Hall numbers, automorphism orders and Hom/Ext dimensions."""

    def __init__(self, catalog: Catalog, jobs: int = 1, cap_subspaces: int = DEFAULT_CAP_SUBSPACES) -> None:
        self.catalog = catalog
        self.quiver = catalog.quiver
        self.q = catalog.q
        self.bound = catalog.bound
        self.n = len(catalog)
        self.aut = [
            _gl_product(rep.dim, self.q) // orbit
            for rep, orbit in zip(catalog.classes, catalog.orbit_sizes)
        ]
        ids = [(m, cap_subspaces) for m in range(self.n)]
        if jobs > 1 and self.n > 1:
            with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(catalog,)) as pool:
                self.rows = list(pool.map(_worker_row, ids, chunksize=1))
        else:
            self.rows = [_hall_row(catalog, m, cap) for m, cap in ids]
        self._hom: dict[tuple[int, int], int] = {}
        self._euler: dict[tuple[int, int], int] = {}

    @classmethod
    def build(cls, quiver: Quiver, q: int, bound: int, jobs: int = 1,
              cap_matrices: int = DEFAULT_CAP_MATRICES,
              cap_subspaces: int = DEFAULT_CAP_SUBSPACES) -> HallTables:
        return cls(enumerate_catalog(quiver, q, bound, cap_matrices), jobs, cap_subspaces)

    def dim(self, cid: int) -> Vec:
        return self.catalog.classes[cid].dim

    def total(self, cid: int) -> int:
        return self.catalog.classes[cid].total

    def F(self, a: int, b: int, m: int) -> int:
        """Hall number F^M_{AB}: submodules X of M with X ~ B and M/X ~ A."""
        return self.rows[m].get((a, b), 0)

    def a(self, m: int) -> int:
        return self.aut[m]

    def euler(self, x: int, y: int) -> int:
        key = (x, y)
        if key not in self._euler:
            self._euler[key] = euler_form(self.quiver, self.dim(x), self.dim(y))
        return self._euler[key]

    def hom(self, x: int, y: int) -> int:
        key = (x, y)
        if key not in self._hom:
            cls = self.catalog.classes
            self._hom[key] = hom_dim(self.quiver, cls[x], cls[y], self.q)
        return self._hom[key]

    def ext(self, x: int, y: int) -> int:
        e = self.hom(x, y) - self.euler(x, y)
        if e < 0:
            raise ArithmeticError(f"negative Ext dimension for classes {x}, {y}")
        return e

    def ext_count(self, a: int, b: int, m: int) -> int:
        """|Ext^1(A,B)_M| via the Riedtmann-Peng formula."""
        val = Fraction(self.F(a, b, m) * self.q ** self.hom(a, b) * self.a(a) * self.a(b), self.a(m))
        if val.denominator != 1:
            raise ArithmeticError(f"non-integral extension count {val} for ({a}, {b}, {m})")
        return int(val)

    def zero(self) -> int:
        return 0

    def simple(self, i: int) -> int:
        return self.catalog.simple(i)


def _gl_product(dim: Sequence[int], q: int) -> int:
    out = 1
    for d in dim:
        out *= fp.gl_order(d, q)
    return out


def hall_number(tables: HallTables, a: int, b: int, m: int) -> int:
    return tables.F(a, b, m)


def ext_count(tables: HallTables, a: int, b: int, m: int) -> int:
    return tables.ext_count(a, b, m)
