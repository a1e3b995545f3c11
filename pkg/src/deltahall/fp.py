"""Dense linear algebra over a prime field F_p.

Matrices are tuples of row tuples with entries in ``range(p)``. Everything here
is tiny (dimensions of a handful), so plain Python loops are fast enough and
keep the values hashable for catalog lookups.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator, Sequence

Matrix = tuple[tuple[int, ...], ...]


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix, p: int, inner: int | None = None) -> Matrix:
    # ``inner`` is needed when a has zero rows and b's row count is ambiguous
    n = len(b) if inner is None else inner
    cols = len(b[0]) if b else 0
    return tuple(
        tuple(sum(row[k] * b[k][j] for k in range(n)) % p for j in range(cols))
        for row in a
    )


def matvec(a: Matrix, x: Sequence[int], p: int) -> tuple[int, ...]:
    return tuple(sum(r * v for r, v in zip(row, x)) % p for row in a)


def rref(rows: Sequence[Sequence[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[int]], ncols: int, p: int) -> int:
    return len(rref(rows, ncols, p)[1])


def nullspace(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[tuple[int, ...]]:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols, p)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = [0] * ncols
        x[free] = 1
        for row, pc in zip(red, pivots):
            x[pc] = (-row[free]) % p
        basis.append(tuple(x))
    return basis


def is_invertible(a: Matrix, p: int) -> bool:
    n = len(a)
    if n == 0:
        return True
    if len(a[0]) != n:
        return False
    return rank(a, n, p) == n


def inverse(a: Matrix, p: int) -> Matrix:
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug, 2 * n, p)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("singular matrix mod %d" % p)
    return tuple(tuple(row[n:]) for row in red)


def reduce_vector(vec: Sequence[int], basis: Sequence[Sequence[int]], pivots: Sequence[int], p: int) -> list[int]:
    """Reduce ``vec`` modulo the span of an RREF basis (zeroes its pivot entries)."""
    v = list(vec)
    for row, pc in zip(basis, pivots):
        f = v[pc]
        if f:
            v = [(x - f * y) % p for x, y in zip(v, row)]
    return v


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def subspaces(n: int, k: int, p: int) -> Iterator[tuple[Matrix, tuple[int, ...]]]:
    """Yield every k-dim subspace of F_p^n as (RREF basis rows, pivot columns)."""
    if k == 0:
        yield (), ()
        return
    for pivots in combinations(range(n), k):
        pivset = set(pivots)
        # free slots: row r, column c > pivots[r], c not a pivot
        slots = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivset]
        for vals in product(range(p), repeat=len(slots)):
            rows = [[0] * n for _ in range(k)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), x in zip(slots, vals):
                rows[r][c] = x
            yield tuple(tuple(r) for r in rows), pivots
