"""Brute-force reference counts, deliberately independent of the engine's linear algebra.

Everything here enumerates raw matrix tuples over F_p; only usable on tiny dimensions.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

from deltahall.coeff import QuadNumber, VSum


def _mat_all(rows, cols, p):
    for flat in product(range(p), repeat=rows * cols):
        yield tuple(tuple(flat[r * cols:(r + 1) * cols]) for r in range(rows))


def _mul(a, b, p, inner, cols):
    rows = len(a)
    return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(inner)) % p for c in range(cols)) for r in range(rows))


def _det(m, p):
    n = len(m)
    a = [list(r) for r in m]
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], p - 2, p)
        for r in range(c + 1, n):
            f = a[r][c] * inv % p
            a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return det % p


def homs(quiver, r, s, p):
    """All tuples (f_i: R_i -> S_i) with f_t R_a = S_a f_s."""
    spaces = [list(_mat_all(s.dim[i], r.dim[i], p)) for i in range(quiver.vertex_count)]
    out = []
    for f in product(*spaces):
        ok = True
        for (src, tgt), ra, sa in zip(quiver.arrows, r.maps, s.maps):
            if _mul(f[tgt], ra, p, r.dim[tgt], r.dim[src]) != _mul(sa, f[src], p, s.dim[src], r.dim[src]):
                ok = False
                break
        if ok:
            out.append(f)
    return out


def rank(m, p, cols):
    a = [list(r) for r in m]
    rk = 0
    for c in range(cols):
        piv = next((r for r in range(rk, len(a)) if a[r][c] % p), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        inv = pow(a[rk][c], p - 2, p)
        for r in range(len(a)):
            if r != rk and a[r][c]:
                f = a[r][c] * inv % p
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[rk])]
        rk += 1
    return rk


def aut_count(quiver, r, p):
    return sum(1 for f in homs(quiver, r, r, p) if all(_det(m, p) for m in f))


def isomorphic(quiver, r, s, p):
    if r.dim != s.dim:
        return False
    return any(all(_det(m, p) for m in f) for f in homs(quiver, r, s, p))


def hall_number(quiver, a, b, m, p):
    """F^M_{AB} = #{(f, g) : 0 -> B -f-> M -g-> A -> 0 exact} / (a_A a_B)."""
    if tuple(x + y for x, y in zip(a.dim, b.dim)) != m.dim:
        return 0
    n = quiver.vertex_count
    inj = [f for f in homs(quiver, b, m, p)
           if all(rank(f[i], p, b.dim[i]) == b.dim[i] for i in range(n))]
    surj = [g for g in homs(quiver, m, a, p)
            if all(rank(g[i], p, m.dim[i]) == a.dim[i] for i in range(n))]
    count = 0
    for f in inj:
        for g in surj:
            if all(not any(any(row) for row in _mul(g[i], f[i], p, m.dim[i], b.dim[i])) for i in range(n)):
                count += 1
    return Fraction(count, aut_count(quiver, a, p) * aut_count(quiver, b, p))


def ext_count(quiver, a, b, m, p):
    """|Ext^1(A, B)_M| from block upper-triangular middle terms [[B, X], [0, A]]."""
    from deltahall.repcat import Representation
    dim = tuple(x + y for x, y in zip(a.dim, b.dim))
    if dim != m.dim:
        return 0
    choices = [list(_mat_all(b.dim[t], a.dim[s], p)) for s, t in quiver.arrows]
    hits = 0
    total = 0
    for xs in product(*choices):
        maps = []
        for (s, t), ba, aa, x in zip(quiver.arrows, b.maps, a.maps, xs):
            rows = [list(ba[r]) + list(x[r]) for r in range(b.dim[t])]
            rows += [[0] * b.dim[s] + list(aa[r]) for r in range(a.dim[t])]
            maps.append(tuple(tuple(r) for r in rows))
        total += 1
        if isomorphic(quiver, Representation(dim, tuple(maps)), m, p):
            hits += 1
    # the coboundaries act freely on the cocycle space Z^1 = all X with stabilizer Hom(A, B)
    cob = Fraction(p ** sum(x * y for x, y in zip(a.dim, b.dim)), len(homs(quiver, a, b, p)))
    return Fraction(hits) / cob


@lru_cache(maxsize=None)
def _cached_hall(t, a, b, m):
    cls = t.catalog.classes
    return hall_number(t.quiver, cls[a], cls[b], cls[m], t.q)


@lru_cache(maxsize=None)
def _cached_aut(t, m):
    return aut_count(t.quiver, t.catalog.classes[m], t.q)


def euler(quiver, d, e):
    return sum(x * y for x, y in zip(d, e)) - sum(d[s] * e[t] for s, t in quiver.arrows)


def delta_number(t, a, b, m):
    """Delta-Hall number by a full sweep over (L, I, N) using brute-force Hall numbers."""
    acc = VSum(t.q)
    dim = t.dim
    qv = t.quiver
    for l in range(t.n):
        for i in range(t.n):
            fb = _cached_hall(t, l, i, b)
            if not fb:
                continue
            for n in range(t.n):
                fm = _cached_hall(t, n, l, m)
                fa = _cached_hall(t, i, n, a)
                if not (fm and fa):
                    continue
                e = (euler(qv, dim(l), dim(i)) + euler(qv, dim(i), dim(i))
                     + euler(qv, dim(i), dim(n)) - euler(qv, dim(l), dim(n)))
                w = Fraction(_cached_aut(t, l) * _cached_aut(t, i) * _cached_aut(t, n), _cached_aut(t, m))
                acc.add(w * fb * fm * fa, e)
    return acc.value()


def hand_delta_ss(q):
    """[S]*[S] on A1 from the closed forms F^{S^2}_{S,S} = q+1, a_S = q-1,
    a_{S^2} = (q^2-1)(q^2-q), <S,S> = 1.

    Only two cycles exist: (L, I, N) = (0, S, 0) into M = 0 with exponent <S,S> = 1,
    and (S, 0, S) into M = S^2 with exponent -<S,S> = -1.
    """
    a_s = q - 1
    a_s2 = (q * q - 1) * (q * q - q)
    f = q + 1
    to_zero = QuadNumber(0, Fraction(a_s, 1), q)  # v^1 * a_S
    # weight a_S * a_0 * a_S / a_{S^2} * F^S_{S,0} F^{S^2}_{S,S} F^S_{0,S}, times v^-1 = v/q
    w = Fraction(a_s * a_s * f, a_s2)
    to_s2 = QuadNumber(0, w / q, q)
    return to_zero, to_s2
