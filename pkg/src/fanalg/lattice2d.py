"""Exact 2D integer linear algebra on lattice vectors.

Vectors are plain ``(x, y)`` tuples of Python integers, so all arithmetic is
exact at any magnitude.  The clockwise convention used throughout the
package: a sequence ``v1, ..., vN`` is clockwise-sorted iff
``det2(v[i+1], v[i]) > 0`` for consecutive elements.
"""
from __future__ import annotations

from math import gcd

from .errors import DegenerateConeError, NonPrimitiveError, ZeroVectorError

Vec = tuple[int, int]


def det2(u: Vec, v: Vec) -> int:
    """Determinant of the 2x2 matrix with rows u, v."""
    return u[0] * v[1] - u[1] * v[0]


def is_primitive(v: Vec) -> bool:
    return v != (0, 0) and gcd(abs(v[0]), abs(v[1])) == 1


def primitive(v: Vec) -> Vec:
    """v divided by the gcd of the absolute values of its coordinates."""
    if v == (0, 0):
        raise ZeroVectorError("cannot primitivize the zero vector")
    g = gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b == g == gcd(a, b), g >= 0."""
    s, next_s = 1, 0
    t, next_t = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        s, next_s = next_s, s - q * next_s
        t, next_t = next_t, t - q * next_t
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, s, t = -g, -s, -t
    return g, s, t


def bezout_complement(w: Vec) -> Vec:
    """Canonical (u, v) with det2((u, v), w) == 1.

    The solution set is (u0, v0) + t*w; we return the representative with
    minimal |u| + |v|, preferring u >= 0, then v >= 0, then the
    lexicographically largest pair, so the output is reproducible.
    """
    if not is_primitive(w):
        raise NonPrimitiveError(f"{w} is not primitive")
    x, y = w
    # u*y - v*x == 1
    g, s, t = _xgcd(y, x)
    assert g == 1
    u0, v0 = s, -t
    ts = set()
    if x != 0:
        q = round(-u0 / x)
        ts.update(range(q - 2, q + 3))
    if y != 0:
        q = round(-v0 / y)
        ts.update(range(q - 2, q + 3))
    ts.add(0)
    best = None
    for tt in sorted(ts):
        cand = (u0 + tt * x, v0 + tt * y)
        key = (-(abs(cand[0]) + abs(cand[1])), cand[0] >= 0, cand[1] >= 0, cand)
        if best is None or key > best[0]:
            best = (key, cand)
    out = best[1]
    assert det2(out, w) == 1
    return out


def _cramer_num(v: Vec, r1: Vec, r2: Vec) -> tuple[int, int, int]:
    """Numerators (nl, nm) and denominator d with v = (nl/d) r1 + (nm/d) r2."""
    d = det2(r1, r2)
    if d == 0:
        raise DegenerateConeError(f"rays {r1}, {r2} are collinear")
    nl = det2(v, r2)
    nm = det2(r1, v)
    if d < 0:
        d, nl, nm = -d, -nl, -nm
    return nl, nm, d


def cone_coords(v: Vec, r1: Vec, r2: Vec):
    """Exact rational (lam, mu) with v = lam*r1 + mu*r2."""
    from fractions import Fraction

    nl, nm, d = _cramer_num(v, r1, r2)
    return Fraction(nl, d), Fraction(nm, d)


def in_closed_cone(v: Vec, r1: Vec, r2: Vec) -> bool:
    """True iff v = lam*r1 + mu*r2 with lam, mu >= 0 (exact Cramer signs)."""
    nl, nm, _ = _cramer_num(v, r1, r2)
    return nl >= 0 and nm >= 0


def in_open_parallelogram(v: Vec, a: Vec, b: Vec) -> bool:
    """True iff v = lam*a + mu*b with 0 < lam < 1 and 0 < mu < 1."""
    nl, nm, d = _cramer_num(v, a, b)
    return 0 < nl < d and 0 < nm < d


def is_clockwise(seq) -> bool:
    return all(det2(seq[i + 1], seq[i]) > 0 for i in range(len(seq) - 1))
