"""Free-module elements, the induced (Schreyer) order, and the syzygy tower.

Stage-s generators are indexed by admissible (s+1)-tuples (i, j, k_1..k_{s-1})
with i < j-1, i < k_1 < ... < k_{s-1} <= M and no k_m in {j-1, j}; the stage-s
element s_T has leading term Y_{last(T)} e_{prefix(T)}.  Stage s+1 is built by
reducing, for every admissible (s+2)-tuple, the S-vector of the two stage-s
generators sharing all but the last index, and recording the quotients as the
new element's coordinates.

The induced order on module monomials Y^a e_T compares the fully lifted
Y-monomial Y^a * Y_{t_1} * ... * Y_{t_len(T)} under the base lex order and
breaks ties by the basis tuple, larger tuple meaning smaller monomial.  This
closed form agrees with the recursive "compare lifted leading monomials one
stage down" definition; tests check the two against each other.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations

from .errors import NonMonicDivisorError, StageMismatchError
from .polyring import (
    Poly,
    YOrder,
    cf_is_one,
    cf_is_signed_monomial,
    cf_mul,
    ym_lcm,
    ym_div,
    ym_mul,
    ym_one,
    ym_var,
)

BasisTuple = tuple  # (i, j, k_1, ..., k_{s-1}), 1-based indices, stage = len-1


def tuple_stage(T: BasisTuple) -> int:
    return len(T) - 1


def tuple_degree(T: BasisTuple, H):
    """Z^2-degree of the basis element e_T: sum of the indexed vectors."""
    x = y = 0
    for k in T:
        x += H[k - 1][0]
        y += H[k - 1][1]
    return (x, y)


def enumerate_admissible(M: int, u: int):
    """All admissible (u+2)-tuples in lex order; u = 0 gives the non-adjacent
    pairs, u >= 1 the stage-(u+1) index tuples."""
    out = []
    for i in range(1, M + 1):
        for j in range(i + 2, M + 1):
            pool = [k for k in range(i + 1, M + 1) if k not in (j - 1, j)]
            for ks in combinations(pool, u):
                out.append((i, j) + ks)
    return out


class ModElem:
    """Element of a free module: sparse map from basis tuple to polynomial."""

    __slots__ = ("M", "n", "c")

    def __init__(self, M: int, n: int, coords=None):
        self.M = M
        self.n = n
        self.c = {}
        if coords:
            for T, p in coords.items():
                if p and not p.is_zero:
                    self.c[T] = p.copy()

    @property
    def is_zero(self) -> bool:
        return not self.c

    def copy(self):
        return ModElem(self.M, self.n, self.c)

    def __eq__(self, other):
        return (
            isinstance(other, ModElem)
            and self.M == other.M
            and self.n == other.n
            and self.c == other.c
        )

    def __add__(self, other):
        out = self.copy()
        for T, p in other.c.items():
            s = out.c.get(T, Poly.zero(self.M, self.n)) + p
            if s.is_zero:
                out.c.pop(T, None)
            else:
                out.c[T] = s
        return out

    def __neg__(self):
        return ModElem(self.M, self.n, {T: -p for T, p in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def mul_term(self, coef, ymon):
        return ModElem(self.M, self.n, {T: p.mul_term(coef, ymon) for T, p in self.c.items()})

    def terms(self):
        for T, p in self.c.items():
            for m, cf in p.t.items():
                yield T, m, cf

    def __repr__(self):
        return f"ModElem({self.c!r})"


class SchreyerOrder:
    """Module term order induced by a lex-sorted stage family."""

    __slots__ = ("stage", "yorder")

    def __init__(self, stage: int, yorder: YOrder):
        self.stage = stage
        self.yorder = yorder

    def _lift(self, ymon, T):
        lift = list(ymon)
        for k in T:
            lift[k - 1] += 1
        return tuple(lift)

    def key(self, ymon, T: BasisTuple):
        """Sort key: larger key = larger module monomial."""
        if tuple_stage(T) != self.stage:
            raise StageMismatchError(f"tuple {T} is not a stage-{self.stage} index")
        return (self.yorder.key(self._lift(ymon, T)), tuple(-k for k in T))

    def heapkey(self, ymon, T: BasisTuple):
        """Min-heap key: smallest key = largest module monomial."""
        if tuple_stage(T) != self.stage:
            raise StageMismatchError(f"tuple {T} is not a stage-{self.stage} index")
        return (tuple(-x for x in self.yorder.key(self._lift(ymon, T))), T)

    def compare(self, m1, m2) -> int:
        k1 = self.key(*m1)
        k2 = self.key(*m2)
        return (k1 > k2) - (k1 < k2)


def schreyer_compare(m1, m2, so: SchreyerOrder) -> int:
    """Compare module monomials (ymon, T); positive means m1 is larger."""
    return so.compare(m1, m2)


def schreyer_compare_recursive(m1, m2, yorder: YOrder) -> int:
    """Reference implementation of the induced order: compare the lifted
    leading monomials one stage down, tie-broken by 'larger tuple index is
    smaller'.  Used by tests to validate the closed-form key."""
    (a, T), (b, U) = m1, m2
    if len(T) != len(U):
        raise StageMismatchError("mixed stages")
    if not T:
        return yorder.compare(a, b)
    a2 = ym_mul(a, ym_var(len(a), T[-1]))
    b2 = ym_mul(b, ym_var(len(b), U[-1]))
    r = schreyer_compare_recursive((a2, T[:-1]), (b2, U[:-1]), yorder)
    if r:
        return r
    return (U > T) - (U < T)


def module_lt(v: ModElem, so: SchreyerOrder):
    """(ymon, T, coefficient) of the largest module monomial of v."""
    best = None
    best_key = None
    for T, m, cf in v.terms():
        k = so.key(m, T)
        if best_key is None or k > best_key:
            best_key = k
            best = (m, T, cf)
    return best


def module_is_monic(v: ModElem, so: SchreyerOrder) -> bool:
    if v.is_zero:
        return False
    _, _, cf = module_lt(v, so)
    return cf_is_one(cf, v.n)


def module_spair(g1: ModElem, g2: ModElem, so: SchreyerOrder) -> ModElem:
    """S-vector of two monic module elements; zero when the leading basis
    tuples differ (their lcm is zero)."""
    if not (module_is_monic(g1, so) and module_is_monic(g2, so)):
        raise NonMonicDivisorError("module S-pairs need monic arguments")
    m1, T1, _ = module_lt(g1, so)
    m2, T2, _ = module_lt(g2, so)
    if T1 != T2:
        return ModElem(g1.M, g1.n)
    lcm = ym_lcm(m1, m2)
    one = {(0,) * g1.n: 1}
    return g1.mul_term(one, ym_div(lcm, m1)) - g2.mul_term(one, ym_div(lcm, m2))


@dataclass
class StageFamily:
    """The stage-s generating family, its coordinates one stage down, and the
    order data needed to divide by it."""

    stage: int
    M: int
    n: int
    yorder: YOrder
    tuples: list  # stage-s tuples, lex sorted
    elems: dict  # tuple -> ModElem over stage-(s-1) tuples
    so_prev: SchreyerOrder  # order on the module the elements live in
    by_prefix: dict  # prefix tuple -> sorted list of admissible last indices
    _flat: dict = None  # tuple -> [(P, ymon, coef), ...] divisor term cache

    def __len__(self):
        return len(self.tuples)

    def so(self) -> SchreyerOrder:
        """Order induced by this family on its own free module."""
        return SchreyerOrder(self.stage, self.yorder)

    def flat(self, T):
        if self._flat is None:
            self._flat = {}
        got = self._flat.get(T)
        if got is None:
            got = self._flat[T] = list(self.elems[T].terms())
        return got


def _index_by_prefix(tuples):
    by_prefix = {}
    for T in tuples:
        by_prefix.setdefault(T[:-1], []).append(T[-1])
    for v in by_prefix.values():
        v.sort()
    return by_prefix


def module_divide(v: ModElem, fam: StageFamily, watch=None):
    """Divide v (living one stage below fam) by the stage family.

    Returns (quotients, remainder): quotients maps stage tuples to Poly with
    v = sum quot[T] * fam.elems[T] + remainder.  The divisor for a leading
    monomial Y^m e_P is the family element with the maximal admissible last
    index t such that P + (t,) exists and Y_t divides Y^m; this realizes the
    maximal-index rule inside the lex-sorted family.
    """
    so = fam.so_prev
    M, n = v.M, v.n
    heapkey = so.heapkey
    push = heapq.heappush
    pop = heapq.heappop
    work: dict = {}
    heap: list = []
    for T, m, cf in v.terms():
        work[(T, m)] = dict(cf)
        push(heap, (heapkey(m, T), T, m))
    quots: dict = {}
    rem = ModElem(M, n)
    last_key = None
    while heap:
        hk, T, m = pop(heap)
        cf = work.get((T, m))
        if cf is None:
            continue
        assert last_key is None or hk > last_key, "monomials must strictly decrease"
        last_key = hk
        if watch is not None and not cf_is_signed_monomial(cf):
            watch.note_coefficient(cf)
        cands = fam.by_prefix.get(T, ())
        t = None
        for k in reversed(cands):
            if m[k - 1] > 0:
                t = k
                break
        if t is None:
            p = rem.c.setdefault(T, Poly.zero(M, n))
            p.t[m] = cf
            del work[(T, m)]
            continue
        U = T + (t,)
        shift = list(m)
        shift[t - 1] -= 1
        shift = tuple(shift)
        # snapshot: the update loop below empties the aliased work entry when
        # it cancels the lead, and later divisor terms still need the value
        cf = dict(cf)
        q = quots.setdefault(U, Poly.zero(M, n))
        merged = dict(q.t.get(shift, ()))
        for e, c in cf.items():
            s = merged.get(e, 0) + c
            if s:
                merged[e] = s
            else:
                merged.pop(e, None)
        if merged:
            q.t[shift] = merged
        else:
            q.t.pop(shift, None)
        # work -= cf * Y^shift * fam.elems[U]; the lead entry cancels exactly
        for P2, m2, cf2 in fam.flat(U):
            key = (P2, tuple(x + y for x, y in zip(m2, shift)))
            if len(cf2) == 1 and len(cf) == 1:
                (e2, c2), = cf2.items()
                (e1, c1), = cf.items()
                delta = {tuple(x + y for x, y in zip(e2, e1)): c2 * c1}
            else:
                delta = cf_mul(cf2, cf)
            cur = work.get(key)
            if cur is None:
                work[key] = {e: -c for e, c in delta.items()}
                push(heap, (heapkey(key[1], P2), P2, key[1]))
            else:
                for e, c in delta.items():
                    s = cur.get(e, 0) - c
                    if s:
                        cur[e] = s
                    else:
                        del cur[e]
                if not cur:
                    del work[key]
        assert work.get((T, m)) is None, "leading term must cancel"
    return quots, rem


def _assert_kernel_element(coords: dict, fam_elems: dict, M: int, n: int) -> None:
    """Substituting each basis tuple by its generator must give zero."""
    acc = ModElem(M, n)
    for T, q in coords.items():
        gen = fam_elems[T]
        for m, cf in q.t.items():
            acc = acc + gen.mul_term(cf, m)
    assert acc.is_zero, "syzygy candidate is not in the kernel"


def build_stage2(pres, watch=None, check_kernel: bool = False) -> StageFamily:
    """First syzygy layer: one element per admissible triplet (i, j, k), built
    from the S-polynomial of the relation pair the triplet dictates."""
    from .presentation import spair
    from .polyring import divide

    order = pres.yorder
    M, n = pres.M, pres.n
    G = pres.polys
    pairs = pres.index_pairs
    pair_idx = {p: i for i, p in enumerate(pairs)}
    triplets = enumerate_admissible(M, 1)
    elems = {}
    so1 = SchreyerOrder(1, order)
    one = {(0,) * n: 1}
    for (i, j, k) in triplets:
        other = (i, k) if k > j else (k, j)
        A = G[pair_idx[(i, j)]]
        B = G[pair_idx[other]]
        s, ma, mb = spair(A, B, order)
        assert ma == ym_var(M, k) and mb == ym_var(M, j if k > j else i)
        quots, rem = divide(s, G, order, watch)
        assert rem.is_zero, f"S-pair of {(i, j)} and {other} does not reduce to zero"
        coords = {(i, j): Poly.term(M, n, 1, (0,) * n, ma)}
        coords[other] = coords.get(other, Poly.zero(M, n)) - Poly.term(M, n, 1, (0,) * n, mb)
        for q, p in zip(quots, pairs):
            if not q.is_zero:
                acc = coords.get(p, Poly.zero(M, n)) - q
                if acc.is_zero:
                    coords.pop(p, None)
                else:
                    coords[p] = acc
        el = ModElem(M, n, coords)
        lm, lT, lc = module_lt(el, so1)
        assert (lm, lT) == (ym_var(M, k), (i, j)) and cf_is_one(lc, n), (
            f"lt(s_{i},{j},{k}) must be Y{k} e_({i},{j})"
        )
        if check_kernel:
            # coordinates against the relations themselves
            acc = Poly.zero(M, n)
            for p, q in coords.items():
                acc = acc + q * G[pair_idx[p]]
            assert acc.is_zero
        elems[(i, j, k)] = el
    expected = 2 * _binom(M - 1, 3)
    assert len(triplets) == expected, (len(triplets), expected)
    return StageFamily(
        2, M, n, order, triplets, elems, so1, _index_by_prefix(triplets)
    )


def build_stage_next(fam: StageFamily, watch=None, check_kernel: bool = False) -> StageFamily:
    """Stage s+1 from stage s: reduce the S-vector of the two generators
    sharing all but the last index, for every admissible next tuple."""
    M, n = fam.M, fam.n
    s = fam.stage
    tuples_next = enumerate_admissible(M, s)
    so_s = fam.so()
    one = {(0,) * n: 1}
    elems = {}
    for W in tuples_next:
        P = W[:-2]
        k1, k2 = W[-2], W[-1]
        g1 = fam.elems[P + (k1,)]
        g2 = fam.elems[P + (k2,)]
        sv = g1.mul_term(one, ym_var(M, k2)) - g2.mul_term(one, ym_var(M, k1))
        quots, rem = module_divide(sv, fam, watch)
        assert rem.is_zero, f"module S-pair for {W} does not reduce to zero"
        coords = {P + (k1,): Poly.term(M, n, 1, (0,) * n, ym_var(M, k2))}
        key2 = P + (k2,)
        coords[key2] = coords.get(key2, Poly.zero(M, n)) - Poly.term(
            M, n, 1, (0,) * n, ym_var(M, k1)
        )
        for U, q in quots.items():
            if not q.is_zero:
                acc = coords.get(U, Poly.zero(M, n)) - q
                if acc.is_zero:
                    coords.pop(U, None)
                else:
                    coords[U] = acc
        el = ModElem(M, n, coords)
        lm, lT, lc = module_lt(el, so_s)
        assert (lm, lT) == (ym_var(M, k2), P + (k1,)) and cf_is_one(lc, n), (
            f"lt(s_{W}) must be Y{k2} e_{P + (k1,)}"
        )
        if check_kernel:
            _assert_kernel_element(coords, fam.elems, M, n)
        elems[W] = el
    expected = (s + 1) * _binom(M - 1, s + 2)
    assert len(tuples_next) == expected, (len(tuples_next), expected)
    return StageFamily(
        s + 1, M, n, fam.yorder, tuples_next, elems, so_s, _index_by_prefix(tuples_next)
    )


def _binom(a: int, b: int) -> int:
    from math import comb

    return comb(a, b) if 0 <= b <= a else 0
