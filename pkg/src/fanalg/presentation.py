"""Generators and defining relations of the fan algebra.

The generator set is the clockwise union H of the per-cone Hilbert bases;
one Y-variable per element.  For every non-adjacent pair (v, v') the unique
binomial  Y_v Y_v' - p^gamma Y_w^a Y_w'^a'  (with (w, w') the adjacent pair
whose cone contains v + v') spans the presentation ideal; together they form
a reduced Groebner basis of the kernel of the substitution map
Y_v -> p^{f(v)} x^v under the clockwise lex order.

Adjacency is positional: H elements are adjacent iff consecutive, which the
constructor re-verifies (consecutive determinants 1, nothing strictly inside
the elementary cones).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import (
    AdjacentPairError,
    InputError,
    UnsupportedSupportError,
)
from .fan import (
    Fan,
    FanLinearFamily,
    KIND_CONE,
    KIND_HALF_LINE,
    KIND_HALF_PLANE,
    KIND_LINE,
    coarsen,
    eval_all,
    gamma,
    is_strict,
    validate_family,
)
from .hilbert import hilbert_basis
from .lattice2d import Vec, det2
from .polyring import (
    BinomialWatch,
    Poly,
    YOrder,
    cf_is_one,
    divide,
    phi0_eval,
    poly_zz_degree,
    ym_divides,
    ym_mul,
    ym_one,
    ym_var,
)
from .report import ValidationReport


@dataclass
class Relation:
    """One binomial Y_i Y_j - p^gamma * (tail monomial)."""

    pair: tuple[int, int]
    poly: Poly
    tail: dict  # {index: exponent} of the adjacent-pair monomial
    gamma: tuple[int, ...]

    def label(self) -> str:
        return f"S_{self.pair[0]},{self.pair[1]}"


@dataclass
class Presentation:
    fan: Fan
    fam: FanLinearFamily
    H: tuple[Vec, ...]
    M: int
    n: int
    yorder: YOrder
    generators: dict  # 1-based index -> (p-exponent vector, lattice vector)
    relations: list[Relation]
    index_pairs: list[tuple[int, int]]
    kind: str
    strict_flags: list[bool] = field(default_factory=list)
    distinguished: list = field(default_factory=list)
    specialized_p: dict | None = None  # 1-based p index -> integer value

    @property
    def polys(self) -> list[Poly]:
        return [r.poly for r in self.relations]

    def relation(self, i: int, j: int) -> Relation:
        for r in self.relations:
            if r.pair == (i, j):
                return r
        raise KeyError((i, j))

    def adjacent(self, i: int, j: int) -> bool:
        return abs(i - j) == 1

    def phi0(self, g: Poly):
        return phi0_eval(g, self.H, self.fan, self.fam)


def hilbert_union(fan: Fan):
    """Clockwise-sorted deduplicated union of the per-cone Hilbert bases."""
    if fan.kind not in (KIND_CONE, KIND_HALF_PLANE):
        raise UnsupportedSupportError(
            f"hilbert_union needs a two-dimensional support, got {fan.kind}"
        )
    H: list[Vec] = []
    for i in range(fan.ncones):
        r1, r2 = fan.cone(i)
        basis = hilbert_basis(r1, r2).elements
        for v in basis:
            if not H or H[-1] != v:
                H.append(v)
    return tuple(H), len(H)


def _verify_positional_adjacency(H) -> None:
    for a in range(len(H) - 1):
        if det2(H[a + 1], H[a]) != 1:
            raise InputError(f"H elements {H[a]}, {H[a+1]} are not unimodular neighbors")
        for v in H:
            if v in (H[a], H[a + 1]):
                continue
            if det2(H[a], v) > 0 and det2(v, H[a + 1]) > 0:
                raise InputError(f"{v} lies strictly inside cone({H[a]}, {H[a+1]})")


def _locate_segment(H, u: Vec) -> int:
    """0-based t with u in cone(H[t], H[t+1]); expects u strictly inside
    cone(H[0], H[-1]) or equal to a multiple of an interior element."""
    lo, hi = 0, len(H) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if det2(H[mid], u) >= 0:
            hi = mid
        else:
            lo = mid + 1
    return max(lo - 1, 0)


def make_relation(H, fan: Fan, fam: FanLinearFamily, i: int, j: int) -> Relation:
    """The binomial for the non-adjacent 1-based pair (i, j)."""
    M, n = len(H), fam.n
    if abs(i - j) == 1 or i == j:
        raise AdjacentPairError(f"pair ({i}, {j}) carries no relation")
    i, j = min(i, j), max(i, j)
    vi, vj = H[i - 1], H[j - 1]
    u = (vi[0] + vj[0], vi[1] + vj[1])
    g = gamma(fan, fam, vi, vj)
    tail: dict[int, int] = {}
    ymon = ym_one(M)
    if u != (0, 0):
        t = _locate_segment(H, u)
        w, w2 = H[t], H[t + 1]
        # det2(w2, w) == 1, so Cramer gives integers
        alpha = det2(w2, u)
        alpha2 = det2(u, w)
        assert alpha >= 0 and alpha2 >= 0
        assert (alpha * w[0] + alpha2 * w2[0], alpha * w[1] + alpha2 * w2[1]) == u
        if alpha:
            tail[t + 1] = alpha
            ymon = ym_mul(ymon, ym_var(M, t + 1, alpha))
        if alpha2:
            tail[t + 2] = alpha2
            ymon = ym_mul(ymon, ym_var(M, t + 2, alpha2))
    lead = ym_mul(ym_var(M, i), ym_var(M, j))
    poly = Poly.term(M, n, 1, (0,) * n, lead) + Poly.term(M, n, -1, g, ymon)
    rel = Relation((i, j), poly, tail, g)
    order = YOrder(M)
    assert poly.lm(order) == lead, "leading monomial must be the non-adjacent product"
    return rel


def _degenerate_presentation(fan: Fan, fam: FanLinearFamily) -> Presentation:
    n = fam.n
    order = YOrder(len(fan.rays))
    if fan.kind == KIND_HALF_LINE:
        v = fan.rays[0]
        gens = {1: (eval_all(fan, fam, v), v)}
        return Presentation(fan, fam, (v,), 1, n, order, gens, [], [], fan.kind)
    # line: H = [r, -r], one relation Y1*Y2 - p^{f(r) + f(-r)}
    r = fan.rays[0]
    mr = fan.rays[1]
    gens = {1: (eval_all(fan, fam, r), r), 2: (eval_all(fan, fam, mr), mr)}
    g = gamma(fan, fam, r, mr)
    poly = Poly.term(2, n, 1, (0,) * n, (1, 1)) + Poly.term(2, n, -1, g, (0, 0))
    rel = Relation((1, 2), poly, {}, g)
    return Presentation(fan, fam, (r, mr), 2, n, order, gens, [rel], [(1, 2)], fan.kind)


def degenerate_presentation(fan: Fan, fam: FanLinearFamily) -> Presentation:
    if not fan.is_degenerate:
        raise InputError("degenerate_presentation needs a half-line or line fan")
    return _degenerate_presentation(fan, fam)


def presentation_ideal(fan: Fan, fam: FanLinearFamily, auto_coarsen: bool = True) -> Presentation:
    """All defining relations, lex-sorted by index pair."""
    rep = validate_family(fan, fam)
    if not rep.ok:
        raise InputError(f"family is not fan-linear:\n{rep}")
    if fan.is_degenerate:
        return _degenerate_presentation(fan, fam)
    if auto_coarsen:
        fan, fam = coarsen(fan, fam)
    flags, ks = is_strict(fan, fam)
    H, M = hilbert_union(fan)
    _verify_positional_adjacency(H)
    order = YOrder(M)
    gens = {k: (eval_all(fan, fam, v), v) for k, v in enumerate(H, start=1)}
    pairs = [(i, j) for i in range(1, M + 1) for j in range(i + 2, M + 1)]
    relations = [make_relation(H, fan, fam, i, j) for i, j in pairs]
    expected = (M - 1) * (M - 2) // 2
    assert len(relations) == expected, (len(relations), expected)
    pres = Presentation(
        fan, fam, H, M, fam.n, order, gens, relations, pairs, fan.kind, flags, ks
    )
    if __debug__:
        for r in relations:
            assert pres.phi0(r.poly) == {}, f"{r.label()} is not in the kernel"
            vi, vj = H[r.pair[0] - 1], H[r.pair[1] - 1]
            assert poly_zz_degree(r.poly, H) == (vi[0] + vj[0], vi[1] + vj[1])
    return pres


def specialize(pres: Presentation, p_values: dict) -> Presentation:
    """New presentation over the specialized coefficients p_i -> integer."""
    rels = [
        Relation(r.pair, r.poly.subs_p(p_values), dict(r.tail), r.gamma)
        for r in pres.relations
    ]
    merged = dict(pres.specialized_p or {})
    merged.update(p_values)
    return Presentation(
        pres.fan,
        pres.fam,
        pres.H,
        pres.M,
        pres.n,
        pres.yorder,
        pres.generators,
        rels,
        list(pres.index_pairs),
        pres.kind,
        list(pres.strict_flags),
        list(pres.distinguished),
        merged,
    )


def spair(a: Poly, b: Poly, order: YOrder) -> tuple[Poly, tuple, tuple]:
    """S-polynomial of two monic polynomials plus the two cofactor monomials."""
    la, lb = a.lm(order), b.lm(order)
    lcm = tuple(max(x, y) for x, y in zip(la, lb))
    ma = tuple(x - y for x, y in zip(lcm, la))
    mb = tuple(x - y for x, y in zip(lcm, lb))
    one = {(0,) * a.n: 1}
    return a.mul_term(one, ma) - b.mul_term(one, mb), ma, mb


def verify_groebner(pres: Presentation, rng=None, samples: int = 200) -> ValidationReport:
    """Buchberger check, reducedness, and the leading-term structure."""
    rng = rng or random.Random(0)
    rep = ValidationReport()
    order = pres.yorder
    G = pres.polys
    watch = BinomialWatch()
    bad = []
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            s, _, _ = spair(G[a], G[b], order)
            if s.is_zero:
                continue
            _, rem = divide(s, G, order, watch=watch if pres.specialized_p is None else None)
            if not rem.is_zero:
                bad.append((pres.relations[a].label(), pres.relations[b].label()))
    for f in watch.findings():
        rep.note(f)
    rep.add(
        "s-polynomials-reduce-to-zero",
        not bad,
        f"{len(G) * (len(G) - 1) // 2} pairs" + (f"; failing: {bad}" if bad else ""),
    )

    monic = all(g.is_monic(order) for g in G if not g.is_zero)
    reduced = monic
    for a, g in enumerate(G):
        for m in g.t:
            for b, other in enumerate(G):
                if a != b and ym_divides(other.lm(order), m):
                    reduced = False
    rep.add("reduced", reduced, "monic, and no term reducible by the other elements")

    lead_ok = all(
        g.lm(order) == ym_mul(ym_var(pres.M, i), ym_var(pres.M, j))
        for g, (i, j) in zip(G, pres.index_pairs)
    )
    rep.add("leading-terms-are-nonadjacent-products", lead_ok)

    # a random monomial avoids the leading-term ideal iff it is supported on
    # an adjacent pair of generators
    lt_ok = True
    for _ in range(samples):
        m = tuple(rng.randint(0, 2) for _ in range(pres.M))
        divisible = any(ym_divides(g.lm(order), m) for g in G)
        support = [k for k, e in enumerate(m) if e]
        adjacent_support = len(support) <= 1 or (
            len(support) == 2 and support[1] - support[0] == 1
        )
        if divisible == adjacent_support:
            lt_ok = False
    rep.add("leading-term-ideal-complement", lt_ok)
    return rep


def check_minimal_generation(pres: Presentation) -> ValidationReport:
    """Minimality of the algebra generators and of the relation set."""
    rep = ValidationReport()
    order = pres.yorder

    # algebra generators: fatal shapes are Y_i Y_j - Y_w and Y_i Y_j - const
    # with trivial coefficient (unit p-part)
    corcho = []
    for r in pres.relations:
        tail_terms = [
            (m, cf) for m, cf in r.poly.t.items()
            if m != ym_mul(ym_var(pres.M, r.pair[0]), ym_var(pres.M, r.pair[1]))
        ]
        for m, cf in tail_terms:
            if sum(m) <= 1 and cf_is_one({e: -c for e, c in cf.items()}, pres.n):
                corcho.append(r.label())
    rep.add(
        "algebra-generators-minimal",
        not corcho,
        "no relation of shape Y_i*Y_j - Y_w" + (f"; found {corcho}" if corcho else ""),
    )

    strict = all(pres.strict_flags) if pres.strict_flags else True
    rep.add(
        "family-strict",
        strict,
        f"walls {pres.strict_flags}, distinguished functions {pres.distinguished}",
    )

    if pres.specialized_p is None:
        # over the universal ring Z[p] every p_i is a non-unit non-zerodivisor
        # and any two generate a proper ideal, so strictness settles minimality
        rep.add(
            "relations-minimal-generating-set",
            strict,
            "generic coefficients: strict family gives a minimal generating set",
        )
        return rep

    # specialized coefficients: re-run the first syzygy layer and look for a
    # unit constant in some division quotient, which exhibits one relation as
    # a combination of the others
    from .syzygy import enumerate_admissible

    pair_index = {p: k for k, p in enumerate(pres.index_pairs)}
    G = pres.polys
    witnesses = []
    for (i, j, k) in enumerate_admissible(pres.M, 1):
        if k > j:
            other = (i, k)
        else:
            other = (k, j)
        a, b = pair_index[(i, j)], pair_index[other]
        s, _, _ = spair(G[a], G[b], order)
        if s.is_zero:
            continue
        quots, rem = divide(s, G, order)
        if not rem.is_zero:
            witnesses.append(f"S-pair of {(i, j)} and {other} does not reduce to zero")
            continue
        for q, r in zip(quots, pres.relations):
            c = q.constant_term()
            if c != 0 and r.pair not in ((i, j), other):
                lhs = r.label()
                witnesses.append(
                    f"{lhs} appears with unit coefficient {c} in the reduction of the "
                    f"S-pair of S_{i},{j} and S_{other[0]},{other[1]}; it is redundant"
                )
    rep.add(
        "relations-minimal-generating-set",
        not witnesses,
        "; ".join(witnesses) if witnesses else "no unit quotient constants",
    )
    return rep
