"""Sparse polynomials in the Y-block over the universal coefficient ring Z[p].

The monomial order sees only the Y-variables; a coefficient is a full Z[p]
element (a dict mapping p-exponent tuples to integers).  This is exactly the
"Groebner bases over a Noetherian coefficient ring" setting: division needs
monic divisors (leading coefficient the integer 1) and, among the divisors
whose leading monomial divides the current one, always picks the one with the
maximal index in the ordered family.

Y-monomials are dense exponent tuples of length M; Y_k (1-based, clockwise
position k) lives at slot k-1.  The lex order reads exponents from Y_M down
to Y_1, so comparing reversed tuples compares monomials.
"""
from __future__ import annotations

import re
from .errors import (
    DimensionMismatchError,
    NonMonicDivisorError,
    ZeroPolynomialError,
)

YMon = tuple  # length-M exponent tuple
PExp = tuple  # length-n exponent tuple
# Coefficient in Z[p1..pn]: {p_exponent_tuple: nonzero int}

# ---------------------------------------------------------------------------
# coefficient ring Z[p]


def cf_const(n: int, c: int = 1):
    return {(0,) * n: c} if c else {}

def cf_mono(c: int, pexp: PExp):
    return {tuple(pexp): c} if c else {}

def cf_add(a, b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out

def cf_neg(a):
    return {e: -c for e, c in a.items()}

def cf_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out

def cf_scale(a, c: int, pexp: PExp | None = None):
    if c == 0:
        return {}
    if pexp is None:
        return {e: c * v for e, v in a.items()}
    return {tuple(x + y for x, y in zip(e, pexp)): c * v for e, v in a.items()}

def cf_is_one(a, n: int) -> bool:
    return a == {(0,) * n: 1}

def cf_constant_term(a, n: int) -> int:
    """The pure-integer part (coefficient of p^0)."""
    return a.get((0,) * n, 0)

def cf_is_signed_monomial(a) -> bool:
    """True iff the coefficient is +-1 times a single p-monomial."""
    return len(a) == 1 and next(iter(a.values())) in (1, -1)

def cf_pow(a, k: int, n: int):
    out = cf_const(n, 1)
    for _ in range(k):
        out = cf_mul(out, a)
    return out


# ---------------------------------------------------------------------------
# Y-monomials


def ym_one(M: int) -> YMon:
    return (0,) * M

def ym_var(M: int, k: int, e: int = 1) -> YMon:
    """Y_k^e with 1-based clockwise index k."""
    t = [0] * M
    t[k - 1] = e
    return tuple(t)

def ym_mul(a: YMon, b: YMon) -> YMon:
    return tuple(x + y for x, y in zip(a, b))

def ym_divides(a: YMon, b: YMon) -> bool:
    """Does a divide b?"""
    return all(x <= y for x, y in zip(a, b))

def ym_div(a: YMon, b: YMon) -> YMon:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))

def ym_lcm(a: YMon, b: YMon) -> YMon:
    return tuple(max(x, y) for x, y in zip(a, b))

def ym_total_degree(a: YMon) -> int:
    return sum(a)


class YOrder:
    """Lex order on Y-monomials: the clockwise-largest variable decides first.

    ``rank`` optionally remaps variables to clockwise positions; the default
    identity matches the canonical labeling where Y_k already sits at
    clockwise position k.
    """

    __slots__ = ("M", "rank", "_slots")

    def __init__(self, M: int, rank=None):
        self.M = M
        self.rank = tuple(rank) if rank is not None else tuple(range(1, M + 1))
        if sorted(self.rank) != list(range(1, M + 1)):
            raise DimensionMismatchError("rank must be a permutation of 1..M")
        # variable slots listed from highest clockwise position down
        self._slots = tuple(
            i for _, i in sorted(((r, i) for i, r in enumerate(self.rank)), reverse=True)
        )

    def key(self, m: YMon):
        if self.rank == tuple(range(1, self.M + 1)):
            return m[::-1]
        return tuple(m[i] for i in self._slots)

    def compare(self, m1: YMon, m2: YMon) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)


def compare(m1: YMon, m2: YMon, order: YOrder) -> int:
    return order.compare(m1, m2)


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Element of Z[p1..pn][Y1..YM], stored as {y_monomial: Z[p]-coefficient}."""

    __slots__ = ("M", "n", "t")

    def __init__(self, M: int, n: int, terms=None):
        self.M = M
        self.n = n
        self.t = {}
        if terms:
            for m, cf in terms.items():
                if cf:
                    self.t[m] = dict(cf)

    # --- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, M, n):
        return cls(M, n)

    @classmethod
    def const(cls, M, n, c=1):
        p = cls(M, n)
        if c:
            p.t[ym_one(M)] = cf_const(n, c)
        return p

    @classmethod
    def term(cls, M, n, c: int, pexp, ymon):
        p = cls(M, n)
        if c:
            p.t[tuple(ymon)] = cf_mono(c, pexp)
        return p

    @classmethod
    def variable(cls, M, n, k: int, e: int = 1):
        return cls.term(M, n, 1, (0,) * n, ym_var(M, k, e))

    def copy(self):
        return Poly(self.M, self.n, self.t)

    # --- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.t

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.M == other.M
            and self.n == other.n
            and self.t == other.t
        )

    def __bool__(self):
        return bool(self.t)

    # --- arithmetic ---------------------------------------------------------

    def _assert_compatible(self, other):
        if self.M != other.M or self.n != other.n:
            raise DimensionMismatchError("mixed polynomial rings")

    def __add__(self, other):
        self._assert_compatible(other)
        out = Poly(self.M, self.n, self.t)
        for m, cf in other.t.items():
            s = cf_add(out.t.get(m, {}), cf)
            if s:
                out.t[m] = s
            else:
                out.t.pop(m, None)
        return out

    def __neg__(self):
        out = Poly(self.M, self.n)
        out.t = {m: cf_neg(cf) for m, cf in self.t.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            out = Poly(self.M, self.n)
            if other:
                out.t = {m: cf_scale(cf, other) for m, cf in self.t.items()}
            return out
        self._assert_compatible(other)
        out = Poly(self.M, self.n)
        for m1, c1 in self.t.items():
            for m2, c2 in other.t.items():
                m = ym_mul(m1, m2)
                s = cf_add(out.t.get(m, {}), cf_mul(c1, c2))
                if s:
                    out.t[m] = s
                else:
                    out.t.pop(m, None)
        return out

    __rmul__ = __mul__

    def mul_term(self, coef, ymon: YMon):
        """Multiply by coef * Y^ymon where coef is a Z[p] element."""
        out = Poly(self.M, self.n)
        for m, cf in self.t.items():
            prod = cf_mul(cf, coef)
            if prod:
                out.t[ym_mul(m, ymon)] = prod
        return out

    # --- leading data --------------------------------------------------------

    def lm(self, order: YOrder) -> YMon:
        if not self.t:
            raise ZeroPolynomialError("zero polynomial has no leading monomial")
        return max(self.t, key=order.key)

    def lc(self, order: YOrder):
        """Full leading coefficient: a Z[p] element."""
        return dict(self.t[self.lm(order)])

    def lt(self, order: YOrder):
        m = self.lm(order)
        return m, dict(self.t[m])

    def is_monic(self, order: YOrder) -> bool:
        return bool(self.t) and cf_is_one(self.t[self.lm(order)], self.n)

    # --- structure ------------------------------------------------------------

    def terms(self, order: YOrder):
        """Canonical term stream: (coeff, p_exp, y_exp), leading term first."""
        for m in sorted(self.t, key=order.key, reverse=True):
            cf = self.t[m]
            for pe in sorted(cf, reverse=True):
                yield cf[pe], pe, m

    def constant_term(self) -> int:
        """Coefficient of p^0 * Y^0."""
        return cf_constant_term(self.t.get(ym_one(self.M), {}), self.n)

    def has_unit_constant(self) -> bool:
        return self.constant_term() != 0

    def coefficients_are_signed_monomials(self) -> bool:
        return all(cf_is_signed_monomial(cf) for cf in self.t.values())

    def max_y_degree(self) -> int:
        return max((ym_total_degree(m) for m in self.t), default=0)

    # --- substitution -----------------------------------------------------------

    def subs_p(self, images: dict):
        """Substitute p_i -> images[i] (1-based); an image is an int or a Z[p]
        element over the same p-variables.  Unlisted variables stay symbolic."""
        imgs = {}
        for i, val in images.items():
            imgs[i - 1] = cf_const(self.n, val) if isinstance(val, int) else dict(val)
        out = Poly(self.M, self.n)
        for m, cf in self.t.items():
            acc_m = {}
            for pe, c in cf.items():
                reduced = tuple(0 if i in imgs else e for i, e in enumerate(pe))
                factor = cf_mono(c, reduced)
                for i, e in enumerate(pe):
                    if i in imgs and e:
                        factor = cf_mul(factor, cf_pow(imgs[i], e, self.n))
                acc_m = cf_add(acc_m, factor)
            if acc_m:
                s = cf_add(out.t.get(m, {}), acc_m)
                if s:
                    out.t[m] = s
                else:
                    out.t.pop(m, None)
        return out

    def evaluate(self, p_values, y_values) -> int:
        """Exact integer evaluation at p = p_values, Y = y_values."""
        total = 0
        for m, cf in self.t.items():
            ym = 1
            for e, v in zip(m, y_values):
                if e:
                    ym *= v**e
            for pe, c in cf.items():
                pm = c
                for e, v in zip(pe, p_values):
                    if e:
                        pm *= v**e
                total += pm * ym
        return total

    def __repr__(self):
        return f"Poly({poly_to_str(self, YOrder(self.M))})"


# ---------------------------------------------------------------------------
# division


class BinomialWatch:
    """Collects division leads whose coefficient is not a signed p-monomial.

    The construction only ever produces such coefficients for this class of
    input; a sighting is a reportable finding, not an error.
    """

    __slots__ = ("events",)

    def __init__(self):
        self.events = []

    def note_coefficient(self, cf) -> None:
        self.events.append(dict(cf))

    def findings(self):
        return [
            f"division lead coefficient {e} is not a signed p-monomial"
            for e in self.events[:10]
        ]


def divide(g: Poly, G, order: YOrder, watch=None):
    """Divide g by the ordered family G (all monic).

    Returns (quotients, remainder) with g = sum(q_i * G_i) + r.  At each step
    the divisor with the MAXIMAL index among those whose leading monomial
    divides lm(g) is used; if none divides, the full leading term (with its
    whole Z[p] coefficient) moves to the remainder.  No term of r is divisible
    by any lm(G_i).
    """
    lms = []
    for gi in G:
        if not gi.is_monic(order):
            raise NonMonicDivisorError("divisors must have leading coefficient 1")
        lms.append(gi.lm(order))
    quots = [Poly.zero(g.M, g.n) for _ in G]
    rem = Poly.zero(g.M, g.n)
    work = g.copy()
    while work.t:
        m = work.lm(order)
        cf = work.t[m]
        if watch is not None and not cf_is_signed_monomial(cf):
            watch.note_coefficient(cf)
        idx = None
        for i in range(len(G) - 1, -1, -1):
            if ym_divides(lms[i], m):
                idx = i
                break
        if idx is None:
            rem.t[m] = cf
            del work.t[m]
        else:
            shift = ym_div(m, lms[idx])
            quots[idx].t[shift] = cf_add(quots[idx].t.get(shift, {}), cf)
            if not quots[idx].t[shift]:
                del quots[idx].t[shift]
            sub = G[idx].mul_term(cf, shift)
            work = work - sub
            # the cancelled leading term never reappears
            assert m not in work.t or order.key(work.lm(order)) < order.key(m)
    if __debug__ and g.t:
        # lm(g) = max(max_i lm(q_i) lm(G_i), lm(r))
        cands = [rem.lm(order)] if rem.t else []
        for q, l in zip(quots, lms):
            if q.t:
                cands.append(ym_mul(q.lm(order), l))
        assert max(cands, key=order.key) == g.lm(order)
    return quots, rem


# ---------------------------------------------------------------------------
# grading and the presentation map


class _Inhomogeneous:
    __slots__ = ()

    def __repr__(self):
        return "INHOMOGENEOUS"


INHOMOGENEOUS = _Inhomogeneous()


def zz_degree(ymon: YMon, H):
    """Z^2-degree of a Y-monomial: sum of exponent * basis vector."""
    x = y = 0
    for e, v in zip(ymon, H):
        if e:
            x += e * v[0]
            y += e * v[1]
    return (x, y)


def poly_zz_degree(g: Poly, H):
    """Common Z^2-degree of all terms, or the INHOMOGENEOUS marker."""
    deg = None
    for m in g.t:
        d = zz_degree(m, H)
        if deg is None:
            deg = d
        elif deg != d:
            return INHOMOGENEOUS
    return deg if deg is not None else (0, 0)


def phi0_images(H, fan, fam):
    """Per clockwise index: (lattice vector, p-exponent vector f(v))."""
    from .fan import eval_all

    return [(v, eval_all(fan, fam, v)) for v in H]


def phi0_eval(g: Poly, H, fan, fam):
    """Image of g under Y_v -> p^{f(v)} x^v, as an exact Laurent element:
    a dict {((x1, x2), p_exponent): integer}.  Empty dict = zero."""
    images = phi0_images(H, fan, fam)
    out = {}
    for m, cf in g.t.items():
        xv = [0, 0]
        pshift = [0] * g.n
        for e, (v, f) in zip(m, images):
            if e:
                xv[0] += e * v[0]
                xv[1] += e * v[1]
                for i, fi in enumerate(f):
                    pshift[i] += e * fi
        for pe, c in cf.items():
            key = ((xv[0], xv[1]), tuple(a + b for a, b in zip(pe, pshift)))
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


# ---------------------------------------------------------------------------
# text round trip


def p_names(n: int):
    return ["p"] if n == 1 else [f"p{i}" for i in range(1, n + 1)]


def poly_to_str(g: Poly, order: YOrder) -> str:
    if g.is_zero:
        return "0"
    names = p_names(g.n)
    parts = []
    for c, pe, m in g.terms(order):
        factors = []
        for i, e in enumerate(pe):
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append(f"{names[i]}^{e}")
        for k, e in enumerate(m):
            if e == 1:
                factors.append(f"Y{k + 1}")
            elif e > 1:
                factors.append(f"Y{k + 1}^{e}")
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_TOKEN = re.compile(r"\s*([+-]|\d+|p\d*|Y\d+|\^|\*)")


def poly_from_str(s: str, M: int, n: int) -> Poly:
    """Parse the round-trip format: terms of integer/p/Y factors joined by '*'."""
    pos = 0
    tokens = []
    while pos < len(s):
        mt = _TOKEN.match(s, pos)
        if not mt:
            if s[pos:].strip():
                raise ValueError(f"cannot tokenize {s[pos:]!r}")
            break
        tokens.append(mt.group(1))
        pos = mt.end()
    out = Poly.zero(M, n)
    i = 0
    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            if sign != 1:
                raise ValueError("dangling sign")
            break
        coeff = sign
        pexp = [0] * n
        ymon = [0] * M
        expect_factor = True
        while i < len(tokens) and (expect_factor or tokens[i] == "*"):
            if tokens[i] == "*":
                i += 1
                expect_factor = True
                continue
            tok = tokens[i]
            i += 1
            exp = 1
            if i < len(tokens) and tokens[i] == "^":
                exp = int(tokens[i + 1])
                i += 2
            if tok.isdigit():
                coeff *= int(tok) ** exp
            elif tok.startswith("Y"):
                ymon[int(tok[1:]) - 1] += exp
            else:  # p or pK
                idx = 1 if tok == "p" else int(tok[1:])
                if idx > n:
                    raise ValueError(f"p-index {idx} out of range for n={n}")
                pexp[idx - 1] += exp
            expect_factor = False
        out = out + Poly.term(M, n, coeff, tuple(pexp), tuple(ymon))
    return out
