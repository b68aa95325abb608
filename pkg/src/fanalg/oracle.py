"""Independent brute-force cross-checks.

These deliberately avoid the construction code paths they certify: the kernel
oracle enumerates monomial pairs and compares substitution images directly,
and the identity checker expands polynomial combinations term by term.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .errors import BudgetExceededError
from .fan import intersection_fan
from .polyring import Poly, divide, poly_to_str
from .presentation import Presentation, presentation_ideal
from .report import ValidationReport


def _monomials_up_to(M: int, bound: int):
    """All Y-monomials of total degree 1..bound as exponent tuples."""
    for d in range(1, bound + 1):
        for picks in combinations_with_replacement(range(M), d):
            m = [0] * M
            for i in picks:
                m[i] += 1
            yield tuple(m)


def kernel_oracle(pres: Presentation, degree_bound: int = 3):
    """Every binomial m1 - p^gamma * m2 (gamma >= 0) killed by the
    substitution map, for monomials of total degree up to the bound.

    Works directly from the generator images, not from the relations.
    """
    if degree_bound > 4:
        raise BudgetExceededError("degree bound above 4 explodes combinatorially")
    M, n = pres.M, pres.n
    images = {k: (v, pe) for k, (pe, v) in pres.generators.items()}
    groups: dict = {}
    for m in _monomials_up_to(M, degree_bound):
        xv = [0, 0]
        fsum = [0] * n
        for idx, e in enumerate(m, start=1):
            if e:
                v, pe = images[idx]
                xv[0] += e * v[0]
                xv[1] += e * v[1]
                for i, f in enumerate(pe):
                    fsum[i] += e * f
        groups.setdefault((xv[0], xv[1]), []).append((m, tuple(fsum)))
    out = []
    seen = set()
    for _, members in sorted(groups.items()):
        for (m1, f1), (m2, f2) in combinations(members, 2):
            delta = tuple(a - b for a, b in zip(f1, f2))
            if all(d >= 0 for d in delta):
                big, small, g = m1, m2, delta
            elif all(d <= 0 for d in delta):
                big, small, g = m2, m1, tuple(-d for d in delta)
            else:
                continue  # images differ by a mixed p-factor: not a binomial relation
            key = (big, small, g)
            if key in seen:
                continue
            seen.add(key)
            out.append(
                Poly.term(M, n, 1, (0,) * n, big) + Poly.term(M, n, -1, g, small)
            )
    return out


def verify_kernel_oracle(pres: Presentation, degree_bound: int = 3) -> ValidationReport:
    """All oracle binomials must reduce to zero against the relation set, and
    every relation must be rediscovered once the bound covers its monomials."""
    rep = ValidationReport()
    binomials = kernel_oracle(pres, degree_bound)
    G = pres.polys
    order = pres.yorder
    bad = 0
    for b in binomials:
        _, rem = divide(b, G, order)
        if not rem.is_zero:
            bad += 1
    rep.add(
        "oracle-binomials-reduce-to-zero",
        bad == 0,
        f"{len(binomials)} binomials at degree bound {degree_bound}, {bad} failures",
    )
    reachable = [
        r for r in pres.relations if r.poly.max_y_degree() <= degree_bound
    ]
    oracle_strs = {poly_to_str(b, order) for b in binomials}
    missed = [
        r.label() for r in reachable if poly_to_str(r.poly, order) not in oracle_strs
    ]
    rep.add(
        "relations-recovered",
        not missed,
        f"{len(reachable)} relations within the bound"
        + (f"; missing {missed}" if missed else ""),
    )
    return rep


def identity_check(lhs: Poly, combination, subs_p: dict | None = None) -> bool:
    """Does lhs equal sum(cofactor * element), optionally after a coefficient
    substitution p_i -> image applied to every input?"""
    total = Poly.zero(lhs.M, lhs.n)
    for cof, elem in combination:
        total = total + cof * elem
    if subs_p:
        total = total.subs_p(subs_p)
        lhs = lhs.subs_p(subs_p)
    return total == lhs


@dataclass
class ConjectureReport:
    n: int
    M: int
    generator: str
    generator_paper_style: str
    p_exponent: int
    present: bool
    in_kernel: bool

    def ok(self) -> bool:
        return self.present and self.in_kernel and self.p_exponent == self.n - 1


def conjecture_refutation(n: int) -> ConjectureReport:
    """The quadratic generator with p-exponent n-1 that the once-conjectured
    generating set cannot produce: built from the two-cone fan with interior
    wall (n+1, n) and f = max(n*r, (n+1)*s)."""
    if n < 2:
        raise ValueError("need n >= 2")
    fan, fam = intersection_fan((n,), (n + 1,))
    assert fan.rays == ((0, 1), (n + 1, n), (1, 0))
    pres = presentation_ideal(fan, fam)
    M = pres.M
    # clockwise labels: Y1 = (0,1), Y2 = (1,1), ..., Y_{M-1} = (2,1), Y_M = (1,0)
    i, j = 1, M - 1
    rel = pres.relation(i, j)
    tail_ok = rel.tail == {2: 2}
    pexp = rel.gamma[0]
    in_kernel = pres.phi0(rel.poly) == {}
    gen = poly_to_str(rel.poly, pres.yorder)
    # the same element with variables labeled x1..x_{n+4} in the order used by
    # the refuted conjecture (x1=(0,1), x3=(1,1), x4=(2,1), x_{n+4}=p)
    paper_style = f"x1*x4 - x3^2*x{n + 4}^{n - 1}"
    return ConjectureReport(
        n, M, gen, paper_style, pexp, tail_ok and M == n + 3, in_kernel
    )
