"""Fans with convex support in a half-plane and fan-linear function families.

A fan is stored as its clockwise-sorted primitive rays; the maximal cones are
the consecutive ray pairs.  A family of fan-linear functions is stored as one
integer linear form per function per cone; subadditivity is certified by the
dominance criterion (every other cone's form is bounded by the local form on
the local cone), which makes each function the pointwise max of its forms.

Degenerate supports (a single half-line, a full line) are accepted as flagged
fans and handled by the presentation layer; full-plane support is rejected:
the quadratic presentation and the resolution construction built here require
the support to stay inside a half-plane (cubic kernel generators appear
otherwise).
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass

from .errors import (
    DimensionMismatchError,
    InputError,
    NonPositiveInputError,
    OutsideSupportError,
    UnsupportedSupportError,
)
from .hilbert import hilbert_basis
from .lattice2d import Vec, det2, is_primitive, primitive
from .report import ValidationReport

Form = tuple[int, int]  # (c, d) meaning v -> c*v.x + d*v.y

KIND_CONE = "cone"
KIND_HALF_PLANE = "half-plane"
KIND_HALF_LINE = "half-line"
KIND_LINE = "line"


@dataclass(frozen=True)
class Fan:
    """Clockwise primitive rays; maximal cone i is cone(rays[i], rays[i+1])."""

    rays: tuple[Vec, ...]
    kind: str = KIND_CONE

    def __post_init__(self):
        rays = tuple(tuple(r) for r in self.rays)
        object.__setattr__(self, "rays", rays)
        if not rays:
            raise InputError("a fan needs at least one ray")
        for r in rays:
            if not is_primitive(r):
                raise InputError(f"ray {r} is not primitive and nonzero")
        inferred = self._infer_kind(rays)
        if self.kind != inferred:
            raise InputError(f"support kind {self.kind!r} does not match rays (expected {inferred!r})")

    @staticmethod
    def _infer_kind(rays) -> str:
        if len(rays) == 1:
            return KIND_HALF_LINE
        if len(rays) == 2 and rays[1] == (-rays[0][0], -rays[0][1]):
            return KIND_LINE
        for i in range(len(rays) - 1):
            if det2(rays[i + 1], rays[i]) <= 0:
                raise InputError(f"rays {rays[i]}, {rays[i+1]} are not strictly clockwise")
        first = rays[0]
        for i, r in enumerate(rays[1:], start=1):
            d = det2(r, first)
            if d < 0 or (d == 0 and r != (-first[0], -first[1])):
                raise UnsupportedSupportError(
                    "support leaves the closed half-plane of the first ray; full-plane "
                    "fans are not supported (their presentation ideals need generators "
                    "of degree 3 and the quadratic resolution pattern breaks down)"
                )
            if d == 0 and i != len(rays) - 1:
                raise UnsupportedSupportError(
                    "only the last ray may be opposite to the first (half-plane support)"
                )
        if rays[-1] == (-first[0], -first[1]):
            return KIND_HALF_PLANE
        return KIND_CONE

    @property
    def ncones(self) -> int:
        if self.kind in (KIND_HALF_LINE, KIND_LINE):
            return len(self.rays)  # 1D "cones": the rays themselves
        return len(self.rays) - 1

    @property
    def is_degenerate(self) -> bool:
        return self.kind in (KIND_HALF_LINE, KIND_LINE)

    def cone(self, i: int) -> tuple[Vec, Vec]:
        return self.rays[i], self.rays[i + 1]


@dataclass(frozen=True)
class FanLinearFamily:
    """forms[k][i] is the integer linear form of function k on cone i."""

    forms: tuple[tuple[Form, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "forms", tuple(tuple((int(c), int(d)) for (c, d) in row) for row in self.forms)
        )

    @property
    def n(self) -> int:
        return len(self.forms)


def _apply(form: Form, v: Vec) -> int:
    return form[0] * v[0] + form[1] * v[1]


def _check_dims(fan: Fan, fam: FanLinearFamily) -> None:
    for k, row in enumerate(fam.forms):
        if len(row) != fan.ncones:
            raise DimensionMismatchError(
                f"function {k + 1} has {len(row)} forms for {fan.ncones} cones"
            )


def locate_cone(fan: Fan, v: Vec) -> int:
    """Index of a maximal cone containing v (clockwise binary search)."""
    if fan.is_degenerate:
        for i, r in enumerate(fan.rays):
            if det2(r, v) == 0 and v[0] * r[0] + v[1] * r[1] >= 0:
                return i
        if v == (0, 0):
            return 0
        raise OutsideSupportError(f"{v} is outside the support")
    rays = fan.rays
    if v == (0, 0):
        return 0
    if (
        fan.kind == KIND_HALF_PLANE
        and det2(v, rays[0]) == 0
        and v[0] * rays[0][0] + v[1] * rays[0][1] < 0
    ):
        return fan.ncones - 1  # on the last ray, which is -rays[0]
    lo, hi = 0, len(rays) - 1
    if det2(rays[hi], v) < 0:
        raise OutsideSupportError(f"{v} is outside the support")
    # smallest index with det2(rays[i], v) >= 0 (v weakly clockwise of rays[i])
    while lo < hi:
        mid = (lo + hi) // 2
        if det2(rays[mid], v) >= 0:
            hi = mid
        else:
            lo = mid + 1
    if lo == 0:
        if det2(v, rays[0]) == 0 and v[0] * rays[0][0] + v[1] * rays[0][1] > 0:
            return 0
        raise OutsideSupportError(f"{v} is outside the support")
    return lo - 1


def eval_function(fan: Fan, fam: FanLinearFamily, k: int, v: Vec) -> int:
    """Value f_k(v); wall consistency makes the cone choice immaterial."""
    _check_dims(fan, fam)
    return _apply(fam.forms[k][locate_cone(fan, v)], v)


def eval_all(fan: Fan, fam: FanLinearFamily, v: Vec) -> tuple[int, ...]:
    """(f_1(v), ..., f_n(v)) as a p-exponent vector."""
    i = locate_cone(fan, v)
    return tuple(_apply(row[i], v) for row in fam.forms)


def gamma(fan: Fan, fam: FanLinearFamily, v: Vec, w: Vec) -> tuple[int, ...]:
    """Componentwise f_k(v) + f_k(w) - f_k(v + w); >= 0 by subadditivity."""
    fv = eval_all(fan, fam, v)
    fw = eval_all(fan, fam, w)
    s = (v[0] + w[0], v[1] + w[1])
    fs = eval_all(fan, fam, s) if s != (0, 0) else tuple([0] * fam.n)
    return tuple(a + b - c for a, b, c in zip(fv, fw, fs))


def _sample_support_points(fan: Fan, rng, count: int):
    pts = []
    for _ in range(count):
        if fan.is_degenerate:
            r = fan.rays[rng.randrange(len(fan.rays))]
            t = rng.randint(0, 6)
            pts.append((t * r[0], t * r[1]))
        else:
            i = rng.randrange(fan.ncones)
            a, b = rng.randint(0, 6), rng.randint(0, 6)
            r1, r2 = fan.cone(i)
            pts.append((a * r1[0] + b * r2[0], a * r1[1] + b * r2[1]))
    return pts


def validate_family(fan: Fan, fam: FanLinearFamily, rng=None, samples: int = 200) -> ValidationReport:
    """Wall consistency, nonnegativity, dominance certificate, spot checks."""
    _check_dims(fan, fam)
    rng = rng or random.Random(0)
    rep = ValidationReport()

    if fan.is_degenerate:
        rep.add(
            "nonnegativity",
            all(_apply(fam.forms[k][i], fan.rays[i]) >= 0
                for k in range(fam.n) for i in range(len(fan.rays))),
        )
        ok = True
        for u, v in zip(
            _sample_support_points(fan, rng, samples // 2),
            _sample_support_points(fan, rng, samples // 2),
        ):
            if any(x < 0 for x in gamma(fan, fam, u, v)):
                ok = False
        rep.add("subadditivity-spot-check", ok)
        return rep

    walls_ok = True
    for k in range(fam.n):
        for i in range(fan.ncones - 1):
            shared = fan.rays[i + 1]
            if _apply(fam.forms[k][i], shared) != _apply(fam.forms[k][i + 1], shared):
                walls_ok = False
    rep.add("wall-consistency", walls_ok, "adjacent forms agree on shared rays")

    nonneg = True
    for i in range(fan.ncones):
        r1, r2 = fan.cone(i)
        for v in hilbert_basis(r1, r2):
            if any(_apply(fam.forms[k][i], v) < 0 for k in range(fam.n)):
                nonneg = False
    rep.add("nonnegativity", nonneg, "f_k >= 0 on every cone Hilbert basis")

    # dominance: on cone i, form i beats every other cone's form (checked on
    # the two ray generators, enough by linearity); then f_k = max of its
    # forms pointwise, hence subadditive.
    dom = True
    for k in range(fam.n):
        for i in range(fan.ncones):
            r1, r2 = fan.cone(i)
            for j in range(fan.ncones):
                if j == i:
                    continue
                if _apply(fam.forms[k][j], r1) > _apply(fam.forms[k][i], r1) or _apply(
                    fam.forms[k][j], r2
                ) > _apply(fam.forms[k][i], r2):
                    dom = False
    rep.add("convexity-certificate", dom, "local form dominates all other forms on its cone")

    us = _sample_support_points(fan, rng, samples)
    vs = _sample_support_points(fan, rng, samples)
    spot = True
    for u, v in zip(us, vs):
        g = gamma(fan, fam, u, v)
        if any(x < 0 for x in g):
            spot = False
            rep.note(f"subadditivity fails at {u}, {v}: gamma={g}")
    rep.add("subadditivity-spot-check", spot)
    return rep


def is_strict(fan: Fan, fam: FanLinearFamily):
    """Per interior wall: does some function bend across it?  Returns the
    flags plus, per wall, the smallest bending index (1-based) or None."""
    _check_dims(fan, fam)
    flags: list[bool] = []
    ks: list[int | None] = []
    nwalls = fan.ncones - 1 if not fan.is_degenerate else 0
    for i in range(nwalls):
        k_found = None
        for k in range(fam.n):
            if fam.forms[k][i] != fam.forms[k][i + 1]:
                k_found = k + 1
                break
        flags.append(k_found is not None)
        ks.append(k_found)
    return flags, ks


def coarsen(fan: Fan, fam: FanLinearFamily):
    """Merge adjacent cones across every non-strict wall; the fan algebra is
    unchanged because the deleted walls carried no bend of any function."""
    _check_dims(fan, fam)
    if fan.is_degenerate:
        return fan, fam
    flags, _ = is_strict(fan, fam)
    keep_ray = [True] * len(fan.rays)
    keep_cone = [True] * fan.ncones
    for i, strict in enumerate(flags):
        if not strict:
            keep_ray[i + 1] = False
            keep_cone[i + 1] = False
    rays = tuple(r for r, k in zip(fan.rays, keep_ray) if k)
    forms = tuple(
        tuple(row[i] for i in range(fan.ncones) if keep_cone[i]) for row in fam.forms
    )
    return Fan(rays, Fan._infer_kind(rays)), FanLinearFamily(forms)


def _clockwise_sorted(rays):
    return sorted(rays, key=functools.cmp_to_key(lambda u, v: det2(u, v)))


def fan_from_max_forms(support: tuple[Vec, Vec], functions: list[list[Form]]):
    """Fan + family realizing f_k = max of the given linear forms on the
    support cone, by common refinement at all pairwise switching rays."""
    r_first, r_last = primitive(support[0]), primitive(support[1])
    if det2(r_last, r_first) <= 0:
        raise InputError("support rays must be strictly clockwise")
    walls: set[Vec] = set()
    for forms in functions:
        for a in range(len(forms)):
            for b in range(a + 1, len(forms)):
                (c1, d1), (c2, d2) = forms[a], forms[b]
                if (c1, d1) == (c2, d2):
                    continue
                # switching locus (c1-c2) x + (d1-d2) y = 0
                w = (-(d1 - d2), c1 - c2)
                for cand in (w, (-w[0], -w[1])):
                    if cand == (0, 0):
                        continue
                    if det2(cand, r_first) > 0 and det2(r_last, cand) > 0:
                        walls.add(primitive(cand))
    rays = [r_first] + _clockwise_sorted(walls) + [r_last]
    fan = Fan(tuple(rays), Fan._infer_kind(tuple(rays)))
    rows = []
    for forms in functions:
        row = []
        for i in range(fan.ncones):
            r1, r2 = fan.cone(i)
            interior = (r1[0] + r2[0], r1[1] + r2[1])
            best = max(forms, key=lambda f: _apply(f, interior))
            row.append(best)
        rows.append(tuple(row))
    return coarsen(fan, FanLinearFamily(tuple(rows)))


def intersection_fan(a, b):
    """Fan and family of the two-monomial-ideal intersection algebra: interior
    walls primitive((b_i, a_i)) in the first quadrant, f_i = max(a_i r, b_i s)."""
    a = tuple(int(x) for x in a)
    b = tuple(int(x) for x in b)
    if len(a) != len(b) or not a:
        raise DimensionMismatchError("exponent vectors a, b must have equal positive length")
    if any(x <= 0 for x in a + b):
        raise NonPositiveInputError("intersection data must be strictly positive")
    functions = [[(ai, 0), (0, bi)] for ai, bi in zip(a, b)]
    return fan_from_max_forms(((0, 1), (1, 0)), functions)
