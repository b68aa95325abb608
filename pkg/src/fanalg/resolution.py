"""Assembly of the graded chain complex, verification, Betti data, export.

The complex is  0 -> R^{r_L} -> ... -> R^{r_1} -> R -> B -> 0  with
r_s = s * C(M-1, s+1); map s+1 is stored row-major and sparsely, rows indexed
by the stage-(s+1) tuples, columns by the stage-s tuples.  Exactness is
certified two ways: symbolically (compositions vanish identically) and
numerically (fraction-free ranks at random specializations satisfy the rank
conditions; this complements the symbolic checks, it is not a proof of
exactness).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from math import comb

from .errors import UnsupportedFormatError
from .fan import Fan, FanLinearFamily
from .polyring import (
    BinomialWatch,
    Poly,
    p_names,
    poly_to_str,
    poly_zz_degree,
    ym_mul,
)
from .presentation import Presentation, presentation_ideal
from .report import ValidationReport
from .syzygy import StageFamily, build_stage2, build_stage_next, tuple_degree


class SparseMatrix:
    """Row-major sparse matrix of polynomials; absent entries are zero."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [dict() for _ in range(nrows)]

    def set(self, r: int, c: int, value: Poly) -> None:
        if value.is_zero:
            self.rows[r].pop(c, None)
        else:
            self.rows[r][c] = value

    def get(self, r: int, c: int) -> Poly | None:
        return self.rows[r].get(c)

    def entries(self):
        for r, row in enumerate(self.rows):
            for c, p in row.items():
                yield r, c, p

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self.rows)


@dataclass
class ChainComplex:
    pres: Presentation
    stages: list  # StageFamily for stages 2..L (may be empty)
    bases: list  # bases[s]: ordered tuples at position s; bases[0] = [()]
    degrees: list  # degrees[s][t]: Z^2-degree of bases[s][t]
    ranks: list  # free-module ranks, ranks[0] = 1
    maps: list  # maps[s] = SparseMatrix of map s+1 (rows: bases[s+1], cols: bases[s])
    findings: list = None  # construction-time observations (watch events)

    @property
    def length(self) -> int:
        return len(self.maps)

    @property
    def M(self) -> int:
        return self.pres.M


def _matrix_from_stage(stage: StageFamily, col_tuples) -> SparseMatrix:
    col_idx = {T: i for i, T in enumerate(col_tuples)}
    mat = SparseMatrix(len(stage.tuples), len(col_tuples))
    for r, T in enumerate(stage.tuples):
        row = mat.rows[r]
        for P, q in stage.elems[T].c.items():
            row[col_idx[P]] = q
    return mat


def resolve(fan: Fan, fam: FanLinearFamily, pres: Presentation | None = None) -> ChainComplex:
    """Presentation plus the full syzygy tower, packaged as matrices."""
    if pres is None:
        pres = presentation_ideal(fan, fam)
    bases = [[()]]
    degrees = [[(0, 0)]]
    ranks = [1]
    maps = []
    if pres.relations:
        pairs = list(pres.index_pairs)
        bases.append(pairs)
        degrees.append([tuple_degree(T, pres.H) for T in pairs])
        ranks.append(len(pairs))
        phi1 = SparseMatrix(len(pairs), 1)
        for r, rel in enumerate(pres.relations):
            phi1.set(r, 0, rel.poly)
        maps.append(phi1)
    stages = []
    watch = BinomialWatch() if pres.specialized_p is None else None
    if pres.relations and pres.kind not in ("half-line", "line"):
        stage = build_stage2(pres, watch=watch)
        while len(stage) > 0:
            stages.append(stage)
            bases.append(list(stage.tuples))
            degrees.append([tuple_degree(T, pres.H) for T in stage.tuples])
            ranks.append(len(stage))
            maps.append(_matrix_from_stage(stage, bases[-2]))
            stage = build_stage_next(stage, watch=watch)
    findings = watch.findings() if watch is not None else []
    return ChainComplex(pres, stages, bases, degrees, ranks, maps, findings)


def _addmul_into(acc: dict, a: Poly, b: Poly) -> None:
    """acc += a * b at the raw term-dict level."""
    for m1, c1 in a.t.items():
        for m2, c2 in b.t.items():
            m = ym_mul(m1, m2)
            bucket = acc.get(m)
            if bucket is None:
                bucket = acc[m] = {}
            for e1, k1 in c1.items():
                for e2, k2 in c2.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    s = bucket.get(e, 0) + k1 * k2
                    if s:
                        bucket[e] = s
                    else:
                        del bucket[e]
            if not bucket:
                del acc[m]


def verify_complex(c: ChainComplex) -> ValidationReport:
    """Symbolic checks on the packaged matrices: compositions vanish, entries
    are graded, entries have no constant term (minimality surrogate), and the
    ranks follow the count formula."""
    rep = ValidationReport()
    pres = c.pres
    for f in c.findings or []:
        rep.note(f)

    kernel_ok = all(pres.phi0(r.poly) == {} for r in pres.relations)
    rep.add("phi0-compose-zero", kernel_ok, "every relation maps to zero")

    comp_ok = True
    for s in range(1, len(c.maps)):
        hi, lo = c.maps[s], c.maps[s - 1]
        for r in range(hi.nrows):
            acc: dict = {}
            for t, p in hi.rows[r].items():
                for u, q in lo.rows[t].items():
                    _addmul_into(acc, p, q)
            if acc:
                comp_ok = False
    rep.add("compositions-zero", comp_ok, "consecutive maps compose to zero symbolically")

    graded_ok = True
    for s, mat in enumerate(c.maps):
        for r, col, entry in mat.entries():
            want = (
                c.degrees[s + 1][r][0] - c.degrees[s][col][0],
                c.degrees[s + 1][r][1] - c.degrees[s][col][1],
            )
            if poly_zz_degree(entry, pres.H) != want:
                graded_ok = False
    rep.add("entries-graded", graded_ok, "each entry has degree deg(row) - deg(column)")

    min_ok = True
    offenders = []
    for s, mat in enumerate(c.maps):
        for r, col, entry in mat.entries():
            if entry.constant_term() != 0:
                min_ok = False
                offenders.append((s + 1, r, col))
    rep.add(
        "entries-in-graded-maximal-ideal",
        min_ok,
        "no unit constant entries" if min_ok else f"unit entries in maps {offenders[:5]}",
    )

    if pres.kind in ("cone", "half-plane"):
        M = pres.M
        expect = [1] + [s * comb(M - 1, s + 1) for s in range(1, M - 1)]
        rep.add(
            "rank-formula",
            c.ranks == expect and c.length == max(M - 2, 0),
            f"ranks {c.ranks}, length {c.length} (expected {expect}, {max(M - 2, 0)})",
        )
    return rep


def int_matrix_rank(rows) -> int:
    """Exact rank by fraction-free (Bareiss) elimination over the integers."""
    A = [list(r) for r in rows]
    m = len(A)
    ncols = len(A[0]) if m else 0
    rank = 0
    prev = 1
    r = 0
    for ccol in range(ncols):
        piv = next((i for i in range(r, m) if A[i][ccol]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, m):
            for j in range(ccol + 1, ncols):
                A[i][j] = (A[r][ccol] * A[i][j] - A[i][ccol] * A[r][j]) // prev
            A[i][ccol] = 0
        prev = A[r][ccol]
        rank += 1
        r += 1
        if r == m:
            break
    return rank


@dataclass
class SpecializationPoint:
    """Reproducible random integer values for the p- and Y-variables."""

    p_values: tuple
    y_values: tuple
    seed: int

    @classmethod
    def sample(cls, n: int, M: int, seed: int, bound: int = 10**4):
        rng = random.Random(seed)

        def nz():
            v = 0
            while v == 0:
                v = rng.randint(-bound, bound)
            return v

        return cls(tuple(nz() for _ in range(n)), tuple(nz() for _ in range(M)), seed)


def specialized_int_matrix(mat: SparseMatrix, pt: SpecializationPoint):
    rows = [[0] * mat.ncols for _ in range(mat.nrows)]
    for r, c, p in mat.entries():
        rows[r][c] = p.evaluate(pt.p_values, pt.y_values)
    return rows


def verify_ranks(
    c: ChainComplex, trials: int = 5, seed: int = 0, bound: int = 10**4
) -> ValidationReport:
    """Probabilistic exactness certificate: specialize all variables to random
    nonzero integers and check the rank conditions of an exact complex.  This
    certifies ranks at sample points only; the symbolic composition checks in
    verify_complex are the structural half."""
    rep = ValidationReport()
    pres = c.pres
    observed = [0] * len(c.maps)
    all_ok = True
    per_trial = []
    for t in range(trials):
        pt = SpecializationPoint.sample(pres.n, pres.M, seed + t, bound)
        rks = [int_matrix_rank(specialized_int_matrix(mat, pt)) for mat in c.maps]
        per_trial.append(rks)
        observed = [max(a, b) for a, b in zip(observed, rks)]
        ok = True
        if c.maps:
            ok &= rks[0] == 1
            for s in range(1, c.length):
                ok &= rks[s - 1] + rks[s] == c.ranks[s]
            ok &= rks[-1] == c.ranks[-1]
        all_ok &= ok
    rep.add(
        "rank-certificate",
        all_ok,
        f"max observed ranks {observed} over {trials} trials (per trial: {per_trial})",
    )
    return rep


@dataclass
class BettiTable:
    totals: list
    graded: list  # per position: sorted list of (degree, multiplicity)
    z_totals: list  # per position: {induced Z-degree: multiplicity}
    minimal: bool
    label: str = ""

    def to_dict(self):
        return {
            "totals": list(self.totals),
            "graded": [
                [{"degree": list(d), "count": k} for d, k in pos] for pos in self.graded
            ],
            "z_totals": [{str(d): k for d, k in sorted(pos.items())} for pos in self.z_totals],
            "minimal": self.minimal,
            "label": self.label,
        }


def betti(c: ChainComplex) -> BettiTable:
    """Total and graded Betti data read off the basis tuples.  If some matrix
    entry has a unit constant the resolution is not minimal and the table is
    labeled accordingly (its numbers are then ranks, not Betti numbers)."""
    minimal = all(
        p.constant_term() == 0 for mat in c.maps for _, _, p in mat.entries()
    )
    graded = []
    z_totals = []
    for s, basis in enumerate(c.bases):
        counts: dict = {}
        for d in c.degrees[s]:
            counts[d] = counts.get(d, 0) + 1
        graded.append(sorted(counts.items()))
        # induced Z-grading: a stage-s basis element sits in degree s+1 (the
        # total Y-degree of its lifted leading monomial); position 0 in 0
        z_totals.append({(s + 1 if s else 0): len(basis)})
    return BettiTable(
        list(c.ranks),
        graded,
        z_totals,
        minimal,
        "" if minimal else "non-minimal ranks",
    )


# ---------------------------------------------------------------------------
# export


def _poly_str(c: ChainComplex, g: Poly | None) -> str:
    return "0" if g is None else poly_to_str(g, c.pres.yorder)


def matrix_strings(c: ChainComplex, s: int):
    """Dense string rendering of map s+1 (rows: stage s+1, cols: stage s)."""
    mat = c.maps[s]
    return [
        [_poly_str(c, mat.get(r, col)) for col in range(mat.ncols)]
        for r in range(mat.nrows)
    ]


def complex_to_dict(c: ChainComplex) -> dict:
    pres = c.pres
    return {
        "schema": 1,
        "kind": pres.kind,
        "M": pres.M,
        "n": pres.n,
        "generators": {
            str(k): {"vector": list(v), "p_exponents": list(pe)}
            for k, (pe, v) in pres.generators.items()
        },
        "ranks": list(c.ranks),
        "bases": [
            [{"index": list(T), "degree": list(d)} for T, d in zip(c.bases[s], c.degrees[s])]
            for s in range(len(c.bases))
        ],
        "maps": [matrix_strings(c, s) for s in range(len(c.maps))],
        "betti": betti(c).to_dict(),
    }


def complex_to_text(c: ChainComplex) -> str:
    pres = c.pres
    out = []
    out.append(
        "generators: "
        + ", ".join(f"Y{k}={tuple(v)}" for k, (_, v) in sorted(pres.generators.items()))
    )
    out.append(f"ranks: {c.ranks}")
    for s in range(len(c.maps)):
        out.append(f"map {s + 1}: {c.ranks[s + 1]} x {c.ranks[s]}")
        if s == 0:
            for (i, j), rel in zip(pres.index_pairs, pres.relations):
                out.append(f"  S_{i},{j} = {_poly_str(c, rel.poly)}")
        else:
            out.append(
                "  rows: "
                + ", ".join("s_" + ",".join(map(str, T)) for T in c.bases[s + 1])
            )
            out.append(
                "  columns: "
                + ", ".join("e_" + ",".join(map(str, T)) for T in c.bases[s])
            )
            cells = matrix_strings(c, s)
            widths = [
                max(len(cells[r][j]) for r in range(len(cells))) for j in range(len(cells[0]))
            ]
            for row in cells:
                out.append("[ " + "  ".join(v.rjust(w) for v, w in zip(row, widths)) + " ]")
    return "\n".join(out)


def complex_to_m2(c: ChainComplex) -> str:
    """Macaulay2 script that rebuilds the ideal and asserts the Betti table."""
    pres = c.pres
    names = p_names(pres.n)
    ys = [f"Y{k}" for k in range(1, pres.M + 1)]
    rels = [_poly_str(c, r.poly) for r in pres.relations]
    b = betti(c)
    lines = [
        "-- generated by fanalg: external cross-check of the resolution ranks",
        f"R = QQ[{', '.join(names + ys)}];",
        f"I = ideal({', '.join(rels) if rels else '0_R'});",
        "C = res(R^1/I);",
        f"expected = {{{', '.join(str(x) for x in b.totals)}}};",
        "got = apply(#expected, i -> rank C_i);",
        "assert(got == expected);",
        f"assert(length C == {c.length});",
        'print "ok";',
    ]
    return "\n".join(lines) + "\n"


def export_complex(c: ChainComplex, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(complex_to_dict(c), indent=2, sort_keys=True)
    if fmt == "text":
        return complex_to_text(c)
    if fmt == "m2":
        return complex_to_m2(c)
    raise UnsupportedFormatError(f"unknown export format {fmt!r}")
