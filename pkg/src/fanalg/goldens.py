"""Embedded expected data for the named worked examples.

Everything here was derived independently (Hilbert bases by the enumeration
oracle, relations from the substitution map, syzygies by running the division
algorithm by hand) and is used to pin the engine's exact output, signs
included.  Polynomials are stored in the round-trip text format.
"""

HB23 = {
    "cones": [[[0, 1], [2, 3]], [[1, 0], [2, 3]]],
    "bases": [
        [(0, 1), (1, 2), (2, 3)],
        [(2, 3), (1, 1), (1, 0)],
    ],
}

PHI0 = {
    "intersection": {"a": [3], "b": [2]},
    "H": [(0, 1), (1, 2), (2, 3), (1, 1), (1, 0)],
    "M": 5,
    "p_exponents": [(2,), (4,), (6,), (3,), (3,)],
    "relations": {
        (1, 3): "Y1*Y3 - Y2^2",
        (1, 4): "Y1*Y4 - p*Y2",
        (1, 5): "Y1*Y5 - p^2*Y4",
        (2, 4): "Y2*Y4 - p*Y3",
        (2, 5): "Y2*Y5 - p*Y4^2",
        (3, 5): "Y3*Y5 - Y4^3",
    },
}

PHII1 = {
    "count": 8,
    "syzygies": {
        (1, 3, 4): {(1, 3): "Y4", (1, 4): "-Y3", (2, 4): "Y2"},
        (1, 3, 5): {(1, 3): "Y5", (1, 5): "-Y3", (2, 4): "p*Y4", (2, 5): "Y2"},
        (1, 4, 2): {(1, 4): "Y2", (2, 4): "-Y1", (1, 3): "-p"},
        (1, 4, 5): {(1, 4): "Y5", (1, 5): "-Y4", (2, 5): "p"},
        (1, 5, 2): {(1, 5): "Y2", (2, 5): "-Y1", (1, 4): "-p*Y4"},
        (1, 5, 3): {(1, 5): "Y3", (3, 5): "-Y1", (2, 4): "-p*Y4", (1, 4): "-Y4^2"},
        (2, 4, 5): {(2, 4): "Y5", (2, 5): "-Y4", (3, 5): "p"},
        (2, 5, 3): {(2, 5): "Y3", (3, 5): "-Y2", (2, 4): "-Y4^2"},
    },
}

# Matrix rows follow the lex order of the source tuples, columns the lex order
# of the target tuples.  Three entries differ in sign from the journal's
# printed matrices (phi2 row 1 column 4; phi3 row 1 columns 4 and 8): the
# printed values contradict the displayed syzygy lists, the worked division
# in the same example, and the kernel condition itself, so the self-consistent
# signs are pinned here.
PHII2 = {
    "S2": [(1, 3, 4, 5), (1, 4, 2, 5), (1, 5, 2, 3)],
    "phi2_rows": [(1, 3, 4), (1, 3, 5), (1, 4, 2), (1, 4, 5), (1, 5, 2), (1, 5, 3), (2, 4, 5), (2, 5, 3)],
    "phi2_cols": [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)],
    "phi2": [
        ["Y4", "-Y3", "0", "Y2", "0", "0"],
        ["Y5", "0", "-Y3", "p*Y4", "Y2", "0"],
        ["-p", "Y2", "0", "-Y1", "0", "0"],
        ["0", "Y5", "-Y4", "0", "p", "0"],
        ["0", "-p*Y4", "Y2", "0", "-Y1", "0"],
        ["0", "-Y4^2", "Y3", "-p*Y4", "0", "-Y1"],
        ["0", "0", "0", "Y5", "-Y4", "p"],
        ["0", "0", "0", "-Y4^2", "Y3", "-Y2"],
    ],
    "phi3": [
        ["Y5", "-Y4", "0", "Y3", "0", "0", "-Y2", "-p"],
        ["0", "p", "Y5", "-Y2", "-Y4", "p", "Y1", "0"],
        ["-p*Y4", "0", "-Y4^2", "0", "Y3", "-Y2", "0", "Y1"],
    ],
    "ranks": [1, 6, 8, 3],
    "specialized_ranks": [1, 5, 3],
}

# The two-function example with walls (1,3) and (3,1).  The journal's variable
# assignment is internally inconsistent (its displayed substitution map and
# its relation list swap the roles of the two coefficient variables); the
# relation list below, with f1 = max(r, 3s) and f2 = max(3r, s), is the
# self-consistent reading and also the one under which the quoted p2 = 1
# redundancy identity holds verbatim.
TORITO = {
    "intersection": {"a": [1, 3], "b": [3, 1]},
    "H": [(0, 1), (1, 3), (1, 2), (1, 1), (2, 1), (3, 1), (1, 0)],
    "M": 7,
    "relations": {
        (1, 3): "Y1*Y3 - p2*Y2",
        (1, 4): "Y1*Y4 - p2*Y3",
        (1, 5): "Y1*Y5 - p2*Y4^2",
        (1, 6): "Y1*Y6 - p2*Y4*Y5",
        (1, 7): "Y1*Y7 - p1*p2*Y4",
        (2, 4): "Y2*Y4 - Y3^2",
        (2, 5): "Y2*Y5 - Y3*Y4^2",
        (2, 6): "Y2*Y6 - Y4^4",
        (2, 7): "Y2*Y7 - p1*Y3*Y4",
        (3, 5): "Y3*Y5 - Y4^3",
        (3, 6): "Y3*Y6 - Y4^2*Y5",
        (3, 7): "Y3*Y7 - p1*Y4^2",
        (4, 6): "Y4*Y6 - Y5^2",
        (4, 7): "Y4*Y7 - p1*Y5",
        (5, 7): "Y5*Y7 - p1*Y6",
    },
    "stage2_count": 40,
    "stage3_count": 45,
    "betti": [1, 15, 40, 45, 24, 5],
    # with p2 = 1 the relation Y3*Y5 - Y4^3 is a combination of two others:
    "p2_identity": {
        "lhs": "Y3*Y5 - Y4^3",
        "combination": [["Y4", "Y1*Y5 - Y4^2"], ["-Y5", "Y1*Y4 - Y3"]],
    },
    # with p1 = p2 + 1 a four-term combination exhibits the same redundancy
    "p1_identity": {
        "lhs": "Y3*Y5 - Y4^3",
        "combination": [
            ["Y4", "Y3*Y7 - p1*Y4^2"],
            ["-Y3", "Y4*Y7 - p1*Y5"],
            ["-Y4", "Y1*Y5 - p2*Y4^2"],
            ["Y5", "Y1*Y4 - p2*Y3"],
        ],
    },
}

GORENSTEIN = {"entries": [1, 2, 3], "max_n": 2}

CONJECTURE = {
    2: {"M": 5, "p_exponent": 1, "generator": "Y1*Y4 - p*Y2^2"},
    3: {"M": 6, "p_exponent": 2, "generator": "Y1*Y5 - p^2*Y2^2"},
}

EXAMPLE_NAMES = ("hb23", "phi0", "phii1", "phii2", "torito", "gorenstein", "conjecture")
