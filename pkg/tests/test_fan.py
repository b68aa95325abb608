import random

import pytest

from fanalg.errors import (
    InputError,
    NonPositiveInputError,
    OutsideSupportError,
    UnsupportedSupportError,
)
from fanalg.fan import (
    Fan,
    FanLinearFamily,
    coarsen,
    eval_all,
    eval_function,
    fan_from_max_forms,
    gamma,
    intersection_fan,
    is_strict,
    locate_cone,
    validate_family,
)


def b32():
    """max(3r, 2s) on the first quadrant, wall ray (2,3)."""
    return intersection_fan((3,), (2,))


def torito():
    """Two functions, walls (1,3) and (3,1)."""
    return intersection_fan((1, 3), (3, 1))


def test_intersection_fan_b32():
    fan, fam = b32()
    assert fan.rays == ((0, 1), (2, 3), (1, 0))
    assert fam.forms == (((0, 2), (3, 0)),)
    assert validate_family(fan, fam).ok


def test_intersection_fan_diagonal():
    fan, fam = intersection_fan((1,), (1,))
    assert fan.rays == ((0, 1), (1, 1), (1, 0))
    assert eval_function(fan, fam, 0, (2, 5)) == 5
    assert eval_function(fan, fam, 0, (5, 2)) == 5


def test_intersection_fan_torito_walls():
    fan, fam = intersection_fan((3, 1), (1, 3))
    assert fan.rays == ((0, 1), (1, 3), (3, 1), (1, 0))
    fan2, fam2 = torito()
    assert fan2.rays == fan.rays
    # swapped data swaps the two functions
    assert fam2.forms == (fam.forms[1], fam.forms[0])
    assert validate_family(fan2, fam2).ok


def test_intersection_fan_rejects_nonpositive():
    with pytest.raises(NonPositiveInputError):
        intersection_fan((1, 0), (1, 2))


def test_fan_validation_errors():
    with pytest.raises(InputError):
        Fan(((0, 1), (0, 2)))  # non-primitive
    with pytest.raises(InputError):
        Fan(((1, 0), (0, 1)))  # not clockwise
    with pytest.raises(UnsupportedSupportError):
        Fan(((0, 1), (1, 0), (0, -1), (-1, 0)))  # wraps beyond a half-plane


def test_fan_kinds():
    assert Fan(((1, 2),), "half-line").kind == "half-line"
    assert Fan(((1, 0), (-1, 0)), "line").kind == "line"
    assert Fan(((-1, 0), (0, 1), (1, 0)), "half-plane").kind == "half-plane"
    with pytest.raises(InputError):
        Fan(((0, 1), (1, 0)), "half-plane")


def test_eval_b32_values():
    fan, fam = b32()
    assert eval_function(fan, fam, 0, (1, 1)) == 3
    assert eval_function(fan, fam, 0, (2, 3)) == 6  # on the wall, both forms agree
    assert eval_all(fan, fam, (1, 2)) == (4,)
    with pytest.raises(OutsideSupportError):
        eval_function(fan, fam, 0, (-1, 2))


def test_locate_cone_half_plane():
    fan = Fan(((-1, 0), (0, 1), (1, 0)), "half-plane")
    assert locate_cone(fan, (-2, 1)) == 0
    assert locate_cone(fan, (2, 1)) == 1
    assert locate_cone(fan, (-3, 0)) == 0
    with pytest.raises(OutsideSupportError):
        locate_cone(fan, (0, -1))


def test_eval_is_linear_within_cones():
    fan, fam = torito()
    rng = random.Random(5)
    for _ in range(200):
        i = rng.randrange(fan.ncones)
        r1, r2 = fan.cone(i)
        a, b, c, d = (rng.randint(0, 5) for _ in range(4))
        u = (a * r1[0] + b * r2[0], a * r1[1] + b * r2[1])
        v = (c * r1[0] + d * r2[0], c * r1[1] + d * r2[1])
        s = (u[0] + v[0], u[1] + v[1])
        for k in range(fam.n):
            assert eval_function(fan, fam, k, s) == eval_function(fan, fam, k, u) + eval_function(
                fan, fam, k, v
            )


def test_gamma_values_and_symmetry():
    fan, fam = b32()
    assert gamma(fan, fam, (0, 1), (1, 0)) == (2,)
    # same-cone pairs have vanishing gamma
    assert gamma(fan, fam, (1, 2), (0, 1)) == (0,)
    fan2, fam2 = torito()
    assert gamma(fan2, fam2, (0, 1), (1, 0)) == (1, 1)
    rng = random.Random(6)
    for _ in range(100):
        u = (rng.randint(0, 8), rng.randint(0, 8))
        v = (rng.randint(0, 8), rng.randint(0, 8))
        g1 = gamma(fan2, fam2, u, v)
        assert g1 == gamma(fan2, fam2, v, u)
        assert all(x >= 0 for x in g1)


def test_strictness_and_distinguished_indices():
    fan, fam = b32()
    flags, ks = is_strict(fan, fam)
    assert flags == [True] and ks == [1]
    fan2, fam2 = torito()
    flags2, ks2 = is_strict(fan2, fam2)
    assert flags2 == [True, True]
    zero = FanLinearFamily(((((0, 0)), (0, 0)),))
    flags3, ks3 = is_strict(fan, zero)
    assert flags3 == [False] and ks3 == [None]


def test_validate_family_swapped_forms_fail_certificate():
    fan, fam = b32()
    swapped = FanLinearFamily(((fam.forms[0][1], fam.forms[0][0]),))
    rep = validate_family(fan, swapped)
    assert not rep.get("convexity-certificate").passed


def test_validate_family_zero_function_passes():
    fan, _ = b32()
    rep = validate_family(fan, FanLinearFamily((((0, 0), (0, 0)),)))
    assert rep.ok


def test_coarsen_removes_redundant_wall():
    fan, fam = b32()
    # split the first cone of b32 with an artificial wall at (1,2)
    split = Fan(((0, 1), (1, 2), (2, 3), (1, 0)))
    forms = FanLinearFamily(((fam.forms[0][0], fam.forms[0][0], fam.forms[0][1]),))
    cfan, cfam = coarsen(split, forms)
    assert cfan.rays == fan.rays
    assert cfam.forms == fam.forms
    # idempotent
    c2fan, c2fam = coarsen(cfan, cfam)
    assert c2fan.rays == cfan.rays and c2fam.forms == cfam.forms
    # function values unchanged at sampled points
    rng = random.Random(7)
    for _ in range(50):
        v = (rng.randint(0, 9), rng.randint(0, 9))
        assert eval_all(split, forms, v) == eval_all(cfan, cfam, v)


def test_fan_from_max_forms_three_pieces():
    # max(2x, x+y, 2y) bends at (1,1) only ... all three forms agree there;
    # switching rays of the pairs are (1,1) twice, plus none inside for (2x,2y)
    fan, fam = fan_from_max_forms(((0, 1), (1, 0)), [[(2, 0), (1, 1), (0, 2)]])
    assert fan.rays == ((0, 1), (1, 1), (1, 0))
    assert eval_function(fan, fam, 0, (3, 1)) == 6
    assert eval_function(fan, fam, 0, (1, 3)) == 6
    assert eval_function(fan, fam, 0, (2, 2)) == 4
    assert validate_family(fan, fam).ok
