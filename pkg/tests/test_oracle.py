import pytest

from fanalg.errors import BudgetExceededError
from fanalg.fan import Fan, FanLinearFamily, intersection_fan
from fanalg.oracle import (
    conjecture_refutation,
    identity_check,
    kernel_oracle,
    verify_kernel_oracle,
)
from fanalg.polyring import divide, poly_from_str, poly_to_str
from fanalg.presentation import presentation_ideal


def b32_pres():
    fan, fam = intersection_fan((3,), (2,))
    return presentation_ideal(fan, fam)


def test_kernel_oracle_recovers_b32_relations():
    pres = b32_pres()
    rep = verify_kernel_oracle(pres, 3)
    assert rep.ok, str(rep)
    # at the default bound every relation monomial is reachable
    strs = {poly_to_str(b, pres.yorder) for b in kernel_oracle(pres, 3)}
    for r in pres.relations:
        assert poly_to_str(r.poly, pres.yorder) in strs


def test_kernel_oracle_bound_2_recovers_degree_2_relations():
    # Y3*Y5 - Y4^3 has a cubic monomial, so degree bound 2 reaches 5 of the 6
    pres = b32_pres()
    strs = {poly_to_str(b, pres.yorder) for b in kernel_oracle(pres, 2)}
    reachable = [r for r in pres.relations if r.poly.max_y_degree() <= 2]
    assert len(reachable) == 5
    for r in reachable:
        assert poly_to_str(r.poly, pres.yorder) in strs
    assert verify_kernel_oracle(pres, 2).ok


def test_kernel_oracle_all_binomials_in_ideal():
    pres = b32_pres()
    for b in kernel_oracle(pres, 3):
        assert pres.phi0(b) == {}
        _, rem = divide(b, pres.polys, pres.yorder)
        assert rem.is_zero


def test_kernel_oracle_torito_recovers_all_15_at_bound_4():
    fan, fam = intersection_fan((1, 3), (3, 1))
    pres = presentation_ideal(fan, fam)
    rep = verify_kernel_oracle(pres, 4)
    assert rep.ok, str(rep)
    assert "15 relations within the bound" in rep.get("relations-recovered").detail


def test_kernel_oracle_m2_is_empty():
    fan = Fan(((0, 1), (1, 0)))
    fam = FanLinearFamily((((2, 3),),))
    pres = presentation_ideal(fan, fam)
    assert kernel_oracle(pres, 3) == []


def test_kernel_oracle_budget():
    with pytest.raises(BudgetExceededError):
        kernel_oracle(b32_pres(), 5)


def P(s):
    return poly_from_str(s, 7, 2)


def test_identity_checks_torito():
    lhs = P("Y3*Y5 - Y4^3")
    p2_one = [(P("Y4"), P("Y1*Y5 - Y4^2")), (P("-Y5"), P("Y1*Y4 - Y3"))]
    assert identity_check(lhs, p2_one)
    four_term = [
        (P("Y4"), P("Y3*Y7 - p1*Y4^2")),
        (P("-Y3"), P("Y4*Y7 - p1*Y5")),
        (P("-Y4"), P("Y1*Y5 - p2*Y4^2")),
        (P("Y5"), P("Y1*Y4 - p2*Y3")),
    ]
    # only valid after rewriting p1 as p2 + 1
    assert not identity_check(lhs, four_term)
    assert identity_check(lhs, four_term, subs_p={1: {(0, 1): 1, (0, 0): 1}})
    # perturbed combination fails
    assert not identity_check(lhs, p2_one[:1])


def test_conjecture_refutation():
    for n, want_M, want_exp in ((2, 5, 1), (3, 6, 2)):
        rep = conjecture_refutation(n)
        assert rep.ok()
        assert rep.M == want_M
        assert rep.p_exponent == want_exp
        assert rep.in_kernel
    with pytest.raises(ValueError):
        conjecture_refutation(1)
