import pytest

from serrelab.errors import DegreeMismatch, PreconditionError, UnsupportedPrime
from serrelab.sympair import (
    SymPoly,
    act,
    check_bracket_identities,
    general_linear_group,
    hecke_compat_check,
    pair,
    pairing_equivariance_check,
    ses_check,
)


def form(p, *coeffs):
    return SymPoly(p=p, coeffs=coeffs)


def degrees(p):
    return range(1, p - 1)


def test_coefficients_are_reduced():
    assert form(5, 6, -1).coeffs == (1, 4)


def test_act_examples():
    f = form(5, 1, 2, 3)
    assert act((1, 0, 0, 1), f) == f
    assert act((0, 1, 0, 1), SymPoly.x_power(5, 2)) == form(5, 0, 0, 0)
    assert act((0, 1, 1, 0), SymPoly.x_power(7, 4)) == SymPoly.monomial(7, 4, 4)


def test_act_substitutes():
    # (1 1; 0 1) sends X^2 to X^2 and Y^2 to (X + Y)^2
    u = (1, 1, 0, 1)
    assert act(u, SymPoly.monomial(5, 2, 0)) == form(5, 1, 0, 0)
    assert act(u, SymPoly.monomial(5, 2, 2)) == form(5, 1, 2, 1)


def test_pair_examples():
    assert pair(SymPoly.monomial(5, 2, 0), SymPoly.monomial(5, 2, 2)) == 1
    assert pair(SymPoly.monomial(5, 2, 1), SymPoly.monomial(5, 2, 1)) == 2
    for r in degrees(7):
        x_r = SymPoly.x_power(7, r)
        assert pair(x_r, x_r) == 0
    with pytest.raises(DegreeMismatch):
        pair(SymPoly.x_power(5, 2), SymPoly.x_power(5, 3))


def test_bracket_identities_examples():
    report = check_bracket_identities(5, 2)
    assert report.passed
    assert report.checks == 18
    assert check_bracket_identities(7, 5).status == "AllPass"
    with pytest.raises(PreconditionError):
        check_bracket_identities(5, 0)
    with pytest.raises(PreconditionError):
        check_bracket_identities(5, 4)


def test_ses_examples():
    report = ses_check(5, 2)
    assert (report.ind_dim, report.image_dim, report.kernel_dim) == (6, 3, 3)
    assert report.passed
    assert ses_check(5, 1).kernel_dim == 4


def test_general_linear_group_order():
    assert len(general_linear_group(5)) == 480


@pytest.mark.parametrize("p", [5, 7])
def test_all_identities(p):
    for r in degrees(p):
        assert check_bracket_identities(p, r).passed
        assert hecke_compat_check(p, r).passed
        report = pairing_equivariance_check(p, r)
        assert report.passed and report.nondegenerate
        ses = ses_check(p, r)
        assert ses.passed, ses
        assert ses.x_v_maps_to_x_r
        assert ses.kernel_dim == p - r


@pytest.mark.parametrize("p", [5, 7])
def test_unsigned_quotient_formula_needs_even_degree(p):
    for r in degrees(p):
        assert ses_check(p, r).literal_formula_equivariant is (r % 2 == 0)


def test_hecke_check_is_seeded():
    first = hecke_compat_check(7, 3, seed=1, tuples=50)
    second = hecke_compat_check(7, 3, seed=1, tuples=50)
    assert first == second
    assert first.checks == 52


def test_composite_modulus_is_rejected():
    with pytest.raises(UnsupportedPrime):
        ses_check(6, 2)
    with pytest.raises(UnsupportedPrime):
        pairing_equivariance_check(9, 2)
