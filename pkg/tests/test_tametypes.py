import pytest
from pydantic import ValidationError

from serrelab.gl2reps import Cuspidal, DetChar, JHMultiset, PrincipalSeries, SerreWeight, all_weights, central_exponent
from serrelab.tametypes import (
    CuspType,
    PSType,
    ScalarType,
    det_exponent,
    enumerate_types,
    jh_of_type,
    sigma_of_type,
    twist_type,
    type_sort_key,
)


def w(p, m, n):
    return SerreWeight(p=p, m=m, n=n)


def test_sigma_of_type():
    assert sigma_of_type(PSType(p=7, m1=3, m2=1)) == PrincipalSeries(p=7, m1=3, m2=1)
    assert sigma_of_type(ScalarType(p=5, m=2)) == DetChar(p=5, m=2)
    assert sigma_of_type(CuspType(p=7, k=9)) == Cuspidal(p=7, k=9)


def test_jh_of_type():
    assert jh_of_type(PSType(p=5, m1=1, m2=0)) == JHMultiset.of(w(5, 0, 1), w(5, 1, 3))
    assert jh_of_type(CuspType(p=7, k=9)) == JHMultiset.of(w(7, 2, 5))
    assert jh_of_type(ScalarType(p=7, m=4)) == JHMultiset.of(w(7, 4, 0))


@pytest.mark.parametrize("p, count", [(3, 6), (5, 20), (7, 42)])
def test_enumerate_types(p, count):
    types = enumerate_types(p)
    assert len(types) == count
    assert len(set(types)) == count
    assert types == sorted(types, key=type_sort_key)


def test_type_identifications():
    assert PSType(p=5, m1=1, m2=0) == PSType(p=5, m1=0, m2=1)
    assert CuspType(p=5, k=7) == CuspType(p=5, k=11)
    with pytest.raises(ValidationError):
        PSType(p=5, m1=2, m2=6)
    with pytest.raises(ValidationError):
        CuspType(p=5, k=18)


@pytest.mark.parametrize("p", [5, 7])
def test_det_matches_central_character(p):
    for tau in enumerate_types(p):
        assert det_exponent(tau) == central_exponent(sigma_of_type(tau))


@pytest.mark.parametrize("p", [5, 7])
def test_twist_type(p):
    for tau in enumerate_types(p):
        twisted = twist_type(tau, 1)
        assert det_exponent(twisted) == (det_exponent(tau) + 2) % (p - 1)


@pytest.mark.parametrize("p", [5, 7])
def test_generic_weights_come_from_one_principal_series(p):
    types = enumerate_types(p)
    for weight in all_weights(p):
        if weight.n in (0, p - 1):
            continue
        carriers = [tau for tau in types if isinstance(tau, PSType) and weight in jh_of_type(tau)]
        assert carriers == [PSType(p=p, m1=weight.m + weight.n, m2=weight.m)]


@pytest.mark.parametrize("p", [5, 7])
def test_generic_weights_come_from_one_cuspidal_type(p):
    types = enumerate_types(p)
    for weight in all_weights(p):
        if weight.n in (0, p - 1):
            continue
        carriers = [tau for tau in types if isinstance(tau, CuspType) and weight in jh_of_type(tau)]
        assert carriers == [CuspType(p=p, k=(weight.m - 1) * (p + 1) + weight.n + 2)]
