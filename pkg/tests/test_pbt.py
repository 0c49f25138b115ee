import pytest

from serrelab.gl2reps import all_weights
from serrelab.localgalois import Irred, Red, ShapeIrred, ShapeRed, enumerate_local_reps, twist_rep, weight_set
from serrelab.pbt import PbtVerdict, allowed_shapes, has_pbt_lift
from serrelab.tametypes import CuspType, PSType, ScalarType, enumerate_types, twist_type


def test_allowed_shapes_scalar():
    shapes = allowed_shapes(ScalarType(p=5, m=0))
    assert shapes[0] == ShapeRed(p=5, a=1, b=0, requires_peu=True)
    assert shapes[1] == shapes[0]
    assert shapes[2] == ShapeIrred(p=5, k=5)
    assert shapes[2] == ShapeIrred(p=5, k=1)


def test_allowed_shapes_principal_series():
    shapes = allowed_shapes(PSType(p=5, m1=1, m2=0))
    assert shapes == [ShapeRed(p=5, a=2, b=0), ShapeRed(p=5, a=1, b=1), ShapeIrred(p=5, k=10)]
    assert shapes[2] == ShapeIrred(p=5, k=2)


def test_allowed_shapes_cuspidal_drops_niveau1_patterns():
    shapes = allowed_shapes(CuspType(p=5, k=7))
    assert shapes == [ShapeIrred(p=5, k=8), ShapeRed(p=5, a=2, b=2), ShapeRed(p=5, a=2, b=2)]
    assert not any(shape.requires_peu for shape in shapes if isinstance(shape, ShapeRed))


def test_verdict_examples():
    peu = Red(p=5, sub=2, quo=1, ram_class="peu", scalar_endos=True)
    assert has_pbt_lift(peu, ScalarType(p=5, m=1)) is PbtVerdict.YES
    assert has_pbt_lift(Red(p=5, sub=3, quo=2, split=True), PSType(p=5, m1=2, m2=0)) is PbtVerdict.NO
    assert has_pbt_lift(Irred(p=5, k=2), PSType(p=5, m1=1, m2=0)) is PbtVerdict.YES


def test_verdict_without_converse_hypothesis():
    rho = Red(p=5, sub=2, quo=1, ram_class="peu")
    assert has_pbt_lift(rho, ScalarType(p=5, m=1)) is PbtVerdict.NECESSARY_ONLY
    tres = Red(p=5, sub=2, quo=1, ram_class="tres", scalar_endos=True)
    assert has_pbt_lift(tres, ScalarType(p=5, m=1)) is PbtVerdict.NO


@pytest.mark.parametrize("p", [5, 7])
def test_principal_series_shapes_are_symmetric(p):
    for i in range(p - 1):
        for j in range(p - 1):
            if i != j:
                assert set(allowed_shapes(PSType(p=p, m1=i, m2=j))) == set(allowed_shapes(PSType(p=p, m1=j, m2=i)))


@pytest.mark.parametrize("p", [5, 7])
def test_frobenius_invariance(p):
    reps = enumerate_local_reps(p)
    for k in range(p * p - 1):
        if k % (p + 1) == 0:
            continue
        tau, conjugate = CuspType(p=p, k=k), CuspType(p=p, k=p * k)
        for rho in reps:
            assert has_pbt_lift(rho, tau) is has_pbt_lift(rho, conjugate)
        rho = Irred(p=p, k=k)
        for tau in enumerate_types(p):
            assert has_pbt_lift(rho, tau) is has_pbt_lift(Irred(p=p, k=p * k), tau)


@pytest.mark.parametrize("p", [5, 7])
def test_weights_have_principal_series_lifts(p):
    for rho in enumerate_local_reps(p):
        members = weight_set(rho)
        for weight in all_weights(p):
            if weight in members and 0 < weight.n < p - 1:
                assert has_pbt_lift(rho, PSType(p=p, m1=weight.m + weight.n, m2=weight.m)) is not PbtVerdict.NO


@pytest.mark.parametrize("p", [5, 7])
def test_twisting_preserves_verdicts(p):
    for rho in enumerate_local_reps(p)[:40]:
        for tau in enumerate_types(p):
            assert has_pbt_lift(twist_rep(rho, 1), twist_type(tau, 1)) is has_pbt_lift(rho, tau)
