import pytest
from pydantic import ValidationError

from serrelab.errors import EmptyPlaceList
from serrelab.gl2reps import SerreWeight
from serrelab.localgalois import (
    Irred,
    RamClass,
    Red,
    ShapeIrred,
    ShapeRed,
    enumerate_local_reps,
    from_record,
    global_weight_set,
    matches,
    to_record,
    twist_rep,
    weight_set,
)


def w(p, m, n):
    return SerreWeight(p=p, m=m, n=n)


def test_matches():
    assert matches(Irred(p=5, k=2), ShapeIrred(p=5, k=10))
    tres = Red(p=5, sub=1, quo=0, ram_class="tres")
    assert not matches(tres, ShapeRed(p=5, a=1, b=0, requires_peu=True))
    assert matches(tres, ShapeRed(p=5, a=1, b=0))
    assert matches(Red(p=5, sub=2, quo=0, split=True), ShapeRed(p=5, a=0, b=2))
    assert not matches(Red(p=5, sub=2, quo=0), ShapeRed(p=5, a=0, b=2))
    assert not matches(Irred(p=5, k=2), ShapeRed(p=5, a=2, b=0))


def test_weight_set_examples():
    assert weight_set(Irred(p=5, k=2)) == {w(5, 0, 1), w(5, 1, 3)}
    assert weight_set(Red(p=5, sub=1, quo=0, ram_class="tres")) == {w(5, 0, 4)}
    assert weight_set(Red(p=5, sub=1, quo=0, split=True)) == {w(5, 0, 0), w(5, 0, 4), w(5, 1, 2)}
    assert weight_set(Red(p=5, sub=2, quo=0)) == {w(5, 0, 1)}


def test_global_weight_set():
    irred = Irred(p=5, k=2)
    assert len(global_weight_set([irred])) == 2
    assert len(global_weight_set([irred, Red(p=5, sub=1, quo=0, split=True)])) == 6
    with pytest.raises(EmptyPlaceList):
        global_weight_set([])


def test_flag_rules():
    split = Red(p=5, sub=1, quo=0, split=True)
    assert split.inertia_split
    assert split.ram_class is RamClass.NOT_APPLICABLE
    with pytest.raises(ValidationError):
        Red(p=5, sub=1, quo=0)
    with pytest.raises(ValidationError):
        Red(p=5, sub=2, quo=0, ram_class="peu")
    with pytest.raises(ValidationError):
        Red(p=5, sub=1, quo=0, split=True, scalar_endos=True)
    with pytest.raises(ValidationError):
        Red(p=5, sub=1, quo=1, frob_scalars=("alpha", "beta"))
    with pytest.raises(ValidationError):
        Irred(p=5, k=12)
    with pytest.raises(ValidationError):
        Irred(p=3, k=1)


def test_records():
    rho = Red(p=7, sub=3, quo=2, ram_class="peu", scalar_endos=True)
    record = to_record(rho)
    assert record["niveau"] == 1
    assert record["flags"] == ["peu", "scalar_endos"]
    assert from_record(record) == rho
    assert from_record({"niveau": 2, "p": 5, "k": 10}) == Irred(p=5, k=2)


@pytest.mark.parametrize("p", [5, 7])
def test_cardinalities(p):
    for rho in enumerate_local_reps(p):
        if isinstance(rho, Irred):
            assert len(weight_set(rho)) == 2
        elif rho.ram_class is RamClass.TRES:
            assert len(weight_set(rho)) == 1


@pytest.mark.parametrize("p", [5, 7])
def test_twist_equivariance(p):
    for rho in enumerate_local_reps(p):
        for t in (1, p - 2):
            shifted = {SerreWeight(p=p, m=x.m + t, n=x.n) for x in weight_set(rho)}
            assert weight_set(twist_rep(rho, t)) == shifted


@pytest.mark.parametrize("p", [5, 7])
def test_weight_set_against_definition(p):
    # Direct transcription: ordered (w^(n+1+m) *; 0 w^m), either order when split on inertia
    for rho in enumerate_local_reps(p):
        if isinstance(rho, Irred):
            continue
        expected = set()
        for m in range(p - 1):
            for n in range(p):
                a, b = (n + 1 + m) % (p - 1), m
                hit = (rho.sub, rho.quo) == (a, b) or (rho.inertia_split and (rho.sub, rho.quo) == (b, a))
                if hit and not (n == 0 and rho.ram_class is RamClass.TRES):
                    expected.add(SerreWeight(p=p, m=m, n=n))
        assert weight_set(rho) == expected


def test_frob_scalars_label_any_split_rep():
    rho = Red(p=5, sub=2, quo=0, split=True, frob_scalars=("alpha", "beta"))
    assert rho.frob_scalars == ("alpha", "beta")
    assert from_record(to_record(rho)) == rho
    with pytest.raises(ValidationError):
        Red(p=5, sub=2, quo=0, inertia_split=True, frob_scalars=("alpha", "beta"))
