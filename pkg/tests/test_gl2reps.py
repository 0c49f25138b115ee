import pytest
from pydantic import TypeAdapter, ValidationError

from serrelab.brauer import brauer_verify, conjugacy_classes
from serrelab.config import load_settings
from serrelab.errors import UnsupportedPrime
from serrelab.gl2reps import (
    CharZeroRep,
    Cuspidal,
    DetChar,
    JHMultiset,
    PrincipalSeries,
    SerreWeight,
    SpecialTwist,
    central_exponent,
    dim,
    enumerate_reps,
    reduce,
    twist,
)

ORACLE_PRIMES = load_settings().oracle_primes


def w(p, m, n):
    return SerreWeight(p=p, m=m, n=n)


def test_reduce_examples():
    assert reduce(PrincipalSeries(p=7, m1=3, m2=1)) == JHMultiset.of(w(7, 1, 2), w(7, 3, 4))
    assert reduce(DetChar(p=5, m=2)) == JHMultiset.of(w(5, 2, 0))
    assert reduce(Cuspidal(p=7, k=2)) == JHMultiset.of(w(7, 1, 0), w(7, 2, 4))
    assert reduce(Cuspidal(p=7, k=15)) == JHMultiset.of(w(7, 2, 5))
    assert reduce(SpecialTwist(p=5, m=1)) == JHMultiset.of(w(5, 1, 4))


def test_dimensions():
    assert dim(PrincipalSeries(p=7, m1=0, m2=1)) == 8
    assert dim(Cuspidal(p=7, k=2)) == 6
    assert dim(SpecialTwist(p=7, m=0)) == 7
    assert dim(w(7, 3, 4)) == 5


def test_identifications():
    assert PrincipalSeries(p=7, m1=3, m2=1) == PrincipalSeries(p=7, m1=1, m2=3)
    assert Cuspidal(p=5, k=2) == Cuspidal(p=5, k=10)
    assert len({Cuspidal(p=5, k=2), Cuspidal(p=5, k=10)}) == 1
    assert w(5, -1, 2) == w(5, 3, 2)


def test_invalid_reps():
    with pytest.raises(ValidationError):
        PrincipalSeries(p=5, m1=1, m2=5)
    with pytest.raises(ValidationError):
        Cuspidal(p=5, k=12)
    with pytest.raises(ValidationError):
        w(5, 0, 5)


def test_record_round_trip():
    adapter = TypeAdapter(CharZeroRep)
    rep = adapter.validate_python({"kind": "cusp", "p": 7, "k": 9})
    assert isinstance(rep, Cuspidal)
    assert adapter.validate_python(rep.model_dump(mode="json")) == rep


@pytest.mark.parametrize("p, count", [(5, 24), (7, 48), (11, 120)])
def test_enumerate_reps(p, count):
    reps = enumerate_reps(p)
    assert len(reps) == count
    assert len(set(reps)) == count


@pytest.mark.parametrize("p", [5, 7, 11])
def test_reduction_conservation(p):
    for rep in enumerate_reps(p):
        jh = reduce(rep)
        assert jh.dimension == dim(rep)
        for factor in jh:
            assert central_exponent(factor) == central_exponent(rep)


@pytest.mark.parametrize("p", [5, 7])
def test_twist_equivariance(p):
    for rep in enumerate_reps(p):
        for t in range(p - 1):
            expected = JHMultiset(factors=tuple(twist(factor, t) for factor in reduce(rep)))
            assert reduce(twist(rep, t)) == expected


@pytest.mark.parametrize("p", [5, 7])
def test_principal_series_is_symmetric(p):
    for m1 in range(p - 1):
        for m2 in range(p - 1):
            if m1 != m2:
                assert reduce(PrincipalSeries(p=p, m1=m1, m2=m2)) == reduce(PrincipalSeries(p=p, m1=m2, m2=m1))


def test_conjugacy_classes():
    classes = conjugacy_classes(5)
    assert len(classes) == 4 + 6 + 10
    # p-regular elements: everything except the p-singular ones, (p^2-1)(p-1) of them
    assert sum(cls.size for cls in classes) == 480 - 4 * 24


def test_brauer_verify_examples():
    rep = PrincipalSeries(p=5, m1=1, m2=0)
    assert brauer_verify(rep, reduce(rep)).status == "Verified"
    assert brauer_verify(DetChar(p=5, m=0), JHMultiset.of(w(5, 0, 0))).verified
    wrong = brauer_verify(rep, JHMultiset.of(w(5, 0, 0), w(5, 0, 0)))
    assert not wrong.verified
    assert wrong.status.startswith("FailedAtClass(")


def test_brauer_verify_rejects_swapped_factors():
    rep = Cuspidal(p=7, k=2)
    assert not brauer_verify(rep, JHMultiset.of(w(7, 1, 0), w(7, 3, 4))).verified


def test_brauer_verify_degree_bound():
    with pytest.raises(UnsupportedPrime):
        brauer_verify(DetChar(p=11, m=0), JHMultiset.of(w(11, 0, 0)), max_degree=16)


@pytest.mark.parametrize("p", [p for p in ORACLE_PRIMES if p < 11])
def test_oracle_agrees(p):
    for rep in enumerate_reps(p):
        assert brauer_verify(rep, reduce(rep)).verified, rep.label()


@pytest.mark.slow
@pytest.mark.parametrize("p", [p for p in ORACLE_PRIMES if p >= 11])
def test_oracle_agrees_large(p):
    for rep in enumerate_reps(p):
        assert brauer_verify(rep, reduce(rep)).verified, rep.label()
