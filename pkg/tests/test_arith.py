import pytest
from pydantic import ValidationError

from serrelab.arith import (
    Niv1Exp,
    Niv2Exp,
    bracket,
    bracket_ext,
    canonical_niveau2,
    check_prime,
    frobenius_pair,
    is_niveau2,
    niveau2_compose,
    niveau2_decompose,
    require_weight_prime,
)
from serrelab.errors import DegenerateBracket, ScalarNiveau2, UnsupportedPrime


def test_bracket():
    assert bracket(7, 3) == 3
    assert bracket(7, -2) == 4
    with pytest.raises(DegenerateBracket):
        bracket(7, 0)
    assert bracket(7, 12, strict=False) == 6


def test_bracket_ext():
    assert bracket_ext(7, 0) == 6
    assert bracket_ext(5, 9) == 1
    assert bracket_ext(5, 4) == 4


@pytest.mark.parametrize("p", [5, 7, 11])
def test_bracket_ext_range(p):
    for m in range(-3 * p, 3 * p):
        value = bracket_ext(p, m)
        assert 1 <= value <= p - 1
        assert (value - m) % (p - 1) == 0
        if m % (p - 1):
            assert value == bracket(p, m)


def test_niveau2_decompose_examples():
    i, j = niveau2_decompose(5, 7)
    assert (i, int(j)) == (1, 1)
    i, j = niveau2_decompose(5, 11)
    assert (i, int(j)) == (5, 1)
    with pytest.raises(ScalarNiveau2):
        niveau2_decompose(5, 12)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_niveau2_round_trip(p):
    seen = set()
    for i in range(1, p + 1):
        for j in range(p - 1):
            m = niveau2_compose(p, i, j)
            assert is_niveau2(p, m)
            back_i, back_j = niveau2_decompose(p, m)
            assert (back_i, int(back_j)) == (i, j)
            seen.add(m)
    assert seen == {m for m in range(p * p - 1) if m % (p + 1)}


@pytest.mark.parametrize("p", [5, 7, 11])
def test_frobenius_orbits(p):
    for m in range(p * p - 1):
        k, pk = frobenius_pair(p, m)
        assert frobenius_pair(p, pk) == (pk, k)
        assert canonical_niveau2(p, pk) == canonical_niveau2(p, m)


def test_exponents_are_canonical():
    assert Niv1Exp(p=7, value=-2) == Niv1Exp(p=7, value=4)
    assert Niv2Exp(p=5, value=25).value == 1


def test_primes():
    assert check_prime(7) == 7
    with pytest.raises(UnsupportedPrime):
        check_prime(9)
    with pytest.raises(UnsupportedPrime):
        check_prime(2)
    with pytest.raises(UnsupportedPrime):
        require_weight_prime(3)
    with pytest.raises(ValidationError):
        Niv1Exp(p=15, value=1)
