import pytest
from pydantic import ValidationError

from serrelab.errors import PreconditionError
from serrelab.ledger import (
    GlobalSetup,
    dim_local_framed,
    dim_local_framed_general,
    dim_local_unframed,
    dim_local_unitary,
    dim_sigma,
    framed_to_unframed,
    global_bounds,
    local_parts,
    presentation_bound,
    unitary_bound,
)


def test_local_dimensions():
    assert dim_local_framed(False) == 4
    assert dim_local_framed(True) == 5
    assert dim_local_framed(True, 2) == 6
    assert dim_local_framed_general(3) == 9
    assert dim_local_unframed(2) == 1
    assert dim_local_unitary(3, False) == 10
    assert dim_local_unitary(3, True, 2) == 16
    with pytest.raises(PreconditionError):
        dim_local_framed(True, 0)
    with pytest.raises(PreconditionError):
        dim_local_unframed(2, scalar_endos=False)


def test_dim_sigma_examples():
    assert dim_sigma(GlobalSetup.split(2, 3)) == 12
    assert dim_sigma(GlobalSetup.split(1, 1)) == 5
    assert dim_sigma(GlobalSetup(degree=3, sigma_size=2, places_over_p=(3,))) == 10


def test_local_parts_list_places_above_p_first():
    setup = GlobalSetup(degree=3, sigma_size=4, places_over_p=(1, 2))
    assert local_parts(setup) == [5, 6, 4, 4]


def test_bounds_examples():
    assert global_bounds(GlobalSetup.split(2, 3)) == (12, 1)
    assert global_bounds(GlobalSetup.split(1, 1)) == (4, 1)
    assert global_bounds(GlobalSetup.split(4, 5)) == (20, 1)
    assert framed_to_unframed(GlobalSetup.split(2, 3)) == (11, 1)


@pytest.mark.parametrize("degree", [1, 2, 5])
def test_presentation_bound_ignores_r(degree):
    setup = GlobalSetup.split(degree, degree + 2)
    for r in range(6):
        assert presentation_bound(setup, r) == 4 * setup.sigma_size
    with pytest.raises(PreconditionError):
        presentation_bound(setup, -1)


def test_invalid_setups():
    with pytest.raises(ValidationError):
        GlobalSetup(degree=2, sigma_size=3, places_over_p=(1,))
    with pytest.raises(ValidationError):
        GlobalSetup(degree=2, sigma_size=3, places_over_p=())
    with pytest.raises(ValidationError):
        GlobalSetup.split(3, 2)


def test_unitary_examples():
    assert unitary_bound(3, 1, 4).value == 1
    assert unitary_bound(2, 1, 2).value == -3
    assert unitary_bound(2, 0, 2).value == 1
    with pytest.raises(PreconditionError):
        unitary_bound(2, 2, 1)
    with pytest.raises(PreconditionError):
        unitary_bound(0, 1, 1)


def test_unitary_bound_is_one_exactly_by_parity():
    for n in range(1, 11):
        for mu in (0, 1):
            for degree in (1, 2, 3):
                bound = unitary_bound(n, mu, degree)
                assert (bound.value == 1) is bound.is_one
                assert bound.is_one is ((n + mu) % 2 == 0)
