import pytest
from pydantic import ValidationError
from sympy import Poly, Symbol

from serrelab.config import load_settings
from serrelab.errors import PreconditionError, UnsupportedPrime
from serrelab.glnweights import (
    EXAMPLE_REDUCTIONS,
    CharBlock,
    GlnWeight,
    LiftWitness,
    TwoDimBlock,
    attached_poly,
    eigenvalues_from_frobenius,
    find_lift,
    frobenius_charpoly,
    herzig_example_weights,
    ht_targets,
    matches_frobenius,
    table_gl3,
    twist_witness,
)

GL3_PRIMES = load_settings().gl3_primes

X = Symbol("X")


def test_ht_targets():
    assert ht_targets(GlnWeight(p=7, a=(2, 1, 0))) == [0, 2, 4]
    assert ht_targets(GlnWeight(p=7, a=(9, 5, 1))) == [1, 6, 11]
    assert ht_targets(GlnWeight(p=7, a=(0, 0, 0))) == [0, 1, 2]


def test_weights_equal_up_to_multiples_of_p_minus_one():
    assert GlnWeight(p=7, a=(8, 7, 6)) == GlnWeight(p=7, a=(2, 1, 0))
    assert hash(GlnWeight(p=7, a=(8, 7, 6))) == hash(GlnWeight(p=7, a=(2, 1, 0)))
    assert GlnWeight(p=7, a=(3, 1, 0)) != GlnWeight(p=7, a=(2, 1, 0))


@pytest.mark.parametrize("a", [(1, 2), (8, 0), ()])
def test_invalid_weights(a):
    with pytest.raises(ValidationError):
        GlnWeight(p=7, a=a)


def test_find_lift_characters():
    witness = find_lift(3, 7, [0, 2, 4], EXAMPLE_REDUCTIONS)
    assert witness.label() == "eps^4 + eps^2 + 1"
    assert all(isinstance(block, CharBlock) for block in witness.blocks)


def test_find_lift_two_dimensional_block():
    witness = find_lift(3, 7, [1, 6, 11], EXAMPLE_REDUCTIONS)
    assert witness.label() == "epsV + eps^6"
    assert witness.ht() == [1, 6, 11]
    assert witness.reductions() == [0, 2, 4]


def test_find_lift_none():
    assert find_lift(3, 7, [1, 1, 0], EXAMPLE_REDUCTIONS) is None


def test_find_lift_preconditions():
    with pytest.raises(PreconditionError):
        find_lift(7, 7, list(range(7)), [0] * 7)
    with pytest.raises(PreconditionError):
        find_lift(3, 7, [0, 2], EXAMPLE_REDUCTIONS)
    with pytest.raises(UnsupportedPrime):
        find_lift(3, 3, [0, 2, 4], EXAMPLE_REDUCTIONS)


@pytest.mark.parametrize("t", [1, 5, 6, 13])
def test_twisting_targets_twists_the_witness(t):
    for targets in ([0, 2, 4], [1, 6, 11], [3, 8, 13]):
        witness = find_lift(3, 7, targets, EXAMPLE_REDUCTIONS)
        shifted = find_lift(3, 7, [h + t for h in targets], [e + t for e in EXAMPLE_REDUCTIONS])
        assert shifted == twist_witness(witness, t)


def test_block_labels():
    assert TwoDimBlock(name="V").label() == "V"
    assert TwoDimBlock(name="W", twist=3).label() == "eps^3W"
    assert CharBlock(a=0).label() == "1"
    assert CharBlock(a=1).label() == "eps"


def test_blocks_are_ordered():
    witness = LiftWitness(p=7, blocks=(CharBlock(a=0), TwoDimBlock(name="V", twist=1), CharBlock(a=6)))
    assert witness.label() == "epsV + eps^6 + 1"
    assert witness.n == 4


@pytest.mark.parametrize("p", GL3_PRIMES)
def test_gl3_table_agrees(p):
    rows = table_gl3(p)
    assert len(rows) == 9
    assert all(row.dominant and row.agrees for row in rows)
    for row in rows:
        assert row.witness.ht() == row.targets
        assert sorted(row.witness.reductions()) == list(EXAMPLE_REDUCTIONS)


@pytest.mark.parametrize("p", [11, 13])
def test_gl3_table_two_dimensional_rows(p):
    labels = [row.witness.label() for row in table_gl3(p)[6:]]
    assert labels == [
        f"epsV + eps^{p - 1}",
        f"eps^3W + eps^{p + 1}",
        f"eps^{p - 2}V + eps^{p + 3}",
    ]


def test_gl3_table_at_seven_uses_equal_data_blocks():
    # V and W both have gap 10 at p = 7
    row = table_gl3(7)[7]
    assert row.witness.label() == "eps^3V + eps^8"
    assert row.agrees


def test_gl3_table_at_five_marks_non_dominant_rows():
    rows = table_gl3(5)
    assert [row.exponents for row in rows if not row.dominant] == [(4, 3, 4), (2, 3, 2)]
    assert len(herzig_example_weights(5)) == 7
    assert len(herzig_example_weights(7)) == 9


def test_attached_poly_diagonal():
    # diag(2, 5) at l = 3 over F_7: a(3, 1) = 2 + 5, a(3, 2) = 10 / 3
    assert attached_poly(7, 3, 2, [1, 0, 1]) == Poly(1 + 3 * X**2, X, modulus=7)
    assert matches_frobenius(7, 3, [1, 0, 1], [[2, 0], [0, 5]])
    assert not matches_frobenius(7, 3, [1, 1, 1], [[2, 0], [0, 5]])


def test_eigenvalues_from_frobenius():
    assert eigenvalues_from_frobenius(7, 3, [[2, 0], [0, 5]]) == [1, 0, 1]
    frobenius = [[1, 2, 0], [0, 3, 1], [4, 0, 5]]
    eigenvalues = eigenvalues_from_frobenius(7, 3, frobenius)
    assert eigenvalues[0] == 1
    assert attached_poly(7, 3, 3, eigenvalues) == frobenius_charpoly(7, frobenius)


def test_attached_poly_preconditions():
    with pytest.raises(PreconditionError):
        attached_poly(7, 3, 2, [2, 0, 1])
    with pytest.raises(PreconditionError):
        attached_poly(7, 7, 2, [1, 0, 1])
    with pytest.raises(PreconditionError):
        attached_poly(7, 3, 2, [1, 0])
