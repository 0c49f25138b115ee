"""Crystalline lifts for GL_n weights, found from a small catalog of blocks.

A weight (a_1, ..., a_n) is predicted for rho when rho has a crystalline lift
with Hodge-Tate weights a_i + (n - i). ``find_lift`` looks for such a lift as
a direct sum of powers of the cyclotomic character eps and twists of two
2-dimensional crystalline representations:

* V, Hodge-Tate weights {0, p+3}, reducing to w + w^3 on inertia;
* W, Hodge-Tate weights {0, 2p-4}, reducing to w^-3 + w.

Failure to find a witness says nothing about the weight itself.
"""
import logging
from collections import Counter
from itertools import combinations
from typing import Annotated, Iterator, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import Matrix, Poly, Symbol, eye

from serrelab.arith import ExponentRecord, Prime, require_weight_prime
from serrelab.errors import PreconditionError

logger = logging.getLogger(__name__)

MAX_RANK = 6

_X = Symbol("X")


def _eps_label(a: int) -> str:
    if a == 0:
        return "1"
    return "eps" if a == 1 else f"eps^{a}"


class GlnWeight(ExponentRecord):
    """F(a_1, ..., a_n) with a_1 >= ... >= a_n and consecutive gaps at most p-1.

    Two weights differing by a multiple of (p-1, ..., p-1) are equal.
    """
    p: Prime
    a: Tuple[int, ...]

    @field_validator("a")
    @classmethod
    def _not_empty(cls, a):
        if not a:
            raise ValueError("a weight needs at least one entry")
        return a

    @model_validator(mode="after")
    def _check_dominant(self):
        if not is_dominant(self.p, self.a):
            raise ValueError(f"{self.a} is not a dominant weight with gaps at most p-1={self.p - 1}")
        return self

    @property
    def n(self) -> int:
        return len(self.a)

    def identity(self) -> tuple:
        shift = self.a[-1] - self.a[-1] % (self.p - 1)
        return self.p, tuple(entry - shift for entry in self.a)

    def label(self) -> str:
        return "(" + ",".join(str(entry) for entry in self.a) + ")"


def is_dominant(p: int, a: Sequence[int]) -> bool:
    return all(0 <= a[i] - a[i + 1] <= p - 1 for i in range(len(a) - 1))


def _shifted(a: Sequence[int]) -> List[int]:
    n = len(a)
    return sorted(entry + (n - 1 - i) for i, entry in enumerate(a))


def ht_targets(weight: GlnWeight) -> List[int]:
    """Hodge-Tate weights {a_i + (n-i)} of the lifts predicting ``weight``, ascending."""
    return _shifted(weight.a)


class CharBlock(BaseModel):
    """eps^a: Hodge-Tate weight a, reducing to w^a."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["char"] = "char"
    a: int

    @property
    def dim(self) -> int:
        return 1

    def ht(self, p: int) -> Tuple[int, ...]:
        return (self.a,)

    def reduction(self, p: int) -> Tuple[int, ...]:
        return (self.a % (p - 1),)

    def twisted(self, t: int) -> "CharBlock":
        return CharBlock(a=self.a + t)

    def label(self) -> str:
        return _eps_label(self.a)


_GAPS = {"V": lambda p: p + 3, "W": lambda p: 2 * p - 4}
_REDUCTIONS = {"V": (1, 3), "W": (-3, 1)}


class TwoDimBlock(BaseModel):
    """eps^t V or eps^t W."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["two"] = "two"
    name: Literal["V", "W"]
    twist: int = 0

    @property
    def dim(self) -> int:
        return 2

    def gap(self, p: int) -> int:
        return _GAPS[self.name](p)

    def ht(self, p: int) -> Tuple[int, ...]:
        return self.twist, self.twist + self.gap(p)

    def reduction(self, p: int) -> Tuple[int, ...]:
        return tuple(sorted((e + self.twist) % (p - 1) for e in _REDUCTIONS[self.name]))

    def twisted(self, t: int) -> "TwoDimBlock":
        return TwoDimBlock(name=self.name, twist=self.twist + t)

    def label(self) -> str:
        return self.name if self.twist == 0 else f"{_eps_label(self.twist)}{self.name}"


CrystBlock = Annotated[Union[CharBlock, TwoDimBlock], Field(discriminator="kind")]


def _block_order(block) -> tuple:
    if isinstance(block, TwoDimBlock):
        return 0, block.name, -block.twist
    return 1, "", -block.a


class LiftWitness(BaseModel):
    """A direct sum of catalog blocks, 2-dimensional blocks first."""
    model_config = ConfigDict(frozen=True)

    p: Prime
    blocks: Tuple[CrystBlock, ...]

    @field_validator("blocks")
    @classmethod
    def _ordered(cls, blocks):
        return tuple(sorted(blocks, key=_block_order))

    @property
    def n(self) -> int:
        return sum(block.dim for block in self.blocks)

    def ht(self) -> List[int]:
        return sorted(h for block in self.blocks for h in block.ht(self.p))

    def reductions(self) -> List[int]:
        return sorted(e for block in self.blocks for e in block.reduction(self.p))

    def block_data(self) -> tuple:
        """The witness up to summand order and up to blocks with equal data."""
        return tuple(sorted((block.ht(self.p), block.reduction(self.p)) for block in self.blocks))

    def label(self) -> str:
        return " + ".join(block.label() for block in self.blocks)


def twist_witness(witness: LiftWitness, t: int) -> LiftWitness:
    """witness (x) eps^t."""
    return LiftWitness(p=witness.p, blocks=tuple(block.twisted(t) for block in witness.blocks))


def _arrangements(p: int, remaining: Tuple[int, ...], pairs: int) -> Iterator[list]:
    if pairs == 0:
        yield [CharBlock(a=a) for a in remaining]
        return
    for i, j in combinations(range(len(remaining)), 2):
        low, high = remaining[i], remaining[j]
        rest = remaining[:i] + remaining[i + 1:j] + remaining[j + 1:]
        for name in ("V", "W"):
            block = TwoDimBlock(name=name, twist=low)
            if high - low != block.gap(p):
                continue
            for tail in _arrangements(p, rest, pairs - 1):
                yield [block] + tail


def find_lift(n: int, p: int, targets: Sequence[int], reductions: Sequence[int]) -> Optional[LiftWitness]:
    """Search the catalog for a lift with the given Hodge-Tate and reduction data.

    Witnesses with fewer 2-dimensional blocks are tried first; among those,
    pairs of targets in ascending order, V before W.

    Args:
        n: Rank, at most 6.
        p: A prime >= 5.
        targets: The Hodge-Tate multiset.
        reductions: Exponents of the inertia characters of rho, mod p-1.

    Returns:
        A witness reproducing both multisets, or None when the catalog has none.

    Raises:
        PreconditionError: If n is out of range or the multisets have the wrong size.
    """
    require_weight_prime(p)
    if not 1 <= n <= MAX_RANK:
        raise PreconditionError(f"n={n} is outside 1..{MAX_RANK}")
    if len(targets) != n or len(reductions) != n:
        raise PreconditionError(f"expected {n} Hodge-Tate weights and {n} reduction exponents")
    ordered = tuple(sorted(targets))
    wanted = Counter(e % (p - 1) for e in reductions)
    for pairs in range(n // 2 + 1):
        for blocks in _arrangements(p, ordered, pairs):
            witness = LiftWitness(p=p, blocks=tuple(blocks))
            if Counter(witness.reductions()) != wanted:
                continue
            if witness.ht() != list(ordered):
                raise AssertionError(f"witness {witness.label()} lost the Hodge-Tate data")
            logger.debug("lift for %s: %s", ordered, witness.label())
            return witness
    logger.debug("no catalog lift for %s with reductions %s", ordered, sorted(wanted.elements()))
    return None


# The nine weights predicted for 1 + w^2 + w^4 on inertia, as functions of p,
# with the lift written down for each.
_EXAMPLE_ROWS = (
    (lambda p: (2, 1, 0), lambda p: [CharBlock(a=4), CharBlock(a=2), CharBlock(a=0)]),
    (lambda p: (p - 1, p - 2, 4), lambda p: [CharBlock(a=p + 1), CharBlock(a=p - 1), CharBlock(a=4)]),
    (lambda p: (p - 3, 3, 2), lambda p: [CharBlock(a=p - 1), CharBlock(a=4), CharBlock(a=2)]),
    (lambda p: (p - 1, 3, 0), lambda p: [CharBlock(a=p + 1), CharBlock(a=4), CharBlock(a=0)]),
    (lambda p: (p + 1, p - 2, 2), lambda p: [CharBlock(a=p + 3), CharBlock(a=p - 1), CharBlock(a=2)]),
    (lambda p: (2 * p - 4, p, 4), lambda p: [CharBlock(a=2 * p - 2), CharBlock(a=p + 1), CharBlock(a=4)]),
    (lambda p: (p + 2, p - 2, 1), lambda p: [TwoDimBlock(name="V", twist=1), CharBlock(a=p - 1)]),
    (lambda p: (2 * p - 3, p, 3), lambda p: [TwoDimBlock(name="W", twist=3), CharBlock(a=p + 1)]),
    (lambda p: (2 * p - 1, p + 2, p - 2), lambda p: [TwoDimBlock(name="V", twist=p - 2), CharBlock(a=p + 3)]),
)

EXAMPLE_REDUCTIONS = (0, 2, 4)


def herzig_example_exponents(p: int) -> List[Tuple[int, int, int]]:
    require_weight_prime(p)
    return [exponents(p) for exponents, _ in _EXAMPLE_ROWS]


def herzig_example_weights(p: int) -> List[GlnWeight]:
    """The predicted weights for 1 + w^2 + w^4 that are dominant at p.

    For p >= 7 all nine are; at p = 5 two of them collapse.
    """
    return [GlnWeight(p=p, a=a) for a in herzig_example_exponents(p) if is_dominant(p, a)]


class TableRow(BaseModel):
    p: int
    exponents: Tuple[int, ...]
    dominant: bool
    targets: List[int]
    expected: LiftWitness
    witness: Optional[LiftWitness] = None

    @property
    def agrees(self) -> bool:
        return self.witness is not None and self.witness.block_data() == self.expected.block_data()


def table_gl3(p: int) -> List[TableRow]:
    """Run ``find_lift`` on each predicted weight for 1 + w^2 + w^4.

    Rows keep their order. A row whose exponents are not dominant at p is still
    searched, with ``dominant`` cleared.
    """
    require_weight_prime(p)
    rows = []
    for exponents, expected in _EXAMPLE_ROWS:
        a = exponents(p)
        targets = _shifted(a)
        rows.append(
            TableRow(
                p=p,
                exponents=a,
                dominant=is_dominant(p, a),
                targets=targets,
                expected=LiftWitness(p=p, blocks=tuple(expected(p))),
                witness=find_lift(3, p, targets, EXAMPLE_REDUCTIONS),
            )
        )
    missing = [row.exponents for row in rows if not row.agrees]
    if missing:
        logger.warning("p=%d: rows %s differ from the written-down lifts", p, missing)
    return rows


def attached_poly(p: int, l: int, n: int, eigenvalues: Sequence[int]) -> Poly:
    """sum_i (-1)^i l^(i(i-1)/2) a(l, i) X^i over F_p.

    Args:
        p: The residue characteristic.
        l: A prime different from p.
        n: Rank.
        eigenvalues: a(l, 0), ..., a(l, n) as residues mod p.

    Raises:
        PreconditionError: If a(l, 0) != 1, p divides l, or the list has the wrong length.
    """
    if len(eigenvalues) != n + 1:
        raise PreconditionError(f"expected {n + 1} Hecke eigenvalues, got {len(eigenvalues)}")
    if l % p == 0:
        raise PreconditionError(f"l={l} is divisible by p={p}")
    if eigenvalues[0] % p != 1:
        raise PreconditionError("a(l, 0) must be 1")
    coefficients = [(-1) ** i * pow(l, i * (i - 1) // 2, p) * a for i, a in enumerate(eigenvalues)]
    return Poly(sum(c * _X**i for i, c in enumerate(coefficients)), _X, modulus=p)


def frobenius_charpoly(p: int, frobenius: Sequence[Sequence[int]]) -> Poly:
    """det(1 - rho(Frob_l) X) over F_p."""
    matrix = Matrix(frobenius)
    return Poly((eye(matrix.rows) - _X * matrix).det().expand(), _X, modulus=p)


def matches_frobenius(p: int, l: int, eigenvalues: Sequence[int], frobenius: Sequence[Sequence[int]]) -> bool:
    n = len(frobenius)
    return attached_poly(p, l, n, eigenvalues) == frobenius_charpoly(p, frobenius)


def eigenvalues_from_frobenius(p: int, l: int, frobenius: Sequence[Sequence[int]]) -> List[int]:
    """The a(l, i) for which ``attached_poly`` equals det(1 - rho(Frob_l) X)."""
    if l % p == 0:
        raise PreconditionError(f"l={l} is divisible by p={p}")
    charpoly = frobenius_charpoly(p, frobenius)
    n = len(frobenius)
    eigenvalues = []
    for i in range(n + 1):
        c = int(charpoly.coeff_monomial(_X**i)) % p
        eigenvalues.append((-1) ** i * c * pow(l, -(i * (i - 1) // 2), p) % p)
    return eigenvalues
