"""Irreducible representations of GL2(F_p) and their reductions mod p.

Serre weights are the irreducible mod p representations
``sigma_{m,n} = det^m (x) Sym^n``. The characteristic zero catalog has four
families; ``reduce`` returns the Jordan-Holder factors of a lattice in each of
them. ``serrelab.brauer`` checks those answers independently.
"""
import logging
from collections import Counter
from typing import Annotated, List, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from serrelab.arith import (
    ExponentRecord,
    Prime,
    bracket,
    canonical_niveau2,
    is_niveau2,
    niv1,
    niveau2_decompose,
    reduce_exponent_fields,
)
from serrelab.errors import ScalarNiveau2

logger = logging.getLogger(__name__)


class SerreWeight(ExponentRecord):
    """The Serre weight sigma_{m,n} = det^m (x) Sym^n, with m mod p-1 and 0 <= n <= p-1."""

    p: Prime
    m: int
    n: int = Field(ge=0)

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data):
        return reduce_exponent_fields(data, niv1_fields=("m",))

    @model_validator(mode="after")
    def _check_degree(self):
        if self.n > self.p - 1:
            raise ValueError(f"n={self.n} exceeds p-1={self.p - 1}")
        return self

    @property
    def dim(self) -> int:
        return self.n + 1

    @property
    def sort_key(self) -> Tuple[int, int]:
        return self.m, self.n

    def label(self) -> str:
        return f"sigma_{{{self.m},{self.n}}}"


def sort_weights(weights) -> List[SerreWeight]:
    """Canonical (m, n) order used by every report."""
    return sorted(weights, key=lambda w: w.sort_key)


class DetChar(ExponentRecord):
    """The character chi o det with chi = (Teichmuller)^m."""
    kind: Literal["det"] = "det"
    p: Prime
    m: int

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data):
        return reduce_exponent_fields(data, niv1_fields=("m",))

    def label(self) -> str:
        return f"det^{self.m}"


class SpecialTwist(ExponentRecord):
    """The Steinberg representation twisted by chi o det."""
    kind: Literal["sp"] = "sp"
    p: Prime
    m: int

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data):
        return reduce_exponent_fields(data, niv1_fields=("m",))

    def label(self) -> str:
        return f"sp(det^{self.m})"


class PrincipalSeries(ExponentRecord):
    """I(chi_1, chi_2) for distinct characters; the order of (m1, m2) is immaterial."""
    kind: Literal["ps"] = "ps"
    p: Prime
    m1: int
    m2: int

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data):
        return reduce_exponent_fields(data, niv1_fields=("m1", "m2"))

    @model_validator(mode="after")
    def _check_distinct(self):
        if self.m1 == self.m2:
            raise ValueError("principal series needs distinct characters")
        return self

    def identity(self) -> tuple:
        return self.p, frozenset((self.m1, self.m2))

    def label(self) -> str:
        return f"I({self.m1},{self.m2})"


class Cuspidal(ExponentRecord):
    """Theta(chi) for chi = (Teichmuller)^k on F_{p^2}^x, identified with k ~ pk."""
    kind: Literal["cusp"] = "cusp"
    p: Prime
    k: int

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data):
        return reduce_exponent_fields(data, niv2_fields=("k",))

    @model_validator(mode="after")
    def _check_niveau(self):
        if not is_niveau2(self.p, self.k):
            raise ScalarNiveau2(f"k={self.k} is divisible by p+1={self.p + 1}")
        return self

    def identity(self) -> tuple:
        return self.p, canonical_niveau2(self.p, self.k)

    def label(self) -> str:
        return f"Theta({self.k})"


CharZeroRep = Annotated[
    Union[DetChar, SpecialTwist, PrincipalSeries, Cuspidal],
    Field(discriminator="kind"),
]


class JHMultiset(BaseModel):
    """Jordan-Holder factors of a reduction, kept sorted by (m, n)."""
    model_config = ConfigDict(frozen=True)

    factors: Tuple[SerreWeight, ...]

    @field_validator("factors")
    @classmethod
    def _sorted(cls, factors):
        return tuple(sort_weights(factors))

    @classmethod
    def of(cls, *weights: SerreWeight) -> "JHMultiset":
        return cls(factors=tuple(weights))

    @property
    def dimension(self) -> int:
        return sum(w.dim for w in self.factors)

    def counts(self) -> Counter:
        return Counter(self.factors)

    def distinct(self) -> List[SerreWeight]:
        return sort_weights(set(self.factors))

    def __contains__(self, weight) -> bool:
        return weight in self.factors

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


def dim(obj) -> int:
    """Dimension of a characteristic zero representation or of a Serre weight."""
    if isinstance(obj, SerreWeight):
        return obj.dim
    p = obj.p
    if isinstance(obj, DetChar):
        return 1
    if isinstance(obj, SpecialTwist):
        return p
    if isinstance(obj, PrincipalSeries):
        return p + 1
    return p - 1


def reduce(rep) -> JHMultiset:
    """Jordan-Holder factors of the reduction mod p of ``rep``.

    Args:
        rep: A characteristic zero representation from the catalog.

    Returns:
        The factors with multiplicity. Cuspidal representations with
        ``i = 1`` or ``i = p`` have a single factor ``sigma_{1+j,p-2}``.
    """
    p = rep.p
    if isinstance(rep, DetChar):
        return JHMultiset.of(SerreWeight(p=p, m=rep.m, n=0))
    if isinstance(rep, SpecialTwist):
        return JHMultiset.of(SerreWeight(p=p, m=rep.m, n=p - 1))
    if isinstance(rep, PrincipalSeries):
        return JHMultiset.of(
            SerreWeight(p=p, m=rep.m2, n=bracket(p, rep.m1 - rep.m2)),
            SerreWeight(p=p, m=rep.m1, n=bracket(p, rep.m2 - rep.m1)),
        )
    i, j = niveau2_decompose(p, rep.k)
    j = int(j)
    factors = []
    if i != 1:
        factors.append(SerreWeight(p=p, m=1 + j, n=i - 2))
    if i != p:
        factors.append(SerreWeight(p=p, m=i + j, n=p - 1 - i))
    return JHMultiset(factors=tuple(factors))


def central_exponent(obj) -> int:
    """Exponent mod p-1 of the central character of a representation or weight."""
    p = obj.p
    if isinstance(obj, SerreWeight):
        return niv1(p, 2 * obj.m + obj.n)
    if isinstance(obj, (DetChar, SpecialTwist)):
        return niv1(p, 2 * obj.m)
    if isinstance(obj, PrincipalSeries):
        return niv1(p, obj.m1 + obj.m2)
    return niv1(p, obj.k)


def twist(obj, t: int):
    """Tensor a representation or weight with det^t."""
    p = obj.p
    if isinstance(obj, SerreWeight):
        return SerreWeight(p=p, m=obj.m + t, n=obj.n)
    if isinstance(obj, DetChar):
        return DetChar(p=p, m=obj.m + t)
    if isinstance(obj, SpecialTwist):
        return SpecialTwist(p=p, m=obj.m + t)
    if isinstance(obj, PrincipalSeries):
        return PrincipalSeries(p=p, m1=obj.m1 + t, m2=obj.m2 + t)
    return Cuspidal(p=p, k=obj.k + (p + 1) * t)


def all_weights(p: int) -> List[SerreWeight]:
    """Every sigma_{m,n} at p, in canonical order."""
    return [SerreWeight(p=p, m=m, n=n) for m in range(p - 1) for n in range(p)]


def enumerate_reps(p: int) -> List:
    """Every irreducible characteristic zero representation of GL2(F_p), once each."""
    reps: List = []
    reps.extend(DetChar(p=p, m=m) for m in range(p - 1))
    reps.extend(SpecialTwist(p=p, m=m) for m in range(p - 1))
    reps.extend(
        PrincipalSeries(p=p, m1=m1, m2=m2)
        for m1 in range(p - 1)
        for m2 in range(m1 + 1, p - 1)
    )
    reps.extend(
        Cuspidal(p=p, k=k)
        for k in range(p * p - 1)
        if is_niveau2(p, k) and canonical_niveau2(p, k) == k
    )
    logger.debug("enumerated %d representations at p=%d", len(reps), p)
    return reps
