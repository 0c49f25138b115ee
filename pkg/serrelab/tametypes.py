"""Tame inertial types and the representations attached to them.

A tame type is chi_1 (+) chi_2 for two characters of inertia of niveau 1
(``PSType``, or ``ScalarType`` when they agree) or chi (+) chi^p for a
genuinely niveau 2 character (``CuspType``).
"""
import logging
from typing import Annotated, List, Literal, Union

from pydantic import Field, model_validator

from serrelab.arith import ExponentRecord, Prime, canonical_niveau2, is_niveau2, niv1, reduce_exponent_fields
from serrelab.errors import ScalarNiveau2
from serrelab.gl2reps import Cuspidal, DetChar, JHMultiset, PrincipalSeries, reduce

logger = logging.getLogger(__name__)


class ScalarType(ExponentRecord):
    kind: Literal["scalar"] = "scalar"
    p: Prime
    m: int

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data):
        return reduce_exponent_fields(data, niv1_fields=("m",))

    def exponents(self) -> tuple:
        return (self.m,)

    def label(self) -> str:
        return f"w^{self.m}+w^{self.m}"


class PSType(ExponentRecord):
    """chi_1 (+) chi_2 with distinct niveau 1 characters; unordered."""
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
            raise ValueError("use ScalarType for equal characters")
        return self

    def identity(self) -> tuple:
        return self.p, frozenset((self.m1, self.m2))

    def exponents(self) -> tuple:
        return tuple(sorted((self.m1, self.m2)))

    def label(self) -> str:
        return f"w^{self.m1}+w^{self.m2}"


class CuspType(ExponentRecord):
    """chi (+) chi^p for chi = w_2^k, identified with its Frobenius twist."""
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

    def exponents(self) -> tuple:
        return (canonical_niveau2(self.p, self.k),)

    def label(self) -> str:
        return f"w2^{self.k}+w2^{self.p}*{self.k}"


TameType = Annotated[Union[ScalarType, PSType, CuspType], Field(discriminator="kind")]

_KIND_ORDER = {"scalar": 0, "ps": 1, "cusp": 2}


def type_sort_key(tau) -> tuple:
    """Canonical (kind, exponents) order."""
    return (_KIND_ORDER[tau.kind],) + tau.exponents()


def sigma_of_type(tau):
    """The characteristic zero representation sigma(tau)."""
    if isinstance(tau, ScalarType):
        return DetChar(p=tau.p, m=tau.m)
    if isinstance(tau, PSType):
        return PrincipalSeries(p=tau.p, m1=tau.m1, m2=tau.m2)
    return Cuspidal(p=tau.p, k=tau.k)


def jh_of_type(tau) -> JHMultiset:
    """Jordan-Holder factors of the reduction of sigma(tau)."""
    return reduce(sigma_of_type(tau))


def det_exponent(tau) -> int:
    """Exponent mod p-1 of det tau, read through w = w_2^(p+1)."""
    if isinstance(tau, ScalarType):
        return niv1(tau.p, 2 * tau.m)
    if isinstance(tau, PSType):
        return niv1(tau.p, tau.m1 + tau.m2)
    # w_2^k * w_2^pk = w_2^((p+1)k) = w^k
    return niv1(tau.p, tau.k)


def twist_type(tau, t: int):
    """tau (x) w^t."""
    if isinstance(tau, ScalarType):
        return ScalarType(p=tau.p, m=tau.m + t)
    if isinstance(tau, PSType):
        return PSType(p=tau.p, m1=tau.m1 + t, m2=tau.m2 + t)
    return CuspType(p=tau.p, k=tau.k + (tau.p + 1) * t)


def enumerate_types(p: int) -> List:
    """Every tame type at p once, in canonical order."""
    types: List = [ScalarType(p=p, m=m) for m in range(p - 1)]
    types.extend(PSType(p=p, m1=m1, m2=m2) for m1 in range(p - 1) for m2 in range(m1 + 1, p - 1))
    types.extend(
        CuspType(p=p, k=k)
        for k in range(p * p - 1)
        if is_niveau2(p, k) and canonical_niveau2(p, k) == k
    )
    logger.debug("enumerated %d tame types at p=%d", len(types), p)
    return types
