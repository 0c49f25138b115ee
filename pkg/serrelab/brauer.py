"""Brauer-character oracle for the reductions computed in ``gl2reps``.

Values are sums of powers of a primitive (p^2-1)-th root of unity zeta, stored
as exponent -> coefficient counters. Zero testing is exact: a difference is
zero when the (p^2-1)-th cyclotomic polynomial divides it.

Every p-regular element of GL2(F_p) is semisimple, with eigenvalues the
Teichmuller lifts zeta^e1, zeta^e2. Three families of classes occur: central
(e1 = e2 = (p+1)s), split ((p+1)s, (p+1)t) with s < t, and elliptic (u, pu)
with (p+1) not dividing u.
"""
import logging
from collections import Counter
from functools import lru_cache
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict
from sympy import ZZ, Poly, Symbol, cyclotomic_poly, totient

from serrelab.arith import canonical_niveau2, is_niveau2
from serrelab.errors import UnsupportedPrime
from serrelab.gl2reps import (
    Cuspidal,
    DetChar,
    JHMultiset,
    PrincipalSeries,
    SerreWeight,
    SpecialTwist,
)

logger = logging.getLogger(__name__)

_zeta = Symbol("zeta")


@lru_cache(maxsize=None)
def _cyclotomic_modulus(level: int) -> Poly:
    return Poly(cyclotomic_poly(level, _zeta), _zeta, domain=ZZ)


class CyclotomicSum:
    """A Z-linear combination of powers of zeta, a primitive ``level``-th root of unity."""

    def __init__(self, level: int, terms: Optional[Counter] = None):
        self.level = level
        self.terms = Counter()
        for exponent, coefficient in (terms or {}).items():
            self.terms[exponent % level] += coefficient

    @classmethod
    def power(cls, level: int, exponent: int, coefficient: int = 1) -> "CyclotomicSum":
        return cls(level, Counter({exponent: coefficient}))

    def __add__(self, other: "CyclotomicSum") -> "CyclotomicSum":
        merged = Counter(self.terms)
        merged.update(other.terms)
        return CyclotomicSum(self.level, merged)

    def __sub__(self, other: "CyclotomicSum") -> "CyclotomicSum":
        return self + other.scale(-1)

    def scale(self, factor: int) -> "CyclotomicSum":
        return CyclotomicSum(self.level, Counter({e: factor * c for e, c in self.terms.items()}))

    def shift(self, exponent: int) -> "CyclotomicSum":
        """Multiply by zeta^exponent."""
        return CyclotomicSum(self.level, Counter({e + exponent: c for e, c in self.terms.items()}))

    def is_zero(self) -> bool:
        coefficients = [0] * self.level
        for exponent, coefficient in self.terms.items():
            coefficients[exponent] += coefficient
        if not any(coefficients):
            return True
        poly = Poly(list(reversed(coefficients)), _zeta, domain=ZZ)
        return poly.rem(_cyclotomic_modulus(self.level)).is_zero

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*z^{e}" for e, c in sorted(self.terms.items()) if c)
        return f"CyclotomicSum({self.level}: {body or '0'})"


class RegularClass(BaseModel):
    """A p-regular conjugacy class, given by the zeta-exponents of its eigenvalues."""
    model_config = ConfigDict(frozen=True)

    family: Literal["central", "split", "elliptic"]
    e1: int
    e2: int
    size: int

    @property
    def label(self) -> str:
        return f"{self.family}({self.e1},{self.e2})"


def conjugacy_classes(p: int) -> List[RegularClass]:
    """The p-regular conjugacy classes of GL2(F_p) with their sizes."""
    level = p * p - 1
    classes = [
        RegularClass(family="central", e1=(p + 1) * s, e2=(p + 1) * s, size=1)
        for s in range(p - 1)
    ]
    classes.extend(
        RegularClass(family="split", e1=(p + 1) * s, e2=(p + 1) * t, size=p * (p + 1))
        for s in range(p - 1)
        for t in range(s + 1, p - 1)
    )
    classes.extend(
        RegularClass(family="elliptic", e1=u, e2=(p * u) % level, size=p * (p - 1))
        for u in range(level)
        if is_niveau2(p, u) and canonical_niveau2(p, u) == u
    )
    return classes


def ordinary_character(rep, cls: RegularClass) -> CyclotomicSum:
    """Value of the characteristic zero character of ``rep`` on ``cls``."""
    p = rep.p
    level = p * p - 1
    zero = CyclotomicSum(level)
    if isinstance(rep, (DetChar, SpecialTwist)):
        value = CyclotomicSum.power(level, rep.m * (cls.e1 + cls.e2))
        if isinstance(rep, DetChar):
            return value
        return value.scale({"central": p, "split": 1, "elliptic": -1}[cls.family])
    if isinstance(rep, PrincipalSeries):
        if cls.family == "central":
            return CyclotomicSum.power(level, cls.e1 * (rep.m1 + rep.m2), p + 1)
        if cls.family == "split":
            return CyclotomicSum.power(level, cls.e1 * rep.m1 + cls.e2 * rep.m2) + CyclotomicSum.power(
                level, cls.e2 * rep.m1 + cls.e1 * rep.m2
            )
        return zero
    if isinstance(rep, Cuspidal):
        if cls.family == "central":
            return CyclotomicSum.power(level, cls.e1 * rep.k, p - 1)
        if cls.family == "split":
            return zero
        return (CyclotomicSum.power(level, cls.e1 * rep.k) + CyclotomicSum.power(level, cls.e2 * rep.k)).scale(-1)
    raise TypeError(f"not a representation of GL2(F_p): {rep!r}")


def brauer_character(weight: SerreWeight, cls: RegularClass) -> CyclotomicSum:
    """Brauer character of det^m (x) Sym^n on ``cls``."""
    level = weight.p * weight.p - 1
    total = CyclotomicSum(level)
    for a in range(weight.n + 1):
        total = total + CyclotomicSum.power(level, a * cls.e1 + (weight.n - a) * cls.e2)
    return total.shift(weight.m * (cls.e1 + cls.e2))


class VerificationReport(BaseModel):
    """Outcome of comparing an ordinary character with a claimed reduction."""
    model_config = ConfigDict(frozen=True)

    rep: str
    claimed: JHMultiset
    verified: bool
    classes_checked: int
    failed_class: Optional[str] = None

    @property
    def status(self) -> str:
        return "Verified" if self.verified else f"FailedAtClass({self.failed_class})"


def brauer_verify(rep, claimed: JHMultiset, max_degree: int = 256) -> VerificationReport:
    """Check a claimed Jordan-Holder multiset against the ordinary character of ``rep``.

    Args:
        rep: A characteristic zero representation of GL2(F_p).
        claimed: The multiset to check.
        max_degree: Largest phi(p^2-1) allowed for the cyclotomic arithmetic.

    Returns:
        A report naming the first class on which the characters differ, if any.

    Raises:
        UnsupportedPrime: If phi(p^2-1) exceeds ``max_degree``.
    """
    p = rep.p
    degree = int(totient(p * p - 1))
    if degree > max_degree:
        raise UnsupportedPrime(f"p={p}: phi(p^2-1)={degree} exceeds the bound {max_degree}")
    checked = 0
    for cls in conjugacy_classes(p):
        checked += 1
        expected = ordinary_character(rep, cls)
        for weight in claimed:
            expected = expected - brauer_character(weight, cls)
        if not expected.is_zero():
            logger.debug("%s differs from the claimed reduction on %s", rep.label(), cls.label)
            return VerificationReport(
                rep=rep.label(), claimed=claimed, verified=False,
                classes_checked=checked, failed_class=cls.label,
            )
    return VerificationReport(rep=rep.label(), claimed=claimed, verified=True, classes_checked=checked)
