"""Exact arithmetic on tame character exponents.

Characters of F_p^x and F_{p^2}^x are stored only by their exponent with
respect to the Teichmuller lift of a fixed generator: a niveau 1 exponent lives
in Z/(p-1), a niveau 2 exponent in Z/(p^2-1). Everything else in the package
is built on the helpers below.
"""
from functools import lru_cache
from typing import Annotated, Tuple

from pydantic import AfterValidator, BaseModel, ConfigDict, model_validator
from sympy import isprime

from serrelab.errors import DegenerateBracket, ScalarNiveau2, UnsupportedPrime


@lru_cache(maxsize=None)
def check_prime(p: int) -> int:
    """Validate that ``p`` is an odd prime.

    Args:
        p: Candidate prime.

    Returns:
        ``p`` unchanged.

    Raises:
        UnsupportedPrime: If ``p`` is not an odd prime.
    """
    if p <= 2 or not isprime(p):
        raise UnsupportedPrime(f"{p} is not an odd prime")
    return p


# An odd prime, checked at model construction
Prime = Annotated[int, AfterValidator(check_prime)]


def require_weight_prime(p: int) -> int:
    """Validate ``p`` for the weight-set engines, which need p >= 5."""
    check_prime(p)
    if p < 5:
        raise UnsupportedPrime(f"p={p}: the weight engines require p >= 5")
    return p


def usable_prime(p) -> bool:
    """True when ``p`` can be used to reduce exponents ahead of validation."""
    return isinstance(p, int) and p > 2


def reduce_exponent_fields(data, niv1_fields=(), niv2_fields=()):
    """Reduce the named exponent fields of raw model input to canonical residues."""
    if not isinstance(data, dict) or not usable_prime(data.get("p")):
        return data
    p = data["p"]
    data = dict(data)
    for name in niv1_fields:
        if isinstance(data.get(name), int):
            data[name] = niv1(p, data[name])
    for name in niv2_fields:
        if isinstance(data.get(name), int):
            data[name] = niv2(p, data[name])
    return data


def niv1(p: int, m: int) -> int:
    """Canonical representative of m mod (p-1), in [0, p-2]."""
    return m % (p - 1)


def niv2(p: int, k: int) -> int:
    """Canonical representative of k mod (p^2-1), in [0, p^2-2]."""
    return k % (p * p - 1)


class Niv1Exp(BaseModel):
    """Exponent of a character of F_p^x, i.e. a residue mod p-1."""
    model_config = ConfigDict(frozen=True)

    p: Prime
    value: int

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data):
        if isinstance(data, dict) and usable_prime(data.get("p")) and "value" in data:
            data = {**data, "value": data["value"] % (data["p"] - 1)}
        return data

    def __int__(self) -> int:
        return self.value


class Niv2Exp(BaseModel):
    """Exponent of a character of F_{p^2}^x, i.e. a residue mod p^2-1."""
    model_config = ConfigDict(frozen=True)

    p: Prime
    value: int

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data):
        if isinstance(data, dict) and usable_prime(data.get("p")) and "value" in data:
            data = {**data, "value": data["value"] % (data["p"] ** 2 - 1)}
        return data

    def __int__(self) -> int:
        return self.value


def bracket(p: int, m: int, strict: bool = True) -> int:
    """Return {m}: the representative of m mod (p-1) with 0 < {m} < p-1.

    Args:
        p: The prime.
        m: Any integer.
        strict: When False, m = 0 mod (p-1) falls back to ``bracket_ext``.

    Returns:
        The bracket of ``m``.

    Raises:
        DegenerateBracket: If m = 0 mod (p-1) and ``strict`` is set.
    """
    r = niv1(p, m)
    if r == 0:
        if strict:
            raise DegenerateBracket(f"{{{m}}} is undefined: {m} = 0 mod {p - 1}")
        return bracket_ext(p, m)
    return r


def bracket_ext(p: int, m: int) -> int:
    """Representative of m mod (p-1) in [1, p-1], with the convention {0} = p-1."""
    return niv1(p, m) or p - 1


def is_niveau2(p: int, k: int) -> bool:
    """True when omega_2^k is genuinely of niveau 2, i.e. (p+1) does not divide k."""
    return niv2(p, k) % (p + 1) != 0


def frobenius_pair(p: int, k: int) -> Tuple[int, int]:
    """Return (k, pk) reduced mod p^2-1."""
    return niv2(p, k), niv2(p, p * k)


def canonical_niveau2(p: int, k: int) -> int:
    """Smallest representative of the Frobenius orbit {k, pk}."""
    return min(frobenius_pair(p, k))


def niveau2_decompose(p: int, m: int) -> Tuple[int, Niv1Exp]:
    """Write m = i + (p+1)j mod (p^2-1) with 1 <= i <= p and j mod (p-1).

    Args:
        p: The prime.
        m: A niveau 2 exponent.

    Returns:
        The pair (i, j).

    Raises:
        ScalarNiveau2: If (p+1) divides m.
    """
    k = niv2(p, m)
    i = k % (p + 1)
    if i == 0:
        raise ScalarNiveau2(f"omega_2^{m} is a niveau 1 character at p={p}")
    j = ((k - i) // (p + 1)) % (p - 1)
    return i, Niv1Exp(p=p, value=j)


def niveau2_compose(p: int, i: int, j: int) -> int:
    """Inverse of ``niveau2_decompose``: i + (p+1)j mod (p^2-1)."""
    return niv2(p, i + (p + 1) * j)


class ExponentRecord(BaseModel):
    """Frozen record over a prime whose equality is decided by ``identity``.

    Subclasses that identify data up to a symmetry (unordered pairs, Frobenius
    orbits) override ``identity``.
    """
    model_config = ConfigDict(frozen=True)

    def identity(self) -> tuple:
        return tuple(getattr(self, name) for name in type(self).model_fields)

    def __eq__(self, other) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        return self.identity() == other.identity()

    def __hash__(self) -> int:
        return hash((type(self).__name__,) + self.identity())
