"""Local mod p representations and their predicted Serre weights.

A local representation is recorded by what the weight recipes consume: its
restriction to inertia (a niveau 2 pair, or an ordered pair of niveau 1
exponents) together with flags describing the extension class and the
endomorphisms. The serialized form of a representation is its pydantic dump:

    {"niveau": 2, "p": 5, "k": 2}
    {"niveau": 1, "p": 5, "sub": 1, "quo": 0, "flags": ["peu"], "frob_scalars": null}
"""
import itertools
import logging
from enum import Enum
from functools import lru_cache
from typing import Annotated, ClassVar, FrozenSet, List, Literal, Optional, Tuple, Union

from pydantic import Field, TypeAdapter, model_validator

from serrelab.arith import (
    ExponentRecord,
    Prime,
    canonical_niveau2,
    frobenius_pair,
    is_niveau2,
    niv1,
    reduce_exponent_fields,
    require_weight_prime,
)
from serrelab.errors import EmptyPlaceList, ScalarNiveau2
from serrelab.gl2reps import SerreWeight, sort_weights

logger = logging.getLogger(__name__)


class RamClass(str, Enum):
    PEU = "peu"
    TRES = "tres"
    NOT_APPLICABLE = "na"


Flag = Literal["split", "inertia_split", "peu", "tres", "scalar_endos"]
FLAG_ORDER = ("split", "inertia_split", "peu", "tres", "scalar_endos")


def niv2_conjugate(p: int, k: int) -> int:
    return frobenius_pair(p, k)[1]


class Irred(ExponentRecord):
    """Irreducible rho with rho|I = w_2^k (+) w_2^pk."""
    niveau: Literal[2] = 2
    p: Prime
    k: int

    split: ClassVar[bool] = False
    inertia_split: ClassVar[bool] = False
    scalar_endos: ClassVar[bool] = True
    ram_class: ClassVar[RamClass] = RamClass.NOT_APPLICABLE

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data):
        return reduce_exponent_fields(data, niv2_fields=("k",))

    @model_validator(mode="after")
    def _check(self):
        require_weight_prime(self.p)
        if not is_niveau2(self.p, self.k):
            raise ScalarNiveau2(f"k={self.k} is divisible by p+1={self.p + 1}")
        return self

    def identity(self) -> tuple:
        return self.p, canonical_niveau2(self.p, self.k)

    def label(self) -> str:
        return f"w2^{self.k} + w2^{niv2_conjugate(self.p, self.k)}"


class Red(ExponentRecord):
    """Reducible rho with rho|I = (w^sub *; 0 w^quo).

    Boolean keywords ``split``, ``inertia_split``, ``scalar_endos`` and a
    ``ram_class`` are accepted at construction and folded into ``flags``.

    ``frob_scalars`` labels the Frobenius eigenvalues (alpha, beta) of a split
    rho; certification reports alpha as the Hecke eigenvalue. The label is
    accepted for any split rho, including sub != quo.
    """
    niveau: Literal[1] = 1
    p: Prime
    sub: int
    quo: int
    flags: Tuple[Flag, ...] = ()
    frob_scalars: Optional[Tuple[str, str]] = None

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data):
        data = reduce_exponent_fields(data, niv1_fields=("sub", "quo"))
        if not isinstance(data, dict):
            return data
        data = dict(data)
        flags = set(data.get("flags") or ())
        for name in ("split", "inertia_split", "scalar_endos"):
            if data.pop(name, False):
                flags.add(name)
        ram = RamClass(data.pop("ram_class", RamClass.NOT_APPLICABLE))
        if ram is not RamClass.NOT_APPLICABLE:
            flags.add(ram.value)
        if "split" in flags:
            flags.add("inertia_split")
        data["flags"] = tuple(f for f in FLAG_ORDER if f in flags) + tuple(sorted(flags - set(FLAG_ORDER)))
        return data

    @model_validator(mode="after")
    def _check(self):
        require_weight_prime(self.p)
        if self.peu_flag and self.tres_flag:
            raise ValueError("an extension class is either peu or tres ramifiee, not both")
        ratio_is_w = niv1(self.p, self.sub - self.quo) == 1
        if self.ram_class is not RamClass.NOT_APPLICABLE and (self.inertia_split or not ratio_is_w):
            raise ValueError("peu/tres only applies to non-split extensions of w^(m) by w^(m+1) on inertia")
        if not self.inertia_split and ratio_is_w and self.ram_class is RamClass.NOT_APPLICABLE:
            raise ValueError("a ramified extension with sub/quo = w must be declared peu or tres")
        if self.split and self.scalar_endos:
            raise ValueError("a split representation has non-scalar endomorphisms")
        if self.frob_scalars is not None and not self.split:
            raise ValueError("frob_scalars needs a split representation")
        return self

    @property
    def split(self) -> bool:
        return "split" in self.flags

    @property
    def inertia_split(self) -> bool:
        return "inertia_split" in self.flags

    @property
    def scalar_endos(self) -> bool:
        return "scalar_endos" in self.flags

    @property
    def peu_flag(self) -> bool:
        return "peu" in self.flags

    @property
    def tres_flag(self) -> bool:
        return "tres" in self.flags

    @property
    def ram_class(self) -> RamClass:
        if self.tres_flag:
            return RamClass.TRES
        if self.peu_flag:
            return RamClass.PEU
        return RamClass.NOT_APPLICABLE

    def label(self) -> str:
        shape = f"w^{self.sub} + w^{self.quo}" if self.split else f"(w^{self.sub} *; 0 w^{self.quo})"
        extra = [f for f in self.flags if f != "split"]
        return f"{shape} [{', '.join(extra)}]" if extra else shape


LocalModPRep = Annotated[Union[Irred, Red], Field(discriminator="niveau")]
_rep_adapter = TypeAdapter(LocalModPRep)


class ShapeRed(ExponentRecord):
    """The inertia pattern (w^a *; 0 w^b)."""
    kind: Literal["red"] = "red"
    p: Prime
    a: int
    b: int
    requires_peu: bool = False

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data):
        return reduce_exponent_fields(data, niv1_fields=("a", "b"))

    def label(self) -> str:
        return f"(w^{self.a} *; 0 w^{self.b})" + (" peu" if self.requires_peu else "")


class ShapeIrred(ExponentRecord):
    """The inertia pattern w_2^k (+) w_2^pk, identified with its Frobenius twist."""
    kind: Literal["irred"] = "irred"
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
        return f"w2^{self.k} + w2^{niv2_conjugate(self.p, self.k)}"


InertiaShape = Annotated[Union[ShapeRed, ShapeIrred], Field(discriminator="kind")]


def matches(rho, shape) -> bool:
    """Whether rho|I has the inertia pattern ``shape``.

    Reducible patterns are ordered unless rho is split on inertia. A pattern
    with ``requires_peu`` never matches a tres ramifiee extension.
    """
    if rho.p != shape.p:
        return False
    if isinstance(rho, Irred):
        return isinstance(shape, ShapeIrred) and rho.identity() == shape.identity()
    if not isinstance(shape, ShapeRed):
        return False
    if shape.requires_peu and rho.ram_class is RamClass.TRES:
        return False
    if rho.sub == shape.a and rho.quo == shape.b:
        return True
    return rho.inertia_split and rho.sub == shape.b and rho.quo == shape.a


@lru_cache(maxsize=4096)
def weight_set(rho) -> FrozenSet[SerreWeight]:
    """The predicted set W(rho) of Serre weights.

    Args:
        rho: A local representation.

    Returns:
        Every sigma_{m,n} whose attached inertia pattern rho has, minus
        sigma_{m,0} for tres ramifiee rho.
    """
    p = rho.p
    found = set()
    for m in range(p - 1):
        for n in range(p):
            if isinstance(rho, Irred):
                hit = matches(rho, ShapeIrred(p=p, k=(n + 1) + (p + 1) * m))
            else:
                hit = matches(rho, ShapeRed(p=p, a=n + 1 + m, b=m))
                hit = hit and not (n == 0 and rho.ram_class is RamClass.TRES)
            if hit:
                found.add(SerreWeight(p=p, m=m, n=n))
    logger.debug("W(%s) has %d weights", rho.label(), len(found))
    return frozenset(found)


def global_weight_set(rhos: List) -> List[Tuple[SerreWeight, ...]]:
    """Products of local weight sets over the places above p, in canonical order.

    Raises:
        EmptyPlaceList: If ``rhos`` is empty.
    """
    if not rhos:
        raise EmptyPlaceList("global_weight_set needs at least one place above p")
    return list(itertools.product(*(sort_weights(weight_set(rho)) for rho in rhos)))


def twist_rep(rho, t: int):
    """rho (x) w^t."""
    if isinstance(rho, Irred):
        return Irred(p=rho.p, k=rho.k + (rho.p + 1) * t)
    return rho.model_copy(update={"sub": niv1(rho.p, rho.sub + t), "quo": niv1(rho.p, rho.quo + t)})


def enumerate_local_reps(p: int) -> List:
    """Every admissible local datum at p for the exhaustive drivers.

    Irreducible data are listed up to Frobenius. Reducible data run over all
    (sub, quo) with: split; non-split but split on inertia; non-split on
    inertia with each admissible ramification class. Non-split data come
    with and without scalar endomorphisms.
    """
    require_weight_prime(p)
    reps: List = [
        Irred(p=p, k=k)
        for k in range(p * p - 1)
        if is_niveau2(p, k) and canonical_niveau2(p, k) == k
    ]
    for sub in range(p - 1):
        for quo in range(p - 1):
            reps.append(Red(p=p, sub=sub, quo=quo, split=True))
            if niv1(p, sub - quo) == 1:
                ram_classes = [RamClass.PEU, RamClass.TRES]
            else:
                ram_classes = [RamClass.NOT_APPLICABLE]
            for scalar_endos in (False, True):
                reps.append(Red(p=p, sub=sub, quo=quo, inertia_split=True, scalar_endos=scalar_endos))
                reps.extend(
                    Red(p=p, sub=sub, quo=quo, ram_class=ram, scalar_endos=scalar_endos)
                    for ram in ram_classes
                )
    logger.debug("enumerated %d local representations at p=%d", len(reps), p)
    return reps


def to_record(rho) -> dict:
    """Serialize ``rho`` to its JSON record."""
    return rho.model_dump(mode="json", exclude_none=True)


def from_record(record: dict):
    """Build a local representation from its JSON record."""
    return _rep_adapter.validate_python(record)
