"""Symmetric power modules over F_p, their duality pairing and the Hecke identities.

Sym^r is realized on homogeneous polynomials F = sum_j a_j X^(r-j) Y^j, with
(a b; c d) acting by F(X, Y) -> F(aX + cY, bX + dY). Matrices are reduced mod p
first, so singular matrices act too.

The induced module Ind(1 (x) delta^-r) is the space of functions phi with
phi(b g) = d^-r phi(g) for b = (* *; 0 d), acted on by right translation, and
stored by its values on the cosets of (1 0; i 1) for i in F_p and of
w = (0 1; 1 0).
"""
import logging
import random
from functools import lru_cache
from itertools import product
from math import comb
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationInfo, field_validator
from sympy import GF, Poly, Symbol, primitive_root
from sympy.polys.matrices import DomainMatrix

from serrelab.arith import Prime, check_prime
from serrelab.errors import DegreeMismatch, PreconditionError

logger = logging.getLogger(__name__)

Matrix2 = Tuple[int, int, int, int]

_t = Symbol("t")


class SymPoly(BaseModel):
    """Coefficients (a_0, ..., a_r) of a degree r form, reduced mod p."""
    model_config = ConfigDict(frozen=True)

    p: Prime
    coeffs: Tuple[int, ...]

    @field_validator("coeffs")
    @classmethod
    def _reduce(cls, coeffs, info: ValidationInfo):
        if not coeffs:
            raise ValueError("a form needs at least one coefficient")
        p = info.data.get("p")
        return tuple(c % p for c in coeffs) if p else coeffs

    @property
    def r(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def monomial(cls, p: int, r: int, j: int) -> "SymPoly":
        """X^(r-j) Y^j."""
        return cls(p=p, coeffs=tuple(1 if i == j else 0 for i in range(r + 1)))

    @classmethod
    def x_power(cls, p: int, r: int) -> "SymPoly":
        return cls.monomial(p, r, 0)

    def __add__(self, other: "SymPoly") -> "SymPoly":
        _check_degrees(self, other)
        return SymPoly(p=self.p, coeffs=tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, factor: int) -> "SymPoly":
        return SymPoly(p=self.p, coeffs=tuple(factor * a for a in self.coeffs))


def _check_degrees(f: SymPoly, g: SymPoly) -> None:
    if f.p != g.p or f.r != g.r:
        raise DegreeMismatch(f"cannot combine Sym^{f.r} over F_{f.p} with Sym^{g.r} over F_{g.p}")


def _require_range(p: int, r: int) -> None:
    check_prime(p)
    if not 1 <= r <= p - 2:
        raise PreconditionError(f"r={r} is outside 1..p-2 for p={p}")


@lru_cache(maxsize=None)
def action_matrix(p: int, r: int, g: Matrix2) -> Tuple[Tuple[int, ...], ...]:
    """Matrix of g on the monomial basis of Sym^r; column j is the image of X^(r-j) Y^j.

    Computed in the affine coordinate t = Y/X, where X -> aX + cY becomes a + ct.
    """
    a, b, c, d = (entry % p for entry in g)
    x_image = Poly([c, a], _t, modulus=p)
    y_image = Poly([d, b], _t, modulus=p)
    x_powers = [Poly(1, _t, modulus=p)]
    y_powers = [Poly(1, _t, modulus=p)]
    for _ in range(r):
        x_powers.append(x_powers[-1] * x_image)
        y_powers.append(y_powers[-1] * y_image)
    columns = []
    for j in range(r + 1):
        image = x_powers[r - j] * y_powers[j]
        ascending = [int(coefficient) % p for coefficient in reversed(image.all_coeffs())]
        columns.append(ascending + [0] * (r + 1 - len(ascending)))
    return tuple(tuple(columns[j][i] for j in range(r + 1)) for i in range(r + 1))


def act(g: Matrix2, form: SymPoly) -> SymPoly:
    """(a b; c d) F = F(aX + cY, bX + dY)."""
    matrix = action_matrix(form.p, form.r, tuple(g))
    return SymPoly(
        p=form.p,
        coeffs=tuple(sum(entry * a for entry, a in zip(row, form.coeffs)) for row in matrix),
    )


def _pair_coeffs(p: int, r: int, a, b) -> int:
    total = 0
    for j in range(r + 1):
        term = pow(comb(r, j), -1, p) * a[j] * b[r - j]
        total += -term if j % 2 else term
    return total % p


def pair(f: SymPoly, g: SymPoly) -> int:
    """<F, G> = sum_j binom(r, j)^-1 (-1)^j a_j b_(r-j) in F_p.

    Raises:
        DegreeMismatch: If F and G have different degrees or primes.
    """
    _check_degrees(f, g)
    return _pair_coeffs(f.p, f.r, f.coeffs, g.coeffs)


class CheckReport(BaseModel):
    """Result of an exhaustive or randomized identity check."""
    model_config = ConfigDict(frozen=True)

    name: str
    p: int
    r: int
    checks: int
    passed: bool
    first_failure: Optional[str] = None

    @property
    def status(self) -> str:
        return "AllPass" if self.passed else f"Failed: {self.first_failure}"


def _translation(i: int) -> Matrix2:
    """(p i; 0 1) reduced mod p."""
    return 0, i, 0, 1


_PROJECTION: Matrix2 = (1, 0, 0, 0)


def check_bracket_identities(p: int, r: int) -> CheckReport:
    """Check <(p i; 0 1)F, X^r> = <F, X^r> and <(1 0; 0 p)F, X^r> = 0 on monomials.

    Raises:
        PreconditionError: If r is outside 1..p-2.
    """
    _require_range(p, r)
    x_r = SymPoly.x_power(p, r)
    checks = 0
    for j in range(r + 1):
        form = SymPoly.monomial(p, r, j)
        for i in range(p):
            checks += 1
            if pair(act(_translation(i), form), x_r) != pair(form, x_r):
                return CheckReport(name="bracket", p=p, r=r, checks=checks, passed=False,
                                   first_failure=f"translation i={i} on monomial j={j}")
        checks += 1
        if pair(act(_PROJECTION, form), x_r) != 0:
            return CheckReport(name="bracket", p=p, r=r, checks=checks, passed=False,
                               first_failure=f"projection on monomial j={j}")
    return CheckReport(name="bracket", p=p, r=r, checks=checks, passed=True)


def hecke_compat_check(p: int, r: int, seed: int = 20240601, tuples: int = 200) -> CheckReport:
    """Check the pairing form of the U_v = T_v compatibility on random tuples.

    For (F_0, ..., F_(p-1), F') the identity is
    <sum_i (p i; 0 1)F_i + (1 0; 0 p)F', X^r> = sum_i <F_i, X^r>. The zero tuple
    is checked first. The map F -> (g -> <gF, X^r>) is also checked to be
    injective on Sym^r.
    """
    _require_range(p, r)
    rng = random.Random(seed)
    x_r = SymPoly.x_power(p, r)
    zero = SymPoly(p=p, coeffs=(0,) * (r + 1))
    samples = [[zero] * (p + 1)]
    for _ in range(tuples):
        samples.append([SymPoly(p=p, coeffs=tuple(rng.randrange(p) for _ in range(r + 1))) for _ in range(p + 1)])
    checks = 0
    for index, forms in enumerate(samples):
        checks += 1
        combined = act(_PROJECTION, forms[p])
        for i in range(p):
            combined = combined + act(_translation(i), forms[i])
        expected = sum(pair(forms[i], x_r) for i in range(p)) % p
        if pair(combined, x_r) != expected:
            return CheckReport(name="hecke", p=p, r=r, checks=checks, passed=False,
                               first_failure=f"random tuple {index}")
    checks += 1
    rows = [
        [pair(act(_coset_rep(p, k), SymPoly.monomial(p, r, j)), x_r) for j in range(r + 1)]
        for k in range(p + 1)
    ]
    if DomainMatrix.from_list(rows, GF(p)).rank() != r + 1:
        return CheckReport(name="hecke", p=p, r=r, checks=checks, passed=False,
                           first_failure="F -> <gF, X^r> is not injective")
    return CheckReport(name="hecke", p=p, r=r, checks=checks, passed=True)


def _determinant(g: Matrix2, p: int) -> int:
    a, b, c, d = g
    return (a * d - b * c) % p


def general_linear_group(p: int) -> List[Matrix2]:
    return [g for g in product(range(p), repeat=4) if _determinant(g, p)]


class PairingReport(CheckReport):
    nondegenerate: bool


def pairing_equivariance_check(p: int, r: int) -> PairingReport:
    """Check <gF, gG> = det(g)^r <F, G> over GL2(F_p) and that the pairing is nondegenerate."""
    _require_range(p, r)
    gram = [[_pair_coeffs(p, r, _unit(r, j), _unit(r, k)) for k in range(r + 1)] for j in range(r + 1)]
    nondegenerate = DomainMatrix.from_list(gram, GF(p)).rank() == r + 1
    checks = 0
    for g in general_linear_group(p):
        matrix = action_matrix(p, r, g)
        columns = [tuple(row[j] for row in matrix) for j in range(r + 1)]
        scale = pow(_determinant(g, p), r, p)
        for j in range(r + 1):
            for k in range(r + 1):
                checks += 1
                if _pair_coeffs(p, r, columns[j], columns[k]) != scale * gram[j][k] % p:
                    return PairingReport(name="pairing", p=p, r=r, checks=checks, passed=False,
                                         first_failure=f"g={g} on monomials ({j}, {k})",
                                         nondegenerate=nondegenerate)
    return PairingReport(name="pairing", p=p, r=r, checks=checks, passed=nondegenerate,
                         first_failure=None if nondegenerate else "pairing matrix is singular",
                         nondegenerate=nondegenerate)


def _unit(r: int, j: int) -> Tuple[int, ...]:
    return tuple(1 if i == j else 0 for i in range(r + 1))


def _coset_rep(p: int, index: int) -> Matrix2:
    """(1 0; index 1) for index < p, and w = (0 1; 1 0) for index = p."""
    return (1, 0, index, 1) if index < p else (0, 1, 1, 0)


def _coset_of(p: int, g: Matrix2) -> Tuple[int, int]:
    """Write g = b w_k with b upper triangular; return (lower-right entry of b, k)."""
    _, _, gamma, delta = (entry % p for entry in g)
    if delta:
        return delta, gamma * pow(delta, -1, p) % p
    return gamma, p


def _multiply(x: Matrix2, y: Matrix2) -> Matrix2:
    a, b, c, d = x
    e, f, g, h = y
    return a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h


def induced_action(p: int, r: int, g: Matrix2) -> List[List[int]]:
    """Matrix of right translation by g on Ind(1 (x) delta^-r) in the coset basis."""
    rows = [[0] * (p + 1) for _ in range(p + 1)]
    for k in range(p + 1):
        d_entry, target = _coset_of(p, _multiply(_coset_rep(p, k), g))
        rows[k][target] = pow(d_entry, -r, p)
    return rows


def quotient_map(p: int, r: int, swap_sign: int) -> List[List[int]]:
    """phi -> sum_i phi(w_i)(X - iY)^r + swap_sign * phi(w)Y^r, as an (r+1) x (p+1) matrix."""
    columns = [[comb(r, j) * pow(-i, j, p) % p for j in range(r + 1)] for i in range(p)]
    columns.append([0] * r + [swap_sign % p])
    return [[columns[k][j] for k in range(p + 1)] for j in range(r + 1)]


def target_action(p: int, r: int, g: Matrix2) -> List[List[int]]:
    """Matrix of g on det^(p-1-r) (x) Sym^r."""
    twist = pow(_determinant(g, p), p - 1 - r, p)
    return [[twist * entry % p for entry in row] for row in action_matrix(p, r, tuple(x % p for x in g))]


class SesReport(BaseModel):
    """Linear algebra of 0 -> kernel -> Ind -> det^(p-1-r) Sym^r -> 0."""
    model_config = ConfigDict(frozen=True)

    p: int
    r: int
    ind_dim: int
    image_dim: int
    kernel_dim: int
    equivariant: bool
    literal_formula_equivariant: bool
    x_v_maps_to_x_r: bool
    kernel_fixed_dim: int

    @property
    def passed(self) -> bool:
        return (
            self.equivariant
            and self.image_dim == self.r + 1
            and self.kernel_dim == self.p - self.r
            and self.x_v_maps_to_x_r
            and self.kernel_fixed_dim == 1
        )

    @property
    def status(self) -> str:
        return "AllPass" if self.passed else "Failed"


def _generators(p: int) -> List[Matrix2]:
    g = int(primitive_root(p))
    return [(1, 1, 0, 1), (g, 0, 0, 1), (1, 0, 0, g), (0, 1, 1, 0)]


def _is_equivariant(p: int, r: int, swap_sign: int) -> bool:
    field = GF(p)
    q = DomainMatrix.from_list(quotient_map(p, r, swap_sign), field)
    for g in _generators(p):
        left = q * DomainMatrix.from_list(induced_action(p, r, g), field)
        right = DomainMatrix.from_list(target_action(p, r, g), field) * q
        if left != right:
            logger.debug("quotient map with sign %d fails equivariance at g=%s", swap_sign, g)
            return False
    return True


def ses_check(p: int, r: int) -> SesReport:
    """Verify the quotient Ind(1 (x) delta^-r) -> det^(p-1-r) Sym^r.

    The map sends phi to sum_i phi((1 0; i 1))(X - iY)^r + (-1)^r phi(w)Y^r; the
    sign on the w coset comes from det(w) = -1 acting through det^(p-1-r).
    ``literal_formula_equivariant`` reports whether the map without that sign
    is equivariant too, which happens exactly for even r.

    Raises:
        PreconditionError: If r is outside 1..p-2.
    """
    _require_range(p, r)
    field = GF(p)
    sign = (-1) ** r
    q = DomainMatrix.from_list(quotient_map(p, r, sign), field)
    image_dim = q.rank()
    kernel = q.nullspace()
    kernel_dim = kernel.shape[0]
    x_v = DomainMatrix.from_list([[1]] + [[0]] * p, field)
    x_r = DomainMatrix.from_list([[1]] + [[0]] * r, field)
    unipotent = DomainMatrix.from_list(induced_action(p, r, (1, 1, 0, 1)), field)
    fixed = (unipotent - DomainMatrix.eye(p + 1, field)) * kernel.transpose()
    return SesReport(
        p=p,
        r=r,
        ind_dim=p + 1,
        image_dim=image_dim,
        kernel_dim=kernel_dim,
        equivariant=_is_equivariant(p, r, sign),
        literal_formula_equivariant=_is_equivariant(p, r, 1),
        x_v_maps_to_x_r=(q * x_v) == x_r,
        kernel_fixed_dim=kernel_dim - fixed.rank(),
    )
