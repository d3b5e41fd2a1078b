"""Closed forms for the Narayana/Motzkin families and their tree definitions.

Every family has three faces here: the closed-form generating function
(:func:`gf_series`), the tree-level weight (:func:`tree_poly`) and the small-n
conventions that override the tree weight (``Family.conventions``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .poly import ONE, LaurentPoly, Monomial, parse_poly, variables
from .series import PowerSeries
from .trees import ALL, TIP_AUGMENTED, weight_sum


class ConventionViolation(ArithmeticError):
    """Low-order numerator coefficients did not vanish before the q-shift."""


class FamilyId(str, enum.Enum):
    NARAYANA_GF = "narayana"
    G2_GF = "g2"
    G6_GF = "g6"
    G4_GF = "g4"
    M2_GF = "m2"
    M5_GF = "m5"
    GTILDE_GF = "gtilde"
    M5T_GF = "m5t"

    @classmethod
    def parse(cls, name: str | FamilyId) -> FamilyId:
        if isinstance(name, FamilyId):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(
                f"unknown family {name!r}; expected one of {[f.value for f in cls]}"
            ) from None


@dataclass(frozen=True)
class Family:
    """Tree interpretation: coefficient n sums over trees with n + offset edges."""

    fid: FamilyId
    spec: dict[str, str]
    filter: str = ALL
    offset: int = 0
    conventions: dict[int, LaurentPoly] = field(default_factory=dict)


_SIX = {"sleaf": "x11", "eleaf": "x12", "yleaf": "x2", "sint": "y11", "eint": "y12", "yint": "y2"}
_FIVE = {"sleaf": "u1", "etleaf": "u2", "entleaf": "u3", "yerleaf": "v1", "syleaf": "v2"}

FAMILIES: dict[FamilyId, Family] = {
    f.fid: f
    for f in (
        Family(FamilyId.NARAYANA_GF, {"leaf": "x"}),
        Family(FamilyId.G2_GF, {"oleaf": "x1", "yleaf": "x2"}),
        Family(FamilyId.G4_GF, {"oleaf": "x1", "yleaf": "x2", "oint": "y1", "yint": "y2"},
               conventions={0: parse_poly("y2")}),
        Family(FamilyId.G6_GF, _SIX,
               conventions={0: parse_poly("y2"), 1: parse_poly("x12*y12")}),
        Family(FamilyId.GTILDE_GF,
               {"sleaf": "a", "eleaf": "b", "yleaf": "c", "yint": "d", "yedge": "t"},
               conventions={0: parse_poly("d"), 1: parse_poly("b")}),
        Family(FamilyId.M2_GF, {"oleaf": "u", "yleaf": "v"}, TIP_AUGMENTED, 1),
        Family(FamilyId.M5_GF, _FIVE, TIP_AUGMENTED, 1, {0: parse_poly("u3")}),
        Family(FamilyId.M5T_GF, {**_FIVE, "yedge": "t"}, TIP_AUGMENTED, 1,
               {0: parse_poly("u3")}),
    )
}


# numbers


def narayana_number(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    num = comb(n, k) * comb(n, k - 1)
    assert num % n == 0
    return num // n


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def motzkin(n: int) -> int:
    """M_0 = 1, M_{n+1} = M_n + sum_{k=0}^{n-1} M_k M_{n-1-k}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    m = n - 1
    return motzkin(m) + sum(motzkin(k) * motzkin(m - 1 - k) for k in range(m))


def catalan_by_recurrence(n: int) -> int:
    c = [1]
    for m in range(n):
        c.append(sum(c[k] * c[m - k] for k in range(m + 1)))
    return c[n]


def sequence(name: str, n: int) -> int:
    if name == "catalan":
        return catalan(n)
    if name == "motzkin":
        return motzkin(n)
    raise ValueError(f"unknown sequence {name!r}")


def motzkin_poly(n: int, u: str = "u", v: str = "v") -> LaurentPoly:
    """M_n(u;v) = sum_k C(n,2k) C_k u^(k+1) v^(n-2k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return LaurentPoly(
        {
            Monomial({u: k + 1, v: n - 2 * k}): comb(n, 2 * k) * catalan(k)
            for k in range(n // 2 + 1)
        }
    )


def p_explicit(n: int, i: int, j: int) -> int:
    """Plane trees with n edges, i old leaves and j young leaves."""
    if n < 1:
        raise ValueError("n must be positive")
    if i < 1 or j < 0 or i + j > n:
        return 0
    val = Fraction(comb(n, i) * comb(n - i, j) * comb(n - i - j, i - 1), n)
    assert val.denominator == 1
    return int(val)


# closed-form generating functions


def _radicand_and_numerator(fid: FamilyId):
    """(numerator polynomial in q, radicand polynomial in q, power of q divided out)."""
    P = parse_poly
    if fid is FamilyId.NARAYANA_GF:
        return [ONE, P("1 - x")], [ONE, P("-2*(1 + x)"), P("(x - 1)^2")], 1
    if fid is FamilyId.G2_GF:
        return (
            [ONE, P("1 - x2")],
            [ONE, P("-2*(1 + x2)"), P("1 - 4*x1 + 2*x2 + x2^2")],
            1,
        )
    if fid is FamilyId.G4_GF:
        return (
            [ONE, P("y2 - x2")],
            [ONE, P("-2*(x2 + y2)"), P("(x2 + y2)^2 - 4*x1*y1")],
            1,
        )
    if fid is FamilyId.G6_GF:
        a0 = P("y2 - x2")
        a1 = P("x12*y12 - x11*y11")
        a2 = P("-2*(x2 + y2)")
        a3 = P("(x2 + y2)^2 - 2*(x11*y11 + x12*y12)")
        a4 = P("2*(x11*y11 - x12*y12)*(x2 - y2)")
        a5 = P("(x11*y11 - x12*y12)^2")
        return [ONE, a0, a1], [ONE, a2, a3, a4, a5], 1
    if fid is FamilyId.M2_GF:
        return [ONE, P("-v")], [ONE, P("-2*v"), P("v^2 - 4*u")], 2
    if fid is FamilyId.M5_GF:
        return (
            [ONE, P("-v1"), P("u3 - u1")],
            [
                ONE,
                P("-2*v1"),
                P("v1^2 - 2*(u1 + u3)"),
                P("2*(u1*v1 + u3*v1 - 2*u2*v2)"),
                P("(u3 - u1)^2"),
            ],
            2,
        )
    if fid is FamilyId.GTILDE_GF:
        return (
            [P("t^-1"), P("d - c"), P("b - a")],
            [
                P("t^-2"),
                P("-2*t^-1*(c + d)"),
                P("(c + d)^2 - 2*t^-1*(a + b)"),
                P("2*(a - b)*(c - d)"),
                P("(a - b)^2"),
            ],
            1,
        )
    if fid is FamilyId.M5T_GF:
        return (
            [P("t^-1"), P("-v1"), P("u3 - u1")],
            [
                P("t^-2"),
                P("-2*t^-1*v1"),
                P("v1^2 - 2*t^-1*(u1 + u3)"),
                P("2*u1*v1 + 2*u3*v1 - 4*u2*v2"),
                P("(u1 - u3)^2"),
            ],
            2,
        )
    raise ValueError(fid)


def radicand_series(fam: FamilyId | str, order: int) -> PowerSeries:
    _, rad, _ = _radicand_and_numerator(FamilyId.parse(fam))
    return PowerSeries.from_coeffs(rad, order)


def shift_down(s: PowerSeries, k: int) -> PowerSeries:
    """Divide by q^k after checking the first k coefficients vanish."""
    for i in range(k):
        if s.coeff(i):
            raise ConventionViolation(f"coefficient of q^{i} is {s.coeff(i)}, expected 0")
    return PowerSeries(s.coeffs[k:])


@lru_cache(maxsize=None)
def _gf_series(fid: FamilyId, order: int) -> PowerSeries:
    num, rad, shift = _radicand_and_numerator(fid)
    k = order + shift
    numer = PowerSeries.from_coeffs(num, k) - PowerSeries.from_coeffs(rad, k).sqrt()
    return shift_down(numer, shift).scale(Fraction(1, 2))


def gf_series(fam: FamilyId | str, order: int) -> PowerSeries:
    """Closed-form generating function of ``fam`` expanded to ``q^order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return _gf_series(FamilyId.parse(fam), order)


def family_poly(fam: FamilyId | str, n: int) -> LaurentPoly:
    """n-th family polynomial from the closed form (conventions included)."""
    return gf_series(fam, n).coeff(n)


def tree_poly(fam: FamilyId | str, n: int) -> LaurentPoly:
    """n-th family polynomial straight from the tree statistics, no conventions."""
    f = FAMILIES[FamilyId.parse(fam)]
    return weight_sum(n + f.offset, f.filter, f.spec)


def convention(fam: FamilyId | str, n: int) -> LaurentPoly | None:
    return FAMILIES[FamilyId.parse(fam)].conventions.get(n)


def defined_poly(fam: FamilyId | str, n: int) -> LaurentPoly:
    """Family polynomial by definition: the convention if one applies, else the trees."""
    c = convention(fam, n)
    return c if c is not None else tree_poly(fam, n)


def family_variables(fam: FamilyId | str) -> tuple[LaurentPoly, ...]:
    f = FAMILIES[FamilyId.parse(fam)]
    return variables(" ".join(sorted(set(f.spec.values()))))
