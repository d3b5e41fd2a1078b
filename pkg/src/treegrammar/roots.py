"""Gamma vectors and exact real-root certification for univariate polynomials.

Univariate polynomials are handled densely as lists of ``Fraction`` from the
constant term upward.  Everything is exact; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, inf

from .poly import LaurentPoly, Monomial

Dense = list[Fraction]


class NotSymmetric(ValueError):
    pass


class ZeroPolynomial(ValueError):
    pass


def to_dense(p: LaurentPoly, var: str | None = None) -> tuple[str | None, Dense]:
    """Coefficient list of a polynomial in at most one variable."""
    vs = p.variables()
    if len(vs) > 1 or (var is not None and vs - {var}):
        raise ValueError(f"expected a polynomial in one variable, got {sorted(vs)}")
    if p.has_negative_exponents():
        raise ValueError("negative exponents are not allowed here")
    name = var if var is not None else (next(iter(vs)) if vs else None)
    deg = max((m.degree for m, _ in p), default=0)
    out = [Fraction(0)] * (deg + 1)
    for m, c in p:
        out[m.degree] = c
    return name, out


def from_dense(coeffs: Dense, var: str) -> LaurentPoly:
    return LaurentPoly({Monomial({var: i}): c for i, c in enumerate(coeffs) if c})


def _trim(a: Dense) -> Dense:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _deriv(a: Dense) -> Dense:
    return _trim([i * c for i, c in enumerate(a)][1:])


def _divmod(a: Dense, b: Dense) -> tuple[Dense, Dense]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        f = r[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            r[i + shift] -= f * c
        r = _trim(r)
    return _trim(q), r


def _gcd(a: Dense, b: Dense) -> Dense:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    return [c / a[-1] for c in a] if a else a


def squarefree_part(a: Dense) -> Dense:
    a = _trim(a)
    if len(a) <= 1:
        return a
    return _divmod(a, _gcd(a, _deriv(a)))[0]


def sturm_sequence(a: Dense) -> list[Dense]:
    seq = [_trim(a), _deriv(a)]
    while seq[-1]:
        r = _divmod(seq[-2], seq[-1])[1]
        seq.append([-c for c in r])
    return seq[:-1]


def _sign_at(a: Dense, x) -> int:
    if x in (inf, -inf):
        s = 1 if a[-1] > 0 else -1
        return s if x == inf or (len(a) - 1) % 2 == 0 else -s
    v = Fraction(0)
    for c in reversed(a):
        v = v * x + c
    return (v > 0) - (v < 0)


def sign_variations(seq: list[Dense], x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in seq) if s]
    return sum(1 for u, w in zip(signs, signs[1:]) if u != w)


def count_real_roots(a: Dense, lo=-inf, hi=inf) -> int:
    """Distinct real roots in the half-open interval (lo, hi]."""
    seq = sturm_sequence(squarefree_part(a))
    return sign_variations(seq, lo) - sign_variations(seq, hi)


@dataclass(frozen=True)
class RootReport:
    all_real: bool
    positive_roots: int
    real_roots: int
    degree: int
    squarefree_degree: int

    def to_dict(self) -> dict:
        return {
            "all_real": self.all_real,
            "positive_roots": self.positive_roots,
            "real_roots": self.real_roots,
            "degree": self.degree,
            "squarefree_degree": self.squarefree_degree,
        }


def root_report(p: LaurentPoly, var: str | None = None) -> RootReport:
    _, a = to_dense(p, var)
    a = _trim(a)
    if not a:
        raise ZeroPolynomial("the zero polynomial has no root report")
    sqf = squarefree_part(a)
    seq = sturm_sequence(sqf)
    real = sign_variations(seq, -inf) - sign_variations(seq, inf)
    positive = sign_variations(seq, Fraction(0)) - sign_variations(seq, inf)
    return RootReport(
        all_real=real == len(sqf) - 1,
        positive_roots=positive,
        real_roots=real,
        degree=len(a) - 1,
        squarefree_degree=len(sqf) - 1,
    )


@dataclass(frozen=True)
class GammaVector:
    """``p = x^shift * sum_k gammas[k] x^k (1+x)^(m-2k)``."""

    shift: int
    gammas: tuple[Fraction, ...]
    m: int
    var: str = "x"

    def expand(self) -> LaurentPoly:
        x = LaurentPoly.var(self.var)
        one_x = 1 + x
        acc = LaurentPoly.const(0)
        for k, g in enumerate(self.gammas):
            if g:
                acc = acc + (x ** k * one_x ** (self.m - 2 * k)).scale(g)
        return acc * x ** self.shift

    def is_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.gammas)

    def to_dict(self) -> dict:
        return {
            "shift": self.shift,
            "m": self.m,
            "gammas": [str(g) for g in self.gammas],
        }


def gamma_vector(p: LaurentPoly, var: str | None = None) -> GammaVector:
    name, a = to_dense(p, var)
    a = _trim(a)
    if not a:
        raise ZeroPolynomial("the zero polynomial has no gamma vector")
    shift = next(i for i, c in enumerate(a) if c)
    f = a[shift:]
    if f != f[::-1]:
        raise NotSymmetric(f"coefficients {[str(c) for c in f]} are not palindromic")
    m = len(f) - 1
    gammas: list[Fraction] = []
    for k in range(m // 2 + 1):
        # coefficient of x^k in sum_j gamma_j x^j (1+x)^(m-2j)
        g = f[k] - sum(gammas[j] * comb(m - 2 * j, k - j) for j in range(k))
        gammas.append(g)
    return GammaVector(shift, tuple(gammas), m, name or "x")
