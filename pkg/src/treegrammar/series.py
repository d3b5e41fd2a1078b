"""Truncated power series in ``q`` with Laurent polynomial coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .poly import ONE, ZERO, LaurentPoly, Monomial, Scalar


class NonSquareLeadingTerm(ValueError):
    """The constant coefficient has no monomial square root over Q."""


class OrderExceeded(IndexError):
    pass


@dataclass(frozen=True)
class PowerSeries:
    """``coeffs[n]`` is the coefficient of ``q^n``, known for ``n <= order``."""

    coeffs: tuple[LaurentPoly, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a power series needs at least the q^0 coefficient")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[LaurentPoly | Scalar], order: int) -> PowerSeries:
        """Pad with zeros or truncate to exactly ``order + 1`` coefficients."""
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [c if isinstance(c, LaurentPoly) else LaurentPoly.const(c) for c in coeffs]
        cs = cs[: order + 1] + [ZERO] * (order + 1 - len(cs))
        return cls(tuple(cs))

    @classmethod
    def constant(cls, c: LaurentPoly | Scalar, order: int) -> PowerSeries:
        return cls.from_coeffs([c], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> LaurentPoly:
        if n < 0:
            raise IndexError(n)
        if n > self.order:
            raise OrderExceeded(f"q^{n} requested from a series known to order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise OrderExceeded(f"cannot extend order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def __add__(self, other: PowerSeries) -> PowerSeries:
        k = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(k + 1)))

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        k = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[i] - other.coeffs[i] for i in range(k + 1)))

    def __neg__(self) -> PowerSeries:
        return PowerSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        k = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(k + 1):
            acc = ZERO
            for i in range(n + 1):
                if a[i] and b[n - i]:
                    acc = acc + a[i] * b[n - i]
            out.append(acc)
        return PowerSeries(tuple(out))

    def scale(self, c: LaurentPoly | Scalar) -> PowerSeries:
        return PowerSeries(tuple(x * c for x in self.coeffs))

    def map_coeffs(self, fn) -> PowerSeries:
        return PowerSeries(tuple(fn(c) for c in self.coeffs))

    def sqrt(self) -> PowerSeries:
        """Square root with positive leading scalar.

        Solves ``b_n = (a_n - sum_{0<k<n} b_k b_{n-k}) / (2 b_0)`` term by term.
        """
        b0 = _monomial_sqrt(self.coeffs[0])
        inv2b0 = (b0.scale(2)).inverse()
        b = [b0]
        for n in range(1, self.order + 1):
            acc = self.coeffs[n]
            for k in range(1, n):
                if b[k] and b[n - k]:
                    acc = acc - b[k] * b[n - k]
            b.append(acc * inv2b0)
        return PowerSeries(tuple(b))

    def __eq__(self, other) -> bool:
        return isinstance(other, PowerSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_text(self) -> str:
        return "\n".join(f"q^{n}: {c.to_text()}" for n, c in enumerate(self.coeffs))

    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_dict() for c in self.coeffs]}


def _rational_sqrt(c: Fraction) -> Fraction | None:
    if c <= 0:
        return None
    rn, rd = isqrt(c.numerator), isqrt(c.denominator)
    if rn * rn == c.numerator and rd * rd == c.denominator:
        return Fraction(rn, rd)
    return None


def _monomial_sqrt(a0: LaurentPoly) -> LaurentPoly:
    if len(a0) != 1:
        raise NonSquareLeadingTerm(f"leading coefficient {a0} is not a single term")
    ((m, c),) = iter(a0)
    root = _rational_sqrt(c)
    if root is None or any(e % 2 for _, e in m.items):
        raise NonSquareLeadingTerm(f"leading term {a0} is not a perfect square")
    return LaurentPoly.term(Monomial._raw(tuple((v, e // 2) for v, e in m.items)), root)


def series_from_q_poly(coeffs: Sequence[LaurentPoly | Scalar], order: int) -> PowerSeries:
    """Series for a polynomial in q given by its coefficient list (low to high)."""
    return PowerSeries.from_coeffs(coeffs, order)


def series_arith(kind: str, a: PowerSeries, b: PowerSeries) -> PowerSeries:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def series_sqrt(a: PowerSeries) -> PowerSeries:
    return a.sqrt()


def series_coeff(a: PowerSeries, n: int) -> LaurentPoly:
    return a.coeff(n)


def one_series(order: int) -> PowerSeries:
    return PowerSeries.constant(ONE, order)
