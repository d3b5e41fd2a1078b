"""Exact multivariate Laurent polynomials over the rationals.

A :class:`LaurentPoly` is a finite map from :class:`Monomial` to a nonzero
:class:`fractions.Fraction`.  Monomials may carry negative exponents, so
``u2^-1*u3`` is a perfectly good term.  Values are immutable and always held
in canonical form, which makes ``==`` mathematical equality.

Canonical term order is graded-lex: ascending total degree, then the sorted
``(variable, exponent)`` pairs compared lexicographically.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

SERIES_VAR = "q"
_EXP_LIMIT = 2**63

Scalar = Union[int, Fraction]


class NonInvertibleSubstitution(ValueError):
    """A negatively powered variable was mapped to a non-monomial."""


class PolyParseError(ValueError):
    pass


def _check_var(name: str) -> str:
    if not isinstance(name, str) or not name or not name.isascii():
        raise ValueError(f"invalid variable identifier {name!r}")
    if name == SERIES_VAR:
        raise ValueError(f"{SERIES_VAR!r} is reserved for the series variable")
    return name


def _check_exp(e: int) -> int:
    if not -_EXP_LIMIT <= e < _EXP_LIMIT:
        raise OverflowError(f"exponent {e} outside signed 64-bit range")
    return e


class Monomial:
    """Product of variables raised to signed integer powers."""

    __slots__ = ("_items", "_hash")

    def __init__(self, exps: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        pairs = exps.items() if isinstance(exps, Mapping) else exps
        acc: dict[str, int] = {}
        for var, e in pairs:
            _check_var(var)
            acc[var] = acc.get(var, 0) + int(e)
        items = tuple(sorted((v, _check_exp(e)) for v, e in acc.items() if e != 0))
        self._items = items
        self._hash = hash(items)

    @classmethod
    def _raw(cls, items: tuple[tuple[str, int], ...]) -> Monomial:
        m = cls.__new__(cls)
        m._items = items
        m._hash = hash(items)
        return m

    @property
    def items(self) -> tuple[tuple[str, int], ...]:
        return self._items

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._items)

    def variables(self) -> frozenset[str]:
        return frozenset(v for v, _ in self._items)

    def exponent(self, var: str) -> int:
        for v, e in self._items:
            if v == var:
                return e
        return 0

    def is_polynomial(self) -> bool:
        return all(e > 0 for _, e in self._items)

    def sort_key(self):
        return (self.degree, self._items)

    def __mul__(self, other: Monomial) -> Monomial:
        if not other._items:
            return self
        if not self._items:
            return other
        acc = dict(self._items)
        for v, e in other._items:
            acc[v] = acc.get(v, 0) + e
        return Monomial._raw(
            tuple(sorted((v, _check_exp(e)) for v, e in acc.items() if e != 0))
        )

    def __pow__(self, k: int) -> Monomial:
        return Monomial._raw(tuple((v, _check_exp(e * k)) for v, e in self._items) if k else ())

    def inverse(self) -> Monomial:
        return Monomial._raw(tuple((v, -e) for v, e in self._items))

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Monomial) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self._items) or "1"

    def __repr__(self) -> str:
        return f"Monomial({dict(self._items)!r})"


ONE_MONO = Monomial()


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LaurentPoly:
    """Immutable sparse Laurent polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(m, Monomial):
                    raise TypeError(f"term key must be a Monomial, got {type(m).__name__}")
                c = Fraction(c)
                if c:
                    clean[m] = clean.get(m, 0) + c
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> LaurentPoly:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def const(cls, c: Scalar) -> LaurentPoly:
        c = Fraction(c)
        return cls._raw({ONE_MONO: c} if c else {})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> LaurentPoly:
        return cls._raw({Monomial({name: exp}): Fraction(1)})

    @classmethod
    def term(cls, mono: Monomial | Mapping[str, int], c: Scalar = 1) -> LaurentPoly:
        if not isinstance(mono, Monomial):
            mono = Monomial(mono)
        c = Fraction(c)
        return cls._raw({mono: c} if c else {})

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        return parse_poly(text)

    # inspection

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in canonical order."""
        for m in sorted(self._terms, key=Monomial.sort_key):
            yield m, self._terms[m]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, mono: Monomial | Mapping[str, int]) -> Fraction:
        if not isinstance(mono, Monomial):
            mono = Monomial(mono)
        return self._terms.get(mono, Fraction(0))

    def variables(self) -> frozenset[str]:
        out: set[str] = set()
        for m in self._terms:
            out.update(m.variables())
        return frozenset(out)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONO in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(ONE_MONO, Fraction(0))

    def has_negative_exponents(self) -> bool:
        return any(e < 0 for m in self._terms for _, e in m.items)

    def degrees(self) -> set[int]:
        return {m.degree for m in self._terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        ds = self.degrees()
        if degree is None:
            return len(ds) <= 1
        return ds <= {degree}

    # arithmetic

    def __add__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return ZERO
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> LaurentPoly:
        c = Fraction(c)
        if not c:
            return ZERO
        return LaurentPoly._raw({m: v * c for m, v in self._terms.items()})

    def __truediv__(self, other) -> LaurentPoly:
        """Exact division by a nonzero scalar or a single term."""
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def inverse(self) -> LaurentPoly:
        if len(self._terms) != 1:
            raise ZeroDivisionError(f"only single terms are invertible, got {self}")
        ((m, c),) = self._terms.items()
        return LaurentPoly._raw({m.inverse(): 1 / c})

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            return self.inverse() ** (-k)
        if len(self._terms) == 1:
            ((m, c),) = self._terms.items()
            return LaurentPoly._raw({m ** k: c ** k})
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_term(self, mono: Monomial, c: Scalar = 1) -> LaurentPoly:
        c = Fraction(c)
        if not c:
            return ZERO
        return LaurentPoly._raw({m * mono: v * c for m, v in self._terms.items()})

    def substitute(self, sigma: Mapping[str, LaurentPoly | Scalar | str]) -> LaurentPoly:
        """Replace variables by polynomials; unmapped variables stay fixed."""
        if not sigma:
            return self
        images = {v: _coerce_any(p) for v, p in sigma.items()}
        cache: dict[tuple[str, int], LaurentPoly] = {}

        def power(var: str, e: int) -> LaurentPoly:
            key = (var, e)
            if key not in cache:
                img = images[var]
                if e < 0 and len(img) != 1:
                    raise NonInvertibleSubstitution(
                        f"{var}^{e} cannot be mapped to non-monomial {img}"
                    )
                cache[key] = img ** e
            return cache[key]

        acc: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            fixed = []
            img = LaurentPoly._raw({ONE_MONO: c})
            for v, e in m.items:
                if v in images:
                    img = img * power(v, e)
                else:
                    fixed.append((v, e))
            if fixed:
                img = img.mul_term(Monomial._raw(tuple(fixed)))
            for mm, cc in img._terms.items():
                acc[mm] = acc.get(mm, 0) + cc
        return LaurentPoly._raw({m: c for m, c in acc.items() if c})

    # comparison

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # serialization

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self:
            if m is ONE_MONO or not m.items:
                parts.append(_format_coeff(c))
            elif c == 1:
                parts.append(str(m))
            elif c == -1:
                parts.append(f"-{m}")
            else:
                parts.append(f"{_format_coeff(c)}*{m}")
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"

    def to_dict(self) -> dict:
        return {
            "terms": [
                {"coeff": _format_coeff(c), "exps": dict(m.items)} for m, c in self
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> LaurentPoly:
        acc: dict[Monomial, Fraction] = {}
        for t in data["terms"]:
            m = Monomial({str(v): int(e) for v, e in t["exps"].items()})
            acc[m] = acc.get(m, 0) + Fraction(t["coeff"])
        return cls(acc)

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        return cls.from_dict(json.loads(text))


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    return NotImplemented


def _coerce_any(x) -> LaurentPoly:
    if isinstance(x, str):
        return parse_poly(x)
    out = _coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a polynomial")
    return out


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({ONE_MONO: Fraction(1)})


def var(name: str) -> LaurentPoly:
    return LaurentPoly.var(name)


def variables(names: str) -> tuple[LaurentPoly, ...]:
    """``variables("a b c")`` -> the three variable polynomials."""
    return tuple(LaurentPoly.var(n) for n in names.replace(",", " ").split())


def poly_arith(kind: str, p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    if kind == "add":
        return p + r
    if kind == "sub":
        return p - r
    if kind == "mul":
        return p * r
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def poly_substitute(p: LaurentPoly, sigma: Mapping[str, LaurentPoly]) -> LaurentPoly:
    return p.substitute(sigma)


def poly_coeff(p: LaurentPoly, m: Monomial | Mapping[str, int]) -> Fraction:
    return p.coeff(m)


# text parser: sums of products of numbers, identifiers, powers, parentheses

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, ident, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif ident is not None:
            out.append(("id", ident))
        else:
            if op not in "+-*/^()":
                raise PolyParseError(f"unexpected character {op!r} in {text!r}")
            out.append(("op", op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise PolyParseError(f"expected {op!r} in {self.text!r}")

    def parse(self) -> LaurentPoly:
        if not self.toks:
            raise PolyParseError("empty expression")
        p = self.expr()
        if self.i != len(self.toks):
            raise PolyParseError(f"trailing input in {self.text!r}")
        return p

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term().scale(sign)
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> LaurentPoly:
        acc = self.power()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            f = self.power()
            if op == "*":
                acc = acc * f
            else:
                if len(f) != 1:
                    raise PolyParseError(f"division by non-monomial {f} in {self.text!r}")
                acc = acc / f
        return acc

    def power(self) -> LaurentPoly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "num":
                raise PolyParseError(f"exponent must be an integer in {self.text!r}")
            e = sign * int(val)
            if e < 0 and len(base) != 1:
                raise PolyParseError(f"negative power of non-monomial in {self.text!r}")
            base = base ** e
        return base

    def atom(self) -> LaurentPoly:
        kind, val = self.take()
        if kind == "num":
            return LaurentPoly.const(int(val))
        if kind == "id":
            try:
                return LaurentPoly.var(val)
            except ValueError as exc:
                raise PolyParseError(str(exc)) from None
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.expect_op(")")
            return inner
        if (kind, val) == ("op", "-"):
            return -self.power()
        raise PolyParseError(f"unexpected token {val!r} in {self.text!r}")


def parse_poly(text: str) -> LaurentPoly:
    """Parse ``"4*u1*u2^-1*u3 + 1/2*x - 3"`` style text (parentheses allowed)."""
    return _Parser(text).parse()
