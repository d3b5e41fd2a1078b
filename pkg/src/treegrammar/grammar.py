"""Formal derivatives of context-free grammars.

A grammar assigns to each variable a Laurent polynomial; the induced operator
``D`` is linear and satisfies the Leibniz rule, with ``D(c) = 0`` for scalars
and ``D(x^k) = k x^(k-1) D(x)`` for every integer ``k``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import Mapping

from .poly import SERIES_VAR, ZERO, LaurentPoly, Monomial, parse_poly
from .series import PowerSeries


class UnknownVariable(KeyError):
    """A variable is neither ruled nor declared inert."""


class GrammarParseError(ValueError):
    pass


@dataclass(frozen=True)
class Grammar:
    rules: Mapping[str, LaurentPoly]
    inert: frozenset[str] = frozenset()
    name: str | None = None
    _images: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rules", dict(self.rules))
        object.__setattr__(self, "inert", frozenset(self.inert))
        if SERIES_VAR in self.rules or SERIES_VAR in self.inert:
            raise ValueError(f"{SERIES_VAR!r} is reserved and cannot appear in a grammar")
        overlap = self.inert & self.rules.keys()
        if overlap:
            raise ValueError(f"variables both ruled and inert: {sorted(overlap)}")
        for v, rhs in self.rules.items():
            missing = rhs.variables() - self.known
            if missing:
                raise UnknownVariable(
                    f"rule for {v} mentions {sorted(missing)}, which are neither ruled nor inert"
                )

    @property
    def known(self) -> frozenset[str]:
        return frozenset(self.rules) | self.inert

    def _monomial_image(self, mono: Monomial) -> LaurentPoly:
        # D(prod x^k) = sum_x k * (mono / x) * D(x)
        hit = self._images.get(mono)
        if hit is not None:
            return hit
        acc = ZERO
        for v, k in mono.items:
            rule = self.rules.get(v)
            if rule is None:
                if v in self.inert:
                    continue
                raise UnknownVariable(f"{v!r} is neither ruled nor inert in grammar {self.name}")
            acc = acc + rule.mul_term(mono * Monomial._raw(((v, -1),)), k)
        self._images[mono] = acc
        return acc

    def derive(self, p: LaurentPoly) -> LaurentPoly:
        acc: dict[Monomial, Fraction] = {}
        for mono, c in p:
            for m, cc in self._monomial_image(mono)._terms.items():
                acc[m] = acc.get(m, 0) + c * cc
        return LaurentPoly._raw({m: c for m, c in acc.items() if c})

    def derive_n(self, p: LaurentPoly, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("n must be nonnegative")
        for _ in range(n):
            p = self.derive(p)
        return p

    def iterates(self, p: LaurentPoly, n: int) -> list[LaurentPoly]:
        """``[p, D(p), ..., D^n(p)]``."""
        out = [p]
        for _ in range(n):
            out.append(self.derive(out[-1]))
        return out

    def gen_series(self, w: LaurentPoly, order: int) -> PowerSeries:
        """Exponential generating function ``sum_n D^n(w) q^n / n!``."""
        its = self.iterates(w, order)
        return PowerSeries(tuple(d.scale(Fraction(1, factorial(n))) for n, d in enumerate(its)))

    def to_text(self) -> str:
        lines = [f"# {self.name}"] if self.name else []
        lines += [f"{v} -> {self.rules[v].to_text()}" for v in sorted(self.rules)]
        if self.inert:
            lines.append("inert: " + ", ".join(sorted(self.inert)))
        return "\n".join(lines) + "\n"


def derive(g: Grammar, p: LaurentPoly) -> LaurentPoly:
    return g.derive(p)


def derive_n(g: Grammar, p: LaurentPoly, n: int) -> LaurentPoly:
    return g.derive_n(p, n)


def gen_series(g: Grammar, w: LaurentPoly, order: int) -> PowerSeries:
    return g.gen_series(w, order)


_RULE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*->\s*(.+?)\s*$")


def parse_grammar(text: str, name: str | None = None) -> Grammar:
    """Parse the line format ``var -> poly`` with ``inert: a, b`` and ``#`` comments."""
    rules: dict[str, LaurentPoly] = {}
    inert: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("inert:"):
            inert.update(v.strip() for v in line[len("inert:"):].split(",") if v.strip())
            continue
        m = _RULE.match(line)
        if not m:
            raise GrammarParseError(f"line {lineno}: cannot parse {raw!r}")
        v, rhs = m.groups()
        if v in rules:
            raise GrammarParseError(f"line {lineno}: duplicate rule for {v}")
        try:
            rules[v] = parse_poly(rhs)
        except ValueError as exc:
            raise GrammarParseError(f"line {lineno}: {exc}") from None
    return Grammar(rules, frozenset(inert), name)


def load_grammar(path: str | Path) -> Grammar:
    path = Path(path)
    return parse_grammar(path.read_text(encoding="utf-8"), name=path.stem)


def _g(name: str, **rules: str) -> Grammar:
    return Grammar({v: parse_poly(r) for v, r in rules.items()}, name=name)


# x1y1 -> 2t x1y1 (x2+y2) is split evenly across x1 and y1
CHEN4 = _g(
    "chen4",
    x1="t*x1*(x2 + y2)",
    y1="t*y1*(x2 + y2)",
    x2="2*t*x1*y1",
    y2="2*t*x1*y1",
    t="t^2*(x2 + y2)",
)

MOTZ = _g("motz", t="t^2*v", u="2*t*u*v", v="4*t*u")

SOY = _g(
    "soy",
    a="3*t*(a*d + b*c)",
    b="3*t*(a*d + b*c)",
    c="2*a",
    d="2*b",
    t="t^2*(c + d)",
)

RMOTZ = _g(
    "rmotz",
    u1="3*t*u2*v2",
    u2="3*t*u2*v1",
    u3="3*t*u2*v2",
    v1="2*(u1 + u3)",
    v2="4*u1*u2^-1*u3",
    t="t^2*v1",
)

BUILTIN: dict[str, Grammar] = {g.name: g for g in (CHEN4, MOTZ, SOY, RMOTZ)}
