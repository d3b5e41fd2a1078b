"""Named cross-route checks returning structured reports.

Each check compares exact objects for a range of ``n`` and stops at the first
mismatch.  Reports are data, never exceptions, so a CLI run can aggregate
every check into one summary.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable

from . import catalog
from .catalog import FamilyId, catalan, defined_poly, gf_series, motzkin, motzkin_poly, tree_poly
from .grammar import BUILTIN, MOTZ, RMOTZ, SOY
from .poly import LaurentPoly, parse_poly
from .roots import gamma_vector, root_report
from .series import PowerSeries
from .trees import ALL, TIP_AUGMENTED, histogram, weight_sum


class UnknownIdentity(KeyError):
    pass


@dataclass(frozen=True)
class Failure:
    n: int
    expected: str
    actual: str
    part: str | None = None

    def to_dict(self) -> dict:
        d = {"n": self.n, "expected": self.expected, "actual": self.actual}
        if self.part is not None:
            d["part"] = self.part
        return d


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    range: str
    passed: bool
    first_failure: Failure | None = None

    def __post_init__(self):
        if self.passed != (self.first_failure is None):
            raise ValueError("passed must hold exactly when there is no failure")

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "range": self.range,
            "passed": self.passed,
            "first_failure": self.first_failure.to_dict() if self.first_failure else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> CheckReport:
        f = d["first_failure"]
        return cls(
            d["check_id"],
            d["range"],
            d["passed"],
            Failure(f["n"], f["expected"], f["actual"], f.get("part")) if f else None,
        )

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status}  {self.check_id:<28} {self.range}"
        if self.first_failure:
            f = self.first_failure
            part = f" [{f.part}]" if f.part else ""
            out += f"\n      n={f.n}{part}: expected {f.expected}\n      {'':>{len(str(f.n)) + 2}}  actual   {f.actual}"
        return out


def _text(x) -> str:
    if isinstance(x, LaurentPoly):
        return x.to_text()
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_text(v) for v in x) + "]"
    return str(x)


Comparison = tuple[str | None, object, object]


def _run(check_id: str, ns: Iterable[int], compare: Callable[[int], list[Comparison]]) -> CheckReport:
    ns = list(ns)
    desc = f"n={ns[0]}..{ns[-1]}" if ns else "empty"
    for n in ns:
        for part, expected, actual in compare(n):
            if expected != actual:
                return CheckReport(check_id, desc, False, Failure(n, _text(expected), _text(actual), part))
    return CheckReport(check_id, desc, True)


# grammar theorems: derivative route vs tree route

P = parse_poly
X, X1, X2, Y1, Y2 = (P(v) for v in ("x", "x1", "x2", "y1", "y2"))

GRAMMAR_THEOREMS = {
    # theorem: (seed, first n, factorial offset, divide by t^n, family, family index shift)
    "chen4": ("y2", 0, 1, True, FamilyId.G4_GF, 0),
    "motz": ("v/2", 1, 1, True, FamilyId.M2_GF, -1),
    "soy": ("d", 0, 1, False, FamilyId.GTILDE_GF, 0),
    "rmotz": ("2*u3", 0, 2, False, FamilyId.M5T_GF, 0),
}


def grammar_normalized(theorem: str, n: int) -> LaurentPoly:
    """``D^n(seed)`` divided by the theorem's factorial (and power of t)."""
    seed, _, off, with_t, _, _ = GRAMMAR_THEOREMS[theorem]
    g = BUILTIN[theorem]
    d = g.derive_n(P(seed), n).scale(Fraction(1, factorial(n + off)))
    return d * P("t") ** (-n) if with_t else d


def check_grammar(theorem: str, n_max: int = 9) -> CheckReport:
    if theorem not in GRAMMAR_THEOREMS:
        raise UnknownIdentity(theorem)
    seed, n0, off, with_t, fam, k = GRAMMAR_THEOREMS[theorem]
    g = BUILTIN[theorem]
    its = g.iterates(P(seed), n_max)
    tee = P("t")

    def compare(n):
        d = its[n].scale(Fraction(1, factorial(n + off)))
        if with_t:
            d = d * tee ** (-n)
        return [(None, defined_poly(fam, n + k), d)]

    return _run(f"grammar:{theorem}", range(n0, n_max + 1), compare)


def check_gf(fam: FamilyId | str, order: int = 10) -> CheckReport:
    fid = FamilyId.parse(fam)
    s = gf_series(fid, order)
    return _run(f"gf:{fid.value}", range(order + 1),
                lambda n: [(None, defined_poly(fid, n), s.coeff(n))])


# identities


def _narayana(n: int) -> LaurentPoly:
    return tree_poly(FamilyId.NARAYANA_GF, n)


def _m(n: int, u, v) -> LaurentPoly:
    return motzkin_poly(n).substitute({"u": u, "v": v})


def _identity_coker(n):
    return [(None, _narayana(n + 1), _m(n, X, 1 + X))]


def _identity_coker_gamma(n):
    gv = gamma_vector(_narayana(n))
    want = tuple(Fraction(comb(n - 1, 2 * k - 2) * catalan(k - 1)) for k in range(1, (n + 1) // 2 + 1))
    return [("shift", 1, gv.shift), ("gammas", want, gv.gammas)]


def _identity_chen_rel(n):
    return [(None, tree_poly(FamilyId.G2_GF, n + 1), _m(n, X1, 1 + X2))]


def _identity_four_var(n):
    return [(None, tree_poly(FamilyId.G4_GF, n + 1), _m(n, X1 * Y1, X2 + Y2))]


REFINED_COKER_SUBST = {
    "v2": "1",
    "u2": "x12*y12*x2 + x11*y11*y2",
    "u1": "x11*y11",
    "u3": "x12*y12",
    "v1": "x2 + y2",
}


def _identity_refined_coker(n):
    m5 = gf_series(FamilyId.M5_GF, n).coeff(n)
    sigma = {k: P(v) for k, v in REFINED_COKER_SUBST.items()}
    return [(None, tree_poly(FamilyId.G6_GF, n + 1), m5.substitute(sigma))]


def _identity_lin_kim(n):
    g4 = sum((_m(n - i, X1 * Y1, X2) * Y2 ** i).scale(comb(n, i)) for i in range(n + 1))
    nar = sum((_m(k, X, X).scale(comb(n, k)) for k in range(n + 1)), LaurentPoly.const(0))
    return [
        ("four_var", tree_poly(FamilyId.G4_GF, n + 1), g4),
        ("narayana", _narayana(n + 1), nar),
    ]


def _identity_donaghey(n):
    m = _m(n, X1, X2)
    g4 = tree_poly(FamilyId.G4_GF, n + 1).substitute({"y1": 1, "y2": 0})
    tip = tree_poly(FamilyId.M2_GF, n).substitute({"u": X1, "v": X2})
    return [("g4", m, g4), ("tip_augmented", m, tip)]


def _identity_euler(n):
    a = sum(comb(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))
    b = sum(comb(n, k) * motzkin(k) for k in range(n + 1))
    return [("a", motzkin(n), a), ("b", catalan(n + 1), b)]


def _identity_narayana_explicit(n):
    hist = histogram(n, ALL, ("leaf",))
    return [(f"k={k}", catalog.narayana_number(n, k), hist.get((k,), 0)) for k in range(n + 2)]


def _identity_p_explicit(n):
    hist = histogram(n, ALL, ("oleaf", "yleaf"))
    return [
        (f"i={i},j={j}", catalog.p_explicit(n, i, j), hist.get((i, j), 0))
        for i in range(n + 1)
        for j in range(n + 1)
    ]


IDENTITIES: dict[str, tuple[int, Callable[[int], list[Comparison]]]] = {
    "coker": (0, _identity_coker),
    "coker_gamma": (1, _identity_coker_gamma),
    "chen_rel": (0, _identity_chen_rel),
    "four_var": (0, _identity_four_var),
    "refined_coker": (1, _identity_refined_coker),
    "lin_kim": (0, _identity_lin_kim),
    "donaghey": (0, _identity_donaghey),
    "euler": (0, _identity_euler),
    "narayana_explicit": (0, _identity_narayana_explicit),
    "p_explicit": (1, _identity_p_explicit),
}


def check_identity(identity: str, n_max: int = 9) -> CheckReport:
    if identity not in IDENTITIES:
        raise UnknownIdentity(identity)
    n0, fn = IDENTITIES[identity]
    return _run(f"identity:{identity}", range(n0, n_max + 1), fn)


# symmetries


def _swap(p: LaurentPoly, pairs: dict[str, str]) -> LaurentPoly:
    full = {**pairs, **{v: k for k, v in pairs.items()}}
    return p.substitute({k: P(v) for k, v in full.items()})


def _symmetry_narayana(n):
    leaves = weight_sum(n, ALL, {"leaf": "x"})
    interior = weight_sum(n, ALL, {"interior": "x"})
    return [(None, leaves, interior)]


def _symmetry_six_var(n):
    g = tree_poly(FamilyId.G6_GF, n)
    return [(None, g, _swap(g, {"x11": "x12", "x2": "y2", "y11": "y12"}))]


def _symmetry_old_young(n):
    a = weight_sum(n, ALL, {"sleaf": "x", "eleaf": "y"})
    b = weight_sum(n, ALL, {"yleaf": "x", "yint": "y"})
    return [("a", a, _swap(a, {"x": "y"})), ("b", b, _swap(b, {"x": "y"}))]


def _symmetry_tapt(n):
    m = tree_poly(FamilyId.M5_GF, n)
    return [(None, m, _swap(m, {"u1": "u3"}))]


SYMMETRIES = {
    "narayana_sym": (1, _symmetry_narayana),
    "six_var_sym": (2, _symmetry_six_var),
    "old_young_sym": (2, _symmetry_old_young),
    "tapt_sym": (2, _symmetry_tapt),
}


def check_symmetry(identity: str, n_max: int = 9) -> CheckReport:
    if identity not in SYMMETRIES:
        raise UnknownIdentity(identity)
    n0, fn = SYMMETRIES[identity]
    return _run(f"symmetry:{identity}", range(n0, n_max + 1), fn)


# parity


def _parity(n):
    out = []
    leaves = histogram(n, ALL, ("leaf",))
    diff = sum(c if k % 2 == 0 else -c for (k,), c in leaves.items())
    if n >= 2:
        m = n // 2
        want = 0 if n % 2 == 0 else (-1) ** (m + 1) * catalan(m)
        out.append(("Pe-Po", want, diff))
    ol = histogram(n, ALL, ("oleaf",))
    if n % 2 == 1 and n >= 3:
        m = (n - 1) // 2
        out.append(("cortt_a", catalan(m), ol.get((m + 1,), 0)))
    oy = histogram(n, ALL, ("oleaf", "yleaf"))
    for m in range(1, n // 2 + 1):
        d = sum(c if j % 2 == 0 else -c for (i, j), c in oy.items() if i == m)
        out.append((f"cortt_b m={m}", 0, d))
    return out


def check_parity(n_max: int = 12) -> CheckReport:
    return _run("parity", range(1, n_max + 1), _parity)


# real roots and gamma positivity


def _realroots(n):
    out = []
    polys = {
        "N": _narayana(n),
        "G": weight_sum(n, ALL, {"oleaf": "x"}),
        "M": weight_sum(n + 1, TIP_AUGMENTED, {"oleaf": "x"}),
    }
    for name, p in polys.items():
        r = root_report(p)
        out.append((f"{name} all_real", True, r.all_real))
        out.append((f"{name} positive_roots", 0, r.positive_roots))
    out.append(("N gamma>=0", True, gamma_vector(polys["N"]).is_nonnegative()))
    return out


def check_realroots(n_max: int = 12) -> CheckReport:
    return _run("realroots", range(1, n_max + 1), _realroots)


# derivation facts and the Gen(t^-1) route


def _derivation_facts(_n):
    t1, t2 = P("t^-1"), P("t^-2")
    return [
        ("motz D(t^-1)", P("-v"), MOTZ.derive(t1)),
        ("motz D^2(t^-2)", P("2*v^2 - 8*u"), MOTZ.derive_n(t2, 2)),
        ("motz D^3(t^-2)", P("0"), MOTZ.derive_n(t2, 3)),
        ("soy D(t^-1)", P("-(c + d)"), SOY.derive(t1)),
        ("soy D^2(t^-1)", P("-2*(a + b)"), SOY.derive_n(t1, 2)),
        ("soy D^3(t^-1)", SOY.derive_n(P("d"), 2).scale(-2), SOY.derive_n(t1, 3)),
        ("soy D(t^-2)", P("-2*t^-1*(c + d)"), SOY.derive(t2)),
        ("soy D^2(t^-2)", P("-4*t^-1*(a + b) + 2*(c + d)^2"), SOY.derive_n(t2, 2)),
        ("soy D^3(t^-2)", P("12*(a - b)*(c - d)"), SOY.derive_n(t2, 3)),
        ("soy D^4(t^-2)", P("24*(a - b)^2"), SOY.derive_n(t2, 4)),
        ("soy D^5(t^-2)", P("0"), SOY.derive_n(t2, 5)),
        ("rmotz D(t^-1)", P("-v1"), RMOTZ.derive(t1)),
        ("rmotz D^2(t^-1)", P("-2*(u1 + u3)"), RMOTZ.derive_n(t1, 2)),
        ("rmotz D^3(t^-1)", P("-12*t*v2*u2"), RMOTZ.derive_n(t1, 3)),
        ("rmotz D(t^-2)", P("-2*t^-1*v1"), RMOTZ.derive(t2)),
        ("rmotz D^2(t^-2)", P("2*v1^2 - 4*t^-1*(u1 + u3)"), RMOTZ.derive_n(t2, 2)),
        ("rmotz D^3(t^-2)", P("12*v1*(u1 + u3) - 24*u2*v2"), RMOTZ.derive_n(t2, 3)),
        ("rmotz D^4(t^-2)", P("24*(u1 - u3)^2"), RMOTZ.derive_n(t2, 4)),
        ("rmotz D^5(t^-2)", P("0"), RMOTZ.derive_n(t2, 5)),
    ]


def check_derivation_facts() -> CheckReport:
    return _run("grammar:derivation_facts", [0], _derivation_facts)


# Gen(t^-1;q) = head(q) - 2 q^shift sum_n F_n q^n, with F_n scaled by t^(n+1) for motz
GEN_ROUTES = {
    "motz": ((P("t^-1"), P("-v")), 2, FamilyId.M2_GF, True),
    "soy": ((P("t^-1"), P("d - c"), P("b - a")), 1, FamilyId.GTILDE_GF, False),
    "rmotz": ((P("t^-1"), P("-v1"), P("u3 - u1")), 2, FamilyId.M5T_GF, False),
}


def gen_route_series(theorem: str, order: int) -> tuple[PowerSeries, PowerSeries, PowerSeries]:
    """(Gen(t^-1) by derivatives, sqrt(Gen(t^-2)) by derivatives, closed-form rebuild)."""
    head, shift, fam, with_t = GEN_ROUTES[theorem]
    g = BUILTIN[theorem]
    direct = g.gen_series(P("t^-1"), order)
    via_sqrt = g.gen_series(P("t^-2"), order).sqrt()
    fs = gf_series(fam, max(order - shift, 0))
    tee = P("t")
    tail = [LaurentPoly.const(0)] * shift + [
        (fs.coeff(n) * tee ** (n + 1) if with_t else fs.coeff(n)).scale(-2)
        for n in range(order + 1 - shift)
    ]
    rebuilt = PowerSeries.from_coeffs(head, order) + PowerSeries.from_coeffs(tail, order)
    return direct, via_sqrt, rebuilt


def check_gen_route(theorem: str, order: int = 10) -> CheckReport:
    if theorem not in GEN_ROUTES:
        raise UnknownIdentity(theorem)
    direct, via_sqrt, rebuilt = gen_route_series(theorem, order)
    return _run(
        f"gen_route:{theorem}",
        range(order + 1),
        lambda n: [
            ("sqrt(Gen(t^-2))", direct.coeff(n), via_sqrt.coeff(n)),
            ("closed form", direct.coeff(n), rebuilt.coeff(n)),
        ],
    )


# suites

DEFAULT_TREE_N = 9
DEFAULT_HIST_N = 12
DEFAULT_NUMERIC_N = 20
DEFAULT_GF_ORDER = 10

SUITES = ("grammar", "gf", "identity", "symmetry", "parity", "roots")


def suite_jobs(suite: str, max_n: int | None = None) -> list[tuple[str, tuple]]:
    """Check invocations ``(function name, args)`` in their fixed report order."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    pick = (lambda d: d) if max_n is None else (lambda d: max_n)
    jobs: list[tuple[str, tuple]] = []
    if suite in ("all", "grammar"):
        jobs += [("check_grammar", (t, pick(DEFAULT_TREE_N))) for t in GRAMMAR_THEOREMS]
        jobs.append(("check_derivation_facts", ()))
        jobs += [("check_gen_route", (t, pick(DEFAULT_GF_ORDER))) for t in GEN_ROUTES]
    if suite in ("all", "gf"):
        jobs += [("check_gf", (f.value, pick(DEFAULT_GF_ORDER))) for f in FamilyId]
    if suite in ("all", "identity"):
        for ident in IDENTITIES:
            default = DEFAULT_NUMERIC_N if ident == "euler" else DEFAULT_TREE_N
            jobs.append(("check_identity", (ident, pick(default))))
    if suite in ("all", "symmetry"):
        jobs += [("check_symmetry", (s, pick(DEFAULT_TREE_N))) for s in SYMMETRIES]
    if suite in ("all", "parity"):
        jobs.append(("check_parity", (pick(DEFAULT_HIST_N),)))
    if suite in ("all", "roots"):
        jobs.append(("check_realroots", (pick(DEFAULT_HIST_N),)))
    return jobs


def _call(job: tuple[str, tuple]) -> CheckReport:
    name, args = job
    return globals()[name](*args)


def run_suite(suite: str = "all", max_n: int | None = None, jobs: int = 1) -> list[CheckReport]:
    work = suite_jobs(suite, max_n)
    if jobs <= 1:
        return [_call(j) for j in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_call, work))
