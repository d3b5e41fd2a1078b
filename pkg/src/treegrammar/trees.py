"""Exhaustive plane-tree enumeration and leaf/vertex statistics.

Trees are encoded as balanced parentheses with an implicit root: each child
contributes ``"(" + encoding(child) + ")"``.  The 3-edge path is ``((()))``
and the 3-edge star is ``()()()``; the single vertex is the empty string.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import asdict, dataclass, fields
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .poly import LaurentPoly, Monomial

ALL = "all"
TIP_AUGMENTED = "tip_augmented"
FILTERS = (ALL, TIP_AUGMENTED)


class UnknownStatistic(KeyError):
    pass


class PlaneTree:
    """Rooted ordered tree; equality and ordering go through the encoding."""

    __slots__ = ("children", "encoding", "edges")

    def __init__(self, children: Sequence[PlaneTree] = ()):
        self.children = tuple(children)
        self.encoding = "".join("(" + c.encoding + ")" for c in self.children)
        self.edges = len(self.encoding) // 2

    @classmethod
    def decode(cls, text: str) -> PlaneTree:
        stack: list[list[PlaneTree]] = [[]]
        for ch in text:
            if ch == "(":
                stack.append([])
            elif ch == ")":
                if len(stack) < 2:
                    raise ValueError(f"unbalanced encoding {text!r}")
                kids = stack.pop()
                stack[-1].append(cls(kids))
            else:
                raise ValueError(f"unexpected character {ch!r} in tree encoding")
        if len(stack) != 1:
            raise ValueError(f"unbalanced encoding {text!r}")
        return cls(stack[0])

    def encode(self) -> str:
        return self.encoding

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __eq__(self, other) -> bool:
        return isinstance(other, PlaneTree) and self.encoding == other.encoding

    def __hash__(self) -> int:
        return hash(self.encoding)

    def __repr__(self) -> str:
        return f"PlaneTree({self.encoding!r})"


LEAF = PlaneTree()


def _order_key(t: PlaneTree):
    first = t.children[0].edges if t.children else -1
    return (first, t.encoding)


@lru_cache(maxsize=None)
def _lex_sorted_all(n: int) -> tuple[PlaneTree, ...]:
    if n == 0:
        return (LEAF,)
    out = []
    for k in range(n):
        for first in _lex_sorted_all(k):
            for rest in _lex_sorted_all(n - 1 - k):
                out.append(PlaneTree((first,) + rest.children))
    out.sort(key=lambda t: t.encoding)
    return tuple(out)


@lru_cache(maxsize=None)
def _tip_forests(m: int) -> tuple[tuple[PlaneTree, ...], ...]:
    """Child sequences with ``m`` edges whose interior members are tip-augmented."""
    if m == 0:
        return ((),)
    out = []
    for size in range(1, m + 1):
        heads = [LEAF] if size == 1 else list(_tip_trees(size - 1))
        for h in heads:
            for tail in _tip_forests(m - size):
                out.append((h,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def _tip_trees(n: int) -> tuple[PlaneTree, ...]:
    if n == 0:
        return ()
    return tuple(PlaneTree((LEAF,) + f) for f in _tip_forests(n - 1))


@lru_cache(maxsize=None)
def enumerate_trees(n: int, filter: str = ALL) -> tuple[PlaneTree, ...]:
    """All plane trees with ``n`` edges in the deterministic order.

    Order: edge count of the first subtree ascending, then encoding.  The
    tip-augmented filter keeps trees with no young interior vertex; it is
    generated directly and sorted with the same key, so it is the ordered
    subsequence of the full enumeration.
    """
    if n < 0:
        raise ValueError("edge count must be nonnegative")
    if filter == ALL:
        return tuple(sorted(_lex_sorted_all(n), key=_order_key))
    if filter == TIP_AUGMENTED:
        return tuple(sorted(_tip_trees(n), key=_order_key))
    raise ValueError(f"unknown filter {filter!r}; expected one of {FILTERS}")


@dataclass(frozen=True)
class TreeStats:
    edges: int
    leaf: int
    oleaf: int
    yleaf: int
    sleaf: int
    eleaf: int
    sint: int
    eint: int
    oint: int
    yint: int
    interior: int
    yedge: int
    etleaf: int
    entleaf: int
    syleaf: int
    yerleaf: int

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


STAT_NAMES = tuple(f.name for f in fields(TreeStats))


def classify(tree: PlaneTree) -> TreeStats:
    if not tree.children:
        # the lone vertex is the young interior vertex of G_0 = y_2
        return TreeStats(0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0)
    sleaf = eleaf = etleaf = entleaf = syleaf = yerleaf = 0
    sint = eint = yint = 0
    stack = [tree]
    while stack:
        v = stack.pop()
        kids = v.children
        first = kids[0]
        if first.children:
            yint += 1
        elif len(kids) == 1:
            sint += 1
            sleaf += 1
        else:
            eint += 1
            eleaf += 1
            if kids[1].children:
                entleaf += 1
            else:
                etleaf += 1
        for i, c in enumerate(kids):
            if c.children:
                stack.append(c)
            elif i == 1:
                syleaf += 1
            elif i >= 2:
                yerleaf += 1
    edges = tree.edges
    oleaf = sleaf + eleaf
    yleaf = syleaf + yerleaf
    oint = sint + eint
    return TreeStats(
        edges=edges,
        leaf=oleaf + yleaf,
        oleaf=oleaf,
        yleaf=yleaf,
        sleaf=sleaf,
        eleaf=eleaf,
        sint=sint,
        eint=eint,
        oint=oint,
        yint=yint,
        interior=oint + yint,
        yedge=edges - oleaf,
        etleaf=etleaf,
        entleaf=entleaf,
        syleaf=syleaf,
        yerleaf=yerleaf,
    )


@lru_cache(maxsize=None)
def tree_stats(n: int, filter: str = ALL) -> tuple[TreeStats, ...]:
    return tuple(classify(t) for t in enumerate_trees(n, filter))


def invariant_violations(s: TreeStats, tip_augmented: bool = False) -> list[str]:
    """Names of the structural identities that ``s`` fails (empty when sound)."""
    checks = {
        "leaf = oleaf + yleaf": s.leaf == s.oleaf + s.yleaf,
        "oleaf = sleaf + eleaf": s.oleaf == s.sleaf + s.eleaf,
        "sleaf = sint": s.sleaf == s.sint,
        "eleaf = eint": s.eleaf == s.eint,
        "oint = sint + eint": s.oint == s.sint + s.eint,
        "interior = oint + yint": s.interior == s.oint + s.yint,
        "leaf + interior = edges + 1": s.leaf + s.interior == s.edges + 1,
        "yedge = edges - oleaf": s.yedge == s.edges - s.oleaf,
        "eleaf = etleaf + entleaf": s.eleaf == s.etleaf + s.entleaf,
        "yleaf = syleaf + yerleaf": s.yleaf == s.syleaf + s.yerleaf,
    }
    if tip_augmented:
        checks.update({
            "yint = 0": s.yint == 0,
            "sleaf + etleaf + entleaf = oleaf = interior":
                s.sleaf + s.etleaf + s.entleaf == s.oleaf == s.interior,
            "etleaf = syleaf": s.etleaf == s.syleaf,
        })
    return [name for name, ok in checks.items() if not ok]


def weight_sum(n: int, filter: str, spec: Mapping[str, str]) -> LaurentPoly:
    """``sum_T prod_stat var^stat(T)`` over the enumerated trees, no conventions."""
    unknown = set(spec) - set(STAT_NAMES)
    if unknown:
        raise UnknownStatistic(f"unknown statistics {sorted(unknown)}")
    names = list(spec)
    counts = Counter(tuple(getattr(s, k) for k in names) for s in tree_stats(n, filter))
    terms: dict[Monomial, int] = {}
    for exps, c in counts.items():
        m = Monomial(zip((spec[k] for k in names), exps))
        terms[m] = terms.get(m, 0) + c
    return LaurentPoly(terms)


def histogram(n: int, filter: str, stats: Sequence[str]) -> Counter:
    """Counter of stat-value tuples over the enumerated trees."""
    unknown = set(stats) - set(STAT_NAMES)
    if unknown:
        raise UnknownStatistic(f"unknown statistics {sorted(unknown)}")
    return Counter(tuple(getattr(s, k) for k in stats) for s in tree_stats(n, filter))


def stats_csv(trees: Iterable[PlaneTree]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("encoding",) + STAT_NAMES)
    for t in trees:
        s = classify(t)
        w.writerow((t.encoding,) + tuple(getattr(s, k) for k in STAT_NAMES))
    return buf.getvalue()
