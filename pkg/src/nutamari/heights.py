"""Height functions on arcs: exact rational weights whose exchange
inequalities make the tree complex a regular triangulation."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Optional, Union

from .core import Arc, IndexPair
from .trees import arc_length, crosses_cyclic, ground_arcs


class _Infinity:
    """The single non-finite height value: bigger than every Fraction,
    absorbed by addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("inf - inf")
        return self

    def __repr__(self):
        return "inf"


INF = _Infinity()
ExtRat = Union[Fraction, _Infinity]


class HeightFunction:
    """Finite rational heights on the ground arcs of a pair; in mode A
    non-increasing arcs are implicitly at height ∞."""

    def __init__(self, pair: IndexPair, table: dict[Arc, Fraction]):
        self.pair = pair
        self.table = {arc: Fraction(v) for arc, v in table.items()}
        needed = set(ground_arcs(pair))
        if set(self.table) != needed:
            missing = needed - set(self.table)
            extra = set(self.table) - needed
            raise ValueError(
                f"height table mismatch for {pair.label()}: missing {sorted(missing)}, "
                f"unexpected {sorted(extra)}"
            )

    def value(self, i: int, j: int) -> ExtRat:
        arc = (i, j)
        if arc in self.table:
            return self.table[arc]
        if self.pair.mode == "A" and i in self.pair.I and j in self.pair.J:
            return INF
        raise KeyError(f"({i}, {j}) is not an arc of {self.pair.label()}")

    def items(self):
        return sorted(self.table.items())

    def to_json_entries(self) -> dict[str, str]:
        return {f"{i},{j}": str(v) for (i, j), v in self.items()}

    @classmethod
    def from_json_entries(cls, pair: IndexPair, entries: dict[str, str]) -> "HeightFunction":
        table = {}
        for key, sval in entries.items():
            i, j = (int(t) for t in key.split(","))
            if sval.strip() == "inf":
                continue
            table[(i, j)] = Fraction(sval)
        return cls(pair, table)


def default_height(p: IndexPair) -> HeightFunction:
    """Mode A: h(i, j̄) = −(j−i)².  Mode B: h = f(ℓ) for the strictly
    increasing strictly concave f(ℓ) = ℓ(2(n+1) − ℓ) of the arc length."""
    if p.mode == "A":
        table = {(i, j): Fraction(-((j - i) ** 2)) for i, j in ground_arcs(p)}
    else:
        m = 2 * (p.n + 1)
        table = {
            a: Fraction(arc_length(a, p.n) * (m - arc_length(a, p.n)))
            for a in ground_arcs(p)
        }
    return HeightFunction(p, table)


Violation = tuple[tuple[Arc, Arc], ExtRat, ExtRat]


def first_height_violation(h: HeightFunction) -> Optional[Violation]:
    """A nested/non-crossing pair of arcs that fails to be strictly
    cheaper than its exchange, or None."""
    p = h.pair
    if p.mode == "A":
        for i, i2 in combinations(p.I, 2):
            for j2 in p.J:
                if not i2 <= j2:
                    continue
                for j in p.J:
                    if not j2 < j:
                        continue
                    lhs = h.value(i, j) + h.value(i2, j2)
                    rhs = h.value(i2, j) + h.value(i, j2)
                    if not lhs < rhs:
                        return (((i, j), (i2, j2)), lhs, rhs)
        return None
    for a, b in combinations(ground_arcs(p), 2):
        if a[0] == b[0] or a[1] == b[1]:
            continue
        if crosses_cyclic(a, b, p.n):
            continue
        lhs = h.value(*a) + h.value(*b)
        rhs = h.value(b[0], a[1]) + h.value(a[0], b[1])
        if not lhs < rhs:
            return ((a, b), lhs, rhs)
    return None


def is_valid_height(h: HeightFunction) -> bool:
    return first_height_violation(h) is None


def first_regularity_violation(trees, h: HeightFunction) -> Optional[Violation]:
    """Among arc pairs that span an edge of the complex (co-facet arcs with
    distinct endpoints on both sides), find one whose exchange inequality
    fails; None means the triangulation is regular for h."""
    checked = set()
    for t in trees:
        for a, b in combinations(t, 2):
            if a[0] == b[0] or a[1] == b[1]:
                continue
            key = (a, b) if a <= b else (b, a)
            if key in checked:
                continue
            checked.add(key)
            a, b = key
            lhs = h.value(*a) + h.value(*b)
            rhs = h.value(b[0], a[1]) + h.value(a[0], b[1])
            if not lhs < rhs:
                return ((a, b), lhs, rhs)
    return None


def verify_regular(trees, h: HeightFunction) -> bool:
    return first_regularity_violation(trees, h) is None
