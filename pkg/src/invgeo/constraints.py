"""Constraint sets: polynomials whose simultaneous vanishing encodes a predicate."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

from .poly import ParameterTable, Polynomial, poly_to_string


def normalize(p: Polynomial) -> Polynomial:
    """Scale ``p`` to integer coefficients with gcd 1 and a positive leading term."""
    if p.is_zero():
        return p
    coeffs = list(p.terms.values())
    den = lcm(*(c.denominator for c in coeffs))
    num = gcd(*(int(c * den) for c in coeffs))
    factor = Fraction(den, num)
    if p.leading_coefficient() < 0:
        factor = -factor
    return p.scale(factor)


class ConstraintSet:
    """A deduplicated, normalized set of polynomials.

    Empty means the predicate holds identically in the parameters.
    """

    __slots__ = ("table", "_items")

    def __init__(self, table: ParameterTable, polys: Iterable[Polynomial] = ()):
        self.table = table
        items = {}
        for p in polys:
            if p.table != table:
                raise ValueError("constraint uses a different parameter table")
            q = normalize(p)
            if q:
                items[q] = None
        self._items = frozenset(items)

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __contains__(self, p: Polynomial) -> bool:
        return normalize(p) in self._items

    def __eq__(self, other):
        if isinstance(other, ConstraintSet):
            return self.table == other.table and self._items == other._items
        return NotImplemented

    def __hash__(self):
        return hash(self._items)

    def __or__(self, other: "ConstraintSet") -> "ConstraintSet":
        return ConstraintSet(self.table, list(self._items) + list(other._items))

    def is_empty(self) -> bool:
        return not self._items

    def sorted(self) -> list[Polynomial]:
        return sorted(self._items, key=lambda p: (p.degree(), len(p.terms), poly_to_string(p)))

    def strings(self) -> list[str]:
        return [poly_to_string(p) for p in self.sorted()]

    def subs(self, mapping: Mapping) -> "ConstraintSet":
        return ConstraintSet(self.table, (p.subs(mapping) for p in self._items))

    def vanishes_at(self, assignment: Mapping) -> bool:
        return all(p.eval(assignment) == 0 for p in self._items)

    def __repr__(self) -> str:
        return "{" + ", ".join(self.strings()) + "}"


def _linear_rows(polys: Iterable[Polynomial], nvars: int) -> list[list[Fraction]]:
    rows = []
    for p in polys:
        row = [Fraction(0)] * (nvars + 1)
        for m, c in p.terms.items():
            if not m:
                row[nvars] = c
            elif len(m) == 1 and m[0][1] == 1:
                row[m[0][0]] = c
            else:
                raise ValueError(f"constraint {p} is not affine-linear")
        rows.append(row)
    return rows


def _rref(rows: list[list[Fraction]]) -> list[tuple[Fraction, ...]]:
    rows = [list(r) for r in rows]
    out = []
    ncols = len(rows[0]) if rows else 0
    r = 0
    for col in range(ncols):
        pivot = next((k for k in range(r, len(rows)) if rows[k][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        r += 1
    for row in rows[:r]:
        out.append(tuple(row))
    return out


def linear_span_equal(a: ConstraintSet, b: ConstraintSet) -> bool:
    """Whether two sets of affine-linear constraints span the same space."""
    n = len(a.table)
    return _rref(_linear_rows(a, n)) == _rref(_linear_rows(b, n))


def linear_span_contains(big: ConstraintSet, small: ConstraintSet) -> bool:
    """Whether every constraint of ``small`` is a linear combination of ``big``."""
    n = len(big.table)
    base = _rref(_linear_rows(big, n))
    both = _rref(_linear_rows(list(big) + list(small), n))
    return base == both
