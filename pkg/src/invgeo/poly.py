"""Exact multivariate polynomials over the rationals.

A :class:`Polynomial` is a sparse map from monomials to nonzero
:class:`fractions.Fraction` coefficients, tied to a :class:`ParameterTable`
that fixes the variable names and their order.  A monomial is a sorted tuple
of ``(parameter index, exponent)`` pairs with positive exponents; the empty
tuple is the constant monomial.

Polynomials are immutable and hashable; two polynomials are equal exactly
when their term maps are identical.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Monomial = tuple[tuple[int, int], ...]
Scalar = Union[int, Fraction]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ParameterMismatch(ValueError):
    """Raised when polynomials over different parameter tables are combined."""


@dataclass(frozen=True)
class ParameterTable:
    """Ordered list of distinct parameter names."""

    names: tuple[str, ...]

    def __init__(self, names: Iterable[str] = ()):
        names = tuple(names)
        for n in names:
            if not _IDENT.match(n):
                raise ValueError(f"invalid parameter name {n!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate parameter names in {names}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown parameter {name!r}") from None

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return Polynomial(self, {(): Fraction(1)})

    def const(self, value: Scalar) -> "Polynomial":
        return Polynomial(self, {(): Fraction(value)})

    def var(self, name: str) -> "Polynomial":
        return Polynomial(self, {((self.index(name), 1),): Fraction(1)})

    def vars(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(n) for n in self.names)


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for i, e in m2:
        exps[i] = exps.get(i, 0) + e
    return tuple(sorted(exps.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _grlex_key(m: Monomial, nvars: int):
    # sorting ascending on this key gives descending graded-lex order
    dense = [0] * nvars
    for i, e in m:
        dense[i] = e
    return (-_mono_degree(m), tuple(-e for e in dense))


class Polynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("table", "_terms", "_hash")

    def __init__(self, table: ParameterTable, terms: Mapping[Monomial, Scalar]):
        self.table = table
        self._terms = {m: Fraction(c) for m, c in terms.items() if c != 0}
        self._hash = None

    # -- constructors -------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.table != self.table:
                raise ParameterMismatch(
                    f"parameter tables differ: {self.table.names} vs {other.table.names}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.table.const(other)
        return NotImplemented

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        return max((_mono_degree(m) for m in self._terms), default=0)

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_value(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def parameters(self) -> set[str]:
        return {self.table.names[i] for m in self._terms for i, _ in m}

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        n = len(self.table)
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0], n))

    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        return self.sorted_terms()[0][1]

    # -- ring operations ---------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.table, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.table, out)

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.table.one
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        return Polynomial(self.table, {m: c * v for m, v in self._terms.items()})

    # -- equality -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(): Fraction(other)} if other != 0 else {})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.table == other.table and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table.names, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation and substitution ---------------------------------
    def eval(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a rational assignment covering every used parameter."""
        values = {}
        for name in self.parameters():
            if name not in assignment:
                raise KeyError(f"assignment is missing parameter {name!r}")
            values[self.table.index(name)] = Fraction(assignment[name])
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c
            for i, e in m:
                t *= values[i] ** e
            total += t
        return total

    def subs(self, mapping: Mapping[str, Union["Polynomial", Scalar]]) -> "Polynomial":
        """Replace parameters by polynomials over the same table (or by scalars)."""
        repl = {}
        for name, val in mapping.items():
            i = self.table.index(name)
            repl[i] = val if isinstance(val, Polynomial) else self.table.const(val)
            if repl[i].table != self.table:
                raise ParameterMismatch("substitution value uses a different table")
        if not any(i in repl for m in self._terms for i, _ in m):
            return self
        total = self.table.zero
        for m, c in self._terms.items():
            t = self.table.const(c)
            rest = []
            for i, e in m:
                if i in repl:
                    t = t * repl[i] ** e
                else:
                    rest.append((i, e))
            total = total + t * Polynomial(self.table, {tuple(rest): 1})
        return total

    def retable(self, table: ParameterTable) -> "Polynomial":
        """Move to another table that declares every parameter in use."""
        out = {}
        for m, c in self._terms.items():
            nm = tuple(sorted((table.index(self.table.names[i]), e) for i, e in m))
            out[nm] = c
        return Polynomial(table, out)

    # -- rendering ----------------------------------------------------
    def __str__(self) -> str:
        return poly_to_string(self)

    def __repr__(self) -> str:
        return f"Polynomial({poly_to_string(self)!r})"


def _render_monomial(m: Monomial, names: tuple[str, ...]) -> str:
    return "*".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in m)


def poly_to_string(p: Polynomial) -> str:
    """Canonical rendering: descending graded-lex, ``coeff*name^exp`` terms."""
    if p.is_zero():
        return "0"
    parts = []
    for k, (m, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not m:
            body = str(a)
        elif a == 1:
            body = _render_monomial(m, p.table.names)
        else:
            body = f"{a}*{_render_monomial(m, p.table.names)}"
        if k == 0:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_neg(p: Polynomial) -> Polynomial:
    return -p


def poly_eval(p: Polynomial, assignment: Mapping[str, Scalar]) -> Fraction:
    return p.eval(assignment)
