"""Lie algebras given by structure constants in an orthonormal frame."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .constraints import ConstraintSet
from .poly import ParameterTable, Polynomial, poly_to_string


class Vector:
    """Coordinates of a Lie-algebra element in the frame."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Polynomial]):
        self.components = tuple(components)

    @classmethod
    def zero(cls, table: ParameterTable, dim: int) -> "Vector":
        return cls([table.zero] * dim)

    @classmethod
    def basis(cls, table: ParameterTable, dim: int, i: int) -> "Vector":
        return cls(table.one if k == i else table.zero for k in range(dim))

    def __len__(self):
        return len(self.components)

    def __getitem__(self, k):
        return self.components[k]

    def __iter__(self):
        return iter(self.components)

    def _check(self, other: "Vector"):
        if len(other) != len(self):
            raise ValueError(f"dimension mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(a + b for a, b in zip(self, other))

    def __sub__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(a - b for a, b in zip(self, other))

    def __neg__(self) -> "Vector":
        return Vector(-a for a in self)

    def scale(self, c) -> "Vector":
        return Vector(c * a for a in self)

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def subs(self, mapping) -> "Vector":
        return Vector(a.subs(mapping) for a in self)

    def to_string(self, basis: Sequence[str]) -> str:
        return vector_to_string(self, basis)

    def __repr__(self):
        return f"Vector({[str(a) for a in self]})"


def vector_to_string(v: Iterable[Polynomial], basis: Sequence[str]) -> str:
    """Render as ``coeff*E + ...`` (parseable as a bracket value)."""
    parts = []
    for c, name in zip(v, basis):
        if c.is_zero():
            continue
        s = poly_to_string(c)
        neg = False
        if len(c.terms) == 1:
            if s.startswith("-"):
                neg, s = True, s[1:]
            body = name if s == "1" else f"{s}*{name}"
        else:
            body = f"({s})*{name}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


@dataclass(frozen=True, eq=False)
class LieAlgebraSpec:
    """Structure tensor ``C[i][j][k]`` with ``[e_i, e_j] = sum_k C[i][j][k] e_k``."""

    basis: tuple[str, ...]
    params: ParameterTable
    C: tuple
    vertical: Optional[tuple[int, ...]] = None
    name: str = field(default="")

    def __post_init__(self):
        n = len(self.basis)
        if len(set(self.basis)) != n:
            raise ValueError("basis names must be distinct")
        clash = set(self.basis) & set(self.params.names)
        if clash:
            raise ValueError(f"basis names collide with parameters: {sorted(clash)}")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.C[i][j][k] != -self.C[j][i][k]:
                        raise ValueError(
                            f"structure constants not antisymmetric at "
                            f"[{self.basis[i]},{self.basis[j]}]"
                        )
        if self.vertical is not None:
            if any(not 0 <= v < n for v in self.vertical):
                raise ValueError("vertical index out of range")

    @classmethod
    def from_brackets(
        cls,
        basis: Sequence[str],
        params: ParameterTable,
        brackets: Mapping[tuple[str, str], Sequence[Polynomial]],
        vertical: Optional[Sequence[str]] = None,
        name: str = "",
    ) -> "LieAlgebraSpec":
        """Build from listed brackets ``[A,B]``; reverse brackets are implied."""
        basis = tuple(basis)
        n = len(basis)
        idx = {b: k for k, b in enumerate(basis)}
        C = [[[params.zero] * n for _ in range(n)] for _ in range(n)]
        seen = set()
        for (a, b), value in brackets.items():
            i, j = idx[a], idx[b]
            if i == j:
                raise ValueError(f"diagonal bracket [{a},{a}] may not be listed")
            if (i, j) in seen or (j, i) in seen:
                raise ValueError(f"bracket [{a},{b}] listed twice")
            seen.add((i, j))
            if len(value) != n:
                raise ValueError("bracket value has wrong length")
            for k in range(n):
                C[i][j][k] = value[k]
                C[j][i][k] = -value[k]
        C = tuple(tuple(tuple(row) for row in plane) for plane in C)
        vert = tuple(idx[v] for v in vertical) if vertical is not None else None
        return cls(basis, params, C, vert, name)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, name: str) -> int:
        try:
            return self.basis.index(name)
        except ValueError:
            raise KeyError(f"unknown basis vector {name!r}") from None

    def e(self, name_or_index) -> Vector:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return Vector.basis(self.params, self.dim, i)

    def structure(self, i: int, j: int) -> Vector:
        return Vector(self.C[i][j])

    def substitute(self, mapping) -> "LieAlgebraSpec":
        """Specialize parameters (values: Polynomial over ``params`` or rationals)."""
        C = tuple(
            tuple(tuple(c.subs(mapping) for c in row) for row in plane) for plane in self.C
        )
        return LieAlgebraSpec(self.basis, self.params, C, self.vertical, self.name)

    def with_vertical(self, vertical: Optional[Sequence[int]]) -> "LieAlgebraSpec":
        v = tuple(vertical) if vertical is not None else None
        return LieAlgebraSpec(self.basis, self.params, self.C, v, self.name)


def bracket(g: LieAlgebraSpec, v: Vector, w: Vector) -> Vector:
    """Bilinear extension of the structure constants."""
    if len(v) != g.dim or len(w) != g.dim:
        raise ValueError("dimension mismatch")
    n = g.dim
    out = [g.params.zero] * n
    for i in range(n):
        if v[i].is_zero():
            continue
        for j in range(n):
            if w[j].is_zero() or i == j:
                continue
            vw = v[i] * w[j]
            for k in range(n):
                c = g.C[i][j][k]
                if c:
                    out[k] = out[k] + vw * c
    return Vector(out)


def jacobi_residual(g: LieAlgebraSpec) -> list[tuple[tuple[int, int, int], Vector]]:
    """Nonzero cyclic sums ``[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]``."""
    n = g.dim
    e = [g.e(i) for i in range(n)]
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                r = (
                    bracket(g, g.structure(i, j), e[k])
                    + bracket(g, g.structure(j, k), e[i])
                    + bracket(g, g.structure(k, i), e[j])
                )
                if not r.is_zero():
                    out.append(((i, j, k), r))
    return out


def is_involutive(g: LieAlgebraSpec, indices: Iterable[int]) -> ConstraintSet:
    """Complementary components of pairwise brackets within ``span(indices)``."""
    idx = sorted(set(indices))
    if any(not 0 <= i < g.dim for i in idx):
        raise ValueError("index out of range")
    comp = [k for k in range(g.dim) if k not in idx]
    polys = []
    for a, i in enumerate(idx):
        for j in idx[a + 1:]:
            polys.extend(g.C[i][j][k] for k in comp)
    return ConstraintSet(g.params, polys)
