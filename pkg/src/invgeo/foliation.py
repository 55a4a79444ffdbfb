"""Second fundamental forms of a vertical/horizontal split and foliation predicates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .constraints import ConstraintSet
from .lie import LieAlgebraSpec, Vector, is_involutive
from .riemannian import ConnectionTable

PREDICATES = ("riemannian", "minimal", "totally_geodesic", "horizontal_integrable")


@dataclass(frozen=True)
class DistributionSplit:
    vertical: tuple[int, ...]
    horizontal: tuple[int, ...]

    @classmethod
    def from_vertical(cls, dim: int, vertical: Iterable[int]) -> "DistributionSplit":
        vert = tuple(sorted(set(vertical)))
        if not vert or len(vert) >= dim:
            raise ValueError("vertical distribution must be nonempty and proper")
        if any(not 0 <= v < dim for v in vert):
            raise ValueError("vertical index out of range")
        return cls(vert, tuple(k for k in range(dim) if k not in vert))

    @classmethod
    def of(cls, g: LieAlgebraSpec) -> "DistributionSplit":
        if g.vertical is None:
            raise ValueError("no vertical split declared")
        return cls.from_vertical(g.dim, g.vertical)


@dataclass(frozen=True, eq=False)
class SecondFundamentalForm:
    which: str  # 'vertical' or 'horizontal'
    values: dict  # (a, b) with a <= b -> Vector

    def __call__(self, a: int, b: int) -> Vector:
        return self.values[(a, b) if a <= b else (b, a)]


def _check_split(g: LieAlgebraSpec, split: DistributionSplit):
    if set(split.vertical) & set(split.horizontal):
        raise ValueError("split is not disjoint")
    if sorted(split.vertical + split.horizontal) != list(range(g.dim)):
        raise ValueError("split does not cover the basis")
    if not split.vertical or not split.horizontal:
        raise ValueError("vertical distribution must be nonempty and proper")


def _project(v: Vector, onto: Iterable[int]) -> Vector:
    keep = set(onto)
    zero = v[0] - v[0]
    return Vector(c if k in keep else zero for k, c in enumerate(v))


def second_fundamental_form(
    g: LieAlgebraSpec, conn: ConnectionTable, split: DistributionSplit, which: str
) -> SecondFundamentalForm:
    """``B(U,V) = 1/2 P(nabla_U V + nabla_V U)`` projected on the complement."""
    _check_split(g, split)
    if which == "vertical":
        inside, target = split.vertical, split.horizontal
    elif which == "horizontal":
        inside, target = split.horizontal, split.vertical
    else:
        raise ValueError(f"unknown distribution {which!r}")
    values = {}
    for pos, a in enumerate(inside):
        for b in inside[pos:]:
            s = (conn.nabla(a, b) + conn.nabla(b, a)).scale(Fraction(1, 2))
            values[(a, b)] = _project(s, target)
    return SecondFundamentalForm(which, values)


def conformality(
    g: LieAlgebraSpec, conn: ConnectionTable, split: DistributionSplit
) -> tuple[ConstraintSet, Optional[Vector]]:
    """Constraints for ``B^H = g (x) V`` and the common vector ``V`` when they vanish."""
    B = second_fundamental_form(g, conn, split, "horizontal")
    hor = split.horizontal
    first = B(hor[0], hor[0])
    polys = []
    for pos, a in enumerate(hor):
        polys.extend(B(a, a) - first)
        for b in hor[pos + 1:]:
            polys.extend(B(a, b))
    cs = ConstraintSet(g.params, polys)
    return cs, (first if cs.is_empty() else None)


def predicate(g: LieAlgebraSpec, conn: ConnectionTable, split: DistributionSplit, name: str) -> ConstraintSet:
    _check_split(g, split)
    if name == "riemannian":
        cs, _ = conformality(g, conn, split)
        B = second_fundamental_form(g, conn, split, "horizontal")
        h0 = split.horizontal[0]
        return cs | ConstraintSet(g.params, B(h0, h0))
    if name == "minimal":
        B = second_fundamental_form(g, conn, split, "vertical")
        trace = Vector.zero(g.params, g.dim)
        for a in split.vertical:
            trace = trace + B(a, a)
        return ConstraintSet(g.params, trace)
    if name == "totally_geodesic":
        B = second_fundamental_form(g, conn, split, "vertical")
        return ConstraintSet(g.params, (c for v in B.values.values() for c in v))
    if name == "horizontal_integrable":
        return is_involutive(g, split.horizontal)
    raise ValueError(f"unknown predicate {name!r}; expected one of {', '.join(PREDICATES)}")
