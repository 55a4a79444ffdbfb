"""Adapted almost Hermitian structures, Nijenhuis tensor and Kähler defect."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constraints import ConstraintSet
from .lie import LieAlgebraSpec, Vector, bracket
from .riemannian import ConnectionTable


@dataclass(frozen=True)
class AlmostComplexStructure:
    """Constant matrix with ``J e_j = sum_k J[k][j] e_k``."""

    J: tuple
    name: str = "J"

    def __post_init__(self):
        n = len(self.J)
        M = self.J
        for i in range(n):
            for j in range(n):
                sq = sum(M[i][k] * M[k][j] for k in range(n))
                orth = sum(M[k][i] * M[k][j] for k in range(n))
                if sq != (-1 if i == j else 0):
                    raise ValueError(f"{self.name}: J^2 != -I")
                if orth != (1 if i == j else 0):
                    raise ValueError(f"{self.name}: J is not orthogonal")

    @classmethod
    def from_images(cls, dim: int, images: dict[int, tuple[int, int]], name: str = "J"):
        """``images[j] = (k, sign)`` meaning ``J e_j = sign * e_k``."""
        M = [[Fraction(0)] * dim for _ in range(dim)]
        for j, (k, s) in images.items():
            M[k][j] = Fraction(s)
        return cls(tuple(tuple(r) for r in M), name)

    def apply(self, v: Vector) -> Vector:
        n = len(self.J)
        table = v[0].table
        out = []
        for k in range(n):
            s = table.zero
            for j in range(n):
                if self.J[k][j]:
                    s = s + v[j].scale(self.J[k][j])
            out.append(s)
        return Vector(out)


@dataclass(frozen=True, eq=False)
class NijenhuisTensor:
    """``N[(i, j)]`` for ``i < j``."""

    N: dict

    def __call__(self, i: int, j: int) -> Vector:
        if i == j:
            v = next(iter(self.N.values()))
            return v - v
        if i < j:
            return self.N[(i, j)]
        return -self.N[(j, i)]


@dataclass(frozen=True, eq=False)
class KahlerDefect:
    """Entries of ``(nabla_{e_i} J)(e_j)`` and their normalized constraint set."""

    components: ConstraintSet
    vectors: dict  # (i, j) -> Vector


def _split(g: LieAlgebraSpec) -> tuple[list[int], list[int]]:
    if g.vertical is None:
        raise ValueError("a vertical split is required")
    vert = list(g.vertical)
    hor = [k for k in range(g.dim) if k not in vert]
    return hor, vert


def canonical_structures(g: LieAlgebraSpec) -> tuple[AlmostComplexStructure, AlmostComplexStructure]:
    """The two adapted structures ``J1`` and ``J2`` for a 2+2 split."""
    if g.dim != 4:
        raise ValueError("adapted structures need a 4-dimensional algebra")
    hor, vert = _split(g)
    if len(vert) != 2:
        raise ValueError("adapted structures need a (2,2) split")
    (x, y), (z, w) = hor, vert
    j1 = AlmostComplexStructure.from_images(4, {x: (y, 1), y: (x, -1), z: (w, 1), w: (z, -1)}, "J1")
    j2 = AlmostComplexStructure.from_images(4, {x: (y, 1), y: (x, -1), w: (z, 1), z: (w, -1)}, "J2")
    return j1, j2


def nijenhuis(g: LieAlgebraSpec, J: AlmostComplexStructure) -> NijenhuisTensor:
    """``N(v,w) = [Jv,Jw] - J[Jv,w] - J[v,Jw] - [v,w]`` on basis pairs."""
    n = g.dim
    e = [g.e(i) for i in range(n)]
    Je = [J.apply(v) for v in e]
    N = {}
    for i in range(n):
        for j in range(i + 1, n):
            N[(i, j)] = (
                bracket(g, Je[i], Je[j])
                - J.apply(bracket(g, Je[i], e[j]))
                - J.apply(bracket(g, e[i], Je[j]))
                - bracket(g, e[i], e[j])
            )
    return NijenhuisTensor(N)


def integrability_constraints(g: LieAlgebraSpec, J: AlmostComplexStructure) -> ConstraintSet:
    N = nijenhuis(g, J)
    return ConstraintSet(g.params, (c for v in N.N.values() for c in v))


def covariant_J(g: LieAlgebraSpec, conn: ConnectionTable, J: AlmostComplexStructure) -> KahlerDefect:
    """``(nabla_{e_i} J)(e_j) = nabla_{e_i}(J e_j) - J(nabla_{e_i} e_j)``."""
    n = g.dim
    vectors = {}
    for i in range(n):
        for j in range(n):
            # nabla_{e_i}(J e_j) with constant coefficients J[k][j]
            lhs = Vector.zero(g.params, n)
            for k in range(n):
                if J.J[k][j]:
                    lhs = lhs + conn.nabla(i, k).scale(J.J[k][j])
            vectors[(i, j)] = lhs - J.apply(conn.nabla(i, j))
    comps = ConstraintSet(g.params, (c for v in vectors.values() for c in v))
    return KahlerDefect(comps, vectors)


def is_kahler(defect: KahlerDefect) -> bool:
    return defect.components.is_empty()


def structure_by_name(g: LieAlgebraSpec, name: str) -> AlmostComplexStructure:
    j1, j2 = canonical_structures(g)
    try:
        return {"J1": j1, "J2": j2}[name.upper()]
    except KeyError:
        raise ValueError(f"unknown structure {name!r}; expected J1 or J2") from None

