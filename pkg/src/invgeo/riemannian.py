"""Levi-Civita connection, curvature and Ricci data in an orthonormal frame.

Conventions: ``R(X,Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X,Y]`` and
``Ric(X,Y) = sum_k <R(X,e_k)e_k, Y>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constraints import ConstraintSet
from .lie import LieAlgebraSpec, Vector
from .poly import Polynomial

HALF = Fraction(1, 2)


@dataclass(frozen=True, eq=False)
class ConnectionTable:
    """``gamma[i][j][k] = <nabla_{e_i} e_j, e_k>``."""

    gamma: tuple

    @property
    def dim(self) -> int:
        return len(self.gamma)

    def nabla(self, i: int, j: int) -> Vector:
        return Vector(self.gamma[i][j])


@dataclass(frozen=True, eq=False)
class CurvatureTensor:
    """``R[i][j][k][l] = <R(e_i,e_j)e_k, e_l>``."""

    R: tuple


@dataclass(frozen=True, eq=False)
class RicciTensor:
    ric: tuple

    def __getitem__(self, ij):
        i, j = ij
        return self.ric[i][j]


@dataclass(frozen=True, eq=False)
class EinsteinDefect:
    """Off-diagonal Ricci entries and diagonal gaps ``Ric_11 - Ric_ii``.

    ``gaps`` keeps the raw differences (keyed by ``i``); the constraint sets
    hold their normalized forms.
    """

    off_diagonal: ConstraintSet
    diagonal_gaps: ConstraintSet
    gaps: dict

    def is_empty(self) -> bool:
        return self.off_diagonal.is_empty() and self.diagonal_gaps.is_empty()

    def constraints(self) -> ConstraintSet:
        return self.off_diagonal | self.diagonal_gaps


def levi_civita(g: LieAlgebraSpec) -> ConnectionTable:
    """Koszul formula: ``2<nabla_i e_j, e_k> = C[k][i][j] + C[k][j][i] + C[i][j][k]``."""
    n, C = g.dim, g.C
    gamma = tuple(
        tuple(
            tuple((C[k][i][j] + C[k][j][i] + C[i][j][k]) * HALF for k in range(n))
            for j in range(n)
        )
        for i in range(n)
    )
    return ConnectionTable(gamma)


def curvature(g: LieAlgebraSpec, conn: ConnectionTable) -> CurvatureTensor:
    n, C, G = g.dim, g.C, conn.gamma
    zero = g.params.zero
    R = [[[[zero] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                for l in range(n):
                    s = zero
                    for m in range(n):
                        s = s + G[j][k][m] * G[i][m][l] - G[i][k][m] * G[j][m][l] - C[i][j][m] * G[m][k][l]
                    R[i][j][k][l] = s
                    R[j][i][k][l] = -s
    return CurvatureTensor(tuple(tuple(tuple(tuple(x) for x in b) for b in a) for a in R))


def sectional(g: LieAlgebraSpec, R: CurvatureTensor, i: int, j: int) -> Polynomial:
    """``<R(e_i,e_j)e_j, e_i>``; the frame is orthonormal."""
    if i == j:
        raise ValueError("sectional curvature needs two distinct basis vectors")
    return R.R[i][j][j][i]


def ricci(g: LieAlgebraSpec, R: CurvatureTensor) -> RicciTensor:
    """Symmetric part of ``sum_k <R(e_i,e_k)e_k, e_j>``.

    The trace is already symmetric whenever the Jacobi identity holds; for
    bare antisymmetric tensors only its symmetric part is kept.
    """
    n = g.dim
    zero = g.params.zero
    trace = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            s = zero
            for k in range(n):
                s = s + R.R[i][k][k][j]
            trace[i][j] = s
    ric = tuple(
        tuple(trace[i][j] if i == j else (trace[i][j] + trace[j][i]) * HALF for j in range(n))
        for i in range(n)
    )
    return RicciTensor(ric)


def scalar_curvature(ric: RicciTensor) -> Polynomial:
    n = len(ric.ric)
    s = ric.ric[0][0]
    for i in range(1, n):
        s = s + ric.ric[i][i]
    return s


def einstein_defect(ric: RicciTensor) -> EinsteinDefect:
    r = ric.ric
    n = len(r)
    table = r[0][0].table
    off = [r[i][j] for i in range(n) for j in range(i + 1, n)]
    gaps = {i: r[0][0] - r[i][i] for i in range(1, n)}
    return EinsteinDefect(ConstraintSet(table, off), ConstraintSet(table, gaps.values()), gaps)
