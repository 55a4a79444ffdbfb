"""Independent numeric pipeline over exact rationals.

Structure constants are evaluated first; everything downstream is computed
with operator matrices (``ad``, ``nabla_X`` as matrices, curvature operators
as commutators) on numpy object arrays of :class:`fractions.Fraction`.  The
symbolic modules compute the same quantities index by index, so agreement
between the two is a meaningful check.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .lie import LieAlgebraSpec


def _zeros(*shape) -> np.ndarray:
    a = np.empty(shape, dtype=object)
    a.fill(Fraction(0))
    return a


def structure_tensor(g: LieAlgebraSpec, assignment: Mapping[str, Fraction]) -> np.ndarray:
    n = g.dim
    C = _zeros(n, n, n)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                C[i, j, k] = g.C[i][j][k].eval(assignment)
    return C


def ad_matrices(C: np.ndarray) -> list[np.ndarray]:
    """``ad(e_i)`` as matrices acting on coordinate columns."""
    n = C.shape[0]
    return [C[i].T.copy() for i in range(n)]


def connection_operators(C: np.ndarray) -> list[np.ndarray]:
    """``nabla_{e_i}`` as matrices via ``nabla_X Y = 1/2([X,Y] - ad_X^* Y - ad_Y^* X)``."""
    n = C.shape[0]
    ad = ad_matrices(C)
    half = Fraction(1, 2)
    L = []
    for i in range(n):
        # column j of the third term is ad(e_j)^T e_i
        third = _zeros(n, n)
        for j in range(n):
            third[:, j] = ad[j].T[:, i]
        L.append((ad[i] - ad[i].T - third) * half)
    return L


def curvature_operators(C: np.ndarray, L: Sequence[np.ndarray]) -> np.ndarray:
    """``Rop[i, j] = [L_i, L_j] - sum_m C[i,j,m] L_m``; ``<R(e_i,e_j)e_k,e_l> = Rop[i,j][l,k]``."""
    n = C.shape[0]
    R = _zeros(n, n, n, n)
    for i in range(n):
        for j in range(n):
            op = L[i].dot(L[j]) - L[j].dot(L[i])
            for m in range(n):
                if C[i, j, m] != 0:
                    op = op - L[m] * C[i, j, m]
            R[i, j] = op
    return R


def curvature_components(R_ops: np.ndarray) -> np.ndarray:
    """Reorder operator entries into ``<R(e_i,e_j)e_k,e_l>``."""
    return R_ops.transpose(0, 1, 3, 2)


def ricci_matrix(Rc: np.ndarray) -> np.ndarray:
    n = Rc.shape[0]
    ric = _zeros(n, n)
    for i in range(n):
        for j in range(n):
            ric[i, j] = sum((Rc[i, k, k, j] for k in range(n)), Fraction(0))
    return (ric + ric.T) * Fraction(1, 2)


def bracket_numeric(C: np.ndarray, v: np.ndarray, w: np.ndarray) -> np.ndarray:
    n = C.shape[0]
    out = _zeros(n)
    for k in range(n):
        out[k] = v.dot(C[:, :, k]).dot(w)
    return out


def nijenhuis_numeric(C: np.ndarray, J: np.ndarray, v: np.ndarray, w: np.ndarray) -> np.ndarray:
    Jv, Jw = J.dot(v), J.dot(w)
    return (
        bracket_numeric(C, Jv, Jw)
        - J.dot(bracket_numeric(C, Jv, w))
        - J.dot(bracket_numeric(C, v, Jw))
        - bracket_numeric(C, v, w)
    )


def nabla_J_operators(L: Sequence[np.ndarray], J: np.ndarray) -> list[np.ndarray]:
    """``nabla_{e_i} J = [L_i, J]``; column ``j`` is ``(nabla_{e_i}J)(e_j)``."""
    return [Li.dot(J) - J.dot(Li) for Li in L]


def second_fundamental_numeric(L: Sequence[np.ndarray], inside: Sequence[int], target: Sequence[int]) -> dict:
    n = len(L)
    P = _zeros(n, n)
    for t in target:
        P[t, t] = Fraction(1)
    out = {}
    for pos, a in enumerate(inside):
        for b in inside[pos:]:
            out[(a, b)] = P.dot(L[a][:, b] + L[b][:, a]) * Fraction(1, 2)
    return out


def random_assignment(names: Sequence[str], rng: random.Random, bound: int = 9) -> dict[str, Fraction]:
    """Random small rationals (numerators in ``[-bound, bound]``, denominators 1..4)."""
    return {n: Fraction(rng.randint(-bound, bound), rng.randint(1, 4)) for n in names}


def numeric_quantities(g: LieAlgebraSpec, assignment: Mapping[str, Fraction], J_matrices=()) -> dict:
    """Everything the symbolic pipeline reports, evaluated through matrices."""
    C = structure_tensor(g, assignment)
    L = connection_operators(C)
    Rc = curvature_components(curvature_operators(C, L))
    ric = ricci_matrix(Rc)
    n = g.dim
    out = {
        "structure": C,
        "connection": np.stack([L[i].T for i in range(n)]),  # [i, j, k] = <nabla_i e_j, e_k>
        "curvature": Rc,
        "ricci": ric,
        "scalar": sum((ric[i, i] for i in range(n)), Fraction(0)),
    }
    eye = [np.array([Fraction(int(i == k)) for k in range(n)], dtype=object) for i in range(n)]
    for name, J in J_matrices:
        Jm = np.array(J, dtype=object)
        out[f"nijenhuis.{name}"] = {
            (i, j): nijenhuis_numeric(C, Jm, eye[i], eye[j]) for i in range(n) for j in range(i + 1, n)
        }
        out[f"nabla_J.{name}"] = nabla_J_operators(L, Jm)
    if g.vertical is not None:
        vert = sorted(g.vertical)
        hor = [k for k in range(n) if k not in vert]
        out["B_vertical"] = second_fundamental_numeric(L, vert, hor)
        out["B_horizontal"] = second_fundamental_numeric(L, hor, vert)
    return out
