"""Shared strategies, random generators and the symbolic/numeric comparison."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from invgeo import hermitian, oracle, riemannian
from invgeo.foliation import DistributionSplit, second_fundamental_form
from invgeo.lie import LieAlgebraSpec
from invgeo.poly import ParameterTable, Polynomial

TABLE = ParameterTable(["x", "y", "z"])


@st.composite
def polynomials(draw, table=TABLE, max_terms=4, max_exp=3):
    n = len(table)
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = draw(st.lists(st.integers(0, max_exp), min_size=n, max_size=n))
        mono = tuple((i, e) for i, e in enumerate(exps) if e)
        num = draw(st.integers(-6, 6))
        den = draw(st.integers(1, 4))
        terms[mono] = Fraction(num, den)
    return Polynomial(table, terms)


assignments = st.fixed_dictionaries(
    {n: st.fractions(min_value=-5, max_value=5, max_denominator=6) for n in TABLE.names}
)


def random_spec(rng: random.Random, dim: int = 4, table: ParameterTable = TABLE) -> LieAlgebraSpec:
    """Antisymmetric structure tensor with small-integer polynomial entries."""
    gens = table.vars()
    basis = tuple(f"e{k}" for k in range(dim))
    brackets = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            value = []
            for _ in range(dim):
                p = table.const(rng.randint(-3, 3))
                for v in gens:
                    p = p + v.scale(rng.randint(-2, 2))
                value.append(p)
            brackets[(basis[i], basis[j])] = value
    vertical = basis[-2:] if dim >= 3 else None
    return LieAlgebraSpec.from_brackets(basis, table, brackets, vertical, "random")


def random_assignment(g: LieAlgebraSpec, rng: random.Random) -> dict:
    return oracle.random_assignment(g.params.names, rng)


def symbolic_vs_numeric(g: LieAlgebraSpec, assignment: dict) -> list[str]:
    """Names of quantities where evaluated symbolic output differs from the matrix pipeline."""
    n = g.dim
    conn = riemannian.levi_civita(g)
    R = riemannian.curvature(g, conn)
    ric = riemannian.ricci(g, R)
    Js = hermitian.canonical_structures(g) if g.dim == 4 and g.vertical and len(g.vertical) == 2 else ()
    num = oracle.numeric_quantities(g, assignment, [(J.name, J.J) for J in Js])
    ev = lambda p: p.eval(assignment)
    bad = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if ev(conn.gamma[i][j][k]) != num["connection"][i, j, k]:
                    bad.append(f"connection[{i}][{j}][{k}]")
                for l in range(n):
                    if ev(R.R[i][j][k][l]) != num["curvature"][i, j, k, l]:
                        bad.append(f"curvature[{i}][{j}][{k}][{l}]")
            if ev(ric[i, j]) != num["ricci"][i, j]:
                bad.append(f"ricci[{i}][{j}]")
    if ev(riemannian.scalar_curvature(ric)) != num["scalar"]:
        bad.append("scalar")
    for J in Js:
        N = hermitian.nijenhuis(g, J)
        for (i, j), v in N.N.items():
            if [ev(c) for c in v] != list(num[f"nijenhuis.{J.name}"][(i, j)]):
                bad.append(f"nijenhuis.{J.name}[{i}][{j}]")
        kd = hermitian.covariant_J(g, conn, J)
        for (i, j), v in kd.vectors.items():
            if [ev(c) for c in v] != list(num[f"nabla_J.{J.name}"][i][:, j]):
                bad.append(f"nabla_J.{J.name}[{i}][{j}]")
    if g.vertical is not None:
        split = DistributionSplit.of(g)
        for which, key in (("vertical", "B_vertical"), ("horizontal", "B_horizontal")):
            form = second_fundamental_form(g, conn, split, which)
            for ab, v in form.values.items():
                if [ev(c) for c in v] != list(num[key][ab]):
                    bad.append(f"{key}{ab}")
    return bad


def P(g, text):
    """Parse a scalar expression over ``g``'s parameters."""
    from invgeo.expr import parse_expression

    return parse_expression(text, g.params)


def V(g, text):
    """Parse a vector expression over ``g``'s basis."""
    from invgeo.expr import parse_bracket_value
    from invgeo.lie import Vector

    return Vector(parse_bracket_value(text, g.basis, g.params))
