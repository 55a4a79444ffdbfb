"""Built-in algebra families and the table of printed identities they must satisfy."""

from __future__ import annotations

from typing import Mapping

from . import hermitian
from .constraints import ConstraintSet, linear_span_equal
from .expr import parse_bracket_value, parse_expression
from .lie import LieAlgebraSpec, vector_to_string
from .poly import ParameterTable, poly_to_string
from .report import GeometryReport, build_report

FAMILIES = ("general_s3", "j1_integrable", "both_integrable", "g7", "g3")

BASIS = ("X", "Y", "Z", "W")

GENERAL_PARAMS = ("lambda", "alpha", "beta", "a", "b", "r",
                  "z1", "z2", "z3", "z4", "w1", "w2", "theta1", "theta2")

_DEFS: dict[str, tuple[tuple[str, ...], dict[tuple[str, str], str]]] = {
    "general_s3": (GENERAL_PARAMS, {
        ("W", "Z"): "lambda*W",
        ("Z", "X"): "alpha*X + beta*Y + z1*Z + w1*W",
        ("Z", "Y"): "-beta*X + alpha*Y + z2*Z + w2*W",
        ("W", "X"): "a*X + b*Y + z3*Z - z1*W",
        ("W", "Y"): "-b*X + a*Y + z4*Z - z2*W",
        ("Y", "X"): "r*X + theta1*Z + theta2*W",
    }),
    "j1_integrable": (
        ("lambda", "alpha", "beta", "a", "b", "r", "z1", "z2", "z3", "z4", "theta1", "theta2"), {
            ("W", "Z"): "lambda*W",
            ("Z", "X"): "alpha*X + beta*Y + z1*Z - (2*z2 + z3)*W",
            ("Z", "Y"): "-beta*X + alpha*Y + z2*Z + (2*z1 - z4)*W",
            ("W", "X"): "a*X + b*Y + z3*Z - z1*W",
            ("W", "Y"): "-b*X + a*Y + z4*Z - z2*W",
            ("Y", "X"): "r*X + theta1*Z + theta2*W",
        }),
    "both_integrable": (
        ("lambda", "alpha", "beta", "a", "b", "r", "z3", "z4", "theta1", "theta2"), {
            ("W", "Z"): "lambda*W",
            ("Z", "X"): "alpha*X + beta*Y - z3*W",
            ("Z", "Y"): "-beta*X + alpha*Y - z4*W",
            ("W", "X"): "a*X + b*Y + z3*Z",
            ("W", "Y"): "-b*X + a*Y + z4*Z",
            ("Y", "X"): "r*X + theta1*Z + theta2*W",
        }),
    # theta parameters first so that canonical strings list them before z2
    "g7": (("theta1", "theta2", "z2"), {
        ("Z", "X"): "-2*z2*W",
        ("Z", "Y"): "z2*Z",
        ("W", "Y"): "-z2*W",
        ("Y", "X"): "2*z2*X + theta1*Z + theta2*W",
    }),
    "g3": (("alpha", "beta", "theta2"), {
        ("W", "Z"): "-2*alpha*W",
        ("Z", "X"): "alpha*X + beta*Y",
        ("Z", "Y"): "-beta*X + alpha*Y",
        ("Y", "X"): "theta2*W",
    }),
}


def from_bracket_strings(
    basis, params: ParameterTable, brackets: Mapping[tuple[str, str], str], vertical=None, name=""
) -> LieAlgebraSpec:
    parsed = {k: parse_bracket_value(v, basis, params) for k, v in brackets.items()}
    return LieAlgebraSpec.from_brackets(basis, params, parsed, vertical, name)


def build(family: str) -> LieAlgebraSpec:
    """Construct a built-in family with symbolic parameters; vertical = {Z, W}."""
    if family not in _DEFS:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    names, brackets = _DEFS[family]
    return from_bracket_strings(BASIS, ParameterTable(names), brackets, ("Z", "W"), family)


def abelian(dim: int = 4) -> LieAlgebraSpec:
    basis = ("X", "Y", "Z", "W") if dim == 4 else tuple(f"e{k + 1}" for k in range(dim))
    vertical = basis[-2:] if dim >= 3 else None
    return LieAlgebraSpec.from_brackets(basis, ParameterTable(), {}, vertical, f"abelian{dim}")


# -- printed identities --------------------------------------------------------
#
# Each row: (name, source tag, family, substitution, report key, kind, expected).
# kind 'poly'   -> scalar expression compared as canonical strings
#      'vector' -> bracket-value expression in the basis
#      'set'    -> constraint set (list of expressions), compared normalized
#      'flag'   -> literal report value ('yes', 'no', 'ok')
#      'nonempty' -> constraint set must be nonempty

_G7_CONNECTION = {
    "X.X": "2*z2*Y",
    "X.Y": "-2*z2*X - 1/2*theta1*Z - 1/2*theta2*W",
    "X.Z": "1/2*theta1*Y + z2*W",
    "X.W": "1/2*theta2*Y - z2*Z",
    "Y.X": "1/2*theta1*Z + 1/2*theta2*W",
    "Y.Y": "0",
    "Y.Z": "-1/2*theta1*X",
    "Y.W": "-1/2*theta2*X",
    "Z.X": "1/2*theta1*Y - z2*W",
    "Z.Y": "-1/2*theta1*X + z2*Z",
    "Z.Z": "-z2*Y",
    "Z.W": "z2*X",
    "W.X": "1/2*theta2*Y - z2*Z",
    "W.Y": "-1/2*theta2*X - z2*W",
    "W.Z": "z2*X",
    "W.W": "z2*Y",
}

_G7_SECTIONAL = {
    "X^Y": "-3/4*(theta1^2 + theta2^2) - 4*z2^2",
    "X^Z": "1/4*theta1^2 - z2^2",
    "X^W": "1/4*theta2^2 - z2^2",
    "Y^Z": "1/4*theta1^2 - z2^2",
    "Y^W": "1/4*theta2^2 - z2^2",
    "Z^W": "2*z2^2",
}

_G3_CONNECTION = {
    "X.X": "alpha*Z",
    "X.Y": "-1/2*theta2*W",
    "X.Z": "-alpha*X",
    "X.W": "1/2*theta2*Y",
    "Y.X": "1/2*theta2*W",
    "Y.Y": "alpha*Z",
    "Y.Z": "-alpha*Y",
    "Y.W": "-1/2*theta2*X",
    "Z.X": "beta*Y",
    "Z.Y": "-beta*X",
    "Z.Z": "0",
    "Z.W": "0",
    "W.X": "1/2*theta2*Y",
    "W.Y": "-1/2*theta2*X",
    "W.Z": "-2*alpha*W",
    "W.W": "2*alpha*Z",
}

_G3_SECTIONAL = {
    "X^Y": "-alpha^2 - 3/4*theta2^2",
    "X^Z": "-alpha^2",
    "X^W": "1/4*theta2^2 - 2*alpha^2",
    "Y^Z": "-alpha^2",
    "Y^W": "1/4*theta2^2 - 2*alpha^2",
    "Z^W": "-4*alpha^2",
}

_S3 = "g7 family:"
_S4 = "g3 and double-integrable families:"
_NEG = (("theta2", "-2*alpha"),)
_POS = (("theta2", "2*alpha"),)

GOLDEN: list[tuple] = (
    [("g7.connection." + k, _S3 + " connection table", "g7", (), "connection." + k, "vector", v)
     for k, v in _G7_CONNECTION.items()]
    + [("g7.sectional." + k, _S3 + " sectional curvatures", "g7", (), "sectional." + k, "poly", v)
       for k, v in _G7_SECTIONAL.items()]
    + [
        ("g7.jacobi", _S3 + " example is a Lie algebra", "g7", (), "checks.jacobi", "flag", "ok"),
        ("g7.ricci.XX", _S3 + " Ric(X,X)", "g7", (), "ricci.XX", "poly", "-1/2*(theta1^2 + theta2^2) - 6*z2^2"),
        ("g7.ricci.ZZ", _S3 + " Ric(Z,Z)", "g7", (), "ricci.ZZ", "poly", "1/2*theta1^2"),
        ("g7.einstein", _S3 + " not Einstein", "g7", (), "einstein_defect.einstein", "flag", "no"),
        ("g7.nabla_J1.X.X", _S3 + " (nabla_X J1)(X)", "g7", (), "nabla_J.J1.X.X", "vector",
         "-1/2*(theta1*Z + theta2*W)"),
        ("g7.kahler.J1", _S3 + " J1 not Kahler", "g7", (), "kahler_defect.J1.kahler", "flag", "no"),
        ("g7.integrable.J1", _S3 + " J1-integrable example", "g7", (), "nijenhuis.J1.integrable", "flag", "yes"),
        ("g7.horizontal_integrable", _S3 + " H not integrable", "g7", (),
         "foliation.horizontal_integrable", "nonempty", None),
        ("g7.totally_geodesic", _S3 + " leaves not totally geodesic", "g7", (),
         "foliation.totally_geodesic", "nonempty", None),
        ("g7.minimal", _S3 + " minimal leaves", "g7", (), "foliation.minimal", "set", []),
        ("g7.conformal", _S3 + " conformal foliation", "g7", (), "foliation.conformal", "set", []),
        ("general.totally_geodesic", "general form: totally geodesic criterion", "general_s3", (), "foliation.totally_geodesic", "set",
         ["z1", "z2", "z3 + w1", "z4 + w2"]),
        ("general.riemannian", "general form: Riemannian criterion", "general_s3", (), "foliation.riemannian", "set",
         ["alpha", "a"]),
        ("general.horizontal_integrable", "general form: horizontal integrability criterion", "general_s3", (),
         "foliation.horizontal_integrable", "set", ["theta1", "theta2"]),
        ("general.minimal", "general form: minimal leaves", "general_s3", (), "foliation.minimal", "set", []),
        ("general.conformal", "general form: conformal foliation", "general_s3", (), "foliation.conformal", "set", []),
        ("general.integrable.J1", "general form: J1 integrability condition", "general_s3", (), "nijenhuis.J1.constraints", "set",
         ["2*z1 - z4 - w2", "2*z2 + z3 + w1"]),
        ("general.integrable.J2", "general form: J2 integrability condition", "general_s3", (), "nijenhuis.J2.constraints", "set",
         ["2*z1 + z4 + w2", "2*z2 - z3 - w1"]),
        ("j1_integrable.integrable.J1", "J1-integrable brackets", "j1_integrable", (),
         "nijenhuis.J1.constraints", "set", []),
        ("both_integrable.integrable.J1", _S4 + " both integrable", "both_integrable", (),
         "nijenhuis.J1.constraints", "set", []),
        ("both_integrable.integrable.J2", _S4 + " both integrable", "both_integrable", (),
         "nijenhuis.J2.constraints", "set", []),
        ("both_integrable.totally_geodesic", _S4 + " totally geodesic", "both_integrable", (),
         "foliation.totally_geodesic", "set", []),
        ("g3.jacobi", _S4 + " example is a Lie algebra", "g3", (), "checks.jacobi", "flag", "ok"),
    ]
    + [("g3.connection." + k, _S4 + " connection table", "g3", (), "connection." + k, "vector", v)
       for k, v in _G3_CONNECTION.items()]
    + [("g3.sectional." + k, _S4 + " sectional curvatures", "g3", (), "sectional." + k, "poly", v)
       for k, v in _G3_SECTIONAL.items()]
    + [
        ("g3.ricci.XX", _S4 + " Ric(X,X)", "g3", (), "ricci.XX", "poly", "-1/2*theta2^2 - 4*alpha^2"),
        ("g3.ricci.ZZ", _S4 + " Ric(Z,Z)", "g3", (), "ricci.ZZ", "poly", "-6*alpha^2"),
        ("g3.ricci.WW", _S4 + " Ric(W,W)", "g3", (), "ricci.WW", "poly", "1/2*theta2^2 - 8*alpha^2"),
        ("g3.kahler_locus.J1", _S4 + " J1 Kahler iff theta2 = -2 alpha", "g3", (),
         "kahler_defect.J1.constraints", "set", ["theta2 + 2*alpha"]),
        ("g3.kahler_locus.J2", _S4 + " J2 Kahler iff theta2 = 2 alpha", "g3", (),
         "kahler_defect.J2.constraints", "set", ["theta2 - 2*alpha"]),
        ("g3[theta2=-2alpha].kahler.J1", _S4 + " J1 Kahler", "g3", _NEG, "kahler_defect.J1.kahler", "flag", "yes"),
        ("g3[theta2=2alpha].kahler.J2", _S4 + " J2 Kahler", "g3", _POS, "kahler_defect.J2.kahler", "flag", "yes"),
        ("g3.einstein", _S4 + " not Einstein if 4 alpha^2 != theta2^2", "g3", (),
         "einstein_defect.einstein", "flag", "no"),
        ("g3[theta2=2alpha].einstein", _S4 + " Einstein locus", "g3", _POS, "einstein_defect.einstein", "flag", "yes"),
        ("g3[theta2=-2alpha].einstein", _S4 + " Einstein locus", "g3", _NEG,
         "einstein_defect.einstein", "flag", "yes"),
    ]
)


def _expected(kind: str, expected, g: LieAlgebraSpec):
    if kind == "poly":
        return poly_to_string(parse_expression(expected, g.params))
    if kind == "vector":
        return vector_to_string(parse_bracket_value(expected, g.basis, g.params), g.basis)
    if kind == "set":
        return ConstraintSet(g.params, (parse_expression(e, g.params) for e in expected)).strings()
    return expected


def _specialize(g: LieAlgebraSpec, subs) -> LieAlgebraSpec:
    if not subs:
        return g
    return g.substitute({k: parse_expression(v, g.params) for k, v in subs})


def paper_report() -> GeometryReport:
    """Compare every printed identity against the pipeline; mismatches become failures."""
    cache: dict = {}
    rep = GeometryReport(family="paper")
    checks = {}
    for name, source, family, subs, key, kind, expected in GOLDEN:
        if (family, subs) not in cache:
            g = _specialize(build(family), subs)
            cache[(family, subs)] = (g, build_report(g, family=family))
        g, r = cache[(family, subs)]
        try:
            actual = r.get(key)
        except KeyError:
            actual = "<missing>"
        if kind == "nonempty":
            ok = isinstance(actual, list) and len(actual) > 0
            exp_s, act_s = "nonempty", "{" + ", ".join(actual) + "}" if isinstance(actual, list) else str(actual)
        else:
            exp = _expected(kind, expected, g)
            ok = actual == exp
            fmt = lambda v: "{" + ", ".join(v) + "}" if isinstance(v, list) else str(v)
            exp_s, act_s = fmt(exp), fmt(actual)
        checks[name] = "ok" if ok else "FAIL"
        if not ok:
            rep.failures.append((name, exp_s, act_s))

    # both J1 and J2 integrable forces the totally geodesic conditions
    g = build("general_s3")
    j1, j2 = hermitian.canonical_structures(g)
    both = hermitian.integrability_constraints(g, j1) | hermitian.integrability_constraints(g, j2)
    tg = ConstraintSet(g.params, (parse_expression(e, g.params) for e in ("z1", "z2", "z3 + w1", "z4 + w2")))
    name = "general.both_integrable_forces_totally_geodesic"
    if linear_span_equal(both, tg):
        checks[name] = "ok"
    else:
        checks[name] = "FAIL"
        rep.failures.append((name, "{" + ", ".join(tg.strings()) + "}", "{" + ", ".join(both.strings()) + "}"))
    rep.sections["checks"] = checks
    return rep
