"""Exact curvature, Hermitian and foliation data for left-invariant metrics on Lie groups."""

from .algebra_io import (
    AlgebraDocument,
    parse_algebra_file,
    parse_report,
    serialize_algebra,
    serialize_report,
)
from .constraints import ConstraintSet
from .expr import ParseError, parse_bracket_value, parse_expression
from .families import build, paper_report
from .lie import LieAlgebraSpec, Vector, bracket, is_involutive, jacobi_residual
from .poly import ParameterTable, Polynomial, poly_to_string
from .report import GeometryReport, build_report

__all__ = [
    "AlgebraDocument",
    "ConstraintSet",
    "GeometryReport",
    "LieAlgebraSpec",
    "ParameterTable",
    "ParseError",
    "Polynomial",
    "Vector",
    "bracket",
    "build",
    "build_report",
    "is_involutive",
    "jacobi_residual",
    "paper_report",
    "parse_algebra_file",
    "parse_bracket_value",
    "parse_expression",
    "parse_report",
    "poly_to_string",
    "serialize_algebra",
    "serialize_report",
]
