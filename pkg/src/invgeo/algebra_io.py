"""Algebra description files and report serialization.

Algebra file (line oriented, ``#`` comments)::

    dim 4
    basis X Y Z W
    params z2 theta1 theta2
    metric orthonormal
    bracket Z X = -2*z2*W
    vertical Z W
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .expr import ParseError, parse_bracket_value
from .lie import LieAlgebraSpec, vector_to_string
from .poly import ParameterTable
from .report import SECTIONS, GeometryReport

_DIRECTIVES = ("dim", "basis", "params", "metric", "bracket", "vertical")


@dataclass(eq=False)
class AlgebraDocument:
    dim: int
    basis: tuple[str, ...]
    params: ParameterTable
    brackets: list  # (i, j, list[Polynomial])
    vertical: Optional[tuple[int, ...]] = None
    source_positions: dict = field(default_factory=dict)

    def _canonical(self):
        entries = {}
        for i, j, value in self.brackets:
            if i > j:
                i, j, value = j, i, [-c for c in value]
            entries[(i, j)] = tuple(value)
        return (self.dim, self.basis, self.params.names, entries,
                tuple(sorted(self.vertical)) if self.vertical is not None else None)

    def __eq__(self, other):
        if not isinstance(other, AlgebraDocument):
            return NotImplemented
        return self._canonical() == other._canonical()

    def to_spec(self, name: str = "") -> LieAlgebraSpec:
        brackets = {(self.basis[i], self.basis[j]): v for i, j, v in self.brackets}
        vert = [self.basis[k] for k in self.vertical] if self.vertical is not None else None
        return LieAlgebraSpec.from_brackets(self.basis, self.params, brackets, vert, name)


def parse_algebra_file(text: str) -> AlgebraDocument:
    dim = None
    basis = None
    params = None
    metric = False
    vertical = None
    brackets = []
    positions = {}
    listed: dict[tuple[int, int], tuple[list, int]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col = len(line) - len(line.lstrip()) + 1
        word, _, rest = stripped.partition(" ")
        rest_col = col + len(word) + 1
        if dim is None and word != "dim":
            raise ParseError("first line must be 'dim <n>'", lineno, col)
        if word not in _DIRECTIVES:
            raise ParseError(f"unknown directive {word!r}", lineno, col)

        if word == "dim":
            if dim is not None:
                raise ParseError("'dim' given twice", lineno, col)
            try:
                dim = int(rest.strip())
            except ValueError:
                raise ParseError("dim must be a positive integer", lineno, rest_col) from None
            if dim < 1:
                raise ParseError("dim must be a positive integer", lineno, rest_col)
        elif word == "basis":
            if basis is not None:
                raise ParseError("'basis' given twice", lineno, col)
            names = rest.split()
            if len(names) != dim:
                raise ParseError(f"expected {dim} basis names, got {len(names)}", lineno, col)
            if len(set(names)) != len(names):
                raise ParseError("duplicate basis name", lineno, col)
            for n in names:
                if not n.isidentifier():
                    raise ParseError(f"invalid basis name {n!r}", lineno, col)
            basis = tuple(names)
        elif word == "params":
            if brackets:
                raise ParseError("parameters must be declared before brackets", lineno, col)
            if params is not None:
                raise ParseError("'params' given twice", lineno, col)
            names = rest.split()
            if basis is not None and set(names) & set(basis):
                raise ParseError("parameter name collides with a basis name", lineno, col)
            try:
                params = ParameterTable(names)
            except ValueError as exc:
                raise ParseError(str(exc), lineno, col) from None
        elif word == "metric":
            if rest.strip() != "orthonormal":
                raise ParseError("only 'metric orthonormal' is supported", lineno, rest_col)
            metric = True
        elif word == "bracket":
            if basis is None:
                raise ParseError("'basis' must precede brackets", lineno, col)
            if params is None:
                params = ParameterTable()
            lhs, eq, rhs = rest.partition("=")
            if not eq:
                raise ParseError("expected 'bracket A B = value'", lineno, rest_col)
            names = lhs.split()
            if len(names) != 2:
                raise ParseError("bracket needs exactly two basis names", lineno, rest_col)
            for n in names:
                if n not in basis:
                    raise ParseError(f"unknown basis name {n!r}", lineno, rest_col)
            i, j = basis.index(names[0]), basis.index(names[1])
            if i == j:
                raise ParseError("diagonal brackets are identically zero and may not be listed", lineno, col)
            value_col = rest_col + len(lhs) + 1
            value = parse_bracket_value(rhs, basis, params, lineno, value_col)
            if (i, j) in listed:
                raise ParseError(f"duplicate bracket [{names[0]},{names[1]}]", lineno, col)
            if (j, i) in listed:
                prev, prev_line = listed[(j, i)]
                if [-c for c in prev] != value:
                    raise ParseError(
                        f"inconsistent antisymmetric pair with line {prev_line}", lineno, col
                    )
                raise ParseError(f"duplicate bracket [{names[0]},{names[1]}]", lineno, col)
            listed[(i, j)] = (value, lineno)
            brackets.append((i, j, value))
            positions[(i, j)] = (lineno, col)
        elif word == "vertical":
            if basis is None:
                raise ParseError("'basis' must precede 'vertical'", lineno, col)
            if vertical is not None:
                raise ParseError("'vertical' given twice", lineno, col)
            idx = []
            for n in rest.split():
                if n not in basis:
                    raise ParseError(f"vertical index out of range: {n!r}", lineno, col)
                idx.append(basis.index(n))
            if len(set(idx)) != len(idx):
                raise ParseError("duplicate vertical name", lineno, col)
            vertical = tuple(idx)

    if dim is None:
        raise ParseError("missing 'dim' line", 1, 1)
    if basis is None:
        raise ParseError("missing 'basis' line", 1, 1)
    if not metric:
        raise ParseError("missing 'metric orthonormal' line", 1, 1)
    return AlgebraDocument(dim, basis, params or ParameterTable(), brackets, vertical, positions)


def read_algebra_file(path) -> AlgebraDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra_file(fh.read())


def document_from_spec(g: LieAlgebraSpec) -> AlgebraDocument:
    brackets = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            v = list(g.C[i][j])
            if any(c for c in v):
                brackets.append((i, j, v))
    return AlgebraDocument(g.dim, g.basis, g.params, brackets, g.vertical)


def serialize_algebra(doc: AlgebraDocument) -> str:
    lines = [
        f"dim {doc.dim}",
        "basis " + " ".join(doc.basis),
        ("params " + " ".join(doc.params.names)).rstrip(),
        "metric orthonormal",
    ]
    for i, j, value in doc.brackets:
        lines.append(f"bracket {doc.basis[i]} {doc.basis[j]} = {vector_to_string(value, doc.basis)}")
    if doc.vertical is not None:
        lines.append("vertical " + " ".join(doc.basis[k] for k in doc.vertical))
    return "\n".join(lines) + "\n"


# -- reports ----------------------------------------------------------------

def serialize_report(report: GeometryReport, fmt: str = "text") -> str:
    """Deterministic rendering as flat ``section.key = value`` text or JSON."""
    if fmt == "json":
        doc = {
            "family": report.family,
            "basis": list(report.basis),
            "params": list(report.params),
            "sections": {s: dict(report.sections.get(s, {})) for s in SECTIONS},
            "failures": [list(f) for f in report.failures],
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [
        "# invgeo report",
        f"family = {report.family}",
        f"basis = {' '.join(report.basis)}",
        f"params = {' '.join(report.params)}",
    ]
    for s in SECTIONS:
        for key, value in report.sections.get(s, {}).items():
            if isinstance(value, list):
                value = "{" + ", ".join(value) + "}"
            lines.append(f"{s}.{key} = {value}")
    for name, expected, actual in report.failures:
        lines.append(f"failures.{name} = {expected} != {actual}")
    return "\n".join(lines) + "\n"


def _section_of(key: str) -> tuple[str, str]:
    for s in sorted(SECTIONS, key=len, reverse=True):
        if key.startswith(s + "."):
            return s, key[len(s) + 1:]
    raise ValueError(f"unknown report section in key {key!r}")


def parse_report(text: str) -> GeometryReport:
    """Inverse of :func:`serialize_report` for either format."""
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        unknown = set(doc["sections"]) - set(SECTIONS)
        if unknown:
            raise ValueError(f"unknown report sections: {sorted(unknown)}")
        sections = {s: v for s, v in doc["sections"].items() if v}
        return GeometryReport(
            family=doc["family"],
            basis=tuple(doc["basis"]),
            params=tuple(doc["params"]),
            sections=sections,
            failures=[tuple(f) for f in doc["failures"]],
        )
    report = GeometryReport()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        key, sep, value = line.partition(" = ")
        if not sep:
            key, value = line.rstrip(" ="), ""
        if key == "family":
            report.family = value
        elif key == "basis":
            report.basis = tuple(value.split())
        elif key == "params":
            report.params = tuple(value.split())
        elif key.startswith("failures."):
            expected, _, actual = value.partition(" != ")
            report.failures.append((key[len("failures."):], expected, actual))
        else:
            section, sub = _section_of(key)
            if value.startswith("{") and value.endswith("}"):
                inner = value[1:-1]
                parsed = inner.split(", ") if inner else []
            else:
                parsed = value
            report.sections.setdefault(section, {})[sub] = parsed
    return report

