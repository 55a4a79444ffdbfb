"""Geometry reports: every computed quantity as canonical strings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import foliation, hermitian, lie, riemannian
from .lie import LieAlgebraSpec, vector_to_string
from .poly import poly_to_string

SECTIONS = (
    "checks",
    "connection",
    "sectional",
    "ricci",
    "scalar",
    "einstein_defect",
    "nijenhuis.J1",
    "nijenhuis.J2",
    "kahler_defect.J1",
    "kahler_defect.J2",
    "nabla_J.J1",
    "nabla_J.J2",
    "second_fundamental",
    "foliation",
)

PARTS = ("checks", "connection", "curvature", "einstein", "hermitian", "foliation")


@dataclass
class GeometryReport:
    family: str = ""
    basis: tuple = ()
    params: tuple = ()
    sections: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def get(self, dotted: str):
        """Look up ``section.key``, e.g. ``"ricci.XX"``."""
        for s in sorted(self.sections, key=len, reverse=True):
            if dotted.startswith(s + "."):
                return self.sections[s][dotted[len(s) + 1:]]
        raise KeyError(dotted)

    def __eq__(self, other):
        if not isinstance(other, GeometryReport):
            return NotImplemented
        strip = lambda r: {k: v for k, v in r.sections.items() if v}
        return (
            self.family == other.family
            and tuple(self.basis) == tuple(other.basis)
            and tuple(self.params) == tuple(other.params)
            and strip(self) == strip(other)
            and [tuple(f) for f in self.failures] == [tuple(f) for f in other.failures]
        )


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def curvature_symmetries(R: riemannian.CurvatureTensor) -> dict[str, bool]:
    """Which algebraic curvature identities hold exactly."""
    T = R.R
    n = len(T)
    idx = [(i, j, k, l) for i in range(n) for j in range(n) for k in range(n) for l in range(n)]
    return {
        "antisymmetry_ij": all(T[i][j][k][l] == -T[j][i][k][l] for i, j, k, l in idx),
        "antisymmetry_kl": all(T[i][j][k][l] == -T[i][j][l][k] for i, j, k, l in idx),
        "pair_symmetry": all(T[i][j][k][l] == T[k][l][i][j] for i, j, k, l in idx),
        "bianchi": all((T[i][j][k][l] + T[j][k][i][l] + T[k][i][j][l]).is_zero() for i, j, k, l in idx),
    }


def _join(B, *idx) -> str:
    names = [B[i] for i in idx]
    return "".join(names) if all(len(n) == 1 for n in B) else ",".join(names)


def _adapted(g: LieAlgebraSpec) -> bool:
    return g.dim == 4 and g.vertical is not None and len(g.vertical) == 2


def build_report(g: LieAlgebraSpec, parts: Optional[Iterable[str]] = None, family: str = "") -> GeometryReport:
    """Run the pipeline on ``g`` and collect the requested parts."""
    parts = set(PARTS if parts is None else parts)
    unknown = parts - set(PARTS)
    if unknown:
        raise ValueError(f"unknown report parts: {sorted(unknown)}")
    B = g.basis
    rep = GeometryReport(family=family or g.name, basis=tuple(B), params=tuple(g.params.names))
    S = rep.sections

    conn = riemannian.levi_civita(g)
    residual = lie.jacobi_residual(g)
    needs_curv = parts & {"checks", "curvature", "einstein"}
    R = riemannian.curvature(g, conn) if needs_curv else None

    if "checks" in parts:
        c = S.setdefault("checks", {})
        c["antisymmetry"] = "ok"
        c["jacobi"] = "ok" if not residual else "fails"
        for (i, j, k), v in residual:
            c[f"jacobi_residual.{_join(B, i, j, k)}"] = vector_to_string(v, B)
        sym = curvature_symmetries(R)
        c["curvature_antisymmetry"] = "ok" if sym["antisymmetry_ij"] and sym["antisymmetry_kl"] else "fails"
        if residual:
            c["curvature_pair_symmetry"] = "skipped (jacobi residual nonempty)"
            c["curvature_bianchi"] = "skipped (jacobi residual nonempty)"
        else:
            c["curvature_pair_symmetry"] = "ok" if sym["pair_symmetry"] else "fails"
            c["curvature_bianchi"] = "ok" if sym["bianchi"] else "fails"

    if "connection" in parts:
        S["connection"] = {
            f"{B[i]}.{B[j]}": vector_to_string(conn.nabla(i, j), B)
            for i in range(g.dim) for j in range(g.dim)
        }

    if parts & {"curvature", "einstein"}:
        ric = riemannian.ricci(g, R)
        if "curvature" in parts:
            S["sectional"] = {
                f"{B[i]}^{B[j]}": poly_to_string(riemannian.sectional(g, R, i, j))
                for i in range(g.dim) for j in range(i + 1, g.dim)
            }
            S["ricci"] = {
                _join(B, i, j): poly_to_string(ric[i, j])
                for i in range(g.dim) for j in range(i, g.dim)
            }
            S["scalar"] = {"R": poly_to_string(riemannian.scalar_curvature(ric))}
        if "einstein" in parts:
            d = riemannian.einstein_defect(ric)
            S["einstein_defect"] = {
                "einstein": _yes(d.is_empty()),
                "off_diagonal": d.off_diagonal.strings(),
                "diagonal_gaps": d.diagonal_gaps.strings(),
            }

    if "hermitian" in parts and _adapted(g):
        for J in hermitian.canonical_structures(g):
            N = hermitian.nijenhuis(g, J)
            ic = hermitian.integrability_constraints(g, J)
            sec = {"integrable": _yes(ic.is_empty()), "constraints": ic.strings()}
            for (i, j), v in N.N.items():
                sec[f"{B[i]}.{B[j]}"] = vector_to_string(v, B)
            S[f"nijenhuis.{J.name}"] = sec
            kd = hermitian.covariant_J(g, conn, J)
            S[f"kahler_defect.{J.name}"] = {
                "kahler": _yes(hermitian.is_kahler(kd)),
                "constraints": kd.components.strings(),
            }
            S[f"nabla_J.{J.name}"] = {
                f"{B[i]}.{B[j]}": vector_to_string(v, B) for (i, j), v in kd.vectors.items()
            }

    if "foliation" in parts and g.vertical is not None:
        split = foliation.DistributionSplit.of(g)
        sff = {}
        for which, tag in (("vertical", "V"), ("horizontal", "H")):
            form = foliation.second_fundamental_form(g, conn, split, which)
            for (a, b), v in form.values.items():
                sff[f"{tag}.{B[a]}.{B[b]}"] = vector_to_string(v, B)
        S["second_fundamental"] = sff
        cs, mean = foliation.conformality(g, conn, split)
        fol = {
            "vertical": " ".join(B[k] for k in split.vertical),
            "conformal": cs.strings(),
            "mean_vector": vector_to_string(mean, B) if mean is not None else "none",
        }
        for name in foliation.PREDICATES:
            fol[name] = foliation.predicate(g, conn, split, name).strings()
        S["foliation"] = fol
    return rep


# -- human-readable text ---------------------------------------------------

def _label(section: str, key: str) -> str:
    if section == "connection":
        a, b = key.split(".")
        return f"nabla_{a} {b}"
    if section == "sectional":
        return f"sec({key})"
    if section == "ricci":
        if "," in key:
            return f"Ric({key})"
        n = len(key) // 2
        return f"Ric({key[:n]},{key[n:]})"
    if section == "scalar":
        return "scalar"
    if section.startswith("nabla_J."):
        a, b = key.split(".")
        return f"(nabla_{a} {section.split('.')[1]})({b})"
    if section.startswith("nijenhuis.") and "." in key:
        a, b = key.split(".")
        return f"N({a},{b})"
    if section == "second_fundamental":
        tag, a, b = key.split(".")
        return f"B^{tag}({a},{b})"
    return key


def render_text(report: GeometryReport) -> str:
    """Readable rendering used by the command line ``--format text``."""
    out = []
    if report.family:
        out.append(f"# {report.family}")
    checks = report.sections.get("checks")
    if checks and "antisymmetry" in checks:
        out.append(f"antisymmetry: {checks['antisymmetry']}, jacobi: {checks['jacobi']}")
    for s in SECTIONS:
        items = report.sections.get(s)
        if not items:
            continue
        if s == "checks":
            rest = {k: v for k, v in items.items() if k not in ("antisymmetry", "jacobi")}
            if not rest:
                continue
            items = rest
        out.append(f"[{s}]")
        for key, value in items.items():
            if isinstance(value, list):
                value = "{" + ", ".join(value) + "}"
            out.append(f"{_label(s, key)} = {value}")
    for name, expected, actual in report.failures:
        out.append(f"FAIL {name}: expected {expected}, got {actual}")
    return "\n".join(out) + "\n"
