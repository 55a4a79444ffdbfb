import pytest

from flips import FLIPS, apply_flip
from invgeo import families, serialize_report
from invgeo.hermitian import canonical_structures, integrability_constraints
from invgeo.lie import jacobi_residual


def test_build_shapes():
    for f in families.FAMILIES:
        g = families.build(f)
        assert g.basis == ("X", "Y", "Z", "W")
        assert g.vertical == (2, 3)
        assert g.name == f
    assert families.build("g7").params.names == ("theta1", "theta2", "z2")
    assert families.build("g3").params.names == ("alpha", "beta", "theta2")


def test_unknown_family():
    with pytest.raises(ValueError, match="unknown family"):
        families.build("g8")


def test_abelian():
    g = families.abelian(4)
    assert all(c.is_zero() for row in g.C for v in row for c in v)
    assert families.abelian(5).basis == ("e1", "e2", "e3", "e4", "e5")


@pytest.mark.parametrize("family", ["g7", "g3", "both_integrable"])
def test_examples_are_lie_algebras(family):
    assert jacobi_residual(families.build(family)) == []


def test_general_form_residual_reported():
    assert jacobi_residual(families.build("general_s3"))


def test_both_integrable_residual_vanishing_locus():
    g = families.build("both_integrable")
    zero = {n: 0 for n in ("lambda", "alpha", "a", "b", "r", "z3", "z4")}
    assert jacobi_residual(g.substitute(zero)) == []


def test_j1_family_is_integrable():
    g = families.build("j1_integrable")
    assert integrability_constraints(g, canonical_structures(g)[0]).is_empty()


def test_golden_names_unique():
    names = [row[0] for row in families.GOLDEN]
    assert len(names) == len(set(names))


def test_report_has_no_failures():
    rep = families.paper_report()
    assert rep.failures == []
    assert set(rep.sections["checks"].values()) == {"ok"}
    assert len(rep.sections["checks"]) == len(families.GOLDEN) + 1


def test_report_deterministic():
    assert serialize_report(families.paper_report()) == serialize_report(families.paper_report())
    assert serialize_report(families.paper_report(), "json") == serialize_report(families.paper_report(), "json")


def test_curvature_flip_named(monkeypatch):
    apply_flip(monkeypatch, "curvature")
    assert ("g7.sectional.Z^W", "2*z2^2", "-2*z2^2") in families.paper_report().failures


@pytest.mark.parametrize("flip", sorted(FLIPS))
def test_each_flip_is_caught(monkeypatch, flip):
    apply_flip(monkeypatch, flip)
    rep = families.paper_report()
    assert rep.failures
    assert all(rep.sections["checks"][name] == "FAIL" for name, _, _ in rep.failures)


def test_nijenhuis_flip_hits_integrability(monkeypatch):
    apply_flip(monkeypatch, "nijenhuis")
    failed = {name for name, _, _ in families.paper_report().failures}
    assert "general.integrable.J1" in failed
    assert "general.both_integrable_forces_totally_geodesic" in failed
