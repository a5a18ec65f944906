import pytest

from twosilt import (
    compositions,
    borel_schur_quiver,
    borel_schur_presentation_n2,
    sigma_permutation,
    structural_checks,
    concealed_certificate,
    is_tau_tilting_finite,
    classification_report,
    certificate_spec,
    concealed_target,
)
from twosilt.borelschur import iota, p_digit_sum


def test_compositions():
    comps = compositions(2, 4)
    assert comps == [(0, 4), (1, 3), (2, 2), (3, 1), (4, 0)]
    assert len(compositions(3, 4)) == 15
    assert iota((1, 3)) == (3, 1)
    assert iota(iota((0, 2, 5))) == (0, 2, 5)


def test_p_digit_sum():
    assert p_digit_sum(0, 2) == 0
    assert p_digit_sum(7, 2) == 3
    assert p_digit_sum(9, 3) == 1 + 0 + 0
    assert p_digit_sum(14, 5) == 2 + 4


@pytest.mark.parametrize("r,p,arrows,rels", [
    (4, 2, 8, 6),
    (5, 2, 11, 10),
    (5, 3, 8, 5),
    (6, 3, 10, 7),
    (6, 5, 8, 3),
    (7, 5, 10, 5),
])
def test_presentation_sizes(r, p, arrows, rels):
    pres = borel_schur_presentation_n2(r, p)
    assert len(pres.quiver.vertex_labels) == r + 1
    assert len(pres.quiver.arrows) == arrows
    assert len(pres.relations) == rels


def test_p0_is_linear_quiver():
    pres = borel_schur_presentation_n2(5, 0)
    assert len(pres.quiver.arrows) == 5
    assert pres.relations == []


def test_large_p_is_linear_quiver():
    pres = borel_schur_presentation_n2(6, 7)
    assert len(pres.quiver.arrows) == 6
    assert pres.relations == []


@pytest.mark.parametrize("r,p", [(4, 2), (5, 2), (5, 3), (6, 3), (6, 5)])
def test_structural_checks(r, p):
    report = structural_checks(r, p)
    assert report["ok"], report


def test_sigma_permutation():
    assert sigma_permutation(4) == [4, 3, 2, 1, 0]


def test_quiver_general_n():
    q = borel_schur_quiver(3, 2, 2)
    assert len(q.vertex_labels) == 6
    # arrows of step 1 and step 2 in two coordinate directions
    assert len(q.arrows) == 3 + 3 + 1 + 1
    assert q.is_acyclic()


@pytest.mark.parametrize("name", ["a5bi", "d6", "e7-27", "e7-p1"])
def test_certificates(name):
    spec = certificate_spec(name)
    report = concealed_certificate(
        spec["algebra"], spec["target"],
        quotient=spec["quotient"], truncate=spec["truncate"])
    assert report["pass"], report


def test_certificate_rejects_wrong_target():
    spec = certificate_spec("d6")
    wrong = concealed_target("a5bi")
    report = concealed_certificate(
        spec["algebra"], wrong, quotient=spec["quotient"])
    assert not report["pass"]


def test_classification_table():
    # finite exactly for: p=0 any r; p=2 r<=4; p=3 r<=5; p=5 r<=6;
    # p>=7 r<=p; and always for r<=1 or n=1
    for p, bound in ((0, 99), (2, 4), (3, 5), (5, 6), (7, 7)):
        for r in range(2, 8):
            expected = r <= bound
            assert is_tau_tilting_finite(2, r, p) == expected, (r, p)
    assert is_tau_tilting_finite(1, 9, 2)
    assert is_tau_tilting_finite(3, 1, 2)
    assert not is_tau_tilting_finite(3, 2, 2)


def test_classification_report_evidence():
    rep = classification_report(2, 5, 2)
    assert rep["tau_tilting_finite"] is False
    assert "certificate" in rep["evidence"]
    rep = classification_report(3, 4, 3)
    assert rep["tau_tilting_finite"] is False
    assert "quiver-level" in rep["evidence"]
    rep = classification_report(2, 4, 2)
    assert rep["tau_tilting_finite"] is True
