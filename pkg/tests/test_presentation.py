import pytest

from twosilt import (
    DslError,
    NormalizationError,
    parse_presentation,
    normalize_presentation,
)


GOOD = """
# commutative square
vertices: 1 2 3 4
arrow a: 1 -> 2
arrow b: 1 -> 3
arrow c: 2 -> 4
arrow d: 3 -> 4
rel a*c - b*d
"""


def test_parse_basic():
    pres = parse_presentation(GOOD)
    assert pres.quiver.vertex_labels == ["1", "2", "3", "4"]
    assert len(pres.quiver.arrows) == 4
    assert len(pres.relations) == 1
    (rel,) = pres.relations
    assert rel == {("a", "c"): 1, ("b", "d"): -1}


def test_dsl_round_trip():
    pres = parse_presentation(GOOD)
    again = parse_presentation(pres.to_dsl())
    assert again.quiver.vertex_labels == pres.quiver.vertex_labels
    assert [(a.name, a.source, a.target) for a in again.quiver.arrows] == \
        [(a.name, a.source, a.target) for a in pres.quiver.arrows]
    assert again.relations == pres.relations


def test_unknown_arrow_in_relation():
    with pytest.raises((DslError, ValueError)):
        parse_presentation("vertices: 1 2\narrow a: 1 -> 2\nrel a*z")


def test_non_composable_relation_rejected():
    text = ("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 1 -> 3\n"
            "rel a*b")
    with pytest.raises((DslError, NormalizationError, ValueError)):
        normalize_presentation(parse_presentation(text))


def test_duplicate_arrow_names_rejected():
    with pytest.raises((DslError, ValueError)):
        parse_presentation("vertices: 1 2\narrow a: 1 -> 2\narrow a: 2 -> 1")


def test_acyclicity_detection():
    acyclic = parse_presentation("vertices: 1 2\narrow a: 1 -> 2")
    cyclic = parse_presentation(
        "vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1")
    assert acyclic.quiver.is_acyclic()
    assert not cyclic.quiver.is_acyclic()
