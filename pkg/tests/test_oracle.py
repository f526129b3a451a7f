import math

import pytest

from powergraphs.arith import factorize
from powergraphs.groups import build_group
from powergraphs.oracle import classification_oracle
from powergraphs.powergraph import complement_proper_power_graph
from powergraphs.specparse import parse_group_spec
from powergraphs.suite import load_manifest


def P(text):
    spec = parse_group_spec(text)
    return classification_oracle(spec, build_group(spec))


def test_examples():
    z20 = P("Z20")
    assert (z20.is_planar, z20.is_toroidal, z20.is_projective) == (False, True, True)
    z = P("Z2^4")
    assert z.is_complete and z.diameter == 1
    z28 = P("Z28")
    assert z28.is_toroidal and not z28.is_projective


@pytest.mark.parametrize("text", load_manifest("named") + load_manifest("cyclic"))
def test_predictions_are_self_consistent(text):
    g = build_group(parse_group_spec(text))
    assert P(text).consistency_errors(g.order - 1) == []


@pytest.mark.parametrize("text", [t for t in load_manifest("named") if len(factorize(build_group(parse_group_spec(t)).order)) >= 3])
def test_three_primes_neither_toroidal_nor_projective(text):
    p = P(text)
    assert p.is_toroidal is False and p.is_projective is False


def test_permutation_specs_are_identified_by_invariants():
    assert P("perm:(1 2 3);(1 2)").identified_as == "S3"
    assert P("perm:(1 2 3);(1 2)").as_dict() | {"identified_as": None} == P("S3").as_dict() | {"identified_as": None}
    d8 = P("perm:(1 2 3 4);(1 3)")
    assert d8.identified_as == "D8" and d8.is_toroidal and d8.is_projective
    assert P("perm[A4]:(1 2 3);(1 2)(3 4)").is_claw_free


def test_diameter_and_girth_cases():
    assert P("Z2").diameter is None
    assert P("Z12").diameter == math.inf and P("Q16").diameter == math.inf
    assert P("Q12").diameter == 2
    assert P("Z9").girth == math.inf and P("Z14").girth == math.inf
    assert P("Z18").girth == 4 and P("Z12").girth == 4
    assert P("Z30").girth == 3 and P("D8").girth == 3


def test_z8xz2_is_not_toroidal():
    assert P("Z8xZ2").is_toroidal is False
    assert P("Z4xZ2").is_toroidal is True


def test_trivial_group_rejected():
    with pytest.raises(ValueError):
        P("Z1")


def test_complement_vertex_count_matches():
    for text in ("Q8", "Z12", "S4"):
        g = build_group(parse_group_spec(text))
        assert complement_proper_power_graph(g).n == g.order - 1
