import json

import pytest

from multibier import MonomialIdeal, Multicomplex, bier_sphere, multicomplex
from multibier.textio import (
    ParseError,
    format_monomial,
    format_polarized,
    parse_facets,
    parse_input,
    parse_monomial,
    render_facets,
    render_ideal,
    render_multicomplex,
    to_json,
)
from multibier.complexes import Vtx


def test_parse_members_example():
    text = "cap 2 2\nmembers\n0 0\n1 0\n0 1\n2 0\n0 2"
    M = parse_input(text)
    assert isinstance(M, Multicomplex)
    assert M.cap == (2, 2)
    assert len(M.members) == 5


def test_parse_generators_takes_closure():
    text = "cap 2 2 2\ngenerators\n1 0 1\n0 1 2"
    M = parse_input(text)
    assert len(M.members) == 8
    assert (0, 1, 1) in M.members


def test_parse_ideal():
    text = "ideal 3\n2 0 0\n0 2 0\n0 0 3\n1 1 0\n1 0 2"
    I = parse_input(text)
    assert isinstance(I, MonomialIdeal)
    assert len(I.gens) == 5


def test_parse_comments_and_blank_lines():
    text = "# a comment\ncap 1 1\n\nmembers  # trailing\n0 0\n1 0 # member x\n"
    M = parse_input(text)
    assert M.members == frozenset({(0, 0), (1, 0)})


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as e:
        parse_input("cap 2 2\nmembers\n0 zz")
    assert e.value.line == 3 and e.value.column == 3
    with pytest.raises(ParseError):
        parse_input("cap 2 2\n0 0")  # missing mode line
    with pytest.raises(ParseError):
        parse_input("cap 2 2\nmembers\n3 0")  # cap violation
    with pytest.raises(ParseError):
        parse_input("cap 2 2\nmembers\n0 0\n2 0")  # not divisor-closed
    with pytest.raises(ParseError):
        parse_input("")


def test_round_trip_text_and_json():
    M = multicomplex((2, 2), {(0, 0), (1, 0), (0, 1)})
    assert parse_input(render_multicomplex(M)) == M
    assert parse_input(to_json(M)) == M
    I = MonomialIdeal.from_generators(2, [(2, 0), (1, 1)])
    assert parse_input(render_ideal(I)) == I
    assert parse_input(to_json(I)) == I


def test_facet_round_trip():
    sphere = bier_sphere(multicomplex((2, 2), {(0, 0), (1, 0), (0, 1), (2, 0), (0, 2)}))
    text = render_facets(sphere)
    back = parse_facets(text)
    assert back.facets == sphere.facets
    doc = json.loads(to_json(sphere))
    assert len(doc["facets"]) == 8


def test_parse_facets_handles_bare_atoms_and_empty():
    d = parse_facets("a b\nx1^(0) c\n")
    assert frozenset({"a", "b"}) in d.facets
    assert any(Vtx(1, 0) in f for f in d.facets)
    assert parse_facets("").facets == frozenset({frozenset()})


def test_monomial_notation():
    assert format_monomial((2, 0, 1)) == "x1^2*x3"
    assert format_monomial((0, 0)) == "1"
    assert parse_monomial("x1^2*x3", 3) == (2, 0, 1)
    assert parse_monomial("1", 2) == (0, 0)
    with pytest.raises(ValueError):
        parse_monomial("x9", 3)
    vs = [Vtx(1, 0), Vtx(1, 1), Vtx(2, 0)]
    assert format_polarized((1, 0, 1), vs) == "x1_0*x2_0"
