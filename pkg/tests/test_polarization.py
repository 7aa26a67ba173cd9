import pytest

from multibier import (
    MonomialIdeal,
    POL,
    POL_STAR,
    ball_ideal_identity,
    closure_from_generators,
    complex_from_facets,
    generator_formula,
    linkage_identities,
    multicomplex,
    multicomplex_from_complex,
    polarize,
    polarize_ideal,
    polarized_variables,
)
from multibier.textio import format_polarized_ideal


def test_polarize_single_monomial():
    c = (2, 2)
    # variables: x1_0 x1_1 x1_2 x2_0 x2_1 x2_2
    assert polarize((2, 1), c, POL) == (1, 1, 0, 1, 0, 0)
    assert polarize((2, 1), c, POL_STAR) == (0, 1, 1, 0, 0, 1)
    assert polarize((0, 0), c, POL) == (0, 0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        polarize((4, 0), c, POL)


def test_polarize_ideal_stays_minimal():
    I = MonomialIdeal.from_generators(2, [(2, 0), (1, 1)])
    pol = polarize_ideal(I, (2, 2), POL)
    assert set(pol.gens) == {(1, 1, 0, 0, 0, 0), (1, 0, 0, 1, 0, 0)}


def test_ball_ideal_identity_examples():
    M = multicomplex((2, 2), {(0, 0), (1, 0), (0, 1), (2, 0), (0, 2)})
    assert ball_ideal_identity(M)
    M2 = closure_from_generators((2, 2, 2), {(1, 0, 1), (0, 1, 2)})
    assert ball_ideal_identity(M2)


def test_generator_formula_published_nonminimal_case():
    d = complex_from_facets([{1, 2}, {3}], [1, 2, 3])
    gf = generator_formula(multicomplex_from_complex(d))
    rendered = [format_polarized_ideal(p, gf.variables) for p in gf.parts]
    assert rendered[0] == "(x2_0*x3_0, x1_0*x3_0)"
    assert rendered[1] == "(x3_1, x1_1*x2_1)"
    assert rendered[2] == "(x3_0*x3_1, x2_0*x2_1, x1_0*x1_1)"
    assert gf.is_minimal is False
    # x3_0*x3_1 is divisible by x3_1 from the dual part
    assert len(gf.raw_gens) > len(gf.ideal.gens)


def test_linkage_identity_example():
    I = MonomialIdeal.from_generators(2, [(1, 0)])
    plain, polarized = linkage_identities(I, (1, 1))
    assert plain and polarized


def test_linkage_rejects_bad_input():
    unit = MonomialIdeal.from_generators(2, [(0, 0)])
    with pytest.raises(ValueError):
        linkage_identities(unit, (1, 1))
    too_big = MonomialIdeal.from_generators(2, [(3, 0)])
    with pytest.raises(ValueError):
        linkage_identities(too_big, (1, 1))


def test_polarized_variable_order():
    vs = polarized_variables((1, 2))
    assert [(v.var, v.level) for v in vs] == [
        (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)
    ]
