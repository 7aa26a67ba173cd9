import itertools

import pytest

from multibier.monomials import (
    MonomialIdeal,
    alexander_dual,
    cap_monomials,
    closure_from_generators,
    colon,
    complement_ideal,
    diamond,
    divides,
    f_vector,
    ideal_alexander_dual,
    lcm_of,
    multicomplex,
    pure_power_ideal,
)


def brute_membership(I, m):
    return any(divides(g, m) for g in I.gens)


def test_divides_and_diamond():
    assert divides((1, 0), (2, 1))
    assert not divides((2, 1), (1, 0))
    assert diamond((0, 1), 2, 2) == (0, 2)
    assert diamond((1, 1, 0), 1, 3) == (3, 1, 0)


def test_cap_monomials_count():
    assert len(list(cap_monomials((2, 2)))) == 9
    assert len(list(cap_monomials((1, 2, 3)))) == 2 * 3 * 4


def test_closure_from_generators():
    M = closure_from_generators((2, 2), set())
    assert M.members == frozenset({(0, 0)})
    M = closure_from_generators((2, 2, 2), {(1, 0, 1), (0, 1, 2)})
    assert M.members == frozenset(
        {(0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 1, 0), (0, 1, 1),
         (0, 1, 2), (1, 0, 0), (1, 0, 1)}
    )
    with pytest.raises(ValueError):
        closure_from_generators((1, 1), {(2, 0)})


def test_multicomplex_validation():
    with pytest.raises(ValueError):
        multicomplex((2, 2), {(0, 0), (2, 0)})  # (1,0) missing
    M = multicomplex((1,), {(0,), (1,)})
    assert M.is_full and not M.is_proper


def test_f_vector_padding():
    M = multicomplex((2, 2), {(0, 0), (1, 0), (0, 1), (2, 0), (0, 2)})
    assert f_vector(M) == (1, 2, 2, 0, 0)
    assert lcm_of(M) == (2, 2)


def test_alexander_dual_involution_exhaustive():
    c = (2, 2)
    monos = sorted(cap_monomials(c))
    nonzero = [m for m in monos if any(m)]
    for r in range(len(nonzero) + 1):
        for pick in itertools.combinations(nonzero, r):
            try:
                M = multicomplex(c, set(pick) | {(0, 0)})
            except ValueError:
                continue
            if M.is_full:
                with pytest.raises(ValueError):
                    alexander_dual(M)
                continue
            D = alexander_dual(M)
            # oracle: a in D iff c-a not in M
            for a in monos:
                assert (a in D.members) == ((c[0] - a[0], c[1] - a[1]) not in M.members)
            assert alexander_dual(D).members == M.members


def test_complement_ideal_modes():
    M = multicomplex((2, 2), {(0, 0), (1, 0), (0, 1), (2, 0), (0, 2)})
    capped = complement_ideal(M, capped=True)
    assert capped.gens == (((1, 1),))
    full = complement_ideal(M, capped=False)
    # uncapped adds the pure powers beyond the cap
    P = pure_power_ideal(M.cap)
    combined = capped + P
    for m in itertools.product(range(4), repeat=2):
        assert brute_membership(full, m) == brute_membership(combined, m)


def test_ideal_alexander_dual_statement():
    c = (2, 2, 2)
    M = closure_from_generators(c, {(1, 0, 1), (0, 1, 2)})
    lhs = ideal_alexander_dual(complement_ideal(M, capped=True), c)
    rhs = complement_ideal(alexander_dual(M), capped=True)
    assert lhs == rhs


def test_colon_example_and_membership_law():
    I = MonomialIdeal.from_generators(2, [(2, 0), (0, 2)])
    J = MonomialIdeal.from_generators(2, [(1, 1)])
    Q = colon(I, J)
    assert set(Q.gens) == {(1, 0), (0, 1)}
    # brute-force law on a small degree box
    for m in itertools.product(range(4), repeat=2):
        prod_in = all(
            brute_membership(I, tuple(x + y for x, y in zip(m, g))) for g in J.gens
        )
        assert brute_membership(Q, m) == prod_in


def test_colon_rejects_zero_divisor():
    I = MonomialIdeal.from_generators(2, [(1, 0)])
    Z = MonomialIdeal.from_generators(2, [])
    with pytest.raises(ValueError):
        colon(I, Z)


def test_minimalization_is_canonical():
    I = MonomialIdeal.from_generators(2, [(1, 0), (2, 0), (1, 1)])
    assert I.gens == ((1, 0),)
