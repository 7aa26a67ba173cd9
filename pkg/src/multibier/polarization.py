"""Squarefree polarizations of monomials and ideals, and their identities.

Two variants exist: the prefix polarization sends x_i^a to the product of
x_{i,0}..x_{i,a-1}, and the suffix variant uses the top levels
x_{i,c_i}..x_{i,c_i-a+1} instead.  Both land in the variables x_{i,j} with
0 <= j <= c_i, ordered lexicographically by (i, j).
"""

from __future__ import annotations

from .bier import all_levels, bier_ball
from .complexes import stanley_reisner, Vtx
from .monomials import (
    MonomialIdeal,
    Multicomplex,
    alexander_dual,
    colon,
    complement_ideal,
    divides,
    ideal_alexander_dual,
    pure_power_ideal,
)

POL = "pol"
POL_STAR = "pol*"


def polarized_variables(c) -> list[Vtx]:
    return all_levels(c)


def polarize(u, c, variant: str = POL) -> tuple[int, ...]:
    """Exponent tuple of the polarized monomial over the x_{i,j} variables."""
    c = tuple(c)
    if len(u) != len(c):
        raise ValueError("exponent length must match the cap length")
    out = []
    for ui, ci in zip(u, c):
        if ui > ci + 1:
            raise ValueError(f"exponent {ui} exceeds cap+1 = {ci + 1}")
        if variant == POL:
            levels = [1 if j < ui else 0 for j in range(ci + 1)]
        elif variant == POL_STAR:
            levels = [1 if j > ci - ui else 0 for j in range(ci + 1)]
        else:
            raise ValueError(f"unknown variant {variant!r}")
        out.extend(levels)
    return tuple(out)


def polarize_ideal(I: MonomialIdeal, c, variant: str = POL) -> MonomialIdeal:
    """Generator-wise polarization; minimality of the input is preserved."""
    c = tuple(c)
    nvars = sum(ci + 1 for ci in c)
    return MonomialIdeal.from_generators(nvars, [polarize(g, c, variant) for g in I.gens])


def ball_ideal_identity(M: Multicomplex) -> bool:
    """Stanley-Reisner ideal of the ball equals the polarized outside-ideal."""
    lhs = stanley_reisner(bier_ball(M))
    rhs = polarize_ideal(complement_ideal(M, capped=False), M.cap, POL)
    return lhs == rhs


class GeneratorFormula:
    """The three-part generator sum for the sphere ideal.

    Holds the raw (possibly non-minimal) generator list in the order
    prefix-polarized outside-ideal, suffix-polarized dual outside-ideal,
    polarized pure powers, together with the minimalized ideal.
    """

    def __init__(self, M: Multicomplex):
        if M.is_full:
            raise ValueError("a full multicomplex has no Bier sphere")
        c = M.cap
        self.cap = c
        self.variables = polarized_variables(c)
        part1 = [polarize(g, c, POL) for g in complement_ideal(M, capped=True).gens]
        dual = complement_ideal(alexander_dual(M), capped=True)
        part2 = [polarize(g, c, POL_STAR) for g in dual.gens]
        part3 = [polarize(g, c, POL) for g in pure_power_ideal(c).gens]
        self.parts = (tuple(part1), tuple(part2), tuple(part3))
        self.raw_gens = tuple(part1 + part2 + part3)
        self.ideal = MonomialIdeal.from_generators(len(self.variables), self.raw_gens)
        self.is_minimal = set(self.raw_gens) == set(self.ideal.gens)


def generator_formula(M: Multicomplex) -> GeneratorFormula:
    return GeneratorFormula(M)


def linkage_identities(I: MonomialIdeal, c) -> tuple[bool, bool]:
    """Check P:(I+P) = I^dual + P and its polarized suffix form.

    I must be a c-ideal; P is the pure power ideal (x_i^{c_i+1}).
    """
    c = tuple(c)
    if I.is_unit:
        raise ValueError("the unit ideal is not a c-ideal")
    for g in I.gens:
        if not divides(g, c):
            raise ValueError(f"generator {g} is not a c-monomial for c={c}")
    P = pure_power_ideal(c)
    plain = colon(P, I + P) == ideal_alexander_dual(I, c) + P
    lhs = colon(polarize_ideal(P, c, POL), polarize_ideal(I + P, c, POL))
    rhs = polarize_ideal(ideal_alexander_dual(I, c) + P, c, POL_STAR)
    polarized = lhs == rhs
    return plain, polarized
