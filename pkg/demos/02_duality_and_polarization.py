#!/usr/bin/env python3
"""Alexander duality and the three-part generator formula.

For a proper multicomplex M, the Stanley-Reisner ideal of its Bier sphere
is generated by a polarization of the capped complement ideal of M, the
opposite polarization of the complement ideal of the dual, and polarized
pure powers.  The combined generating set can fail to be minimal.
"""

from multibier import (
    alexander_dual,
    ball_ideal_identity,
    closure_from_generators,
    complement_ideal,
    complex_from_facets,
    generator_formula,
    linkage_identities,
    multicomplex_from_complex,
)
from multibier.textio import format_ideal, format_polarized_ideal

M = closure_from_generators((2, 2, 2), {(1, 0, 1), (0, 1, 2)})
print("M =", sorted(M.members))

I = complement_ideal(M, capped=True)
print("I_c(M)      =", format_ideal(I.gens))
D = alexander_dual(M)
print("M^dual      =", sorted(D.members))
print("I_c(M^dual) =", format_ideal(complement_ideal(D, capped=True).gens))

print("\nball ideal identity (polarized complement):", ball_ideal_identity(M))

gf = generator_formula(M)
print("\nsphere ideal, three parts:")
for name, part in zip(("from M", "from the dual", "pure powers"), gf.parts):
    print(f"  {name:14s}", format_polarized_ideal(part, gf.variables))
print("minimal as given:", gf.is_minimal)

plain, polarized = linkage_identities(I, M.cap)
print("\ncolon (linkage) identities:", plain, polarized)

# The squarefree case recovers the classical picture: a single simplicial
# complex and its Alexander dual, with the well known non-minimal example.
d = complex_from_facets([{1, 2}, {3}], [1, 2, 3])
gf = generator_formula(multicomplex_from_complex(d))
print("\nsquarefree example on facets {1,2},{3}:")
for part in gf.parts:
    print("  ", format_polarized_ideal(part, gf.variables))
print("minimal as given:", gf.is_minimal)
