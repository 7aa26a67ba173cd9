"""Batch identity checks for a single multicomplex, and enumeration helpers.

Every check returns a plain boolean so a driver can report them one by one;
exceptions are allowed to propagate since they indicate bugs, not failures
of the identities.
"""

from __future__ import annotations

from .monomials import (
    Multicomplex,
    cap_monomials,
    complement_ideal,
    f_vector,
    multicomplex,
)
from .complexes import face_vectors, is_o_sequence, stanley_reisner, verify_shelling
from .bier import (
    bier_ball,
    bier_sphere,
    complementary_ball,
    dual_iso_check,
    lambda_complex,
    shelling_order,
)
from .polarization import ball_ideal_identity, generator_formula, linkage_identities


def full_check(M: Multicomplex) -> dict[str, bool]:
    """Run the structural identities for one proper multicomplex."""
    c = M.cap
    results: dict[str, bool] = {}

    sphere_f = bier_sphere(M, method="facets", verify=False)
    sphere_b = bier_sphere(M, method="boundary", verify=False)
    results["facet formula equals boundary of ball"] = (
        sphere_f.facets == sphere_b.facets
    )

    ball = bier_ball(M)
    fv_ball = face_vectors(ball)
    fM = f_vector(M)
    results["ball h-vector equals f-vector of M"] = fv_ball.h == fM

    fv = face_vectors(sphere_f)
    d = sum(c)
    top = (d - 1) // 2
    g_expected = tuple(fM[i] - fM[d - i] for i in range(top + 1))
    results["sphere g-vector formula"] = fv.g[: top + 1] == g_expected

    results["Dehn-Sommerville symmetry"] = all(
        fv.h[i] == fv.h[d - 1 - i] for i in range(d)
    )
    results["g-vector is an O-sequence"] = is_o_sequence(fv.g[: top + 1])

    order = shelling_order(M)
    ok, h = verify_shelling(sphere_f, [bf.vertex_set(c) for bf in order])
    results["shelling order is a shelling"] = ok and tuple(h) == fv.h

    results["dual vertex permutation is an isomorphism"] = dual_iso_check(M)

    results["facets of ball and complement partition the join"] = (
        ball.facets | complementary_ball(M).facets == lambda_complex(c).facets
        and ball.facets.isdisjoint(complementary_ball(M).facets)
    )

    results["polarization identity for the ball ideal"] = ball_ideal_identity(M)

    # the sphere ideal lives in the full polarized ring, so vertices of the
    # ambient join that are absent from the sphere become degree-1 generators
    from .bier import all_levels
    from .complexes import complex_from_facets

    ambient = complex_from_facets(sphere_f.facets, all_levels(c))
    gf = generator_formula(M)
    results["three-part generator formula"] = gf.ideal == stanley_reisner(ambient)

    I = complement_ideal(M, capped=True)
    if I.gens:
        plain, polar = linkage_identities(I, c)
        results["linkage identity"] = plain
        results["polarized linkage identity"] = polar

    return results


def all_multicomplexes(c: tuple[int, ...], proper_only: bool = True):
    """Yield every multicomplex with the given cap, in a deterministic order.

    Generated by extending order ideals one monomial at a time in
    lexicographic order, so the cost is proportional to the output size.
    """
    # lex order is a linear extension of divisibility, so when monomial k is
    # considered all of its immediate divisors have already been decided
    nonzero = sorted(m for m in cap_monomials(c) if any(m))
    zero = (0,) * len(c)

    def gen(idx: int, members: set):
        if idx == len(nonzero):
            yield frozenset(members)
            return
        m = nonzero[idx]
        yield from gen(idx + 1, members)
        if all(p in members for p in _covers_below(m)):
            members.add(m)
            yield from gen(idx + 1, members)
            members.discard(m)

    for members in gen(0, {zero}):
        M = multicomplex(c, members)
        if proper_only and M.is_full:
            continue
        yield M


def _covers_below(m: tuple[int, ...]):
    for i, e in enumerate(m):
        if e > 0:
            yield m[:i] + (e - 1,) + m[i + 1 :]


def random_multicomplex(rng, c: tuple[int, ...], proper_only: bool = True):
    """Sample a multicomplex by taking the closure of a random generator set."""
    from .monomials import closure_from_generators

    monos = [m for m in cap_monomials(c) if any(m)]
    while True:
        k = rng.randrange(0, len(monos) + 1)
        gens = set(rng.sample(monos, k)) if k else set()
        M = closure_from_generators(c, gens)
        if not (proper_only and M.is_full):
            return M
