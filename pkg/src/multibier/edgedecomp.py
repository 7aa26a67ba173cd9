"""Edge decomposability: generic search and constructive certificates.

A certificate is a tree whose leaves are base cases (simplex boundaries or
the complex {emptyset}) and whose inner nodes record either an edge step
(link and contraction subtrees, with the link condition holding at the
edge), a join split, or an explicit vertex relabeling (dual permutation,
variable reduction, variable reversal).  Every node stores the complex it
certifies, so certificates can be re-verified independently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    SimplicialComplex,
    complex_from_facets,
    complexes_equal,
    contraction,
    facet_key,
    join,
    label_key,
    link,
    link_condition,
    relabel,
    Vtx,
)
from .bier import bier_sphere
from .monomials import Multicomplex, alexander_dual, multicomplex

DEFAULT_BUDGET = 10**6

UNKNOWN = "unknown"


@dataclass
class BaseEmpty:
    complex: SimplicialComplex


@dataclass
class BaseSimplexBoundary:
    complex: SimplicialComplex


@dataclass
class JoinStep:
    complex: SimplicialComplex
    factors: tuple


@dataclass
class EdgeStep:
    complex: SimplicialComplex
    removed: object  # vertex that disappears in the contraction
    kept: object
    link_map: dict | None  # None means the identity
    link_child: object
    contraction_map: dict | None
    contraction_child: object


@dataclass
class DualStep:
    complex: SimplicialComplex
    vmap: dict
    child: object


@dataclass
class ReductionStep:
    complex: SimplicialComplex
    vmap: dict
    child: object


@dataclass
class RelabelStep:
    complex: SimplicialComplex
    vmap: dict
    child: object


def _is_empty_complex(delta: SimplicialComplex) -> bool:
    return delta.facets == frozenset({frozenset()})


def _is_simplex_boundary(delta: SimplicialComplex) -> bool:
    verts = set().union(*delta.facets) if delta.facets else set()
    if len(verts) < 2:
        return False
    expected = {frozenset(verts - {v}) for v in verts}
    return delta.facets == frozenset(expected)


def sphere_surrogate(delta: SimplicialComplex) -> bool:
    """Checkable stand-in for being a sphere: pure pseudomanifold with the
    right reduced Euler characteristic.  Not a topological proof."""
    if delta.is_void or not delta.is_pure:
        return False
    if _is_empty_complex(delta):
        return True
    counts: dict[frozenset, int] = {}
    for f in delta.facets:
        for v in f:
            r = f - {v}
            counts[r] = counts.get(r, 0) + 1
    if any(c != 2 for c in counts.values()):
        return False
    euler = sum((-1) ** (len(f) - 1) for f in delta.faces())
    return euler == (-1) ** delta.dim


def _apply(vmap, delta):
    return relabel(delta, vmap) if vmap is not None else delta


def is_edge_decomposable(delta: SimplicialComplex, budget: int = DEFAULT_BUDGET):
    """Depth-first search for an edge decomposition.

    Returns (True, certificate), (False, None) when the search space is
    exhausted, or (UNKNOWN, None) when the step budget runs out.  Candidate
    edges are tried in lexicographic order; subproblems are memoized on
    their exact labeled facet sets.
    """
    if delta.is_void or not delta.is_pure:
        raise ValueError("edge decomposability is defined for pure non-void complexes")
    memo: dict = {}
    steps = [budget]

    class _Budget(Exception):
        pass

    def rec(d: SimplicialComplex):
        key = d.facets
        if key in memo:
            return memo[key]
        if steps[0] <= 0:
            raise _Budget
        steps[0] -= 1
        if _is_empty_complex(d):
            memo[key] = BaseEmpty(d)
            return memo[key]
        if _is_simplex_boundary(d):
            memo[key] = BaseSimplexBoundary(d)
            return memo[key]
        result = None
        if d.is_pure:
            edges = sorted(
                (f for f in d.faces() if len(f) == 2), key=facet_key
            )
            for e in edges:
                i, j = sorted(e, key=label_key)
                if not link_condition(d, i, j):
                    continue
                lk = link(d, e)
                if lk.is_void or not lk.is_pure:
                    continue
                contr = contraction(d, i, j)
                if not contr.is_pure:
                    continue
                lcert = rec(lk)
                if not lcert:
                    continue
                ccert = rec(contr)
                if not ccert:
                    continue
                result = EdgeStep(d, i, j, None, lcert, None, ccert)
                break
        memo[key] = result
        return result

    try:
        cert = rec(delta)
    except _Budget:
        return UNKNOWN, None
    return (True, cert) if cert else (False, None)


def verify_certificate(cert) -> bool:
    """Re-verify a decomposition certificate from scratch.

    Raises AssertionError on the first failing condition.
    """
    if isinstance(cert, BaseEmpty):
        assert _is_empty_complex(cert.complex), "leaf is not the empty-facet complex"
        return True
    if isinstance(cert, BaseSimplexBoundary):
        assert _is_simplex_boundary(cert.complex), "leaf is not a simplex boundary"
        return True
    if isinstance(cert, JoinStep):
        assert cert.factors, "join step without factors"
        prod = cert.factors[0].complex
        for fac in cert.factors[1:]:
            prod = join(prod, fac.complex)
        assert complexes_equal(prod, cert.complex), "join step does not reassemble"
        return all(verify_certificate(f) for f in cert.factors)
    if isinstance(cert, EdgeStep):
        d = cert.complex
        i, j = cert.removed, cert.kept
        assert d.has_face({i, j}), "edge step on a non-edge"
        assert link_condition(d, i, j), "link condition fails at the edge step"
        lk = _apply(cert.link_map, link(d, {i, j}))
        assert complexes_equal(lk, cert.link_child.complex), "recorded link differs"
        contr = _apply(cert.contraction_map, contraction(d, i, j))
        assert complexes_equal(contr, cert.contraction_child.complex), (
            "recorded contraction differs"
        )
        return verify_certificate(cert.link_child) and verify_certificate(
            cert.contraction_child
        )
    if isinstance(cert, (DualStep, ReductionStep, RelabelStep)):
        image = relabel(cert.complex, cert.vmap)
        assert complexes_equal(image, cert.child.complex), "relabel image differs"
        return verify_certificate(cert.child)
    raise AssertionError(f"unknown certificate node {cert!r}")


# ---------------------------------------------------------------------------
# Constructive decomposition of Bier spheres
# ---------------------------------------------------------------------------


def _sphere_vertices(M: Multicomplex) -> set:
    return set().union(*bier_sphere(M).facets)


def _project_multicomplex(M: Multicomplex, keep: list[int]) -> Multicomplex:
    members = {tuple(m[i] for i in keep) for m in M.members}
    return multicomplex(tuple(M.cap[i] for i in keep), members)


def reduction_step(M: Multicomplex):
    """Eliminate the last variable when one of its extreme levels is absent.

    If x_n^(0) is not a vertex of the sphere, the levels of x_n are absorbed
    on top of those of x_1: the cap becomes (c_1+c_n, c_2, ..., c_{n-1}) and
    x_n^(j) is renamed x_1^(c_1+j).  If instead x_n^(c_n) is absent, the
    dual level reversal is applied first.  Returns None when both extreme
    levels are present.
    """
    from .bier import dual_vertex_map

    c = M.cap
    n = M.nvars
    if n < 2:
        raise ValueError("reduction needs at least two variables")
    if M.is_full:
        raise ValueError("reduction applies to proper multicomplexes")
    vs = _sphere_vertices(M)
    if Vtx(n, 0) not in vs:
        M2, c2, vmap = _reduce_missing_bottom(M)
        assert complexes_equal(relabel(bier_sphere(M), vmap), bier_sphere(M2))
        return M2, c2, vmap
    if Vtx(n, c[-1]) not in vs:
        pi = dual_vertex_map(c)
        Md = alexander_dual(M)
        M2, c2, inner = _reduce_missing_bottom(Md)
        vmap = {v: inner[pi[v]] for v in vs}
        assert complexes_equal(relabel(bier_sphere(M), vmap), bier_sphere(M2))
        return M2, c2, vmap
    return None


def _reduce_missing_bottom(M: Multicomplex):
    """The x_n^(0)-absent case: M uses only the first n-1 variables."""
    c = M.cap
    n = M.nvars
    assert all(m[-1] == 0 for m in M.members), "a member is divisible by x_n"
    c2 = (c[0] + c[-1],) + c[1:-1]
    members = {m[:-1] for m in M.members}
    M2 = multicomplex(c2, members)
    vmap = {}
    for i in range(1, n):
        for j in range(c[i - 1] + 1):
            vmap[Vtx(i, j)] = Vtx(i, j)
    for j in range(1, c[-1] + 1):
        vmap[Vtx(n, j)] = Vtx(1, c[0] + j)
    return M2, c2, vmap


def link_of_top_vertex(M: Multicomplex):
    """Link of x_1^(c_1) in the sphere, realized as a smaller Bier sphere.

    Lowers the cap of the first variable by one and keeps the members that
    still fit; the identification is the identity on labels.
    """
    c = M.cap
    assert c[0] >= 1 and Vtx(1, c[0]) in _sphere_vertices(M)
    c2 = (c[0] - 1,) + c[1:]
    M2 = multicomplex(c2, {m for m in M.members if m[0] <= c2[0]})
    assert M2.is_proper, "restricted multicomplex must stay proper"
    lhs = bier_sphere(M2)
    assert complexes_equal(lhs, link(bier_sphere(M), {Vtx(1, c[0])}))
    return M2, c2


def edge_link_model(M: Multicomplex):
    """The link of the edge {x_1^(c_1), x_n^(0)} as an explicit Bier sphere.

    Returns (M', c', vmap) with vmap sending x_i^(j) to x_i^(c'_i - j) for
    the intermediate cap c' = (c_1 - 1, c_2, ..., c_n).
    """
    c = M.cap
    n = M.nvars
    vs = _sphere_vertices(M)
    if n < 2 or Vtx(1, c[0]) not in vs or Vtx(n, 0) not in vs:
        raise ValueError("edge link model needs both extreme vertices present")
    M1, c1 = link_of_top_vertex(M)
    M2 = alexander_dual(M1)
    c_link = c1[:-1] + (c1[-1] - 1,)
    M_link = multicomplex(c_link, {m for m in M2.members if m[-1] <= c_link[-1]})
    assert M_link.is_proper, "link multicomplex must be proper"
    vmap = {
        Vtx(i + 1, j): Vtx(i + 1, c1[i] - j)
        for i in range(n)
        for j in range(c[i] + 1)
        if (i, j) != (0, c[0]) and (i, j) != (n - 1, 0)
    }
    edge = {Vtx(1, c[0]), Vtx(n, 0)}
    image = relabel(link(bier_sphere(M), edge), vmap)
    assert complexes_equal(image, bier_sphere(M_link))
    return M_link, c_link, vmap


def edge_contraction_model(M: Multicomplex):
    """The contraction across {x_1^(c_1), x_n^(0)} as an explicit Bier sphere.

    The surviving monomials are those of the form x_1^s x_n^t u with s = c_1
    or t = 0, mapped to x_1^(s+t) u; x_n^(j) is renamed x_1^(c_1+j).
    """
    c = M.cap
    n = M.nvars
    vs = _sphere_vertices(M)
    if n < 2 or Vtx(1, c[0]) not in vs or Vtx(n, 0) not in vs:
        raise ValueError("edge contraction model needs both extreme vertices present")
    c2 = (c[0] + c[-1],) + c[1:-1]
    members = set()
    for m in M.members:
        s, t = m[0], m[-1]
        if s == c[0] or t == 0:
            members.add((s + t,) + m[1:-1])
    M2 = multicomplex(c2, members)
    assert M2.is_proper, "contracted multicomplex must be proper"
    rho = {}
    for i in range(1, n):
        for j in range(c[i - 1] + 1):
            rho[Vtx(i, j)] = Vtx(i, j)
    for j in range(1, c[-1] + 1):
        rho[Vtx(n, j)] = Vtx(1, c[0] + j)
    contr = contraction(bier_sphere(M), Vtx(n, 0), Vtx(1, c[0]))
    image = relabel(contr, rho)
    target = bier_sphere(M2)
    assert complexes_equal(image, target)
    assert sphere_surrogate(target)
    return M2, c2, rho


def bier_decomposition(M: Multicomplex):
    """Constructive edge-decomposition certificate for the sphere of M."""
    if M.is_full:
        raise ValueError("a full multicomplex has no Bier sphere")
    cert = _decompose(M)
    verify_certificate(cert)
    return cert


def _decompose(M: Multicomplex):
    c = M.cap
    n = M.nvars
    sphere = bier_sphere(M)

    if any(ci == 0 for ci in c) and n > 1:
        keep = [i for i in range(n) if c[i] > 0]
        if not keep:
            raise ValueError("degenerate cap with no levels")
        M2 = _project_multicomplex(M, keep)
        vmap = {
            Vtx(i + 1, j): Vtx(keep.index(i) + 1, j)
            for i in keep
            for j in range(c[i] + 1)
        }
        return RelabelStep(sphere, vmap, _decompose(M2))

    if n == 1:
        return _one_variable_certificate(M, sphere)

    if sum(c) - 2 <= 1:
        status, cert = is_edge_decomposable(sphere)
        assert status is True, "low-dimensional sphere search failed"
        return cert

    vs = set().union(*sphere.facets)
    incomplete = [
        i for i in range(n) if Vtx(i + 1, 0) not in vs or Vtx(i + 1, c[i]) not in vs
    ]
    if incomplete:
        # handle the last variable directly; otherwise move an incomplete
        # variable into last position (swapping twice would loop)
        k = n - 1 if n - 1 in incomplete else incomplete[0]
        if k != n - 1:
            # move the variable with a missing extreme level into last position
            perm = list(range(n))
            perm[k], perm[n - 1] = perm[n - 1], perm[k]
            M2 = _project_multicomplex(M, perm)
            vmap = {
                Vtx(i + 1, j): Vtx(perm.index(i) + 1, j)
                for i in range(n)
                for j in range(c[i] + 1)
            }
            return RelabelStep(sphere, vmap, _decompose(M2))
        if Vtx(n, 0) not in vs:
            M2, c2, vmap = _reduce_missing_bottom(M)
            return ReductionStep(sphere, vmap, _decompose(M2))
        from .bier import dual_vertex_map

        pi = {v: w for v, w in dual_vertex_map(c).items() if v in vs}
        return DualStep(sphere, pi, _decompose(alexander_dual(M)))

    edge = {Vtx(1, c[0]), Vtx(n, 0)}
    assert link_condition(sphere, Vtx(1, c[0]), Vtx(n, 0))
    M_link, _, link_map = edge_link_model(M)
    M_contr, _, rho = edge_contraction_model(M)
    return EdgeStep(
        sphere,
        Vtx(n, 0),
        Vtx(1, c[0]),
        link_map,
        _decompose(M_link),
        rho,
        _decompose(M_contr),
    )


def _one_variable_certificate(M: Multicomplex, sphere: SimplicialComplex):
    """Single variable: the sphere is a join of two simplex boundaries."""
    c = M.cap[0]
    b = max(m[0] for m in M.members)
    assert len(M.members) == b + 1, "one-variable multicomplexes are intervals"
    low = [Vtx(1, j) for j in range(b + 1)]
    high = [Vtx(1, j) for j in range(b + 1, c + 1)]
    factors = []
    for part in (low, high):
        if len(part) >= 2:
            factors.append(
                BaseSimplexBoundary(
                    complex_from_facets([set(part) - {v} for v in part], part)
                )
            )
    if not factors:
        return BaseEmpty(sphere)
    if len(factors) == 1:
        assert complexes_equal(factors[0].complex, sphere)
        return BaseSimplexBoundary(sphere)
    return JoinStep(sphere, tuple(factors))
