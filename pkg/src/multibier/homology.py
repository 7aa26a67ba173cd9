"""Exact reduced simplicial homology and Betti tables of monomial ideals.

Homology ranks are computed by fraction-free integer elimination (exact over
the rationals) or by elimination over a prime field.  Multigraded Betti
numbers of Stanley-Reisner quotients come from reduced homology of
vertex-induced subcomplexes; graded tables of arbitrary monomial ideals are
obtained through polarization, which leaves graded Betti numbers unchanged.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bier import bier_sphere, lambda_complex
from .complexes import SimplicialComplex, complex_from_ideal, label_key
from .monomials import (
    MonomialIdeal,
    Multicomplex,
    complement_ideal,
    lcm_of,
)
from .polarization import POL, polarize_ideal, polarized_variables

HOCHSTER_VERTEX_LIMIT = 20
DEFAULT_PRIME = 32003

Field = str | tuple[str, int]  # "Q" or ("p", prime)


def _rank_rational(rows: list[list[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integer rows."""
    m = [r[:] for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if f or prev != 1:
                row = m[r]
                top = m[rank]
                for k in range(col, ncols):
                    row[k] = (p * row[k] - f * top[k]) // prev
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if f:
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def _rank(rows, fld: Field) -> int:
    if fld == "Q":
        return _rank_rational(rows)
    return _rank_mod_p(rows, fld[1])


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology dimensions, indexed from -1 upward."""

    dims: tuple[int, ...]  # dims[k] = dim of reduced H_{k-1}
    field: Field

    def reduced(self, k: int) -> int:
        idx = k + 1
        if 0 <= idx < len(self.dims):
            return self.dims[idx]
        return 0


def reduced_homology(delta: SimplicialComplex, fld: Field = "Q") -> HomologyProfile:
    """Reduced homology over Q or GF(p), including the empty face."""
    if delta.is_void:
        return HomologyProfile((), fld)
    by_card: dict[int, list] = {}
    for f in delta.faces():
        by_card.setdefault(len(f), []).append(tuple(sorted(f, key=label_key)))
    top = max(by_card)
    for c in range(top + 1):
        by_card.setdefault(c, [])
        by_card[c].sort()
    index = {c: {f: k for k, f in enumerate(by_card[c])} for c in by_card}
    ranks = [0] * (top + 2)  # ranks[c] = rank of the map card c -> card c-1
    for c in range(1, top + 1):
        rows = []
        lower = index[c - 1]
        for f in by_card[c]:
            row = [0] * len(lower)
            for pos in range(len(f)):
                sub = f[:pos] + f[pos + 1 :]
                row[lower[sub]] = (-1) ** pos
            rows.append(row)
        ranks[c] = _rank(rows, fld)
    dims = tuple(
        len(by_card[c]) - ranks[c] - ranks[c + 1] for c in range(top + 1)
    )
    return HomologyProfile(dims, fld)


@dataclass
class BettiTable:
    """Graded (and optionally multigraded) Betti numbers of a quotient."""

    nvars: int
    graded: dict[tuple[int, int], int]
    multigraded: dict[tuple[int, frozenset], int] = field(default_factory=dict)
    field_used: Field = "Q"

    def beta(self, i: int, j: int) -> int:
        return self.graded.get((i, j), 0)

    def beta_multi(self, i: int, sigma) -> int:
        return self.multigraded.get((i, frozenset(sigma)), 0)

    def totals(self) -> tuple[int, ...]:
        p = max((i for i, _ in self.graded), default=0)
        return tuple(
            sum(v for (i, _), v in self.graded.items() if i == k) for k in range(p + 1)
        )

    def projective_dimension(self) -> int:
        return max((i for (i, _), v in self.graded.items() if v), default=0)

    def render(self) -> str:
        """Macaulay2-style grid: entry (row r, column i) is beta_{i, i+r}."""
        p = self.projective_dimension()
        maxrow = max((j - i for (i, j), v in self.graded.items() if v), default=0)
        totals = self.totals()
        grid = [[self.beta(i, i + r) for i in range(p + 1)] for r in range(maxrow + 1)]
        cells = [[str(t) for t in totals]] + [
            [str(x) if x else "." for x in row] for row in grid
        ]
        widths = [max(len(row[k]) for row in cells) for k in range(p + 1)]
        labels = ["total"] + [str(r) for r in range(maxrow + 1)]
        lines = []
        for lab, row in zip(labels, cells):
            body = " ".join(s.rjust(w) for s, w in zip(row, widths))
            lines.append(f"{lab.rjust(10)}: {body}")
        return "\n".join(lines)

    def records(self):
        """Machine-readable (i, j, sigma, dim) listing."""
        out = []
        for (i, sigma), v in sorted(
            self.multigraded.items(), key=lambda kv: (kv[0][0], sorted(map(label_key, kv[0][1])))
        ):
            out.append((i, len(sigma), tuple(sorted(sigma, key=label_key)), v))
        return out


def hochster_betti(delta: SimplicialComplex, fld: Field = "Q") -> BettiTable:
    """Multigraded Betti numbers of the Stanley-Reisner quotient.

    beta_{i, sigma} is the reduced homology of the restriction to sigma in
    dimension |sigma| - i - 1, summed over vertex subsets for the graded
    table.  The vertex count is limited to HOCHSTER_VERTEX_LIMIT.
    """
    verts = delta.vertices
    n = len(verts)
    if n > HOCHSTER_VERTEX_LIMIT:
        raise ValueError(f"{n} vertices exceed the Hochster limit {HOCHSTER_VERTEX_LIMIT}")
    multigraded: dict[tuple[int, frozenset], int] = {}
    graded: dict[tuple[int, int], int] = {}
    cache: dict[frozenset, HomologyProfile] = {}
    for r in range(n + 1):
        for sigma in itertools.combinations(verts, r):
            s = frozenset(sigma)
            cut = {g & s for g in delta.facets}
            rest_facets = frozenset(f for f in cut if not any(f < g2 for g2 in cut))
            prof = cache.get(rest_facets)
            if prof is None:
                prof = reduced_homology(SimplicialComplex(s, rest_facets), fld)
                cache[rest_facets] = prof
            for i in range(r + 1):
                d = prof.reduced(r - i - 1)
                if d:
                    multigraded[(i, s)] = d
                    graded[(i, r)] = graded.get((i, r), 0) + d
    return BettiTable(n, graded, multigraded, fld)


def betti_table(I: MonomialIdeal, fld: Field = "Q") -> BettiTable:
    """Graded Betti table of S/I via polarization and Hochster's formula."""
    if I.is_unit:
        raise ValueError("Betti table of the zero quotient is undefined")
    cap = tuple(
        max(0, max((g[i] for g in I.gens), default=0) - 1) for i in range(I.nvars)
    )
    pol = polarize_ideal(I, cap, POL)
    delta = complex_from_ideal(pol, polarized_variables(cap))
    table = hochster_betti(delta, fld)
    return BettiTable(I.nvars, table.graded, {}, fld)


def verify_cone_formula(b: SimplicialComplex, fld: Field = "Q") -> bool:
    """Betti numbers of a cone ball against those of its boundary sphere.

    For a cone ball B of dimension d-1 on n vertices the identity is
    beta_{i,F}(boundary) = beta_{i,F}(B) + beta_{n+1-d-i, complement}(B),
    checked entrywise over all squarefree multidegrees.
    """
    from .bier import is_cone
    from .complexes import boundary

    if is_cone(b) is None:
        raise ValueError("complex is not a cone")
    if not b.is_pure:
        raise ValueError("cone formula requires a pure complex")
    n = len(b.vertices)
    d = b.dim + 1
    bd = SimplicialComplex(b.vertices, boundary(b).facets)
    tb = hochster_betti(b, fld)
    tbd = hochster_betti(bd, fld)
    verts = set(b.vertices)
    seen = {s for (_, s) in tb.multigraded} | {s for (_, s) in tbd.multigraded}
    seen |= {frozenset(verts - s) for s in seen}
    for s in seen:
        comp = frozenset(verts - s)
        for i in range(-n, 2 * n + 2):
            lhs = tbd.beta_multi(i, s)
            rhs = tb.beta_multi(i, s) + tb.beta_multi(n + 1 - d - i, comp)
            if lhs != rhs:
                return False
    return True


def verify_bier_betti(M: Multicomplex, fld: Field = "Q") -> bool:
    """Graded Betti table of the sphere against the outside-ideal table.

    Requires Lcm(M) != x^c (otherwise the identity can fail); then
    beta_{i,j}(sphere quotient) = beta_{i,j}(S/I(M))
    + beta_{n+1-i, |c|+n-j}(S/I(M)).
    """
    c = M.cap
    if lcm_of(M) == c:
        raise ValueError("formula not applicable: Lcm(M) equals x^c")
    n = M.nvars
    cbar_total = sum(c) + n
    sphere = bier_sphere(M)
    sphere = SimplicialComplex(lambda_complex(c).vertices, sphere.facets)
    left = hochster_betti(sphere, fld)
    right = betti_table(complement_ideal(M, capped=False), fld)
    pairs = {(i, j) for (i, j) in left.graded}
    pairs |= {(i, j) for (i, j) in right.graded}
    pairs |= {(n + 1 - i, cbar_total - j) for (i, j) in right.graded}
    for i, j in pairs:
        if left.beta(i, j) != right.beta(i, j) + right.beta(n + 1 - i, cbar_total - j):
            return False
    return True
