"""Exponent vectors, finite multicomplexes and monomial ideals.

Monomials are represented by their exponent tuples.  A multicomplex is a
divisor-closed finite set of exponent tuples bounded by a cap vector c;
monomial ideals are stored through their unique minimal generating set.
All values are immutable and every operation is a pure function.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

Exponent = tuple[int, ...]


def degree(a: Exponent) -> int:
    return sum(a)


def divides(a: Exponent, b: Exponent) -> bool:
    """True if x^a divides x^b, i.e. a <= b entrywise."""
    return all(x <= y for x, y in zip(a, b))


def diamond(a: Exponent, i: int, j: int) -> Exponent:
    """Replace the exponent of variable i (1-based) by j."""
    return a[: i - 1] + (j,) + a[i:]


def monomial_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_gcd(a: Exponent, b: Exponent) -> Exponent:
    return tuple(min(x, y) for x, y in zip(a, b))


def monomial_quotient(a: Exponent, b: Exponent) -> Exponent:
    """Exponent of x^a / gcd(x^a, x^b)."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def cap_monomials(c: Exponent):
    """Iterate all exponents a with 0 <= a_i <= c_i."""
    return itertools.product(*(range(ci + 1) for ci in c))


def minimalize(gens) -> tuple[Exponent, ...]:
    """Minimal elements of a generator set under divisibility, sorted."""
    gens = sorted(set(gens))
    keep = []
    for g in gens:
        if not any(divides(h, g) for h in keep):
            keep = [h for h in keep if not divides(g, h)] + [g]
    return tuple(sorted(keep))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators."""

    nvars: int
    gens: tuple[Exponent, ...]

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.nvars or any(e < 0 for e in g):
                raise ValueError(f"bad generator {g} for {self.nvars} variables")
        if self.gens != minimalize(self.gens):
            raise ValueError("generators are not a sorted minimal set")

    @classmethod
    def from_generators(cls, nvars: int, gens) -> "MonomialIdeal":
        return cls(nvars, minimalize(gens))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return (0,) * self.nvars in self.gens

    def contains(self, a: Exponent) -> bool:
        return any(divides(g, a) for g in self.gens)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        return MonomialIdeal.from_generators(self.nvars, self.gens + other.gens)


def pure_power_ideal(c: Exponent) -> MonomialIdeal:
    """The ideal (x_1^{c_1+1}, ..., x_n^{c_n+1})."""
    n = len(c)
    gens = [diamond((0,) * n, i + 1, c[i] + 1) for i in range(n)]
    return MonomialIdeal.from_generators(n, gens)


@dataclass(frozen=True)
class Multicomplex:
    """A finite divisor-closed set of c-monomials, containing 1."""

    cap: Exponent
    members: frozenset[Exponent]

    def __post_init__(self):
        c = self.cap
        if any(e < 0 for e in c):
            raise ValueError("cap entries must be non-negative")
        if not self.members:
            raise ValueError("a multicomplex is non-empty")
        zero = (0,) * len(c)
        if zero not in self.members:
            raise ValueError("a multicomplex contains the monomial 1")
        for m in self.members:
            if len(m) != len(c):
                raise ValueError(f"member {m} has wrong length")
            if not divides(m, c):
                raise ValueError(f"member {m} exceeds the cap {c}")
            # one-step divisor closure implies full closure
            for i in range(len(c)):
                if m[i] > 0 and diamond(m, i + 1, m[i] - 1) not in self.members:
                    raise ValueError(f"not divisor-closed at {m}, variable {i + 1}")

    @property
    def nvars(self) -> int:
        return len(self.cap)

    @property
    def is_full(self) -> bool:
        return len(self.members) == math.prod(ci + 1 for ci in self.cap)

    @property
    def is_proper(self) -> bool:
        return not self.is_full

    def non_members(self) -> list[Exponent]:
        """All c-monomials outside the multicomplex."""
        return [a for a in cap_monomials(self.cap) if a not in self.members]


def multicomplex(c, members) -> Multicomplex:
    return Multicomplex(tuple(c), frozenset(tuple(m) for m in members))


def closure_from_generators(c, gens) -> Multicomplex:
    """Smallest multicomplex with cap c containing the given monomials."""
    c = tuple(c)
    todo = [tuple(g) for g in gens]
    for g in todo:
        if not divides(g, c):
            raise ValueError(f"generator {g} exceeds the cap {c}")
    seen = {(0,) * len(c)}
    while todo:
        m = todo.pop()
        if m in seen:
            continue
        seen.add(m)
        for i in range(len(c)):
            if m[i] > 0:
                todo.append(diamond(m, i + 1, m[i] - 1))
    return Multicomplex(c, frozenset(seen))


def f_vector(M: Multicomplex) -> tuple[int, ...]:
    """Degree counts f_i = #{m in M : deg m = i}, padded to index |c|."""
    total = sum(M.cap)
    f = [0] * (total + 1)
    for m in M.members:
        f[degree(m)] += 1
    return tuple(f)


def lcm_of(M: Multicomplex) -> Exponent:
    """Entrywise maximum over the members."""
    lcm = (0,) * M.nvars
    for m in M.members:
        lcm = monomial_lcm(lcm, m)
    return lcm


def alexander_dual(M: Multicomplex) -> Multicomplex:
    """The dual multicomplex {c - a : a a c-monomial not in M}."""
    if M.is_full:
        raise ValueError("dual of full multicomplex undefined")
    c = M.cap
    dual = frozenset(tuple(ci - ai for ci, ai in zip(c, a)) for a in M.non_members())
    return Multicomplex(c, dual)


def complement_ideal(M: Multicomplex, capped: bool = True) -> MonomialIdeal:
    """Ideal of the monomials outside M.

    With capped=True this is generated by the c-monomials not in M; with
    capped=False it is the ideal of all monomials not in M, whose minimal
    generators are bounded by c + (1,...,1).
    """
    gens = list(M.non_members())
    if not capped:
        gens += list(pure_power_ideal(M.cap).gens)
    return MonomialIdeal.from_generators(M.nvars, gens)


def ideal_alexander_dual(I: MonomialIdeal, c) -> MonomialIdeal:
    """Alexander dual of a c-ideal: (x^{c-a} : a a c-monomial not in I)."""
    c = tuple(c)
    for g in I.gens:
        if not divides(g, c):
            raise ValueError(f"generator {g} is not a c-monomial for c={c}")
    gens = [
        tuple(ci - ai for ci, ai in zip(c, a))
        for a in cap_monomials(c)
        if not I.contains(a)
    ]
    return MonomialIdeal.from_generators(I.nvars, gens)


def _intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    gens = [monomial_lcm(u, v) for u in I.gens for v in J.gens]
    return MonomialIdeal.from_generators(I.nvars, gens)


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """The quotient ideal I : J = {f : f J in I}."""
    if I.nvars != J.nvars:
        raise ValueError("variable counts differ")
    if J.is_zero:
        raise ValueError("colon by the zero ideal is undefined")
    parts = [
        MonomialIdeal.from_generators(I.nvars, [monomial_quotient(u, g) for u in I.gens])
        for g in J.gens
    ]
    result = parts[0]
    for p in parts[1:]:
        result = _intersect(result, p)
    return result
