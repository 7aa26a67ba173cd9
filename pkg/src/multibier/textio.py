"""Text and JSON input/output for multicomplexes, ideals, and facet lists.

Text grammar: a header line ``cap c_1 ... c_n`` or ``ideal n``, then for
multicomplexes a mode keyword ``members`` or ``generators``, then one
exponent tuple per line.  ``#`` starts a comment; blank lines are skipped.
The JSON form uses the same field names (cap, members, generators, ideal).
"""

from __future__ import annotations

import json
import re

from .complexes import (
    SimplicialComplex,
    Vtx,
    complex_from_facets,
    label_key,
    render_label,
)
from .monomials import (
    MonomialIdeal,
    Multicomplex,
    closure_from_generators,
    multicomplex,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _significant_lines(text: str):
    for idx, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield idx, line


def _parse_tuple(line: str, lineno: int, width: int):
    parts = line.split()
    out = []
    for k, tok in enumerate(parts):
        try:
            v = int(tok)
        except ValueError:
            col = line.index(tok) + 1
            raise ParseError(f"expected an integer, got {tok!r}", lineno, col)
        if v < 0:
            raise ParseError(f"negative exponent {v}", lineno, line.index(tok) + 1)
        out.append(v)
    if len(out) != width:
        raise ParseError(
            f"expected {width} exponents, got {len(out)}", lineno
        )
    return tuple(out)


def parse_input(text: str):
    """Parse the text (or JSON) grammar into a Multicomplex or MonomialIdeal."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json(stripped)
    lines = list(_significant_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    lineno, header = lines[0]
    words = header.split()
    if words[0] == "cap":
        if len(words) < 2:
            raise ParseError("cap header needs at least one entry", lineno)
        cap = _parse_tuple(" ".join(words[1:]), lineno, len(words) - 1)
        if len(lines) < 2:
            raise ParseError("missing mode line (members or generators)", lineno)
        mlineno, mode = lines[1]
        if mode not in ("members", "generators"):
            raise ParseError(
                f"expected 'members' or 'generators', got {mode!r}", mlineno
            )
        tuples = []
        for tlineno, tline in lines[2:]:
            t = _parse_tuple(tline, tlineno, len(cap))
            for i, (e, ci) in enumerate(zip(t, cap)):
                if e > ci:
                    raise ParseError(
                        f"exponent {e} exceeds cap {ci} in position {i + 1}", tlineno
                    )
            tuples.append(t)
        if mode == "generators":
            return closure_from_generators(cap, set(tuples))
        try:
            return multicomplex(cap, set(tuples) | {(0,) * len(cap)})
        except ValueError as exc:
            raise ParseError(str(exc), lines[-1][0] if lines[2:] else mlineno)
    if words[0] == "ideal":
        if len(words) != 2 or not words[1].isdigit():
            raise ParseError("ideal header needs a variable count", lineno)
        n = int(words[1])
        gens = [_parse_tuple(tline, tlineno, n) for tlineno, tline in lines[1:]]
        return MonomialIdeal.from_generators(n, gens)
    raise ParseError(f"unknown header {words[0]!r}", lineno)


def render_multicomplex(M: Multicomplex) -> str:
    lines = ["cap " + " ".join(str(c) for c in M.cap), "members"]
    lines += [" ".join(str(e) for e in m) for m in sorted(M.members)]
    return "\n".join(lines) + "\n"


def render_ideal(I: MonomialIdeal) -> str:
    lines = [f"ideal {I.nvars}"]
    lines += [" ".join(str(e) for e in g) for g in I.gens]
    return "\n".join(lines) + "\n"


def to_json(value) -> str:
    if isinstance(value, Multicomplex):
        doc = {"cap": list(value.cap), "members": sorted(map(list, value.members))}
    elif isinstance(value, MonomialIdeal):
        doc = {"ideal": value.nvars, "generators": [list(g) for g in value.gens]}
    elif isinstance(value, SimplicialComplex):
        doc = {"facets": [[label_text(v) for v in sorted(f, key=label_key)]
                          for f in value.sorted_facets()]}
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")
    return json.dumps(doc, indent=2) + "\n"


def from_json(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno)
    if "cap" in doc:
        cap = tuple(doc["cap"])
        if "generators" in doc:
            return closure_from_generators(cap, {tuple(g) for g in doc["generators"]})
        members = {tuple(m) for m in doc.get("members", [])}
        return multicomplex(cap, members | {(0,) * len(cap)})
    if "ideal" in doc:
        return MonomialIdeal.from_generators(
            doc["ideal"], [tuple(g) for g in doc.get("generators", [])]
        )
    if "facets" in doc:
        return parse_facets("\n".join(" ".join(f) for f in doc["facets"]) or "")
    raise ParseError("unrecognized JSON document", 1)


# ---------------------------------------------------------------------------
# Facet lists
# ---------------------------------------------------------------------------

_LABEL_RE = re.compile(r"^x(\d+)\^\((\d+)\)$")


def label_text(v) -> str:
    return render_label(v) if isinstance(v, Vtx) else str(v)


def parse_vertex(token: str):
    m = _LABEL_RE.match(token)
    if m:
        return Vtx(int(m.group(1)), int(m.group(2)))
    return token


def parse_facets(text: str) -> SimplicialComplex:
    """One facet per line, space-separated vertex labels.

    An entirely empty input denotes the complex with the single facet ∅.
    """
    facets = []
    for lineno, line in _significant_lines(text):
        facets.append({parse_vertex(tok) for tok in line.split()})
    return complex_from_facets(facets if facets else [set()])


def render_facets(delta: SimplicialComplex) -> str:
    lines = []
    for f in delta.sorted_facets():
        lines.append(" ".join(label_text(v) for v in sorted(f, key=label_key)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Monomial notation
# ---------------------------------------------------------------------------

_MONO_TOKEN = re.compile(r"^x(\d+)(?:\^(\d+)|_(\d+))?$")


def format_monomial(exp) -> str:
    if all(e == 0 for e in exp):
        return "1"
    parts = []
    for i, e in enumerate(exp, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def format_polarized(exp, variables) -> str:
    """Squarefree monomial over polarized variables, rendered as x<i>_<j>."""
    parts = [
        f"x{v.var}_{v.level}"
        for v, e in zip(variables, exp)
        if e
    ]
    return "*".join(parts) if parts else "1"


def format_ideal(gens) -> str:
    return "(" + ", ".join(format_monomial(g) for g in gens) + ")"


def format_polarized_ideal(gens, variables) -> str:
    return "(" + ", ".join(format_polarized(g, variables) for g in gens) + ")"


def parse_monomial(token: str, nvars: int):
    """Accepts x<i>^<e> products; x<i>_<j> tokens map to the prefix
    polarization slot (variable i, exponent j+1 is NOT implied; they are
    only valid where the caller expects polarized variables)."""
    if token.strip() == "1":
        return (0,) * nvars
    exp = [0] * nvars
    for part in token.replace(" ", "").split("*"):
        m = _MONO_TOKEN.match(part)
        if not m or m.group(3) is not None:
            raise ValueError(f"bad monomial token {part!r}")
        i = int(m.group(1))
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range")
        exp[i - 1] += int(m.group(2)) if m.group(2) else 1
    return tuple(exp)
