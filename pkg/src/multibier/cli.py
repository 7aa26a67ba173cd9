"""Command-line front end.

Reads a multicomplex or monomial ideal in the text or JSON grammar of
:mod:`multibier.textio`, dispatches one operation, and prints the result.
Exit codes: 0 success (and all verifications passed), 1 a verification
failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import textio
from .monomials import (
    MonomialIdeal,
    Multicomplex,
    alexander_dual,
    f_vector,
    ideal_alexander_dual,
)
from .complexes import face_vectors, label_key, verify_shelling
from .bier import bier_ball, bier_sphere, sphere_facet_data, shelling_order
from .polarization import POL, POL_STAR, generator_formula, linkage_identities, polarize_ideal, polarized_variables
from .homology import betti_table
from .edgedecomp import bier_decomposition, verify_certificate
from .textio import ParseError


def _field(spec: str):
    if spec == "q":
        return "Q"
    if spec.startswith("p:"):
        p = int(spec[2:])
        if p < 2:
            raise ValueError("characteristic must be a prime >= 2")
        return ("p", p)
    raise ValueError(f"bad field spec {spec!r} (use q or p:<prime>)")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _need(value, kind, command: str):
    if not isinstance(value, kind):
        name = "a multicomplex" if kind is Multicomplex else "a monomial ideal"
        raise SystemExit2(f"command {command!r} needs {name} as input")


class SystemExit2(Exception):
    """Usage-level error, reported with exit code 2."""


def _emit_complex(delta, machine: bool) -> str:
    return textio.to_json(delta) if machine else textio.render_facets(delta)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="multibier",
        description="Bier balls and spheres of multicomplexes: facets, "
        "shellings, duals, polarizations, and Betti tables.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="input file in the text/JSON grammar, or - for stdin")
        p.add_argument("--out", choices=("text", "machine"), default="text")
        return p

    common(sub.add_parser("ball", help="facets of the ball B_c(M)"))
    sp = common(sub.add_parser("sphere", help="facets of the sphere Bier_c(M)"))
    sp.add_argument("--method", choices=("facet", "boundary"), default="facet")
    sp.add_argument("--verify", choices=("on", "off"), default=None)
    common(sub.add_parser("facets", help="sphere facets with their G(x^a; x_i^j) names"))
    common(sub.add_parser("shelling", help="shelling order of the sphere with step data"))
    common(sub.add_parser("vectors", help="f/h/g-vectors of M, the ball, and the sphere"))
    dp = common(sub.add_parser("dual", help="Alexander dual of a multicomplex or c-ideal"))
    dp.add_argument("--cap", type=int, nargs="+", default=None,
                    help="cap for ideal input (defaults to entrywise max)")
    pp = common(sub.add_parser("polarize", help="polarization of a monomial ideal"))
    pp.add_argument("--cap", type=int, nargs="+", default=None)
    pp.add_argument("--variant", choices=("pol", "pol*"), default="pol")
    common(sub.add_parser("generators-formula",
                          help="three-part generator presentation of the sphere ideal"))
    lp = common(sub.add_parser("linkage-check", help="colon-ideal linkage identities"))
    lp.add_argument("--cap", type=int, nargs="+", default=None)
    ep = common(sub.add_parser("edgedecomp", help="edge decomposition certificate of the sphere"))
    ep.add_argument("--budget", type=int, default=10**6)
    bp = common(sub.add_parser("betti", help="Betti table of a monomial ideal"))
    bp.add_argument("--field", default="q", help="q (rationals) or p:<prime>")
    vp = common(sub.add_parser("verify-all", help="exhaustive identity battery"), needs_input=False)
    vp.add_argument("--n", type=int, required=True, help="number of variables")
    vp.add_argument("--cmax", type=int, required=True, help="maximum cap entry")
    return ap


def run(args) -> int:
    machine = args.out == "machine"
    out = sys.stdout

    if args.command == "verify-all":
        return _verify_all(args.n, args.cmax, machine, out)

    value = textio.parse_input(_read_input(args.input))

    if args.command == "ball":
        _need(value, Multicomplex, "ball")
        out.write(_emit_complex(bier_ball(value), machine))
        return 0

    if args.command == "sphere":
        _need(value, Multicomplex, "sphere")
        verify = None if args.verify is None else args.verify == "on"
        method = "facets" if args.method == "facet" else "boundary"
        out.write(_emit_complex(bier_sphere(value, method=method, verify=verify), machine))
        return 0

    if args.command == "facets":
        _need(value, Multicomplex, "facets")
        rows = []
        for bf in sorted(sphere_facet_data(value), key=lambda b: (b.base, b.var, b.level)):
            verts = sorted(bf.vertex_set(value.cap), key=label_key)
            labels = [textio.label_text(v) for v in verts]
            rows.append({"name": str(bf), "facet": labels})
        if machine:
            out.write(json.dumps({"facets": rows}, indent=2) + "\n")
        else:
            for r in rows:
                out.write(f"{r['name']}: {' '.join(r['facet'])}\n")
        return 0

    if args.command == "shelling":
        _need(value, Multicomplex, "shelling")
        order = shelling_order(value)
        sphere = bier_sphere(value)
        facet_sets = [bf.vertex_set(value.cap) for bf in order]
        ok, h = verify_shelling(sphere, facet_sets)
        rows = []
        for k, bf in enumerate(order):
            covered = 0
            if k:
                prev = facet_sets[:k]
                f = facet_sets[k]
                covered = sum(
                    1 for v in f if any(f - {v} <= g for g in prev)
                )
            labels = [textio.label_text(v) for v in sorted(facet_sets[k], key=label_key)]
            rows.append({"name": str(bf), "facet": labels, "ridges": covered})
        if machine:
            out.write(json.dumps({"valid": ok, "h": list(h) if ok else None,
                                  "steps": rows}, indent=2) + "\n")
        else:
            for r in rows:
                out.write(f"{r['name']}: {' '.join(r['facet'])} [ridges {r['ridges']}]\n")
            out.write(f"valid shelling: {ok}\n")
            if ok:
                out.write("h " + " ".join(map(str, h)) + "\n")
        return 0 if ok else 1

    if args.command == "vectors":
        _need(value, Multicomplex, "vectors")
        ball = face_vectors(bier_ball(value))
        sphere = face_vectors(bier_sphere(value))
        doc = {
            "f_M": list(f_vector(value)),
            "ball": {"f": list(ball.f), "h": list(ball.h)},
            "sphere": {"f": list(sphere.f), "h": list(sphere.h), "g": list(sphere.g)},
        }
        if machine:
            out.write(json.dumps(doc, indent=2) + "\n")
        else:
            out.write("f(M)     " + " ".join(map(str, doc["f_M"])) + "\n")
            out.write("ball f   " + " ".join(map(str, doc["ball"]["f"])) + "\n")
            out.write("ball h   " + " ".join(map(str, doc["ball"]["h"])) + "\n")
            out.write("sphere f " + " ".join(map(str, doc["sphere"]["f"])) + "\n")
            out.write("sphere h " + " ".join(map(str, doc["sphere"]["h"])) + "\n")
            out.write("sphere g " + " ".join(map(str, doc["sphere"]["g"])) + "\n")
        return 0

    if args.command == "dual":
        if isinstance(value, Multicomplex):
            dual = alexander_dual(value)
            out.write(textio.to_json(dual) if machine else textio.render_multicomplex(dual))
        else:
            cap = _cap_for_ideal(value, args.cap)
            dual = ideal_alexander_dual(value, cap)
            out.write(textio.to_json(dual) if machine else textio.render_ideal(dual))
        return 0

    if args.command == "polarize":
        _need(value, MonomialIdeal, "polarize")
        cap = _cap_for_ideal(value, args.cap)
        variant = POL if args.variant == "pol" else POL_STAR
        pol = polarize_ideal(value, cap, variant)
        variables = polarized_variables(cap)
        if machine:
            doc = {"variables": [textio.label_text(v) for v in variables],
                   "generators": [list(g) for g in pol.gens]}
            out.write(json.dumps(doc, indent=2) + "\n")
        else:
            out.write(textio.format_polarized_ideal(pol.gens, variables) + "\n")
        return 0

    if args.command == "generators-formula":
        _need(value, Multicomplex, "generators-formula")
        gf = generator_formula(value)
        variables = gf.variables
        names = ("sphere ideal part from M", "part from the dual", "pure powers part")
        if machine:
            doc = {
                "parts": [[list(g) for g in part] for part in gf.parts],
                "raw_generators": [list(g) for g in gf.raw_gens],
                "minimal": gf.is_minimal,
            }
            out.write(json.dumps(doc, indent=2) + "\n")
        else:
            for name, part in zip(names, gf.parts):
                out.write(f"{name}: {textio.format_polarized_ideal(part, variables)}\n")
            out.write(f"minimal: {gf.is_minimal}\n")
        return 0

    if args.command == "linkage-check":
        _need(value, MonomialIdeal, "linkage-check")
        cap = _cap_for_ideal(value, args.cap)
        plain, polar = linkage_identities(value, cap)
        if machine:
            out.write(json.dumps({"colon": plain, "polarized_colon": polar}) + "\n")
        else:
            out.write(f"colon identity: {plain}\npolarized colon identity: {polar}\n")
        return 0 if plain and polar else 1

    if args.command == "edgedecomp":
        _need(value, Multicomplex, "edgedecomp")
        cert = bier_decomposition(value)
        ok = verify_certificate(cert)
        counts = _count_nodes(cert)
        if machine:
            out.write(json.dumps({"verified": ok, "nodes": counts}, indent=2) + "\n")
        else:
            out.write("certificate verified: " + str(ok) + "\n")
            for kind, cnt in sorted(counts.items()):
                out.write(f"  {kind}: {cnt}\n")
        return 0 if ok else 1

    if args.command == "betti":
        _need(value, MonomialIdeal, "betti")
        table = betti_table(value, fld=_field(args.field))
        if machine:
            out.write(json.dumps({"records": table.records()}, indent=2) + "\n")
        else:
            out.write(table.render() + "\n")
        return 0

    raise SystemExit2(f"unknown command {args.command!r}")


def _cap_for_ideal(I: MonomialIdeal, cap):
    if cap is not None:
        if len(cap) != I.nvars:
            raise SystemExit2("cap length does not match the number of variables")
        return tuple(cap)
    if not I.gens:
        raise SystemExit2("a cap is required for the zero ideal")
    return tuple(max(g[i] for g in I.gens) for i in range(I.nvars))


def _count_nodes(cert) -> dict[str, int]:
    counts: dict[str, int] = {}

    def walk(node):
        counts[type(node).__name__] = counts.get(type(node).__name__, 0) + 1
        for attr in ("child", "link_child", "contraction_child"):
            sub = getattr(node, attr, None)
            if sub is not None:
                walk(sub)
        for sub in getattr(node, "factors", ()) or ():
            walk(sub)

    walk(cert)
    return counts


def _verify_all(n: int, cmax: int, machine: bool, out) -> int:
    from itertools import product

    from .verify import all_multicomplexes, full_check

    failures = []
    total = 0
    for c in product(range(1, cmax + 1), repeat=n):
        for M in all_multicomplexes(c):
            total += 1
            for name, ok in full_check(M).items():
                if not ok:
                    failures.append({"cap": list(c), "members": sorted(map(list, M.members)),
                                     "check": name})
    if machine:
        out.write(json.dumps({"checked": total, "failures": failures}, indent=2) + "\n")
    else:
        out.write(f"checked {total} multicomplexes\n")
        for f in failures:
            out.write(f"FAIL cap={f['cap']} members={f['members']}: {f['check']}\n")
        out.write("all identities hold\n" if not failures else f"{len(failures)} failures\n")
    return 0 if not failures else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses code 2 for usage errors already
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return run(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
