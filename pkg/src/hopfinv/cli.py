"""Command-line front end.

Every subcommand prints one JSON document (``scan`` prints JSON lines)
with sorted keys. Exit status: 0 success, 2 bad input, 3 size guard hit,
1 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__, graphs, hopf, invariants, nabla, sched, scan as scanning, symfunc
from .cache import ResultCache, dumps
from .errors import ConsistencyError, HopfInvError, ResourceError
from .graphs import canonical_graph
from .objects import Graph, Hypergraph, Permutation, Poset
from .qsym import QSymFunc
from .symfunc import convert, from_json, to_json
from .tpoly import TPoly

EXIT_INPUT = 2
EXIT_GUARD = 3
EXIT_BUG = 1


class InputError(HopfInvError, ValueError):
    pass


# ---------------------------------------------------------------------------
# input parsing
# ---------------------------------------------------------------------------

def _read_text(arg: str) -> str:
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def _load_json(arg: str):
    text = _read_text(arg)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"cannot read JSON from {arg!r}: {exc}") from exc


def parse_graph(arg: str) -> Graph:
    data = _load_json(arg)
    if not isinstance(data, dict) or "n" not in data:
        raise InputError('graph must be {"n": int, "edges": [[i, j], ...]}')
    return Graph.from_edges(int(data["n"]), [tuple(e) for e in data.get("edges", [])])


def parse_hypergraph(arg: str) -> Hypergraph:
    data = _load_json(arg)
    if not isinstance(data, dict) or "n" not in data:
        raise InputError('hypergraph must be {"n": int, "edges": [[...], ...]}')
    return Hypergraph.from_edges(int(data["n"]), [tuple(e) for e in data.get("edges", [])])


def parse_permutation(arg: str) -> Permutation:
    text = _read_text(arg).strip()
    return Permutation.parse(text)


def parse_poset(arg: str) -> Poset:
    data = _load_json(arg)
    if isinstance(data, dict):
        pairs = data.get("relations", [])
        n = int(data.get("n", max((max(p) for p in pairs), default=0)))
    else:
        pairs = data
        n = max((max(p) for p in pairs), default=0)
    return Poset.from_relations(n, [tuple(p) for p in pairs])


_NAMED = {
    "K": Graph.complete,
    "P": Graph.path,
    "E": Graph.empty,
}


def parse_graph_list(text: str) -> list:
    """Comma-separated names like K2,P3,K3 or a JSON list of graphs."""
    text = _read_text(text).strip()
    if text.startswith("["):
        return [Graph.from_edges(int(d["n"]), [tuple(e) for e in d.get("edges", [])])
                for d in json.loads(text)]
    out = []
    for name in text.split(","):
        name = name.strip()
        if len(name) < 2 or name[0] not in _NAMED or not name[1:].isdigit():
            raise InputError(f"unknown graph name {name!r} (use K<n>, P<n> or E<n>)")
        out.append(_NAMED[name[0]](int(name[1:])))
    return out


def resolve_character(text: str, obj) -> hopf.Character:
    kind = type(obj)
    if text == "zeta1":
        return hopf.zeta_one(kind)
    if text == "zeta21":
        if kind is Permutation:
            return hopf.zeta_21()
        if kind is Poset:
            return hopf.zeta_gamma(hopf.perm_to_poset(Permutation((2, 1))), name="zeta21")
        raise InputError("zeta21 is for permutations and posets; use 'edge' on graphs")
    if text == "edge":
        if kind is not Graph:
            raise InputError("'edge' is a graph character")
        return hopf.zeta_edge()
    if text.startswith("A:"):
        if kind is not Graph:
            raise InputError("zeta_A characters apply to graphs")
        return hopf.zeta_A(parse_graph_list(text[2:]))
    if text.startswith("gamma:"):
        body = text[6:]
        if kind is Permutation:
            gen = parse_permutation(body)
        elif kind is Poset:
            gen = parse_poset(body)
        else:
            gen = parse_graph(body)
        return hopf.zeta_gamma(gen)
    raise InputError(f"unknown character {text!r}")


def load_object(args):
    given = [(k, getattr(args, k, None)) for k in ("graph", "perm", "poset", "hypergraph")]
    given = [(k, v) for k, v in given if v]
    if len(given) != 1:
        raise InputError("give exactly one of --graph, --perm, --poset, --hypergraph")
    kind, value = given[0]
    return {"graph": parse_graph, "perm": parse_permutation, "poset": parse_poset,
            "hypergraph": parse_hypergraph}[kind](value)


def encode_object(x):
    if isinstance(x, Permutation):
        return {"permutation": list(x.one_line)}
    if isinstance(x, Poset):
        return {"poset": x.encode()}
    if isinstance(x, Hypergraph):
        return {"hypergraph": x.encode()}
    return {"graph": x.encode()}


def cache_key_object(x):
    """Isomorphism-invariant key for graphs, literal encoding otherwise."""
    if isinstance(x, Graph) and x.n <= graphs.CANONICAL_MAX_N:
        return {"graph_class": canonical_graph(x).encode()}
    return encode_object(x)


def _bases(text: str) -> list:
    out = [b.strip() for b in text.split(",") if b.strip()]
    for b in out:
        if b not in symfunc.BASES:
            raise InputError(f"unknown basis {b!r}")
    return out


def _frac(x) -> str:
    return str(Fraction(x))


def _poly_json(poly: TPoly) -> dict:
    return {str(k): str(v) for k, v in poly.to_dict().items()}


def _qsym_json(q: QSymFunc) -> dict:
    return {"basis": q.basis, "degree": q.degree,
            "terms": [{"composition": list(a), "coeff": symfunc.coeff_to_json(c)}
                      for a, c in q.items()]}


def _combo_json(combo) -> list:
    rows = []
    for key, c in combo.items():
        enc = key.encode() if hasattr(key, "encode") else key
        if isinstance(key, Permutation):
            enc = list(key.one_line)
        rows.append({"object": enc, "coeff": c})
    return sorted(rows, key=lambda r: dumps(r["object"]))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_psi(args, cache: ResultCache) -> dict:
    x = load_object(args)
    bases = _bases(args.basis)
    if isinstance(x, Hypergraph):
        if args.character != "zeta1":
            raise InputError("hypergraphs support only zeta1")
        ident = "zeta1"

        def compute():
            f = invariants.csf_subset_expansion(x)
            return {b: to_json(convert(f, b)) for b in bases}
    else:
        z = resolve_character(args.character, x)
        ident = z.ident

        def compute():
            f = invariants.psi(z, x)
            return {b: to_json(convert(f, b)) for b in bases}

    result = cache.get_or_compute([cache_key_object(x), ident, "psi", bases], compute)
    return {"object": encode_object(x), "character": ident, "expansions": result}


def cmd_antipode(args, cache: ResultCache) -> dict:
    x = load_object(args)
    if args.method == "hm":
        if not isinstance(x, Graph):
            raise InputError("the flat-sum antipode is defined on graphs")
        result = cache.get_or_compute(
            [cache_key_object(x), "antipode-hm"],
            lambda: _combo_json(hopf.antipode_graphs_hm(x)))
        return {"object": encode_object(x), "method": "hm", "classes": True, "terms": result}
    combo = hopf.antipode_takeuchi(x)
    classes = bool(args.classes and isinstance(x, Graph))
    if classes:
        combo = hopf.project_to_classes(combo)
    return {"object": encode_object(x), "method": "takeuchi", "classes": classes,
            "terms": _combo_json(combo)}


def cmd_nabla(args, cache: ResultCache) -> dict:
    bases = _bases(args.basis)
    out: dict = {}
    if args.sym:
        f = from_json(_load_json(args.sym))
        key = [{"sym": to_json(f)}, "nabla-q1", bases]
        out["input"] = to_json(f)
        g = None
    else:
        g = parse_graph(args.graph)
        f = invariants.csf(g)
        key = [cache_key_object(g), "nabla-q1", bases]
        out["object"] = encode_object(g)

    def compute():
        image = nabla.nabla_q1_e(f)
        return {b: to_json(convert(image, b)) for b in bases}

    out["expansions"] = cache.get_or_compute(key, compute)
    if args.checks:
        if g is None:
            raise InputError("--checks needs --graph")
        rep = nabla.info_dlambda_checks(g)
        out["checks"] = {
            "acyclic_orientations": rep.acyclic,
            "constant_terms": rep.constant_terms_ok,
            "top_row": rep.top_row_ok,
            "column": rep.column_ok,
            "column_expected": _poly_json(rep.column_expected),
            "note": rep.note,
        }
    return out


def cmd_chrom(args, cache: ResultCache) -> dict:
    x = load_object(args)
    if isinstance(x, Hypergraph):
        raise InputError("chromatic polynomials here are for graphs, posets, permutations")
    z = resolve_character(args.character, x)
    result = cache.get_or_compute(
        [cache_key_object(x), z.ident, "chrom-poly"],
        lambda: _poly_json(invariants.chromatic_polynomial(z, x)))
    poly = TPoly.from_dict({int(k): Fraction(v) for k, v in result.items()})
    out = {"object": encode_object(x), "character": z.ident, "polynomial": result}
    if args.at is not None:
        out["value"] = _frac(poly(Fraction(args.at)))
    if args.reciprocity:
        if not isinstance(x, Graph):
            raise InputError("--reciprocity needs a graph")
        if z.kind == "A":
            rep = invariants.reciprocity_check(z, x)
            out["reciprocity"] = {"k": rep.k, "lhs": _frac(rep.lhs), "rhs": rep.rhs, "ok": rep.ok}
        else:
            a = graphs.acyclic_orientations(x)
            value = poly(-1)
            expected = a if x.n % 2 == 0 else -a
            out["reciprocity"] = {"value_at_minus_one": _frac(value),
                                  "acyclic_orientations": a, "ok": value == expected}
    return out


def cmd_bond(args, cache: ResultCache) -> dict:
    g = parse_graph(args.graph)
    lat = invariants.bond_lattice(g)
    elements = [{"partition": [list(b) for b in Q], "mobius": lat.mobius[Q]}
                for Q in sorted(lat.elements)]
    return {"object": encode_object(g), "elements": elements,
            "csf": to_json(invariants.csf_bond(g))}


def cmd_dd_bond(args, cache: ResultCache) -> dict:
    g = parse_graph(args.graph)
    poset = invariants.dd_bond_poset(g)
    elements = [{"partition": [list(b) for b in K], "nu": poset.nu[K]}
                for K in sorted(poset.elements)]
    return {"object": encode_object(g), "elements": elements,
            "invariant": to_json(invariants.psi_dd_bond(g))}


def cmd_sched(args, cache: ResultCache) -> dict:
    if args.action == "eval":
        if not args.formula:
            raise InputError("sched eval needs --formula")
        S = sched.parse(_read_text(args.formula).strip(), args.n)
        colors = args.colors if args.colors is not None else S.n
        q = sched.phi_truncated(S, colors)
        return {"formula": str(S), "n": S.n, "colors": colors, "qsym": _qsym_json(q)}
    if not args.graph or not args.A:
        raise InputError(f"sched {args.action} needs --graph and --A")
    g = parse_graph(args.graph)
    z = hopf.zeta_A(parse_graph_list(args.A))
    if args.action == "build":
        return {"object": encode_object(g), "formula": str(sched.build_S_g_A(g, z)), "n": g.n}
    rep = sched.verify_phi_equals_psi(g, z)
    witness = None
    if rep.witness:
        witness = {"exponents": list(rep.witness[0]), "phi": rep.witness[1],
                   "psi": _frac(rep.witness[2])}
    return {"object": encode_object(g), "equal": rep.equal, "witness": witness}


def cmd_scan(args, cache: ResultCache, out=sys.stdout) -> dict:
    task = scanning.ScanTask(args.predicate, args.require_claw)
    total = hits = 0
    for x, ok in scanning.scan(args.family, args.n, task, jobs=args.jobs, up_to=args.up_to):
        total += 1
        hits += bool(ok)
        if ok or not args.hits_only:
            out.write(dumps({"object": scanning.encode(x), "verdict": bool(ok)}) + "\n")
    return {"summary": {"family": args.family, "n": args.n, "predicate": args.predicate,
                        "require_claw": args.require_claw, "total": total, "hits": hits}}


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _object_options(p, hypergraph=False):
    p.add_argument("--graph", help='graph JSON or file: {"n": 3, "edges": [[1,2],[2,3]]}')
    p.add_argument("--perm", help="permutation: digit string, JSON list, or file")
    p.add_argument("--poset", help='poset cover relations JSON or file: {"n": 3, "relations": [[1,2]]}')
    if hypergraph:
        p.add_argument("--hypergraph", help='hypergraph JSON or file: {"n": 5, "edges": [[1,2,3]]}')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfinv", description="Invariants of combinatorial Hopf algebras.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--max-n", type=int, help="override every size guard")
    parser.add_argument("--cache-dir", help="result cache directory (default $CHA_CACHE_DIR)")
    parser.add_argument("--no-cache", action="store_true")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("psi", help="symmetric function invariant of an object and character")
    _object_options(p, hypergraph=True)
    p.add_argument("--character", default="zeta1",
                   help="zeta1 | zeta21 | edge | A:K2,P3 | gamma:<object>")
    p.add_argument("--basis", default="m", help="comma-separated bases among m,e,h,p,s")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("antipode", help="antipode of an object")
    _object_options(p)
    p.add_argument("--method", choices=("takeuchi", "hm"), default="takeuchi")
    p.add_argument("--classes", action="store_true", help="project graph terms to isomorphism classes")
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("nabla-q1", help="nabla at q = 1 of a chromatic symmetric function")
    p.add_argument("--graph")
    p.add_argument("--sym", help="symmetric function JSON instead of a graph")
    p.add_argument("--basis", default="s,e")
    p.add_argument("--checks", action="store_true", help="verify the d_lambda identities")
    p.set_defaults(func=cmd_nabla)

    p = sub.add_parser("chrom-poly", help="principal specialization of an invariant")
    _object_options(p)
    p.add_argument("--character", default="zeta1")
    p.add_argument("--at", type=Fraction, help="evaluate at a rational point")
    p.add_argument("--reciprocity", action="store_true")
    p.set_defaults(func=cmd_chrom)

    p = sub.add_parser("bond", help="bond lattice with Mobius values")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_bond)

    p = sub.add_parser("dd-bond", help="matching bond poset with its weights")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_dd_bond)

    p = sub.add_parser("sched", help="scheduling problems")
    p.add_argument("action", choices=("eval", "build", "verify"))
    p.add_argument("--formula", help="formula text or file")
    p.add_argument("--colors", type=int, help="number of variables N (default n)")
    p.add_argument("--n", type=int, help="number of elements (default: largest index)")
    p.add_argument("--graph")
    p.add_argument("--A", help="graph names (K2,P3,...) or JSON list")
    p.set_defaults(func=cmd_sched)

    p = sub.add_parser("scan", help="scan a family with a predicate")
    p.add_argument("--family", choices=scanning.FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--up-to", action="store_true", help="all sizes 1..n")
    p.add_argument("--predicate", choices=scanning.PREDICATES, required=True)
    p.add_argument("--require-claw", action="store_true",
                   help="for the matching predicate: some contraction must contain a claw")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--hits-only", action="store_true")
    p.set_defaults(func=cmd_scan)
    return parser


def _apply_guards(max_n: int | None) -> None:
    if max_n is None:
        return
    invariants.set_psi_max_n(max_n)
    hopf.set_guards(takeuchi=max_n, hm=max_n)
    graphs.set_canonical_max_n(max(max_n, graphs.CANONICAL_MAX_N))


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not args.command:
        parser.print_usage(err)
        return EXIT_INPUT
    _apply_guards(args.max_n)
    cache = ResultCache.from_env(__version__, args.cache_dir, args.no_cache)
    try:
        if args.command == "scan":
            result = cmd_scan(args, cache, out)
        else:
            result = args.func(args, cache)
    except ResourceError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_GUARD
    except ConsistencyError as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_BUG
    except (HopfInvError, ValueError, KeyError, TypeError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    out.write(dumps(result) + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
