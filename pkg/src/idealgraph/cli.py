"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input errors.
All stdout is valid in the requested format and byte-identical across
identical invocations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions, invariants, symmetry, theorems
from .errors import IdealGraphError, NotAssociativeError
from .graph import build_boolean, build_from_family, export_graph
from .semigroup import enumerate_left_ideals, parse_cayley_table, serialize_cayley_table


def _add_source(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("file", nargs="?", help="Cayley table file")
    group.add_argument("--n", type=int,
                       help="Boolean model on n minimal ideals instead of a file")


def _positive(value: str) -> int:
    x = int(value)
    if x <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="idealgraph",
        description="Inclusion graphs of left ideals of finite semigroups")
    ap.add_argument("--max-vertices", type=_positive,
                    help="override the materialized-vertex cap")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse a Cayley table and check associativity")
    p.add_argument("file")

    p = sub.add_parser("ideals", help="enumerate the nontrivial left ideals")
    p.add_argument("file")
    p.add_argument("--max-ideals", type=_positive, default=1_000_000)

    p = sub.add_parser("graph", help="emit the inclusion graph")
    _add_source(p)
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")

    p = sub.add_parser("invariants", help="compute exact graph invariants")
    _add_source(p)
    p.add_argument("--all", action="store_true")
    for flag in ("diameter", "girth", "clique", "chromatic", "independence",
                 "matching", "domination", "planarity", "perfect", "flags"):
        p.add_argument(f"--{flag}", action="store_true")
    p.add_argument("--perfect-max-len", type=_positive)
    p.add_argument("--domination-cap", type=_positive,
                   default=invariants.DOMINATION_CAP)

    p = sub.add_parser("aut", help="automorphism group and transitivity")
    _add_source(p)
    p.add_argument("--aut-cap", type=_positive, default=symmetry.DEFAULT_AUT_CAP)

    p = sub.add_parser("construct", help="explicit Boolean-model constructions")
    p.add_argument("--n", type=int, required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--perfect-matching", action="store_true")
    which.add_argument("--dominating-set", action="store_true")
    which.add_argument("--max-chain", action="store_true")
    which.add_argument("--layer-matching", type=int, metavar="K")

    p = sub.add_parser("verify", help="run the theorem-check suite")
    p.add_argument("--boolean", help="n range, e.g. 2..8 or a single n")
    p.add_argument("--corpus", help="directory of Cayley table .txt files")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("-o", "--output", help="also write the JSON report here")

    return ap


def _load_graph(args):
    if args.n is not None:
        return build_boolean(args.n)
    text = Path(args.file).read_text(encoding="utf-8")
    table = parse_cayley_table(text)
    return build_from_family(enumerate_left_ideals(table))


def _parse_range(spec: str) -> range:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return range(int(lo), int(hi) + 1)
    n = int(spec)
    return range(n, n + 1)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_validate(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    table = parse_cayley_table(text)
    sys.stdout.write(f"valid semigroup of order {table.order}\n")
    sys.stdout.write(serialize_cayley_table(table))
    return 0


def _cmd_ideals(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    table = parse_cayley_table(text)
    fam = enumerate_left_ideals(table, cap=args.max_ideals)
    doc = {
        "order": fam.order,
        "count": len(fam.ideals),
        "truncated": fam.truncated,
        "ideals": [{"mask": i.members, "size": i.size} for i in fam.ideals],
        "minimal": list(fam.minimal_masks),
        "maximal": list(fam.maximal_masks),
    }
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


def _cmd_graph(args) -> int:
    g = _load_graph(args)
    _emit(export_graph(g, fmt=args.format), args.output)
    return 0


def _cmd_invariants(args) -> int:
    g = _load_graph(args)
    selected = {k for k in ("diameter", "girth", "clique", "chromatic",
                            "independence", "matching", "domination",
                            "planarity", "perfect", "flags")
                if getattr(args, k)}
    if args.all or not selected:
        report = invariants.compute_report(
            g, perfect_max_len=args.perfect_max_len,
            domination_cap=args.domination_cap)
        sys.stdout.write(json.dumps(report.to_jsonable(), indent=2) + "\n")
        return 0
    out: dict = {}
    if "diameter" in selected:
        components, diameter = invariants.connectivity(g)
        out["components"] = components
        out["diameter"] = "inf" if diameter == float("inf") else diameter
    if "girth" in selected:
        gv = invariants.girth(g)
        out["girth"] = "inf" if gv == float("inf") else gv
    if "clique" in selected:
        out["clique_number"], _ = invariants.clique_number(g)
    if "chromatic" in selected:
        out["chromatic_number"], _ = invariants.chromatic_number(g)
    if "independence" in selected:
        out["independence_number"], _ = invariants.independence_number(g)
    if "matching" in selected:
        size, _, perfect = invariants.maximum_matching(g)
        out["matching_number"] = size
        out["perfect_matching"] = perfect
    if "domination" in selected:
        out["domination_number"], _ = invariants.domination_number(
            g, cap=args.domination_cap)
    if "planarity" in selected:
        res = invariants.planarity(g)
        out["planar"] = res.planar
        if not res.planar:
            out["kuratowski_kind"] = res.kuratowski_kind
    if "perfect" in selected:
        n = g.dense().size
        max_len = args.perfect_max_len or (n if n <= 14 else (11 if n <= 32 else 0))
        verdict = None
        if max_len > 0:
            verdict, _ = invariants.perfectness(g, max_len)
        out["perfect"] = verdict
    if "flags" in selected:
        eul, bip, tri = invariants.structural_flags(g)
        out.update(eulerian=eul, bipartite=bip, triangulated=tri)
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return 0


def _cmd_aut(args) -> int:
    g = _load_graph(args)
    report = symmetry.automorphism_group(g, cap=args.aut_cap)
    vt, et = symmetry.transitivity(g, cap=args.aut_cap)
    doc = {
        "order": report.order,
        "structure": report.structure,
        "vertex_transitive": vt,
        "edge_transitive": et,
        "generators": [
            {
                "map": a.mask_pairs(report.vertex_masks),
                "relabeling": list(a.base_perm) if a.base_perm is not None else None,
                "complemented": a.complemented,
            }
            for a in report.generators
        ],
    }
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


def _cmd_construct(args) -> int:
    n = args.n
    if args.perfect_matching:
        doc = {"perfect_matching": constructions.perfect_matching(n)}
    elif args.dominating_set:
        doc = {"dominating_set": list(constructions.canonical_dominating_set(n))}
    elif args.max_chain:
        doc = {"maximum_chain": constructions.canonical_maximum_chain(n)}
    else:
        lm = constructions.layer_matching(n, args.layer_matching)
        doc = {"layer": lm.k, "covers": lm.covers,
               "pairs": [list(p) for p in lm.pairs]}
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


def _cmd_verify(args) -> int:
    boolean_ns = _parse_range(args.boolean) if args.boolean else None
    corpus = None
    corpus_label = "corpus"
    if args.corpus:
        corpus = theorems.load_corpus_dir(args.corpus)
        corpus_label = args.corpus
    result = theorems.run_suite(boolean_ns=boolean_ns, corpus=corpus,
                                corpus_label=corpus_label, seed=args.seed)
    if args.format == "json":
        sys.stdout.write(result.to_json())
    else:
        sys.stdout.write(result.to_table())
    if args.output:
        Path(args.output).write_text(result.to_json(), encoding="utf-8")
    return result.exit_code


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.max_vertices:
        os.environ["IDEALGRAPH_MAX_VERTICES"] = str(args.max_vertices)
    handlers = {
        "validate": _cmd_validate,
        "ideals": _cmd_ideals,
        "graph": _cmd_graph,
        "invariants": _cmd_invariants,
        "aut": _cmd_aut,
        "construct": _cmd_construct,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except NotAssociativeError as e:
        a, b, c = e.triple
        sys.stderr.write(f"error: not associative, witness triple ({a}, {b}, {c})\n")
        return 2
    except (IdealGraphError, OSError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
