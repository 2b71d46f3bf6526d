"""Command-line interface.

Subcommands: ``nbhd`` (invariant extraction), ``convex`` (digital convexity),
``reconstruct`` (realize an invariant), ``mine`` (collision sweep),
``verify`` (exhaustive collision-pair audits), ``convert`` (format bridging).

Output is line-oriented JSON.  Exit codes: 0 success or a unique
reconstruction, 2 ambiguous, 3 infeasible, 1 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .convexity import convexity_witness, digital_convexity
from .errors import NbhdReconError
from .families import neighborhood_multiset, support_of
from .formats import (
    dumps_canonical,
    family_from_json_dict,
    family_to_json_dict,
    from_graph6,
    graph_from_json_dict,
    graph_to_json_dict,
    multiset_from_json_dict,
    multiset_to_json_dict,
    parse_json,
    to_dot,
    to_graph6,
)
from .graphs import VertexSet, mask_members
from .miner import check_collision_pair, find_collisions, verify_collisions
from .reconstruct import (
    DEFAULT_SOLUTION_LIMIT,
    ReconstructionResult,
    from_digital_convexity,
    from_multiset,
    from_support,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_AMBIGUOUS = 2
EXIT_INFEASIBLE = 3

_VERDICT_EXIT = {"unique": EXIT_OK, "ambiguous": EXIT_AMBIGUOUS,
                 "infeasible": EXIT_INFEASIBLE}


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(text: str):
    """Accept a graph6 line or a JSON graph object, by sniffing."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json_dict(parse_json(text))
    return from_graph6(text)


def _result_json(result: ReconstructionResult, count_only: bool = False,
                 with_dot: bool = False) -> dict:
    out = {
        "verdict": result.verdict,
        "truncated": result.truncated,
        "stats": {
            "solutions": result.solution_count,
            "nodes_explored": result.nodes_explored,
            "elapsed_s": round(result.elapsed, 6),
        },
    }
    if count_only:
        out["count"] = result.solution_count
    else:
        out["graphs"] = [{"graph6": to_graph6(g),
                          "edges": [list(e) for e in g.edges()]}
                         for g in result.graphs]
        if with_dot:
            for record, g in zip(out["graphs"], result.graphs):
                record["dot"] = to_dot(g)
    return out


def cmd_nbhd(args) -> int:
    g = _load_graph(_read_input(args.input))
    m = neighborhood_multiset(g, closed=not args.open)
    if args.support:
        print(dumps_canonical(family_to_json_dict(support_of(m))))
    else:
        print(dumps_canonical(multiset_to_json_dict(m)))
    return EXIT_OK


def cmd_convex(args) -> int:
    g = _load_graph(_read_input(args.input))
    if args.set is not None:
        members = parse_json(args.set)
        s = VertexSet.from_members(members, g.n)
        witness = convexity_witness(g, s)
        record = {"set": sorted(members), "digitally_convex": witness.convex}
        if witness.convex:
            record["private_neighbors"] = {str(v): x
                                           for v, x in sorted(witness.private_neighbors.items())}
        else:
            record["violator"] = witness.violator
        print(dumps_canonical(record))
        return EXIT_OK
    family = digital_convexity(g)
    if args.json:
        print(dumps_canonical(family_to_json_dict(family)))
    else:
        for mask in family.masks:
            print(json.dumps(list(mask_members(mask))))
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    text = _read_input(args.input)
    obj = parse_json(text)
    if args.count:
        mode = "count"
    elif args.all:
        mode = "all"
    else:
        mode = "first"
    if args.source == "multiset":
        result = from_multiset(multiset_from_json_dict(obj), mode, args.limit)
    elif args.source == "support":
        result = from_support(family_from_json_dict(obj), mode, args.limit)
    else:
        result = from_digital_convexity(family_from_json_dict(obj), mode, args.limit)
    print(dumps_canonical(_result_json(result, count_only=args.count,
                                       with_dot=args.dot)))
    return _VERDICT_EXIT[result.verdict]


def cmd_mine(args) -> int:
    groups = find_collisions(args.n, args.kind, allow_large=args.deep, jobs=args.jobs)
    for group in groups:
        record = {
            "kind": group.kind,
            "n": group.n,
            "fingerprint": [list(mask_members(m)) for m in group.fingerprint],
            "graphs": [to_graph6(g) for g in group.graphs],
        }
        if group.kind == "closed-multiset":
            checks = check_collision_pair(group.graphs[0], group.graphs[1])
            record["witness"] = (checks.witness.cycle_notation()
                                 if checks.witness else None)
            record["checks"] = {
                "equal_edge_count": checks.equal_edge_count,
                "orbits_are_cliques": checks.orbits_are_cliques,
                "edge_transit": checks.edge_transit,
                "both_contain_c4": checks.both_contain_c4,
            }
        print(dumps_canonical(record))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_collisions(args.n, allow_large=args.deep)
    print(dumps_canonical({
        "n": report.n,
        "graphs_swept": report.graphs_swept,
        "collision_groups": report.collision_groups,
        "pairs_checked": report.pairs_checked,
        "orbits_checked": report.orbits_checked,
        "violations": list(report.violations),
    }))
    return EXIT_OK


def cmd_convert(args) -> int:
    g = _load_graph(_read_input(args.input))
    if args.to == "g6":
        print(to_graph6(g))
    elif args.to == "json":
        print(dumps_canonical(graph_to_json_dict(g)))
    else:
        sys.stdout.write(to_dot(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nbhdrecon",
        description="Reconstruct labeled graphs from closed neighborhoods "
                    "and digital convexities; mine and verify invariant collisions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nbhd", help="extract a neighborhood invariant from a graph")
    p.add_argument("input", help="graph6 or JSON graph file, or - for stdin")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--closed", action="store_true", default=True,
                      help="closed neighborhoods (default)")
    mode.add_argument("--open", action="store_true", default=False,
                      help="open neighborhoods")
    shape = p.add_mutually_exclusive_group()
    shape.add_argument("--multiset", action="store_true", default=True,
                       help="keep multiplicities (default)")
    shape.add_argument("--support", action="store_true", default=False,
                       help="distinct sets only")
    p.set_defaults(func=cmd_nbhd)

    p = sub.add_parser("convex", help="enumerate digitally convex sets or test one set")
    p.add_argument("input", help="graph6 or JSON graph file, or - for stdin")
    p.add_argument("--set", help="JSON array of vertex ids to test")
    p.add_argument("--json", action="store_true",
                   help="emit the family as one canonical JSON object")
    p.set_defaults(func=cmd_convex)

    p = sub.add_parser("reconstruct", help="realize graphs from an invariant")
    p.add_argument("input", help="JSON family file, or - for stdin")
    p.add_argument("--from", dest="source", required=True,
                   choices=("multiset", "support", "dc"),
                   help="which invariant the input encodes")
    p.add_argument("--all", action="store_true",
                   help="enumerate realizations up to --limit and certify uniqueness")
    p.add_argument("--count", action="store_true",
                   help="report the number of realizations instead of the graphs")
    p.add_argument("--limit", type=int, default=DEFAULT_SOLUTION_LIMIT,
                   help="solution cap in all/count mode (default %(default)s)")
    p.add_argument("--dot", action="store_true",
                   help="include a DOT drawing per returned graph")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("mine", help="sweep all labeled graphs for invariant collisions")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--kind", default="closed-multiset",
                   choices=("closed-multiset", "closed-support", "open-multiset"))
    p.add_argument("--deep", action="store_true",
                   help="allow the large sweeps (n=7 is millions of graphs, n=8 hours)")
    p.add_argument("--jobs", type=int, default=1,
                   help="partition the sweep across this many worker processes")
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("verify", help="exhaustively check collision-pair properties")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--deep", action="store_true", help="allow n beyond 6")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="convert a graph between formats")
    p.add_argument("input", help="graph6 or JSON graph file, or - for stdin")
    p.add_argument("--to", required=True, choices=("g6", "json", "dot"))
    p.set_defaults(func=cmd_convert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except NbhdReconError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
