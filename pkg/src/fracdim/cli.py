"""``fracdim`` command line.

Exit status: 0 on success or all checks passing, 1 when a verification
suite records a failure, 2 on usage or input errors. Computational errors
print one ``{"error": code, "detail": ...}`` JSON line on stdout.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Optional, Sequence

from . import generators as gen
from .config import configure, limits
from .drg import is_distance_regular, max_pii_sum, pii_sum
from .errors import FracdimError, InvalidParameter
from .graph import cartesian_product, distance_matrix, load_graph, save_graph
from .ratlp import fracdim_solution, format_rational
from .resolve import metric_dimension, r_min
from .symmetry import automorphism_orbits, vt_fracdim
from .verify import build_family, run_suite

GEN_FAMILIES = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "hypercube": 1,
    "hamming": 2,
    "johnson": 2,
    "k2_cycle": 1,
    "complete_bipartite": 2,
}


def _emit(obj: dict, out=None) -> None:
    text = json.dumps(obj)
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def cmd_gen(args) -> int:
    arity = GEN_FAMILIES[args.family]
    if len(args.params) != arity:
        raise InvalidParameter(f"{args.family} takes {arity} integer parameter(s)")
    if args.family == "complete_bipartite":
        g = gen.complete_bipartite(*args.params)
    else:
        g = build_family(args.family, *args.params)
    if args.output:
        save_graph(g, args.output)
    else:
        sys.stdout.write(g.to_json() + "\n")
    return 0


def cmd_dimf(args) -> int:
    g = load_graph(args.graph)
    distance_matrix(g)  # rejects disconnected input before any LP work
    _, sol = fracdim_solution(g)
    primal = {g.label(v): format_rational(x) for v, x in enumerate(sol.primal)}
    _emit({"dimf": format_rational(sol.value), "primal": primal, "certified": True})
    return 0


def cmd_dim(args) -> int:
    g = load_graph(args.graph)
    distance_matrix(g)
    k, witness = metric_dimension(g)
    _emit({"dim": k, "witness": witness})
    return 0


def cmd_rmin(args) -> int:
    g = load_graph(args.graph)
    distance_matrix(g)
    r, pair = r_min(g)
    _emit({"r": r, "pair": list(pair)})
    return 0


def cmd_drg(args) -> int:
    g = load_graph(args.graph)
    table = is_distance_regular(g)
    if table is None:
        _emit({"distance_regular": False})
        return 0
    b, c = table.intersection_array()
    top, h = max_pii_sum(table)
    _emit({
        "distance_regular": True,
        "diameter": table.diameter,
        "intersection_array": {"b": b, "c": c},
        "pii_sums": [pii_sum(table, h) for h in range(1, table.diameter + 1)],
        "max_pii_sum": top,
        "argmax_h": h,
    })
    return 0


def cmd_vt(args) -> int:
    g = load_graph(args.graph)
    dm = distance_matrix(g)
    if args.assume_vt:
        out = {"vertex_transitive": True, "orbits": 1, "source": "assumed"}
    else:
        part = automorphism_orbits(g, dm)
        out = {
            "vertex_transitive": part.orbit_count == 1,
            "orbits": part.orbit_count,
            "source": "automorphism-search",
        }
    if args.fracdim:
        out["vt_dimf"] = format_rational(vt_fracdim(g, assume_vt=True)) if out["vertex_transitive"] else None
    _emit(out)
    return 0


def cmd_product(args) -> int:
    g = load_graph(args.left)
    h = load_graph(args.right)
    distance_matrix(g)
    distance_matrix(h)
    p = cartesian_product(g, h)
    if args.output:
        save_graph(p, args.output)
    else:
        sys.stdout.write(p.to_json() + "\n")
    return 0


def cmd_verify(args) -> int:
    result = run_suite(args.suite, max_n=args.max_n, seed=args.seed, jobs=args.jobs, count=args.count)
    if args.stable:
        result.pop("timing")
    for rep in result["results"]:
        status = "PASS" if rep["pass"] else "FAIL"
        print(f"{status} {rep['theorem_id']} ({len(rep['instances'])} instances)", file=sys.stderr)
    if args.json:
        _emit(result, args.json)
    else:
        _emit(result)
    return 0 if result["all_pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fracdim", description="Exact metric and fractional metric dimension toolkit.")
    parser.add_argument("--max-vertices", type=int, help="graph size cap (overrides FRACDIM_MAX_N)")
    parser.add_argument("--max-dim-n", type=int, help="cap for exact metric dimension")
    parser.add_argument("--max-vt-n", type=int, help="cap for the automorphism search")
    parser.add_argument("--max-lp-rows", type=int, help="cap on reduced LP rows")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named graph")
    p.add_argument("family", choices=sorted(GEN_FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    for name, func, text in [
        ("dimf", cmd_dimf, "certified fractional metric dimension"),
        ("dim", cmd_dim, "exact metric dimension"),
        ("rmin", cmd_rmin, "smallest resolved-pair set"),
        ("drg", cmd_drg, "distance-regularity and intersection numbers"),
    ]:
        p = sub.add_parser(name, help=text)
        p.add_argument("graph")
        p.set_defaults(func=func)

    p = sub.add_parser("vt", help="vertex-transitivity test")
    p.add_argument("graph")
    p.add_argument("--assume-vt", action="store_true", help="skip the search and record the assertion")
    p.add_argument("--fracdim", action="store_true", help="also print |V|/r(G)")
    p.set_defaults(func=cmd_vt)

    p = sub.add_parser("product", help="cartesian product of two graph files")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", help="run a theorem suite")
    p.add_argument("--suite", choices=["families", "small-sweep", "products", "all"], default="all")
    p.add_argument("--max-n", type=int, default=5, help="largest vertex count in the exhaustive sweep")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200, help="random factor pairs in the products suite")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", help="write the report here instead of stdout")
    p.add_argument("--stable", action="store_true", help="omit timing so output is byte-stable")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    saved = asdict(limits)
    configure(
        max_n=args.max_vertices,
        metric_dim_n=args.max_dim_n,
        vt_n=args.max_vt_n,
        lp_rows=args.max_lp_rows,
    )
    try:
        return args.func(args)
    except FracdimError as exc:
        _emit({"error": exc.code, "detail": exc.detail})
        return 2
    except OSError as exc:
        _emit({"error": "io_error", "detail": str(exc)})
        return 2
    finally:
        configure(**saved)


if __name__ == "__main__":
    sys.exit(main())
