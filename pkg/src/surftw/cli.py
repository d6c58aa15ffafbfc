"""``surftw`` command line.

Every command writes one JSON line per result to standard output and a
short human summary to standard error.  Exit codes: 0 success, 1 property
violation, 2 invalid input, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import extremal
from .embedded import (EmbeddedHypergraph, alpha_max, embedding_from_json, embedding_to_json,
                       hyper_dual, radial, radial_to_json)
from .errors import InternalError, SurftwError, TooLargeError
from .facewidth import face_width, face_width_at_least
from .hypergraph import Hypergraph, bramble_order, is_bramble
from .io import decode_label, dump_json, encode_label, load_json, td_to_json, write_pace_td
from .surface_map import euler_genus

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _emit(record: dict) -> None:
    sys.stdout.write(json.dumps(record, sort_keys=True) + "\n")


def _say(text: str) -> None:
    sys.stderr.write(text + "\n")


def _write(data: dict, path) -> None:
    if path:
        dump_json(data, path)


def embedding_record(lam: EmbeddedHypergraph) -> dict:
    out = {"kind": "embedding", **embedding_to_json(lam)}
    out["stats"] = {"vertices": len(lam.hypergraph.vertices), "edges": len(lam.hypergraph.edges),
                    "faces": len(lam.faces.walks), "genus": lam.genus,
                    "orientable": lam.orientable}
    return out


def hypergraph_record(H: Hypergraph, extra: dict | None = None) -> dict:
    out = {"kind": "hypergraph", **H.to_json()}
    if extra:
        out.update(extra)
    return out


def load_artifact(path):
    data = load_json(path)
    kind = data.get("kind")
    try:
        if kind == "embedding" or (kind is None and "vclass" in data):
            return embedding_from_json(data)
        if kind == "hypergraph" or (kind is None and "edges" in data and "vertices" in data):
            return Hypergraph.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise SurftwError("BAD_INPUT", f"malformed artifact {path}: {exc}") from exc
    raise SurftwError("BAD_INPUT", f"{path} is neither an embedding nor a hypergraph")


def _as_hypergraph(x) -> Hypergraph:
    return x if isinstance(x, Hypergraph) else x.hypergraph


def _as_embedding(x, what: str) -> EmbeddedHypergraph:
    if not isinstance(x, EmbeddedHypergraph):
        raise SurftwError("BAD_INPUT", f"{what} needs an embedding")
    return x


# ---------------------------------------------------------------------------
# commands

def cmd_gen(args) -> int:
    if args.family == "grid":
        H = extremal.grid(args.n, args.m)
        td = extremal.grid_path_decomposition(args.n, args.m)
        _write(hypergraph_record(H, {"decomposition": td_to_json(td)}), args.output)
        _emit({"command": "gen", "family": "grid", "vertices": len(H.vertices),
               "edges": len(H.edges), "width": td.width})
        _say(f"{args.n}x{args.m} grid, path decomposition of width {td.width}")
        return EXIT_OK
    if args.family == "todinca":
        spec = extremal.TodincaSpec.identity(args.p, reversed_bc=args.reversed)
        H = extremal.todinca(spec)
        td = extremal.todinca_decomposition(spec)
        bramble = [[encode_label(v) for v in sorted(el)] for el in extremal.crosses_bramble(spec)]
        _write(hypergraph_record(H, {"decomposition": td_to_json(td), "bramble": bramble}),
               args.output)
        _emit({"command": "gen", "family": "todinca", "p": args.p, "vertices": len(H.vertices),
               "edges": len(H.edges), "width": td.width, "bramble_elements": len(bramble)})
        _say(f"Todinca graph of order {args.p}: {len(H.vertices)} vertices, {len(H.edges)} edges")
        return EXIT_OK
    fam = extremal.build_gkp(args.k, args.p, args.crosscap)
    record = embedding_record(fam.embedding)
    record["family"] = {"k": args.k, "p": args.p, "l": fam.l, "crosscap": args.crosscap,
                        "notes": fam.notes}
    _write(record, args.output)
    _emit({"command": "gen", "family": "gkp", **record["family"], **fam.counts()})
    for note in fam.notes:
        _say("note: " + note)
    _say("embedded family member: " + ", ".join(f"{k}={v}" for k, v in fam.counts().items()))
    return EXIT_OK


def cmd_dual(args) -> int:
    lam = _as_embedding(load_artifact(args.input), "dual")
    dual = hyper_dual(lam)
    record = embedding_record(dual)
    _write(record, args.output)
    _emit({"command": "dual", **record["stats"], "alpha": alpha_max(dual)})
    _say(f"dual: {record['stats']['vertices']} vertices, {record['stats']['edges']} edges")
    return EXIT_OK


def cmd_radial(args) -> int:
    lam = _as_embedding(load_artifact(args.input), "radial")
    pi = radial(lam)
    record = {"kind": "radial", **radial_to_json(pi)}
    _write(record, args.output)
    _emit({"command": "radial", "vertices": pi.map.num_vertices, "edges": pi.map.num_edges,
           "faces": len(pi.map.faces.walks), "genus": euler_genus(pi.map)})
    _say(f"radial map with {pi.map.num_vertices} vertices")
    return EXIT_OK


def cmd_tw(args) -> int:
    from .treewidth import exact_treewidth
    H = _as_hypergraph(load_artifact(args.input))
    tw, td = exact_treewidth(H, args.limit)
    if args.td:
        Path(args.td).write_text(write_pace_td(H, td))
    _emit({"command": "tw", "tw": tw, "vertices": len(H.vertices)})
    _say(f"tree-width {tw}")
    return EXIT_OK


def cmd_ptree(args) -> int:
    from .synthesis import optimal_ptree
    lam = _as_embedding(load_artifact(args.input), "ptree")
    result = optimal_ptree(lam)
    _write({"kind": "ptree", **result.tree.to_json(), "width": result.width}, args.output)
    cases: dict = {}
    for step in result.transcript:
        cases[step["case"]] = cases.get(step["case"], 0) + 1
    _emit({"command": "ptree", "width": result.width, "nodes": result.tree.n, "cases": cases})
    _say(f"p-tree of width {result.width} with {result.tree.n} nodes")
    return EXIT_OK


def cmd_check_bound(args) -> int:
    from .duality import check_duality_bound
    lam = _as_embedding(load_artifact(args.input), "check-bound")
    rep = check_duality_bound(lam, args.limit)
    _emit({"command": "check-bound", **rep.to_json()})
    _say(f"{rep.verdict}: tw={rep.tw} dual tw={rep.tw_dual} bound={rep.bound}")
    return EXIT_OK if rep.verdict == "PASS" else EXIT_VIOLATION


def cmd_bramble_order(args) -> int:
    data = load_json(args.input)
    if "bramble" not in data and "elements" not in data:
        raise SurftwError("BAD_INPUT", "file holds no bramble")
    H = Hypergraph.from_json(data)
    raw = data.get("bramble", data.get("elements"))
    elements = [frozenset(decode_label(v) for v in el) for el in raw]
    if not is_bramble(H, elements):
        _emit({"command": "bramble-order", "is_bramble": False})
        _say("not a bramble")
        return EXIT_VIOLATION
    order = bramble_order(H, elements, args.budget)
    _emit({"command": "bramble-order", "is_bramble": True, "order": order,
           "elements": len(elements)})
    _say(f"bramble of order {order}: tree-width at least {order - 1}")
    return EXIT_OK


def cmd_facewidth(args) -> int:
    lam = _as_embedding(load_artifact(args.input), "facewidth")
    record = {"command": "facewidth", "genus": lam.genus}
    if args.theta is not None:
        record["theta"] = args.theta
        record["at_least"] = face_width_at_least(lam, args.theta, args.budget)
    if args.exact:
        record["face_width"] = face_width(lam, budget=args.budget)
    _emit(record)
    _say(", ".join(f"{k}={v}" for k, v in record.items() if k != "command"))
    return EXIT_OK


def cmd_fuzz(args) -> int:
    from .duality import fuzz_small_embeddings
    summary = fuzz_small_embeddings(args.max_darts, args.count, args.seed,
                                    exhaustive=not args.random_only,
                                    random_darts=args.random_darts, fail_dump=args.fail_dump)
    _emit({"command": "fuzz", "seed": args.seed, **summary.to_json()})
    _say(f"{summary.checked} checked, {len(summary.failures)} violations")
    return EXIT_OK if not summary.failures else EXIT_VIOLATION


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    limit = int(os.environ.get("SURFTW_ORACLE_LIMIT", "18"))
    ap = argparse.ArgumentParser(prog="surftw", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a grid, Todinca graph or embedded family member")
    fam = gen.add_subparsers(dest="family", required=True)
    g = fam.add_parser("grid")
    g.add_argument("-n", type=int, required=True)
    g.add_argument("-m", type=int, required=True)
    t = fam.add_parser("todinca")
    t.add_argument("-p", type=int, required=True)
    t.add_argument("--reversed", action="store_true", help="reverse the B-C rungs")
    k = fam.add_parser("gkp")
    k.add_argument("-k", type=int, required=True)
    k.add_argument("-p", type=int, required=True)
    k.add_argument("--crosscap", action="store_true")
    for p in (g, t, k):
        p.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_gen)

    for name, func, help_ in (("dual", cmd_dual, "dual embedding"),
                              ("radial", cmd_radial, "radial map")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input")
        p.add_argument("-o", "--output")
        p.set_defaults(func=func)

    p = sub.add_parser("tw", help="tree-width")
    p.add_argument("input")
    p.add_argument("--exact", action="store_true", help="use the exact oracle (the only mode)")
    p.add_argument("--limit", type=int, default=limit)
    p.add_argument("--td", help="write the decomposition in PACE format")
    p.set_defaults(func=cmd_tw)

    p = sub.add_parser("ptree", help="optimal p-tree")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_ptree)

    p = sub.add_parser("check-bound", help="check the dual tree-width bound")
    p.add_argument("input")
    p.add_argument("--limit", type=int, default=limit)
    p.set_defaults(func=cmd_check_bound)

    p = sub.add_parser("bramble-order", help="verify a bramble and compute its order")
    p.add_argument("input")
    p.add_argument("--budget", type=int, default=50_000_000)
    p.set_defaults(func=cmd_bramble_order)

    p = sub.add_parser("facewidth", help="face-width queries")
    p.add_argument("input")
    p.add_argument("--theta", type=int)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--budget", type=int, default=2_000_000)
    p.set_defaults(func=cmd_facewidth)

    p = sub.add_parser("fuzz", help="check the bound on small and random embeddings")
    p.add_argument("--max-darts", type=int, default=12)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--random-darts", type=int, default=16)
    p.add_argument("--random-only", action="store_true")
    p.add_argument("--fail-dump")
    p.set_defaults(func=cmd_fuzz)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TooLargeError as exc:
        _say(f"budget exceeded: {exc}")
        return EXIT_BUDGET
    except InternalError as exc:
        _say(f"internal check failed: {exc}")
        return EXIT_VIOLATION
    except SurftwError as exc:
        _say(f"invalid input: {exc}")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
