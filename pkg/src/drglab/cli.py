"""Command-line surface: build, analyze, homog, cab, classify, srg, bounds.

JSON (schema "drg-lab-v1", sorted keys) goes to stdout; diagnostics to
stderr.  Exit codes: 0 = success / property holds, 1 = property fails
(witness in the JSON), 2 = input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .arrays import IntersectionArray, basic_feasibility
from .bounds import F_bound, G_bound, srg_bounds
from .cab import cab_partition_check
from .classical import (classify_classical, classify_tight, fundamental_bound,
                        recognize_classical)
from .eigen import b_parameter, eigenvalues
from .errors import DrgError, InputError
from .families import FamilySpec, build_family
from .graph import Graph, check_distance_regular
from .homogeneous import (ClassifierBundle, check_i_homogeneous,
                          classify_main, near_polygon_analysis,
                          recognize_named_family, small_diameter_lookup)
from .scalars import scalar_str
from .srg import SrgParams, check_bounds, recognize_srg_family, sims_classify, \
    srg_eigenvalues, srg_from_graph

SCHEMA = "drg-lab-v1"


def _emit(payload: dict, code: int) -> int:
    payload["schema"] = SCHEMA
    json.dump(payload, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")
    return code


def _str(x):
    if x is None or isinstance(x, (str, bool, int)):
        return x
    if isinstance(x, (list, tuple)):
        return [_str(v) for v in x]
    return scalar_str(x)


def _load_graph(path: str) -> Graph:
    try:
        return Graph.load(path)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot load graph from {path}: {exc}") from exc


def _require_array(g: Graph):
    res = check_distance_regular(g)
    if isinstance(res, IntersectionArray):
        return res, None
    return None, res


def cmd_build(args) -> int:
    data = None
    if args.data:
        data = json.loads(args.data)
    spec = FamilySpec.parse(args.family, data=data)
    g = build_family(spec)
    summary = {"family": spec.name, "params": list(spec.params),
               "n": g.n, "edges": g.edge_count}
    if args.out:
        g.dump(args.out)
        summary["path"] = args.out
        return _emit(summary, 0)
    summary["graph"] = g.to_json()
    return _emit(summary, 0)


def cmd_analyze(args) -> int:
    g = _load_graph(args.file)
    ia, witness = _require_array(g)
    if ia is None:
        return _emit({"distance_regular": False,
                      "witness": {"x": witness.x, "y": witness.y,
                                  "distance": witness.distance,
                                  "counts": list(witness.counts),
                                  "expected": list(witness.expected)}}, 1)
    rep = basic_feasibility(ia)
    out = {"distance_regular": True, "ia": str(ia), "v": g.n,
           "diameter": ia.D, "k": ia.k, "a": list(ia.a),
           "k_i": list(rep.k_i), "bipartite": ia.is_bipartite,
           "eigenvalues": _str(list(eigenvalues(ia).values))}
    if ia.D >= 2:
        out["b_parameter"] = _str(b_parameter(ia))
    out["named_families"] = recognize_named_family(ia) + small_diameter_lookup(ia)
    return _emit(out, 0)


def cmd_homog(args) -> int:
    g = _load_graph(args.file)
    if (args.sample is None) != (args.seed is None):
        raise InputError("--sample and --seed must be given together")
    mode = "sampled" if args.sample is not None else "exhaustive"
    rep = check_i_homogeneous(g, args.i, mode, seed=args.seed,
                              count=args.sample)
    out = {"level": rep.level, "holds": rep.holds, "mode": rep.mode,
           "pairs_checked": rep.pairs_checked}
    if rep.holds:
        out["cells"] = [list(l) for l in rep.labels]
        out["quotient"] = [list(r) for r in rep.matrix]
        return _emit(out, 0)
    out["witness"] = _str(list(rep.witness))
    return _emit(out, 1)


def cmd_cab(args) -> int:
    g = _load_graph(args.file)
    rep = cab_partition_check(g, i_max=args.upto)
    out = {"holds": rep.holds, "pairs_checked": rep.pairs_checked,
           "levels": [{"level": p.level, "gamma": _str(p.gamma),
                       "alpha": _str(p.alpha), "beta": _str(p.beta),
                       "delta": _str(p.delta)} for p in rep.levels]}
    if rep.holds:
        return _emit(out, 0)
    d = rep.deviation
    out["witness"] = {"level": d.level, "x": d.x, "y": d.y, "vertex": d.vertex,
                      "counts": list(d.counts), "expected": list(d.expected),
                      "reason": d.reason}
    return _emit(out, 1)


def cmd_classify(args) -> int:
    if (args.file is None) == (args.ia is None):
        raise InputError("give exactly one of FILE or --ia")
    if args.ia is not None:
        ia = IntersectionArray.parse(args.ia)
        homogeneity = "asserted"
    else:
        g = _load_graph(args.file)
        arr, witness = _require_array(g)
        if arr is None:
            return _emit({"error": "graph is not distance-regular"}, 1)
        ia = arr
        homogeneity = "asserted"
    out: dict = {"ia": str(ia), "homogeneity": homogeneity}
    out["named_families"] = recognize_named_family(ia) + small_diameter_lookup(ia)
    out["near_polygon"] = _np_json(near_polygon_analysis(ia))
    cps = recognize_classical(ia) if ia.D >= 3 else []
    out["classical_parameters"] = [
        {"D": cp.D, "b": cp.b, "alpha": _str(cp.alpha), "beta": _str(cp.beta)}
        for cp in cps]
    if ia.D >= 3:
        rep = fundamental_bound(ia)
        out["fundamental_bound"] = {
            "lhs": _str(rep.lhs), "rhs": _str(rep.rhs), "tight": rep.tight,
            "bipartite": rep.bipartite, "a_D": rep.a_D,
            "r": _str(rep.r), "s": _str(rep.s)}
    classifications = []
    if ia.D >= 5 and ia.a_at(1) > 0:
        classifications.append(classify_main(
            ClassifierBundle(ia, homogeneity)).as_json())
        for cp in cps:
            if cp.b >= 1:
                classifications.append(classify_classical(cp).as_json())
        if out.get("fundamental_bound", {}).get("tight"):
            classifications.append(classify_tight(ia).as_json())
    out["classifications"] = classifications
    return _emit(out, 0)


def _np_json(npa: dict) -> dict:
    out = dict(npa)
    if out.get("order") is not None:
        out["order"] = list(out["order"])
    return out


def cmd_srg(args) -> int:
    if (args.params is None) == (args.file is None):
        raise InputError("give exactly one of --params or FILE")
    if args.params:
        try:
            v, k, lam, mu = (int(t) for t in args.params.split(","))
        except ValueError as exc:
            raise InputError(f"bad --params: {exc}") from exc
        p = SrgParams(v, k, lam, mu)
    else:
        p, _ = srg_from_graph(_load_graph(args.file))
    eig = srg_eigenvalues(p)
    out = {"params": list(p.as_tuple()), "r": _str(eig.r), "s": _str(eig.s),
           "tags": recognize_srg_family(p)}
    try:
        out["sims"] = _str_dict(sims_classify(p))
        out["bounds"] = _str_dict(check_bounds(p))
    except DrgError as exc:
        out["classification_note"] = str(exc)
    return _emit(out, 0)


def _str_dict(d: dict) -> dict:
    return {k: _str(v) if not isinstance(v, dict) else _str_dict(v)
            for k, v in d.items()}


def cmd_bounds(args) -> int:
    b = Fraction(args.b)
    out = {"F": _str(F_bound(b)), "G": _str(G_bound(b))}
    if args.m is not None:
        mu = args.mu if args.mu is not None else 1
        mb, cf, ph = srg_bounds(args.m, mu)
        out["mu_bound"] = mb
        out["claw_f"] = _str(cf)
        out["phi"] = ph
    return _emit(out, 0)


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="drglab")
    ap.add_argument("--threads", type=int, default=1,
                    help="worker cap (accepted for compatibility)")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("build", help="construct a named family")
    p.add_argument("family", help="e.g. johnson:10,5 or halved_cube:10")
    p.add_argument("--data", help="JSON block/OA data for design-backed families")
    p.add_argument("--out", help="write graph JSON here instead of stdout")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("analyze", help="distance-regularity and spectra")
    p.add_argument("file")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("homog", help="joint distance partition equitability")
    p.add_argument("file")
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(fn=cmd_homog)

    p = sub.add_parser("cab", help="local three-cell partition check")
    p.add_argument("file")
    p.add_argument("--upto", type=int, default=None)
    p.set_defaults(fn=cmd_cab)

    p = sub.add_parser("classify", help="run the classifiers")
    p.add_argument("file", nargs="?")
    p.add_argument("--ia", help="intersection array 'b0,..;c1,..'")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("srg", help="strongly regular parameter analysis")
    p.add_argument("file", nargs="?")
    p.add_argument("--params", help="v,k,lambda,mu")
    p.set_defaults(fn=cmd_srg)

    p = sub.add_parser("bounds", help="evaluate the bound polynomials")
    p.add_argument("--b", required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--mu", type=int)
    p.set_defaults(fn=cmd_bounds)
    return ap


def main(argv: Optional[list] = None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except DrgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
