"""Command-line interface: ``body``, ``verify SUITE`` and ``experiment NAME``.

Exit codes: 0 pass, 1 verification failure, 2 usage error or malformed
input, 3 unbounded result.
"""

from __future__ import annotations

import argparse
import inspect
import json
import os
import sys

from .distributions import DomainError, WeightedSample
from .experiments import EXPERIMENTS
from .risk import AvgQuantile, Expectile, MaxExt, Mean, OneSidedMoment, spec_from_json
from .shapes import shape_from_json
from .svg import SOURCE_COLOR, figure_svg
from .transforms import floating_like_body
from .verify import SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNBOUNDED = 0, 1, 2, 3

# main tolerance keyword of each suite, targeted by --tol
SUITE_TOL = {
    "duals": "tol", "axioms": "tol", "sandwich": "rel_gap", "inclusion": "slack", "bob": "quad_tol",
    "metronoid": "tol", "centroid": "rel_tol", "continuity": "final_tol", "maxext": "tol_direct",
}


class UsageError(Exception):
    pass


def load_json(text: str):
    """Parse ``text`` as inline JSON, or as the path of a JSON file."""
    try:
        if os.path.exists(text):
            with open(text, encoding="utf-8") as fh:
                return json.load(fh)
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {text!r}: {exc}") from exc


def load_source(obj):
    if not isinstance(obj, dict):
        raise UsageError("source JSON must be an object")
    return WeightedSample.from_json(obj) if "points" in obj else shape_from_json(obj)


def spec_from_args(args):
    if args.spec is not None:
        obj = load_json(args.spec)
        if not isinstance(obj, dict):
            raise UsageError("spec JSON must be an object")
        return spec_from_json(obj)
    if args.alpha is not None:
        spec = AvgQuantile(args.alpha)
    elif args.tau is not None:
        spec = Expectile(args.tau)
    elif args.p is not None or args.a is not None:
        spec = OneSidedMoment(1.0 if args.p is None else args.p, 1.0 if args.a is None else args.a)
    else:
        spec = Mean()
    if args.m is not None:
        spec = MaxExt(spec, args.m)
    return spec


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def cmd_body(args) -> int:
    source = load_source(load_json(args.source))
    spec = spec_from_args(args)
    if source.dim != 2 and args.svg:
        raise UsageError("SVG output needs a planar source")
    est = floating_like_body(source, spec, args.grid)
    out = est.to_json()
    out["spec"] = spec.to_json()
    _emit(_dumps(out), args.out)
    if est.unbounded:
        print("unbounded body", file=sys.stderr)
        return EXIT_UNBOUNDED
    if args.svg:
        if isinstance(source, WeightedSample):
            items = [("sample", source.points, SOURCE_COLOR)]
        else:
            items = [("shape", ("polygon", source.outline(), False), SOURCE_COLOR)]
        items.append(("body", est.body if est.body.vertices.shape[0] >= 2 else est.body.vertices, None))
        _emit(figure_svg(items, title=json.dumps(spec.to_json(), sort_keys=True)), args.svg)
    return EXIT_OK


def _accepts(fn, name: str) -> bool:
    return name in inspect.signature(fn).parameters


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(sorted(SUITES))}")
    fn = SUITES[args.suite]
    kw = {}
    if args.tol is not None:
        kw[SUITE_TOL[args.suite]] = args.tol
    if args.grid_given:
        for key in ("grid", "N"):
            if _accepts(fn, key):
                kw[key] = args.grid
                break
    rep = fn(seed=args.seed, **kw)
    _emit(rep.dumps(), args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def experiment_kwargs(args) -> dict:
    name = args.name
    kw = {}
    pick = lambda key, val: kw.__setitem__(key, val) if val is not None else None
    if name == "concentration":
        pick("alpha", args.alpha)
        pick("eps", args.eps)
        pick("n", args.n)
        pick("seeds", args.seeds)
    elif name == "expected-polytope":
        if args.m is not None:
            kw["ms"] = (args.m,)
        pick("trials", args.trials)
        if args.grid_given:
            kw["directions"] = args.grid
        pick("sigmas", args.tol)
    elif name == "nonmonotone":
        pick("a", args.a)
        pick("alpha", args.alpha)
        pick("eps", args.eps)
        if args.grid_given:
            kw["grid"] = args.grid
    elif name == "minkowski-conjecture":
        pick("alpha", args.alpha)
        pick("pairs", args.pairs)
        pick("tol", args.tol)
        if args.grid_given:
            kw["grid"] = args.grid
    elif name == "fingerprint":
        pick("m_max", args.m)
    return kw


def cmd_experiment(args) -> int:
    if args.name not in EXPERIMENTS:
        raise UsageError(f"unknown experiment {args.name!r}; choose from {', '.join(sorted(EXPERIMENTS))}")
    rep, figure = EXPERIMENTS[args.name](seed=args.seed, **experiment_kwargs(args))
    _emit(rep.dumps(), args.out)
    if args.svg:
        _emit(figure_svg(figure, title=args.name), args.svg)
    return EXIT_OK if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid", type=int, default=None, help="number of directions (default 720)")
    common.add_argument("--alpha", type=float)
    common.add_argument("--tau", type=float)
    common.add_argument("--p", type=float)
    common.add_argument("--a", type=float)
    common.add_argument("--m", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float)
    common.add_argument("--out", help="write JSON here instead of stdout")
    common.add_argument("--svg", help="write an SVG figure here")

    ap = argparse.ArgumentParser(prog="sublinbodies", description="Convex bodies from sublinear expectations.")
    sub = ap.add_subparsers(dest="command", required=True)
    b = sub.add_parser("body", parents=[common], help="compute E_e of a shape or weighted sample")
    b.add_argument("source", help="shape or sample JSON (file path or inline)")
    b.add_argument("--spec", help="expectation spec JSON (file path or inline)")
    b.set_defaults(func=cmd_body)
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", help=" | ".join(SUITES))
    v.set_defaults(func=cmd_verify)
    e = sub.add_parser("experiment", parents=[common], help="run a numerical experiment")
    e.add_argument("name", help=" | ".join(EXPERIMENTS))
    e.add_argument("--eps", type=float)
    e.add_argument("--n", type=int, help="sample size (concentration)")
    e.add_argument("--seeds", type=int, help="number of seeds (concentration)")
    e.add_argument("--trials", type=int, help="Monte Carlo trials (expected-polytope)")
    e.add_argument("--pairs", type=int, help="polygon pairs (minkowski-conjecture)")
    e.set_defaults(func=cmd_experiment)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    args.grid_given = args.grid is not None
    if args.grid is None:
        args.grid = 720
    if args.grid < 3:
        print("error: --grid needs at least 3 directions", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, DomainError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


__all__ = ["main", "build_parser", "load_json", "load_source", "spec_from_args", "experiment_kwargs"]
