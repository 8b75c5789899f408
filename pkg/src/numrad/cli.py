"""Command-line driver.

Subcommands:
  report             chain-verify one matrix and write a ChainReport
  fuzz               randomized chain verification across generator kinds
  boundary           export numerical-range boundary samples as CSV
  list-inequalities  print the bound and functional-inequality registries

Exit codes: 0 clean, 1 verified violations, 2 parse/config errors. Output is
deterministic for a fixed config and seed (sorted keys, no timestamps).
"""

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import bounds, genlab, kernels, matcore, numrange, states
from .errors import NumradError, UnknownInequality
from .prng import Stream, fold

SCHEMA = 1
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2

DEFAULT_TRIALS = 1000
DEFAULT_DIMS = (2, 3, 4, 6)
DEFAULT_RESOLUTION = 1024
DEFAULT_TOL = 1e-8

_FLAG_KEYS = ("v_equals_half_norm", "v_sq_equals_quarter_cross", "v_equals_norm")


def _dump_json(obj, path: str | None):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_config_file(path: str | None) -> dict:
    if not path:
        return {}
    obj = json.loads(Path(path).read_text())
    if not isinstance(obj, dict):
        raise ValueError("config file must hold a JSON object")
    return obj


def _setting(args, cfg: dict, key: str, default):
    """Flags win over the config file, which wins over defaults."""
    val = getattr(args, key, None)
    if val is not None:
        return val
    if key in cfg:
        return cfg[key]
    return default


def _load_matrix(args) -> np.ndarray:
    if getattr(args, "matrix", None):
        return matcore.matrix_from_json(Path(args.matrix).read_text())
    if getattr(args, "gen", None):
        text = args.gen
        if text.startswith("@"):
            text = Path(text[1:]).read_text()
        return genlab.generate(genlab.GenSpec.from_json(text))
    raise ValueError("need --matrix PATH or --gen JSON")


def _parse_filter(tokens: str | None):
    """Split a filter into (bound ids, generator kinds); reject unknowns."""
    if not tokens or tokens == "all":
        return None, None
    known_bounds = set(bounds.chain_bound_ids())
    known_funcs = {i for i, _ in states.list_functional_inequalities()}
    ids, kinds = set(), set()
    for tok in tokens.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok in known_bounds or tok in known_funcs:
            ids.add(tok)
        elif tok in genlab.KINDS:
            kinds.add(tok)
        else:
            raise UnknownInequality(f"unknown filter token {tok!r}")
    return (ids or None), (kinds or None)


def _chain_config(args, cfg) -> bounds.ChainConfig:
    ids, _ = _parse_filter(_setting(args, cfg, "filter", None))
    return bounds.ChainConfig(
        tol=float(_setting(args, cfg, "tol", DEFAULT_TOL)),
        resolution=int(_setting(args, cfg, "resolution", DEFAULT_RESOLUTION)),
        filter_ids=frozenset(ids) if ids else None,
    )


def _print_report(report: bounds.ChainReport):
    print(f"v(a) = {report.v:.12g}")
    print(f"{'id':24s} {'kind':5s} {'power':5s} {'value':>18s} {'slack':>12s}")
    for b in report.lowers + report.uppers:
        eq = " =" if b.id in report.equalities else ""
        print(f"{b.id:24s} {b.kind:5s} {b.power:5d} {b.value:18.12g} "
              f"{report.slack(b):12.3e}{eq}")
    flags = ", ".join(k for k in _FLAG_KEYS if report.range_flags.get(k))
    print(f"range flags: {flags or 'none'}")
    if report.violations:
        print(f"VIOLATIONS: {report.violations}")


def _cmd_report(args) -> int:
    cfg = _load_config_file(args.config)
    a = _load_matrix(args)
    config = _chain_config(args, cfg)
    report = bounds.verify_chain(a, config)
    out = _setting(args, cfg, "out", "report.json")
    payload = report.to_json()
    payload["matrix"] = matcore.matrix_to_json(a)
    payload["backend"] = kernels.backend()
    _dump_json(payload, out)
    _print_report(report)
    return EXIT_VIOLATION if report.violations else EXIT_OK


def _cmd_boundary(args) -> int:
    cfg = _load_config_file(args.config)
    a = _load_matrix(args)
    n_points = int(_setting(args, cfg, "points", 360))
    rb = numrange.range_boundary(a, n_points)
    out = _setting(args, cfg, "out", "boundary.csv")
    text = rb.to_csv()
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)
    return EXIT_OK


def _parse_dims(value) -> tuple[int, ...]:
    if isinstance(value, (list, tuple)):
        return tuple(int(d) for d in value)
    return tuple(int(tok) for tok in str(value).split(",") if tok.strip())


def _draw_spec(kind: str, dim: int, master_seed: int, trial: int) -> genlab.GenSpec:
    seed = fold(master_seed, genlab.KINDS.index(kind), dim, trial)
    params = {}
    if kind == "alpha_beta_target":
        stream = Stream(seed, stream=1)
        alpha = 1.0 if dim == 1 else stream.uniform(0.4, 0.95)
        lo, hi = genlab.feasible_beta_range(alpha, dim)
        beta = lo if dim <= 2 else stream.uniform(lo, min(hi, 2.5 * lo))
        params = {"alpha": alpha, "beta": beta}
    return genlab.GenSpec(kind=kind, dim=dim, seed=seed, params=params)


def _cmd_fuzz(args) -> int:
    cfg = _load_config_file(args.config)
    trials = int(_setting(args, cfg, "trials", DEFAULT_TRIALS))
    dims = _parse_dims(_setting(args, cfg, "dims", DEFAULT_DIMS))
    seed = int(_setting(args, cfg, "seed", 0))
    tol = float(_setting(args, cfg, "tol", DEFAULT_TOL))
    resolution = int(_setting(args, cfg, "resolution", DEFAULT_RESOLUTION))
    filter_ids, filter_kinds = _parse_filter(_setting(args, cfg, "filter", None))
    if trials < 1 or not dims or resolution < numrange.MIN_RESOLUTION or tol <= 0:
        raise ValueError("need trials >= 1, nonempty dims, resolution >= 64, tol > 0")

    config = bounds.ChainConfig(
        tol=tol, resolution=resolution,
        filter_ids=frozenset(filter_ids) if filter_ids else None)
    kinds = [k for k in genlab.KINDS if filter_kinds is None or k in filter_kinds]

    per_bound: dict[str, dict] = {}
    per_kind: dict[str, dict] = {}
    violations: list[dict] = []
    for kind in kinds:
        kind_stats = {"trials": 0, "violations": 0,
                      "flags": {key: 0 for key in _FLAG_KEYS},
                      "alpha_beta_max_dev": 0.0}
        for trial in range(trials):
            dim = dims[trial % len(dims)]
            spec = _draw_spec(kind, dim, seed, trial)
            a = genlab.generate(spec)
            report = bounds.verify_chain(a, config)
            kind_stats["trials"] += 1
            for key in _FLAG_KEYS:
                kind_stats["flags"][key] += int(report.range_flags[key])
            for b in report.lowers + report.uppers:
                slot = per_bound.setdefault(
                    b.id, {"min_slack": math.inf, "equalities": 0,
                           "violations": 0, "trials": 0})
                slack = report.slack(b)
                slot["trials"] += 1
                slot["min_slack"] = min(slot["min_slack"], slack)
                slot["equalities"] += int(b.id in report.equalities)
            for item in report.violations:
                per_bound[item["id"]]["violations"] += 1
                kind_stats["violations"] += 1
                violations.append({"genspec": spec.to_json(), **item})
            if kind in ("normal", "alpha_beta_target"):
                ab = states.alpha_beta(a)
                if kind == "normal":
                    ta, tb = 1.0, 1.0
                else:
                    ta = spec.params.get("alpha", 1.0)
                    tb = spec.params.get("beta", 1.0)
                beta_dev = (abs(ab.beta_min - tb)
                            if math.isfinite(ab.beta_min) else math.inf)
                kind_stats["alpha_beta_max_dev"] = max(
                    kind_stats["alpha_beta_max_dev"],
                    abs(ab.alpha_max - ta), beta_dev)
        per_kind[kind] = kind_stats

    for slot in per_bound.values():
        if math.isinf(slot["min_slack"]):
            slot["min_slack"] = None

    summary = {
        "schema": SCHEMA,
        "backend": kernels.backend(),
        "config": {"trials": trials, "dims": list(dims), "seed": seed,
                   "tol": tol, "resolution": resolution,
                   "filter": sorted(filter_ids) if filter_ids else "all",
                   "kinds": kinds},
        "per_bound": per_bound,
        "per_kind": per_kind,
        "violations": violations,
    }
    _dump_json(summary, _setting(args, cfg, "out", "fuzz_summary.json"))
    if violations:
        for item in violations:
            print(f"VIOLATION {item['id']} slack={item['slack']:.3e} "
                  f"reproducer: {json.dumps(item['genspec'], sort_keys=True)}",
                  file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_list(_args) -> int:
    print("functional inequalities (states registry):")
    for ineq_id, desc in states.list_functional_inequalities():
        print(f"  {ineq_id:14s} {desc}")
    print("chain bounds (default config):")
    for bid in bounds.chain_bound_ids():
        print(f"  {bid}")
    print("generator kinds:")
    for kind in genlab.KINDS:
        print(f"  {kind}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numrad",
        description="numerical radius bounds: reports, fuzzing, range export")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p):
        p.add_argument("--matrix", help="path to matrix JSON {dim, re, im}")
        p.add_argument("--gen", help="GenSpec JSON inline, or @path")
        p.add_argument("--config", help="JSON config file (flags win)")
        p.add_argument("--out", help="output path ('-' for stdout)")

    rep = sub.add_parser("report", help="verify the bound chain for one matrix")
    add_source(rep)
    rep.add_argument("--resolution", type=int)
    rep.add_argument("--tol", type=float)
    rep.add_argument("--filter", help="comma list of bound ids")
    rep.set_defaults(func=_cmd_report)

    fuzz = sub.add_parser("fuzz", help="randomized chain verification")
    fuzz.add_argument("--config", help="JSON config file (flags win)")
    fuzz.add_argument("--out", help="output path ('-' for stdout)")
    fuzz.add_argument("--trials", type=int, help="trials per generator kind")
    fuzz.add_argument("--dims", help="comma list, e.g. 2,3,4,6")
    fuzz.add_argument("--seed", type=int)
    fuzz.add_argument("--resolution", type=int)
    fuzz.add_argument("--tol", type=float)
    fuzz.add_argument("--filter",
                      help="comma list of bound ids and/or generator kinds")
    fuzz.set_defaults(func=_cmd_fuzz)

    bnd = sub.add_parser("boundary", help="export range boundary CSV")
    add_source(bnd)
    bnd.add_argument("--points", type=int, help="number of directions (>= 8)")
    bnd.set_defaults(func=_cmd_boundary)

    lst = sub.add_parser("list-inequalities", help="print the registries")
    lst.set_defaults(func=_cmd_list)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NumradError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
