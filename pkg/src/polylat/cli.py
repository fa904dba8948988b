"""Command-line front end with stable JSON input and output.

All results go to stdout as a single JSON document; diagnostics go to
stderr.  Exit codes: 0 success, 1 I/O failure, 2 validation failure
(the JSON error document carries the domain error code).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .counting import count_slices, verify_discrepancy
from .errors import PolylatError
from .lattice import lattice_width
from .ratgeom import area, polygon_from_json_dict, rat, rat_str
from .reductions import (
    apm_from_json_dict,
    apm_solve_bruteforce,
    apm_to_polygon,
    construction_to_json_dict,
    normalize_apm,
    sda_from_json_dict,
    sda_solve_bruteforce,
    sda_to_apm,
    verify_reduction,
)
from .transopt import Mode, optimize_ptas, optimize_sweep, optimize_thin


def _read_json(path: str) -> dict:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: {exc}") from exc


class InputFormatError(PolylatError):
    code = "InvalidInput"


def _load_polygon(path: str):
    obj = _read_json(path)
    try:
        return polygon_from_json_dict(obj)
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise InputFormatError(f"{path}: bad polygon document ({exc})") from exc


def _load_vector(text: str) -> tuple[int, int]:
    parts = text.replace("(", "").replace(")", "").split(",")
    if len(parts) != 2:
        raise InputFormatError(f"direction must be 'p,q', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise InputFormatError(f"direction components must be integers: {text!r}") from exc


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "compact":
        text = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    else:
        text = json.dumps(obj, sort_keys=True, indent=2)
    sys.stdout.write(text + "\n")


def _opt_rat(value) -> str | None:
    return None if value is None else rat_str(value)


def _cmd_count(args) -> dict:
    total, slices = count_slices(_load_polygon(args.polygon))
    return {
        "count": total,
        "slices": [
            {"x1": s.x1, "lo": rat_str(s.lo), "hi": rat_str(s.hi), "count": s.count}
            for s in slices
        ],
    }


def _cmd_area(args) -> dict:
    return {"area": rat_str(area(_load_polygon(args.polygon)))}


def _cmd_width(args) -> dict:
    wr = lattice_width(_load_polygon(args.polygon))
    return {"width": rat_str(wr.width), "direction": [str(wr.direction[0]), str(wr.direction[1])]}


def _cmd_optimize(args) -> dict:
    P = _load_polygon(args.polygon)
    v = _load_vector(args.v)
    if args.mode == "sweep":
        res = optimize_sweep(P, v)
    elif args.mode == "thin":
        res = optimize_thin(P, v, lattice_width(P).direction)
    else:
        res = optimize_ptas(P, v, args.k)
    return {
        "t": rat_str(res.t_star),
        "count": res.count,
        "mode": res.mode.value,
        "ratio_bound": _opt_rat(res.ratio_bound),
    }


def _cmd_discrepancy(args) -> dict:
    rep = verify_discrepancy(_load_polygon(args.polygon))
    return {
        "n_points": rep.n_points,
        "volume_over_det": rat_str(rep.volume_over_det),
        "width": rat_str(rep.width),
        "bound": rat_str(rep.bound),
        "holds": rep.holds,
        "skipped": rep.skipped,
    }


def _cmd_solve_sda(args) -> dict:
    inst = sda_from_json_dict(_read_json(args.instance))
    return {"q": sda_solve_bruteforce(inst)}


def _cmd_solve_apm(args) -> dict:
    inst = apm_from_json_dict(_read_json(args.instance))
    return {"root": _opt_rat(apm_solve_bruteforce(inst))}


def _cmd_reduce_sda(args) -> dict:
    inst = sda_from_json_dict(_read_json(args.instance))
    normalized, amap = normalize_apm(sda_to_apm(inst))
    sc = apm_to_polygon(normalized)
    doc = construction_to_json_dict(sc)
    doc["map"] = {"shift": rat_str(amap.shift), "scale": rat_str(amap.scale)}
    return doc


def _cmd_reduce_apm(args) -> dict:
    inst = apm_from_json_dict(_read_json(args.instance))
    normalized, amap = normalize_apm(inst)
    sc = apm_to_polygon(normalized)
    doc = construction_to_json_dict(sc)
    doc["map"] = {"shift": rat_str(amap.shift), "scale": rat_str(amap.scale)}
    return doc


def _cmd_verify(args) -> dict:
    obj = _read_json(args.instance)
    kind = args.kind
    if kind == "auto":
        kind = "sda" if "alphas" in obj else "apm"
    if kind == "sda":
        inst = sda_to_apm(sda_from_json_dict(obj))
    else:
        inst = apm_from_json_dict(obj)
    normalized, amap = normalize_apm(inst)
    sc = apm_to_polygon(normalized)
    rep = verify_reduction(sc, normalized, samples=args.samples)
    # report the witness on the original axis, not the normalized one
    root = None if rep.apm_root is None else amap.invert(rep.apm_root)
    return {
        "ok": True,
        "samples": rep.samples_checked,
        "M": rep.m_total,
        "min_count": rep.min_count,
        "root": _opt_rat(root),
    }


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("pretty", "compact"),
        default="pretty",
        help="JSON output style (default pretty)",
    )
    common.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed Python's RNG; all built-in commands are deterministic, "
        "the flag is reserved for randomized tooling layered on top",
    )

    parser = argparse.ArgumentParser(
        prog="polylat",
        description="Exact lattice-point counting and translate minimization for convex polygons",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("count", _cmd_count, "count lattice points via vertical slices")
    p.add_argument("--polygon", required=True, help="polygon JSON file, or - for stdin")

    p = add("area", _cmd_area, "exact polygon area")
    p.add_argument("--polygon", required=True)

    p = add("width", _cmd_width, "lattice width and minimizing direction")
    p.add_argument("--polygon", required=True)

    p = add("optimize", _cmd_optimize, "minimize lattice points over translates")
    p.add_argument("--polygon", required=True)
    p.add_argument("--mode", choices=("sweep", "thin", "ptas"), default="ptas")
    p.add_argument("--k", type=int, default=1, help="approximation parameter for ptas mode")
    p.add_argument("--v", default="-1,0", help="translation direction as 'p,q'")

    p = add("discrepancy", _cmd_discrepancy, "width-based discrepancy bound report")
    p.add_argument("--polygon", required=True)

    p = add("solve-sda", _cmd_solve_sda, "brute-force Diophantine approximation witness")
    p.add_argument("--instance", required=True)

    p = add("solve-apm", _cmd_solve_apm, "brute-force common zero of pulse functions")
    p.add_argument("--instance", required=True)

    p = add("reduce-sda", _cmd_reduce_sda, "Diophantine instance to polygon construction")
    p.add_argument("--instance", required=True)

    p = add("reduce-apm", _cmd_reduce_apm, "pulse instance to polygon construction")
    p.add_argument("--instance", required=True)

    p = add("verify", _cmd_verify, "replay the counting law of a reduction")
    p.add_argument("--instance", required=True)
    p.add_argument("--kind", choices=("auto", "sda", "apm"), default="auto")
    p.add_argument("--samples", type=int, default=200)

    return parser


def _join_vector_flag(argv: list[str]) -> list[str]:
    # argparse mistakes "-1,0" after --v for an option; fold it into --v=...
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--v" and i + 1 < len(argv):
            out.append(f"--v={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_join_vector_flag(list(argv)))
    if args.seed is not None:
        random.seed(args.seed)
    try:
        result = args.func(args)
    except InputFormatError as exc:
        _emit({"error": exc.code, "detail": str(exc)}, args.format)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolylatError as exc:
        _emit({"error": exc.code, "detail": str(exc)}, args.format)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        _emit({"error": "IOError", "detail": str(exc)}, args.format)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(result, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
