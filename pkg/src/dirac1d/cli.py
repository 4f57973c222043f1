"""Command-line front end: parse boundary pairs, dispatch, emit JSON/CSV.

Exit codes: 0 success or negative finding, 2 parse error, 3 invalid input,
4 verification failure, 5 internal degeneracy.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import spectrum, topology, waveop
from .errors import DegenerateLimit, Dirac1dError, NonClosure, NotAdmissible
from .extensions import (
    BoundaryPair,
    check_admissible,
    classify,
    matrix_from_json,
    matrix_to_json,
    random_admissible,
)
from .scattering import ContinuumPoint, S_matrix, T0Evaluator
from .weyl_green import green_free, green_perturbed

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_VERIFY = 4
EXIT_DEGENERATE = 5


class ParseError(Exception):
    pass


def _parse_matrix(text: str, flag: str) -> np.ndarray:
    try:
        return matrix_from_json(text)
    except (ValueError, json.JSONDecodeError) as exc:
        pos = getattr(exc, "pos", None)
        where = f" at position {pos}" if pos is not None else ""
        raise ParseError(f"bad matrix for {flag}{where}: {exc}") from None


def _emit(payload, args):
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_csv(header, rows, args):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_csv_cell(v) for v in row))
    text = "\n".join(lines) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_cell(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _pair_from_args(args) -> BoundaryPair:
    C = _parse_matrix(args.C, "--C")
    D = _parse_matrix(args.D, "--D")
    return BoundaryPair(C, D, args.mass)


def _class_name(pair: BoundaryPair) -> str:
    return classify(pair).tag


def cmd_admissible(args) -> int:
    C = _parse_matrix(args.C, "--C")
    D = _parse_matrix(args.D, "--D")
    cd = C @ D.conj().T
    gram = C @ C.conj().T + D @ D.conj().T
    ok = check_admissible(C, D)
    payload = {
        "admissible": bool(ok),
        "hermiticity_defect": float(np.abs(cd - cd.conj().T).max()),
        "det_ccdd": [float(np.linalg.det(gram).real), float(np.linalg.det(gram).imag)],
    }
    payload["class"] = _class_name(BoundaryPair(C, D, args.mass)) if ok else None
    _emit(payload, args)
    return EXIT_OK


def _spectral_payload(pair: BoundaryPair, verify: bool):
    report = spectrum.eigenvalues_closed_form(pair)
    payload = {
        "count": report.total_count,
        "class": report.pair_class.tag,
        "eigenvalues": [
            {"lambda": e.lam, "multiplicity": e.multiplicity, "t": e.t_root}
            for e in report.eigenvalues
        ],
    }
    if verify:
        scan = spectrum.eigenvalue_oracle_scan(pair)
        locs = [e.lam for e in report.eigenvalues]
        agree = len(scan) == len(locs) and all(
            abs(a - b) <= 1e-8 for a, b in zip(locs, scan)
        )
        payload["oracle_agreement"] = bool(agree)
    return payload


def cmd_eigs(args) -> int:
    pair = _pair_from_args(args).require_admissible()
    payload = _spectral_payload(pair, args.verify)
    _emit(payload, args)
    if args.verify and not payload["oracle_agreement"]:
        return EXIT_VERIFY
    return EXIT_OK


def cmd_smatrix(args) -> int:
    pair = _pair_from_args(args).require_admissible()
    ev = T0Evaluator(pair)
    s_grid = np.linspace(0.0, 1.0, args.points)
    header = ["branch", "s", "lambda"]
    for name in ("T0", "S"):
        for j in range(2):
            for k in range(2):
                header += [f"Re{name}_{j+1}{k+1}", f"Im{name}_{j+1}{k+1}"]
    header.append("unitarity_defect")
    rows = []
    eye = np.eye(2)
    for branch in (-1, +1):
        for s in s_grid:
            pt = ContinuumPoint(branch=branch, s=float(s))
            t0 = ev.at_point(pt)
            smat = S_matrix(pt, pair)
            lam = pt.energy(pair.mass)
            row = [branch, float(s), float(lam)]
            for M in (t0, smat):
                for j in range(2):
                    for k in range(2):
                        row += [float(M[j, k].real), float(M[j, k].imag)]
            row.append(float(np.abs(smat @ smat.conj().T - eye).max()))
            rows.append(row)
    _emit_csv(header, rows, args)
    return EXIT_OK


def _levinson_payload(pair: BoundaryPair):
    verdict = topology.levinson_verdict(pair)
    return {
        "winding": verdict.winding,
        "eigen_count": verdict.eigen_count,
        "holds": verdict.holds,
        "closure_residual": verdict.closure_residual,
        "samples_used": verdict.samples_used,
    }


def cmd_levinson(args) -> int:
    pair = _pair_from_args(args).require_admissible()
    payload = _levinson_payload(pair)
    _emit(payload, args)
    return EXIT_OK if payload["holds"] else EXIT_VERIFY


def cmd_sweep(args) -> int:
    if args.count < 1:
        raise NotAdmissible("sweep count must be >= 1")
    failures = []
    degenerate = []
    results = []
    for i in range(args.count):
        pair = random_admissible((args.seed, i), args.mass)
        try:
            payload = _levinson_payload(pair)
        except (DegenerateLimit, NonClosure):
            degenerate.append(i)
            continue
        results.append({"index": i, **payload})
        if not payload["holds"]:
            failures.append(i)
    _emit(
        {
            "total": args.count,
            "holds": len(failures) == 0,
            "degenerate_skipped": degenerate,
            "failures": failures,
            "results": results,
        },
        args,
    )
    return EXIT_OK if not failures else EXIT_VERIFY


def cmd_waveop(args) -> int:
    pair = _pair_from_args(args).require_admissible()
    grid = waveop.GridSpec(args.L, args.N)
    defect = waveop.isometry_defect(pair, grid)
    payload = {
        "defect": float(defect),
        "L": args.L,
        "N": args.N,
        "pair": {"C": matrix_to_json(pair.C), "D": matrix_to_json(pair.D), "mass": pair.mass},
    }
    if args.trace:
        trace_grid = waveop.GridSpec(args.L, min(args.N, 1024))
        payload["bound_state_trace"] = {
            "value": waveop.bound_state_trace(pair, trace_grid),
            "exploratory": True,
        }
    _emit(payload, args)
    return EXIT_OK


def cmd_green(args) -> int:
    pair = _pair_from_args(args).require_admissible()
    try:
        zr = json.loads(args.z)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad --z: {exc}") from None
    if isinstance(zr, (int, float)):
        z = complex(zr)
    elif isinstance(zr, list) and len(zr) == 2:
        z = complex(zr[0], zr[1])
    else:
        raise ParseError("--z must be a real number or [re, im]")
    G = green_perturbed(args.x, args.y, z, pair)
    G0 = green_free(args.x, args.y, z, pair.mass)
    _emit(
        {
            "green": matrix_to_json(G),
            "green_free": matrix_to_json(G0),
            "x": args.x,
            "y": args.y,
            "z": [z.real, z.imag],
        },
        args,
    )
    return EXIT_OK


def _add_pair_flags(p):
    p.add_argument("--C", required=True, help="2x2 matrix as [[[re,im],...],...]")
    p.add_argument("--D", required=True, help="2x2 matrix as [[[re,im],...],...]")


def _global_flags(defaults: bool) -> argparse.ArgumentParser:
    # accepted both before and after the subcommand; the subparser copy uses
    # SUPPRESS so it only overrides when given explicitly
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--mass", type=float, default=d(1.0))
    p.add_argument("--config", type=str, default=d(None), help="JSON file with default flags")
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--out", type=str, default=d(None))
    p.add_argument("--format", choices=["json", "csv"], default=d("json"))
    return p


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dirac1d", parents=[_global_flags(defaults=True)])
    sub = ap.add_subparsers(dest="command", required=True)
    shared = [_global_flags(defaults=False)]

    p = sub.add_parser("admissible", parents=shared)
    _add_pair_flags(p)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("eigs", parents=shared)
    _add_pair_flags(p)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_eigs)

    p = sub.add_parser("smatrix", parents=shared)
    _add_pair_flags(p)
    p.add_argument("--points", type=int, default=33, help="s-grid points per branch")
    p.set_defaults(func=cmd_smatrix)

    p = sub.add_parser("levinson", parents=shared)
    _add_pair_flags(p)
    p.set_defaults(func=cmd_levinson)

    p = sub.add_parser("sweep", parents=shared)
    p.add_argument("--count", type=int, default=100)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("waveop", parents=shared)
    _add_pair_flags(p)
    p.add_argument("--L", type=float, default=40.0)
    p.add_argument("--N", type=int, default=4096)
    p.add_argument("--trace", action="store_true", help="include the exploratory trace count")
    p.set_defaults(func=cmd_waveop)

    p = sub.add_parser("green", parents=shared)
    _add_pair_flags(p)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--z", type=str, required=True, help="real number or [re, im]")
    p.set_defaults(func=cmd_green)
    return ap


def _apply_config(args, argv):
    if not args.config:
        return args
    with open(args.config) as fh:
        cfg = json.load(fh)
    for key, value in cfg.items():
        attr = key.replace("-", "_")
        if hasattr(args, attr) and f"--{key}" not in argv:
            setattr(args, attr, value)
    return args


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        args = _apply_config(args, argv)
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotAdmissible as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (DegenerateLimit, NonClosure) as exc:
        print(f"degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except Dirac1dError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
