"""Command-line front-end: single queries, trajectory checks, reports.

Subcommands
    ik          inverse kinematics for one point (all branches or one)
    dk          direct kinematics for one joint vector
    trajectory  interpolate waypoints and solve IK holding one branch
    volumes     closed-form workspace volumes, optional Monte-Carlo check
    jointspace  feasibility check / boundary-surface sampling

Exit codes: 0 success, 1 geometrically infeasible query, 2 usage error.
JSON reports echo the full input, the tolerances, and the library version,
so any reported solution can be re-verified by feeding it back through
``dk``/``ik``.  In CSV mode the same metadata goes to stderr so stdout
stays machine-parseable.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import re
import sys
from typing import Sequence

from . import __version__
from .core import (
    Branch,
    CartesianPoint,
    JointVector,
    ManipulatorParams,
    NoDkSolution,
    RadicandNegative,
    joint_limits_ok,
    leg_residuals,
)
from .direct import dk_both, dk_coefficients, dk_solve, plane_eval
from .inverse import ik_branch, ik_enumerate_feasible, is_serial_singular
from .jointspace import (
    DEFAULT_DIRECTION_FLOOR,
    SphericalDirection,
    boundary_radius,
    feasibility_product,
)
from .workspace import classify_point, monte_carlo_volumes, workspace_volumes

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2

CONFIG_ENV_VAR = "ORTHOGLIDE_CONFIG"
_CONFIG_KEYS = {"eps_geom", "eps_branch", "direction_floor", "seed"}

# Accept option values like "-0.5,0.4,0.3": anything starting "-<digit>" or
# "-.<digit>" is a value, not an option (no option strings look numeric).
_VALUE_MATCHER = re.compile(r"^-\d|^-\.\d")


# ---------------------------------------------------------------------------
# Argument plumbing
# ---------------------------------------------------------------------------
def _triple(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected x,y,z got {text!r}")
    try:
        vals = tuple(float(s) for s in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric component in {text!r}")
    if not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError(f"non-finite component in {text!r}")
    return vals


def _branch_label(text: str) -> Branch:
    try:
        return Branch.from_label(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _posture(text: str) -> int:
    if text in ("-1", "+1", "1"):
        return -1 if text == "-1" else 1
    raise argparse.ArgumentTypeError(f"posture must be -1 or +1, got {text!r}")


def _allow_negative_values(parser: argparse.ArgumentParser) -> None:
    parser._negative_number_matcher = _VALUE_MATCHER
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for sub in action.choices.values():
                _allow_negative_values(sub)


def _add_common(sub: argparse.ArgumentParser, default_fmt: str = "json") -> None:
    sub.add_argument("-L", "--leg-length", dest="L", type=float, required=True,
                     help="bar-link length L (sets the unit of all lengths)")
    sub.add_argument("--eps-geom", type=float, default=None,
                     help="relative residual tolerance (default 1e-9)")
    sub.add_argument("--eps-branch", type=float, default=None,
                     help="absolute branch/posture sign tolerance (default 1e-9*L)")
    sub.add_argument("--config", default=None,
                     help=f"key=value settings file (default: ${CONFIG_ENV_VAR})")
    fmt = sub.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    sub.set_defaults(fmt=default_fmt)


def _load_config(path: str) -> dict[str, str]:
    cfg: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.rstrip()!r}")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            cfg[key] = value
    return cfg


class _Settings:
    """Resolved tolerances: CLI flags override config, config overrides defaults."""

    def __init__(self, args: argparse.Namespace, parser: argparse.ArgumentParser):
        path = args.config or os.environ.get(CONFIG_ENV_VAR)
        cfg: dict[str, str] = {}
        if path:
            try:
                cfg = _load_config(path)
            except (OSError, ValueError) as exc:
                parser.error(f"config: {exc}")
        try:
            eps_geom = args.eps_geom if args.eps_geom is not None else float(cfg.get("eps_geom", 1e-9))
            if args.eps_branch is not None:
                eps_branch = args.eps_branch
            elif "eps_branch" in cfg:
                eps_branch = float(cfg["eps_branch"])
            else:
                eps_branch = None
            self.params = ManipulatorParams(L=args.L, eps_geom=eps_geom, eps_branch=eps_branch)
            self.direction_floor = float(cfg.get("direction_floor", DEFAULT_DIRECTION_FLOOR))
            self.seed = int(cfg.get("seed", 0))
        except ValueError as exc:
            parser.error(str(exc))


def _base_report(command: str, params: ManipulatorParams, input_echo: dict) -> dict:
    return {
        "command": command,
        "version": __version__,
        "params": {
            "L": params.L,
            "eps_geom": params.eps_geom,
            "eps_branch": params.eps_branch,
        },
        "input": input_echo,
    }


def _emit(report: dict, fmt: str, header: Sequence[str] = (), rows: Sequence[Sequence] = ()) -> None:
    if fmt == "csv":
        meta = {k: v for k, v in report.items() if k not in ("rows", "records", "solutions")}
        print(json.dumps(meta), file=sys.stderr)
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    else:
        print(json.dumps(report, indent=2))


# ---------------------------------------------------------------------------
# ik
# ---------------------------------------------------------------------------
def _ik_solution_dict(p: CartesianPoint, sol, params: ManipulatorParams) -> dict:
    return {
        "branch": sol.branch.label,
        "rho": list(sol.rho),
        "residuals": list(leg_residuals(p, sol.rho, params)),
        "joint_limits_ok": joint_limits_ok(sol.rho, params),
    }


def cmd_ik(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    settings = _Settings(args, parser)
    params = settings.params
    p = CartesianPoint(*args.point)
    report = _base_report("ik", params, {
        "p": list(p),
        "branch": args.branch.label if args.branch else None,
    })
    error = None
    if args.branch is not None:
        try:
            solutions = [ik_branch(p, args.branch, params)]
        except RadicandNegative as exc:
            solutions = []
            error = {"type": "radicand_negative", "axis": exc.axis, "message": str(exc)}
    else:
        solutions = ik_enumerate_feasible(p, params)
    region = classify_point(p, params)
    report["region"] = region.value
    report["region_ik_count"] = region.ik_count
    report["serial_singular_axes"] = list(is_serial_singular(p, params).axes())
    report["solutions"] = [_ik_solution_dict(p, s, params) for s in solutions]
    if error:
        report["error"] = error
    rows = [
        (d["branch"], *d["rho"], d["joint_limits_ok"]) for d in report["solutions"]
    ]
    _emit(report, args.fmt, ("branch", "rho_x", "rho_y", "rho_z", "joint_limits_ok"), rows)
    return EXIT_OK if solutions else EXIT_INFEASIBLE


# ---------------------------------------------------------------------------
# dk
# ---------------------------------------------------------------------------
def _dk_solution_dict(rho: JointVector, sol, params: ManipulatorParams) -> dict:
    return {
        "posture": sol.posture,
        "t": sol.t_value,
        "p": list(sol.p),
        "plane_eval": plane_eval(sol.p, rho),
        "residuals": list(leg_residuals(sol.p, rho, params)),
    }


def cmd_dk(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    settings = _Settings(args, parser)
    params = settings.params
    if 0.0 in args.joints:
        parser.error("joint components must be nonzero")
    rho = JointVector(*args.joints)
    report = _base_report("dk", params, {
        "rho": list(rho),
        "posture": args.posture,
    })
    error = None
    if args.posture is not None:
        try:
            solutions = [dk_solve(rho, args.posture, params)]
        except NoDkSolution as exc:
            solutions = []
            error = {"type": "no_solution", "message": str(exc)}
    else:
        solutions = dk_both(rho, params)
    q = dk_coefficients(rho, params)
    report["discriminant"] = q.discriminant
    report["joint_limits_ok"] = joint_limits_ok(rho, params)
    report["solutions"] = [_dk_solution_dict(rho, s, params) for s in solutions]
    if error:
        report["error"] = error
    rows = [
        (d["posture"], d["t"], *d["p"], d["plane_eval"]) for d in report["solutions"]
    ]
    _emit(report, args.fmt, ("posture", "t", "p_x", "p_y", "p_z", "plane_eval"), rows)
    return EXIT_OK if solutions else EXIT_INFEASIBLE


# ---------------------------------------------------------------------------
# trajectory
# ---------------------------------------------------------------------------
def _interpolate(waypoints: list[tuple[float, float, float]], step: float) -> list[CartesianPoint]:
    pts = [CartesianPoint(*waypoints[0])]
    for a, b in zip(waypoints, waypoints[1:]):
        dist = math.dist(a, b)
        n = max(1, math.ceil(dist / step))
        for i in range(1, n + 1):
            f = i / n
            pts.append(CartesianPoint(*(ai + f * (bi - ai) for ai, bi in zip(a, b))))
    return pts


def cmd_trajectory(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    settings = _Settings(args, parser)
    params = settings.params
    if len(args.waypoints) < 2:
        parser.error("need at least two -w/--waypoint arguments")
    if not args.step > 0:
        parser.error("--step must be positive")
    branch = args.branch
    report = _base_report("trajectory", params, {
        "waypoints": [list(w) for w in args.waypoints],
        "step": args.step,
        "branch": branch.label,
        "policy": args.policy,
    })
    records = []
    first_failure = None
    aborted_at = None
    n_singular = n_limits = n_infeasible = 0
    for i, p in enumerate(_interpolate(args.waypoints, args.step)):
        singular = is_serial_singular(p, params)
        rec = {
            "index": i,
            "p": list(p),
            "branch": branch.label,
            "region": classify_point(p, params).value,
            "singular_axes": list(singular.axes()),
        }
        try:
            sol = ik_branch(p, branch, params)
        except RadicandNegative as exc:
            rec.update(rho=None, joint_limits_ok=False, infeasible=True,
                       error_axis=exc.axis)
            failed = True
            n_infeasible += 1
        else:
            ok = joint_limits_ok(sol.rho, params)
            rec.update(rho=list(sol.rho), joint_limits_ok=ok, infeasible=False)
            failed = not ok
            if not ok:
                n_limits += 1
        if singular.any():
            n_singular += 1
        records.append(rec)
        if failed and first_failure is None:
            first_failure = i
        if args.policy == "abort" and (failed or singular.any()):
            aborted_at = i
            break
    report["records"] = records
    report["summary"] = {
        "feasible": first_failure is None and aborted_at is None,
        "first_failure_index": first_failure,
        "aborted_at": aborted_at,
        "n_steps": len(records),
        "n_singular_steps": n_singular,
        "n_limit_violations": n_limits,
        "n_infeasible_steps": n_infeasible,
    }
    rows = [
        (
            r["index"], *r["p"],
            *(r["rho"] if r["rho"] is not None else ("", "", "")),
            r["branch"], r["region"], ";".join(r["singular_axes"]),
            r["joint_limits_ok"], r["infeasible"],
        )
        for r in records
    ]
    _emit(report, args.fmt,
          ("index", "p_x", "p_y", "p_z", "rho_x", "rho_y", "rho_z",
           "branch", "region", "singular_axes", "joint_limits_ok", "infeasible"),
          rows)
    return EXIT_OK if report["summary"]["feasible"] else EXIT_INFEASIBLE


# ---------------------------------------------------------------------------
# volumes
# ---------------------------------------------------------------------------
def cmd_volumes(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    settings = _Settings(args, parser)
    params = settings.params
    vols = workspace_volumes(params)
    seed = args.seed if args.seed is not None else settings.seed
    report = _base_report("volumes", params, {
        "mc_samples": args.mc,
        "seed": seed,
    })
    report["closed_form"] = {
        "vol_C": vols.vol_C,
        "vol_S": vols.vol_S,
        "vol_G": vols.vol_G,
        "vol_W": vols.vol_W,
        "pct_W_of_serial": vols.pct_W_of_serial,
        "pct_S_of_serial": vols.pct_S_of_serial,
        "pct_C_of_serial": vols.pct_C_of_serial,
    }
    rows = [("closed", k, v, "") for k, v in report["closed_form"].items()]
    if args.mc is not None:
        try:
            mc = monte_carlo_volumes(params, args.mc, seed)
        except ValueError as exc:
            parser.error(str(exc))
        report["monte_carlo"] = {
            "n_samples": mc.n_samples,
            "seed": mc.seed,
        }
        for name in ("vol_C", "vol_S", "vol_G", "vol_W"):
            est = getattr(mc, name)
            report["monte_carlo"][name] = {
                "value": est.value,
                "stderr": est.stderr,
                "hits": est.hits,
            }
            rows.append(("monte_carlo", name, est.value, est.stderr))
    _emit(report, args.fmt, ("source", "quantity", "value", "stderr"), rows)
    return EXIT_OK


# ---------------------------------------------------------------------------
# jointspace
# ---------------------------------------------------------------------------
def cmd_jointspace_check(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    settings = _Settings(args, parser)
    params = settings.params
    if 0.0 in args.joints:
        parser.error("joint components must be nonzero")
    rho = JointVector(*args.joints)
    product = feasibility_product(rho, params)
    limits = joint_limits_ok(rho, params)
    feasible = product <= 1.0 and limits
    report = _base_report("jointspace-check", params, {"rho": list(rho)})
    report.update(
        product=product,
        dk_solvable=product <= 1.0,
        joint_limits_ok=limits,
        feasible=feasible,
        on_boundary=abs(product - 1.0) <= params.eps_geom,
    )
    _emit(report, args.fmt, ("product", "dk_solvable", "joint_limits_ok", "feasible"),
          [(product, product <= 1.0, limits, feasible)])
    return EXIT_OK if feasible else EXIT_INFEASIBLE


def cmd_jointspace_boundary(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    settings = _Settings(args, parser)
    params = settings.params
    n = args.grid
    if n < 1:
        parser.error("--grid must be >= 1")
    report = _base_report("jointspace-boundary-sample", params, {
        "grid": n,
        "direction_floor": settings.direction_floor,
    })
    rows = []
    half_pi = math.pi / 2.0
    for i in range(n):
        phi = (i + 0.5) * half_pi / n
        for j in range(n):
            theta = (j + 0.5) * half_pi / n
            direction = SphericalDirection(phi, theta)
            t = boundary_radius(direction, params, settings.direction_floor)
            ex, ey, ez = direction.unit_vector()
            rows.append((phi, theta, t, t * ex, t * ey, t * ez))
    report["rows"] = [
        dict(zip(("phi", "theta", "t", "rho_x", "rho_y", "rho_z"), row)) for row in rows
    ]
    _emit(report, args.fmt, ("phi", "theta", "t", "rho_x", "rho_y", "rho_z"), rows)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthoglide",
        description="Kinematics and workspace analysis for the Orthoglide parallel manipulator.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ik = sub.add_parser("ik", help="inverse kinematics for one point")
    _add_common(p_ik)
    p_ik.add_argument("-p", "--point", type=_triple, required=True, help="TCP position x,y,z")
    p_ik.add_argument("-b", "--branch", type=_branch_label, default=None,
                      help="restrict to one branch label (e.g. PPP, MPM)")
    p_ik.set_defaults(func=cmd_ik)

    p_dk = sub.add_parser("dk", help="direct kinematics for one joint vector")
    _add_common(p_dk)
    p_dk.add_argument("-r", "--joints", type=_triple, required=True,
                      help="joint displacements rho_x,rho_y,rho_z (nonzero)")
    p_dk.add_argument("-m", "--posture", type=_posture, default=None,
                      help="restrict to one posture index (-1 or +1)")
    p_dk.set_defaults(func=cmd_dk)

    p_tr = sub.add_parser("trajectory", help="feasibility check along interpolated waypoints")
    _add_common(p_tr)
    p_tr.add_argument("-w", "--waypoint", dest="waypoints", type=_triple, action="append",
                      required=True, help="waypoint x,y,z (repeat, at least twice)")
    p_tr.add_argument("--step", type=float, required=True,
                      help="maximum interpolation spacing (length units)")
    p_tr.add_argument("-b", "--branch", type=_branch_label, default=Branch(1, 1, 1),
                      help="branch to hold throughout (default PPP)")
    p_tr.add_argument("--policy", choices=("abort", "warn-and-hold-branch"), default="abort",
                      help="behaviour at singular/infeasible steps")
    p_tr.set_defaults(func=cmd_trajectory)

    p_vol = sub.add_parser("volumes", help="workspace volume report")
    _add_common(p_vol)
    p_vol.add_argument("--mc", type=int, default=None, metavar="N",
                       help="add Monte-Carlo estimates with N samples")
    p_vol.add_argument("--seed", type=int, default=None, help="RNG seed for --mc")
    p_vol.set_defaults(func=cmd_volumes)

    p_js = sub.add_parser("jointspace", help="jointspace feasibility tools")
    js_sub = p_js.add_subparsers(dest="subcommand", required=True)
    p_check = js_sub.add_parser("check", help="feasibility of one joint vector")
    _add_common(p_check)
    p_check.add_argument("-r", "--joints", type=_triple, required=True,
                         help="joint displacements rho_x,rho_y,rho_z (nonzero)")
    p_check.set_defaults(func=cmd_jointspace_check)
    p_bs = js_sub.add_parser("boundary-sample", help="sample the boundary surface")
    _add_common(p_bs, default_fmt="csv")
    p_bs.add_argument("--grid", type=int, default=10,
                      help="n x n interior grid of (phi, theta) directions")
    p_bs.set_defaults(func=cmd_jointspace_boundary)

    _allow_negative_values(parser)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
