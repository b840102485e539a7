"""Command-line front end.

Every sub-command reads an instance file (except gen and
reduce-partition), writes a JSON result to stdout or --out and a
one-line summary to stderr. Exit codes: 0 success, 1 usage or malformed
input, 2 infeasible or empty interior, 3 work budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable, Optional, Sequence

import pandas as pd

from cheb_balls.ccb import (
    evaluate_center,
    solve_ccb_ellipsoid,
    solve_sqp,
    sqp_certificate,
    sqp_lp_gap,
)
from cheb_balls.cli.generator import gen, gen_uq
from cheb_balls.core import feasible, validate
from cheb_balls.data import (
    CcbInstance,
    UqInstance,
    dump_instance,
    dumps_canonical,
    load_instance,
    make_result,
)
from cheb_balls.errors import (
    BudgetExceededError,
    ChebBallsError,
    EmptyInteriorError,
    IterationLimitError,
    NoCandidateError,
    NotInteriorError,
    PreconditionViolatedError,
)
from cheb_balls.hardness import PartitionInput, reduce_to_p0
from cheb_balls.oracle import OracleConfig, oracle_ccb, oracle_uq
from cheb_balls.planar import solve_planar
from cheb_balls.uq import (
    approx_round,
    approx_round_recentered,
    relaxation_report,
    solve_exact,
)
from cheb_balls.utils import CANDIDATE_TOL, ENUM_BUDGET, SQP_GAP_TOL

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    """Bad command line or input file."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _load(path: str, kind: Optional[str] = None):
    inst = load_instance(path)
    if kind == "ccb" and not isinstance(inst, CcbInstance):
        raise UsageError(f"Expect a ccb instance in {path}.")
    if kind == "uq" and not isinstance(inst, UqInstance):
        raise UsageError(f"Expect a uq instance in {path}.")

    return inst


def _tolerances(args) -> dict:
    return {
        "tol": args.tol,
        "eps": args.eps,
        "budget": args.budget,
        "max_iter": args.max_iter,
    }


def _solve_ccb(args) -> dict:
    inst = _load(args.instance, "ccb")
    cert = validate(inst)

    method = args.method or ("planar" if inst.dim == 2 else "ellipsoid")
    if method == "planar":
        sol = solve_planar(inst, seed=args.seed)
    elif method == "sqp":
        sqp = solve_sqp(
            inst, gap_tol=args.tol or SQP_GAP_TOL, max_iter=args.max_iter
        )
        sc = sqp_certificate(inst, sqp, budget=args.budget)
        return make_result(
            "sqp",
            sc.achieved,
            sqp.z_bar,
            sc.to_dict(),
            gamma=cert.gamma,
        )
    else:
        sol = solve_ccb_ellipsoid(
            inst, eps=args.eps, max_iter=args.max_iter, budget=args.budget
        )

    return make_result(
        sol.method,
        sol.squared_radius,
        sol.center,
        sol.certificate_dict(),
        status="ok" if sol.converged else "iteration_limit",
        gamma=cert.gamma,
        iterations=sol.iterations,
    )


def _solve_uq(args) -> dict:
    uq = _load(args.instance, "uq")
    sol = solve_exact(
        uq, budget=args.budget, tol=args.tol or CANDIDATE_TOL
    )

    return make_result(
        "enumeration",
        sol.value,
        sol.x,
        sol.certificate.to_dict(),
        feasible=feasible(uq, sol.x),
        examined=sol.examined,
    )


def _relax_lp(args) -> dict:
    uq = _load(args.instance, "uq")
    report = relaxation_report(uq, budget=args.budget)

    return make_result("lp", report["lp"], **report)


def _relax_sqp(args) -> dict:
    inst = _load(args.instance, "ccb")
    sqp = solve_sqp(
        inst, gap_tol=args.tol or SQP_GAP_TOL, max_iter=args.max_iter
    )

    return make_result(
        "sqp",
        sqp.value,
        sqp.z_bar,
        {"stationarity_gap": sqp.stationarity_gap},
        **{"lambda": sqp.lambda_, "lp_gap": sqp_lp_gap(inst, sqp)},
    )


def _planar(args) -> dict:
    inst = _load(args.instance, "ccb")
    validate(inst)
    sol = solve_planar(inst, seed=args.seed)

    return make_result(
        sol.method,
        sol.squared_radius,
        sol.center,
        sol.certificate_dict(),
        iterations=sol.iterations,
    )


def _approx(args) -> dict:
    uq = _load(args.instance, "uq")
    rounding = approx_round_recentered if args.recenter else approx_round
    sol = rounding(uq, budget=args.budget)

    return make_result(
        "approx",
        sol.value,
        sol.x,
        sol.certificate.to_dict(),
        upper_bound=sol.upper_bound,
        feasible=feasible(uq, sol.x),
    )


def _certify(args) -> dict:
    inst = _load(args.instance, "ccb")
    validate(inst)
    sqp = solve_sqp(
        inst, gap_tol=args.tol or SQP_GAP_TOL, max_iter=args.max_iter
    )
    cert = sqp_certificate(inst, sqp, budget=args.budget)

    return make_result("certify", cert.achieved, sqp.z_bar, cert.to_dict())


def _oracle(args) -> dict:
    inst = _load(args.instance)
    cfg = OracleConfig(
        samples=args.samples, grid_step=args.grid_step, seed=args.seed
    )
    if isinstance(inst, UqInstance):
        est = oracle_uq(inst, cfg)
    else:
        est = oracle_ccb(inst, cfg)

    certificate = {"resolution": est.resolution}
    if args.verify and isinstance(inst, CcbInstance):
        certificate["evaluated"] = evaluate_center(
            inst, est.point, budget=args.budget
        )

    return make_result("oracle", est.value, est.point, certificate)


def _reduce_partition(args) -> str:
    inp = PartitionInput(args.integers)
    uq, ccb = reduce_to_p0(inp)

    return dump_instance(uq if args.kind == "uq" else ccb)


def _gen(args) -> str:
    maker = gen_uq if args.kind == "uq" else gen
    inst = maker(
        args.dim,
        args.balls,
        seed=args.seed,
        spread=args.spread,
        margin=args.margin,
    )

    return dump_instance(inst)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--eps", type=float, default=1e-5)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-iter", type=int, default=None)
    common.add_argument("--budget", type=int, default=ENUM_BUDGET)
    common.add_argument(
        "--method", choices=["planar", "ellipsoid", "sqp"], default=None
    )
    common.add_argument("--out", type=str, default=None)
    common.add_argument(
        "--format", choices=["json", "text"], default="json"
    )

    parser = _Parser(
        prog="cheb-balls",
        description="Chebyshev center of an intersection of balls.",
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(
        name: str, handler: Callable, summary: str, instance: bool = True
    ):
        cmd = sub.add_parser(name, parents=[common], help=summary)
        if instance:
            cmd.add_argument("instance", help="instance JSON file")
        cmd.set_defaults(handler=handler)
        return cmd

    add("solve-ccb", _solve_ccb, "Chebyshev center")
    add("solve-uq", _solve_uq, "exact UQ by enumeration")
    add("relax-lp", _relax_lp, "LP/SDP relaxation report")
    add("relax-sqp", _relax_sqp, "SQP relaxation of the center")
    add("planar", _planar, "exact planar center")

    cmd = add("approx", _approx, "rounding of the LP relaxation")
    cmd.add_argument(
        "--recenter",
        action="store_true",
        help="move an interior point to the origin first",
    )

    add("certify", _certify, "SQP center with ratio certificate")

    cmd = add("oracle", _oracle, "brute-force reference answer")
    cmd.add_argument("--samples", type=int, default=10_000)
    cmd.add_argument("--grid-step", type=float, default=1e-2)
    cmd.add_argument("--verify", action="store_true")

    cmd = add(
        "reduce-partition",
        _reduce_partition,
        "partition vector to a P0 instance",
        instance=False,
    )
    cmd.add_argument("integers", type=int, nargs="+")
    cmd.add_argument("--kind", choices=["ccb", "uq"], default="ccb")

    cmd = add("gen", _gen, "random instance", instance=False)
    cmd.add_argument("--dim", type=int, required=True)
    cmd.add_argument("--balls", type=int, required=True)
    cmd.add_argument("--spread", type=float, default=1.0)
    cmd.add_argument("--margin", type=float, default=0.5)
    cmd.add_argument("--kind", choices=["ccb", "uq"], default="ccb")

    return parser


def _as_text(result: dict) -> str:
    """Scalar fields as a two-column table."""
    flat = pd.json_normalize(result, sep=".").iloc[0]
    return flat.to_string() + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _summary(command: str, result) -> str:
    if isinstance(result, str):
        return f"{command}: instance written"
    value = result.get("value")
    shown = f"{value:.10g}" if isinstance(value, float) else value
    return f"{command}: {result.get('status', 'ok')}, value={shown}"


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one sub-command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().strip())

        start = time.perf_counter()
        result = args.handler(args)
        wall_ms = 1e3 * (time.perf_counter() - start)
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except json.JSONDecodeError as exc:
        print(
            f"Malformed JSON at line {exc.lineno} column {exc.colno}: "
            f"{exc.msg}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    except (
        EmptyInteriorError,
        NotInteriorError,
        PreconditionViolatedError,
        NoCandidateError,
    ) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (BudgetExceededError, IterationLimitError) as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ChebBallsError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if isinstance(result, dict):
        result["wall_ms"] = wall_ms
        result["seed"] = args.seed
        result["tolerances"] = _tolerances(args)
        text = (
            _as_text(result)
            if args.format == "text"
            else dumps_canonical(result)
        )
    else:
        text = result

    _emit(text, args.out)
    print(_summary(args.command, result), file=sys.stderr)

    return EXIT_OK


def main() -> None:
    sys.exit(run())
