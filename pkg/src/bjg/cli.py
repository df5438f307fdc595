"""Command-line entry point.

Subcommands: check, classify, verify, example, c00.
Exit codes: 0 ok, 2 internal inconsistency / theorem failure,
3 undetermined-dominant, 64 usage error, 65 data error.
Seed resolution: --seed flag, else BJG_SEED, else 42.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .classify import (
    c00_remark_witness,
    classify_left_symmetric,
    classify_right_symmetric,
    classify_smooth,
    reproduce_paper_example,
)
from .core import DirectionGrid, GridSet, Status, _jsonable
from .errors import (
    BjgError,
    CapacityError,
    ConfigurationError,
    DataError,
    DomainError,
    PreconditionError,
    VerificationError,
)
from .fspace import (
    ckx_oracle,
    ckx_orthogonal_complex,
    ckx_orthogonal_directional,
    ckx_orthogonal_real,
    directional_license,
    instance_from_json,
    sup_norm,
)
from .harness import SUITE_NAMES, SuiteConfig, run_suite
from .spaces import Tolerances

EXIT_OK = 0
EXIT_INCONSISTENT = 2
EXIT_UNDETERMINED = 3
EXIT_USAGE = 64
EXIT_DATA = 65


class _UsageExit(Exception):
    def __init__(self, message):
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageExit(message)


_GLOBAL_FLAGS = [
    (("--seed",), {"type": int, "help": "RNG seed (env BJG_SEED as fallback)"}, None),
    (("--trials",), {"type": int}, None),
    (("--tol",), {"type": float, "help": "relative tolerance"}, 1e-9),
    (("--t-grid",), {"type": int, "dest": "t_grid"}, 360),
    (("--u-grid",), {"type": int, "dest": "u_grid"}, 180),
    (("--range",), {"type": float, "dest": "sweep_range"}, None),
    (("--output",), {"type": str, "help": "write the report here"}, None),
    (("--format",), {"choices": ("json", "csv", "human")}, "human"),
]


def _add_global_flags(p, suppress: bool):
    # SUPPRESS on the subcommand copy keeps post-subcommand flags from
    # clobbering values parsed before the subcommand
    for names, kw, default in _GLOBAL_FLAGS:
        p.add_argument(*names, default=argparse.SUPPRESS if suppress else default, **kw)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bjg", description=__doc__)
    _add_global_flags(p, suppress=False)
    # a parent with SUPPRESS defaults lets globals appear after the subcommand
    common = _Parser(add_help=False)
    _add_global_flags(common, suppress=True)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common],
                       help="orthogonality verdicts for an instance with f and g")
    c.add_argument("--input", required=True, help="instance JSON (path or inline)")

    c = sub.add_parser("classify", parents=[common],
                       help="left/right symmetry and smoothness of f")
    c.add_argument("--input", required=True)

    c = sub.add_parser("verify", parents=[common], help="run verification suites")
    c.add_argument("suites", nargs="*", help=f"suite names (known: {', '.join(SUITE_NAMES)})")
    c.add_argument("--all", action="store_true", dest="run_all")

    c = sub.add_parser("example", parents=[common],
                       help="reproduce the worked max-norm example")
    c.add_argument("--samples", type=int, default=101)

    c = sub.add_parser("c00", parents=[common],
                       help="finite-support-space witness for f")
    c.add_argument("--input", required=True)
    c.add_argument("--normalize", action="store_true")
    return p


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("BJG_SEED")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise _UsageExit(f"BJG_SEED must be an integer, got {env!r}") from exc
    return 42


def _load_instance(raw: str) -> dict:
    text = raw
    if not raw.lstrip().startswith("{"):
        path = Path(raw)
        if not path.is_file():
            raise _UsageExit(f"input file not found: {raw}")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _UsageExit(f"malformed JSON: {exc}") from exc


def _emit(args, payload: dict, human_lines: list[str], csv_text: str | None = None):
    if args.format == "json":
        out = json.dumps(_jsonable(payload), indent=2, sort_keys=True)
    elif args.format == "csv" and csv_text is not None:
        out = csv_text
    else:
        out = "\n".join(human_lines)
    if args.output:
        Path(args.output).write_text(out + "\n")
        print(f"report written to {args.output}")
    else:
        print(out)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_check(args) -> int:
    obj = _load_instance(args.input)
    _, space, funcs = instance_from_json(obj)
    if "f" not in funcs or "g" not in funcs:
        raise DataError("check needs functions f and g")
    f, g = funcs["f"], funcs["g"]
    tol = Tolerances(rel=args.tol)
    t_grid = DirectionGrid(args.t_grid, GridSet.FULL_CIRCLE)
    u_grid = DirectionGrid(args.u_grid, GridSet.HALF_CIRCLE)
    rows = {}
    if space.is_complex:
        rows["characterization-complex"] = ckx_orthogonal_complex(f, g, u_grid=u_grid, tol=tol)
    else:
        rows["characterization-real"] = ckx_orthogonal_real(f, g, tol=tol)
    if directional_license(f, tol):
        rows["directional"] = ckx_orthogonal_directional(f, g, t_grid=t_grid, tol=tol)
    orc = ckx_oracle(f, g, sweep_range=args.sweep_range, t_grid=t_grid, tol=tol)
    nf = sup_norm(f)
    band = 10.0 * tol.for_scale(nf)
    if orc.min_value >= nf - tol.for_scale(nf):
        oracle_status = Status.HOLDS
    elif orc.min_value < nf - band:
        oracle_status = Status.FAILS
    else:
        oracle_status = Status.UNDETERMINED
    statuses = [v.status for v in rows.values()] + [oracle_status]
    decisive = {s for s in statuses if s is not Status.UNDETERMINED}
    conflict = len(decisive) > 1
    und_dominant = sum(s is Status.UNDETERMINED for s in statuses) > len(statuses) / 2

    payload = {
        "paths": {k: v.to_json() for k, v in rows.items()},
        "oracle": {
            "min_value": orc.min_value,
            "argmin": _jsonable(orc.argmin),
            "f_norm": nf,
            "status": oracle_status.value,
        },
        "consistent": not conflict,
    }
    lines = ["path                      verdict        margin"]
    for name, v in rows.items():
        lines.append(f"{name:25s} {v.status.value:13s} {v.margin:+.3e}")
        if v.witness is not None:
            lines.append(f"{'':25s} witness: {json.dumps(_jsonable(v.witness))}")
    lines.append(
        f"{'oracle':25s} {oracle_status.value:13s} min {orc.min_value:.12g}"
        f" at lambda = {_jsonable(orc.argmin)} (||f|| = {nf:.12g})"
    )
    lines.append("consistent" if not conflict else "INCONSISTENT VERDICTS")
    _emit(args, payload, lines)
    if conflict:
        return EXIT_INCONSISTENT
    if und_dominant:
        return EXIT_UNDETERMINED
    return EXIT_OK


def _cmd_classify(args) -> int:
    obj = _load_instance(args.input)
    _, _, funcs = instance_from_json(obj)
    if "f" not in funcs:
        raise DataError("classify needs a function f")
    f = funcs["f"]
    tol = Tolerances(rel=args.tol)
    seed = _resolve_seed(args)
    trials = args.trials or 200
    out = {}
    out["left"] = classify_left_symmetric(f, tol=tol).to_json()
    out["right"] = classify_right_symmetric(f, trials=trials, seed=seed, tol=tol).to_json()
    try:
        out["smooth"] = classify_smooth(f, tol=tol).to_json()
    except DomainError as exc:
        out["smooth"] = {"answer": "unknown", "theorem": str(exc)}
    lines = []
    for prop, res in out.items():
        lines.append(f"{prop:7s}: {res['answer']:8s} {res['theorem']}")
    _emit(args, out, lines)
    return EXIT_OK


def _cmd_verify(args) -> int:
    names = list(args.suites)
    if args.run_all:
        names = list(SUITE_NAMES)
    if not names:
        raise _UsageExit("verify needs suite names or --all")
    for n in names:
        if n not in SUITE_NAMES:
            raise _UsageExit(f"unknown suite {n!r}; known: {', '.join(SUITE_NAMES)}")
    config = SuiteConfig(
        seed=_resolve_seed(args),
        trials=args.trials,
        u_grid=args.u_grid,
        t_grid=args.t_grid,
        tol=Tolerances(rel=args.tol),
    )
    reports = {n: run_suite(n, config) for n in names}
    payload = {n: r.to_json() for n, r in reports.items()}
    lines = ["suite                             trials  holds  fails  und   result"]
    csv_lines = ["suite,trials,holds,fails,undetermined"]
    ok = True
    for n, r in reports.items():
        mark = "pass" if r.passed else "FAIL"
        ok = ok and r.passed
        lines.append(
            f"{n:33s} {r.trials:6d} {r.holds:6d} {r.fails:6d} {r.undetermined:4d}   {mark}"
            f"  [{r.elapsed:.1f}s]"
        )
        csv_lines.append(r.csv_row())
    lines.append("all suites passed" if ok else "SUITE FAILURES PRESENT")
    _emit(args, payload, lines, csv_text="\n".join(csv_lines))
    return EXIT_OK if ok else EXIT_INCONSISTENT


def _cmd_example(args) -> int:
    if args.samples < 2:
        raise _UsageExit("--samples must be at least 2")
    tol = Tolerances(rel=args.tol)
    report = reproduce_paper_example(args.samples, tol=tol)
    lines = [
        f"model: {report['model']} ({args.samples} samples)",
        f"||f|| = {report['f_norm']:.12g}, ||g|| = {report['g_norm']:.12g}, "
        f"M_f = K: {report['attaining_is_all']}",
        f"g _|_ f: {report['g_orth_f']}, min ||g + lam f|| = {report['min_g_plus_lam_f']:.12g}",
        f"||f - g/2|| = {report['norm_f_minus_half_g']:.12g} < 1, so f is not orthogonal to g",
        f"min ||f + lam g|| = {report['min_f_plus_lam_g']:.12g} "
        f"at lambda = {report['argmin_f_plus_lam_g']:.12g}",
        "all checks passed",
    ]
    _emit(args, report, lines)
    return EXIT_OK


def _cmd_c00(args) -> int:
    obj = _load_instance(args.input)
    _, _, funcs = instance_from_json(obj)
    if "f" not in funcs:
        raise DataError("c00 needs a function f")
    tol = Tolerances(rel=args.tol)
    g, report = c00_remark_witness(funcs["f"], normalize_to_1=args.normalize, tol=tol)
    payload = {"witness": g.to_json(), "report": report}
    lines = [
        f"support lengths: {report['supports']}",
        f"||g|| = {report['g_norm']:.12g}",
        f"min ||g + lam f|| = {report['min_g_plus_lam_f']:.12g} (g _|_ f)",
        f"||f - g/2|| = {report['norm_f_minus_half_g']:.12g} <= 1/2 (f not orthogonal to g)",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "example":
            return _cmd_example(args)
        if args.command == "c00":
            return _cmd_c00(args)
        raise _UsageExit(f"unknown command {args.command!r}")
    except _UsageExit as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, CapacityError, PreconditionError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (VerificationError,) as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (DomainError, ConfigurationError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BjgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
