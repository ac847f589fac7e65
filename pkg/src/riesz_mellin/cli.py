"""Command-line driver.

    riesz-mellin eval <function> --name=value ...
    riesz-mellin verify <identity> [--grid-file F] [--tol X] [--seed K] [--out CSV]
    riesz-mellin verify all [--seed K] [--out-dir DIR]

Exit codes: 0 all checks passed, 1 some check failed, 2 bad arguments or grid.
Log verbosity comes from RIESZ_MELLIN_VERBOSITY (silent | summary | per-point).
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .errors import RieszMellinError
from .gegenbauer import gegenbauer
from .kernels import CutPoint, HKernelSpec, h_kernel, riesz_kernel, weierstrass_kernel
from .legendre_cut import LegendreOrder, ferrers_p
from .mellin import (MellinPoint, QuadratureConfig, corollary_closed, h_integrand,
                     mellin_h_closed, mellin_numeric)
from .verify import (IDENTITIES, RANDOMIZED, SweepSpec, SweepSpecError, emit_report, run_sweep,
                     sweep_ok)

VERBOSITY_ENV = "RIESZ_MELLIN_VERBOSITY"
_LEVELS = {"silent": logging.WARNING, "summary": logging.INFO, "per-point": logging.DEBUG}

EVAL_FUNCTIONS = {
    "riesz": ("u", "xi", "lambda"),
    "h": ("lambda", "q", "xi", "u"),
    "kq": ("r", "t", "psi", "n", "q"),
    "gegenbauer": ("j", "lambda", "xi"),
    "ferrers": ("mu", "nu", "xi"),
    "mellin_h_numeric": ("lambda", "q", "xi", "s"),
    "mellin_h_closed": ("lambda", "q", "xi", "s"),
    "corollary": ("n", "q", "rho", "xi"),
}
_INT_PARAMS = {"q", "n", "j"}
_REAL_PARAMS = {"u", "xi", "r", "t", "psi", "rel_tol"}


class UsageError(Exception):
    pass


def _setup_logging():
    level = os.environ.get(VERBOSITY_ENV, "summary")
    if level not in _LEVELS:
        raise UsageError(f"{VERBOSITY_ENV} must be one of {', '.join(_LEVELS)}, got {level!r}")
    logger = logging.getLogger("riesz_mellin")
    logger.handlers.clear()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.setLevel(_LEVELS[level])
    logger.propagate = False


def _parse_params(extra: list[str]) -> dict:
    params = {}
    for item in extra:
        if not item.startswith("--") or "=" not in item:
            raise UsageError(f"parameters must look like --name=value, got {item!r}")
        key, raw = item[2:].split("=", 1)
        key = {"lam": "lambda"}.get(key, key)
        try:
            if key in _INT_PARAMS:
                params[key] = int(raw)
            elif key in _REAL_PARAMS:
                params[key] = float(raw)
            elif key == "form":
                params[key] = raw
            else:
                params[key] = complex(raw.replace("i", "j"))
        except ValueError:
            raise UsageError(f"cannot parse --{key}={raw}") from None
    return params


def _fmt(z) -> str:
    z = complex(z)
    return f"{z.real:.17g} {z.imag:.17g}"


def cmd_eval(function: str, extra: list[str]) -> int:
    if function not in EVAL_FUNCTIONS:
        raise UsageError(f"unknown function {function!r}; choose from {', '.join(EVAL_FUNCTIONS)}")
    p = _parse_params(extra)
    missing = [k for k in EVAL_FUNCTIONS[function] if k not in p]
    if missing:
        raise UsageError(f"{function} needs --{', --'.join(missing)}")
    cfg = QuadratureConfig(rel_tol=p.get("rel_tol", 1e-10))
    try:
        if function == "riesz":
            print(f"value {_fmt(riesz_kernel(p['u'], CutPoint(p['xi']), p['lambda']))}")
        elif function == "h":
            print(f"value {_fmt(h_kernel(HKernelSpec(p['lambda'], p['q'], p['xi']), p['u']))}")
        elif function == "kq":
            print(f"value {_fmt(weierstrass_kernel(p['r'], p['t'], p['psi'], p['n'], p['q']))}")
        elif function == "gegenbauer":
            print(f"value {_fmt(gegenbauer(p['j'], p['lambda'], p['xi']))}")
        elif function == "ferrers":
            print(f"value {_fmt(ferrers_p(LegendreOrder(p['mu'], p['nu']), p['xi']))}")
        elif function == "mellin_h_numeric":
            spec = HKernelSpec(p["lambda"], p["q"], p["xi"])
            res = mellin_numeric(h_integrand(spec), MellinPoint.for_h(spec, p["s"]), cfg)
            print(f"value {_fmt(res.value)}")
            print(f"est_error {res.est_error:.17g}")
            print(f"evaluations {res.evaluations}")
        elif function == "mellin_h_closed":
            spec = HKernelSpec(p["lambda"], p["q"], p["xi"])
            print(f"value {_fmt(mellin_h_closed(spec, p['s']))}")
        elif function == "corollary":
            form = p.get("form", "validated")
            print(f"value {_fmt(corollary_closed(p['n'], p['q'], p['rho'], p['xi'], form))}")
    except (RieszMellinError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


def _load_grid(path) -> dict:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read grid file {path}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("grid file must hold a JSON object")
    return data


def cmd_verify(args) -> int:
    log = logging.getLogger("riesz_mellin")
    if args.identity == "all":
        if args.grid_file or args.out or args.tol is not None:
            raise UsageError("verify all accepts only --seed and --out-dir")
        if args.seed is None:
            raise UsageError(f"verify all includes randomized grids ({', '.join(RANDOMIZED)}); pass --seed")
        out_dir = Path(args.out_dir or "verification_reports")
        out_dir.mkdir(parents=True, exist_ok=True)
        specs = [SweepSpec.build(ident, seed=args.seed) for ident in IDENTITIES]
        ok = True
        for spec in specs:
            records = run_sweep(spec)
            emit_report(records, out_dir / f"{spec.identity}.csv")
            ok &= sweep_ok(spec.identity, records)
        log.info("verify all: %s", "all identities passed" if ok else "FAILURES present")
        return 0 if ok else 1
    if args.out_dir:
        raise UsageError("--out-dir is only valid with 'verify all'")
    spec = SweepSpec.build(args.identity, _load_grid(args.grid_file), args.tol, args.seed)
    records = run_sweep(spec)
    if args.out:
        emit_report(records, args.out)
    return 0 if sweep_ok(spec.identity, records) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="riesz-mellin", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    ev = sub.add_parser("eval", help="evaluate one function at one point")
    ev.add_argument("function", help=", ".join(EVAL_FUNCTIONS))
    vp = sub.add_parser("verify", help="run an identity-verification sweep")
    vp.add_argument("identity", help=", ".join(IDENTITIES + ("all",)))
    vp.add_argument("--grid-file", help="JSON object overriding default grid keys")
    vp.add_argument("--tol", type=float, help="relative tolerance for the primary comparison")
    vp.add_argument("--seed", type=int, help="seed for randomized grids")
    vp.add_argument("--out", help="CSV report path")
    vp.add_argument("--out-dir", help="report directory for 'verify all'")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args, extra = parser.parse_known_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        _setup_logging()
        if args.command == "eval":
            return cmd_eval(args.function, extra)
        if extra:
            raise UsageError(f"unrecognized arguments: {' '.join(extra)}")
        return cmd_verify(args)
    except (UsageError, SweepSpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
