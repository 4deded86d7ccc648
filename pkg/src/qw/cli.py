"""``qw`` command line: eval, verify, solve-cocycle.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .cocycle import solve_cocycle
from .errors import QwError
from .rewrite import RelationMode
from .textio import evaluate_text, render, to_json
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("text", "json", "latex")
CONFLUENCE_INDEX_BOUND = 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    mode: RelationMode = RelationMode.CENTRAL
    output_format: str = "text"
    window: int = 4
    seed: int = 0
    samples: int = 500


def default_window(environ=None) -> int:
    env = os.environ if environ is None else environ
    raw = env.get("QW_DEFAULT_WINDOW")
    if raw is None or raw.strip() == "":
        return 4
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"QW_DEFAULT_WINDOW must be an integer, got {raw!r}") from None


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=[m.value for m in RelationMode], default="central")
    common.add_argument("--format", dest="output_format", choices=FORMATS, default="text")
    common.add_argument("--window", type=int, default=None,
                        help="index window (default 4, or $QW_DEFAULT_WINDOW)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=_positive, default=500)

    p = argparse.ArgumentParser(prog="qw", description="Exact computations in the q-deformed W(2,2) algebra.")
    sub = p.add_subparsers(dest="command", required=True)
    e = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    e.add_argument("expr")
    v = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    v.add_argument("suite", choices=SUITES)
    sub.add_parser("solve-cocycle", parents=[common], help="re-derive the central cocycle on a window")
    return p


def _config(ns) -> CliConfig:
    if ns.window is not None:
        window = ns.window
    elif getattr(ns, "suite", None) == "confluence":
        window = CONFLUENCE_INDEX_BOUND  # the window is the index bound of random words
    else:
        window = default_window()
    if window < 0:
        raise UsageError("--window must be non-negative")
    return CliConfig(RelationMode(ns.mode), ns.output_format, window, ns.seed, ns.samples)


def _emit(payload, out):
    out.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")


def cmd_eval(expr: str, cfg: CliConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        value = evaluate_text(expr, cfg.mode)
    except (QwError, ArithmeticError, TypeError, ValueError) as exc:
        err.write(f"qw eval: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    if cfg.output_format == "json":
        _emit({"command": "eval", "expression": expr, "mode": cfg.mode.value,
               "text": render(value), "result": to_json(value)}, out)
    else:
        out.write(render(value, cfg.output_format) + "\n")
    return EXIT_OK


def _verify_text(rep) -> str:
    lines = [f"{rep.check} (window {rep.window}, mode {rep.mode}): "
             f"{'PASS' if rep.passed else 'FAIL'} "
             f"({len(rep.instances) - len(rep.failures)}/{len(rep.instances)} instances)"]
    if rep.check == "limit":
        lines.append("central coefficient at q=1, m: value")
        for m, val in rep.extra["central_at_q1"].items():
            lines.append(f"  {m:>4}: {val}")
    if not rep.passed:
        lines.append("counterexample: " + json.dumps(rep.counterexample))
        by_check = {}
        for f in rep.failures:
            by_check[f["check"]] = by_check.get(f["check"], 0) + 1
        for name, k in by_check.items():
            lines.append(f"  {name}: {k} failed")
    return "\n".join(lines)


def cmd_verify(suite: str, cfg: CliConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    rep = run_suite(suite, cfg.window, cfg.mode, cfg.seed, cfg.samples)
    if cfg.output_format == "json":
        _emit({"command": "verify", **rep.as_dict()}, out)
    else:
        out.write(_verify_text(rep) + "\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_solve_cocycle(cfg: CliConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    if cfg.window < 2:
        err.write(f"qw solve-cocycle: window must be at least 2, got {cfg.window}\n")
        return EXIT_USAGE
    rep = solve_cocycle(cfg.window)
    d = rep.as_dict()
    if cfg.output_format == "json":
        _emit({"command": "solve-cocycle", **d}, out)
    else:
        out.write(
            f"window {d['window']}: {len(d['unknown_order'])} unknowns, {d['equations']} equations\n"
            f"nullspace dimension: {d['nullspace_dimension']}\n"
            f"gauge-fixed dimension: {d['gauge_fixed_dimension']}\n"
            f"multiple of closed form: {d['scalar_multiple']} (normalized: {d['normalized_multiple']})\n"
            f"residuals: {d['residual_check']}\n"
            f"{'PASS' if d['pass'] else 'FAIL: ' + str(d['reason'])}\n"
        )
    return EXIT_OK if rep.ok else EXIT_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _config(ns)
    except UsageError as exc:
        sys.stderr.write(f"qw: {exc}\n")
        return EXIT_USAGE
    if ns.command == "eval":
        return cmd_eval(ns.expr, cfg)
    if ns.command == "verify":
        return cmd_verify(ns.suite, cfg)
    return cmd_solve_cocycle(cfg)


if __name__ == "__main__":
    sys.exit(main())
