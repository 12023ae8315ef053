"""Command-line driver.

Subcommands: `run <config>` executes a config file; the scenario names
(`exact-sn`, `spinodal`, `table-alpha`, `ostwald1d`, `radial2d`,
`ostwald2d`) run presets directly. Flags override file/preset values.
Exit codes: 0 success, 1 configuration or I/O error, 2 solver blow-up.

The default output root is the CHRELAX_OUTPUT_ROOT environment variable
(falling back to ./chrelax-out); each run writes into <root>/<scenario>
unless --out gives an explicit directory.
"""

from __future__ import annotations

import argparse
import os
import sys

from .hyperbolic import BlowUpError
from .reference import GmresError
from .scenarios import (
    IC_VARIANTS,
    OUTPUT_ROOT_ENV,
    SOLVERS,
    apply_overrides,
    load_config,
    preset,
    run_scenario,
)

_PRESET_COMMANDS = ("table-alpha", "exact-sn", "spinodal", "ostwald1d", "radial2d", "ostwald2d")
_COMMAND_TO_SCENARIO = {"table-alpha": "alpha-table"}


def _add_override_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--solver", choices=SOLVERS)
    p.add_argument("--flux", choices=("rusanov", "force"))
    p.add_argument("--nx", type=int)
    p.add_argument("--ny", type=int)
    p.add_argument("--cfl", type=float)
    p.add_argument("--dt", type=float, dest="dt_ref",
                   help="fixed time step of the reference solver")
    p.add_argument("--dt-cap", type=float, dest="dt_cap",
                   help="cap on the CFL time step of the hyperbolic solver")
    p.add_argument("--t-end", type=float, dest="t_end")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--tau", type=float)
    p.add_argument("--gamma", type=float)
    p.add_argument("--ic-variant", choices=IC_VARIANTS, dest="ic_variant")
    p.add_argument("--out", dest="out_dir")
    p.add_argument("--snapshots", help="comma-separated snapshot times")
    p.add_argument("--seq", action="store_const", const="true",
                   help="force deterministic sequential stepping")
    p.add_argument("--mode", choices=("desk", "paper"), default="desk",
                   help="preset scale (paper presets take hours; see README)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chrelax", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    runp = sub.add_parser("run", help="run a scenario config file")
    runp.add_argument("config")
    _add_override_flags(runp)
    for name in _PRESET_COMMANDS:
        p = sub.add_parser(name, help=f"run the {name} benchmark preset")
        _add_override_flags(p)
    return parser


_OVERRIDE_KEYS = (
    "solver", "flux", "nx", "ny", "cfl", "dt_ref", "dt_cap", "t_end",
    "alpha", "beta", "tau", "gamma", "ic_variant", "out_dir", "snapshots", "seq",
)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            cfg = load_config(args.config)
        else:
            scenario = _COMMAND_TO_SCENARIO.get(args.command, args.command)
            cfg = preset(scenario, mode=args.mode)
        overrides = {k: getattr(args, k) for k in _OVERRIDE_KEYS if getattr(args, k, None) is not None}
        if "dt_ref" in overrides:
            overrides["dt_ref"] = str(overrides["dt_ref"])
        if "out_dir" not in overrides:
            root = os.environ.get(OUTPUT_ROOT_ENV, "chrelax-out")
            overrides["out_dir"] = os.path.join(root, cfg.scenario)
        cfg = apply_overrides(cfg, {k: str(v) if not isinstance(v, str) else v
                                    for k, v in overrides.items()})
    except (OSError, ValueError, KeyError) as exc:
        print(f"chrelax: configuration error: {exc}", file=sys.stderr)
        return 1

    try:
        summary = run_scenario(cfg)
    except BlowUpError as exc:
        print(f"chrelax: {exc}", file=sys.stderr)
        if exc.state is not None:
            print("chrelax: diagnostic snapshot of the non-finite state follows", file=sys.stderr)
            import numpy as np

            bad = int(np.sum(~np.isfinite(exc.state.c)))
            print(f"chrelax: {bad} non-finite cells in c at t = {exc.time:.6g}", file=sys.stderr)
        return 2
    except GmresError as exc:
        print(f"chrelax: implicit solve failed: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"chrelax: I/O error: {exc}", file=sys.stderr)
        return 1

    arts = summary.get("artifacts", [])
    print(f"chrelax: wrote {len(arts)} artifacts to {cfg.out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
