"""Command-line front end: equilibrium checks, threshold verdicts, region
maps, and belief-parameter sweeps over scenario files.

Exit codes: 0 on success, 1 when ``--assert`` is given and the analysis
verdict is false, 2 on usage or validation errors.
"""

from __future__ import annotations

import argparse
import sys
from itertools import product
from pathlib import Path

import numpy as np

from .activity import region_sample
from .ambiguity import (
    BeliefSystem,
    ambiguity_equilibrium_check,
    best_fee_response,
    full_exploitation_verdict,
    loyalty_fees,
)
from .game import Grid, StrategyProfile
from .hedonic import full_extraction_fees, game_payoffs
from .oracles import epsilon_nash_check, pareto_check, weak_dominance_check
from .scenario import ScenarioError, emit_results, parse_scenario, sweep_csv, sweep_machine

SWEEPABLE_FIELDS = ("gamma", "lambda", "loyalty1", "loyalty2")


def _profile_arg(text):
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("profile must be s1,s2,rho1,rho2")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"profile has a non-numeric entry: {text!r}")


def _sweep_arg(text):
    name, sep, spec = text.partition("=")
    if not sep or name not in SWEEPABLE_FIELDS:
        raise argparse.ArgumentTypeError(
            f"sweep field must be one of {', '.join(SWEEPABLE_FIELDS)}"
        )
    parts = spec.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("sweep range must be start:stop:count")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad sweep range {spec!r}")
    if count < 1:
        raise argparse.ArgumentTypeError("sweep count must be >= 1")
    return name, np.linspace(start, stop, count)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="middleman",
        description="Equilibrium analysis for the two-sided middleman platform game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, scenario=True, profile=False, grid=False):
        p = sub.add_parser(name, help=help_text)
        if scenario:
            p.add_argument("--scenario", required=True, help="scenario YAML file")
        if profile:
            p.add_argument(
                "--profile",
                type=_profile_arg,
                required=True,
                help="strategy profile s1,s2,rho1,rho2",
            )
        if grid:
            p.add_argument("--steps", type=int, help="override grid subdivisions")
            p.add_argument("--eps", type=float, help="override improvement tolerance")
        p.add_argument("--out", help="write output to a file instead of stdout")
        p.add_argument(
            "--format", choices=("text", "machine", "csv", "svg"), help="output format"
        )
        p.add_argument(
            "--assert",
            dest="assert_",
            action="store_true",
            help="exit 1 when the verdict is false",
        )
        return p

    add("verify-nash", "check a profile for unilateral grid deviations",
        profile=True, grid=True).set_defaults(handler=_cmd_verify_nash)
    add("dominance", "check the profile's participation levels for weak dominance",
        profile=True, grid=True).set_defaults(handler=_cmd_dominance)
    add("pareto", "check a profile for grid Pareto efficiency",
        profile=True, grid=True).set_defaults(handler=_cmd_pareto)
    add("ambiguity-eq", "Nash check of the belief-modified game",
        profile=True, grid=True).set_defaults(handler=_cmd_ambiguity_eq)
    add("threshold", "full-exploitation threshold verdict").set_defaults(
        handler=_cmd_threshold
    )

    region = add("region", "benchmark (gamma, sigma) region map", scenario=False)
    region.add_argument("--resolution", type=int, default=100, help="lattice subdivisions")
    region.set_defaults(handler=_cmd_region)

    sweep = add("sweep", "threshold verdicts over belief-parameter ranges")
    sweep.add_argument(
        "--sweep",
        dest="sweeps",
        type=_sweep_arg,
        action="append",
        required=True,
        metavar="FIELD=START:STOP:COUNT",
        help="belief field range; repeatable (Cartesian product)",
    )
    sweep.set_defaults(handler=_cmd_sweep)
    return parser


def _load_scenario(args):
    return parse_scenario(Path(args.scenario).read_text())


def _grid_and_eps(config, args):
    steps = args.steps if getattr(args, "steps", None) else config.steps
    eps = args.eps if getattr(args, "eps", None) is not None else config.eps
    grid = Grid(steps, full_extraction_fees(config.game), config.s_lo)
    return grid, eps


def _require_beliefs(config):
    if config.beliefs is None:
        raise ScenarioError("beliefs: section required by this command")
    return config.beliefs


def _deliver(text, args, default_fmt, allowed):
    fmt = args.format or default_fmt
    if fmt not in allowed:
        raise ScenarioError(
            f"format: {fmt!r} not supported here (choose from {', '.join(allowed)})"
        )
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return fmt


def _emit_report(entries, args, verdict_key):
    fmt = args.format or "text"
    _deliver(emit_results(entries, fmt), args, fmt, ("text", "machine"))
    return 1 if args.assert_ and not entries[verdict_key] else 0


def _cmd_verify_nash(args):
    config = _load_scenario(args)
    grid, eps = _grid_and_eps(config, args)
    profile = StrategyProfile(*args.profile)
    verdict = epsilon_nash_check(game_payoffs(config.game), profile, grid, eps)
    return _emit_report(
        {"check": "verify-nash", "verdict": verdict, "profile": args.profile},
        args,
        "verdict",
    )


def _cmd_dominance(args):
    config = _load_scenario(args)
    grid, eps = _grid_and_eps(config, args)
    payoffs = game_payoffs(config.game)
    s1, s2 = args.profile[0], args.profile[1]
    v1 = weak_dominance_check(payoffs, 1, s1, grid, eps)
    v2 = weak_dominance_check(payoffs, 2, s2, grid, eps)
    return _emit_report(
        {
            "check": "dominance",
            "verdict": v1 and v2,
            "verdict_user1": v1,
            "verdict_user2": v2,
            "candidates": (s1, s2),
        },
        args,
        "verdict",
    )


def _cmd_pareto(args):
    config = _load_scenario(args)
    grid, eps = _grid_and_eps(config, args)
    profile = StrategyProfile(*args.profile)
    verdict = pareto_check(game_payoffs(config.game), profile, grid, eps)
    return _emit_report(
        {"check": "pareto", "verdict": verdict, "profile": args.profile},
        args,
        "verdict",
    )


def _cmd_ambiguity_eq(args):
    config = _load_scenario(args)
    beliefs = _require_beliefs(config)
    grid, eps = _grid_and_eps(config, args)
    profile = StrategyProfile(*args.profile)
    verdict = ambiguity_equilibrium_check(config.game, beliefs, profile, grid, eps)
    best = best_fee_response(config.game, beliefs, grid)
    return _emit_report(
        {
            "check": "ambiguity-eq",
            "verdict": verdict,
            "profile": args.profile,
            "best_fee_response": best,
        },
        args,
        "verdict",
    )


def _cmd_threshold(args):
    config = _load_scenario(args)
    beliefs = _require_beliefs(config)
    verdict = full_exploitation_verdict(config.game, beliefs)
    return _emit_report(
        {
            "full_exploitation": verdict.full_exploitation,
            "delta": verdict.delta,
            "rhs": verdict.rhs,
            "gamma": beliefs.gamma,
            "lambda": beliefs.lambda_,
            "loyalty_fees": loyalty_fees(config.game, beliefs),
            "full_extraction_fees": full_extraction_fees(config.game),
        },
        args,
        "full_exploitation",
    )


def _cmd_region(args):
    samples = region_sample(args.resolution)
    fmt = args.format or "csv"
    _deliver(emit_results(samples, fmt), args, fmt, ("csv", "svg"))
    return 0


def _cmd_sweep(args):
    config = _load_scenario(args)
    beliefs = _require_beliefs(config)
    names = [name for name, _ in args.sweeps]
    if len(set(names)) != len(names):
        raise ScenarioError("sweep: duplicate field")
    base = {
        "gamma": beliefs.gamma,
        "lambda": beliefs.lambda_,
        "loyalty1": beliefs.loyalty1,
        "loyalty2": beliefs.loyalty2,
    }
    rows = []
    for combo in product(*(values for _, values in args.sweeps)):
        fields = dict(base)
        fields.update(zip(names, (float(v) for v in combo)))
        point_beliefs = BeliefSystem(
            lambda_=fields["lambda"],
            gamma=fields["gamma"],
            loyalty1=fields["loyalty1"],
            loyalty2=fields["loyalty2"],
        )
        verdict = full_exploitation_verdict(config.game, point_beliefs)
        row = {name: fields[name] for name in names}
        row.update(
            delta=verdict.delta,
            rhs=verdict.rhs,
            full_exploitation=verdict.full_exploitation,
        )
        rows.append(row)

    fieldnames = names + ["delta", "rhs", "full_exploitation"]
    fmt = args.format or "csv"
    if fmt == "csv":
        text = sweep_csv(fieldnames, rows)
    elif fmt == "machine":
        text = sweep_machine(fieldnames, rows)
    else:
        raise ScenarioError(f"format: {fmt!r} not supported here (choose from csv, machine)")
    _deliver(text, args, fmt, ("csv", "machine"))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
