"""Command-line driver: ``simulate <experiment-id> [--config ...] [--out ...]``.

Exit codes: 0 on success, 2 on a config problem (unknown experiment, bad or
missing fields, malformed JSON), 3 when the integration diverges.
"""
from __future__ import annotations

import argparse
import json
import sys

from .experiments import (
    EXPERIMENT_IDS,
    ConfigError,
    ExperimentConfig,
    default_config,
    run_experiment,
)
from .hydrogen import UNIT_SCALES
from .integrator import IntegrationDivergedError

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DIVERGED = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simulate",
        description="Run a kicked-qubit experiment and write CSV datasets.")
    parser.add_argument("experiment", metavar="experiment-id",
                        help=f"one of: {', '.join(EXPERIMENT_IDS)}")
    parser.add_argument("--config", metavar="FILE",
                        help="JSON config file (required for 'custom'; "
                             "otherwise overrides the catalog defaults)")
    parser.add_argument("--out", metavar="DIR", default="out",
                        help="output directory for CSV/JSON datasets "
                             "(default: %(default)s)")
    parser.add_argument("--dt", type=float, metavar="VAL",
                        help="integrator step override")
    parser.add_argument("--convention", choices=sorted(UNIT_SCALES),
                        help="hydrogen MHz-to-angular-frequency convention")
    return parser


def _load_config(args: argparse.Namespace) -> ExperimentConfig:
    if args.experiment not in EXPERIMENT_IDS:
        raise ConfigError(
            "experiment",
            f"unknown id {args.experiment!r}; expected one of {EXPERIMENT_IDS}")
    if args.config is None:
        config = default_config(args.experiment,
                                convention=args.convention or "plain")
    else:
        try:
            with open(args.config) as handle:
                raw = json.load(handle)
        except OSError as exc:
            raise ConfigError("--config", f"cannot read {args.config!r}: {exc}")
        except json.JSONDecodeError as exc:
            raise ConfigError("--config", f"{args.config!r} is not valid JSON: {exc}")
        if not isinstance(raw, dict):
            raise ConfigError("--config", "top level must be a JSON object")
        stated = raw.get("experiment")
        if stated is None:
            raw["experiment"] = args.experiment
        elif stated != args.experiment:
            raise ConfigError(
                "experiment",
                f"config file says {stated!r} but the command line says "
                f"{args.experiment!r}")
        config = ExperimentConfig.from_dict(raw)

    updates: dict = {}
    if args.dt is not None:
        if args.dt <= 0:
            raise ConfigError("dt", f"must be > 0, got {args.dt}")
        updates["dt"] = args.dt
    if args.convention is not None:
        if config.system != "hydrogen":
            raise ConfigError(
                "hydrogen.convention",
                f"--convention applies to hydrogen experiments; "
                f"{config.experiment} runs on {config.system}")
        hydrogen = dict(config.hydrogen)
        hydrogen["convention"] = args.convention
        updates["hydrogen"] = hydrogen
    if updates:
        config = ExperimentConfig.from_dict({**config.to_dict(), **updates})
    return config


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args)
        _, paths = run_experiment(config, out_dir=args.out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except IntegrationDivergedError as exc:
        print(f"numeric divergence: {exc}", file=sys.stderr)
        return EXIT_DIVERGED
    for path in paths:
        print(f"wrote {path}")
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
