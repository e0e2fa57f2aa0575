"""Command-line interface: ``sodelab <scenario> [flags]``.

Every scenario accepts the common flags (--samples, --seed, --channel,
--qubit, --out, --format) plus the grid flags (--k, --q-step,
--phi-points, --dt, --grid-points).  A TOML or JSON config file can
mirror any flag; explicit flags win.  On failure the process prints a
single ``error: ...`` line to stderr and exits nonzero.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import channels, experiments, states
from ._backend import active_backend


class _OneLineParser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"error: {message}\n")


_CONFIG_KEYS = {
    "samples": int,
    "seed": int,
    "channel": str,
    "qubit": int,
    "k": int,
    "q_step": float,
    "phi_points": int,
    "dt": float,
    "grid_points": int,
    "out": str,
    "format": str,
}


def _load_config(path: str) -> dict:
    p = Path(path)
    if not p.exists():
        raise ValueError(f"config file not found: {path}")
    if p.suffix.lower() == ".toml":
        try:
            import tomllib as toml  # type: ignore[import-not-found]
        except ImportError:
            import tomli as toml
        doc = toml.loads(p.read_text())
    else:
        doc = json.loads(p.read_text())
    unknown = set(doc) - set(_CONFIG_KEYS)
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return {k: _CONFIG_KEYS[k](v) for k, v in doc.items()}


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--samples", type=int, default=None, help="sample count (scenario default)")
    parser.add_argument("--seed", type=int, default=None, help=f"RNG seed (default {experiments.DEFAULT_SEED})")
    parser.add_argument("--channel", choices=channels.CHANNEL_KINDS, default=None)
    parser.add_argument("--qubit", type=int, default=None, help="qubit whose entanglement is tracked")
    parser.add_argument("--k", type=int, default=None, help="qubit count / upper k for series scenarios")
    parser.add_argument("--q-step", type=float, default=None, dest="q_step")
    parser.add_argument("--phi-points", type=int, default=None, dest="phi_points")
    parser.add_argument("--dt", type=float, default=None, help="finite-difference step")
    parser.add_argument("--grid-points", type=int, default=None, dest="grid_points")
    parser.add_argument("--out", type=str, default=None, help="dataset output path")
    parser.add_argument("--format", choices=("csv", "json"), default=None, dest="fmt")
    parser.add_argument("--config", type=str, default=None, help="TOML/JSON file mirroring the flags")


def build_parser() -> argparse.ArgumentParser:
    parser = _OneLineParser(prog="sodelab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in experiments.SCENARIOS:
        sp = sub.add_parser(name, description=f"run the {name} scenario")
        _add_common_flags(sp)
    dump = sub.add_parser("dump-state", description="serialize a family state to JSON")
    dump.add_argument("--family", required=True, choices=sorted(states.FAMILIES))
    dump.add_argument("--params", type=str, default="{}", help="JSON object of constructor arguments")
    dump.add_argument("--out", type=str, default=None, help="output path (stdout when omitted)")
    return parser


def _run_dump_state(args) -> int:
    params = json.loads(args.params)
    state = states.build(args.family, **params)
    doc = states.to_json_dict(state)
    text = json.dumps(doc)
    if args.out:
        Path(args.out).write_text(text + "\n")
        print(f"wrote={args.out}")
    else:
        print(text)
    return 0


def _run_scenario_command(args) -> int:
    values = {}
    if args.config:
        values.update(_load_config(args.config))
    if "format" in values:
        values["fmt"] = values.pop("format")
    for key in _CONFIG_KEYS:
        attr = "fmt" if key == "format" else key
        flag = getattr(args, attr, None)
        if flag is not None:
            values[attr] = flag
    cfg = experiments.ScenarioConfig(scenario=args.command, **values)
    result = experiments.run_scenario(cfg)
    print(f"scenario={result.scenario} backend={active_backend()} rows={len(result.records)}")
    for key in sorted(result.summary):
        print(f"summary.{key}={experiments._fmt(result.summary[key])}")
    if result.path is not None:
        print(f"wrote={result.path}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "dump-state":
            return _run_dump_state(args)
        return _run_scenario_command(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        message = str(exc).replace("\n", " ")
        print(f"error: {message}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
