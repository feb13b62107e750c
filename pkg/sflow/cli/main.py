# -*- coding: utf-8 -*-
"""************************************************************
### Date: 09/23/2026 20:31:23
### LastEditTime: 09/23/2026 22:48:54
### FilePath: //sflow//cli//main.py
### Description: Command line: analyze, flow, cycles, tangency, gen, verify.
###              Exit 0 on success, 2 on input errors, 3 on numerical
###              failures, 4 when internal cross-checks disagree.
###
**********************************************************"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import yaml
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from sflow import __version__
from sflow.block.tangency import curve_to_csv, trace_resonance_curve
from sflow.cli.analyze import analyze_triple, tangency_vector
from sflow.cli.io import emit, instance_payload, read_instance, read_path, read_triple, to_json
from sflow.cli.verify import exit_code, verify
from sflow.config import SpectralConfig, load_config
from sflow.errors import SchemaError, SpectralFlowError
from sflow.flow.report import flow_report
from sflow.instances import InstanceSpec, generate
from sflow.monodromy.cycles import analyze_cycles
from sflow.monodromy.tracking import trace_to_csv
from sflow.resonance.locator import real_resonance_points_on_segment
from utils.checksum import write_digest
from utils.files import get_files_by_extension

LOGGER = logging.getLogger("sflow")

EXIT_OK, EXIT_INPUT, EXIT_NUMERICAL, EXIT_CROSSCHECK = 0, 2, 3, 4


# -----------------------------
# Setup
# -----------------------------


def setup_logging(verbose: bool = False, quiet: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.ERROR if quiet else logging.INFO
    handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=False)
    logging.basicConfig(level=level, format="%(message)s", datefmt="[%X]", handlers=[handler], force=True)


def build_config(args: argparse.Namespace) -> SpectralConfig:
    """Flags over the config file over the defaults."""
    cfg = load_config(args.config)
    overrides: Dict[str, Any] = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.y0 is not None:
        count = len(cfg.schedules.y_schedule)
        overrides["schedules"] = {"y_schedule": tuple(args.y0 * 0.1**k for k in range(count))}
    if args.contour_nodes is not None:
        overrides["contour"] = {"nodes": args.contour_nodes}
    return cfg.with_overrides(overrides) if overrides else cfg


def _write(args: argparse.Namespace, text: str) -> None:
    target = emit(text, args.out)
    if target is not None and args.digest:
        write_digest(target)


# -----------------------------
# Subcommands
# -----------------------------


def cmd_analyze(args: argparse.Namespace, cfg: SpectralConfig) -> int:
    t, interval = read_triple(args.file, args.lam)
    report = analyze_triple(t, interval, cfg)
    _write(args, to_json(report))
    return EXIT_OK if report["agreement"] else EXIT_CROSSCHECK


def cmd_flow(args: argparse.Namespace, cfg: SpectralConfig) -> int:
    path, lam = read_path(args.file, args.lam)
    report = flow_report(path, lam, strict=False, config=cfg)
    _write(args, to_json(report.to_dict()))
    if not report.agree:
        LOGGER.error("flow engines disagree: %s", report.agreement)
        return EXIT_CROSSCHECK
    return EXIT_OK


def _point(args: argparse.Namespace, cfg: SpectralConfig):
    t, interval = read_triple(args.file, args.lam)
    points = real_resonance_points_on_segment(t.lam, t.H, t.V, interval, cfg)
    if not points:
        raise SchemaError(f"no real resonance point of the triple in {list(interval)}")
    if args.r is None:
        return t, points[0]
    return t, min(points, key=lambda p: abs(p.real - args.r))


def cmd_cycles(args: argparse.Namespace, cfg: SpectralConfig) -> int:
    t, point = _point(args, cfg)
    analysis = analyze_cycles(t, point, cfg)
    _write(args, trace_to_csv(analysis.trace))
    return EXIT_OK


def cmd_tangency(args: argparse.Namespace, cfg: SpectralConfig) -> int:
    t, point = _point(args, cfg)
    chi, order = tangency_vector(analyze_cycles(t, point, cfg))
    _write(args, curve_to_csv(trace_resonance_curve(t, point.real, chi, order_hint=order)))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, cfg: SpectralConfig) -> int:
    spec = InstanceSpec(
        kind=args.kind,
        dim=args.dim,
        d=args.d,
        orders=tuple(args.orders or ()),
        segments=args.segments,
        canonical=args.canonical,
    )
    instance = generate(spec, args.seed, cfg)
    _write(args, to_json(instance_payload(instance)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: SpectralConfig) -> int:
    instances = []
    if args.instances:
        for name in sorted(get_files_by_extension(args.instances, ".json")):
            instances.append(read_instance(name))
    report = verify(args.seed, args.trials, cfg, instances, workers=args.workers, show_progress=not args.quiet)
    _write(args, to_json(report))
    return exit_code(report)


COMMANDS = {
    "analyze": cmd_analyze,
    "flow": cmd_flow,
    "cycles": cmd_cycles,
    "tangency": cmd_tangency,
    "gen": cmd_gen,
    "verify": cmd_verify,
}


# -----------------------------
# Parser
# -----------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML or JSON config file.")
    common.add_argument("--seed", type=int, help="Random seed (required for gen and verify).")
    common.add_argument("--y0", type=float, help="Largest relative y of the index schedule.")
    common.add_argument("--contour-nodes", type=int, help="Initial number of contour nodes.")
    common.add_argument("--out", help="Write the report here instead of stdout.")
    common.add_argument("--digest", action="store_true", help="Write an .md5 sidecar next to --out.")
    noise = common.add_mutually_exclusive_group()
    noise.add_argument("-v", "--verbose", action="store_true", help="Debug logging.")
    noise.add_argument("-q", "--quiet", action="store_true", help="Errors only.")

    parser = argparse.ArgumentParser(prog="sflow", description="Spectral flow of Hermitian operator paths.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("analyze", parents=[common], help="Analyse the resonance points of a triple.")
    p.add_argument("file", help="Triple file.")
    p.add_argument("--lambda", dest="lam", type=float, help="Override lambda of the file.")

    p = sub.add_parser("flow", parents=[common], help="Spectral flow of a path by four engines.")
    p.add_argument("file", help="Path file.")
    p.add_argument("--lambda", dest="lam", type=float, help="Override lambda of the file.")

    for name, text in (("cycles", "Monodromy trace as CSV."), ("tangency", "Resonance curve as CSV.")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file", help="Triple file.")
        p.add_argument("--lambda", dest="lam", type=float, help="Override lambda of the file.")
        p.add_argument("--r", type=float, help="Resonance point (default: the first in the interval).")

    p = sub.add_parser("gen", parents=[common], help="Generate an instance file.")
    p.add_argument("--kind", required=True, choices=["random", "uturn", "order_d", "direct_sum", "ground"])
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--d", type=int, help="Order of an order_d instance.")
    p.add_argument("--orders", type=int, nargs="+", help="Block orders of a direct_sum instance.")
    p.add_argument("--segments", type=int, default=0, help="Emit a path with this many segments.")
    p.add_argument("--canonical", action="store_true", help="Documented instance instead of a random draw.")

    p = sub.add_parser("verify", parents=[common], help="Run the invariant suites.")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--instances", help="Directory of extra triple or path files.")
    p.add_argument("--workers", type=int, help="Worker processes (capped by SFL_THREADS).")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose, args.quiet)
    if args.cmd in ("gen", "verify") and args.seed is None:
        LOGGER.error("--seed is required for %s", args.cmd)
        return EXIT_INPUT
    if args.cmd == "verify" and args.trials < 0:
        LOGGER.error("--trials must be non-negative")
        return EXIT_INPUT
    try:
        cfg = build_config(args)
        return COMMANDS[args.cmd](args, cfg)
    except (ValidationError, yaml.YAMLError) as err:
        LOGGER.error("invalid input: %s", err)
        return EXIT_INPUT
    except OSError as err:
        LOGGER.error("%s", err)
        return EXIT_INPUT
    except SpectralFlowError as err:
        LOGGER.error("%s: %s", type(err).__name__, err)
        return err.exit_code


def run(argv: Optional[List[str]] = None) -> None:
    sys.exit(main(argv))


if __name__ == "__main__":
    run()
