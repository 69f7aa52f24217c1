"""
Command-line entry point.

    spectra analyze --graph6 Bw --labels 1,3,2 [--gradient]
    spectra verify  --host k4 --exhaustive [--prune] [--shards K] [--repro-dir DIR]
    spectra verify  --host petersen --samples 10000 --seed 0
    spectra stats   --edges host.txt
    spectra search  --host c5 --budget 100000 --restarts 5 --seed 0 [--exact]
    spectra galaxy build 1,0,2
    spectra galaxy check --host spider3 [--exhaustive]
    spectra galaxy label --edges star4.txt

stdout carries JSON (edge-list text for `galaxy build`); logs go to stderr.
Exit codes: 0 success, 1 usage or input error, 2 violation or failed
consistency check, 3 enumeration guard tripped.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv
from loguru import logger

from .base import configure_logging
from .config import get_settings
from .errors import InvalidInput, SpectraError
from .interface import SpectraInterface
from .optimize import SearchConfig

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; usage errors here exit with 1"""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph6", help="host as a graph6 string")
    group.add_argument("--edges", help="host as an edge-list file, one 'u v' per line")
    group.add_argument("--host", help="named host from the built-in corpus")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="write output to FILE instead of stdout")


def _add_enumeration(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--exhaustive", action="store_true", help="visit every bijective labeling")
    parser.add_argument("--samples", type=int, help="number of seeded random labelings")
    parser.add_argument("--seed", type=int, help="base seed for sampling")
    parser.add_argument("--prune", action="store_true", help="visit one of each complement pair")
    parser.add_argument("--shards", type=int, help="worker processes for exhaustive runs")
    parser.add_argument("--allow-long-runtime", action="store_true",
                        help="lift the edge-count guard on exhaustive runs")
    parser.add_argument("--progress", action="store_true", help="progress bar on stderr")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="spectra", description="Interval spectra of edge labelings")
    parser.add_argument("--log-level", help="loguru level for stderr (default from SPECTRA_LOG_LEVEL)")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    analyze = commands.add_parser("analyze", help="report on one labeling")
    _add_graph_source(analyze)
    labels = analyze.add_mutually_exclusive_group(required=True)
    labels.add_argument("--labels", help="labels as CSV in edge-index order")
    labels.add_argument("--labels-file", help="file holding the label CSV")
    analyze.add_argument("--gradient", action="store_true", help="list gradient and maximal paths")
    analyze.add_argument("--max-paths", type=int, help="bound on listed gradient paths")
    _add_output(analyze)

    verify = commands.add_parser("verify", help="check the structure theorem over many labelings")
    _add_graph_source(verify)
    _add_enumeration(verify)
    verify.add_argument("--repro-dir", help="write a reproduction file per stored violation")
    _add_output(verify)

    stats = commands.add_parser("stats", help="full |U| statistics (exhaustive unless --samples)")
    _add_graph_source(stats)
    _add_enumeration(stats)
    _add_output(stats)

    search = commands.add_parser("search", help="anneal for a labeling with large |U|")
    _add_graph_source(search)
    search.add_argument("--budget", type=int)
    search.add_argument("--restarts", type=int)
    search.add_argument("--seed", type=int)
    search.add_argument("--temperature", type=float, dest="initial_temperature")
    search.add_argument("--decay", type=float)
    search.add_argument("--workers", type=int)
    search.add_argument("--exact", action="store_true", help="also compute the exact maximum")
    search.add_argument("--progress", action="store_true")
    _add_output(search)

    galaxy = commands.add_parser("galaxy", help="galaxy construction and recognition")
    galaxy_commands = galaxy.add_subparsers(dest="galaxy_command", required=True, parser_class=ArgumentParser)
    build = galaxy_commands.add_parser("build", help="edge list of T[A]")
    build.add_argument("sequence", help="pendant counts a_1,...,a_(n-2)")
    _add_output(build)
    check = galaxy_commands.add_parser("check", help="recognize and decompose")
    _add_graph_source(check)
    check.add_argument("--exhaustive", action="store_true", help="search for a full interval labeling")
    _add_output(check)
    label = galaxy_commands.add_parser("label", help="labeling with every spectrum an interval")
    _add_graph_source(label)
    _add_output(label)
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _emit_json(data: Dict[str, Any], out: Optional[str]) -> None:
    _emit(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n", out)


def _parse_sequence(text: str) -> List[int]:
    try:
        return [int(field) for field in text.split(",") if field.strip()]
    except ValueError:
        raise InvalidInput(f"sequence must be comma-separated integers: {text!r}") from None


def _graph(api: SpectraInterface, args: argparse.Namespace):
    return api.load_graph(graph6=args.graph6, edges=args.edges, host=args.host)


def _run_enumeration(api: SpectraInterface, args: argparse.Namespace, default_exhaustive: bool):
    g = _graph(api, args)
    if args.exhaustive and args.samples is not None:
        raise InvalidInput("--exhaustive and --samples are mutually exclusive")
    exhaustive = args.exhaustive or (default_exhaustive and args.samples is None)
    if not exhaustive and args.samples is None:
        raise InvalidInput("give --exhaustive or --samples N")
    if not exhaustive:
        exhaustive_only = [flag for flag, given in (("--prune", args.prune), ("--shards", args.shards is not None)) if given]
        if exhaustive_only:
            raise InvalidInput(f"{', '.join(exhaustive_only)} only apply to exhaustive runs", flags=exhaustive_only)
    stats, written = api.verify(
        g, exhaustive=exhaustive, samples=args.samples, seed=args.seed,
        prune=args.prune, shards=args.shards, allow_long_runtime=args.allow_long_runtime,
        progress=args.progress or None, repro_dir=getattr(args, "repro_dir", None),
    )
    return g, stats, written, exhaustive


def cmd_analyze(api: SpectraInterface, args: argparse.Namespace) -> int:
    g = _graph(api, args)
    f = api.load_labeling(g, labels=args.labels, labels_file=args.labels_file)
    report = api.analyze(g, f, gradient=args.gradient, max_paths=args.max_paths)
    _emit_json(report.to_json_dict(), args.out)
    return api.exit_code_for(report)


def cmd_verify(api: SpectraInterface, args: argparse.Namespace) -> int:
    g, stats, written, exhaustive = _run_enumeration(api, args, default_exhaustive=False)
    data = stats.to_json_dict()
    data.update(
        schema=api.settings.SCHEMA_VERSION,
        mode="exhaustive" if exhaustive else "sampled",
        reproductions=[str(path) for path in written],
    )
    _emit_json(data, args.out)
    return EXIT_VIOLATION if stats.violation_count or stats.lemma_failures else EXIT_OK


def cmd_stats(api: SpectraInterface, args: argparse.Namespace) -> int:
    g, stats, _, exhaustive = _run_enumeration(api, args, default_exhaustive=True)
    data = stats.model_dump(mode="json")
    data.update(schema=api.settings.SCHEMA_VERSION, mode="exhaustive" if exhaustive else "sampled")
    data["violations"] = [
        {"labels": list(r.labels), "verdict": r.verdict.to_json_dict()} for r in stats.violations
    ]
    _emit_json(data, args.out)
    return EXIT_VIOLATION if stats.violation_count or stats.lemma_failures else EXIT_OK


def cmd_search(api: SpectraInterface, args: argparse.Namespace) -> int:
    g = _graph(api, args)
    cfg = SearchConfig.from_settings(
        budget=args.budget, restarts=args.restarts, seed=args.seed,
        initial_temperature=args.initial_temperature, decay=args.decay, workers=args.workers,
    )
    data = api.search(g, cfg, exact=args.exact, progress=args.progress)
    data["schema"] = api.settings.SCHEMA_VERSION
    _emit_json(data, args.out)
    return EXIT_VIOLATION if data["falsifying"] else EXIT_OK


def cmd_galaxy(api: SpectraInterface, args: argparse.Namespace) -> int:
    if args.galaxy_command == "build":
        _emit(api.galaxy_build(_parse_sequence(args.sequence)), args.out)
        return EXIT_OK
    g = _graph(api, args)
    if args.galaxy_command == "check":
        data = api.galaxy_check(g, exhaustive=args.exhaustive)
        data["schema"] = api.settings.SCHEMA_VERSION
        _emit_json(data, args.out)
        return EXIT_VIOLATION if data.get("falsifying") else EXIT_OK
    labeling = api.galaxy_label(g)
    _emit_json({"schema": api.settings.SCHEMA_VERSION, "labels": labeling.to_csv()}, args.out)
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "stats": cmd_stats,
    "search": cmd_search,
    "galaxy": cmd_galaxy,
}


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_INPUT
    configure_logging(args.log_level)
    api = SpectraInterface(get_settings())
    try:
        return COMMANDS[args.command](api, args)
    except SpectraError as exc:
        logger.error("{}: {}", exc.code, exc.message)
        sys.stderr.write(json.dumps({"error": exc.to_dict()}, default=str) + "\n")
        return exc.exit_code
    except OSError as exc:
        logger.error("io_error: {}", exc)
        return EXIT_INPUT
