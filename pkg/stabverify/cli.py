"""
Command-line interface.

    stabverify verify nilpotent  [--genus all] [--format json|text]
    stabverify verify semisimple [--genus 8]
    stabverify scan --genus 9 --depth 2 [--cap N]

Exit codes: 0 when every genus is ok, 1 when a check fails (or a scan
stops at its node cap), 2 when the catalogs cannot be loaded or the
arguments are invalid.
"""

import argparse
import logging
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import __version__
from .api import parse_genera, run_scan, run_verify_nilpotent, run_verify_semisimple
from .catalog import resolve_catalog_dir
from .errors import CatalogError
from .partitions import Partition
from .reports import SCHEMA_VERSION, render_table, to_json
from .scan import ScanOptions

logger = logging.getLogger("stabverify")


@dataclass
class RunManifest:
    """Everything that determines a report; echoed into the JSON output."""
    command: str
    genera: List[int]
    depth: Optional[int] = None
    cap: Optional[int] = None
    max_root_order: Optional[int] = None
    m_range: Optional[Tuple[int, int]] = None
    output: Optional[str] = None
    format: str = "json"
    catalog: Optional[str] = None
    matrices: bool = True
    profiles: bool = False
    version: str = field(default=__version__)

    def __post_init__(self):
        for g in self.genera:
            if g not in (7, 8, 9, 10):
                raise ValueError(f"Genus must be one of 7, 8, 9, 10, got {g}")
        if self.depth is not None and self.depth < 0:
            raise ValueError(f"Depth must be non-negative, got {self.depth}")
        if self.format not in ("json", "text"):
            raise ValueError(f"Unknown format: {self.format}")

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["m_range"] = list(self.m_range) if self.m_range else None
        # the output path does not influence the report
        data.pop("output")
        return data


def parse_m_range(text: str) -> Tuple[int, int]:
    """Parse "LO:HI" (inclusive)."""
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Expected LO:HI, got {text!r}") from e
    if lo < 0 or lo > hi:
        raise argparse.ArgumentTypeError(f"Invalid m range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabverify",
        description="Exact dimension counts for stabilizers of generic subspaces of Mukai models.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--genus", default="all", help="7, 8, 9, 10, a comma list, or all")
    common.add_argument("--m-range", type=parse_m_range, default=None, metavar="LO:HI",
                        help="override the default range k..n-k (0 <= LO <= HI <= n)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--output", "-o", default=None, help="write the report to PATH")
    common.add_argument("--catalog", default=None,
                        help="catalog directory (default: $STABVERIFY_CATALOG or packaged)")
    common.add_argument("--profiles", action="store_true", help="include optimal profiles")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="count", default=0, help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings only")

    commands = parser.add_subparsers(dest="command", required=True)
    verify = commands.add_parser("verify", help="replay the catalogued orbit tables and strata")
    kinds = verify.add_subparsers(dest="kind", required=True)
    nilpotent = kinds.add_parser("nilpotent", parents=[common],
                                 help="unipotent criterion for every nilpotent orbit")
    nilpotent.add_argument("--no-matrices", action="store_true",
                           help="skip the matrix oracle in the table cross-check")
    kinds.add_parser("semisimple", parents=[common],
                     help="semisimple criterion for every catalogued stratum")

    scan = commands.add_parser("scan", parents=[common], help="search strata by collapsings")
    defaults = ScanOptions()
    scan.add_argument("--depth", type=int, default=defaults.depth,
                      help="collapsings per genus (default: 4 for genus 8, 3 otherwise)")
    scan.add_argument("--cap", type=int, default=defaults.node_cap, help="node cap")
    scan.add_argument("--max-root-order", type=int, default=defaults.max_root_order)
    return parser


def configure_logging(verbose: int, quiet: bool) -> None:
    if quiet:
        level = logging.WARNING
    elif verbose:
        level = logging.DEBUG
    else:
        level = logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------

def _heading(entry: Dict[str, Any]) -> str:
    lo, hi = entry["m_range"]
    return (f"Genus {entry['genus']}: {entry['group']} on {entry['representation']} "
            f"(n={entry['n']}, m in [{lo}, {hi}])")


def _marks(checks: Sequence[Dict[str, Any]], case: str) -> str:
    symbols = {"strict": "<", "equality-ok": "=", "exceptional": "!", "scalar": "*"}
    return " ".join(f"m{c['m']}{symbols[c['verdict']]}" for c in checks if c["case"] == case)


def _status(ok: bool) -> str:
    return "OK" if ok else "FAIL"


def render_nilpotent(entries: Sequence[Dict[str, Any]]) -> str:
    chunks = []
    for entry in entries:
        rows = [
            [o["label"], o["dim"], str(Partition.of(o["jordan"])), _marks(entry["checks"], o["label"])]
            for o in entry["orbits"]
        ]
        lines = [_heading(entry), render_table(("orbit", "dim", "Jordan type", "checks"), rows)]
        for text in entry["cross_validation"]["mismatches"]:
            lines.append(f"mismatch: {text}\n")
        equality = ", ".join(f"{x['case']} m={x['m']}" for x in entry["equality"]) or "none"
        lines.append(f"equality: {equality}\n")
        lines.append(f"status: {_status(entry['ok'])}\n")
        chunks.append("\n".join(lines))
    return "\n".join(chunks)


def render_semisimple(entries: Sequence[Dict[str, Any]]) -> str:
    chunks = []
    for entry in entries:
        rows = [
            [s["case"] or s["id"], str(Partition.of(s["partition"])), s["class_dim"],
             ",".join(str(m) for m in s["exceptional_m"]) or "-", s["description"]]
            for s in entry["strata"]
        ]
        lines = [_heading(entry),
                 render_table(("stratum", "partition", "class dim", "exceptional m", "element"), rows)]
        for text in entry["differences"]:
            lines.append(f"difference: {text}\n")
        lines.append(f"status: {_status(entry['ok'])}\n")
        chunks.append("\n".join(lines))
    return "\n".join(chunks)


def render_scan(entries: Sequence[Dict[str, Any]]) -> str:
    chunks = []
    for entry in entries:
        # ~name: same partition and class dimension only
        similar = {i: f"~{name}" for i, name in entry["signature_matches"].items()}
        rows = [
            [s["id"], s["depth"], str(Partition.of(s["partition"])), s["class_dim"],
             ",".join(str(m) for m in s["exceptional_m"]) or "-",
             s["case"] or similar.get(s["id"], "")]
            for s in entry["strata"]
        ]
        lines = [_heading(entry),
                 render_table(("stratum", "depth", "partition", "class dim", "exceptional m", "case"),
                              rows)]
        complete = "complete" if entry["complete"] else "stopped at node cap"
        lines.append(f"nodes: {entry['nodes']} ({complete})\n")
        if entry["unexpected_exceptional"]:
            lines.append(f"not catalogued: {', '.join(entry['unexpected_exceptional'])}\n")
        if entry["missed_exceptional"]:
            lines.append(f"not reached: {', '.join(entry['missed_exceptional'])}\n")
        lines.append(f"status: {_status(entry['ok'])}\n")
        chunks.append("\n".join(lines))
    return "\n".join(chunks)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_verify_nilpotent(manifest: RunManifest) -> List[Dict[str, Any]]:
    return run_verify_nilpotent(manifest.genera, manifest.catalog, manifest.m_range,
                                use_matrices=manifest.matrices, with_profiles=manifest.profiles)


def cmd_verify_semisimple(manifest: RunManifest) -> List[Dict[str, Any]]:
    return run_verify_semisimple(manifest.genera, manifest.catalog, manifest.m_range,
                                 with_profiles=manifest.profiles)


def cmd_scan(manifest: RunManifest) -> List[Dict[str, Any]]:
    options = ScanOptions(depth=manifest.depth,
                          node_cap=manifest.cap or ScanOptions().node_cap,
                          max_root_order=manifest.max_root_order or ScanOptions().max_root_order)
    return run_scan(manifest.genera, options, manifest.catalog, manifest.m_range)


COMMANDS: Dict[str, Tuple[Callable[[RunManifest], List[Dict[str, Any]]],
                          Callable[[Sequence[Dict[str, Any]]], str]]] = {
    "verify nilpotent": (cmd_verify_nilpotent, render_nilpotent),
    "verify semisimple": (cmd_verify_semisimple, render_semisimple),
    "scan": (cmd_scan, render_scan),
}


def manifest_from_args(args: argparse.Namespace) -> RunManifest:
    command = f"verify {args.kind}" if args.command == "verify" else args.command
    return RunManifest(
        command=command,
        genera=parse_genera(args.genus),
        depth=getattr(args, "depth", None),
        cap=getattr(args, "cap", None),
        max_root_order=getattr(args, "max_root_order", None),
        m_range=args.m_range,
        output=args.output,
        format=args.format,
        catalog=str(resolve_catalog_dir(args.catalog)) if args.catalog else None,
        matrices=not getattr(args, "no_matrices", False),
        profiles=args.profiles,
    )


def render(manifest: RunManifest, entries: List[Dict[str, Any]]) -> str:
    ok = all(entry["ok"] for entry in entries)
    if manifest.format == "text":
        return COMMANDS[manifest.command][1](entries)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": manifest.command,
        "manifest": manifest.to_dict(),
        "genera": entries,
        "ok": ok,
    }
    return to_json(payload)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    try:
        manifest = manifest_from_args(args)
    except ValueError as e:
        logger.error("%s", e)
        return 2

    runner = COMMANDS[manifest.command][0]
    try:
        entries = runner(manifest)
    except CatalogError as e:
        logger.error("Catalog error: %s", e)
        return 2
    except ValueError as e:
        logger.error("Invalid arguments: %s", e)
        return 2

    text = render(manifest, entries)
    if manifest.output:
        try:
            with open(manifest.output, "w", encoding="utf-8") as f:
                f.write(text)
        except OSError as e:
            logger.error("Failed to write %s: %s", manifest.output, e)
            return 2
    else:
        sys.stdout.write(text)
    return 0 if all(entry["ok"] for entry in entries) else 1


if __name__ == "__main__":
    sys.exit(main())
