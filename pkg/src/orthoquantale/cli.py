"""Command-line interface.

Exit status: 0 when the requested check passes, 1 when it fails (the report
carries witnesses), 2 on any input or configuration error.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__, catalog
from .correspondence import (
    check_bvb,
    enumerate_bvb_endos,
    enumerate_central_boolean_subalgebras,
    verify_correspondence,
)
from .errors import InputError, LatticeAxiomError, OrthoError, SizeLimitExceeded
from .lattice import OmlTable, build_lattice, table_to_dict, validate_oml
from .limits import SizeLimits
from .logic import center, central_cover
from .serialize import dumps, parse_endomap_file, parse_lattice_file

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2

# extra operands each command takes after the lattice file
COMMANDS = {
    "validate": 0,
    "center": 0,
    "cover": 1,
    "check-bvb": 1,
    "enumerate-subalgebras": 0,
    "enumerate-bvb": 0,
    "verify-correspondence": 0,
}


@dataclass
class CliConfig:
    command: str
    input_path: Path | None = None
    output_format: str = "json"
    size_limits: SizeLimits = field(default_factory=SizeLimits)
    args: tuple = ()
    seed_catalog: str | None = None

    def __post_init__(self):
        if self.output_format not in ("json", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def _load(config: CliConfig) -> OmlTable:
    if config.seed_catalog:
        return catalog.by_name(config.seed_catalog, limits=config.size_limits)
    return build_lattice(parse_lattice_file(config.input_path))


def _element(table: OmlTable, token: str) -> int:
    if token in table.labels:
        return table.element(token)
    try:
        x = int(token)
    except ValueError:
        raise InputError(f"unknown element {token!r}") from None
    if not 0 <= x < table.n:
        raise InputError(f"element {x} outside [0, {table.n})")
    return x


def _execute(config: CliConfig) -> tuple[int, dict]:
    cmd = config.command
    if cmd == "catalog":
        if not config.args:
            raise InputError("catalog needs a lattice name")
        name, *params = config.args
        table = catalog.by_name(str(name), *(int(p) for p in params), limits=config.size_limits)
        return EXIT_OK, table_to_dict(table)

    if cmd == "validate" and not config.seed_catalog:
        spec = parse_lattice_file(config.input_path)
        report = validate_oml(spec)
        return (EXIT_OK if report.passed else EXIT_FAILED), {"lattice": spec.name, **report.to_dict()}

    table = _load(config)
    out: dict = {"lattice": table.name}
    if table.note:
        out["note"] = table.note

    if cmd == "validate":
        report = validate_oml(table)
        out.update(report.to_dict())
    elif cmd == "center":
        z = center(table)
        out.update(passed=True, center=z.elements, labels=[table.labels[x] for x in z],
                   flags=z.flags.to_dict())
    elif cmd == "cover":
        a = _element(table, str(config.args[0]))
        e = central_cover(table, a)
        out.update(passed=True, element=a, cover=e, cover_label=table.labels[e])
    elif cmd == "check-bvb":
        j = parse_endomap_file(config.args[0], table)
        report = check_bvb(table, j)
        out.update(image=list(j.image), **report.to_dict())
    elif cmd == "enumerate-subalgebras":
        subs = enumerate_central_boolean_subalgebras(table, config.size_limits)
        out.update(passed=True, count=len(subs), subalgebras=[s.elements for s in subs])
    elif cmd == "enumerate-bvb":
        endos = enumerate_bvb_endos(table, config.size_limits)
        out.update(passed=True, count=len(endos), endomorphisms=[list(j.image) for j in endos])
    elif cmd == "verify-correspondence":
        out.update(verify_correspondence(table, config.size_limits).to_dict())
    else:
        raise InputError(f"unknown command {cmd!r}")
    return (EXIT_OK if out["passed"] else EXIT_FAILED), out


def _as_text(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            lines += [f"  - {v}" for v in value]
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def run_command(config: CliConfig) -> tuple[int, str]:
    """Execute one command; returns the exit code and the serialized output."""
    try:
        code, payload = _execute(config)
    except LatticeAxiomError as exc:
        code, payload = EXIT_INPUT, {"passed": False, "error": {
            "type": type(exc).__name__, "axiom_id": exc.axiom_id,
            "witnesses": list(exc.witnesses)}}
    except (InputError, SizeLimitExceeded, OrthoError, ValueError) as exc:
        code, payload = EXIT_INPUT, {"passed": False, "error": {
            "type": type(exc).__name__, "message": str(exc)}}
    if config.command != "catalog" or code != EXIT_OK:
        payload = {"command": config.command, "version": __version__, **payload}
    if config.output_format == "text":
        return code, _as_text(payload)
    return code, dumps(payload)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("json", "text"),
                        default=argparse.SUPPRESS)
    common.add_argument("--max-n", type=int, default=argparse.SUPPRESS,
                        help="largest lattice for the Moore-family scan")
    common.add_argument("--max-center-subsets", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed-catalog", default=argparse.SUPPRESS, metavar="NAME",
                        help="use a catalog lattice (e.g. MO2, B3, G12, MO2xB1) instead of a file")

    parser = argparse.ArgumentParser(
        prog="orthoquantale", parents=[common],
        description="Finite orthomodular lattices, quantales and closure endomorphisms.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, extra in COMMANDS.items():
        p = sub.add_parser(name, parents=[common])
        p.add_argument("operands", nargs="*", metavar="ARG",
                       help="lattice file" + (" then one more argument" if extra else ""))
    p = sub.add_parser("catalog", parents=[common], help="print a catalog lattice as JSON")
    p.add_argument("operands", nargs="+", metavar="NAME_OR_PARAM")
    return parser


def main(argv=None) -> int:
    ns = _parser().parse_args(argv)
    opts = vars(ns)
    try:
        limits = SizeLimits.from_env()
        if "max_n" in opts:
            limits = dataclasses.replace(limits, moore_scan_max_n=opts["max_n"])
        if "max_center_subsets" in opts:
            limits = dataclasses.replace(limits, center_scan_max_subsets=opts["max_center_subsets"])
    except ValueError as exc:
        print(f"orthoquantale: {exc}", file=sys.stderr)
        return EXIT_INPUT

    seed = opts.get("seed_catalog")
    operands = list(ns.operands)
    input_path = None
    if ns.command != "catalog":
        extra = COMMANDS[ns.command]
        if len(operands) == extra + 1 and not seed:
            input_path = Path(operands.pop(0))
        elif len(operands) != extra or not seed:
            print(f"orthoquantale {ns.command}: expected a lattice file"
                  f"{' (or --seed-catalog)' if not seed else ''} and {extra} more argument(s)",
                  file=sys.stderr)
            return EXIT_INPUT

    config = CliConfig(
        command=ns.command,
        input_path=input_path,
        output_format=opts.get("output_format", "json"),
        size_limits=limits,
        args=tuple(operands),
        seed_catalog=seed,
    )
    code, output = run_command(config)
    sys.stdout.write(output)
    return code
