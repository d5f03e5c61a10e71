"""Reading lattice/endomap JSON files and writing canonical JSON."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import IoError, MalformedInput
from .lattice import Endomap, LatticeSpec, OmlTable, spec_from_dict, table_to_dict


def _load_json(path) -> object:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc


def parse_lattice_file(path) -> LatticeSpec:
    """Parse a lattice JSON file; building the tables is left to the caller."""
    return spec_from_dict(_load_json(path), default_name=Path(path).stem)


def parse_endomap_file(path, parent: OmlTable) -> Endomap:
    """Accepts ``{"image": [...]}`` or a bare array of element indices."""
    data = _load_json(path)
    image = data.get("image") if isinstance(data, dict) else data
    if not isinstance(image, list):
        raise MalformedInput("expected an array of element indices", field="image")
    return Endomap(parent, tuple(image))


def dumps(payload: dict) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def table_to_json(table: OmlTable) -> str:
    return dumps(table_to_dict(table))
