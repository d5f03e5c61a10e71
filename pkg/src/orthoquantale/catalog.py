"""Named example lattices, all built through :func:`build_lattice`."""

from __future__ import annotations

import dataclasses
import re

import numpy as np

from .errors import SizeLimitExceeded
from .lattice import LatticeSpec, OmlTable, build_lattice
from .limits import DEFAULT_LIMITS, SizeLimits

G12_NOTE = "G12 realized as MO2 x B1 (12 elements, 4-element center)"


def boolean_algebra(k: int, limits: SizeLimits = DEFAULT_LIMITS) -> OmlTable:
    """Power set of ``k`` atoms; element index = membership bitmask."""
    if k < 0:
        raise ValueError("atom count must be non-negative")
    n = 1 << k
    if n > limits.max_elements:
        raise SizeLimitExceeded("boolean algebra elements", n, limits.max_elements)
    idx = np.arange(n)
    leq = (idx[:, None] & ~idx[None, :]) == 0
    labels = ["{" + ",".join(str(i) for i in range(k) if x >> i & 1) + "}" for x in range(n)]
    spec = LatticeSpec(n=n, ortho=tuple(int(x) for x in (n - 1) ^ idx), leq=leq,
                       labels=tuple(labels), name=f"B{k}")
    return build_lattice(spec)


def mo(n: int) -> OmlTable:
    """Horizontal sum of ``n`` four-element blocks.

    Index 0 is bottom, then a_1, a_1', ..., a_n, a_n', and top is last.
    """
    if n < 1:
        raise ValueError("MO_n needs at least one block")
    size = 2 * n + 2
    top = size - 1
    atoms = range(1, top)
    covers = [(0, x) for x in atoms] + [(x, top) for x in atoms]
    ortho = [top] + [x + 1 if x % 2 else x - 1 for x in atoms] + [0]
    labels = ["0"]
    for i in range(1, n + 1):
        labels += [f"a{i}", f"a{i}'"]
    labels.append("1")
    return build_lattice(LatticeSpec(n=size, ortho=tuple(ortho), covers=tuple(covers),
                                     labels=tuple(labels), name=f"MO{n}"))


def mo_atom(n: int, i: int) -> int:
    """Index of a_i (1-based) in ``mo(n)``; its complement is the next index."""
    if not 1 <= i <= n:
        raise ValueError(f"block {i} outside 1..{n}")
    return 2 * i - 1


def product(a: OmlTable, b: OmlTable, limits: SizeLimits = DEFAULT_LIMITS) -> OmlTable:
    """Componentwise product; the pair (x, y) has index ``x * len(b) + y``."""
    n = a.n * b.n
    if n > limits.max_elements:
        raise SizeLimitExceeded("product elements", n, limits.max_elements)
    leq = np.kron(a.leq, b.leq).astype(bool)
    ortho = (a.ortho[:, None] * b.n + b.ortho[None, :]).ravel()
    labels = tuple(f"({x},{y})" for x in a.labels for y in b.labels)
    spec = LatticeSpec(n=n, ortho=tuple(int(x) for x in ortho), leq=leq, labels=labels,
                       name=f"{a.name}x{b.name}")
    return build_lattice(spec)


def g12() -> OmlTable:
    table = product(mo(2), boolean_algebra(1))
    return dataclasses.replace(table, name="G12", note=G12_NOTE)


def hexagon_spec() -> LatticeSpec:
    """The ortholattice O6 (0 < a < b < 1, 0 < b' < a' < 1): not orthomodular."""
    labels = ("0", "a", "b", "b'", "a'", "1")
    covers = ((0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5))
    return LatticeSpec(n=6, ortho=(5, 4, 3, 2, 1, 0), covers=covers, labels=labels, name="O6")


_TOKEN = re.compile(r"([A-Za-z]+)(\d*)")


def by_name(name: str, *params: int, limits: SizeLimits = DEFAULT_LIMITS) -> OmlTable:
    """Look up a catalog lattice by name.

    Accepts ``("MO", 2)``, ``"MO2"``, ``("B", 3)``, ``"boolean3"``, ``"G12"`` and
    products written with ``x``, e.g. ``"MO2xB1"``.
    """
    if "x" in name[1:] and not params:
        parts = [p for p in re.split(r"x(?=[A-Za-z])", name) if p]
        if len(parts) > 1:
            table = by_name(parts[0], limits=limits)
            for part in parts[1:]:
                table = product(table, by_name(part, limits=limits), limits)
            return table
    m = _TOKEN.fullmatch(name.strip())
    if not m:
        raise ValueError(f"unknown catalog lattice {name!r}")
    kind, digits = m.group(1).lower(), m.group(2)
    args = list(params) or ([int(digits)] if digits else [])
    if kind == "g" and args == [12] or kind == "g12":
        return g12()
    if kind in ("mo", "m"):
        if len(args) != 1:
            raise ValueError("MO needs one parameter (block count)")
        return mo(args[0])
    if kind in ("b", "boolean", "bool"):
        if len(args) != 1:
            raise ValueError("boolean algebra needs one parameter (atom count)")
        return boolean_algebra(args[0], limits)
    raise ValueError(f"unknown catalog lattice {name!r}")
