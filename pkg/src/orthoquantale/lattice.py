"""Finite orthomodular lattices stored as tables.

An :class:`OmlTable` holds the order as a boolean matrix plus one bitmask per
element (``up[x]`` is the set of elements above ``x``, ``down[x]`` the set
below), and precomputed meet/join tables.  Tables are immutable and only come
out of :func:`build_lattice` (or the catalog), which validates them eagerly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    IndexOutOfRange,
    MalformedInput,
    NotALattice,
    NotAPoset,
    NotOrthomodular,
    NotOrtholattice,
)

# ---------------------------------------------------------------------------
# bitset helpers


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elems: Iterable[int]) -> int:
    mask = 0
    for e in elems:
        mask |= 1 << e
    return mask


def members_of(mask: int) -> list[int]:
    return list(iter_bits(mask))


def _rows_to_masks(matrix: np.ndarray) -> tuple[int, ...]:
    packed = np.packbits(matrix, axis=1, bitorder="little")
    return tuple(int.from_bytes(row.tobytes(), "little") for row in packed)


def _masks_to_rows(masks: Sequence[int], n: int) -> np.ndarray:
    nbytes = (n + 7) // 8
    raw = b"".join(m.to_bytes(nbytes, "little") for m in masks)
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8).reshape(len(masks), nbytes),
                         axis=1, bitorder="little")
    return bits[:, :n].astype(bool)


def first_true(arr: np.ndarray) -> tuple[int, ...] | None:
    """Lexicographically smallest index where ``arr`` is true, or None."""
    hits = np.argwhere(arr)
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Violation:
    axiom_id: str
    witnesses: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"axiom_id": self.axiom_id, "witnesses": list(self.witnesses)}


@dataclass
class ValidationReport:
    """Axiom violations, at most one (the lexicographically first witness) per axiom."""

    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def axiom_ids(self) -> list[str]:
        return [v.axiom_id for v in self.violations]

    def add(self, axiom_id: str, witness: tuple[int, ...] | None) -> None:
        if witness is not None:
            self.violations.append(Violation(axiom_id, tuple(witness)))

    def get(self, axiom_id: str) -> Violation | None:
        for v in self.violations:
            if v.axiom_id == axiom_id:
                return v
        return None

    def to_dict(self) -> dict:
        return {"passed": self.passed, "violations": [v.to_dict() for v in self.violations]}


# ---------------------------------------------------------------------------
# input spec


@dataclass(frozen=True, eq=False)
class LatticeSpec:
    """Raw description of a candidate lattice: ``covers`` or ``leq``, never both."""

    n: int
    ortho: tuple[int, ...]
    covers: tuple[tuple[int, int], ...] | None = None
    leq: np.ndarray | None = None
    labels: tuple[str, ...] | None = None
    name: str = "lattice"

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise MalformedInput(f"n must be a positive integer, got {self.n!r}", field="n")
        n = int(self.n)
        object.__setattr__(self, "n", n)
        if (self.covers is None) == (self.leq is None):
            raise MalformedInput("exactly one of covers/leq must be given", field="covers/leq")

        if self.covers is not None:
            covers = []
            for pair in self.covers:
                if len(pair) != 2:
                    raise MalformedInput(f"cover {pair!r} is not a pair", field="covers")
                lo, hi = (_index(x, n, "covers") for x in pair)
                covers.append((lo, hi))
            object.__setattr__(self, "covers", tuple(covers))
        else:
            leq = np.asarray(self.leq)
            if leq.shape != (n, n):
                raise MalformedInput(f"leq must be {n}x{n}, got shape {leq.shape}", field="leq")
            if not np.isin(leq, (0, 1)).all():
                raise MalformedInput("leq entries must be 0/1", field="leq")
            object.__setattr__(self, "leq", _frozen(leq.astype(bool)))

        if len(self.ortho) != n:
            raise MalformedInput(f"ortho must have {n} entries, got {len(self.ortho)}", field="ortho")
        object.__setattr__(self, "ortho", tuple(_index(x, n, "ortho") for x in self.ortho))

        if self.labels is None:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(n)))
        else:
            if len(self.labels) != n:
                raise MalformedInput(f"labels must have {n} entries", field="labels")
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))


def _index(x, n: int, fieldname: str) -> int:
    if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
        raise MalformedInput(f"element index must be an integer, got {x!r}", field=fieldname)
    if not 0 <= x < n:
        raise IndexOutOfRange(f"index {x} outside [0, {n})", field=fieldname)
    return int(x)


# ---------------------------------------------------------------------------
# tables


@dataclass(frozen=True, eq=False)
class OmlTable:
    name: str
    n: int
    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    ortho: np.ndarray
    bottom: int
    top: int
    labels: tuple[str, ...]
    up: tuple[int, ...]
    down: tuple[int, ...]
    note: str = ""

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"OmlTable({self.name!r}, n={self.n})"

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def element(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r} in {self.name}") from None

    def same_tables(self, other: OmlTable) -> bool:
        return (
            self.n == other.n
            and self.bottom == other.bottom
            and self.top == other.top
            and np.array_equal(self.leq, other.leq)
            and np.array_equal(self.meet, other.meet)
            and np.array_equal(self.join, other.join)
            and np.array_equal(self.ortho, other.ortho)
        )


@dataclass(frozen=True, eq=False)
class Endomap:
    """A total self-map of the elements of ``parent``."""

    parent: OmlTable
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(_index(x, self.parent.n, "image") for x in self.image)
        if len(image) != self.parent.n:
            raise MalformedInput(f"image must have {self.parent.n} entries, got {len(image)}",
                                 field="image")
        object.__setattr__(self, "image", image)

    def __call__(self, a: int) -> int:
        return self.image[a]

    def __eq__(self, other):
        if not isinstance(other, Endomap):
            return NotImplemented
        return self.parent is other.parent and self.image == other.image

    def __hash__(self):
        return hash((id(self.parent), self.image))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.image, dtype=np.intp)

    @property
    def fixed_mask(self) -> int:
        return mask_of(a for a, x in enumerate(self.image) if a == x)

    @classmethod
    def identity(cls, parent: OmlTable) -> Endomap:
        return cls(parent, tuple(range(parent.n)))


def bound_of(table: OmlTable, elems: Iterable[int], direction: str = "meet") -> int:
    """Fold the binary meet (or join) table over ``elems``.

    The empty meet is top and the empty join is bottom.
    """
    if direction == "meet":
        acc, op = table.top, table.meet
    elif direction == "join":
        acc, op = table.bottom, table.join
    else:
        raise ValueError(f"direction must be 'meet' or 'join', not {direction!r}")
    for e in elems:
        acc = op[acc, e]
    return int(acc)


def meet_above(table: OmlTable, a: int, mask: int) -> int:
    """Meet of the elements of ``mask`` lying above ``a``."""
    return bound_of(table, iter_bits(table.up[a] & mask), "meet")


def hasse_covers(table: OmlTable) -> list[tuple[int, int]]:
    """Covering pairs (lower, upper), sorted."""
    out = []
    for lo in range(table.n):
        strict_up = table.up[lo] & ~(1 << lo)
        for hi in iter_bits(strict_up):
            between = strict_up & table.down[hi] & ~(1 << hi)
            if not between:
                out.append((lo, hi))
    return out


# ---------------------------------------------------------------------------
# construction


def _order_from_covers(n: int, covers) -> tuple[np.ndarray | None, ValidationReport]:
    report = ValidationReport()
    up = [1 << i for i in range(n)]
    for lo, hi in covers:
        up[lo] |= 1 << hi
    for k in range(n):
        bit, row = 1 << k, up[k]
        for i in range(n):
            if up[i] & bit:
                up[i] |= row
    for i in range(n):
        for j in iter_bits(up[i] >> (i + 1) << (i + 1)):
            if up[j] >> i & 1:
                report.add("poset-antisymmetric", (i, j))
                return None, report
    return _masks_to_rows(up, n), report


def _order_from_leq(leq: np.ndarray) -> tuple[np.ndarray | None, ValidationReport]:
    report = ValidationReport()
    report.add("poset-reflexive", first_true(~np.diag(leq)))
    report.add("poset-antisymmetric", first_true(np.triu(leq & leq.T, k=1)))
    f = leq.astype(np.float32)
    trans_bad = ((f @ f) > 0) & ~leq
    hit = first_true(trans_bad)
    if hit is not None:
        a, c = hit
        b = int(np.argmax(leq[a] & leq[:, c]))
        report.add("poset-transitive", (a, b, c))
    return (None if report.violations else leq), report


def _assemble(spec: LatticeSpec) -> tuple[OmlTable | None, ValidationReport]:
    """Order, bounds and meet/join tables; the orthocomplement is not checked here."""
    n = spec.n
    if spec.covers is not None:
        leq, report = _order_from_covers(n, spec.covers)
    else:
        leq, report = _order_from_leq(spec.leq)
    if leq is None:
        return None, report

    up = _rows_to_masks(leq)
    down = _rows_to_masks(np.ascontiguousarray(leq.T))
    by_down = {m: x for x, m in enumerate(down)}
    by_up = {m: x for x, m in enumerate(up)}
    meet = np.empty((n, n), dtype=np.intp)
    join = np.empty((n, n), dtype=np.intp)
    missing_meet = missing_join = None
    for a in range(n):
        meet[a, a] = join[a, a] = a
        for b in range(a + 1, n):
            if leq[a, b]:
                m, j = a, b
            elif leq[b, a]:
                m, j = b, a
            else:
                m = by_down.get(down[a] & down[b])
                j = by_up.get(up[a] & up[b])
                if m is None:
                    missing_meet = missing_meet or (a, b)
                    m = -1
                if j is None:
                    missing_join = missing_join or (a, b)
                    j = -1
            meet[a, b] = meet[b, a] = m
            join[a, b] = join[b, a] = j
    report.add("lattice-meet", missing_meet)
    report.add("lattice-join", missing_join)
    if not report.passed:
        return None, report

    full = (1 << n) - 1
    bottom = next(x for x in range(n) if up[x] == full)
    top = next(x for x in range(n) if down[x] == full)
    table = OmlTable(
        name=spec.name,
        n=n,
        leq=_frozen(np.array(leq, dtype=bool)),
        meet=_frozen(meet),
        join=_frozen(join),
        ortho=_frozen(np.array(spec.ortho, dtype=np.intp)),
        bottom=bottom,
        top=top,
        labels=spec.labels,
        up=up,
        down=down,
    )
    return table, report


def _structure_violations(t: OmlTable, report: ValidationReport) -> None:
    n = t.n
    leq = t.leq
    report.add("poset-reflexive", first_true(~np.diag(leq)))
    report.add("poset-antisymmetric", first_true(np.triu(leq & leq.T, k=1)))
    for a in range(n):
        for b in iter_bits(t.up[a]):
            if t.up[b] & ~t.up[a]:
                c = next(iter_bits(t.up[b] & ~t.up[a]))
                report.add("poset-transitive", (a, b, c))
                break
        else:
            continue
        break
    if not (leq[t.bottom].all() and leq[:, t.top].all()):
        report.add("bounds", (t.bottom, t.top))
    if np.any(t.meet < 0) or np.any(t.meet >= n) or np.any(t.join < 0) or np.any(t.join >= n):
        report.add("table-range", ())
        return
    bad_meet = bad_join = None
    for a in range(n):
        for b in range(n):
            m, j = t.meet[a, b], t.join[a, b]
            if bad_meet is None and t.down[m] != t.down[a] & t.down[b]:
                bad_meet = (a, b)
            if bad_join is None and t.up[j] != t.up[a] & t.up[b]:
                bad_join = (a, b)
        if bad_meet and bad_join:
            break
    report.add("meet-glb", bad_meet)
    report.add("join-lub", bad_join)


def _ortho_violations(t: OmlTable, report: ValidationReport) -> None:
    n = t.n
    o = t.ortho
    out_of_range = first_true((o < 0) | (o >= n))
    if out_of_range is not None:
        report.add("ortho-range", out_of_range)
        return
    idx = np.arange(n)
    leq = t.leq
    report.add("ortho-involution", first_true(o[o] != idx))
    oo = leq[np.ix_(o, o)]
    report.add("ortho-antitone", first_true(leq & ~oo.T))
    report.add("de-morgan", first_true(o[t.join] != t.meet[np.ix_(o, o)]))
    report.add("complement-join", first_true(t.join[idx, o] != t.top))
    report.add("complement-meet", first_true(t.meet[idx, o] != t.bottom))
    # a <= b  =>  b == a v (a' ^ b)
    restored = t.join[idx[:, None], t.meet[o, :]]
    report.add("orthomodular", first_true(leq & (restored != idx[None, :])))


def validate_oml(obj: OmlTable | LatticeSpec) -> ValidationReport:
    """Check every orthomodular-lattice axiom, one witness per failed axiom.

    Accepts either a built table or a raw :class:`LatticeSpec`; for a spec the
    poset and lattice stages are reported too (and stop the scan if they fail).
    """
    if isinstance(obj, LatticeSpec):
        table, report = _assemble(obj)
        if table is None:
            return report
    else:
        table, report = obj, ValidationReport()
        _structure_violations(table, report)
        if not report.passed:
            return report
    _ortho_violations(table, report)
    return report


_ERROR_FOR = {
    "poset": NotAPoset,
    "lattice": NotALattice,
    "orthomodular": NotOrthomodular,
}


def _raise_for(report: ValidationReport) -> None:
    v = report.violations[0]
    exc = _ERROR_FOR.get(v.axiom_id.split("-")[0], NotOrtholattice)
    raise exc(v.axiom_id, v.witnesses, report)


def build_lattice(spec: LatticeSpec) -> OmlTable:
    """Derive and validate the tables of ``spec``.

    Raises NotAPoset, NotALattice, NotOrtholattice or NotOrthomodular with the
    first witness found.
    """
    table, report = _assemble(spec)
    if table is None:
        _raise_for(report)
    _ortho_violations(table, report)
    if not report.passed:
        _raise_for(report)
    return table


# ---------------------------------------------------------------------------
# dict conversion (the lattice JSON format)


def spec_from_dict(data: dict, default_name: str = "lattice") -> LatticeSpec:
    if not isinstance(data, dict):
        raise MalformedInput("top level must be a JSON object")
    for key in ("n", "ortho"):
        if key not in data:
            raise MalformedInput("missing required field", field=key)
    has_covers, has_leq = "covers" in data, "leq" in data
    if has_covers == has_leq:
        raise MalformedInput("exactly one of covers/leq must be present", field="covers/leq")
    name = data.get("name", default_name)
    if not isinstance(name, str):
        raise MalformedInput("name must be a string", field="name")
    ortho = data["ortho"]
    if not isinstance(ortho, list):
        raise MalformedInput("ortho must be an array", field="ortho")
    labels = data.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or not all(isinstance(x, str) for x in labels)
    ):
        raise MalformedInput("labels must be an array of strings", field="labels")

    covers = leq = None
    if has_covers:
        covers = data["covers"]
        if not isinstance(covers, list) or not all(
            isinstance(p, list) and len(p) == 2 for p in covers
        ):
            raise MalformedInput("covers must be an array of [lower, upper] pairs", field="covers")
        covers = [tuple(p) for p in covers]
    else:
        rows = data["leq"]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise MalformedInput("leq must be an array of arrays", field="leq")
        if not all(x in (0, 1) and not isinstance(x, float) for r in rows for x in r):
            raise MalformedInput("leq entries must be 0 or 1", field="leq")
        if len({len(r) for r in rows}) > 1:
            raise MalformedInput("leq rows have different lengths", field="leq")
        leq = np.array(rows, dtype=bool).reshape(len(rows), -1)
    return LatticeSpec(
        n=data["n"],
        ortho=tuple(ortho),
        covers=covers,
        leq=leq,
        labels=None if labels is None else tuple(labels),
        name=name,
    )


def spec_to_dict(spec: LatticeSpec) -> dict:
    out = {"name": spec.name, "n": spec.n, "ortho": list(spec.ortho), "labels": list(spec.labels)}
    if spec.covers is not None:
        out["covers"] = [list(p) for p in spec.covers]
    else:
        out["leq"] = spec.leq.astype(int).tolist()
    return out


def table_to_dict(table: OmlTable) -> dict:
    """Canonical lattice JSON for a built table (Hasse covers, sorted)."""
    return {
        "name": table.name,
        "n": table.n,
        "covers": [list(p) for p in hasse_covers(table)],
        "ortho": [int(x) for x in table.ortho],
        "labels": list(table.labels),
    }


def table_spec(table: OmlTable) -> LatticeSpec:
    return LatticeSpec(
        n=table.n,
        ortho=tuple(int(x) for x in table.ortho),
        covers=tuple(hasse_covers(table)),
        labels=table.labels,
        name=table.name,
    )
