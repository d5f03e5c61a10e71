"""Quantum-logic connectives and the center of an orthomodular lattice.

Operand order, once: ``finch_and(L, a, b)`` is (a v b') ^ b and
``sasaki_hook(L, a, b)`` is (a ^ b) v a'.  The Finch product is not
commutative, so the order matters everywhere below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .lattice import (
    Endomap,
    OmlTable,
    ValidationReport,
    first_true,
    iter_bits,
    mask_of,
    meet_above,
)


def sasaki_hook(L: OmlTable, a: int, b: int) -> int:
    return int(L.join[L.meet[a, b], L.ortho[a]])


def finch_and(L: OmlTable, a: int, b: int) -> int:
    return int(L.meet[L.join[a, L.ortho[b]], b])


def compatible(L: OmlTable, a: int, b: int) -> bool:
    """``b C a``: b &F a equals a ^ b."""
    return finch_and(L, b, a) == L.meet[a, b]


def finch_table(L: OmlTable) -> np.ndarray:
    """``T[a, b] = finch_and(L, a, b)`` for all pairs."""
    return L.meet[L.join[:, L.ortho], np.arange(L.n)[None, :]]


def hook_table(L: OmlTable) -> np.ndarray:
    return L.join[L.meet, L.ortho[:, None]]


def check_sasaki_adjunction(L: OmlTable) -> ValidationReport:
    """x &F b <= c  iff  x <= (b -> c), over every triple (x, b, c)."""
    report = ValidationReport()
    F, H = finch_table(L), hook_table(L)
    for x in range(L.n):
        lhs = L.leq[F[x][:, None], np.arange(L.n)[None, :]]  # [b, c]
        rhs = L.leq[x, H]
        hit = first_true(lhs != rhs)
        if hit is not None:
            report.add("sasaki-adjunction", (x, *hit))
            break
    return report


# ---------------------------------------------------------------------------
# sublattices


@dataclass(frozen=True)
class ClosureFlags:
    contains_bounds: bool
    meet_closed: bool
    join_closed: bool
    complement_closed: bool
    distributive: bool
    central: bool

    @property
    def boolean_subalgebra(self) -> bool:
        return (self.contains_bounds and self.meet_closed and self.join_closed
                and self.complement_closed and self.distributive)

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


@dataclass(frozen=True, eq=False)
class Sublattice:
    """A subset of ``parent`` with exhaustively computed closure flags."""

    parent: OmlTable
    members: int
    flags: ClosureFlags

    def __contains__(self, x: int) -> bool:
        return bool(self.members >> x & 1)

    def __len__(self) -> int:
        return self.members.bit_count()

    def __iter__(self):
        return iter_bits(self.members)

    @property
    def elements(self) -> list[int]:
        return list(iter_bits(self.members))

    def __repr__(self) -> str:
        return f"Sublattice({self.parent.name}, {self.elements})"


def _is_distributive(L: OmlTable, idx: np.ndarray) -> bool:
    M, J = L.meet, L.join
    for a in idx:
        lhs = M[a, J[np.ix_(idx, idx)]]
        rhs = J[M[a, idx][:, None], M[a, idx][None, :]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def sublattice(L: OmlTable, elems: Iterable[int] | int, center_members: int | None = None) -> Sublattice:
    """Wrap a subset of ``L``, computing every closure flag by exhaustive scan."""
    mask = elems if isinstance(elems, int) else mask_of(elems)
    if mask >> L.n:
        raise ValueError(f"members outside [0, {L.n})")
    idx = np.array(list(iter_bits(mask)), dtype=np.intp)
    inside = np.zeros(L.n, dtype=bool)
    inside[idx] = True
    if center_members is None:
        center_members = center_mask(L)
    flags = ClosureFlags(
        contains_bounds=bool(inside[L.bottom] and inside[L.top]),
        meet_closed=bool(inside[L.meet[np.ix_(idx, idx)]].all()),
        join_closed=bool(inside[L.join[np.ix_(idx, idx)]].all()),
        complement_closed=bool(inside[L.ortho[idx]].all()),
        distributive=_is_distributive(L, idx),
        central=mask & ~center_members == 0,
    )
    return Sublattice(L, mask, flags)


# ---------------------------------------------------------------------------
# center and central cover


def center_mask(L: OmlTable) -> int:
    F = finch_table(L)
    ok = (F == L.meet).all(axis=1) & (F.T == L.meet).all(axis=1)
    return mask_of(int(i) for i in np.flatnonzero(ok))


def center(L: OmlTable) -> Sublattice:
    """Elements a with a &F b = b &F a = a ^ b for every b."""
    mask = center_mask(L)
    return sublattice(L, mask, center_members=mask)


def central_cover(L: OmlTable, a: int, center_members: int | None = None) -> int:
    """Least central element above ``a``."""
    if center_members is None:
        center_members = center_mask(L)
    return meet_above(L, a, center_members)


def central_cover_endo(L: OmlTable) -> Endomap:
    z = center_mask(L)
    return Endomap(L, tuple(meet_above(L, a, z) for a in range(L.n)))
