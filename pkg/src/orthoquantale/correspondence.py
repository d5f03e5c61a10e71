"""Borceux-Van den Bossche endomorphisms and central boolean subalgebras.

The two sides of the correspondence are enumerated by different scans:

* central subalgebras: subsets of the center that contain 0 and 1 and are
  closed under meet, join and orthocomplement;
* endomorphisms: Moore families of the whole lattice (meet-closed subsets
  containing top), each turned into the closure ``a -> least member above a``
  and kept only if it passes :func:`check_bvb`.

An endomorphism satisfying the conditions is determined by its fixed points
(it sends ``a`` to the meet of the fixed points above ``a``), so the Moore
scan misses nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotCentralSubalgebra, PreconditionViolated, SizeLimitExceeded
from .lattice import (
    Endomap,
    OmlTable,
    ValidationReport,
    first_true,
    iter_bits,
    meet_above,
)
from .limits import DEFAULT_LIMITS, SizeLimits
from .logic import Sublattice, center_mask, sublattice

__all__ = [
    "CorrespondenceReport",
    "Endomap",
    "check_bvb",
    "check_fixed_point_meets",
    "endo_from_subalgebra",
    "enumerate_bvb_endos",
    "enumerate_central_boolean_subalgebras",
    "fixed_points",
    "verify_correspondence",
]

_CHUNK = 1 << 15


def _check_triples(report: ValidationReport, axiom_id: str, n: int, bad_for) -> None:
    # bad_for(a) -> n x n bool array; first hit in (a, b, c) order
    for a in range(n):
        hit = first_true(bad_for(a))
        if hit is not None:
            report.add(axiom_id, (a, *hit))
            return


def check_bvb(L: OmlTable, j: Endomap) -> ValidationReport:
    """Check that ``j`` is a closure operation satisfying the four conditions.

    Axiom ids: ``closure-monotone``, ``closure-idempotent``, ``bvb-1``
    (inflationary), ``bvb-2``, ``bvb-3-empty``, ``bvb-3``, ``bvb-4-empty`` and
    ``bvb-4``.  The family conditions are checked on the empty family and on
    all pairs; finite families follow by induction on the family size.
    """
    report = ValidationReport()
    n = L.n
    J = j.array
    leq, M, Jn = L.leq, L.meet, L.join

    report.add("closure-monotone", first_true(leq & ~leq[np.ix_(J, J)]))
    report.add("closure-idempotent", first_true(J[J] != J))
    report.add("bvb-1", first_true(~leq[np.arange(n), J]))
    # j(a ^ j(b)) == j(a) ^ j(b)
    report.add("bvb-2", first_true(J[M[:, J]] != M[np.ix_(J, J)]))

    # a ^ j(V{}) == V{}
    report.add("bvb-3-empty", first_true(M[:, J[L.bottom]] != L.bottom))
    j_of_join = J[Jn]

    def bad3(a):
        lhs = M[a, j_of_join]
        cut = M[a, J]
        return lhs != Jn[cut[:, None], cut[None, :]]

    _check_triples(report, "bvb-3", n, bad3)

    # (V{}) ^ j(b) == V{}
    report.add("bvb-4-empty", first_true(M[L.bottom, J] != L.bottom))
    cut_all = M[:, J]  # [a, b] = a ^ j(b)

    def bad4(a1):
        lhs = M[Jn[a1][:, None], J[None, :]]
        rhs = Jn[cut_all[a1][None, :], cut_all]
        return lhs != rhs

    _check_triples(report, "bvb-4", n, bad4)
    return report


def check_fixed_point_meets(L: OmlTable, j: Endomap) -> ValidationReport:
    """``j(a)`` equals the meet of the fixed points of ``j`` above ``a``, for every a."""
    report = ValidationReport()
    fixed = j.fixed_mask
    for a in range(L.n):
        if meet_above(L, a, fixed) != j(a):
            report.add("fixed-point-meet", (a,))
            break
    return report


def _require_bvb(L: OmlTable, j: Endomap) -> None:
    report = check_bvb(L, j)
    if not report.passed:
        v = report.violations[0]
        raise PreconditionViolated(
            f"endomap fails {v.axiom_id} at {v.witnesses}", report)


def fixed_points(L: OmlTable, j: Endomap) -> Sublattice:
    """Fixed-point set of ``j`` with verified closure flags (``j`` must pass check_bvb)."""
    _require_bvb(L, j)
    return sublattice(L, j.fixed_mask)


_REQUIRED_FLAGS = (
    "contains_bounds",
    "meet_closed",
    "join_closed",
    "complement_closed",
    "distributive",
    "central",
)


def endo_from_subalgebra(L: OmlTable, M: Sublattice) -> Endomap:
    """``a -> meet of the members of M above a``; M must be a central boolean subalgebra."""
    if M.parent is not L:
        raise NotCentralSubalgebra("same-parent")
    for flag in _REQUIRED_FLAGS:
        if not getattr(M.flags, flag):
            raise NotCentralSubalgebra(flag)
    return Endomap(L, tuple(meet_above(L, a, M.members) for a in range(L.n)))


# ---------------------------------------------------------------------------
# enumeration


def _closed_subsets(
    L: OmlTable,
    free: list[int],
    forced: int,
    ops: list[np.ndarray],
    with_ortho: bool,
) -> list[int]:
    """Masks ``forced | S`` (S ranging over subsets of ``free``) closed under ``ops``.

    Closure under each binary op is only tested on pairs whose result is
    neither operand, since the others hold trivially.  Scans in chunks,
    vectorized over the candidate subsets.
    """
    n = L.n
    universe = sorted(set(free) | set(iter_bits(forced)))
    constraints = []
    for op in ops:
        for i, x in enumerate(universe):
            for y in universe[i + 1:]:
                z = int(op[x, y])
                if z != x and z != y:
                    constraints.append((x, y, z))
    orthos = [(x, int(L.ortho[x])) for x in universe] if with_ortho else []

    free_arr = np.array(free, dtype=np.intp)
    shifts = np.arange(len(free), dtype=np.int64)
    forced_idx = np.array(list(iter_bits(forced)), dtype=np.intp)
    total = 1 << len(free)
    found = []
    for lo in range(0, total, _CHUNK):
        s = np.arange(lo, min(total, lo + _CHUNK), dtype=np.int64)
        mem = np.zeros((len(s), n), dtype=bool)
        mem[:, forced_idx] = True
        if len(free):
            mem[:, free_arr] = ((s[:, None] >> shifts[None, :]) & 1).astype(bool)
        ok = np.ones(len(s), dtype=bool)
        for x, ox in orthos:
            ok &= ~mem[:, x] | mem[:, ox]
        for x, y, z in constraints:
            ok &= ~(mem[:, x] & mem[:, y]) | mem[:, z]
        for sv in s[ok]:
            mask = forced
            for bit in iter_bits(int(sv)):
                mask |= 1 << free[bit]
            found.append(mask)
    return sorted(found)


def enumerate_central_boolean_subalgebras(
    L: OmlTable, limits: SizeLimits = DEFAULT_LIMITS
) -> list[Sublattice]:
    """All subsets of the center containing 0, 1 and closed under meet, join, complement.

    Ordered by membership bitmask.
    """
    z = center_mask(L)
    forced = (1 << L.bottom) | (1 << L.top)
    free = [x for x in iter_bits(z & ~forced)]
    if 1 << len(free) > limits.center_scan_max_subsets:
        raise SizeLimitExceeded("center subsets", 1 << len(free), limits.center_scan_max_subsets)
    masks = _closed_subsets(L, free, forced, [L.meet, L.join], with_ortho=True)
    return [sublattice(L, m, center_members=z) for m in masks]


def enumerate_bvb_endos(
    L: OmlTable, limits: SizeLimits = DEFAULT_LIMITS, *, join_prefilter: bool = True
) -> list[Endomap]:
    """All endomorphisms of ``L`` passing :func:`check_bvb`, ordered by fixed-point bitmask.

    Scans the 2**(n-1) subsets containing top for Moore families.  With
    ``join_prefilter`` families that are not join-closed are dropped before
    the full check: any qualifying j preserves binary joins (take a = 1 in
    the third condition), so its fixed points are join-closed.
    """
    if L.n > limits.moore_scan_max_n:
        raise SizeLimitExceeded("Moore scan elements", L.n, limits.moore_scan_max_n)
    free = [x for x in range(L.n) if x != L.top]
    ops = [L.meet, L.join] if join_prefilter else [L.meet]
    endos = []
    for mask in _closed_subsets(L, free, 1 << L.top, ops, with_ortho=False):
        j = Endomap(L, tuple(meet_above(L, a, mask) for a in range(L.n)))
        if check_bvb(L, j).passed:
            endos.append(j)
    return endos


@dataclass
class CorrespondenceReport:
    lattice: OmlTable
    subalgebras: list[Sublattice] = field(default_factory=list)
    endos: list[Endomap] = field(default_factory=list)
    forward_roundtrips: list[bool] = field(default_factory=list)
    backward_roundtrips: list[bool] = field(default_factory=list)
    counts_equal: bool = False

    @property
    def passed(self) -> bool:
        return (self.counts_equal and all(self.forward_roundtrips)
                and all(self.backward_roundtrips))

    def to_dict(self) -> dict:
        out = {
            "lattice": self.lattice.name,
            "n": self.lattice.n,
            "subalgebras": [s.elements for s in self.subalgebras],
            "endomorphisms": [list(j.image) for j in self.endos],
            "subalgebra_count": len(self.subalgebras),
            "endomorphism_count": len(self.endos),
            "forward_roundtrips": self.forward_roundtrips,
            "backward_roundtrips": self.backward_roundtrips,
            "counts_equal": self.counts_equal,
            "passed": self.passed,
        }
        if self.lattice.note:
            out["note"] = self.lattice.note
        return out


def verify_correspondence(L: OmlTable, limits: SizeLimits = DEFAULT_LIMITS) -> CorrespondenceReport:
    """Enumerate both sides and check that the two constructions are mutually inverse."""
    subalgebras = enumerate_central_boolean_subalgebras(L, limits)
    endos = enumerate_bvb_endos(L, limits)
    forward = [fixed_points(L, endo_from_subalgebra(L, M)).members == M.members
               for M in subalgebras]
    backward = [endo_from_subalgebra(L, fixed_points(L, j)) == j for j in endos]
    return CorrespondenceReport(
        lattice=L,
        subalgebras=subalgebras,
        endos=endos,
        forward_roundtrips=forward,
        backward_roundtrips=backward,
        counts_equal=len(subalgebras) == len(endos),
    )
