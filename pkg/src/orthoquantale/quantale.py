"""The product ``a & b = a ^ j(b)`` induced by an endomorphism, and its axioms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .correspondence import _check_triples, _require_bvb
from .lattice import Endomap, OmlTable, ValidationReport, first_true, iter_bits
from .logic import finch_table


@dataclass(frozen=True, eq=False)
class QuantaleTable:
    parent: OmlTable
    amp: np.ndarray
    source_endo: Endomap

    def __call__(self, a: int, b: int) -> int:
        return int(self.amp[a, b])


def quantale_from_endo(L: OmlTable, j: Endomap) -> QuantaleTable:
    amp = L.meet[:, j.array]
    amp.setflags(write=False)
    return QuantaleTable(L, amp, j)


def check_quantale_axioms(L: OmlTable, q: QuantaleTable) -> ValidationReport:
    """Associativity, two-sided distributivity over joins, a&1 = a and a&a = a.

    Works on the product of any endomap, so a failing report carries a
    counterexample.  Distributivity is checked on the empty family and on all
    pairs, which covers every finite family.
    """
    report = ValidationReport()
    A, Jn, n = q.amp, L.join, L.n
    idx = np.arange(n)

    _check_triples(report, "associativity", n,
                   lambda a: A[A[a][:, None], idx[None, :]] != A[a][A])
    report.add("left-distributive-empty", first_true(A[:, L.bottom] != L.bottom))
    _check_triples(report, "left-distributive", n,
                   lambda a: A[a][Jn] != Jn[A[a][:, None], A[a][None, :]])
    report.add("right-distributive-empty", first_true(A[L.bottom, :] != L.bottom))
    _check_triples(report, "right-distributive", n,
                   lambda a: A[Jn[a]] != Jn[A[a][None, :], A])
    report.add("right-sided", first_true(A[:, L.top] != idx))
    report.add("idempotent", first_true(A[idx, idx] != idx))
    return report


def check_finch_dominance(L: OmlTable, q: QuantaleTable) -> ValidationReport:
    """``a & b <= a &F j(b)`` for every pair."""
    F = finch_table(L)
    bound = F[:, q.source_endo.array]
    report = ValidationReport()
    report.add("finch-dominance", first_true(~L.leq[q.amp, bound]))
    return report


def fixed_point_locale_check(L: OmlTable, j: Endomap) -> ValidationReport:
    """Check that the fixed points of ``j`` form a locale inside ``L``.

    Both empty bounds must be fixed, binary meets and joins of fixed points
    must stay fixed (so the sub-structure is a complete lattice whose joins
    agree with those of ``L``), and meet must distribute over join.
    """
    _require_bvb(L, j)
    report = ValidationReport()
    fixed = list(iter_bits(j.fixed_mask))
    inside = np.zeros(L.n, dtype=bool)
    inside[fixed] = True
    idx = np.array(fixed, dtype=np.intp)

    if not inside[L.bottom]:
        report.add("locale-empty-join", (L.bottom,))
    if not inside[L.top]:
        report.add("locale-empty-meet", (L.top,))
    sub = np.ix_(idx, idx)
    hit = first_true(~inside[L.meet[sub]])
    report.add("locale-meet-closed", None if hit is None else tuple(int(idx[i]) for i in hit))
    hit = first_true(~inside[L.join[sub]])
    report.add("locale-join-closed", None if hit is None else tuple(int(idx[i]) for i in hit))
    for a in fixed:
        cut = L.meet[a, idx]
        bad = L.meet[a, L.join[sub]] != L.join[cut[:, None], cut[None, :]]
        hit = first_true(bad)
        if hit is not None:
            report.add("locale-distributive", (a, int(idx[hit[0]]), int(idx[hit[1]])))
            break
    return report
