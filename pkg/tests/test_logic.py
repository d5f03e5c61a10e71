import pytest

from orthoquantale import catalog
from orthoquantale.logic import (
    center,
    central_cover,
    central_cover_endo,
    check_sasaki_adjunction,
    compatible,
    finch_and,
    finch_table,
    hook_table,
    sasaki_hook,
    sublattice,
)

from conftest import full_catalog, small_catalog
from oracles import Slow

A1, A1_, A2, A2_ = 1, 2, 3, 4  # MO2 atoms


def test_hook_examples(mo2):
    for b in mo2.elements:
        assert sasaki_hook(mo2, mo2.top, b) == b
    for a in mo2.elements:
        assert sasaki_hook(mo2, a, mo2.bottom) == mo2.ortho[a]
    assert sasaki_hook(mo2, A1, A2) == A1_


def test_finch_examples(mo2, g12):
    for L in (mo2, g12):
        for a in L.elements:
            assert finch_and(L, a, L.top) == a
            assert finch_and(L, L.top, a) == a
            assert finch_and(L, a, a) == a


def test_compatible_examples(mo2, b3):
    assert all(compatible(b3, a, b) for a in b3.elements for b in b3.elements)
    assert not compatible(mo2, A1, A2)
    for L in (mo2, b3):
        for a in L.elements:
            assert compatible(L, a, int(L.ortho[a]))


@pytest.mark.parametrize("table", full_catalog(), ids=lambda t: t.name)
def test_tables_match_slow_formulas(table):
    slow = Slow(table)
    F, H = finch_table(table), hook_table(table)
    for a in table.elements:
        for b in table.elements:
            assert F[a, b] == slow.finch(a, b) == finch_and(table, a, b)
            assert H[a, b] == slow.hook(a, b) == sasaki_hook(table, a, b)


@pytest.mark.parametrize("table", small_catalog(), ids=lambda t: t.name)
def test_sasaki_adjunction_loops(table):
    for x in table.elements:
        for b in table.elements:
            for c in table.elements:
                assert table.le(finch_and(table, x, b), c) == table.le(x, sasaki_hook(table, b, c))
    assert check_sasaki_adjunction(table).passed


def test_adjunction_check_catches_a_wrong_hook(mo2):
    # with the hook's operands swapped the adjunction must fail somewhere
    bad = any(
        mo2.le(finch_and(mo2, x, b), c) != mo2.le(x, sasaki_hook(mo2, c, b))
        for x in mo2.elements for b in mo2.elements for c in mo2.elements
    )
    assert bad


@pytest.mark.parametrize("table", full_catalog(), ids=lambda t: t.name)
def test_compatibility_is_symmetric_in_effect(table):
    for a in table.elements:
        for b in table.elements:
            if compatible(table, a, b):
                assert finch_and(table, a, b) == table.meet[a, b]


@pytest.mark.parametrize("table", full_catalog(), ids=lambda t: t.name)
def test_center_properties(table):
    z = center(table)
    assert z.elements == Slow(table).center()
    assert z.flags.boolean_subalgebra and z.flags.central
    for c in z:
        assert all(compatible(table, c, b) and compatible(table, b, c) for b in table.elements)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_mo_center_trivial(n):
    t = catalog.mo(n)
    assert center(t).elements == [t.bottom, t.top]


def test_boolean_center_is_everything(b3):
    assert len(center(b3)) == 8


def test_g12_center_size(g12):
    assert len(center(g12)) == 4


def test_central_cover_examples(mo2, g12):
    z = center(g12)
    assert central_cover(g12, g12.bottom) == g12.bottom
    for c in z:
        assert central_cover(g12, c) == c
    for atom in (A1, A1_, A2, A2_):
        assert central_cover(mo2, atom) == mo2.top
    a0 = g12.element("(a1,{})")
    assert central_cover(g12, a0) == g12.element("(1,{})") == 10


@pytest.mark.parametrize("table", full_catalog(), ids=lambda t: t.name)
def test_central_cover_is_a_central_closure(table):
    z = center(table)
    e = central_cover_endo(table)
    for a in table.elements:
        assert e(a) in z
        assert table.le(a, e(a))
        assert e(e(a)) == e(a)
        for b in table.elements:
            if table.le(a, b):
                assert table.le(e(a), e(b))
        # least central element above a
        assert all(table.le(e(a), c) for c in z if table.le(a, c))


def test_central_cover_endo_examples(b3, mo2):
    assert central_cover_endo(b3).image == tuple(range(8))
    assert central_cover_endo(mo2).image == (0, 5, 5, 5, 5, 5)


def test_sublattice_flags(mo2):
    square = sublattice(mo2, [0, A1, A2, 5])
    assert square.flags.distributive and not square.flags.complement_closed
    m3 = sublattice(mo2, [0, A1, A2, A2_, 5])
    assert m3.flags.contains_bounds and m3.flags.meet_closed and m3.flags.join_closed
    assert not m3.flags.complement_closed
    assert not m3.flags.distributive
    assert not m3.flags.central
    chain = sublattice(mo2, [0, A1, A1_, 5])
    assert chain.flags.boolean_subalgebra and not chain.flags.central
    assert len(chain) == 4 and A1 in chain and A2 not in chain
    with pytest.raises(ValueError):
        sublattice(mo2, [7])
