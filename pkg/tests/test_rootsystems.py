"""Catalog data, positive-root generation, Weyl group closure."""

from math import lcm

import pytest

from conftest import ALL_TYPES
from linial.rootsystems import (
    GroupTooLargeError,
    catalog,
    highest_root,
    positive_roots,
    weyl_elements,
)

# label -> (marks incl. the extra 1, h, rho, rad_rho, f)
TABLE = {
    "A1": ((1, 1), 2, 1, 1, 2),
    "A5": ((1, 1, 1, 1, 1, 1), 6, 1, 1, 6),
    "B2": ((1, 1, 2), 4, 2, 2, 2),
    "B5": ((1, 1, 2, 2, 2, 2), 10, 2, 2, 2),
    "C3": ((1, 1, 2, 2), 6, 2, 2, 2),
    "D4": ((1, 1, 1, 1, 2), 8 - 2, 2, 2, 4),
    "D6": ((1, 1, 1, 1, 2, 2, 2), 10, 2, 2, 4),
    "E6": ((1, 1, 1, 2, 2, 2, 3), 12, 6, 6, 3),
    "E7": ((1, 1, 2, 2, 2, 3, 3, 4), 18, 12, 6, 2),
    "E8": ((1, 2, 2, 3, 3, 4, 4, 5, 6), 30, 60, 30, 1),
    "F4": ((1, 2, 2, 3, 4), 12, 12, 6, 1),
    "G2": ((1, 2, 3), 6, 6, 6, 1),
}


@pytest.mark.parametrize("label", sorted(TABLE))
def test_catalog_pinned_rows(label):
    marks, h, rho, rad, f = TABLE[label]
    info = catalog(label)
    assert tuple(info.marks) == marks
    assert info.coxeter_h == h
    assert info.period_rho == rho
    assert info.rad_rho == rad
    assert info.index_f == f


@pytest.mark.parametrize("label", ALL_TYPES)
def test_catalog_internal_consistency(label):
    info = catalog(label)
    assert info.marks[0] == 1
    assert sum(info.marks) == info.coxeter_h
    assert info.period_rho == lcm(*info.marks)
    assert len(info.marks) == info.rank + 1
    # distinct_marks: multiplicity bookkeeping
    for chat, lhat in info.distinct_marks:
        assert lhat + 1 == sum(1 for c in info.marks if c % chat == 0)
    # determinant of the Cartan matrix
    assert len(info.cartan) == info.rank


def test_distinct_marks_E7():
    info = catalog("E7")
    assert tuple(info.distinct_marks) == ((1, 7), (2, 3), (3, 1), (4, 0))


def test_label_parsing():
    assert catalog("B_3") == catalog("B3")
    for bad in ("H3", "B1", "C1", "D3", "E9", "E5", "F5", "G3", "A0", "X2", "B"):
        with pytest.raises(ValueError):
            catalog(bad)


@pytest.mark.parametrize("label", ALL_TYPES)
def test_positive_root_count(label):
    info = catalog(label)
    roots = positive_roots(info)
    assert len(roots) == info.rank * info.coxeter_h // 2
    assert len(set(roots)) == len(roots)
    for r in roots:
        assert all(m >= 0 for m in r.coords) and any(r.coords)


def test_positive_roots_A2():
    info = catalog("A2")
    coords = {r.coords for r in positive_roots(info)}
    assert coords == {(1, 0), (0, 1), (1, 1)}


@pytest.mark.parametrize("label", ALL_TYPES)
def test_highest_root_matches_marks(label):
    info = catalog(label)
    top = highest_root(info)
    assert tuple(sorted(top)) == tuple(info.marks[1:])


def test_highest_root_coords_exact():
    assert highest_root(catalog("G2")) == (2, 3)
    assert highest_root(catalog("F4")) == (2, 3, 4, 2)
    assert highest_root(catalog("E6")) == (1, 2, 2, 3, 2, 1)
    assert highest_root(catalog("E7")) == (2, 2, 3, 4, 3, 2, 1)
    assert highest_root(catalog("E8")) == (2, 3, 4, 6, 5, 4, 3, 2)
    assert highest_root(catalog("B4")) == (1, 2, 2, 2)
    assert highest_root(catalog("C4")) == (2, 2, 2, 1)
    assert highest_root(catalog("D5")) == (1, 2, 2, 1, 1)


WEYL_ORDERS = {
    "A2": 6,
    "A4": 120,
    "B2": 8,
    "B3": 48,
    "C3": 48,
    "D4": 192,
    "G2": 12,
    "F4": 1152,
}


@pytest.mark.parametrize("label", sorted(WEYL_ORDERS))
def test_weyl_group_order(label):
    info = catalog(label)
    elements = weyl_elements(info)
    assert len(elements) == WEYL_ORDERS[label]


def test_weyl_sign_vectors():
    info = catalog("A2")
    elements = weyl_elements(info)
    # identity: every simple root positive, the lowest root negative
    identity = next(e for e in elements if e.simple_images == ((1, 0), (0, 1)))
    assert identity.signs == (False, True, True)
    # the longest element flips everything
    assert any(e.signs == (True, False, False) for e in elements)


def test_weyl_cap():
    with pytest.raises(GroupTooLargeError):
        weyl_elements(catalog("B3"), cap=10)
    with pytest.raises(GroupTooLargeError):
        weyl_elements(catalog("E8"))
