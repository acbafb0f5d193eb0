from fractions import Fraction

import pytest

from chamberkit.curves import (
    B_FAMILY,
    E_FAMILY,
    F_FAMILY,
    check_open_configuration,
    enumerate_negative_spheres,
    lemma_classes_audit,
    lemma_conclusion,
    min_exceptional_area,
    minimal_open_configuration,
    negative_spheres_agree,
    passes_constraints,
    square_zero_spheres,
)
from chamberkit.cone import random_face_form
from chamberkit.errors import NotReduced, OutOfRange, WrongBasis
from chamberkit.lattice import BasisTag, parse_class, parse_form
from chamberkit.reduction import random_reduced_bf_form, random_reduced_form
from chamberkit.roots import positive_roots

from .fixtures import *


def test_constraints():
    w = parse_form('(3, 1 | 1/2)')
    check = passes_constraints(parse_class('B - F', w.basis), w)
    assert check.area == 2
    assert check.area_ok
    assert check.genus == check.adjunction_value == 0
    check = passes_constraints(parse_class('B + F', w.basis), w)
    assert check.genus == 0
    with pytest.raises(WrongBasis):
        passes_constraints(parse_class('E1', BasisTag.BF(2)), w)


def test_lemma_conclusions():
    assert lemma_conclusion(1, -3, (1, 0)) is None
    assert lemma_conclusion(0, 0, (-1,)) is None
    assert lemma_conclusion(-1, 2, ()) == 'p < 0'
    assert lemma_conclusion(0, 2, ()) is not None
    assert lemma_conclusion(1, 0, (2,)) is not None
    assert lemma_conclusion(2, 0, ()) is not None


@pytest.mark.parametrize('n', [1, 2, 3])
def test_audit_on_reduced_forms(n, rng):
    for _ in range(3):
        w = random_reduced_bf_form(n, rng)
        report = lemma_classes_audit(w, bound=3)
        assert report.precondition_ok
        assert report.ok, report.violations
        assert report.checked == sum(report.census.values())
        assert report.census['p<0'] == 0


def test_audit_needs_reduced_form():
    w = parse_form('(1, 3 | 1/2)')
    with pytest.raises(NotReduced):
        lemma_classes_audit(w, bound=2)
    report = lemma_classes_audit(w, bound=2, strict=False)
    assert not report.precondition_ok


def test_families():
    w = parse_form('(3, 1 | 1/2)')
    families = {family.family: family for family in enumerate_negative_spheres(w)}
    assert set(families) == {B_FAMILY, F_FAMILY, E_FAMILY}
    assert parse_class('B - F', w.basis) in families[B_FAMILY].members
    assert parse_class('F - E1', w.basis) in families[F_FAMILY].members
    assert parse_class('E1', w.basis) in families[E_FAMILY].members
    assert all(member.square < 0 for family in families.values() for member in family.members)


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_negative_spheres_are_the_symplectic_roots(n, rng):
    for _ in range(5):
        assert negative_spheres_agree(random_reduced_bf_form(n, rng))


def test_families_need_bf_forms():
    with pytest.raises(WrongBasis):
        enumerate_negative_spheres(parse_form('(1 | 1/2, 1/3)'))


def test_square_zero_spheres():
    classes = square_zero_spheres(4)
    assert len(classes) == 10
    assert all(c.square == 0 for c in classes)
    assert len(square_zero_spheres(2)) == 3
    assert len(square_zero_spheres(0)) == 2
    with pytest.raises(OutOfRange):
        square_zero_spheres(5)


@pytest.mark.parametrize('k', [1, 3, 4, 5])
def test_least_exceptional_area_is_the_last_blow_up(k, rng):
    for _ in range(10):
        w = random_reduced_form(k, rng)
        best, value = min_exceptional_area(w)
        assert value == w.c(k)
        assert best == w.basis.e(k)


@pytest.mark.parametrize('k', [1, 3, 4, 5])
def test_least_exceptional_area_on_walls(k, rng):
    # ties on a wall still resolve to the last blow up
    for _ in range(10):
        _, w = random_face_form(k, rng)
        best, value = min_exceptional_area(w)
        assert value == w.c(k)
        assert best == w.basis.e(k)


def test_least_exceptional_area_on_two_blow_ups():
    w = parse_form('(1 | 1/2, 1/3)')
    best, value = min_exceptional_area(w)
    assert best == parse_class('H - E1 - E2', w.basis)
    assert value == Fraction(1, 6)


@pytest.mark.parametrize('basis', [
    BasisTag.H(2), BasisTag.H(3), BasisTag.H(4), BasisTag.H(5),
    BasisTag.BF(1), BasisTag.BF(2), BasisTag.BF(4),
])
def test_open_configurations_cover_the_roots(basis):
    report = check_open_configuration(basis)
    assert not set(report.uncovered) & set(positive_roots(basis))
    assert all(member.square == -1 for member in report.members)


def test_three_point_configuration_leaves_roots_uncovered():
    basis = BasisTag.BF(3)
    report = check_open_configuration(basis)
    assert not report.covers
    gaps = {parse_class('E1 - E2', basis), parse_class('E1 - E3', basis)}
    assert gaps <= set(report.uncovered)


def test_unknown_configuration():
    with pytest.raises(OutOfRange):
        minimal_open_configuration(BasisTag.H(6))
