from fractions import Fraction

import pytest

from chamberkit.errors import BasisMismatch, ParseError
from chamberkit.lattice import (
    BasisTag,
    FormClass,
    HomologyClass,
    canonical_class,
    change_basis,
    pairing,
    parse_class,
    parse_form,
    parse_rational,
    virtual_genus,
)


def test_pairing_in_both_bases():
    h3 = BasisTag.H(3)
    line = parse_class('H - E1 - E2', h3)
    assert line.square == -1
    assert pairing(line, h3.e(1)) == 1
    assert canonical_class(h3).dot(line) == -1

    bf2 = BasisTag.BF(2)
    b, f = bf2.unit('B'), bf2.unit('F')
    assert b.dot(f) == 1 and b.square == 0 and f.square == 0
    assert canonical_class(bf2).dot(b - f) == 0


def test_change_basis_is_an_isometry_and_keeps_the_canonical_class():
    h4, bf3 = BasisTag.H(4), BasisTag.BF(3)
    names = h4.names
    for a in names:
        for b in names:
            x, y = h4.unit(a), h4.unit(b)
            assert change_basis(x, bf3).dot(change_basis(y, bf3)) == x.dot(y)
    assert change_basis(canonical_class(h4), bf3) == canonical_class(bf3)
    assert change_basis(change_basis(parse_class('2H - E1 - E3', h4), bf3), h4) == parse_class('2H - E1 - E3', h4)


def test_change_basis_keeps_areas():
    w = parse_form('(1 | 1/2, 1/3, 1/6)')
    bf = change_basis(w, BasisTag.BF(2))
    assert bf.coeffs == (Fraction(2, 3), Fraction(1, 2), Fraction(1, 6), Fraction(1, 6))
    for name in w.basis.names:
        a = w.basis.unit(name)
        assert bf.area(change_basis(a, bf.basis)) == w.area(a)
    assert change_basis(bf, w.basis) == w


def test_h1_has_no_bf_counterpart():
    with pytest.raises(BasisMismatch):
        BasisTag.H(1).counterpart()
    with pytest.raises(BasisMismatch):
        change_basis(parse_form('(1 | 1/2, 1/3)'), BasisTag.BF(3))


def test_parse_form_picks_the_basis():
    assert parse_form('(1 | 1/3, 1/3, 1/3)').basis == BasisTag.H(3)
    assert parse_form('(2, 1 | 1/2)').basis == BasisTag.BF(1)
    assert parse_form('(3/2, 1 | )').basis == BasisTag.BF(0)


@pytest.mark.parametrize('text', ['(1 | 0.4, 0.3)', '(1 | 1e-3)', '(1 | 1/0)', '(2, 1/0 | 1/4)'])
def test_non_rational_literals_are_rejected(text):
    with pytest.raises(ParseError) as err:
        parse_form(text)
    assert err.value.exit_code == 1
    assert 'p/q' in ' '.join(err.value.hints if isinstance(err.value.hints, list) else [err.value.hints])


def test_parse_rational_and_class_literals():
    assert parse_rational('-3/6') == Fraction(-1, 2)
    h2 = BasisTag.H(2)
    assert parse_class('2H - E1 - E2', h2) == HomologyClass((2, -1, -1), h2)
    assert parse_class('-E1 + E2', h2).to_literal() == '-E1 + E2'
    with pytest.raises(ParseError):
        parse_class('H - E3', h2)
    with pytest.raises(ParseError):
        parse_class('H -', h2)


def test_virtual_genus():
    h3 = BasisTag.H(3)
    assert virtual_genus(parse_class('H', h3)) == 0
    assert virtual_genus(parse_class('3H', h3)) == 1
    assert virtual_genus(parse_class('E1 - E2', h3)) == 0


def test_forms_are_exact():
    with pytest.raises(AssertionError):
        FormClass((1.0, 0.5), BasisTag.H(1))
