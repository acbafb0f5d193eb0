import pytest

from chamberkit.errors import NotReduced, NotSimpleSystem, OutOfRange, ParseError, UnrecognizedDiagram
from chamberkit.lattice import BasisTag, canonical_class, parse_class, parse_form
from chamberkit.roots import (
    DynkinType,
    ambient_type,
    bfs_weyl_order,
    dynkin_classify,
    enumerate_exceptional,
    enumerate_roots,
    lagrangian_system,
    positive_root_count,
    positive_roots,
    positive_split,
    root_system,
    roots_by_degree,
    simple_roots,
    weyl_order,
)

from .fixtures import *


ROOT_COUNTS = {1: 0, 2: 2, 3: 8, 4: 20, 5: 40, 6: 72, 7: 126, 8: 240}
EXCEPTIONAL_COUNTS = {1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}


@pytest.mark.parametrize('k', range(1, 9))
def test_root_counts(k):
    roots = enumerate_roots(k)
    assert len(roots) == ROOT_COUNTS[k]
    canonical = canonical_class(BasisTag.H(k))
    for root in roots:
        assert root.square == -2
        assert root.dot(canonical) == 0


@pytest.mark.parametrize('k', range(1, 9))
def test_exceptional_counts(k):
    classes = enumerate_exceptional(k)
    assert len(classes) == EXCEPTIONAL_COUNTS[k]
    assert all(c.square == -1 for c in classes)


def test_roots_are_closed_under_negation():
    roots = set(enumerate_roots(5))
    assert all(-root in roots for root in roots)


def test_degrees_of_e8_roots():
    by_degree = roots_by_degree(enumerate_roots(8).roots)
    assert by_degree[0] == 56
    assert by_degree[1] == by_degree[-1] == 56
    assert by_degree[2] == by_degree[-2] == 28
    assert by_degree[3] == by_degree[-3] == 8


@pytest.mark.parametrize('k', range(2, 9))
def test_simple_roots_span_the_ambient_type(k):
    basis = BasisTag.H(k)
    ambient = ambient_type(basis)
    assert dynkin_classify(simple_roots(basis)) == ambient
    assert 2 * positive_root_count(ambient) == len(root_system(basis))
    assert len(positive_roots(basis)) == positive_root_count(ambient)


def test_bf_roots_match_h_roots():
    assert len(root_system(BasisTag.BF(2))) == 8
    assert len(root_system(BasisTag.BF(0))) == 2
    assert dynkin_classify(simple_roots(BasisTag.BF(4))) == DynkinType.parse('D5')


@pytest.mark.parametrize('text', ['A1', 'A1×A2', 'A4', 'D4', 'D5', 'E6'])
def test_weyl_order_by_orbit(text):
    t = DynkinType.parse(text)
    assert bfs_weyl_order(t) == weyl_order(t)


def test_weyl_orders():
    assert weyl_order(DynkinType.parse('A1×A2')) == 12
    assert weyl_order(DynkinType.parse('D5')) == 1920
    assert weyl_order(DynkinType.parse('E8')) == 696729600
    assert weyl_order(DynkinType.parse('trivial')) == 1


def test_dynkin_parsing():
    assert str(DynkinType.parse('A2 x A1')) == 'A1×A2'
    assert DynkinType.parse('D3') == DynkinType.parse('A3')
    assert DynkinType.parse('D2') == DynkinType.parse('A1×A1')
    with pytest.raises(ParseError):
        DynkinType.parse('B2')


def test_classify_rejects_bad_systems():
    h4 = BasisTag.H(4)
    with pytest.raises(NotSimpleSystem):
        dynkin_classify([parse_class('E1 - E2', h4), parse_class('E1', h4)])
    with pytest.raises(NotSimpleSystem):
        dynkin_classify([parse_class('E1 - E2', h4), parse_class('E2 - E1', h4)])


def test_classify_rejects_cycles():
    h4 = BasisTag.H(4)
    cycle = [
        parse_class('E1 - E2', h4),
        parse_class('E2 - E3', h4),
        parse_class('E3 - E1', h4),
    ]
    assert dynkin_classify(cycle[:2]) == DynkinType.parse('A2')
    with pytest.raises(UnrecognizedDiagram):
        dynkin_classify(cycle)


def test_split_of_monotone_form():
    w = parse_form('(1 | 1/3, 1/3, 1/3, 1/3, 1/3)')
    split = positive_split(w)
    assert split.N == 0
    assert split.N_L == 20
    assert lagrangian_system(w) == DynkinType.parse('D5')


def test_split_of_generic_form():
    w = parse_form('(1 | 1/3, 1/4, 1/5, 1/6)')
    assert positive_split(w).N == 10
    assert lagrangian_system(w).is_trivial


def test_split_needs_reduced_form():
    with pytest.raises(NotReduced):
        positive_split(parse_form('(1 | 1/4, 1/3)'))


def test_k_range():
    with pytest.raises(OutOfRange):
        enumerate_roots(9)
