import pytest

from chamberkit.cone import (
    AdmissibleLabelSet,
    blow_down,
    codim_of_label_set,
    edge_relations,
    enumerate_faces,
    face_representative,
    faces_by_label,
    identify_face,
    in_closed_cone,
    random_face_form,
)
from chamberkit.errors import NotAdmissible, NotNormalized, NotReduced, OutOfRange
from chamberkit.lattice import BasisTag, parse_class, parse_form
from chamberkit.reduction import is_reduced
from chamberkit.roots import DynkinType

from .fixtures import *


@pytest.mark.parametrize('k,count', [(1, 1), (2, 2), (3, 8), (4, 16), (5, 32)])
def test_face_counts(k, count):
    faces = enumerate_faces(k)
    assert len(faces) == count
    assert len({face.label for face in faces}) == count


def test_label_order():
    labels = [face.label for face in enumerate_faces(3)]
    assert labels == ['M', 'MO', 'MA', 'MB', 'MOA', 'MOB', 'MAB', 'MOAB']


def test_small_k_faces():
    assert [face.label for face in enumerate_faces(1)] == ['OA']
    ob, boa = enumerate_faces(2)
    assert (ob.label, str(ob.gamma_L), ob.N) == ('OB', 'A1', 0)
    assert (boa.label, str(boa.gamma_L), boa.N) == ('BOA', 'trivial', 1)


@pytest.mark.parametrize('k', [1, 2, 3, 4, 5])
def test_random_face_forms_stay_on_their_face(k, rng):
    labels = set()
    for _ in range(30):
        face, w = random_face_form(k, rng)
        found = identify_face(w)
        assert found.label == face.label
        assert (found.N, found.gamma_L) == (face.N, face.gamma_L)
        labels.add(face.label)
    if k <= 2:
        assert len(labels) == k
    else:
        assert len(labels) > 1


def test_k3_faces():
    faces = faces_by_label(3)
    assert faces['M'].gamma_L == DynkinType.parse('A1×A2')
    assert faces['M'].N == 0
    assert faces['MO'].gamma_L == DynkinType.parse('A2')
    assert faces['MA'].gamma_L == DynkinType.parse('A1×A1')
    assert faces['MOAB'].gamma_L.is_trivial
    assert faces['MOAB'].N == 4


@pytest.mark.parametrize('k', [3, 4, 5])
def test_representatives_identify_their_face(k):
    for face in enumerate_faces(k):
        assert is_reduced(face.representative)
        assert identify_face(face.representative).label == face.label


def test_identify_face_conditions():
    face = identify_face(parse_form('(1 | 1/3, 1/3, 1/3, 1/3, 1/3)'))
    assert face.label == 'M'
    assert face.conditions == 'λ=1; c1=c2=c3=c4=c5'
    face = identify_face(parse_form('(1 | 1/2, 1/4, 1/8)'))
    assert face.label == 'MOAB'
    assert face.conditions == 'λ<1; c1>c2>c3'


def test_identify_face_errors():
    with pytest.raises(NotNormalized):
        identify_face(parse_form('(2 | 1, 1/2, 1/4)'))
    with pytest.raises(NotReduced):
        identify_face(parse_form('(1 | 1/4, 1/2, 1/8)'))
    with pytest.raises(OutOfRange):
        enumerate_faces(6)


@pytest.mark.parametrize('k', [3, 4, 5])
def test_edge_relations(k):
    relations = edge_relations(k)
    assert len(relations) == 2 ** k
    assert all(union_ok and intersection_ok for _, union_ok, intersection_ok in relations)


def test_blow_down():
    w = blow_down(parse_form('(1 | 1/2, 1/4, 0)'))
    assert w == parse_form('(1 | 1/2, 1/4)')
    with pytest.raises(OutOfRange):
        blow_down(parse_form('(1 | 1/2)'))


def test_closed_cone():
    assert in_closed_cone(parse_form('(1 | 1/3, 1/3, 1/3)'))
    assert in_closed_cone(face_representative(4, 'OA'))
    assert in_closed_cone(parse_form('(1 | 1/2, 1/2, 0)'))
    assert not in_closed_cone(parse_form('(1 | 1/2, 1/2, 1/2)'))
    assert not in_closed_cone(parse_form('(2 | 1/2, 1/4, 1/8)'))
    assert not in_closed_cone(parse_form('(1 | 1/4, 1/2)'))


def test_admissible_label_sets():
    h3 = BasisTag.H(3)
    labels = AdmissibleLabelSet((parse_class('E1 - E2', h3), parse_class('E3', h3)))
    assert codim_of_label_set(labels) == 2
    assert codim_of_label_set(AdmissibleLabelSet(())) == 0
    with pytest.raises(NotAdmissible):
        AdmissibleLabelSet((parse_class('E1 - E2', h3), parse_class('E1', h3)))
    with pytest.raises(NotAdmissible):
        AdmissibleLabelSet((parse_class('H', h3),))
    with pytest.raises(NotAdmissible):
        AdmissibleLabelSet((parse_class('E1', h3), parse_class('E1', h3)))
