"""
Faces of the normalized reduced cone P^k.

For k >= 3 the closure of P^k is the simplex with vertices

    M = (1/3, .., 1/3)     O = 0     A = (1, 0, ..)     B = (1/2, 1/2, 0, ..)
    C = (1/3, 1/3, 1/3, 0, ..)       D = (1/3, 1/3, 1/3, 1/3, 0, ..)   ...

and every vertex other than M sits opposite the wall of one simple root
(O <-> H-E1-E2-E3, A <-> E1-E2, B <-> E2-E3, C <-> E3-E4, D <-> E4-E5).
A face is labelled by M plus the letters whose roots have positive area on it.
"""

__package__ = 'chamberkit'

import random

from itertools import combinations
from fractions import Fraction
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import NotAdmissible, NotNormalized, NotReduced, OutOfRange
from .lattice import BasisTag, FormClass, HomologyClass, check_k
from .reduction import is_reduced
from .roots import (
    DynkinType,
    ambient_type,
    lagrangian_system,
    positive_root_count,
    positive_split,
    simple_root_edges,
)
from .util import enforce_types, fraction_str


LETTER_ORDER = 'OABCDEFG'

# the two-point blow up has no monotone vertex inside its chamber
SMALL_K_FACES = {
    1: (('OA', (Fraction(1, 2),)),),
    2: (('OB', (Fraction(1, 4), Fraction(1, 4))),
        ('BOA', (Fraction(1, 2), Fraction(1, 6)))),
}


@dataclass(frozen=True)
class FaceDescriptor:
    k: int
    label: Optional[str]
    strict_edges: Tuple[str, ...]
    gamma_L: DynkinType
    N: int
    N_L: int
    representative: FormClass
    conditions: str

    def __post_init__(self):
        self.typecheck()

    def typecheck(self) -> None:
        assert self.N + self.N_L == positive_root_count(ambient_type(self.representative.basis))
        assert self.label is None or self.k <= 2 or self.label == 'M' + ''.join(self.strict_edges)

    def _asdict(self):
        return {
            'k': self.k,
            'label': self.label,
            'strictEdges': list(self.strict_edges),
            'gammaL': str(self.gamma_L),
            'N': self.N,
            'NL': self.N_L,
            'representative': self.representative.to_literal(),
            'conditions': self.conditions,
        }


@dataclass(frozen=True)
class AdmissibleLabelSet:
    classes: Tuple[HomologyClass, ...]

    def __post_init__(self):
        object.__setattr__(self, 'classes', tuple(self.classes))
        self.typecheck()

    def typecheck(self) -> None:
        if len(set(self.classes)) != len(self.classes):
            raise NotAdmissible('label sets hold distinct classes')
        for a in self.classes:
            if a.square >= 0:
                raise NotAdmissible(f'{a} has square {a.square}, label sets hold negative classes')
        for a, b in combinations(self.classes, 2):
            if a.dot(b) < 0:
                raise NotAdmissible(f'{a} and {b} pair to {a.dot(b)} < 0')


@enforce_types
def codim_of_label_set(c: AdmissibleLabelSet) -> int:
    """real codimension 2 * sum(-A.A - 1) of the stratum labelled by c"""
    return 2 * sum(-a.square - 1 for a in c.classes)


### Vertices and conditions


def vertex(letter: str, k: int) -> Tuple[Fraction, ...]:
    zero, third = Fraction(0), Fraction(1, 3)
    if letter == 'M':
        return tuple([third] * k)
    if letter == 'O':
        return tuple([zero] * k)
    if letter == 'A':
        return tuple([Fraction(1)] + [zero] * (k - 1))
    if letter == 'B':
        return tuple([Fraction(1, 2)] * 2 + [zero] * (k - 2))
    j = LETTER_ORDER.index(letter)
    return tuple([third] * j + [zero] * (k - j))


def centroid(points: Sequence[Tuple[Fraction, ...]]) -> Tuple[Fraction, ...]:
    return tuple(sum(coords, Fraction(0)) / len(points) for coords in zip(*points))


def face_conditions(w: FormClass, strict: Sequence[str]) -> str:
    k = w.basis.n
    if k == 1:
        return '0<c1<1'
    if k == 2:
        return 'c1>c2' if 'A' in strict else 'c1=c2'
    lam = '<' if 'O' in strict else '='
    chain = 'c1'
    for i in range(1, k):
        chain += ('>' if LETTER_ORDER[i] in strict else '=') + f'c{i + 1}'
    return f'λ{lam}1; {chain}'


### Faces


def _check_normalized_reduced(w: FormClass) -> None:
    if not w.basis.is_h:
        raise NotReduced(f'faces are labelled in the H basis, got {w.basis}')
    if not is_reduced(w):
        raise NotReduced(f'{w} is not reduced', hints='Run chamberkit reduce first')
    if not w.normalized:
        raise NotNormalized(f'{w} has H area {fraction_str(w.nu)}', hints='Use reduce --normalize to scale H to area 1')


@enforce_types
def identify_face(w: FormClass) -> FaceDescriptor:
    """which wall or chamber of P^k the reduced normalized form w lies on"""

    _check_normalized_reduced(w)
    k = w.basis.n
    check_k(k)
    strict = tuple(letter for letter, root in simple_root_edges(w.basis) if w.area(root) > 0)
    split = positive_split(w)
    gamma = lagrangian_system(w)

    if k == 1:
        label: Optional[str] = 'OA'
    elif k == 2:
        label = 'BOA' if strict else 'OB'
    elif k <= 5:
        label = 'M' + ''.join(strict)
    else:
        label = None

    return FaceDescriptor(
        k=k,
        label=label,
        strict_edges=strict,
        gamma_L=gamma,
        N=split.N,
        N_L=split.N_L,
        representative=w,
        conditions=face_conditions(w, strict),
    )


def face_letters(k: int) -> str:
    return 'O' + LETTER_ORDER[1:k]


def face_representative(k: int, letters: str) -> FormClass:
    """centroid of M and the vertices named by letters"""
    points = [vertex('M', k), *(vertex(letter, k) for letter in letters)]
    return FormClass((Fraction(1), *centroid(points)), BasisTag.H(k))


@enforce_types
def enumerate_faces(k: int) -> List[FaceDescriptor]:
    """one descriptor per face of P^k, ordered by number of letters then O, A, B, C, D"""

    check_k(k, 1, 5)
    if k in SMALL_K_FACES:
        return [
            identify_face(FormClass((Fraction(1), *sizes), BasisTag.H(k)))
            for _, sizes in SMALL_K_FACES[k]
        ]

    letters = face_letters(k)
    faces = []
    for size in range(len(letters) + 1):
        for chosen in combinations(letters, size):
            faces.append(identify_face(face_representative(k, ''.join(chosen))))
    return faces


def faces_by_label(k: int) -> Dict[str, FaceDescriptor]:
    return {face.label: face for face in enumerate_faces(k) if face.label}


def random_face_form(k: int,
                     rng: Optional[random.Random]=None,
                     spread: int=12) -> Tuple[FaceDescriptor, FormClass]:
    """a face of P^k picked at random, and a random point on it"""

    rng = rng or random.Random()
    face = rng.choice(enumerate_faces(k))
    assert face.label is not None
    # the letters of a label are exactly the vertices spanning its face
    points = [vertex(letter, k) for letter in face.label]
    weights = [Fraction(rng.randint(1, spread)) for _ in points]
    total = sum(weights)
    sizes = tuple(
        sum((wt * p[i] for wt, p in zip(weights, points)), Fraction(0)) / total
        for i in range(k)
    )
    w = FormClass((Fraction(1), *sizes), BasisTag.H(k))
    assert identify_face(w).label == face.label, f'{w} is not on face {face.label}'
    return face, w


### Blow downs and edge relations


@enforce_types
def blow_down(w: FormClass) -> FormClass:
    """project to c_k = 0 and forget E_k"""
    if not w.basis.is_h or w.basis.n < 2:
        raise OutOfRange(f'cannot blow down {w.basis}')
    return FormClass(w.coeffs[:-1], BasisTag.H(w.basis.n - 1))


@enforce_types
def in_closed_cone(w: FormClass) -> bool:
    """membership in the closure of the normalized reduced cone"""
    if not w.basis.is_h or not w.normalized:
        return False
    c = w.sizes
    k = len(c)
    if any(c[i] < c[i + 1] for i in range(k - 1)) or c[-1] < 0:
        return False
    return sum(c[:3]) <= 1 if k >= 2 else c[0] <= 1


def edge_relations(k: int) -> List[Tuple[str, bool, bool]]:
    """per face: (label, SS = union of edge SS, LS = intersection of edge LS)"""

    check_k(k, 3, 5)
    edges = {
        letter: positive_split(face_representative(k, letter))
        for letter in face_letters(k)
    }
    results = []
    for face in enumerate_faces(k):
        split = positive_split(face.representative)
        union = set().union(*(set(edges[x].symplectic) for x in face.strict_edges))
        if face.strict_edges:
            intersection = set.intersection(*(set(edges[x].lagrangian) for x in face.strict_edges))
        else:
            intersection = set(split.lagrangian) | set(split.symplectic)
        assert face.label is not None
        results.append((face.label, set(split.symplectic) == union, set(split.lagrangian) == intersection))
    return results
