__package__ = 'chamberkit'

import re

from math import factorial, isqrt
from collections import deque
from fractions import Fraction
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from sympy.utilities.iterables import multiset_permutations

from .config import ORBIT_LIMIT
from .errors import NotReduced, NotSimpleSystem, OutOfRange, ParseError, UnrecognizedDiagram
from .lattice import BasisTag, FormClass, HomologyClass, change_basis, check_k, parse_class
from .reduction import is_reduced
from .util import enforce_types, parallel_map


# letters naming the root edges through the monotone vertex M
EDGE_LETTERS = 'OABCDEFG'

# Weyl group orders of the exceptional types, the classical ones have closed forms
E_WEYL_ORDERS = {6: 51840, 7: 2903040, 8: 696729600}
E_POSITIVE_ROOTS = {6: 36, 7: 63, 8: 120}

AMBIENT_TYPES = {
    1: 'trivial',
    2: 'A1',
    3: 'A1×A2',
    4: 'A4',
    5: 'D5',
    6: 'E6',
    7: 'E7',
    8: 'E8',
}


### Dynkin types


@dataclass(frozen=True)
class DynkinType:
    components: Tuple[Tuple[str, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        normalized = []
        for family, rank in self.components:
            if family == 'D' and rank == 2:
                normalized += [('A', 1), ('A', 1)]
            elif family == 'D' and rank == 3:
                normalized.append(('A', 3))
            else:
                normalized.append((family, rank))
        object.__setattr__(self, 'components', tuple(sorted(normalized)))
        self.typecheck()

    def typecheck(self) -> None:
        for family, rank in self.components:
            assert family in ('A', 'D', 'E'), f'unknown Dynkin family {family}'
            assert rank >= 1
            assert family != 'D' or rank >= 4
            assert family != 'E' or rank in (6, 7, 8)

    @classmethod
    def parse(cls, text: str) -> 'DynkinType':
        text = text.strip()
        if text.lower() in ('trivial', '', '∅', 'empty'):
            return cls(())
        components = []
        for part in re.split(r'\s*[×x*]\s*', text):
            match = re.match(r'^([ADE])_?(\d+)$', part.strip())
            if not match:
                raise ParseError(f'Could not parse Dynkin type {text!r}', hints='Write types like A1×A2, D4 or trivial')
            components.append((match.group(1), int(match.group(2))))
        return cls(tuple(components))

    @property
    def rank(self) -> int:
        return sum(rank for _, rank in self.components)

    @property
    def is_trivial(self) -> bool:
        return not self.components

    def __str__(self) -> str:
        if not self.components:
            return 'trivial'
        return '×'.join(f'{family}{rank}' for family, rank in self.components)

    def to_literal(self) -> str:
        return str(self)


def _component_weyl_order(family: str, rank: int) -> int:
    if family == 'A':
        return factorial(rank + 1)
    if family == 'D':
        return 2 ** (rank - 1) * factorial(rank)
    return E_WEYL_ORDERS[rank]


def _component_positive_roots(family: str, rank: int) -> int:
    if family == 'A':
        return rank * (rank + 1) // 2
    if family == 'D':
        return rank * (rank - 1)
    return E_POSITIVE_ROOTS[rank]


@enforce_types
def weyl_order(t: DynkinType) -> int:
    order = 1
    for family, rank in t.components:
        order *= _component_weyl_order(family, rank)
    return order


@enforce_types
def positive_root_count(t: DynkinType) -> int:
    return sum(_component_positive_roots(family, rank) for family, rank in t.components)


def ambient_type(basis: BasisTag) -> DynkinType:
    """type of the full root system R(X)"""
    if basis.is_bf and basis.n == 0:
        return DynkinType((('A', 1),))
    k = basis.n if basis.is_h else basis.n + 1
    return DynkinType.parse(AMBIENT_TYPES[k])


def _component_edges(family: str, rank: int) -> List[Tuple[int, int]]:
    if family == 'A':
        return [(i, i + 1) for i in range(rank - 1)]
    if family == 'D':
        return [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    return [(i, i + 1) for i in range(rank - 2)] + [(2, rank - 1)]


def cartan_matrix(t: DynkinType) -> List[List[int]]:
    size = t.rank
    matrix = [[2 if i == j else 0 for j in range(size)] for i in range(size)]
    start = 0
    for family, rank in t.components:
        for i, j in _component_edges(family, rank):
            matrix[start + i][start + j] = matrix[start + j][start + i] = -1
        start += rank
    return matrix


@enforce_types
def bfs_weyl_order(t: DynkinType, limit: Optional[int]=None) -> int:
    """size of the Weyl orbit of rho = (1, .., 1) in fundamental weight coordinates"""

    limit = ORBIT_LIMIT if limit is None else limit
    cartan = cartan_matrix(t)
    rho = tuple([1] * t.rank)
    seen = {rho}
    queue = deque([rho])
    while queue:
        weight = queue.popleft()
        for i, row in enumerate(cartan):
            if weight[i] == 0:
                continue
            image = tuple(x - weight[i] * a for x, a in zip(weight, row))
            if image not in seen:
                seen.add(image)
                queue.append(image)
                if len(seen) > limit:
                    raise OutOfRange(f'Weyl orbit of {t} exceeds {limit} weights', hints='Raise ORBIT_LIMIT')
    return len(seen)


def _arm_lengths(graph: nx.Graph, center) -> Tuple[int, ...]:
    rest = graph.copy()
    rest.remove_node(center)
    return tuple(sorted(len(part) for part in nx.connected_components(rest)))


@enforce_types
def dynkin_classify(simple_roots: list) -> DynkinType:
    """recognize the Dynkin type spanned by a simple system of -2 classes"""

    graph = nx.Graph()
    graph.add_nodes_from(range(len(simple_roots)))
    for i, a in enumerate(simple_roots):
        if a.square != -2:
            raise NotSimpleSystem(f'{a} has square {a.square}, simple roots have square -2')
        for j in range(i + 1, len(simple_roots)):
            p = a.dot(simple_roots[j])
            if p not in (0, 1):
                raise NotSimpleSystem(
                    f'{a} and {simple_roots[j]} pair to {p}, simple roots pair to 0 or 1',
                )
            if p == 1:
                graph.add_edge(i, j)

    components = []
    for nodes in nx.connected_components(graph):
        sub = graph.subgraph(nodes)
        size = sub.number_of_nodes()
        if not nx.is_tree(sub):
            raise UnrecognizedDiagram(f'the diagram on {size} nodes has a cycle')
        branch = [node for node, degree in sub.degree() if degree >= 3]
        if not branch:
            components.append(('A', size))
            continue
        if len(branch) > 1 or sub.degree(branch[0]) > 3:
            raise UnrecognizedDiagram(f'the diagram on {size} nodes branches more than once')
        arms = _arm_lengths(sub, branch[0])
        if arms[:2] == (1, 1):
            components.append(('D', size))
        elif arms in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
            components.append(('E', size))
        else:
            raise UnrecognizedDiagram(f'a branched diagram with arms {arms} is not of type A, D or E')
    return DynkinType(tuple(components))


### Enumeration


@dataclass(frozen=True)
class RootSet:
    k: int
    roots: Tuple[HomologyClass, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[HomologyClass]:
        return iter(self.roots)

    def _asdict(self):
        return {'k': self.k, 'count': len(self.roots), 'roots': [r.to_literal() for r in self.roots]}


@dataclass(frozen=True)
class ExceptionalSet:
    k: int
    classes: Tuple[HomologyClass, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[HomologyClass]:
        return iter(self.classes)

    def _asdict(self):
        return {'k': self.k, 'count': len(self.classes), 'classes': [c.to_literal() for c in self.classes]}


def degree_range(k: int, square: int, canonical: int) -> List[int]:
    """degrees d allowed by Cauchy-Schwarz, (3d + t)^2 <= k (d^2 - s)"""

    a, t, s = 9 - k, canonical, square
    disc = 36 * t * t - 4 * a * (t * t + k * s)
    if disc < 0:
        return []
    r = isqrt(disc) + 1
    lo = (-6 * t - r) // (2 * a)
    hi = -((6 * t - r) // (2 * a))
    return [d for d in range(lo, hi + 1) if a * d * d + 6 * t * d + t * t + k * s <= 0]


def _sorted_solutions(k: int, total: int, squares: int) -> Iterator[Tuple[int, ...]]:
    """non-increasing integer k-tuples with the given sum and sum of squares"""

    def extend(prefix: List[int], rem_sum: int, rem_sq: int, ceiling: Optional[int]) -> Iterator[Tuple[int, ...]]:
        slots = k - len(prefix)
        if slots == 0:
            if rem_sum == 0 and rem_sq == 0:
                yield tuple(prefix)
            return
        reach = isqrt(rem_sq)
        hi = reach if ceiling is None else min(ceiling, reach)
        lo = max(-reach, -((-rem_sum) // slots))
        for x in range(hi, lo - 1, -1):
            s, q = rem_sum - x, rem_sq - x * x
            if q < 0 or s * s > (slots - 1) * q:
                continue
            yield from extend(prefix + [x], s, q, x)

    if squares >= 0:
        yield from extend([], total, squares, None)


def _solutions_for_degree(args: Tuple[int, int, int, int]) -> List[Tuple[int, ...]]:
    k, d, square, canonical = args
    found = []
    for sorted_a in _sorted_solutions(k, 3 * d + canonical, d * d - square):
        for a in multiset_permutations(list(sorted_a)):
            found.append((d, *(-x for x in a)))
    return found


def _enumerate(k: int, square: int, canonical: int) -> Tuple[HomologyClass, ...]:
    """all dH - sum a_i E_i with A.A = square and K.A = canonical"""

    basis = BasisTag.H(k)
    degrees = degree_range(k, square, canonical)
    chunks = parallel_map(_solutions_for_degree, [(k, d, square, canonical) for d in degrees])
    coeffs = sorted(c for chunk in chunks for c in chunk)
    return tuple(HomologyClass(c, basis) for c in coeffs)


@lru_cache(maxsize=None)
def enumerate_roots(k: int) -> RootSet:
    """every class with K.A = 0 and A.A = -2 on CP2#k"""
    check_k(k)
    return RootSet(k, _enumerate(k, -2, 0))


@lru_cache(maxsize=None)
def enumerate_exceptional(k: int) -> ExceptionalSet:
    """every class with K.A = A.A = -1 on CP2#k"""
    check_k(k)
    return ExceptionalSet(k, _enumerate(k, -1, -1))


def _in_basis(classes: Sequence[HomologyClass], basis: BasisTag) -> Tuple[HomologyClass, ...]:
    converted = [change_basis(c, basis) for c in classes]
    return tuple(sorted(converted, key=lambda c: c.coeffs))


@lru_cache(maxsize=None)
def root_system(basis: BasisTag) -> Tuple[HomologyClass, ...]:
    if basis.is_h:
        return enumerate_roots(basis.n).roots
    if basis.n == 0:
        b_minus_f = parse_class('B - F', basis)
        return (-b_minus_f, b_minus_f)
    return _in_basis(enumerate_roots(basis.n + 1).roots, basis)


@lru_cache(maxsize=None)
def exceptional_classes(basis: BasisTag) -> Tuple[HomologyClass, ...]:
    if basis.is_h:
        return enumerate_exceptional(basis.n).classes
    if basis.n == 0:
        return ()
    return _in_basis(enumerate_exceptional(basis.n + 1).classes, basis)


### Simple roots and positivity


@lru_cache(maxsize=None)
def simple_root_edges(basis: BasisTag) -> Tuple[Tuple[str, HomologyClass], ...]:
    """(letter, simple root) for the root edges MO, MA, MB, .."""

    if basis.is_bf:
        if basis.n == 0:
            return (('A', parse_class('B - F', basis)),)
        return tuple(
            (letter, change_basis(root, basis))
            for letter, root in simple_root_edges(basis.counterpart())
        )

    k = basis.n
    check_k(k)
    edges = []
    if k >= 3:
        edges.append(('O', parse_class('H - E1 - E2 - E3', basis)))
    for i in range(1, k):
        edges.append((EDGE_LETTERS[i], basis.e(i) - basis.e(i + 1)))
    return tuple(edges)


def simple_roots(basis: BasisTag) -> List[HomologyClass]:
    return [root for _, root in simple_root_edges(basis)]


@lru_cache(maxsize=None)
def reference_form(basis: BasisTag) -> FormClass:
    """a fixed point inside the open chamber, c_i = 1/3 - i/100"""

    if basis.is_bf:
        if basis.n == 0:
            return FormClass((Fraction(2), Fraction(1)), basis)
        return change_basis(reference_form(basis.counterpart()), basis)
    sizes = [Fraction(1, 3) - Fraction(i, 100) for i in range(1, basis.n + 1)]
    return FormClass((Fraction(1), *sizes), basis)


@lru_cache(maxsize=None)
def positive_roots(basis: BasisTag) -> Tuple[HomologyClass, ...]:
    reference = reference_form(basis)
    positive = tuple(root for root in root_system(basis) if reference.area(root) > 0)
    assert 2 * len(positive) == len(root_system(basis)), 'the reference form sits on a wall'
    return positive


@dataclass(frozen=True)
class RootSplit:
    lagrangian: Tuple[HomologyClass, ...]
    symplectic: Tuple[HomologyClass, ...]

    def __post_init__(self):
        self.typecheck()

    def typecheck(self) -> None:
        assert not set(self.lagrangian) & set(self.symplectic)

    @property
    def N(self) -> int:
        return len(self.symplectic)

    @property
    def N_L(self) -> int:
        return len(self.lagrangian)

    def _asdict(self):
        return {
            'N': self.N,
            'NL': self.N_L,
            'lagrangian': [r.to_literal() for r in self.lagrangian],
            'symplectic': [r.to_literal() for r in self.symplectic],
        }


def _require_reduced(w: FormClass) -> None:
    if not is_reduced(w):
        raise NotReduced(f'{w} is not reduced', hints='Run chamberkit reduce first, or pass a reduced form')


@enforce_types
def positive_split(w: FormClass) -> RootSplit:
    """split R+ into zero-area (Lagrangian) and positive-area (symplectic) roots"""

    _require_reduced(w)
    lagrangian, symplectic = [], []
    for root in positive_roots(w.basis):
        value = w.area(root)
        assert value >= 0, f'positive root {root} has negative area {value} on reduced {w}'
        (lagrangian if value == 0 else symplectic).append(root)
    return RootSplit(tuple(lagrangian), tuple(symplectic))


def zero_area_edges(w: FormClass) -> List[Tuple[str, HomologyClass]]:
    return [(letter, root) for letter, root in simple_root_edges(w.basis) if w.area(root) == 0]


@enforce_types
def lagrangian_system(w: FormClass) -> DynkinType:
    """Dynkin type of the zero-area simple roots, checked against N_L"""

    _require_reduced(w)
    gamma = dynkin_classify([root for _, root in zero_area_edges(w)])
    n_l = positive_split(w).N_L
    assert positive_root_count(gamma) == n_l, f'{gamma} has {positive_root_count(gamma)} positive roots, not N_L={n_l}'
    return gamma


def roots_by_degree(classes: Sequence[HomologyClass]) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for c in classes:
        counts[c.coeffs[0]] = counts.get(c.coeffs[0], 0) + 1
    return counts
