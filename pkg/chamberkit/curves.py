"""
Negative and square-zero spheres on S^2 x S^2 # n(-CP^2), n <= 4.

Classes are written A = pB + qF - sum r_i E_i in BFBasis(n).  A class with
positive area and non-negative adjunction value

    2 g(A) = 2 (p - 1)(q - 1) - sum r_i (r_i - 1)

is a candidate for a simple J-holomorphic curve, and genus zero candidates
are spheres.
"""

__package__ = 'chamberkit'

from itertools import combinations, product
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .config import AUDIT_BOUND
from .errors import NotReduced, OutOfRange, WrongBasis
from .lattice import BasisTag, FormClass, HomologyClass, change_basis, parse_class, virtual_genus
from .reduction import is_reduced
from .roots import exceptional_classes, positive_roots, positive_split
from .util import enforce_types


B_FAMILY = 'B-class'
F_FAMILY = 'F-class'
E_FAMILY = 'E-class'

MAX_BLOWUPS = 4


@dataclass(frozen=True)
class ConstraintCheck:
    area: Fraction
    area_ok: bool
    adjunction_value: int
    genus: int

    def _asdict(self):
        return {
            'area': self.area,
            'areaOk': self.area_ok,
            'adjunctionValue': self.adjunction_value,
            'genus': self.genus,
        }


@dataclass(frozen=True)
class NegativeSphereFamily:
    family: str
    members: Tuple[HomologyClass, ...]
    higher_genus: Tuple[HomologyClass, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'members', tuple(self.members))
        self.typecheck()

    def typecheck(self) -> None:
        assert self.family in (B_FAMILY, F_FAMILY, E_FAMILY)
        for member in self.members:
            assert member.square < 0, f'{member} is not negative'
            assert matches_family(member, self.family), f'{member} is not a {self.family} class'

    def _asdict(self):
        return {
            'family': self.family,
            'members': [m.to_literal() for m in self.members],
            'higherGenus': [m.to_literal() for m in self.higher_genus],
        }


def _pqr(a: HomologyClass) -> Tuple[int, int, Tuple[int, ...]]:
    p, q, *rest = a.coeffs
    return p, q, tuple(-x for x in rest)


def matches_family(a: HomologyClass, family: str) -> bool:
    p, q, r = _pqr(a)
    if family == B_FAMILY:
        return p == 1 and q <= 1 and all(x in (0, 1) for x in r)
    if family == F_FAMILY:
        return p == 0 and q == 1 and all(x in (0, 1) for x in r)
    if p or q:
        return False
    lead = [i for i, x in enumerate(r) if x != 0]
    return bool(lead) and r[lead[0]] == -1 and all(x in (0, 1) for x in r[lead[0] + 1:])


def _require_bf(w: FormClass, n_max: int=MAX_BLOWUPS) -> None:
    if not w.basis.is_bf:
        raise WrongBasis(f'sphere families live in the B/F basis, got {w.basis}', hints='Pass forms as (mu, f | a1, .., an)')
    if w.basis.n > n_max:
        raise OutOfRange(f'{w.basis} has more than {n_max} blow ups')


### Constraints


def adjunction_value(a: HomologyClass) -> int:
    p, q, r = _pqr(a)
    return 2 * (p - 1) * (q - 1) - sum(x * (x - 1) for x in r)


@enforce_types
def passes_constraints(a: HomologyClass, w: FormClass) -> ConstraintCheck:
    """area positivity and adjunction for A = pB + qF - sum r_i E_i"""

    if not a.basis.is_bf or not w.basis.is_bf:
        raise WrongBasis(f'expected B/F classes, got {a.basis} and {w.basis}')
    if a.basis != w.basis:
        raise WrongBasis(f'{a} lives in {a.basis} but the form lives in {w.basis}')
    value = w.area(a)
    adjunction = adjunction_value(a)
    genus = virtual_genus(a)
    assert adjunction == 2 * genus, f'adjunction {adjunction} disagrees with genus {genus} on {a}'
    return ConstraintCheck(area=value, area_ok=value > 0, adjunction_value=adjunction, genus=genus)


### Audit of the simple-class conclusions


@dataclass(frozen=True)
class AuditReport:
    basis: BasisTag
    bound: int
    checked: int
    census: Dict[str, int]
    violations: Tuple[Tuple[HomologyClass, str], ...]
    precondition_ok: bool

    @property
    def ok(self) -> bool:
        return not self.violations

    def _asdict(self):
        return {
            'basis': str(self.basis),
            'bound': self.bound,
            'checked': self.checked,
            'census': dict(self.census),
            'violations': [{'class': c.to_literal(), 'reason': why} for c, why in self.violations],
            'preconditionOk': self.precondition_ok,
        }


def lemma_conclusion(p: int, q: int, r: Sequence[int]) -> Optional[str]:
    """None when the class obeys the conclusions, otherwise the broken one"""
    if p < 0:
        return 'p < 0'
    if p == 0 and q not in (0, 1):
        return 'p = 0 but q is not 0 or 1'
    if p == 1 and any(x not in (0, 1) for x in r):
        return 'p = 1 but some r_i is not 0 or 1'
    if p > 1 and q < 1:
        return 'p > 1 but q < 1'
    return None


def _audit_tails(sizes: Sequence[Fraction],
                 bound: int,
                 budget: int,
                 area: Fraction) -> Iterator[Tuple[int, ...]]:
    """r vectors in the box with sum r(r-1) <= budget and positive remaining area"""

    if not sizes:
        if area > 0:
            yield ()
        return
    head, rest = sizes[0], sizes[1:]
    # most area the remaining slots can still add
    reach = sum(rest, Fraction(0)) * bound
    for x in range(-bound, bound + 1):
        cost = x * (x - 1)
        if cost > budget:
            continue
        remaining = area - head * x
        if remaining + reach <= 0:
            continue
        for tail in _audit_tails(rest, bound, budget - cost, remaining):
            yield (x, *tail)


@enforce_types
def lemma_classes_audit(w: FormClass, bound: Optional[int]=None, strict: bool=True) -> AuditReport:
    """brute force every class in a box satisfying area > 0 and adjunction >= 0"""

    _require_bf(w)
    bound = AUDIT_BOUND if bound is None else bound
    reduced = is_reduced(w)
    if strict and not reduced:
        raise NotReduced(f'{w} is not reduced', hints='Pass strict=False to audit a non-reduced form anyway')

    mu, f, sizes = w.coeffs[0], w.coeffs[1], w.sizes
    basis = w.basis
    census = {'p=0': 0, 'p=1': 0, 'p>1': 0, 'p<0': 0}
    violations: List[Tuple[HomologyClass, str]] = []
    checked = 0
    for p, q in product(range(-bound, bound + 1), repeat=2):
        budget = 2 * (p - 1) * (q - 1)
        if budget < 0:
            continue
        for r in _audit_tails(sizes, bound, budget, p * mu + q * f):
            checked += 1
            key = 'p<0' if p < 0 else ('p>1' if p > 1 else f'p={p}')
            census[key] += 1
            broken = lemma_conclusion(p, q, r)
            if broken:
                violations.append((HomologyClass((p, q, *(-x for x in r)), basis), broken))

    return AuditReport(
        basis=basis,
        bound=bound,
        checked=checked,
        census=census,
        violations=tuple(violations),
        precondition_ok=reduced,
    )


### Families


def _r_vectors(n: int) -> Iterator[Tuple[int, ...]]:
    return product((0, 1), repeat=n)


def _bf_class(p: int, q: int, r: Sequence[int], basis: BasisTag) -> HomologyClass:
    return HomologyClass((p, q, *(-x for x in r)), basis)


def b_family_range(w: FormClass) -> range:
    """k from -1 to floor(mu) + 4 covers every B - kF - sum r_i E_i of positive area"""
    return range(-1, int(w.mu // w.coeffs[1]) + 5)


def family_candidates(basis: BasisTag, k_range: Sequence[int]) -> Dict[str, List[HomologyClass]]:
    n = basis.n
    b_members = [_bf_class(1, -k, r, basis) for k in k_range for r in _r_vectors(n)]
    f_members = [_bf_class(0, 1, r, basis) for r in _r_vectors(n)]
    e_members = []
    for j in range(n):
        for tail in _r_vectors(n - j - 1):
            r = [0] * j + [-1] + list(tail)
            e_members.append(_bf_class(0, 0, r, basis))
    return {B_FAMILY: b_members, F_FAMILY: f_members, E_FAMILY: e_members}


@enforce_types
def enumerate_negative_spheres(w: FormClass) -> List[NegativeSphereFamily]:
    """negative spheres of positive area in the B, F and E families"""

    _require_bf(w)
    if not is_reduced(w):
        raise NotReduced(f'{w} is not reduced', hints='Run chamberkit reduce first')

    families = []
    for family, candidates in family_candidates(w.basis, b_family_range(w)).items():
        members, higher = [], []
        for a in candidates:
            if a.square >= 0:
                continue
            check = passes_constraints(a, w)
            if not check.area_ok or check.adjunction_value < 0:
                continue
            (members if check.genus == 0 else higher).append(a)
        families.append(NegativeSphereFamily(
            family=family,
            members=tuple(sorted(members, key=lambda c: (c.square, c.coeffs))),
            higher_genus=tuple(higher),
        ))
    return families


def negative_two_spheres(w: FormClass) -> List[HomologyClass]:
    return sorted(
        (a for family in enumerate_negative_spheres(w) for a in family.members if a.square == -2),
        key=lambda c: c.coeffs,
    )


@enforce_types
def square_zero_spheres(n: int) -> List[HomologyClass]:
    """B, F, B+F-Ei-Ej, 2B+F-E1-..-E4 and B+2F-E1-..-E4 where they exist"""

    if not 0 <= n <= MAX_BLOWUPS:
        raise OutOfRange(f'square zero spheres are listed for n <= {MAX_BLOWUPS}, got {n}')
    basis = BasisTag.BF(n)
    classes = [basis.unit('B'), basis.unit('F')]
    for i, j in combinations(range(n), 2):
        r = [0] * n
        r[i] = r[j] = 1
        classes.append(_bf_class(1, 1, r, basis))
    if n == MAX_BLOWUPS:
        classes.append(_bf_class(2, 1, [1] * n, basis))
        classes.append(_bf_class(1, 2, [1] * n, basis))
    for a in classes:
        assert a.square == 0 and virtual_genus(a) == 0, a
    return classes


### Minimal exceptional area


@enforce_types
def min_exceptional_area(w: FormClass) -> Tuple[HomologyClass, Fraction]:
    """
    an exceptional class of least area, E_k whenever w is reduced and k != 2

    On CP2#2 the line H-E1-E2 undercuts E2 as soon as nu < c1 + 2 c2.
    """

    if not w.basis.is_h:
        raise WrongBasis(f'expected an H basis form, got {w.basis}')
    if not is_reduced(w):
        raise NotReduced(f'{w} is not reduced', hints='Run chamberkit reduce first')

    last = w.basis.e(w.basis.n)
    best = min(exceptional_classes(w.basis), key=lambda e: (w.area(e), e != last))
    if w.basis.n != 2:
        assert best == last, f'{best} has less area than {last} on reduced {w}'
    return best, w.area(best)


### Minimal configurations for J_open


OPEN_CONFIGURATIONS = {
    BasisTag.H(2): ('E1',),
    BasisTag.H(3): ('E1', 'E2', 'H - E2 - E3'),
    BasisTag.H(4): ('H - E1 - E2', 'H - E3 - E4', 'E1', 'E3'),
    BasisTag.H(5): ('2H - E1 - E2 - E3 - E4 - E5', 'E1', 'E2', 'E3', 'E4'),
    BasisTag.BF(1): ('B - E1',),
    BasisTag.BF(2): ('E1', 'B - E1', 'F - E1'),
    BasisTag.BF(3): ('F - E1', 'E2', 'B - E1', 'B + F - E1 - E2 - E3'),
    BasisTag.BF(4): ('B + F - E2 - E3 - E4', 'B - E1', 'F - E1', 'E2', 'E3'),
}


@dataclass(frozen=True)
class ConfigurationReport:
    basis: BasisTag
    members: Tuple[HomologyClass, ...]
    checked: int
    uncovered: Tuple[HomologyClass, ...]

    @property
    def covers(self) -> bool:
        return not self.uncovered

    def _asdict(self):
        return {
            'basis': str(self.basis),
            'members': [m.to_literal() for m in self.members],
            'checked': self.checked,
            'uncovered': [c.to_literal() for c in self.uncovered],
        }


@enforce_types
def minimal_open_configuration(basis: BasisTag) -> List[HomologyClass]:
    """exceptional spheres whose presence as J-curves cuts out J_open"""
    try:
        literals = OPEN_CONFIGURATIONS[basis]
    except KeyError:
        raise OutOfRange(
            f'no configuration is listed for {basis}',
            hints='Configurations exist for HBasis(2..5) and BFBasis(1..4)',
        )
    return [parse_class(text, basis) for text in literals]


def _family_classes(basis: BasisTag) -> List[HomologyClass]:
    """B, F and E family members of square <= -2, expressed in basis"""
    bf = basis if basis.is_bf else basis.counterpart()
    found = []
    for candidates in family_candidates(bf, range(-1, 3)).values():
        found += [a for a in candidates if a.square <= -2]
    return [change_basis(a, basis) for a in found]


@enforce_types
def check_open_configuration(basis: BasisTag) -> ConfigurationReport:
    """negative classes that pair no configuration member negatively"""

    members = minimal_open_configuration(basis)
    targets = list(positive_roots(basis))
    targets += [a for a in _family_classes(basis) if a not in targets]
    uncovered = tuple(
        a for a in targets
        if all(m.dot(a) >= 0 for m in members)
    )
    return ConfigurationReport(basis=basis, members=tuple(members), checked=len(targets), uncovered=uncovered)


def negative_spheres_agree(w: FormClass) -> bool:
    """-2 spheres of the families equal the symplectic positive roots"""
    return set(negative_two_spheres(w)) == set(positive_split(w).symplectic)
