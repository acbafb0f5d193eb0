__package__ = 'chamberkit'

from fractions import Fraction
from itertools import combinations
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import NotBalanced, NotReduced, WrongK
from .lattice import BasisTag, FormClass, HomologyClass, parse_class
from .reduction import is_balanced, is_reduced, reflect
from .util import enforce_types, fraction_str


# conjunct broken -> Cremona root, tried in this order
CREMONA_BRANCHES = (
    ((3, 4, 5), 'H - E3 - E4 - E5'),
    ((2, 3, 4), 'H - E2 - E3 - E4'),
    ((1, 2, 3), 'H - E1 - E2 - E3'),
)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class PackingSpec:
    sizes: Tuple[Fraction, ...]

    def __post_init__(self):
        assert not any(isinstance(c, float) for c in self.sizes), 'sizes are exact, pass Fractions not floats'
        object.__setattr__(self, 'sizes', tuple(Fraction(c) for c in self.sizes))
        self.typecheck()

    def typecheck(self) -> None:
        assert len(self.sizes) == 5, 'a relative packing places five balls'
        assert all(c > 0 for c in self.sizes), f'ball sizes must be positive, got {self.sizes}'

    @property
    def descending(self) -> Tuple[Fraction, ...]:
        return tuple(sorted(self.sizes, reverse=True))

    def _asdict(self):
        return {'sizes': [fraction_str(c) for c in self.sizes]}


@dataclass(frozen=True)
class PackingResult:
    spec: PackingSpec
    feasible: bool
    boundary: bool
    certificate: FormClass
    slack: Fraction
    tightest: Optional[HomologyClass]

    def _asdict(self):
        return {
            'sizes': [fraction_str(c) for c in self.spec.sizes],
            'feasible': self.feasible,
            'boundary': self.boundary,
            'certificate': self.certificate.to_literal(),
            'slack': fraction_str(self.slack),
            'tightest': self.tightest and self.tightest.to_literal(),
        }


def certificate_form(sizes: Sequence[Fraction]) -> FormClass:
    """(3/2 - c1 | 1 - c1, c2, c3, c4, c5, 1/2 - c1) on CP2#6, sizes sorted descending"""
    c1 = sizes[0]
    return FormClass((Fraction(3, 2) - c1, 1 - c1, *sizes[1:], HALF - c1), BasisTag.H(6))


def certificate_classes() -> List[HomologyClass]:
    """Ei, H-Ei-Ej and 2H - sum E + Ei on CP2#6"""
    basis = BasisTag.H(6)
    es = [basis.e(i) for i in range(1, 7)]
    total = basis.zero()
    for e in es:
        total = total + e
    classes = list(es)
    classes += [basis.unit('H') - a - b for a, b in combinations(es, 2)]
    classes += [2 * basis.unit('H') - total + e for e in es]
    return classes


@enforce_types
def relative_packing_feasible(p: PackingSpec) -> PackingResult:
    """five balls packing relative to RP^2 in CP^2 of line area 1"""

    sizes = p.descending
    boundary = sizes[0] == HALF
    certificate = certificate_form(sizes)
    areas = [(certificate.area(a), a) for a in certificate_classes()]
    slack, tightest = min(areas, key=lambda pair: (pair[0], pair[1].coeffs))
    # at c1 = 1/2 only E6 may lose all its area
    zero_classes = [a for value, a in areas if value == 0]
    boundary_tight = boundary and slack == 0 and zero_classes == [certificate.basis.e(6)]

    feasible = (
        sizes[0] <= HALF
        and sum(sizes) < 2
        and (slack > 0 or boundary_tight)
    )
    return PackingResult(
        spec=p,
        feasible=feasible,
        boundary=boundary,
        certificate=certificate,
        slack=slack,
        tightest=tightest,
    )


@dataclass(frozen=True)
class CremonaPacking:
    source: FormClass
    root: HomologyClass
    form: FormClass
    basis_map: Dict[str, HomologyClass]
    checks: Tuple[Tuple[HomologyClass, Fraction], ...]
    isometry: bool
    preserves_canonical: bool

    @property
    def checks_positive(self) -> bool:
        return all(value > 0 for _, value in self.checks)

    @property
    def packing_spec(self) -> PackingSpec:
        h_area = self.form.nu
        return PackingSpec(tuple(c / h_area for c in self.form.sizes))

    def _asdict(self):
        return {
            'source': self.source.to_literal(),
            'root': self.root.to_literal(),
            'form': self.form.to_literal(),
            'basisMap': {name: cls.to_literal() for name, cls in self.basis_map.items()},
            'checks': [{'class': c.to_literal(), 'area': fraction_str(v)} for c, v in self.checks],
            'isometry': self.isometry,
            'preservesCanonical': self.preserves_canonical,
        }


def _is_isometry(images: Sequence[HomologyClass], basis: BasisTag) -> bool:
    n = basis.dimension
    return all(
        images[i].dot(images[j]) == basis.gram(i, j)
        for i in range(n) for j in range(n)
    )


def _pushes_canonical(images: Sequence[HomologyClass], basis: BasisTag) -> bool:
    canonical = basis.canonical()
    image = basis.zero()
    for coeff, cls in zip(canonical.coeffs, images):
        image = image + coeff * cls
    return image == canonical


@enforce_types
def cremona_to_packing_form(w: FormClass) -> CremonaPacking:
    """move a balanced reduced form on CP2#5 to one where every ball is below half the line"""

    if not w.basis.is_h or w.basis.n != 5:
        raise WrongK(f'the packing Cremona move is defined on CP2#5 in the H basis, got {w.basis}')
    if not is_reduced(w):
        raise NotReduced(f'{w} is not reduced', hints='Run chamberkit reduce first')
    if not is_balanced(w):
        raise NotBalanced(
            f'{w} has c1 >= c2+c3, c2 >= c3+c4 and c3 >= c4+c5',
            hints='None of the three Cremona branches applies',
        )

    basis = w.basis
    root = next(
        parse_class(literal, basis)
        for (i, j, k), literal in CREMONA_BRANCHES
        if w.c(i) < w.c(j) + w.c(k)
    )

    names = basis.names
    images = [reflect(basis.unit(name), root) for name in names]
    pushed = FormClass(tuple(w.area(cls) for cls in images), basis)

    h = images[0]
    checks = tuple(
        (h - 2 * e, w.area(h - 2 * e))
        for e in images[1:]
    )
    return CremonaPacking(
        source=w,
        root=root,
        form=pushed,
        basis_map={name.lower(): cls for name, cls in zip(names, images)},
        checks=checks,
        isometry=_is_isometry(images, basis),
        preserves_canonical=_pushes_canonical(images, basis),
    )
