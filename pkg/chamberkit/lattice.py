"""
Exact arithmetic on H_2 of CP^2 # k(-CP^2) in its two standard bases.

HBasis(k) has classes H, E1..Ek with H.H = 1, Ei.Ei = -1.
BFBasis(n) has classes B, F, E1..En with B.F = 1, B.B = F.F = 0, Ei.Ei = -1
and describes the same manifold as HBasis(n + 1) (S^2 x S^2 when n = 0).

A HomologyClass stores integer coordinates in its basis.  A FormClass stores
the *areas* of the basis classes, so (nu | c1, .., ck) in HBasis is the form
with [w] = nu H - c1 E1 - ... - ck Ek and (mu, f | a1, .., an) in BFBasis is
the form giving B area mu, F area f and Ei area ai.
"""

__package__ = 'chamberkit'

import re

from fractions import Fraction
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple, Union

from .errors import BasisMismatch, NotReducible, ParseError, OutOfRange
from .util import enforce_types, fraction_str


Rational = Union[int, Fraction]

H_KIND = 'H'
BF_KIND = 'BF'


@dataclass(frozen=True, order=True)
class BasisTag:
    kind: str
    n: int

    def __post_init__(self):
        self.typecheck()

    def typecheck(self) -> None:
        assert self.kind in (H_KIND, BF_KIND), f'unknown basis kind {self.kind!r}'
        assert isinstance(self.n, int) and not isinstance(self.n, bool)
        assert self.n >= (1 if self.kind == H_KIND else 0), f'{self} has no classes to blow up'

    @classmethod
    def H(cls, k: int) -> 'BasisTag':
        return cls(H_KIND, k)

    @classmethod
    def BF(cls, n: int) -> 'BasisTag':
        return cls(BF_KIND, n)

    @property
    def is_h(self) -> bool:
        return self.kind == H_KIND

    @property
    def is_bf(self) -> bool:
        return self.kind == BF_KIND

    @property
    def dimension(self) -> int:
        return self.n + 1 if self.is_h else self.n + 2

    @property
    def offset(self) -> int:
        """index of E1 in the coefficient vector"""
        return 1 if self.is_h else 2

    @property
    def blowups(self) -> int:
        """number of exceptional classes E1..En carried by the basis"""
        return self.n

    @property
    def names(self) -> Tuple[str, ...]:
        head = ('H',) if self.is_h else ('B', 'F')
        return (*head, *(f'E{i}' for i in range(1, self.n + 1)))

    @property
    def manifold(self) -> str:
        if self.is_bf and self.n == 0:
            return 'S2xS2'
        k = self.n if self.is_h else self.n + 1
        return f'CP2#{k}'

    def same_manifold(self, other: 'BasisTag') -> bool:
        return self.manifold == other.manifold

    def counterpart(self) -> 'BasisTag':
        """the other standard basis of the same manifold"""
        if self.is_h:
            if self.n < 2:
                raise BasisMismatch(
                    f'{self} has no BF counterpart (BFBasis(0) is S2xS2, not CP2#1)',
                    hints='Use k >= 2 when switching CP2#k to the BF picture',
                )
            return BasisTag.BF(self.n - 1)
        if self.n < 1:
            raise BasisMismatch(f'{self} is S2xS2, which has no H basis')
        return BasisTag.H(self.n + 1)

    def gram(self, i: int, j: int) -> int:
        if self.is_h:
            if i != j:
                return 0
            return 1 if i == 0 else -1
        if i < 2 or j < 2:
            return 1 if {i, j} == {0, 1} else 0
        return -1 if i == j else 0

    def canonical(self) -> 'HomologyClass':
        head = (-3,) if self.is_h else (-2, -2)
        return HomologyClass((*head, *([1] * self.n)), self)

    def zero(self) -> 'HomologyClass':
        return HomologyClass((0,) * self.dimension, self)

    def unit(self, name: str) -> 'HomologyClass':
        coeffs = [0] * self.dimension
        try:
            coeffs[self.names.index(name)] = 1
        except ValueError:
            raise ParseError(f'{name} is not a class of {self}', hints=f'Classes of {self}: {", ".join(self.names)}')
        return HomologyClass(tuple(coeffs), self)

    def e(self, i: int) -> 'HomologyClass':
        return self.unit(f'E{i}')

    def __str__(self) -> str:
        return f'HBasis({self.n})' if self.is_h else f'BFBasis({self.n})'


def _pair(basis: BasisTag, a: Tuple[Rational, ...], b: Tuple[Rational, ...]):
    if basis.is_h:
        return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))
    return a[0] * b[1] + a[1] * b[0] - sum(x * y for x, y in zip(a[2:], b[2:]))


def _gram_apply(basis: BasisTag, v: Tuple[Rational, ...]) -> Tuple[Rational, ...]:
    # the gram matrix is its own inverse in both bases
    if basis.is_h:
        return (v[0], *(-x for x in v[1:]))
    return (v[1], v[0], *(-x for x in v[2:]))


@dataclass(frozen=True)
class HomologyClass:
    coeffs: Tuple[int, ...]
    basis: BasisTag

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(self.coeffs))
        self.typecheck()

    def typecheck(self) -> None:
        assert isinstance(self.basis, BasisTag)
        assert len(self.coeffs) == self.basis.dimension, f'{self.coeffs} does not fit {self.basis}'
        assert all(isinstance(c, int) and not isinstance(c, bool) for c in self.coeffs)

    def _check(self, other: 'HomologyClass') -> None:
        if not isinstance(other, HomologyClass):
            raise TypeError(f'expected a HomologyClass, got {type(other).__name__}')
        if other.basis != self.basis:
            raise BasisMismatch(f'cannot combine a class in {self.basis} with one in {other.basis}')

    def __add__(self, other: 'HomologyClass') -> 'HomologyClass':
        self._check(other)
        return HomologyClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.basis)

    def __sub__(self, other: 'HomologyClass') -> 'HomologyClass':
        self._check(other)
        return HomologyClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.basis)

    def __neg__(self) -> 'HomologyClass':
        return HomologyClass(tuple(-a for a in self.coeffs), self.basis)

    def __rmul__(self, scalar: int) -> 'HomologyClass':
        if not isinstance(scalar, int):
            return NotImplemented
        return HomologyClass(tuple(scalar * a for a in self.coeffs), self.basis)

    def dot(self, other: 'HomologyClass') -> int:
        self._check(other)
        return _pair(self.basis, self.coeffs, other.coeffs)

    @property
    def square(self) -> int:
        return _pair(self.basis, self.coeffs, self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_literal(self) -> str:
        terms = []
        for name, c in zip(self.basis.names, self.coeffs):
            if c == 0:
                continue
            body = name if abs(c) == 1 else f'{abs(c)}{name}'
            if not terms:
                terms.append(f'-{body}' if c < 0 else body)
            else:
                terms.append(f'- {body}' if c < 0 else f'+ {body}')
        return ' '.join(terms) or '0'

    def __str__(self) -> str:
        return self.to_literal()

    def _asdict(self):
        return {'class': self.to_literal(), 'basis': str(self.basis), 'coeffs': list(self.coeffs)}


@dataclass(frozen=True)
class FormClass:
    coeffs: Tuple[Fraction, ...]
    basis: BasisTag

    def __post_init__(self):
        assert not any(isinstance(c, float) for c in self.coeffs), 'forms are exact, pass Fractions not floats'
        object.__setattr__(self, 'coeffs', tuple(Fraction(c) for c in self.coeffs))
        self.typecheck()

    def typecheck(self) -> None:
        assert isinstance(self.basis, BasisTag)
        assert len(self.coeffs) == self.basis.dimension, f'{self.coeffs} does not fit {self.basis}'

    @property
    def normalized(self) -> bool:
        return self.scale_coeff == 1

    @property
    def scale_coeff(self) -> Fraction:
        """area of H (HBasis) or of F (BFBasis)"""
        return self.coeffs[0] if self.basis.is_h else self.coeffs[1]

    @property
    def nu(self) -> Fraction:
        assert self.basis.is_h
        return self.coeffs[0]

    @property
    def mu(self) -> Fraction:
        assert self.basis.is_bf
        return self.coeffs[0]

    @property
    def sizes(self) -> Tuple[Fraction, ...]:
        """areas of E1..En (c_i in HBasis, a_i in BFBasis)"""
        return self.coeffs[self.basis.offset:]

    def c(self, i: int) -> Fraction:
        return self.coeffs[self.basis.offset + i - 1]

    def area(self, a: HomologyClass) -> Fraction:
        if a.basis != self.basis:
            raise BasisMismatch(f'cannot evaluate a form in {self.basis} on a class in {a.basis}')
        return sum((x * y for x, y in zip(a.coeffs, self.coeffs)), Fraction(0))

    @property
    def square(self) -> Fraction:
        return _pair(self.basis, self.coeffs, self.coeffs)

    @property
    def poincare_dual(self) -> Tuple[Fraction, ...]:
        """coordinates of PD[w] in the basis"""
        return _gram_apply(self.basis, self.coeffs)

    def scaled(self, factor: Rational) -> 'FormClass':
        return FormClass(tuple(factor * c for c in self.coeffs), self.basis)

    def normalize(self) -> 'FormClass':
        scale = self.scale_coeff
        if scale == 0:
            raise NotReducible(f'{self.to_literal()} has zero area on {"H" if self.basis.is_h else "F"} and cannot be normalized')
        return self.scaled(1 / scale)

    def with_sizes(self, sizes: Iterable[Rational]) -> 'FormClass':
        return FormClass((*self.coeffs[:self.basis.offset], *sizes), self.basis)

    def to_literal(self) -> str:
        head = ', '.join(fraction_str(c) for c in self.coeffs[:self.basis.offset])
        tail = ', '.join(fraction_str(c) for c in self.sizes)
        return f'({head} | {tail})' if tail else f'({head} | )'

    def __str__(self) -> str:
        return self.to_literal()

    def _asdict(self):
        return {'form': self.to_literal(), 'basis': str(self.basis), 'normalized': self.normalized}


### Pairing, areas and the canonical class


@enforce_types
def pairing(a: HomologyClass, b: HomologyClass) -> int:
    return a.dot(b)


@enforce_types
def area(w: FormClass, a: HomologyClass) -> Fraction:
    return w.area(a)


@enforce_types
def canonical_class(basis: BasisTag) -> HomologyClass:
    return basis.canonical()


@enforce_types
def virtual_genus(a: HomologyClass) -> int:
    """(a.a + K.a)/2 + 1, always an integer since K is characteristic"""
    twice = a.square + a.basis.canonical().dot(a)
    assert twice % 2 == 0, f'{a} pairs K with the wrong parity'
    return twice // 2 + 1


def reflect_vector(coeffs: Tuple[int, ...], root: HomologyClass) -> Tuple[int, ...]:
    k = _pair(root.basis, coeffs, root.coeffs)
    return tuple(x + k * r for x, r in zip(coeffs, root.coeffs))


### Change of basis


def _h_to_bf(x: Tuple) -> Tuple:
    xh, x1, x2, rest = x[0], x[1], x[2], x[3:]
    return (xh + x1, xh + x2, -xh - x1 - x2, *rest)


def _bf_to_h(y: Tuple) -> Tuple:
    yb, yf, y1, rest = y[0], y[1], y[2], y[3:]
    return (yb + yf + y1, -yf - y1, -yb - y1, *rest)


def _form_h_to_bf(w: Tuple) -> Tuple:
    nu, c1, c2, rest = w[0], w[1], w[2], w[3:]
    return (nu - c2, nu - c1, nu - c1 - c2, *rest)


def _form_bf_to_h(w: Tuple) -> Tuple:
    mu, f, a1, rest = w[0], w[1], w[2], w[3:]
    return (mu + f - a1, mu - a1, f - a1, *rest)


def change_basis(x: Union[HomologyClass, FormClass], target: BasisTag):
    """re-express a class or form in the other standard basis of its manifold"""

    if x.basis == target:
        return x
    if not x.basis.same_manifold(target) or x.basis.kind == target.kind:
        raise BasisMismatch(
            f'{x.basis} ({x.basis.manifold}) and {target} ({target.manifold}) describe different manifolds',
            hints='HBasis(k) pairs with BFBasis(k-1) for k >= 2',
        )
    if isinstance(x, HomologyClass):
        convert = _h_to_bf if x.basis.is_h else _bf_to_h
        return HomologyClass(convert(x.coeffs), target)
    convert = _form_h_to_bf if x.basis.is_h else _form_bf_to_h
    return FormClass(convert(x.coeffs), target)


### Literal grammar


TERM_RE = re.compile(r'^(?P<coef>\d+)?\s*\*?\s*(?P<name>H|B|F|E\d+)$')
RATIONAL_RE = re.compile(r'^[+-]?\d+(/\d+)?$')
DECIMAL_HINT = 'Forms are exact: write rationals as p/q (e.g. 2/5 instead of 0.4)'


def parse_rational(token: str) -> Fraction:
    token = token.strip()
    if not RATIONAL_RE.match(token):
        if re.match(r'^[+-]?(\d*\.\d*|\d+[eE][+-]?\d+)$', token):
            raise ParseError(f'Decimal value {token!r} is not allowed', hints=DECIMAL_HINT)
        raise ParseError(f'Could not parse {token!r} as a rational p/q', hints=DECIMAL_HINT)
    _, _, denominator = token.partition('/')
    if denominator and int(denominator) == 0:
        raise ParseError(f'{token!r} has a zero denominator', hints=DECIMAL_HINT)
    return Fraction(token)


@enforce_types
def parse_class(text: str, basis: BasisTag) -> HomologyClass:
    """parse literals like '2H - E1 - E2', 'B - F', '-E3 + E4' or '0'"""

    source = text
    text = text.strip()
    if not text:
        raise ParseError('Empty class literal', hints='Write classes like 2H - E1 - E2 or B + F - E1')
    if text == '0':
        return basis.zero()

    coeffs: Dict[str, int] = {}
    tokens = re.findall(r'[+-]|[^+-]+', text.replace(' ', ''))
    sign = 1
    expect_term = True
    for token in tokens:
        if token in '+-':
            sign = sign * (-1 if token == '-' else 1)
            expect_term = True
            continue
        if not expect_term:
            raise ParseError(f'Missing + or - before {token!r} in {source!r}')
        match = TERM_RE.match(token)
        if not match:
            raise ParseError(
                f'Could not parse term {token!r} in {source!r}',
                hints=f'Terms look like 2H, E3 or 3F; classes of {basis}: {", ".join(basis.names)}',
            )
        name = match.group('name')
        if name not in basis.names:
            raise ParseError(f'{name} is not a class of {basis}', hints=f'Classes of {basis}: {", ".join(basis.names)}')
        coeffs[name] = coeffs.get(name, 0) + sign * int(match.group('coef') or 1)
        sign = 1
        expect_term = False

    if expect_term:
        raise ParseError(f'Class literal {source!r} ends with a dangling sign')

    return HomologyClass(tuple(coeffs.get(name, 0) for name in basis.names), basis)


@enforce_types
def parse_form(text: str) -> FormClass:
    """parse '(nu | c1, .., ck)' (HBasis) or '(mu, f | a1, .., an)' (BFBasis)"""

    source = text
    text = text.strip()
    if not (text.startswith('(') and text.endswith(')') and text.count('|') == 1):
        raise ParseError(
            f'Could not parse form literal {source!r}',
            hints=['Forms look like (1 | 1/3, 1/3, 1/3) in the H basis',
                   'or (mu, 1 | a1, .., an) in the B/F basis'],
        )
    head, tail = text[1:-1].split('|')
    head_vals = [parse_rational(t) for t in head.split(',')]
    tail_vals = [parse_rational(t) for t in tail.split(',')] if tail.strip() else []

    if len(head_vals) == 1:
        if not tail_vals:
            raise ParseError(f'{source!r} has no exceptional classes', hints='CP2#k needs k >= 1 sizes after the bar')
        return FormClass((*head_vals, *tail_vals), BasisTag.H(len(tail_vals)))
    if len(head_vals) == 2:
        return FormClass((*head_vals, *tail_vals), BasisTag.BF(len(tail_vals)))
    raise ParseError(f'{source!r} has {len(head_vals)} entries before the bar (expected 1 or 2)')


def check_k(k: int, lo: int=1, hi: int=8, what: Optional[str]=None) -> None:
    if not (lo <= k <= hi):
        raise OutOfRange(
            f'{what or "k"}={k} is outside the supported range {lo}..{hi}',
            hints='The Weyl group is infinite for k >= 9' if k >= 9 else None,
        )
