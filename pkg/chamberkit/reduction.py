__package__ = 'chamberkit'

import re
import random

from collections import deque
from fractions import Fraction
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from .config import ITERATION_CAP, ORBIT_LIMIT
from .errors import (
    DegenerateForm,
    NotARoot,
    NotReducible,
    OutOfRange,
    ParseError,
    TraceMismatch,
    WrongK,
)
from .lattice import (
    BasisTag,
    FormClass,
    HomologyClass,
    change_basis,
    parse_class,
    parse_form,
    parse_rational,
)
from .util import enforce_types, fraction_str


PERMUTE = 'PERMUTE'
REFLECT = 'REFLECT'
NEGATE = 'NEGATE'
BASIS = 'BASIS'
SCALE = 'SCALE'


@dataclass(frozen=True)
class TraceStep:
    kind: str
    root: Optional[HomologyClass] = None
    i: int = 0
    j: int = 0
    basis: Optional[BasisTag] = None
    factor: Optional[Fraction] = None

    def __post_init__(self):
        self.typecheck()

    def typecheck(self) -> None:
        assert self.kind in (PERMUTE, REFLECT, NEGATE, BASIS, SCALE), f'unknown step {self.kind}'
        if self.kind in (PERMUTE, REFLECT):
            assert isinstance(self.root, HomologyClass) and self.root.square == -2
        if self.kind == BASIS:
            assert isinstance(self.basis, BasisTag)
        if self.kind == SCALE:
            assert isinstance(self.factor, Fraction) and self.factor > 0

    def apply(self, w: FormClass) -> FormClass:
        if self.kind in (PERMUTE, REFLECT):
            assert self.root is not None
            if self.root.basis != w.basis:
                raise TraceMismatch(f'{self.render()} does not act on a form in {w.basis}')
            return reflect(w, self.root)
        elif self.kind == NEGATE:
            return w.scaled(-1)
        elif self.kind == BASIS:
            assert self.basis is not None
            return change_basis(w, self.basis)
        assert self.factor is not None
        return w.scaled(self.factor)

    def render(self) -> str:
        if self.kind == PERMUTE:
            return f'{PERMUTE} {self.i} {self.j}'
        elif self.kind == REFLECT:
            return f'{REFLECT} {self.root}'
        elif self.kind == BASIS:
            return f'{BASIS} {self.basis}'
        elif self.kind == SCALE:
            assert self.factor is not None
            return f'{SCALE} {fraction_str(self.factor)}'
        return NEGATE


@dataclass(frozen=True)
class ReductionTrace:
    start: FormClass
    end: FormClass
    steps: Tuple[TraceStep, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'steps', tuple(self.steps))

    def replay(self) -> FormClass:
        w = self.start
        for step in self.steps:
            w = step.apply(w)
        return w

    def render(self) -> str:
        return '\n'.join((
            f'START {self.start}',
            *(step.render() for step in self.steps),
            f'END {self.end}',
        )) + '\n'

    @property
    def reflections(self) -> List[HomologyClass]:
        return [step.root for step in self.steps if step.root is not None]

    def pull_back(self, x: HomologyClass) -> HomologyClass:
        """express a class of the end basis in the start basis"""
        for step in reversed(self.steps):
            if step.root is not None:
                x = reflect(x, step.root)
            elif step.kind == BASIS:
                x = change_basis(x, x.basis.counterpart())
        return x

    def _asdict(self):
        return {
            'start': self.start.to_literal(),
            'end': self.end.to_literal(),
            'steps': [step.render() for step in self.steps],
        }


### Reflections and reducedness


def reflect(x: Union[FormClass, HomologyClass], root: HomologyClass):
    """x -> x + (x.r) r, on the Poincare dual for forms"""

    if root.square != -2:
        raise NotARoot(f'{root} has square {root.square}, reflections need a -2 class')

    if isinstance(x, HomologyClass):
        k = x.dot(root)
        return HomologyClass(tuple(a + k * r for a, r in zip(x.coeffs, root.coeffs)), x.basis)

    # areas change by area(w, r) * (r . basis_i)
    delta = x.area(root)
    if delta == 0:
        return x
    shift = _gram_row(root)
    return FormClass(tuple(c + delta * s for c, s in zip(x.coeffs, shift)), x.basis)


def _gram_row(root: HomologyClass) -> Tuple[int, ...]:
    basis = root.basis
    v = root.coeffs
    if basis.is_h:
        return (v[0], *(-x for x in v[1:]))
    return (v[1], v[0], *(-x for x in v[2:]))


@enforce_types
def is_reduced(w: FormClass) -> bool:
    if w.basis.is_bf:
        return _is_reduced_bf(w)

    nu, c = w.nu, w.sizes
    k = len(c)
    if any(c[i] < c[i + 1] for i in range(k - 1)) or c[-1] <= 0:
        return False
    if k == 1:
        return nu > c[0]
    if k == 2:
        return c[0] + c[1] < nu
    return nu > c[0] and nu >= c[0] + c[1] + c[2]


def _is_reduced_bf(w: FormClass) -> bool:
    mu, f, a = w.coeffs[0], w.coeffs[1], w.sizes
    if not (mu >= f > 0):
        return False
    if not a:
        return True
    if any(a[i] < a[i + 1] for i in range(len(a) - 1)) or a[-1] <= 0 or a[0] >= f:
        return False
    return len(a) < 2 or a[0] + a[1] <= f


@enforce_types
def is_balanced(w: FormClass) -> bool:
    """False exactly when c1 >= c2+c3, c2 >= c3+c4 and c3 >= c4+c5 hold together"""

    if not w.basis.is_h or w.basis.n != 5:
        raise WrongK(f'balanced forms are defined on CP2#5 in the H basis, got {w.basis}')
    c1, c2, c3, c4, c5 = w.sizes
    return not (c1 >= c2 + c3 and c2 >= c3 + c4 and c3 >= c4 + c5)


### Descent


def _permute_root(basis: BasisTag, i: int, j: int) -> HomologyClass:
    return basis.e(i) - basis.e(j)


def _cremona_root(basis: BasisTag) -> HomologyClass:
    return parse_class('H - E1 - E2 - E3', basis)


def _descend(w: FormClass, steps: List[TraceStep], cap: int) -> FormClass:
    """sort by adjacent transpositions, Cremona while c1+c2+c3 > nu"""

    basis = w.basis
    k = basis.n
    cremona = _cremona_root(basis) if k >= 3 else None
    iterations = 0
    while True:
        swapped = True
        while swapped:
            swapped = False
            for i in range(1, k):
                if w.c(i) < w.c(i + 1):
                    root = _permute_root(basis, i, i + 1)
                    w = reflect(w, root)
                    steps.append(TraceStep(PERMUTE, root=root, i=i, j=i + 1))
                    swapped = True
                    iterations += 1
        if cremona is not None and w.c(1) + w.c(2) + w.c(3) > w.nu:
            w = reflect(w, cremona)
            steps.append(TraceStep(REFLECT, root=cremona))
            iterations += 1
            if w.nu <= 0:
                raise NotReducible(
                    f'Cremona descent reached non-positive H area {fraction_str(w.nu)}',
                    hints='The class is not in the symplectic cone of the standard canonical class',
                )
        else:
            return w
        if iterations > cap:
            raise NotReducible(
                f'Descent did not terminate within {cap} steps',
                hints='Raise ITERATION_CAP if the input is known to be symplectic',
            )


@enforce_types
def reduce_to_fundamental_domain(w: FormClass,
                                 normalize: bool=False,
                                 cap: Optional[int]=None) -> Tuple[FormClass, ReductionTrace]:
    """Reduce a symplectic class into the fundamental domain of the Cremona action"""

    cap = ITERATION_CAP if cap is None else cap
    start = w
    steps: List[TraceStep] = []

    if w.basis.is_bf and w.basis.n == 0:
        return _reduce_s2xs2(w, normalize)

    if w.basis.is_bf:
        w = change_basis(w, w.basis.counterpart())
        steps.append(TraceStep(BASIS, basis=w.basis))

    if w.nu < 0:
        w = w.scaled(-1)
        steps.append(TraceStep(NEGATE))
    if w.nu == 0:
        raise NotReducible(f'{start} has zero area on H')
    if w.square <= 0:
        raise NotReducible(
            f'{start} has square {fraction_str(w.square)}, symplectic classes have positive square',
        )

    w = _descend(w, steps, cap)

    k = w.basis.n
    if any(c < 0 for c in w.sizes):
        raise NotReducible(
            f'{start} reduces to {w}, which gives an exceptional class negative area',
            hints='The class is not in the symplectic cone of the standard canonical class',
        )

    blow_downs: List[HomologyClass] = []
    if w.c(k) == 0:
        blow_downs = [w.basis.e(i) for i in range(1, k + 1) if w.c(i) == 0]
    elif k == 2 and w.c(1) + w.c(2) == w.nu:
        blow_downs = [parse_class('H - E1 - E2', w.basis)]
    if blow_downs:
        trace = ReductionTrace(start, w, tuple(steps))
        raise DegenerateForm(
            f'{start} reduces to the boundary facet {w}',
            form=w,
            trace=trace,
            blow_downs=[(cls, trace.pull_back(cls)) for cls in blow_downs],
            hints='Blow down along ' + ', '.join(str(trace.pull_back(cls)) for cls in blow_downs),
        )

    if not is_reduced(w):
        raise NotReducible(f'{start} reduces to {w}, which is not a reduced form')

    if start.basis.is_bf:
        w = change_basis(w, start.basis)
        steps.append(TraceStep(BASIS, basis=w.basis))
    if normalize and not w.normalized:
        factor = 1 / w.scale_coeff
        w = w.scaled(factor)
        steps.append(TraceStep(SCALE, factor=factor))

    return w, ReductionTrace(start, w, tuple(steps))


def _reduce_s2xs2(w: FormClass, normalize: bool) -> Tuple[FormClass, ReductionTrace]:
    start = w
    steps: List[TraceStep] = []
    mu, f = w.coeffs
    if mu < 0 and f < 0:
        w = w.scaled(-1)
        steps.append(TraceStep(NEGATE))
    mu, f = w.coeffs
    if mu <= 0 or f <= 0:
        raise NotReducible(f'{start} gives B or F non-positive area')
    if mu < f:
        root = parse_class('B - F', w.basis)
        w = reflect(w, root)
        steps.append(TraceStep(REFLECT, root=root))
    if normalize and not w.normalized:
        factor = 1 / w.scale_coeff
        w = w.scaled(factor)
        steps.append(TraceStep(SCALE, factor=factor))
    return w, ReductionTrace(start, w, tuple(steps))


### Trace log


def parse_basis_tag(text: str) -> BasisTag:
    match = re.match(r'^(HBasis|BFBasis)\((\d+)\)$', text.strip())
    if not match:
        raise ParseError(f'Could not parse basis {text!r}', hints='Write HBasis(k) or BFBasis(n)')
    n = int(match.group(2))
    return BasisTag.H(n) if match.group(1) == 'HBasis' else BasisTag.BF(n)


@enforce_types
def parse_trace(text: str) -> ReductionTrace:
    lines = [line.strip() for line in text.splitlines() if line.strip() and not line.strip().startswith('#')]
    if len(lines) < 2 or not lines[0].startswith('START ') or not lines[-1].startswith('END '):
        raise ParseError('A trace starts with a START line and ends with an END line')

    start = parse_form(lines[0][len('START '):])
    end = parse_form(lines[-1][len('END '):])
    basis = start.basis
    steps: List[TraceStep] = []
    for line in lines[1:-1]:
        verb, _, rest = line.partition(' ')
        if verb == PERMUTE:
            try:
                i, j = (int(x) for x in rest.split())
            except ValueError:
                raise ParseError(f'Could not parse {line!r}', hints='Write PERMUTE i j')
            steps.append(TraceStep(PERMUTE, root=_permute_root(basis, i, j), i=i, j=j))
        elif verb == REFLECT:
            root = parse_class(rest, basis)
            if root.square != -2:
                raise NotARoot(f'{line!r} reflects in {root}, which has square {root.square}')
            steps.append(TraceStep(REFLECT, root=root))
        elif verb == NEGATE:
            steps.append(TraceStep(NEGATE))
        elif verb == BASIS:
            basis = parse_basis_tag(rest)
            steps.append(TraceStep(BASIS, basis=basis))
        elif verb == SCALE:
            steps.append(TraceStep(SCALE, factor=parse_rational(rest)))
        else:
            raise ParseError(f'Unknown trace step {verb!r}', hints='Steps are PERMUTE, REFLECT, NEGATE, BASIS or SCALE')
    return ReductionTrace(start, end, tuple(steps))


@enforce_types
def verify_trace(text: str) -> ReductionTrace:
    """replay a trace log and check that it lands on its END form"""

    trace = parse_trace(text)
    landed = trace.replay()
    if landed != trace.end:
        raise TraceMismatch(f'Replaying the trace gives {landed}, not the recorded END {trace.end}')
    return trace


### Orbit oracle


@enforce_types
def orbit_representative(w: FormClass, limit: Optional[int]=None) -> FormClass:
    """breadth-first search of the finite Weyl orbit for its unique point in the closed chamber"""
    from .roots import simple_roots

    limit = ORBIT_LIMIT if limit is None else limit
    if w.basis.is_bf:
        raise OutOfRange('the orbit oracle works in the H basis')
    if w.nu < 0:
        w = w.scaled(-1)
    generators = simple_roots(w.basis)

    seen = {w.coeffs}
    queue = deque([w])
    dominant = []
    while queue:
        current = queue.popleft()
        if all(current.area(root) >= 0 for root in generators):
            dominant.append(current)
        for root in generators:
            image = reflect(current, root)
            if image.coeffs not in seen:
                seen.add(image.coeffs)
                queue.append(image)
                if len(seen) > limit:
                    raise OutOfRange(
                        f'Weyl orbit of {w} exceeds {limit} points',
                        hints='Raise ORBIT_LIMIT to search larger orbits',
                    )
    assert len(dominant) == 1, f'orbit of {w} meets the closed chamber {len(dominant)} times'
    return dominant[0]


### Sampling


def chamber_vertices(k: int) -> List[Tuple[Fraction, ...]]:
    """vertices O, A, B, 3-point, .., (k-1)-point, M of the normalized chamber"""

    third = Fraction(1, 3)
    zero = Fraction(0)
    vertices = [
        tuple([zero] * k),
        tuple([Fraction(1)] + [zero] * (k - 1)),
    ]
    if k >= 2:
        vertices.append(tuple([Fraction(1, 2)] * 2 + [zero] * (k - 2)))
    for j in range(3, k + 1):
        vertices.append(tuple([third] * j + [zero] * (k - j)))
    return vertices


def random_reduced_form(k: int, rng: Optional[random.Random]=None, spread: int=12) -> FormClass:
    """a normalized reduced HBasis(k) form drawn from the interior of the chamber"""

    rng = rng or random.Random()
    vertices = chamber_vertices(k)
    weights = [Fraction(rng.randint(1, spread)) for _ in vertices]
    total = sum(weights)
    sizes = tuple(
        sum((wt * v[i] for wt, v in zip(weights, vertices)), Fraction(0)) / total
        for i in range(k)
    )
    w = FormClass((Fraction(1), *sizes), BasisTag.H(k))
    assert is_reduced(w), w
    return w


def random_reduced_bf_form(n: int, rng: Optional[random.Random]=None) -> FormClass:
    """a reduced BFBasis(n) form with F area 1"""

    rng = rng or random.Random()
    if n == 0:
        mu = 1 + Fraction(rng.randint(0, 8), rng.randint(1, 4))
        return FormClass((mu, Fraction(1)), BasisTag.BF(0))
    w = change_basis(random_reduced_form(n + 1, rng), BasisTag.BF(n)).normalize()
    assert is_reduced(w), w
    return w


def random_weyl_scramble(w: FormClass, rng: Optional[random.Random]=None, steps: int=12) -> FormClass:
    """apply random simple reflections, then shuffle the exceptional areas"""
    from .roots import simple_roots

    rng = rng or random.Random()
    generators = simple_roots(w.basis)
    for _ in range(steps if generators else 0):
        w = reflect(w, rng.choice(generators))
    sizes = list(w.sizes)
    rng.shuffle(sizes)
    return w.with_sizes(sizes)
