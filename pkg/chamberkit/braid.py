"""
Abelian bookkeeping for pure braid groups of the sphere.

PB_n(S^2) is generated by A_ij (1 <= i < j <= n) subject to, for every strand j,

    (A_1j ... A_(j-1)j) (A_j(j+1) ... A_jn) = 1

so after abelianizing each surface relation is the row of the vertex-edge
incidence matrix of the complete graph K_n.  The full twist tau is the product
of all A_ij and has order two; the quotient presentation sets tau = 1.
"""

__package__ = 'chamberkit'

import re

from math import gcd
from itertools import combinations
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from .errors import OutOfRange, ParseError
from .util import enforce_types


Generator = Tuple[int, int]

WORD_TOKEN_RE = re.compile(r'A_?\{?(\d+),(\d+)\}?|A_?(\d)(\d)|(tau)')
EXPONENT_RE = re.compile(r'^\^\{?(-?\d+)\}?')


@dataclass(frozen=True)
class PureBraidPresentation:
    n: int
    quotient_full_twist: bool
    generators: Tuple[Generator, ...]
    relations: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        self.typecheck()

    def typecheck(self) -> None:
        assert len(self.generators) == self.n * (self.n - 1) // 2
        for row in self.relations:
            assert len(row) == len(self.generators), 'relations only use declared generators'

    @property
    def surface_relations(self) -> Tuple[Tuple[int, ...], ...]:
        return self.relations[:self.n]

    def index(self, gen: Generator) -> int:
        i, j = sorted(gen)
        try:
            return self.generators.index((i, j))
        except ValueError:
            raise ParseError(f'A{i}{j} is not a generator of PB_{self.n}(S2)')

    def full_twist(self) -> Tuple[int, ...]:
        return tuple([1] * len(self.generators))

    def _asdict(self):
        return {
            'n': self.n,
            'quotient': self.quotient_full_twist,
            'generators': [generator_name(g) for g in self.generators],
            'relations': [list(row) for row in self.relations],
        }


@dataclass(frozen=True)
class Abelianization:
    free_rank: int
    torsion: Tuple[int, ...]

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append('Z' if self.free_rank == 1 else f'Z^{self.free_rank}')
        parts += [f'Z{d}' for d in self.torsion]
        return ' ⊕ '.join(parts) or '0'

    def _asdict(self):
        return {'freeRank': self.free_rank, 'torsion': list(self.torsion), 'group': str(self)}


def generator_name(gen: Generator) -> str:
    return 'A{}{}'.format(*gen) if max(gen) < 10 else 'A{},{}'.format(*gen)


@enforce_types
def build_presentation(n: int, quotient_full_twist: bool=True) -> PureBraidPresentation:
    if n < 3:
        raise OutOfRange(f'sphere braid presentations need n >= 3 strands, got {n}')

    generators = tuple(combinations(range(1, n + 1), 2))
    relations = [
        tuple(1 if strand in gen else 0 for gen in generators)
        for strand in range(1, n + 1)
    ]
    if quotient_full_twist:
        relations.append(tuple([1] * len(generators)))
    return PureBraidPresentation(
        n=n,
        quotient_full_twist=quotient_full_twist,
        generators=generators,
        relations=tuple(relations),
    )


### Smith normal form


def _divisor_chain(values: Sequence[int]) -> List[int]:
    """rearrange non-zero diagonal entries into d1 | d2 | .. with the same product"""
    chain = sorted(abs(v) for v in values if v)
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            a, b = chain[i], chain[j]
            g = gcd(a, b)
            chain[i], chain[j] = g, a * b // g
    return chain


def elementary_divisors(rows: Sequence[Sequence[int]], width: int) -> List[int]:
    if not rows:
        return []
    matrix = DomainMatrix([[ZZ(int(x)) for x in row] for row in rows], (len(rows), width), ZZ)
    return _divisor_chain([int(d) for d in invariant_factors(matrix)])


def cokernel(rows: Sequence[Sequence[int]], width: int) -> Abelianization:
    divisors = elementary_divisors(rows, width)
    return Abelianization(
        free_rank=width - len(divisors),
        torsion=tuple(d for d in divisors if d > 1),
    )


@enforce_types
def abelianization(p: PureBraidPresentation) -> Abelianization:
    return cokernel(p.relations, len(p.generators))


@enforce_types
def span_check(p: PureBraidPresentation, subset: list) -> bool:
    """
    True when the images of subset generate the abelianization.

    This is necessary for subset to generate the group, not sufficient.
    """
    units = []
    for gen in subset:
        row = [0] * len(p.generators)
        row[p.index(gen)] = 1
        units.append(tuple(row))
    quotient = cokernel([*p.relations, *units], len(p.generators))
    return quotient.free_rank == 0 and not quotient.torsion


### Words


def parse_word(text: str, p: PureBraidPresentation) -> Tuple[int, ...]:
    """exponent vector of a word like 'A14 A24 A34^-1 A45' or 'tau^2'"""

    vector = [0] * len(p.generators)
    rest = text.replace(' ', '').replace('*', '').replace('·', '')
    if not rest:
        raise ParseError('Empty braid word', hints='Write words like A14A24A34A45')
    while rest:
        match = WORD_TOKEN_RE.match(rest)
        if not match:
            raise ParseError(f'Could not parse braid word at {rest!r}', hints='Generators are written A14, A_{1,4} or tau')
        rest = rest[match.end():]
        exponent = 1
        power = EXPONENT_RE.match(rest)
        if power:
            exponent = int(power.group(1))
            rest = rest[power.end():]
        if match.group(5):
            vector = [v + exponent for v in vector]
            continue
        i, j = (match.group(1), match.group(2)) if match.group(1) else (match.group(3), match.group(4))
        vector[p.index((int(i), int(j)))] += exponent
    return tuple(vector)


@enforce_types
def word_is_trivial(p: PureBraidPresentation, word: tuple) -> bool:
    """the word dies in the abelianization iff adding it as a relation changes nothing"""
    before = cokernel(p.relations, len(p.generators))
    after = cokernel([*p.relations, word], len(p.generators))
    return before == after


def word_image(p: PureBraidPresentation, text: str) -> Dict[str, object]:
    vector = parse_word(text, p)
    return {
        'word': text,
        'exponents': {generator_name(g): e for g, e in zip(p.generators, vector) if e},
        'trivial': word_is_trivial(p, vector),
    }


### Artin generators


def artin_word(i: int, j: int) -> List[Tuple[int, int]]:
    """A_ij = s_(j-1) .. s_(i+1) s_i^2 s_(i+1)^-1 .. s_(j-1)^-1 as (index, exponent) pairs"""
    if not 1 <= i < j:
        raise OutOfRange(f'A{i}{j} needs 1 <= i < j')
    down = [(m, 1) for m in range(j - 1, i, -1)]
    up = [(m, -1) for m in range(i + 1, j)]
    return [*down, (i, 2), *up]


def sigma_exponent(word: Sequence[Tuple[int, int]]) -> int:
    """image in the abelianization Z of the full braid group"""
    return sum(exponent for _, exponent in word)
