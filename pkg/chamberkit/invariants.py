__package__ = 'chamberkit'

from fractions import Fraction
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .cone import FaceDescriptor, enumerate_faces, identify_face
from .errors import NotBalanced, OutOfRange
from .lattice import BasisTag, FormClass, change_basis, check_k
from .packing import PackingSpec, cremona_to_packing_form, relative_packing_feasible
from .published import (
    PUBLISHED_K5_RANKS,
    PUBLISHED_Q,
    PublishedRow,
    published_row,
)
from .reduction import ReductionTrace, is_balanced, reduce_to_fundamental_domain
from .roots import DynkinType, ambient_type, positive_root_count, weyl_order
from .util import enforce_types


TORELLI_TRIVIAL = 'trivial'
TORELLI_PB4 = 'PB4_mod_center'
TORELLI_PB5 = 'PB5_mod_center'
TORELLI_UNKNOWN = 'unknown'

EXACT = 'exact'
INTERVAL = 'interval'

# free rank of pi_1 of the monotone symplectomorphism group
MONOTONE_RANKS = {1: 1, 2: 2, 3: 2, 4: 0}

# rank pi_1 on the MA wall (N = 8) is only bounded
MA_WALL_PI1_BOUNDS = (5, 9)

# abelianization rank of the Torelli part subtracted in Q
TORELLI_RANKS = {TORELLI_TRIVIAL: 0, TORELLI_PB5: 5}

S2XS2_TORSION = ('Z2', 'Z2')

FLAG_PI1_INTERVAL = 'pi1-interval'
FLAG_Q_CONJECTURAL = 'q-conjectural'
FLAG_RANK_UNCERTIFIED = 'rank-hypothesis-uncertified'


@dataclass(frozen=True)
class Pi0Description:
    torelli: str
    quotient: DynkinType
    exact_sequence_note: str = ''

    def __post_init__(self):
        self.typecheck()

    def typecheck(self) -> None:
        assert self.torelli in (TORELLI_TRIVIAL, TORELLI_PB4, TORELLI_PB5, TORELLI_UNKNOWN)
        if self.torelli == TORELLI_PB4:
            assert str(self.quotient) == 'D4'
        if self.torelli == TORELLI_PB5:
            assert str(self.quotient) == 'D5'

    @property
    def weyl_order(self) -> int:
        return weyl_order(self.quotient)

    def _asdict(self):
        return {
            'torelli': self.torelli,
            'weyl': str(self.quotient),
            'weylOrder': self.weyl_order,
            'note': self.exact_sequence_note,
        }


@dataclass(frozen=True)
class Pi1Rank:
    kind: str
    lo: int
    hi: int
    torsion: Tuple[str, ...] = field(default_factory=tuple)
    basis_note: str = ''
    certificate: Optional[str] = None

    def __post_init__(self):
        self.typecheck()

    def typecheck(self) -> None:
        assert self.kind in (EXACT, INTERVAL)
        assert 0 <= self.lo <= self.hi
        assert self.kind == INTERVAL or self.lo == self.hi

    @classmethod
    def exact(cls, rank: int, **kwargs) -> 'Pi1Rank':
        return cls(EXACT, rank, rank, **kwargs)

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT

    @property
    def rank(self) -> Optional[int]:
        return self.lo if self.is_exact else None

    def __str__(self) -> str:
        if not self.is_exact:
            return f'rank {self.lo}..{self.hi}'
        free = 'trivial' if self.lo == 0 else ('Z' if self.lo == 1 else f'Z^{self.lo}')
        if self.torsion:
            parts = [] if self.lo == 0 else [free]
            return ' ⊕ '.join([*parts, *self.torsion])
        return free

    def _asdict(self):
        return {
            'kind': self.kind,
            'lo': self.lo,
            'hi': self.hi,
            'torsion': list(self.torsion),
            'group': str(self),
            'certificate': self.certificate,
        }


@dataclass(frozen=True)
class SympReport:
    manifold: str
    input: FormClass
    reduced: FormClass
    face: Optional[FaceDescriptor]
    gamma_L: DynkinType
    N: int
    N_L: int
    pi0: Pi0Description
    pi1: Pi1Rank
    Q: Optional[int]
    paper_discrepancies: Tuple[str, ...] = field(default_factory=tuple)
    flags: Tuple[str, ...] = field(default_factory=tuple)
    trace: Optional[ReductionTrace] = None

    def __post_init__(self):
        self.typecheck()

    def typecheck(self) -> None:
        assert self.N + self.N_L == positive_root_count(ambient_type(self.reduced.basis))
        if self.Q is not None and self.pi1.is_exact:
            torelli_rank = TORELLI_RANKS.get(self.pi0.torelli, 0)
            assert self.Q == positive_root_count(self.gamma_L) + self.pi1.lo - torelli_rank

    @property
    def label(self) -> Optional[str]:
        return self.face.label if self.face else None

    def _asdict(self):
        return {
            'manifold': self.manifold,
            'input': self.input.to_literal(),
            'reduced': self.reduced.to_literal(),
            'face': self.label,
            'conditions': self.face.conditions if self.face else None,
            'gammaL': str(self.gamma_L),
            'N': self.N,
            'NL': self.N_L,
            'pi0': self.pi0._asdict(),
            'pi1': self.pi1._asdict(),
            'Q': self.Q,
            'discrepancies': list(self.paper_discrepancies),
            'flags': list(self.flags),
        }


### Face level invariants


def k5_rank_certificate(w: FormClass) -> Optional[str]:
    """how the all-balls-below-half hypothesis of the N - 5 rank formula is met, if it is"""

    if w.c(1) < Fraction(1, 2):
        return 'direct: c1 < 1/2'
    if not is_balanced(w):
        return None
    try:
        moved = cremona_to_packing_form(w)
    except NotBalanced:
        return None
    packing = relative_packing_feasible(moved.packing_spec)
    if moved.checks_positive and packing.feasible and not packing.boundary:
        return f'cremona: reflect in {moved.root}'
    return None


def _face_invariants(face: FaceDescriptor) -> Tuple[Pi0Description, Pi1Rank, Optional[int], List[str]]:
    k, gamma, N = face.k, face.gamma_L, face.N
    pr = positive_root_count(gamma)
    flags: List[str] = []

    if k <= 4:
        pi0 = Pi0Description(TORELLI_TRIVIAL, gamma, 'pi0 is the Weyl group of the Lagrangian system')
        pi1 = Pi1Rank.exact(N + MONOTONE_RANKS[k], basis_note=f'N + {MONOTONE_RANKS[k]} from the monotone case')
        return pi0, pi1, pr + pi1.lo, flags

    if N == 0:
        pi0 = Pi0Description(TORELLI_PB5, gamma, '1 -> PB5(S2)/Z2 -> pi0 -> W(D5) -> 1')
        pi1 = Pi1Rank.exact(0, basis_note='monotone')
        return pi0, pi1, pr + pi1.lo - TORELLI_RANKS[TORELLI_PB5], flags

    if N == 8:
        pi0 = Pi0Description(TORELLI_PB4, gamma, '1 -> PB4(S2)/Z2 -> pi0 -> W(D4) -> 1')
        lo, hi = MA_WALL_PI1_BOUNDS
        pi1 = Pi1Rank(INTERVAL, lo, hi, basis_note='only bounds are known on this wall')
        flags += [FLAG_PI1_INTERVAL, FLAG_Q_CONJECTURAL]
        return pi0, pi1, None, flags

    assert N > 8, f'no reduced form on CP2#5 has N = {N}'
    certificate = k5_rank_certificate(face.representative)
    if certificate is None:
        flags.append(FLAG_RANK_UNCERTIFIED)
    pi0 = Pi0Description(TORELLI_TRIVIAL, gamma, 'more than 8 symplectic -2 spheres')
    pi1 = Pi1Rank.exact(N - 5, basis_note='N - 5', certificate=certificate)
    return pi0, pi1, pr + pi1.lo, flags


def compare_published(face: FaceDescriptor, pi1: Pi1Rank, row: Optional[PublishedRow]) -> List[str]:
    if row is None:
        return []
    found = []
    printed = DynkinType.parse(row.gamma_L)
    if printed != face.gamma_L:
        found.append(f'{row.label}: printed Γ_L {printed}, derived {face.gamma_L}')
    if row.N != face.N:
        found.append(f'{row.label}: printed N {row.N}, derived {face.N}')
    if row.pi1_rank is not None and pi1.is_exact and row.pi1_rank != pi1.lo:
        found.append(f'{row.label}: printed π₁ rank {row.pi1_rank}, derived {pi1.lo}')
    if face.k == 5 and row.label in PUBLISHED_K5_RANKS and pi1.is_exact:
        quoted = PUBLISHED_K5_RANKS[row.label]
        if quoted != pi1.lo:
            found.append(f'{row.label}: quoted π₁ rank {quoted}, derived {pi1.lo}')
    return found


def face_report(face: FaceDescriptor,
                source: Optional[FormClass]=None,
                trace: Optional[ReductionTrace]=None) -> SympReport:
    pi0, pi1, q, flags = _face_invariants(face)
    row = published_row(face.k, face.label)
    return SympReport(
        manifold=face.representative.basis.manifold,
        input=source or face.representative,
        reduced=face.representative,
        face=face,
        gamma_L=face.gamma_L,
        N=face.N,
        N_L=face.N_L,
        pi0=pi0,
        pi1=pi1,
        Q=q,
        paper_discrepancies=tuple(compare_published(face, pi1, row)),
        flags=tuple(flags),
        trace=trace,
    )


def _s2xs2_report(w: FormClass) -> SympReport:
    reduced, trace = reduce_to_fundamental_domain(w, normalize=True)
    monotone = reduced.mu == 1
    gamma = DynkinType((('A', 1),)) if monotone else DynkinType(())
    N = 0 if monotone else 1
    pi1 = Pi1Rank.exact(N, torsion=S2XS2_TORSION, basis_note='Z2 ⊕ Z2 torsion of the monotone case')
    return SympReport(
        manifold=reduced.basis.manifold,
        input=w,
        reduced=reduced,
        face=None,
        gamma_L=gamma,
        N=N,
        N_L=1 - N,
        pi0=Pi0Description(TORELLI_TRIVIAL, gamma, 'swap of the two factors' if monotone else 'trivial'),
        pi1=pi1,
        Q=positive_root_count(gamma) + N,
        trace=trace,
    )


@enforce_types
def analyze(w: FormClass) -> SympReport:
    """reduce w and assemble pi0, pi1 and Q of its symplectomorphism group"""

    if w.basis.is_bf and w.basis.n == 0:
        return _s2xs2_report(w)

    reduced, trace = reduce_to_fundamental_domain(w)
    if reduced.basis.is_bf:
        reduced = change_basis(reduced, reduced.basis.counterpart())
    reduced = reduced.normalize()
    check_k(reduced.basis.n, 1, 5)

    return face_report(identify_face(reduced), source=w, trace=trace)


### Tables


@dataclass(frozen=True)
class TableDocument:
    k: int
    rows: Tuple[SympReport, ...]

    @property
    def discrepancies(self) -> List[str]:
        return [d for row in self.rows for d in row.paper_discrepancies]

    @property
    def flagged_labels(self) -> List[str]:
        return [row.label for row in self.rows if row.paper_discrepancies and row.label]

    def _asdict(self):
        return {
            'k': self.k,
            'manifold': f'CP2#{self.k}',
            'rows': [row._asdict() for row in self.rows],
            'discrepancies': self.discrepancies,
        }


@enforce_types
def emit_table(k: int) -> TableDocument:
    """one row per face of the reduced cone with Γ_L, N, π₁ and area conditions"""
    check_k(k, 2, 5)
    return TableDocument(k=k, rows=tuple(face_report(face) for face in enumerate_faces(k)))


@enforce_types
def q_invariant(w: FormClass) -> Optional[int]:
    """PR[Γ_L] + rank π₁ (- Torelli rank), None when π₁ is only bounded"""
    return analyze(w).Q


@dataclass(frozen=True)
class QRow:
    manifold: str
    derived: Optional[int]
    values: Tuple[int, ...]
    published: str
    conjectural: bool

    @property
    def constant(self) -> bool:
        return len(set(self.values)) == 1

    def _asdict(self):
        return {
            'manifold': self.manifold,
            'Q': self.derived,
            'values': list(self.values),
            'constant': self.constant,
            'published': self.published,
            'conjectural': self.conjectural,
        }


def _q_values(k: int) -> Tuple[List[int], bool]:
    values, conjectural = [], False
    for face in enumerate_faces(k):
        report = face_report(face)
        if report.Q is None:
            conjectural = True
        else:
            values.append(report.Q)
    return values, conjectural


@enforce_types
def emit_q_table() -> List[QRow]:
    """Q per manifold: constant over every face wherever π₁ is known exactly"""

    rows = []
    for k in range(1, 6):
        values, conjectural = _q_values(k)
        distinct = sorted(set(values))
        rows.append(QRow(
            manifold=f'CP2#{k}',
            derived=distinct[0] if len(distinct) == 1 else None,
            values=tuple(distinct),
            published=PUBLISHED_Q[k],
            conjectural=conjectural,
        ))

    s2xs2 = sorted({
        _s2xs2_report(FormClass((mu, Fraction(1)), BasisTag.BF(0))).Q or 0
        for mu in (Fraction(1), Fraction(3, 2))
    })
    rows.append(QRow(
        manifold='S2xS2',
        derived=s2xs2[0] if len(s2xs2) == 1 else None,
        values=tuple(s2xs2),
        published='1',
        conjectural=False,
    ))
    return rows


def q_by_manifold() -> Dict[str, Optional[int]]:
    return {row.manifold: row.derived for row in emit_q_table()}


def pack_sizes(w: FormClass) -> PackingSpec:
    """ball sizes of a form on CP2#5 relative to its line"""
    if not w.basis.is_h or w.basis.n != 5:
        raise OutOfRange(f'packings place five balls, got {w.basis}')
    return PackingSpec(tuple(c / w.nu for c in w.sizes))
