from fractions import Fraction

import pytest

from chamberkit.cone import random_face_form
from chamberkit.errors import DegenerateForm, OutOfRange
from chamberkit.invariants import (
    FLAG_PI1_INTERVAL,
    FLAG_Q_CONJECTURAL,
    TORELLI_PB4,
    TORELLI_PB5,
    TORELLI_TRIVIAL,
    Pi1Rank,
    analyze,
    emit_q_table,
    emit_table,
    k5_rank_certificate,
    pack_sizes,
    q_by_manifold,
    q_invariant,
)
from chamberkit.lattice import parse_form
from chamberkit.published import PUBLISHED_K5_RANKS, PUBLISHED_TABLES
from chamberkit.reduction import random_reduced_form, random_weyl_scramble
from chamberkit.roots import DynkinType

from .fixtures import *


def test_two_and_three_point_tables_match():
    assert emit_table(2).discrepancies == []
    assert emit_table(3).discrepancies == []


def test_four_point_table_flags_fundamental_groups():
    doc = emit_table(4)
    assert doc.flagged_labels == ['MAC', 'MBC', 'MOAB']
    assert 'MAC: printed π₁ rank 7, derived 8' in doc.discrepancies
    assert all('π₁' in line for line in doc.discrepancies)


def test_five_point_table():
    doc = emit_table(5)
    assert len(doc.rows) == 32
    for row in doc.rows:
        assert row.N == PUBLISHED_TABLES[5][row.label].N
    assert doc.flagged_labels == ['MC']
    assert doc.discrepancies == ['MC: printed Γ_L A2×A2, derived A1×A1×A2']


def test_five_point_trichotomy():
    rows = emit_table(5).rows
    assert sum(row.N == 0 for row in rows) == 1
    assert sum(row.N == 8 for row in rows) == 1
    assert sum(row.N > 8 for row in rows) == 30


def test_five_point_ranks():
    for row in emit_table(5).rows:
        if row.label == 'MA':
            assert not row.pi1.is_exact
            assert (row.pi1.lo, row.pi1.hi) == (5, 9)
            assert str(row.pi1) == 'rank 5..9'
            assert row.Q is None
            assert row.pi0.torelli == TORELLI_PB4
            assert {FLAG_PI1_INTERVAL, FLAG_Q_CONJECTURAL} <= set(row.flags)
        else:
            assert row.pi1.rank == PUBLISHED_K5_RANKS[row.label]
            assert row.Q == 15


def test_table_range():
    with pytest.raises(OutOfRange):
        emit_table(6)
    with pytest.raises(OutOfRange):
        emit_table(1)


def test_q_table():
    rows = {row.manifold: row for row in emit_q_table()}
    assert q_by_manifold() == {
        'CP2#1': 1, 'CP2#2': 3, 'CP2#3': 6, 'CP2#4': 10, 'CP2#5': 15, 'S2xS2': 1,
    }
    assert all(row.constant for row in rows.values())
    assert rows['CP2#5'].conjectural
    assert not rows['CP2#4'].conjectural


@pytest.mark.parametrize('k', [1, 2, 3, 4])
def test_q_is_constant_on_random_forms(k, rng):
    expected = q_by_manifold()[f'CP2#{k}']
    for _ in range(5):
        w = random_weyl_scramble(random_reduced_form(k, rng), rng)
        assert q_invariant(w) == expected


@pytest.mark.parametrize('k', [1, 2, 3, 4])
def test_q_is_constant_on_random_wall_forms(k, rng):
    expected = q_by_manifold()[f'CP2#{k}']
    for _ in range(5):
        face, w = random_face_form(k, rng)
        report = analyze(random_weyl_scramble(w, rng))
        assert report.label == face.label
        assert report.Q == expected


def test_analyze_monotone_five_points():
    report = analyze(parse_form('(3 | 1, 1, 1, 1, 1)'))
    assert report.label == 'M'
    assert report.gamma_L == DynkinType.parse('D5')
    assert (report.N, report.N_L) == (0, 20)
    assert report.pi0.torelli == TORELLI_PB5
    assert report.pi0.weyl_order == 1920
    assert report.pi1.rank == 0
    assert report.Q == 15
    assert report.manifold == 'CP2#5'


def test_analyze_scrambled_form():
    report = analyze(parse_form('(6 | 3, 2, 2)'))
    assert report.reduced == parse_form('(1 | 2/5, 1/5, 1/5)')
    assert report.label == 'MOA'
    assert report.trace is not None
    assert report.pi1.rank == report.N + 2


def test_analyze_bf_form():
    report = analyze(parse_form('(3, 1 | 1/2)'))
    assert report.manifold == 'CP2#2'
    assert report.reduced == parse_form('(1 | 5/7, 1/7)')
    assert report.label == 'BOA'
    assert report.Q == 3


def test_analyze_s2xs2():
    monotone = analyze(parse_form('(1, 1 | )'))
    assert monotone.manifold == 'S2xS2'
    assert (monotone.N, monotone.N_L) == (0, 1)
    assert str(monotone.pi1) == 'Z2 ⊕ Z2'
    assert monotone.Q == 1
    generic = analyze(parse_form('(1, 2 | )'))
    assert generic.N == 1
    assert str(generic.pi1) == 'Z ⊕ Z2 ⊕ Z2'
    assert generic.Q == 1


def test_analyze_errors():
    with pytest.raises(DegenerateForm):
        analyze(parse_form('(1 | 1/2, 1/2, 1/2)'))
    with pytest.raises(OutOfRange):
        analyze(parse_form('(1 | 1/3, 1/4, 1/5, 1/6, 1/7, 1/8)'))


def test_rank_certificates():
    assert k5_rank_certificate(parse_form('(1 | 2/5, 3/10, 1/4, 1/5, 1/10)')) == 'direct: c1 < 1/2'
    certificate = k5_rank_certificate(parse_form('(1 | 1/2, 1/5, 1/5, 1/5, 1/10)'))
    assert certificate == 'cremona: reflect in H - E3 - E4 - E5'
    assert k5_rank_certificate(parse_form('(1 | 1/2, 1/4, 1/8, 1/16, 1/32)')) is None


def test_pi1_strings():
    assert str(Pi1Rank.exact(0)) == 'trivial'
    assert str(Pi1Rank.exact(1)) == 'Z'
    assert str(Pi1Rank.exact(7)) == 'Z^7'
    assert Pi1Rank.exact(3).rank == 3


def test_pack_sizes():
    sizes = pack_sizes(parse_form('(2 | 1, 1/2, 1/2, 1/4, 1/4)'))
    assert sizes.sizes == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4), Fraction(1, 8), Fraction(1, 8))
    with pytest.raises(OutOfRange):
        pack_sizes(parse_form('(1 | 1/2, 1/4)'))


def test_monotone_small_k_torelli():
    for row in emit_table(3).rows:
        assert row.pi0.torelli == TORELLI_TRIVIAL
