from fractions import Fraction

import pytest

from chamberkit.cone import random_face_form
from chamberkit.errors import DegenerateForm, NotReducible, TraceMismatch
from chamberkit.lattice import BasisTag, FormClass, parse_class, parse_form
from chamberkit.reduction import (
    is_balanced,
    is_reduced,
    orbit_representative,
    random_reduced_bf_form,
    random_reduced_form,
    random_weyl_scramble,
    reduce_to_fundamental_domain,
    reflect,
    verify_trace,
)

from .fixtures import *


def test_reflection_is_an_involution():
    h3 = BasisTag.H(3)
    root = parse_class('H - E1 - E2 - E3', h3)
    x = parse_class('2H - E1', h3)
    assert reflect(reflect(x, root), root) == x
    assert reflect(root, root) == -root
    w = parse_form('(1 | 1/2, 1/3, 1/4)')
    assert reflect(reflect(w, root), root) == w


def test_reduce_known_form():
    reduced, trace = reduce_to_fundamental_domain(parse_form('(6 | 3, 2, 2)'), normalize=True)
    assert reduced == parse_form('(1 | 2/5, 1/5, 1/5)')
    assert reduced.normalized
    assert trace.replay() == reduced


def test_reduce_sorts_sizes():
    reduced, trace = reduce_to_fundamental_domain(parse_form('(1 | 1/5, 1/3, 1/4)'))
    assert reduced == parse_form('(1 | 1/3, 1/4, 1/5)')
    assert all(step.kind == 'PERMUTE' for step in trace.steps)


def test_monotone_points_are_degenerate():
    with pytest.raises(DegenerateForm) as err:
        reduce_to_fundamental_domain(parse_form('(1 | 1/2, 1/2, 1/2)'))
    assert err.value.form.coeffs == (Fraction(1, 2), 0, 0, 0)
    assert len(err.value.blow_downs) == 3


def test_two_point_boundary_blows_down_the_line():
    with pytest.raises(DegenerateForm) as err:
        reduce_to_fundamental_domain(parse_form('(1 | 1/2, 1/2)'))
    assert err.value.blow_downs


def test_non_symplectic_square():
    with pytest.raises(NotReducible):
        reduce_to_fundamental_domain(parse_form('(1 | 1, 1)'))


def test_bf_forms_reduce_in_their_own_basis():
    reduced, trace = reduce_to_fundamental_domain(parse_form('(1, 3 | 1/2)'), normalize=True)
    assert reduced.basis == BasisTag.BF(1)
    assert is_reduced(reduced)
    assert trace.replay() == reduced


def test_s2xs2_swaps_factors():
    reduced, _ = reduce_to_fundamental_domain(parse_form('(1, 2 | )'), normalize=True)
    assert reduced.coeffs == (Fraction(2), Fraction(1))


def test_scrambles_reduce_back(rng):
    # 100 scrambles per k <= 5
    for k in range(1, 6):
        for _ in range(100):
            w = random_reduced_form(k, rng)
            scrambled = random_weyl_scramble(w, rng)
            reduced, trace = reduce_to_fundamental_domain(scrambled, normalize=True)
            assert reduced == w
            assert trace.replay() == reduced
            assert verify_trace(trace.render()).end == reduced


def test_wall_scrambles_reduce_back(rng):
    for k in range(1, 6):
        for _ in range(40):
            _, w = random_face_form(k, rng)
            scrambled = random_weyl_scramble(w, rng)
            reduced, trace = reduce_to_fundamental_domain(scrambled, normalize=True)
            assert reduced == w
            assert reduce_to_fundamental_domain(reduced)[0] == reduced
            assert verify_trace(trace.render()).end == reduced


def test_orbit_oracle_agrees_with_descent(rng):
    for k in (3, 4, 5):
        for _ in range(5):
            w = random_reduced_form(k, rng)
            scrambled = random_weyl_scramble(w, rng, steps=6)
            assert orbit_representative(scrambled) == w


def test_orbit_oracle_on_walls(rng):
    for k in (3, 4, 5):
        for _ in range(5):
            _, w = random_face_form(k, rng)
            assert orbit_representative(random_weyl_scramble(w, rng, steps=6)) == w


def test_random_bf_forms_are_reduced(rng):
    for n in range(0, 5):
        for _ in range(10):
            assert is_reduced(random_reduced_bf_form(n, rng))


def test_tampered_trace_is_rejected():
    _, trace = reduce_to_fundamental_domain(parse_form('(6 | 3, 2, 2)'))
    lines = trace.render().splitlines()
    lines[-1] = 'END (1 | 1/3, 1/3, 1/3)'
    with pytest.raises(TraceMismatch):
        verify_trace('\n'.join(lines))


def test_balanced():
    assert is_balanced(parse_form('(1 | 2/5, 3/10, 1/4, 1/5, 1/10)'))
    assert not is_balanced(parse_form('(1 | 9/20, 1/5, 1/10, 1/20, 1/40)'))
