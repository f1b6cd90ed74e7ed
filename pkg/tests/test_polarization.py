import itertools
import random
from math import gcd, isqrt

import pytest
from hypothesis import given, strategies as st

from cusplab.errors import NotRepresentable, ZeroVector
from cusplab.lattice import NoneWithinBound
from cusplab.polarization import (PolarizationVector, classify_mod6, complement_lattice,
                                  construct_polarization, descent_check, dual_coordinates,
                                  elliptic_search, is_primitive_in_dual, la_norm,
                                  non_representation, self_intersection)
from cusplab.quotient_correspondence import LX_GRAM, lx_gram
from cusplab.linalg import Matrix


@pytest.mark.parametrize("v, d", [((1, 1, 0, 0), 6), ((1, 0, 0, 1), 2), ((0, 0, 0, 0), 0)])
def test_self_intersection_examples(v, d):
    assert self_intersection(v) == d


def test_closed_form_matches_the_gram_matrix():
    rng = random.Random(2)
    L = lx_gram()
    for _ in range(10_000):
        v = tuple(rng.randint(-50, 50) for _ in range(4))
        assert self_intersection(v) == L.norm(v)


def test_mod6_classes():
    assert classify_mod6() == {0, 2}
    assert 4 not in classify_mod6()
    assert self_intersection((1, 0, 0, 1)) % 6 == 2


def test_mod6_recomputed_over_a_larger_box():
    # residues are periodic mod 6, so a box of width 6 already sees all of them
    L = lx_gram()
    seen = {L.norm(v) % 6 for v in itertools.product(range(-3, 9), repeat=4)}
    assert seen == classify_mod6(LX_GRAM)


def test_construct_examples():
    assert construct_polarization(6) == PolarizationVector(1, 1, 0, 0)
    assert construct_polarization(8) == PolarizationVector(1, 1, 0, 1)
    assert construct_polarization(2) == PolarizationVector(1, 0, 0, 1)
    with pytest.raises(NotRepresentable, match="4 = 4 mod 6"):
        construct_polarization(4)
    for d in (0, -6):
        with pytest.raises(NotRepresentable):
            construct_polarization(d)


@given(st.integers(1, 10_000))
def test_constructions_are_primitive_and_of_the_right_degree(d):
    if d % 6 not in (0, 2):
        with pytest.raises(NotRepresentable):
            construct_polarization(d)
        return
    v = construct_polarization(d)
    assert self_intersection(v) == d and v.is_primitive()


def test_la_norms():
    assert la_norm((1, 3, 0, 0)) == 6
    assert la_norm((0, 0, 1, 1)) == 6
    assert la_norm((-1, 6, 2, 2)) == 12


def test_primitivity_in_the_dual():
    assert dual_coordinates((1, 3, 0, 0)) == (1, 3, 0, 0)
    assert dual_coordinates((0, 0, 1, 1)) == (0, 0, 0, 3)
    assert is_primitive_in_dual((1, 3, 0, 0))
    assert not is_primitive_in_dual((0, 0, 1, 1))
    assert is_primitive_in_dual((1, 0, 0, 0))
    with pytest.raises(ZeroVector):
        is_primitive_in_dual((0, 0, 0, 0))


@given(st.tuples(*[st.integers(-9, 9)] * 4).filter(any))
def test_dual_primitive_implies_primitive(v):
    if is_primitive_in_dual(v):
        assert gcd(*v) == 1


def test_complement_gram():
    assert complement_lattice().gram == Matrix([[-2, 1], [1, -2]])


def test_elliptic_search():
    assert elliptic_search(200) == [(0, 0, 0)]
    assert elliptic_search(1) == [(0, 0, 0)]
    with pytest.raises(ValueError):
        elliptic_search(0)


def test_no_norm_six_in_the_binary_form():
    assert not [(k, l) for k in range(-10, 11) for l in range(-10, 11) if k * k - k * l + l * l == 6]


def test_descent_certificate():
    cert = descent_check(100)
    assert cert.passed and cert.residue_step_holds
    assert cert.residue_table["1,1"] == (8 - 1) % 3 != 0
    for n in (1, 2):
        for l in (1, 2):
            assert (8 * n * n) % 3 == 2 and (l * l) % 3 == 1
    # (3, 3) reduces to (1, 1), where 24 - 3 = 21 is not a square
    chain = next(c for c in cert.reductions if c[0] == (3, 3))
    assert chain == [(3, 3), (1, 1)]
    assert isqrt(21) ** 2 != 21
    for chain in cert.reductions:
        for (a, b), (c, d) in zip(chain, chain[1:]):
            assert (a, b) == (3 * c, 3 * d)
    with pytest.raises(ValueError):
        descent_check(0)


def test_descent_agrees_with_a_direct_scan():
    # independent oracle: all (k, l) with k^2 - k l + l^2 = 6 n^2
    for n in range(1, 31):
        t = 6 * n * n
        b = isqrt(4 * t // 3) + 1
        assert not any(k * k - k * l + l * l == t for k in range(-b, b + 1) for l in range(-b, b + 1))


def test_non_representation_in_the_complement():
    out = non_representation(range(1, 11))
    assert all(v is NoneWithinBound for v in out.values())
