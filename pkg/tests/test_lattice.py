import itertools
from dataclasses import FrozenInstanceError
from fractions import Fraction

import pytest
from hypothesis import given

from blowupcones import (
    CANONICAL,
    EXCEPTIONALS,
    H,
    HALF_ANTICANONICAL,
    LINE,
    ROOT_SYSTEM,
    CurveClass,
    DivisorClass,
    RootSystem,
    curve_intersection,
    dq_numbers,
    exceptional,
    exceptional_line,
    line_between,
    pairing,
)

from conftest import rational_divisors, small_rationals


class TestPairing:
    def test_hyperplane(self):
        assert pairing(H, H) == 2

    def test_exceptionals(self):
        for i, ei in enumerate(EXCEPTIONALS):
            for j, ej in enumerate(EXCEPTIONALS):
                assert pairing(ei, ej) == (-1 if i == j else 0)
            assert pairing(H, ei) == 0

    def test_half_anticanonical_isotropic(self):
        assert pairing(HALF_ANTICANONICAL, HALF_ANTICANONICAL) == 0

    def test_explicit_value(self):
        d = DivisorClass(3, (2, 1, 1, 1, 1, 1, 1, 1))
        assert pairing(d, d) == 7

    @given(rational_divisors, rational_divisors)
    def test_symmetric(self, a, b):
        assert pairing(a, b) == pairing(b, a)

    @given(rational_divisors, rational_divisors, rational_divisors, small_rationals)
    def test_bilinear(self, a, b, c, t):
        assert pairing(a + t * b, c) == pairing(a, c) + t * pairing(b, c)


class TestCurveIntersection:
    def test_half_anticanonical_on_lines(self):
        for i, j in itertools.combinations(range(1, 9), 2):
            assert curve_intersection(HALF_ANTICANONICAL, line_between(i, j)) == 0

    def test_exceptional_self(self):
        assert curve_intersection(EXCEPTIONALS[7], exceptional_line(8)) == -1

    def test_plane_meets_exceptional_line(self):
        plane = DivisorClass(1, (1, 0, 0, 0, 0, 0, 0, 0))
        assert curve_intersection(plane, exceptional_line(1)) == 1

    @given(rational_divisors)
    def test_matches_pairing_with_exceptional(self, d):
        # D.e_i equals both m_i and the lattice pairing (D, E_i).
        for i in range(8):
            value = curve_intersection(d, exceptional_line(i + 1))
            assert value == d.m[i] == pairing(d, EXCEPTIONALS[i])

    @given(rational_divisors)
    def test_line_formula(self, d):
        for i, j in ((1, 2), (3, 8)):
            assert curve_intersection(d, line_between(i, j)) == d.d - d.m[i - 1] - d.m[j - 1]


class TestDqNumbers:
    def test_exceptional(self):
        assert dq_numbers(EXCEPTIONALS[7]) == (-1, 1)

    def test_half_anticanonical(self):
        assert dq_numbers(HALF_ANTICANONICAL) == (0, 0)

    def test_degree_one_orbit_class(self):
        assert dq_numbers(DivisorClass(1, (1, 1, 1, 0, 0, 0, 0, 0))) == (-1, 1)

    def test_identity_on_grid(self):
        tails = ((0,) * 6, (3, -3, 1, -1, 2, -2))
        for d, m1, m2 in itertools.product(range(-3, 4), repeat=3):
            for tail in tails:
                cls = DivisorClass(d, (m1, m2) + tail)
                assert dq_numbers(cls) == (
                    pairing(cls, cls),
                    pairing(cls, HALF_ANTICANONICAL),
                )

    @given(rational_divisors)
    def test_identity_random(self, d):
        assert dq_numbers(d) == (pairing(d, d), pairing(d, HALF_ANTICANONICAL))


class TestRootSystem:
    def test_gram_diagonal(self):
        for alpha in ROOT_SYSTEM.roots:
            assert pairing(alpha, alpha) == -2

    def test_gram_off_diagonal(self):
        for i, alpha in enumerate(ROOT_SYSTEM.roots):
            for j, beta in enumerate(ROOT_SYSTEM.roots):
                if i != j:
                    assert pairing(alpha, beta) in (0, 1)

    def test_weights_dual_to_roots(self):
        for i, weight in enumerate(ROOT_SYSTEM.weights):
            for j, alpha in enumerate(ROOT_SYSTEM.roots):
                assert pairing(weight, alpha) == (1 if i == j else 0)

    def test_canonical_orthogonal_to_roots(self):
        for alpha in ROOT_SYSTEM.roots:
            assert pairing(CANONICAL, alpha) == 0

    def test_diagram_shape(self):
        # One path 1-2-...-7 with the extra node 0 attached at node 4.
        edges = {
            (i, j)
            for i in range(8)
            for j in range(i + 1, 8)
            if pairing(ROOT_SYSTEM.roots[i], ROOT_SYSTEM.roots[j]) == 1
        }
        expected = {(i, i + 1) for i in range(1, 7)} | {(0, 4)}
        assert edges == expected

    def test_construction_checks_run(self):
        assert RootSystem.standard() == ROOT_SYSTEM


class TestDivisorClassBasics:
    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError):
            DivisorClass(1, (0,) * 7)

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            DivisorClass(1.5, (0,) * 8)

    def test_frozen(self):
        with pytest.raises(FrozenInstanceError):
            H.d = Fraction(2)

    def test_equality_is_exact(self):
        assert DivisorClass(Fraction(2, 1), (Fraction(1),) * 8) == HALF_ANTICANONICAL
        assert DivisorClass(2, (1, 1, 1, 1, 1, 1, 1, 0)) != HALF_ANTICANONICAL

    def test_arithmetic(self):
        assert H + H == DivisorClass(2, (0,) * 8)
        assert 2 * HALF_ANTICANONICAL - HALF_ANTICANONICAL == HALF_ANTICANONICAL
        assert -CANONICAL == DivisorClass(4, (2,) * 8)
        assert Fraction(-1, 2) * CANONICAL == HALF_ANTICANONICAL

    def test_vector(self):
        vec = CANONICAL.vector()
        assert vec == (-4,) + (-2,) * 8
        assert DivisorClass(vec[0], vec[1:]) == CANONICAL

    def test_exceptional_bounds(self):
        with pytest.raises(ValueError):
            exceptional(0)
        with pytest.raises(ValueError):
            exceptional(9)


class TestCurveClassBasics:
    def test_line_between_normalizes(self):
        assert line_between(5, 2) == line_between(2, 5)
        with pytest.raises(ValueError):
            line_between(3, 3)

    def test_multiplicities(self):
        assert line_between(1, 2).multiplicities() == (1, 1, 0, 0, 0, 0, 0, 0)
        assert LINE.multiplicities() == (0,) * 8

    def test_integer_only(self):
        with pytest.raises(TypeError):
            CurveClass(Fraction(1, 2), (0,) * 8)


class TestTextForms:
    @pytest.mark.parametrize(
        "text",
        [
            "3;2,2,2,2,1,1,1,0",
            "0;0,0,0,0,0,0,0,-1",
            "1/2;1/2,0,0,0,0,0,0,0",
            "-4;-2,-2,-2,-2,-2,-2,-2,-2",
        ],
    )
    def test_divisor_round_trip(self, text):
        assert str(DivisorClass.parse(text)) == text

    @given(rational_divisors)
    def test_divisor_round_trip_random(self, d):
        assert DivisorClass.parse(str(d)) == d

    @pytest.mark.parametrize("text", ["1;-1,-1,0,0,0,0,0,0", "0;1,0,0,0,0,0,0,0"])
    def test_curve_round_trip(self, text):
        assert str(CurveClass.parse(text)) == text

    @pytest.mark.parametrize(
        "text",
        ["", "1,2,3", "1;2,3", "1;a,0,0,0,0,0,0,0", "1;1,1,1,1,1,1,1,1,1", "1;1/0,0,0,0,0,0,0,0"],
    )
    def test_divisor_parse_errors(self, text):
        with pytest.raises(ValueError):
            DivisorClass.parse(text)

    def test_curve_must_be_integral(self):
        with pytest.raises(ValueError):
            CurveClass.parse("1/2;0,0,0,0,0,0,0,0")
