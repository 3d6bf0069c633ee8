from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blowupcones import (
    EXCEPTIONALS,
    H,
    HALF_ANTICANONICAL,
    Certificate,
    CertificateError,
    CurveClass,
    DivisorClass,
    GeneratorSets,
    HypothesisViolated,
    NotEffective,
    NotMovable,
    NotNef,
    accumulation_report,
    apply_word,
    curve_decompose,
    curve_generators,
    effective_decompose,
    effective_seed,
    exceptional_line,
    in_box,
    in_fundamental_chamber,
    in_tits_cone,
    is_minus_one_divisor,
    is_nef,
    line_between,
    movable_decompose,
    nef_decompose,
    nef_generators,
    pairing,
    pi_generators,
    ray_distance,
)

from conftest import int_divisors, words

MINUS_H = DivisorClass(-1, (0,) * 8)


def terms_as_dict(certificate):
    return {generator: coefficient for generator, coefficient in certificate.terms}


class TestGeneratorSets:
    def test_counts(self):
        assert len(curve_generators()) == 36
        assert len(nef_generators()) == 228
        assert len(pi_generators()) == 17
        assert len(effective_seed()) == 9

    def test_standard_passes_invariants(self):
        sets = GeneratorSets.standard()
        assert len(sets.nef_gens) == 228

    def test_all_nef_generators_are_nef(self):
        for generator in nef_generators():
            assert is_nef(generator)[0]

    def test_effective_seed_members(self):
        for generator in effective_seed():
            assert generator == HALF_ANTICANONICAL or is_minus_one_divisor(generator)


class TestCurveDecompose:
    def test_two_lines(self):
        curve = CurveClass(2, (-1, -1, -1, -1, 0, 0, 0, 0))
        cert = curve_decompose(curve)
        assert terms_as_dict(cert) == {
            line_between(1, 2): 1,
            line_between(3, 4): 1,
        }

    def test_single_exceptional_line(self):
        cert = curve_decompose(exceptional_line(3))
        assert terms_as_dict(cert) == {exceptional_line(3): 1}

    def test_general_line(self):
        cert = curve_decompose(CurveClass(1, (0,) * 8))
        assert terms_as_dict(cert) == {
            exceptional_line(1): 1,
            exceptional_line(2): 1,
            line_between(1, 2): 1,
        }

    def test_single_positive_multiplicity(self):
        curve = CurveClass(3, (-2, 0, 0, 0, 0, 0, 0, 0))
        cert = curve_decompose(curve)
        assert terms_as_dict(cert) == {
            exceptional_line(1): 1,
            exceptional_line(2): 3,
            line_between(1, 2): 3,
        }

    def test_zero_curve(self):
        cert = curve_decompose(CurveClass(0, (0,) * 8))
        assert cert.terms == ()

    @pytest.mark.parametrize(
        "curve, constraint",
        [
            (CurveClass(-1, (0,) * 8), "a >= 0"),
            (CurveClass(1, (-2, 0, 0, 0, 0, 0, 0, 0)), "a >= b_i"),
            (CurveClass(1, (1, 0, 0, 0, 0, 0, 0, 0)), "b_i >= 0"),
            (CurveClass(2, (-1, -1, -1, -1, -1, 0, 0, 0)), "2a >= sum(b_i)"),
            (CurveClass(0, (-1, 0, 0, 0, 0, 0, 0, 0)), "a >= b_i"),
        ],
    )
    def test_hypothesis_violations(self, curve, constraint):
        with pytest.raises(HypothesisViolated) as info:
            curve_decompose(curve)
        assert info.value.constraint == constraint

    @given(st.data())
    @settings(max_examples=80)
    def test_resummation_on_valid_region(self, data):
        a = data.draw(st.integers(1, 6))
        budget = 2 * a
        multiplicities = []
        for _ in range(8):
            cap = min(a, budget)
            value = data.draw(st.integers(0, cap))
            budget -= value
            multiplicities.append(value)
        curve = CurveClass(a, tuple(-b for b in multiplicities))
        cert = curve_decompose(curve)
        total = CurveClass(0, (0,) * 8)
        for generator, coefficient in cert.terms:
            total = total + int(coefficient) * generator
        assert total == curve


def _combination(generators, coefficients):
    total = DivisorClass(0, (0,) * 8)
    for generator, coefficient in zip(generators, coefficients):
        total = total + coefficient * generator
    return total


def nef_combinations():
    gens = nef_generators()
    return st.builds(
        lambda idx, coeffs: _combination([gens[i] for i in idx], coeffs),
        st.lists(st.integers(0, len(gens) - 1), min_size=1, max_size=4),
        st.lists(st.integers(0, 3), min_size=4, max_size=4),
    )


def pi_combinations():
    gens = pi_generators()
    return st.builds(
        lambda idx, coeffs: _combination([gens[i] for i in idx], coeffs),
        st.lists(st.integers(0, len(gens) - 1), min_size=1, max_size=4),
        st.lists(st.integers(0, 3), min_size=4, max_size=4),
    )


class TestIsNef:
    def test_half_anticanonical(self):
        assert is_nef(HALF_ANTICANONICAL) == (True, None)

    def test_exceptional_witness(self):
        ok, witness = is_nef(EXCEPTIONALS[7])
        assert not ok and witness == exceptional_line(8)

    def test_plane_witness(self):
        ok, witness = is_nef(DivisorClass(1, (1, 1, 0, 0, 0, 0, 0, 0)))
        assert not ok and witness == line_between(1, 2)

    @given(nef_combinations())
    @settings(max_examples=60)
    def test_combinations_are_nef(self, divisor):
        assert is_nef(divisor)[0]


class TestNefDecompose:
    def test_generator_is_its_own_certificate(self):
        quad = DivisorClass(2, (1, 1, 1, 0, 0, 0, 0, 0))
        assert terms_as_dict(nef_decompose(quad)) == {quad: 1}

    def test_half_anticanonical(self):
        assert terms_as_dict(nef_decompose(HALF_ANTICANONICAL)) == {HALF_ANTICANONICAL: 1}

    def test_two_point_quadric_appears(self):
        cert = nef_decompose(DivisorClass(3, (1, 1, 0, 0, 0, 0, 0, 0)))
        assert terms_as_dict(cert) == {
            H: 1,
            DivisorClass(2, (1, 1, 0, 0, 0, 0, 0, 0)): 1,
        }

    def test_unsorted_multiplicities(self):
        divisor = DivisorClass(3, (0, 1, 0, 1, 0, 0, 0, 0))
        cert = nef_decompose(divisor)
        assert cert.resummation() == divisor
        assert terms_as_dict(cert) == {
            H: 1,
            DivisorClass(2, (0, 1, 0, 1, 0, 0, 0, 0)): 1,
        }

    def test_rational_nef_class(self):
        divisor = Fraction(1, 2) * HALF_ANTICANONICAL
        cert = nef_decompose(divisor)
        assert terms_as_dict(cert) == {HALF_ANTICANONICAL: Fraction(1, 2)}

    def test_rejects_non_nef(self):
        with pytest.raises(NotNef):
            nef_decompose(EXCEPTIONALS[0])

    @given(nef_combinations())
    @settings(max_examples=60)
    def test_resummation(self, divisor):
        cert = nef_decompose(divisor)
        assert cert.resummation() == divisor


class TestEffectiveDecompose:
    def test_quadric_through_seven_points(self):
        cert = effective_decompose(DivisorClass(2, (1, 1, 1, 1, 1, 1, 1, 0)))
        assert terms_as_dict(cert) == {HALF_ANTICANONICAL: 1, EXCEPTIONALS[7]: 1}

    def test_triple_point_cubic(self):
        cert = effective_decompose(DivisorClass(3, (3, 1, 1, 1, 1, 1, 1, 1)))
        assert terms_as_dict(cert) == {
            DivisorClass(2, (2, 1, 1, 1, 1, 1, 0, 0)): 1,
            DivisorClass(1, (1, 0, 0, 0, 0, 0, 1, 1)): 1,
        }

    def test_exceptional(self):
        cert = effective_decompose(EXCEPTIONALS[4])
        assert terms_as_dict(cert) == {EXCEPTIONALS[4]: 1}

    def test_half_anticanonical(self):
        cert = effective_decompose(HALF_ANTICANONICAL)
        assert terms_as_dict(cert) == {HALF_ANTICANONICAL: 1}

    def test_ray_multiples_use_only_half_anticanonical(self):
        cert = effective_decompose(3 * HALF_ANTICANONICAL)
        assert terms_as_dict(cert) == {HALF_ANTICANONICAL: 3}

    def test_negative_multiplicity_splits_exceptional(self):
        divisor = DivisorClass(1, (1, 1, -1, 0, 0, 0, 0, 0))
        cert = effective_decompose(divisor)
        assert terms_as_dict(cert) == {
            EXCEPTIONALS[2]: 1,
            EXCEPTIONALS[3]: 1,
            DivisorClass(1, (1, 1, 0, 1, 0, 0, 0, 0)): 1,
        }
        assert cert.resummation() == divisor

    def test_all_generators_are_orbit_members(self):
        cert = effective_decompose(DivisorClass(7, (4, 3, 3, 2, 2, 1, 1, 0)))
        for generator, coefficient in cert.terms:
            assert coefficient > 0
            assert generator == HALF_ANTICANONICAL or is_minus_one_divisor(generator)
        assert cert.resummation() == DivisorClass(7, (4, 3, 3, 2, 2, 1, 1, 0))

    @pytest.mark.parametrize(
        "divisor",
        [
            DivisorClass(1, (1, 1, 1, 1, 0, 0, 0, 0)),
            MINUS_H,
            DivisorClass(1, (2, 0, 0, 0, 0, 0, 0, 0)),
            DivisorClass(2, (2, 1, 1, 1, 1, 1, 1, 0)),
        ],
    )
    def test_not_effective(self, divisor):
        with pytest.raises(NotEffective):
            effective_decompose(divisor)

    def test_requires_integral(self):
        with pytest.raises(ValueError):
            effective_decompose(Fraction(1, 2) * HALF_ANTICANONICAL)

    def test_perturbation_off_the_isotropic_ray_fails(self):
        # Same pairing with -K/2 as a multiple of it, but not proportional.
        perturbed = DivisorClass(2, (2, 1, 1, 1, 1, 1, 1, 0))
        assert pairing(perturbed, HALF_ANTICANONICAL) == 0
        with pytest.raises(NotEffective):
            effective_decompose(perturbed)

    @given(int_divisors, words)
    @settings(max_examples=40, deadline=None)
    def test_verdict_weyl_invariant(self, divisor, word):
        moved = apply_word(word, divisor)

        def verdict(cls):
            try:
                effective_decompose(cls)
                return True
            except NotEffective:
                return False

        assert verdict(divisor) == verdict(moved)

    @given(st.lists(st.tuples(st.integers(0, 8), st.integers(0, 3)), min_size=1, max_size=5))
    @settings(max_examples=60)
    def test_sign_rule_on_effective_classes(self, picks):
        seed = effective_seed()
        total = DivisorClass(0, (0,) * 8)
        for index, coefficient in picks:
            total = total + coefficient * seed[index]
        cert = effective_decompose(total)
        assert cert.resummation() == total
        assert pairing(total, HALF_ANTICANONICAL) >= 0


class TestMovableDecompose:
    def test_splits_off_largest_quadric(self):
        cert = movable_decompose(DivisorClass(3, (1,) * 8))
        assert terms_as_dict(cert) == {H: 1, HALF_ANTICANONICAL: 1}

    def test_cubic_generator(self):
        cubic = DivisorClass(3, (3, 1, 1, 1, 0, 0, 0, 0))
        cert = movable_decompose(cubic)
        assert terms_as_dict(cert) == {cubic: 1}

    def test_plane_through_three_points_not_movable(self):
        with pytest.raises(NotMovable) as info:
            movable_decompose(DivisorClass(1, (1, 1, 1, 0, 0, 0, 0, 0)))
        assert info.value.reduced == EXCEPTIONALS[7]

    def test_each_pi_generator_is_its_own_certificate(self):
        for generator in pi_generators():
            cert = movable_decompose(generator)
            assert terms_as_dict(cert) == {generator: 1}
            assert cert.word == ()

    def test_rational_input_scales(self):
        cert = movable_decompose(Fraction(1, 2) * DivisorClass(3, (1,) * 8))
        assert terms_as_dict(cert) == {
            H: Fraction(1, 2),
            HALF_ANTICANONICAL: Fraction(1, 2),
        }

    def test_word_reduces_target(self):
        shuffled = apply_word((3, 0, 5), DivisorClass(3, (1,) * 8))
        cert = movable_decompose(shuffled)
        assert cert.resummation() == apply_word(cert.word, shuffled)
        for generator, _ in cert.terms:
            assert generator in pi_generators()

    def test_three_point_induction(self):
        divisor = DivisorClass(5, (4, 3, 2, 0, 0, 0, 0, 0))
        cert = movable_decompose(divisor)
        assert cert.resummation() == divisor

    def test_degree_floor_reports_not_movable(self):
        with pytest.raises(NotMovable):
            movable_decompose(MINUS_H)

    @given(pi_combinations())
    @settings(max_examples=60, deadline=None)
    def test_resummation(self, divisor):
        cert = movable_decompose(divisor)
        assert cert.resummation() == apply_word(cert.word, divisor)


class TestInclusionChain:
    @given(nef_combinations())
    @settings(max_examples=40, deadline=None)
    def test_nef_implies_movable_implies_effective(self, divisor):
        movable_decompose(divisor)
        effective_decompose(divisor)

    @given(pi_combinations())
    @settings(max_examples=40, deadline=None)
    def test_movable_implies_effective(self, divisor):
        effective_decompose(divisor)


class TestRegions:
    def test_half_anticanonical_in_closed_chamber(self):
        assert in_fundamental_chamber(HALF_ANTICANONICAL)
        assert not in_fundamental_chamber(HALF_ANTICANONICAL, strict=True)

    def test_reduced_exceptional_in_closed_chamber(self):
        assert in_fundamental_chamber(EXCEPTIONALS[7])

    def test_unsorted_class_not_in_chamber(self):
        assert not in_fundamental_chamber(DivisorClass(1, (0, 0, 0, 0, 0, 0, 0, 1)))

    def test_plane_through_one_point_in_chamber(self):
        assert in_fundamental_chamber(DivisorClass(1, (1, 0, 0, 0, 0, 0, 0, 0)))

    def test_strict_interior_from_weights(self):
        from blowupcones import ROOT_SYSTEM

        interior = DivisorClass(0, (0,) * 8)
        for weight in ROOT_SYSTEM.weights:
            interior = interior + weight
        assert in_fundamental_chamber(interior, strict=True)

    def test_tits_cone_contains_effective_example(self):
        result = in_tits_cone(DivisorClass(3, (2, 2, 2, 2, 1, 1, 1, 0)))
        assert result is not None and result.steps == 2

    def test_tits_cone_trivial_member(self):
        result = in_tits_cone(HALF_ANTICANONICAL)
        assert result is not None and result.word == ()

    def test_tits_cone_unknown_at_cap(self):
        assert in_tits_cone(MINUS_H, max_steps=50) is None

    def test_box(self):
        assert in_box(H)
        assert in_box(HALF_ANTICANONICAL)
        assert not in_box(EXCEPTIONALS[7])
        assert not in_box(DivisorClass(1, (2, 0, 0, 0, 0, 0, 0, 0)))


class TestAccumulation:
    def test_degree_zero_distance(self):
        report = dict(accumulation_report(2))
        assert report[0] == Fraction(11, 12)

    def test_distances_positive(self):
        for _, distance in accumulation_report(4):
            assert distance > 0

    def test_proportional_class_would_be_zero(self):
        assert ray_distance(3 * HALF_ANTICANONICAL) == 0
        assert ray_distance(HALF_ANTICANONICAL) == 0

    def test_zero_class_rejected(self):
        with pytest.raises(ValueError):
            ray_distance(DivisorClass(0, (0,) * 8))

    def test_bad_bound(self):
        with pytest.raises(ValueError):
            accumulation_report(1)


class TestCertificateSerialization:
    def test_round_trip(self):
        cert = effective_decompose(DivisorClass(3, (3, 1, 1, 1, 1, 1, 1, 1)))
        parsed = Certificate.from_json(cert.to_json())
        assert parsed == cert
        parsed.check()

    def test_curve_round_trip(self):
        cert = curve_decompose(CurveClass(2, (-1, -1, -1, -1, 0, 0, 0, 0)))
        parsed = Certificate.from_json(cert.to_json())
        assert parsed == cert
        parsed.check()

    def test_tampered_coefficient_rejected(self):
        cert = effective_decompose(HALF_ANTICANONICAL)
        data = cert.to_dict()
        data["terms"][0]["coeff"] = "2"
        with pytest.raises(CertificateError):
            Certificate.from_dict(data).check()

    def test_alien_generator_rejected(self):
        data = {
            "cone": "eff",
            "input": "1;0,0,0,0,0,0,0,0",
            "word": [],
            "terms": [{"gen": "1;0,0,0,0,0,0,0,0", "coeff": "1"}],
        }
        with pytest.raises(CertificateError):
            Certificate.from_dict(data).check()

    def test_negative_coefficient_rejected(self):
        data = {
            "cone": "mov",
            "input": "-1;0,0,0,0,0,0,0,0",
            "word": [],
            "terms": [{"gen": "1;0,0,0,0,0,0,0,0", "coeff": "-1"}],
        }
        with pytest.raises(CertificateError):
            Certificate.from_dict(data).check()

    def test_malformed_json_rejected(self):
        with pytest.raises(ValueError):
            Certificate.from_json("{not json")
