from fractions import Fraction

import pytest

from degstab import (
    Weighting,
    balanced_blow_up,
    blow_up,
    certify,
    chromatic_number,
    classify,
    complete,
    cycle,
    cycle_join_threshold,
    degree_profile,
    degree_threshold,
    edit_lower_bound,
    gallery_join_witness,
    join,
    odd_cycle_witness,
    petersen,
    regular_join_witness,
    scaled_gallery_weighting,
    witness_for_gallery_index,
)
from degstab.errors import InvalidParameterError
from degstab.gallery import gallery_graph
from degstab.witness import witness_base


class TestOddCycleWitness:
    def test_examples(self):
        g = odd_cycle_witness(2, 10)
        assert degree_profile(g) == (4, 4, True)
        assert degree_profile(odd_cycle_witness(2, 11)).min_degree == 4
        assert degree_profile(odd_cycle_witness(3, 21)) == (6, 6, True)

    def test_validation(self):
        with pytest.raises(InvalidParameterError):
            odd_cycle_witness(2, 4)
        with pytest.raises(InvalidParameterError):
            odd_cycle_witness(0, 10)


class TestRegularJoinWitness:
    def test_small_cases(self):
        g = regular_join_witness(3, 2)
        assert (g.order,) + tuple(degree_profile(g)) == (8, 5, 5, True)
        assert regular_join_witness(4, 1) == complete(5)
        g = regular_join_witness(3, 3)
        assert (g.order,) + tuple(degree_profile(g)) == (12, 7, 7, True)

    def test_threshold_identity_grid(self):
        for r in (3, 4, 5):
            for g in range(1, 6):
                w = regular_join_witness(r, g)
                profile = degree_profile(w)
                assert profile.regular
                assert w.order == (2 * g - 1) * (r - 1) + 2
                assert profile.min_degree == (2 * g - 1) * (r - 2) + 2
                assert Fraction(profile.min_degree, w.order) == cycle_join_threshold(r, g)

    def test_validation(self):
        with pytest.raises(InvalidParameterError):
            regular_join_witness(2, 2)
        with pytest.raises(InvalidParameterError):
            regular_join_witness(3, 0)


class TestGalleryJoinWitness:
    def test_c7bar_ratio(self):
        g = gallery_join_witness(3, "C7bar")
        assert g == gallery_graph("C7bar")
        profile = degree_profile(g)
        assert Fraction(profile.min_degree, g.order) == Fraction(4, 7)

    def test_h2_at_r4(self):
        g = gallery_join_witness(4, "H2")
        profile = degree_profile(g)
        assert (g.order, profile.min_degree) == (16, 11)
        # closed form: 1 - 1/(r - 3 + 1/(1 - d/m)) at r=4, d/m = 6/11
        assert Fraction(11, 16) == 1 - 1 / (1 + 1 / (1 - Fraction(6, 11)))

    def test_r3_returns_the_weighted_blow_up(self):
        from degstab import gallery_weighting

        for tag in ("H2plus", "H2", "T0", "H1plusplus"):
            assert gallery_join_witness(3, tag) == blow_up(gallery_weighting(tag))

    def test_ratio_grid(self):
        expected_index = {"C7bar": 3, "H2plus": 5, "H2": 7, "T0": 9, "H1plusplus": 11}
        for r in (3, 4, 5):
            for tag, index in expected_index.items():
                w = gallery_join_witness(r, tag)
                profile = degree_profile(w)
                assert Fraction(profile.min_degree, w.order) == degree_threshold(r, index)

    def test_validation(self):
        with pytest.raises(InvalidParameterError):
            gallery_join_witness(3, "W5")
        with pytest.raises(InvalidParameterError):
            gallery_join_witness(2, "H2")


class TestWitnessForIndex:
    def test_full_identity_sweep(self):
        for r in (3, 4, 5):
            for index in range(2, 13):
                seed = witness_for_gallery_index(r, index)
                profile = degree_profile(seed)
                assert Fraction(profile.min_degree, seed.order) == degree_threshold(
                    r, index - 1
                )

    def test_index_one_degenerates_to_clique(self):
        assert witness_for_gallery_index(3, 1) == complete(4)
        with pytest.raises(InvalidParameterError):
            witness_for_gallery_index(3, 13)


class TestScaledWeighting:
    def test_scaling_preserves_ratio(self):
        base = blow_up(scaled_gallery_weighting("H2plus", 1))
        tripled = blow_up(scaled_gallery_weighting("H2plus", 3))
        assert tripled.order == 3 * base.order
        assert degree_profile(tripled).min_degree == 3 * degree_profile(base).min_degree

    def test_strict_blow_up_reaches_half(self):
        # a genuine blow-up (every class nonempty) with ratio >= 1/2 < 5/9
        w = scaled_gallery_weighting("H2plus", 2, strict=True)
        assert all(x >= 1 for x in w.weights)
        blown = blow_up(w)
        profile = degree_profile(blown)
        assert blown.order == 20 and profile.min_degree == 10
        assert Fraction(profile.min_degree, blown.order) >= Fraction(1, 2)

    def test_validation(self):
        with pytest.raises(InvalidParameterError):
            scaled_gallery_weighting("H2plus", 0)


class TestEditLowerBound:
    def test_values(self):
        assert edit_lower_bound(5, 10) == 4
        assert edit_lower_bound(5, 11) == 4
        assert edit_lower_bound(7, 21) == 9

    def test_validation(self):
        with pytest.raises(InvalidParameterError):
            edit_lower_bound(0, 5)
        with pytest.raises(InvalidParameterError):
            edit_lower_bound(5, 4)


class TestCertify:
    def test_triangle_at_fifty(self):
        h = complete(3)
        result = classify(h)
        report = certify(h, result, 50)
        assert report.passed
        assert report.witness.order == 50
        assert degree_profile(report.witness).min_degree == 20  # exactly 2/5
        assert report.seed_order == 5

    def test_petersen_same_family(self):
        h = petersen()
        report = certify(h, classify(h), 50)
        assert report.passed and report.seed_order == 5

    def test_k4_ratio_slack(self):
        h = complete(4)
        result = classify(h)
        report = certify(h, result, 40)
        assert report.passed
        ratio = Fraction(degree_profile(report.witness).min_degree, 40)
        assert ratio >= Fraction(5, 8) - Fraction(8, 40)

    def test_witness_chromatic_matches_base(self):
        h = complete(4)
        report = certify(h, classify(h), 40)
        assert chromatic_number(report.witness) == 4

    def test_mismatched_inputs_rejected(self):
        with pytest.raises(InvalidParameterError):
            certify(complete(4), classify(complete(3)), 40)

    def test_n_too_small_rejected(self):
        h = complete(4)
        result = classify(h)
        with pytest.raises(InvalidParameterError):
            certify(h, result, 7)  # seed has 8 vertices


class TestWitnessBase:
    def test_odd_cycle_branch(self):
        result = classify(cycle(5))
        seed, base = witness_base(result)
        assert seed == base == cycle(7)

    def test_gallery_branch(self):
        result = classify(complete(4))
        seed, base = witness_base(result)
        assert base == join(complete(0), gallery_graph("W5"))
        assert seed == regular_join_witness(3, 2)

    def test_seed_is_blow_up_of_base(self):
        # every seed maps homomorphically onto its base and back-contains it
        from degstab import has_homomorphism

        for h in (complete(3), complete(4), complete(5), gallery_graph("W5")):
            result = classify(h)
            seed, base = witness_base(result)
            assert has_homomorphism(seed, base) is not None
            assert has_homomorphism(h, base) is None
