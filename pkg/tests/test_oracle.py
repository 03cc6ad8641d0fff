"""LP-backed classification oracle: separation systems, certificates,
verification, and extremal weights."""

from fractions import Fraction

import pytest

from hiergames import (
    CONJUNCTIVE,
    DISJUNCTIVE,
    Coalition,
    ExplicitGame,
    HierSpec,
    Multiset,
    RoughCert,
    extremal_weight,
    oracle_classify,
    oracle_rough,
    oracle_weighted,
    realize,
    separation_system,
    verify_representation,
)


def game(counts, winning):
    u = Multiset(counts)
    return ExplicitGame(u, frozenset(Coalition(w) for w in winning))


EXAMPLE = HierSpec(DISJUNCTIVE, (3, 3, 3), (2, 3, 5))


class TestSeparationSystem:
    def test_rows_mirror_the_antichains(self):
        ss = separation_system(realize(HierSpec(DISJUNCTIVE, (3, 3), (2, 3))), 1)
        assert ss.num_levels == 2
        assert set(ss.ge_rows) == {
            ((2, 0), Fraction(1)),
            ((1, 2), Fraction(1)),
            ((0, 3), Fraction(1)),
        }
        assert set(ss.le_rows) == {((1, 1), Fraction(1)), ((0, 2), Fraction(1))}

    def test_to_linear_system_feasibility(self):
        ss = separation_system(realize(EXAMPLE), 1)
        pt = ss.to_linear_system().feasible_point()
        assert pt is not None
        for counts, bound in ss.ge_rows:
            assert sum(w * c for w, c in zip(pt, counts)) >= bound
        for counts, bound in ss.le_rows:
            assert sum(w * c for w, c in zip(pt, counts)) <= bound


class TestOracleWeighted:
    def test_two_level_weighted(self):
        g = realize(HierSpec(DISJUNCTIVE, (3, 3), (2, 3)))
        cert = oracle_weighted(g)
        assert cert is not None
        assert verify_representation(g, cert, "weighted")

    def test_simple_majority(self):
        g = realize(HierSpec(DISJUNCTIVE, (5,), (3,)))
        cert = oracle_weighted(g)
        assert cert is not None
        assert verify_representation(g, cert, "weighted")
        assert verify_representation(g, RoughCert(3, (1,)), "weighted")

    def test_veto_committee_weighted(self):
        # five permanent members with veto plus ten others, nine votes to pass
        g = realize(HierSpec(CONJUNCTIVE, (5, 10), (5, 9)))
        assert verify_representation(g, RoughCert(39, (7, 1)), "weighted")
        cert = oracle_weighted(g)
        assert cert is not None
        assert verify_representation(g, cert, "weighted")

    def test_example_not_weighted(self):
        assert oracle_weighted(realize(EXAMPLE)) is None

    def test_pairing_obstruction(self):
        # {1,2} and {3,4} win, their cross swaps lose: no weights can do that
        g = game((1, 1, 1, 1), [(1, 1, 0, 0), (0, 0, 1, 1)])
        assert oracle_weighted(g) is None


class TestOracleRough:
    def test_example_rough_cert(self):
        g = realize(EXAMPLE)
        cert = oracle_rough(g)
        assert cert == RoughCert(1, (Fraction(1, 2), Fraction(1, 2), 0))
        assert verify_representation(g, cert, "rough")
        assert not verify_representation(g, cert, "weighted")

    def test_pairing_game_is_rough(self):
        g = game((1, 1, 1, 1), [(1, 1, 0, 0), (0, 0, 1, 1)])
        half = Fraction(1, 2)
        assert verify_representation(g, RoughCert(1, (half,) * 4), "rough")
        cert = oracle_rough(g)
        assert cert is not None
        assert verify_representation(g, cert, "rough")

    def test_passer_gives_zero_quota_option(self):
        g = realize(HierSpec(DISJUNCTIVE, (1, 2, 4), (1, 2, 4)))
        assert verify_representation(g, RoughCert(0, (1, 0, 0)), "rough")
        cert = oracle_rough(g)
        assert cert is not None
        assert verify_representation(g, cert, "rough")

    def test_not_even_rough(self):
        g = realize(HierSpec(DISJUNCTIVE, (2, 2, 2, 2, 2), (2, 3, 4, 5, 6)))
        assert oracle_rough(g) is None


class TestOracleClassify:
    @pytest.mark.parametrize(
        "spec,expected",
        [
            (HierSpec(DISJUNCTIVE, (3, 3), (2, 3)), "weighted"),
            (EXAMPLE, "rough_not_weighted"),
            (HierSpec(DISJUNCTIVE, (2, 2, 2, 2, 2), (2, 3, 4, 5, 6)), "not_rough"),
            (HierSpec(CONJUNCTIVE, (5, 10), (5, 9)), "weighted"),
        ],
    )
    def test_three_way(self, spec, expected):
        assert oracle_classify(realize(spec)) == expected


class TestVerifyRepresentation:
    def test_rejects_wrong_dimension_and_mode(self):
        g = realize(HierSpec(DISJUNCTIVE, (3, 3), (2, 3)))
        with pytest.raises(ValueError):
            verify_representation(g, RoughCert(1, (1, 1, 1)), "rough")
        with pytest.raises(ValueError):
            verify_representation(g, RoughCert(1, (1, 1)), "sharp")

    def test_near_miss_cert_fails(self):
        # third weight must be zero over this polytope; any positive slack
        # lets a maximal losing coalition tip over the quota
        g = realize(EXAMPLE)
        bad = RoughCert(1, (Fraction(1, 2), Fraction(1, 2), Fraction(1, 10)))
        assert not verify_representation(g, bad, "rough")


class TestExtremalWeight:
    def test_bottom_weight_pinned_to_zero(self):
        assert extremal_weight(realize(EXAMPLE), (0, 0, 1), "max") == 0

    def test_interval_collapses_for_tight_polytope(self):
        g = realize(HierSpec(DISJUNCTIVE, (2, 4), (2, 4)))
        assert extremal_weight(g, (1, 0), "min") == Fraction(1, 2)
        assert extremal_weight(g, (1, 0), "max") == Fraction(1, 2)

    def test_empty_polytope_raises(self):
        g = realize(HierSpec(DISJUNCTIVE, (2, 2, 2, 2, 2), (2, 3, 4, 5, 6)))
        with pytest.raises(ValueError):
            extremal_weight(g, (1, 0, 0, 0, 0), "max")

    def test_guards(self):
        g = realize(EXAMPLE)
        with pytest.raises(ValueError):
            extremal_weight(g, (1, 0, 0), "sup")
        with pytest.raises(ValueError):
            extremal_weight(g, (1, 0), "max")
