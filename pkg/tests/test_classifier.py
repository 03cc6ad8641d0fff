"""Structural classifier: verdicts, case tags, certificates, notes, and
agreement with the LP oracle on a small exhaustive grid."""

import pytest

from hiergames import (
    CONJUNCTIVE,
    DISJUNCTIVE,
    NOT_ROUGH,
    ROUGH_NOT_WEIGHTED,
    WEIGHTED,
    HierSpec,
    classify,
    classify_rough,
    classify_weighted,
    oracle_classify,
    realize,
    special_players,
    sweep_specs,
    verify_representation,
)

# (kind, n, k, class, case tag, certificate text, notes) all frozen; the
# certificates were cross-checked against the LP oracle when recorded
BATTERY = [
    (DISJUNCTIVE, (3, 3), (2, 3), WEIGHTED, "Thm4(2)", "[q=6; w=(3, 2)]", ()),
    (DISJUNCTIVE, (2, 4), (2, 4), ROUGH_NOT_WEIGHTED, "Thm12(ii)", "[q=1; w=(1/2, 1/4)]", ()),
    (DISJUNCTIVE, (4, 4), (3, 5), ROUGH_NOT_WEIGHTED, "Thm12(iii)", "[q=1; w=(1/3, 1/6)]", ()),
    (DISJUNCTIVE, (3, 3, 3), (2, 3, 5), ROUGH_NOT_WEIGHTED, "Thm12(vi)", "[q=1; w=(1/2, 1/2, 0)]", ()),
    (DISJUNCTIVE, (1, 2, 4), (1, 2, 4), ROUGH_NOT_WEIGHTED, "Thm12(i)", "[q=0; w=(1, 0, 0)]", ()),
    (DISJUNCTIVE, (2, 2, 2), (1, 2, 4), WEIGHTED, "Thm4(4)", "[q=2; w=(2, 1, 0)]", ()),
    (DISJUNCTIVE, (3, 2, 3), (2, 3, 4), ROUGH_NOT_WEIGHTED, "Thm12(iv)", "[q=1; w=(1/2, 1/4, 1/4)]", ()),
    (DISJUNCTIVE, (3, 2, 2), (3, 4, 5), ROUGH_NOT_WEIGHTED, "Thm12(v)", "[q=1; w=(1/3, 1/3, 0)]", ()),
    (DISJUNCTIVE, (3, 3, 3), (2, 3, 6), WEIGHTED, "Thm4(5)", "[q=6; w=(3, 2, 0)]", ()),
    (DISJUNCTIVE, (2, 2, 2, 2), (1, 2, 3, 5), WEIGHTED, "Thm4(5)", "[q=4; w=(4, 2, 1, 0)]", ()),
    (DISJUNCTIVE, (2, 4, 3), (2, 4, 7), ROUGH_NOT_WEIGHTED, "Thm12(vii)", "[q=1; w=(1/2, 1/4, 0)]", ()),
    (CONJUNCTIVE, (3, 3), (2, 4), WEIGHTED, "Thm5(3)", "[q=10; w=(3, 2)]", ()),
    (CONJUNCTIVE, (3, 3, 3), (2, 4, 5), ROUGH_NOT_WEIGHTED, "Thm13(vi)", "[q=2; w=(1/2, 1/2, 0)]", ()),
    (CONJUNCTIVE, (2, 4), (1, 3), ROUGH_NOT_WEIGHTED, "Thm13(ii)", "[q=1; w=(1/2, 1/4)]", ()),
    (CONJUNCTIVE, (2, 4, 2), (1, 3, 3), ROUGH_NOT_WEIGHTED, "Thm13(vii)", "[q=1; w=(1/2, 1/4, 0)]", ()),
    (CONJUNCTIVE, (2, 2, 2), (2, 3, 3), WEIGHTED, "Thm5(4)", "[q=5; w=(2, 1, 0)]", ()),
    (CONJUNCTIVE, (2, 3, 4), (2, 3, 6), WEIGHTED, "Thm5(4)", "[q=37; w=(12, 4, 3)]", ()),
    (CONJUNCTIVE, (3, 3, 4), (3, 5, 7), ROUGH_NOT_WEIGHTED, "Thm13(i)", "[q=3; w=(1, 0, 0)]", ()),
    (
        CONJUNCTIVE,
        (2, 2, 2),
        (1, 2, 3),
        ROUGH_NOT_WEIGHTED,
        "Thm13(iv)",
        "[q=1; w=(1/2, 1/2, 0)]",
        (
            "literal Thm13 reading gives no match but duality gives dual "
            "match iv; verdict follows duality",
        ),
    ),
    (
        CONJUNCTIVE,
        (2, 2, 3),
        (1, 2, 3),
        ROUGH_NOT_WEIGHTED,
        "Thm13(vi)",
        "[q=1; w=(1/2, 1/2, 0)]",
        (
            "literal Thm13 reading gives no match but duality gives dual "
            "match vi; verdict follows duality",
        ),
    ),
    (
        CONJUNCTIVE,
        (2, 3, 2),
        (1, 2, 3),
        NOT_ROUGH,
        "none",
        None,
        (
            "literal Thm13 reading gives case vi but duality gives no "
            "match; verdict follows duality",
        ),
    ),
]


def ids(row):
    kind, n, k = row[0], row[1], row[2]
    return f"{kind[:4]}-{n}-{k}"


class TestBattery:
    @pytest.mark.parametrize("row", BATTERY, ids=ids)
    def test_frozen_verdicts(self, row):
        kind, n, k, game_class, case, cert_text, notes = row
        v = classify(HierSpec(kind, n, k))
        assert v.game_class == game_class
        assert v.matched_case == case
        assert (str(v.certificate) if v.certificate else None) == cert_text
        assert v.notes == notes

    @pytest.mark.parametrize("row", BATTERY, ids=ids)
    def test_certificates_verify(self, row):
        kind, n, k, game_class, _, _, _ = row
        v = classify(HierSpec(kind, n, k))
        g = realize(HierSpec(kind, n, k))
        if game_class == WEIGHTED:
            assert verify_representation(g, v.certificate, "weighted")
        elif game_class == ROUGH_NOT_WEIGHTED:
            assert verify_representation(g, v.certificate, "rough")
            assert not verify_representation(g, v.certificate, "weighted")
        else:
            assert v.certificate is None

    @pytest.mark.parametrize("row", BATTERY, ids=ids)
    def test_oracle_agrees(self, row):
        kind, n, k, game_class, _, _, _ = row
        assert oracle_classify(realize(HierSpec(kind, n, k))) == game_class


class TestEntryPoints:
    def test_classify_weighted_returns_tag_or_none(self):
        assert classify_weighted(HierSpec(DISJUNCTIVE, (3, 3), (2, 3))) == "Thm4(2)"
        assert classify_weighted(HierSpec(DISJUNCTIVE, (3, 3, 3), (2, 3, 5))) is None

    def test_classify_rough_equals_classify_on_non_weighted(self):
        spec = HierSpec(DISJUNCTIVE, (3, 3, 3), (2, 3, 5))
        assert classify_rough(spec) == classify(spec)

    def test_non_canonical_rejected(self):
        with pytest.raises(ValueError):
            classify(HierSpec(DISJUNCTIVE, (2, 4), (3, 4)))
        with pytest.raises(ValueError):
            classify_weighted(HierSpec(DISJUNCTIVE, (2, 2), (2, 5)))


class TestCertificateShape:
    def rough_no_special(self, kind, levels, nmax):
        for spec in sweep_specs(kind, levels, nmax):
            v = classify(spec)
            if v.game_class != ROUGH_NOT_WEIGHTED:
                continue
            sp = special_players(realize(spec))
            if sp.passers or sp.dummies:
                continue
            yield spec, v

    def test_disjunctive_rough_weights_monotone(self):
        # levels are ordered: certificates must not pay a lower level more
        seen = 0
        for spec, v in self.rough_no_special(DISJUNCTIVE, 3, 3):
            w = v.certificate.weights
            assert all(a >= b for a, b in zip(w, w[1:])), spec
            assert all(x > 0 for x in w[:-1]), spec
            seen += 1
        assert seen > 0


class TestGridAgreement:
    @pytest.mark.parametrize("kind", [DISJUNCTIVE, CONJUNCTIVE])
    def test_two_level_grid_matches_oracle(self, kind):
        total = 0
        for spec in sweep_specs(kind, 2, 4):
            v = classify(spec)
            assert v.game_class == oracle_classify(realize(spec)), spec
            total += 1
        assert total == 100
