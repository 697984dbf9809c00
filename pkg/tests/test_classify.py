from __future__ import annotations

import pytest

from realchar.catalog import central_sl2_5_c4, cyclic, default_corpus, sl2_5
from realchar.chartab import compute_table, real_degree_set
from realchar.classify import (
    CASE_I,
    CASE_II,
    HYPOTHESIS_FAILS,
    SOLVABLE_SKIP,
    VIOLATION,
    build_report,
    classification_verdict,
    consistency_suite,
    degree_set_conclusion,
    is_prime_power,
    prime_power_set,
)
from realchar.perm import conjugacy_classes, enumerate_group


class TestPrimePowerSet:
    def test_a5_degrees(self):
        assert prime_power_set({1, 3, 4, 5})

    def test_l28_degrees(self):
        assert prime_power_set({1, 7, 8, 9})

    def test_composite(self):
        assert not prime_power_set({1, 3, 6})

    def test_one_is_allowed(self):
        assert is_prime_power(1)
        assert not is_prime_power(0)
        assert is_prime_power(27) and is_prime_power(32)
        assert not is_prime_power(12) and not is_prime_power(15)


class TestVerdicts:
    def test_a5_case_i(self, group):
        v = classification_verdict(group("A5"))
        assert v.kind == CASE_I
        assert v.k_label == "A5"
        assert v.h_order == 1 and v.o_order == 1

    def test_l28_case_i(self, group):
        v = classification_verdict(group("L2_8"))
        assert v.kind == CASE_I and v.k_label == "L2_8"

    def test_sl25_hypothesis_fails_with_witness_six(self, group):
        v = classification_verdict(group("SL2_5"))
        assert v.kind == HYPOTHESIS_FAILS
        assert v.witness_degree == 6

    def test_sl25_circ_c4_case_ii(self, group):
        v = classification_verdict(group("SL2_5oC4"))
        assert v.kind == CASE_II
        assert v.k_label == "SL2_5"
        assert v.h_order == 4 and v.o_order == 1

    def test_c12_solvable_skip(self, group):
        assert classification_verdict(group("C12")).kind == SOLVABLE_SKIP

    def test_s5_witness_six(self, group):
        v = classification_verdict(group("S5"))
        assert v.kind == HYPOTHESIS_FAILS and v.witness_degree == 6

    def test_witness_row_is_real_and_composite(self, group):
        g = group("A5xQ8")
        v = classification_verdict(g)
        assert v.kind == HYPOTHESIS_FAILS and v.witness_degree == 6
        t = compute_table(g, conjugacy_classes(g))
        assert t.real_flags[v.witness_row]
        assert t.degrees[v.witness_row] == 6

    def test_no_corpus_violation(self, group):
        for entry in default_corpus():
            v = classification_verdict(group(entry.name))
            assert v.kind != VIOLATION, (entry.name, v.violation_reason)
            assert v.kind == entry.expected_verdict

    def test_presentation_independence(self):
        # same central product built with the factors swapped
        from realchar.perm import central_product, center

        base = central_sl2_5_c4()
        ga = enumerate_group(sl2_5())
        gb = enumerate_group(cyclic(4))
        za = sorted(center(ga))
        half = next(i for i in range(4) if gb.order_of(i) == 2)
        swapped = central_product(
            cyclic(4), sl2_5(), frozenset({0, half}), frozenset(za), {0: 0, half: za[1]}
        )
        v1 = classification_verdict(enumerate_group(base))
        v2 = classification_verdict(enumerate_group(swapped))
        assert (v1.kind, v1.k_label, v1.h_order, v1.o_order) == (
            v2.kind,
            v2.k_label,
            v2.h_order,
            v2.o_order,
        )

    def test_a5_from_l24_same_verdict(self, group):
        v1 = classification_verdict(group("A5"))
        v2 = classification_verdict(group("L2_4"))
        assert (v1.kind, v1.k_label) == (v2.kind, v2.k_label)


class TestDegreeConclusion:
    def test_l28_branch_i(self, group):
        g = group("L2_8")
        t = compute_table(g, conjugacy_classes(g))
        v = classification_verdict(g)
        out = degree_set_conclusion(t, v)
        assert out.passed and out.branch == "i"

    def test_a5_x_c4_branch_ii(self, group):
        g = group("A5xC4")
        t = compute_table(g, conjugacy_classes(g))
        rdd = real_degree_set(t)
        assert rdd.odd == (1, 3, 5)
        out = degree_set_conclusion(t, classification_verdict(g))
        assert out.passed and out.branch == "ii"

    def test_sl25_circ_c4_branch_ii(self, group):
        g = group("SL2_5oC4")
        t = compute_table(g, conjugacy_classes(g))
        out = degree_set_conclusion(t, classification_verdict(g))
        assert out.passed and out.branch == "ii"

    def test_passes_for_every_case_group(self, group):
        for entry in default_corpus():
            g = group(entry.name)
            v = classification_verdict(g)
            if v.kind in (CASE_I, CASE_II):
                t = compute_table(g, conjugacy_classes(g))
                assert degree_set_conclusion(t, v).passed, entry.name

    def test_rejects_other_verdicts(self, group):
        g = group("C4")
        t = compute_table(g, conjugacy_classes(g))
        with pytest.raises(ValueError):
            degree_set_conclusion(t, classification_verdict(g))


class TestConsistencySuite:
    def test_passes_on_whole_corpus(self, group):
        for entry in default_corpus():
            results = consistency_suite(group(entry.name))
            assert all(results.values()), (entry.name, results)

    def test_q8_x_c3_normal_2_complement(self, group):
        # all nonlinear real degrees even forces the odd part to be normal
        g = group("Q8xC3")
        t = compute_table(g, conjugacy_classes(g))
        nonlinear_real = [
            d for d, real in zip(t.degrees, t.real_flags) if real and d > 1
        ]
        assert nonlinear_real and all(d % 2 == 0 for d in nonlinear_real)
        assert consistency_suite(g)["L2"]

    def test_a5_l1_biconditional(self, group):
        g = group("A5")
        t = compute_table(g, conjugacy_classes(g))
        nonlinear_real = [
            d for d, real in zip(t.degrees, t.real_flags) if real and d > 1
        ]
        assert any(d % 2 == 0 for d in nonlinear_real)  # the degree-4 row
        assert consistency_suite(g)["L1"]

    def test_s3_l3(self, group):
        assert consistency_suite(group("S3"))["L3"]

    def test_l4_on_nonsolvable_groups(self, group):
        for name in ("A5", "S5", "A6", "L2_7", "L2_8", "SL2_5"):
            g = group(name)
            t = compute_table(g, conjugacy_classes(g))
            assert consistency_suite(g, table=t)["L4"]
            assert any(
                t.real_flags[r] and t.indicators[r] == 1 and t.degrees[r] % 2 == 0
                for r in range(t.k)
            )


class TestPaperScaleInvariants:
    def test_at_most_three_primes_divide_real_degrees(self, group):
        for entry in default_corpus():
            g = group(entry.name)
            t = compute_table(g, conjugacy_classes(g))
            rdd = real_degree_set(t)
            if not prime_power_set(rdd.degrees):
                continue
            primes = set()
            for d in rdd.degrees:
                if d > 1:
                    f = 2
                    while d % f:
                        f += 1
                    primes.add(f)
            assert len(primes) <= 3, entry.name

    def test_derived_limit_meets_radical_in_at_most_two(self, group):
        from realchar.perm import derived_series_limit
        from realchar.structure import normal_subgroups, recognize, solvable_radical, subgroup_elements

        for entry in default_corpus():
            g = group(entry.name)
            v = classification_verdict(g)
            if v.kind not in (CASE_I, CASE_II):
                continue
            cd = conjugacy_classes(g)
            rad = solvable_radical(g, cd, normal_subgroups(g, cd))
            k = derived_series_limit(g)
            meet = k & rad
            assert len(meet) <= 2, entry.name
            if len(meet) == 2:
                assert recognize(subgroup_elements(g, k, "K")) == "SL2_5"


class TestLargeExtensionStretch:
    @pytest.mark.skipif(
        __import__("realchar").BACKEND != "c",
        reason="order-32256 stretch case needs the compiled kernels",
    )
    def test_affine_l28_has_real_degree_63(self, group):
        # the split extension 2^6 . L2(8) on 64 points
        g = group("aff64_L2_8")
        assert g.order == 32256
        cd = conjugacy_classes(g)
        t = compute_table(g, cd)
        rdd = real_degree_set(t)
        assert rdd.degrees == (1, 7, 8, 9, 63)
        assert any(
            t.degrees[r] == 63 and t.real_flags[r] for r in range(t.k)
        )
        v = classification_verdict(g, cd)
        assert v.kind == HYPOTHESIS_FAILS and v.witness_degree == 63


class TestReport:
    def test_fields(self, group):
        r = build_report("SL2_5oC4", group("SL2_5oC4"))
        assert r.verdict == CASE_II and r.case == "ii"
        assert r.h_order == 4 and r.o_order == 1
        assert r.prime > r.order
        assert r.cd_rv == (1, 3, 4, 5)

    def test_json_is_deterministic_and_complete(self, group):
        import json

        r = build_report("A5", group("A5"))
        payload = json.loads(r.to_json())
        assert payload["ms"] == 0
        expected_keys = {
            "name", "order", "classes", "prime", "cd_rv", "cd_rv_odd",
            "verdict", "case", "witness_degree", "K", "H_order", "O_order",
            "lemmas", "ms",
        }
        assert set(payload) == expected_keys
        assert payload["verdict"] == "CaseI"
        assert r.to_json() == build_report("A5", group("A5")).to_json()
