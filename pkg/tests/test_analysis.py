"""Predicates, verifiers, and the group-pair scan."""

import json

import pytest

from zscomb import (
    GroupSpec,
    all_abelian_groups,
    cnr_reciprocity_check,
    count_sequences,
    gcp_predicate,
    reciprocity_scan,
    subset_reci_predicate,
    sum_all_elements_is_zero,
    v2,
    verify_gcp,
    verify_subset_reciprocity,
)


def test_v2():
    assert v2(1) == 0
    assert v2(12) == 2
    assert v2(2**10) == 10
    with pytest.raises(ValueError):
        v2(0)


def test_all_abelian_groups():
    assert [g.invariant_factors for g in all_abelian_groups(1)] == [()]
    assert [g.invariant_factors for g in all_abelian_groups(8)] == [
        (2, 2, 2),
        (2, 4),
        (8,),
    ]
    assert [g.invariant_factors for g in all_abelian_groups(12)] == [(2, 6), (12,)]
    assert len(all_abelian_groups(16)) == 5
    assert [g.invariant_factors for g in all_abelian_groups(36)] == [
        (2, 18),
        (3, 12),
        (6, 6),
        (36,),
    ]


def test_subset_reci_predicate():
    assert subset_reci_predicate(GroupSpec((6,)), 2) is False
    assert subset_reci_predicate(GroupSpec((4,)), 1) is True
    g3 = GroupSpec((3,))
    assert all(subset_reci_predicate(g3, k) for k in (1, 2))
    assert subset_reci_predicate(GroupSpec((2, 2)), 2) is True
    with pytest.raises(ValueError):
        subset_reci_predicate(GroupSpec((6,)), 0)
    with pytest.raises(ValueError):
        subset_reci_predicate(GroupSpec((6,)), 6)


def test_sum_all_elements_is_zero():
    assert sum_all_elements_is_zero(GroupSpec((2, 2))) is True
    assert sum_all_elements_is_zero(GroupSpec((4,))) is False
    assert sum_all_elements_is_zero(GroupSpec((5,))) is True
    assert sum_all_elements_is_zero(GroupSpec(())) is True


def test_verify_subset_reciprocity():
    report = verify_subset_reciprocity(16)
    assert report["theorem"] == "subset-reci"
    assert report["failures"] == []
    assert report["scanned"] == len(report["rows"]) > 100
    witness = [
        r for r in report["rows"] if r["group"] == "6" and r["k"] == 2
    ]
    assert witness == [
        {"group": "6", "k": 2, "count_k": "2", "count_nk": "3", "predicate": False}
    ]


def test_gcp_predicate():
    assert gcp_predicate(GroupSpec((2, 2)), 2) is False
    assert gcp_predicate(GroupSpec((4,)), 2) is True
    assert gcp_predicate(GroupSpec((2, 4)), 3) is True
    assert gcp_predicate(GroupSpec(()), 5) is True
    with pytest.raises(ValueError):
        gcp_predicate(GroupSpec((4,)), 6)


def test_verify_gcp():
    report = verify_gcp(16, (2, 3, 5, 7))
    assert report["theorem"] == "gcp"
    assert report["failures"] == []
    counterexample = [
        r for r in report["rows"] if r["group"] == "2,2" and r["p"] == 2
    ]
    assert counterexample == [
        {"group": "2,2", "p": 2, "left": "4", "right": "3", "predicate": False}
    ]


def test_cnr_known_value():
    report = cnr_reciprocity_check(2, 6, 2)
    row = report["rows"][0]
    assert row["left"] == row["right"] == "2299"
    assert report["failures"] == []
    assert set(row["oracle_checked"]) == {"2,2", "6,6"}


def test_cnr_rank_one_is_plain_reciprocity():
    for n, m in ((4, 6), (3, 9), (5, 7), (8, 8)):
        report = cnr_reciprocity_check(n, m, 1)
        assert report["failures"] == []
        assert report["rows"][0]["left"] == str(count_sequences(GroupSpec.parse(str(m)), n, 0))


def test_cnr_coprime_case_carries_catalan():
    report = cnr_reciprocity_check(2, 3, 2)
    row = report["rows"][0]
    assert report["failures"] == []
    assert row["catalan"] == row["left"]


def test_cnr_condition_rejected():
    with pytest.raises(ValueError):
        cnr_reciprocity_check(4, 2, 2)  # gcd(4,4)=4 but gcd(16,2)=2
    with pytest.raises(ValueError):
        cnr_reciprocity_check(0, 2, 1)


def test_reciprocity_scan():
    report = reciprocity_scan(8)
    assert report["theorem"] == "reciprocity-scan"
    assert report["failures"] == []
    rows = report["rows"]
    assert report["scanned"] == len(rows)
    # every coprime pair equal; the (C_2, C_2xC_2) pair appears and differs
    assert all(r["equal"] for r in rows if r["coprime_orders"])
    odd = [r for r in rows if r["group"] == "2" and r["other"] == "2,2"]
    assert odd == [
        {
            "group": "2",
            "other": "2,2",
            "left": "3",
            "right": "4",
            "equal": False,
            "coprime_orders": False,
        }
    ]


def test_reports_are_deterministic_json():
    a = json.dumps(reciprocity_scan(6), sort_keys=True)
    b = json.dumps(reciprocity_scan(6), sort_keys=True)
    assert a == b
