"""Closed-form counts against oracle enumeration and each other."""

from math import comb, gcd

import pytest

from zscomb import (
    ExactDivisionError,
    GroupSpec,
    all_abelian_groups,
    count_pairs_coefficient,
    count_sequences,
    count_subsets,
    enum_pairs,
    exact_div,
    multinomial,
    pair_dimension,
    rational_catalan,
    sequences_by_sum,
    subsets_by_sum,
)


def groups_through(max_order):
    return [g for o in range(1, max_order + 1) for g in all_abelian_groups(o)]


def test_exact_div():
    assert exact_div(12, 4) == 3
    assert exact_div(-12, 4) == -3
    with pytest.raises(ExactDivisionError):
        exact_div(13, 4)


def test_multinomial():
    assert multinomial(6, 2, 2, 2) == 90
    assert multinomial(5, 5) == 1
    assert multinomial(0) == 1
    with pytest.raises(ValueError):
        multinomial(5, 2, 2)  # parts must sum to the total


def test_known_counts():
    assert count_sequences(GroupSpec((2, 2)), 3, 0) == 5
    assert count_sequences(GroupSpec((2, 2)), 2, 0) == 4
    assert count_sequences(GroupSpec((2,)), 4, 0) == 3
    assert count_subsets(GroupSpec((6,)), 2, 0) == 2
    assert count_subsets(GroupSpec((6,)), 4, 0) == 3
    assert count_subsets(GroupSpec((5,)), 2, 0) == 2


def test_boundary_sizes():
    g = GroupSpec((4,))
    assert count_sequences(g, 0, 0) == 1
    assert count_sequences(g, 0, 2) == 0
    assert count_subsets(g, 0, 0) == 1
    assert count_subsets(g, 0, 1) == 0
    # the full subset sums to 0+1+2+3 = 6 = 2 in C_4
    assert count_subsets(g, 4, 2) == 1
    assert count_subsets(g, 4, 0) == 0
    with pytest.raises(ValueError):
        count_subsets(g, 5, 0)
    t = GroupSpec(())
    assert count_sequences(t, 5, 0) == 1
    assert count_subsets(t, 1, 0) == 1


def test_counts_match_oracle_all_targets():
    for g in groups_through(9):
        n = g.order
        for m in range(0, 6):
            hist = sequences_by_sum(g, m)
            for target in g.elements():
                assert count_sequences(g, m, target) == hist.get(target, 0)
        for k in range(0, n + 1):
            hist = subsets_by_sum(g, k)
            for target in g.elements():
                assert count_subsets(g, k, target) == hist.get(target, 0)


def test_rational_catalan():
    assert rational_catalan(7, 5) == 66
    assert rational_catalan(1, 1) == 1
    assert rational_catalan(2, 3) == 2
    # Catalan numbers are the (n, n+1) diagonal
    assert [rational_catalan(n, n + 1) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]
    with pytest.raises(ValueError):
        rational_catalan(4, 2)
    with pytest.raises(ValueError):
        rational_catalan(0, 3)


def test_cyclic_reciprocity_all_labels():
    # |M(C_n, m, i)| = |M(C_m, n, i)| for every shared label i, even when
    # n and m are not coprime: both sides reduce to the same divisor sum.
    for n in range(1, 11):
        for m in range(1, 11):
            for i in range(min(n, m)):
                left = count_sequences(GroupSpec.parse(str(n)), m, i % n)
                right = count_sequences(GroupSpec.parse(str(m)), n, i % m)
                assert left == right, (n, m, i)


def test_coprime_reciprocity_equals_catalan():
    for g in groups_through(8):
        for h in groups_through(8):
            if gcd(g.order, h.order) != 1:
                continue
            c = rational_catalan(g.order, h.order)
            assert count_sequences(g, h.order, 0) == c
            assert count_sequences(h, g.order, 0) == c


def test_pair_dimension_matches_enumeration():
    for q in range(0, 4):
        for m in range(0, 4):
            if q + m < 1:
                continue
            for g in all_abelian_groups(q + m):
                for p in range(0, 5):
                    if p + q + m < 1:
                        continue
                    expected = len(enum_pairs(g, p, m, 0))
                    assert pair_dimension(p, q, m, g) == expected, (p, q, m, g)


def test_pair_dimension_structure_free_when_coprime():
    # gcd(p, q, m) = 1 collapses the divisor sum to one multinomial term,
    # so the count cannot see the group structure.
    for p, q, m in ((1, 1, 1), (2, 1, 1), (3, 2, 2), (4, 3, 2)):
        assert gcd(p, gcd(q, m)) == 1
        vals = {pair_dimension(p, q, m, g) for g in all_abelian_groups(q + m)}
        assert len(vals) == 1
        assert vals.pop() == multinomial(p + q + m, p, q, m) // (p + q + m)


def test_pair_dimension_validation():
    with pytest.raises(ValueError):
        pair_dimension(1, 1, 1, GroupSpec((3,)))  # order must be q + m
    with pytest.raises(ValueError):
        pair_dimension(0, 0, 0, GroupSpec(()))


def test_count_pairs_coefficient_against_oracle():
    for g in groups_through(6):
        n = g.order
        for p in range(0, 4):
            for k in range(0, n + 2):
                expected = len(enum_pairs(g, p, k, 0)) if k <= n else 0
                assert count_pairs_coefficient(g, 0, p, k) == expected
        # non-zero targets too, one group is enough for the sweep
        if n == 4:
            for target in g.elements():
                for p in range(0, 4):
                    for k in range(0, n + 1):
                        expected = len(enum_pairs(g, p, k, target))
                        assert count_pairs_coefficient(g, target, p, k) == expected


def test_count_sequences_total_over_targets():
    for g in groups_through(8):
        n = g.order
        for m in range(0, 5):
            total = sum(count_sequences(g, m, t) for t in g.elements())
            assert total == comb(n + m - 1, m)
        for k in range(0, n + 1):
            total = sum(count_subsets(g, k, t) for t in g.elements())
            assert total == comb(n, k)
