"""Necklace readings and the rotation/translation/pair bijections."""

from math import gcd

import pytest

from zscomb import (
    GroupSpec,
    all_abelian_groups,
    canonical_rotation,
    complement_bijection,
    enum_pairs,
    enum_sequences,
    enum_subsets,
    is_zero_sum,
    necklace_to_sequence,
    pair_bijection,
    pair_dimension,
    rational_catalan,
    reciprocity_bijection,
    sequence_sum,
    sequence_to_necklace,
    subset_reci_predicate,
    sum_all_elements_is_zero,
    translate_complement_bijection,
    v2,
)


def groups_through(lo, hi):
    return [g for o in range(lo, hi + 1) for g in all_abelian_groups(o)]


def test_canonical_rotation():
    assert canonical_rotation("BRR") == "RRB"
    assert canonical_rotation("BRBRR") == "RRBRB"
    assert canonical_rotation("GGB") == "GGB"
    assert canonical_rotation("BGR") == "RBG"


def test_worked_example_necklace():
    g = GroupSpec((7,))
    word = sequence_to_necklace(g, (0, 0, 1, 1, 1, 0, 2))
    assert sorted(word) == sorted("R" * 7 + "B" * 5)
    assert word == canonical_rotation(word)
    assert necklace_to_sequence(g, word) == (0, 0, 1, 1, 1, 0, 2)


def test_necklace_reading_is_rotation_invariant():
    g = GroupSpec((7,))
    word = sequence_to_necklace(g, (0, 0, 1, 1, 1, 0, 2))
    for i in range(len(word)):
        rotated = word[i:] + word[:i]
        assert necklace_to_sequence(g, rotated) == (0, 0, 1, 1, 1, 0, 2)


def test_necklace_preconditions():
    g = GroupSpec((3,))
    with pytest.raises(ValueError):
        sequence_to_necklace(g, (1, 1, 1))  # mass 3 not coprime to 3
    with pytest.raises(ValueError):
        sequence_to_necklace(g, (0, 1, 0))  # not zero-sum


def test_worked_example_reciprocity():
    g7, g5 = GroupSpec((7,)), GroupSpec((5,))
    assert reciprocity_bijection(g7, g5, (0, 0, 1, 1, 1, 0, 2)) == (1, 2, 0, 3, 1)
    assert reciprocity_bijection(g5, g7, (1, 2, 0, 3, 1)) == (0, 0, 1, 1, 1, 0, 2)


def test_reciprocity_trivial_side():
    t = GroupSpec(())
    g = GroupSpec((4,))
    # from the trivial group: the one multiset of size 4 maps to the one
    # zero-sum singleton over C_4, namely {0}
    assert reciprocity_bijection(t, g, (4,)) == (1, 0, 0, 0)
    assert reciprocity_bijection(g, t, (1, 0, 0, 0)) == (4,)


def test_reciprocity_bijective_and_involutive():
    for g in groups_through(1, 8):
        for h in groups_through(1, 8):
            if gcd(g.order, h.order) != 1 or g.order < h.order:
                continue
            domain = enum_sequences(g, h.order, 0)
            images = [reciprocity_bijection(g, h, vec) for vec in domain]
            assert sorted(images) == sorted(enum_sequences(h, g.order, 0))
            for vec, img in zip(domain, images):
                assert reciprocity_bijection(h, g, img) == vec
            assert len(images) == rational_catalan(g.order, h.order)


def test_complement_goldens():
    g5 = GroupSpec((5,))
    bits, shift = complement_bijection(g5, (0, 1, 0, 0, 1))
    assert bits == (1, 0, 1, 1, 0) and shift == 0  # {0,2,3}, already zero-sum
    g4 = GroupSpec((4,))
    assert complement_bijection(g4, (1, 0, 0, 0))[0] == (1, 1, 0, 1)


def test_complement_roundtrip_exhaustive():
    for g in groups_through(2, 10):
        n = g.order
        for k in range(1, n):
            if gcd(k, n) != 1:
                continue
            for bits in enum_subsets(g, k, 0):
                out, _ = complement_bijection(g, bits)
                assert sum(out) == n - k and is_zero_sum(g, out)
                back, _ = complement_bijection(g, out)
                assert back == bits


def test_translate_complement_golden():
    g4 = GroupSpec((4,))
    assert translate_complement_bijection(g4, (0, 1, 0, 1)) == ((0, 1, 0, 1), 1)


def test_translate_complement_odd_order_is_plain_complement():
    g = GroupSpec((9,))
    assert sum_all_elements_is_zero(g)
    bits = (1, 0, 0, 0, 1, 1, 0, 0, 0)  # {0,4,5}: 9 | 9
    out, x = translate_complement_bijection(g, bits)
    assert x == 0
    assert out == tuple(1 - b for b in bits)


def test_translate_complement_bijective_where_defined():
    # the map is defined exactly where the symmetry predicate holds: either
    # the elements sum to zero (plain complement) or k*x = e is solvable
    for g in groups_through(2, 12):
        n = g.order
        for k in range(1, n):
            if not subset_reci_predicate(g, k):
                continue
            domain = enum_subsets(g, k, 0)
            images = []
            for bits in domain:
                out, _ = translate_complement_bijection(g, bits)
                assert sum(out) == n - k and is_zero_sum(g, out)
                images.append(out)
            assert sorted(images) == sorted(enum_subsets(g, n - k, 0))


def test_translate_complement_no_solution():
    # over C_6 all elements sum to e = 3; for even k the equation k*x = 3
    # has an even left side mod 6 and no solution
    g6 = GroupSpec((6,))
    with pytest.raises(ValueError):
        translate_complement_bijection(g6, (0, 0, 1, 0, 1, 0))  # {2,4}, k=2
    with pytest.raises(ValueError):
        translate_complement_bijection(g6, (1, 1, 1, 1, 0, 0))  # {0,1,2,3}, k=4


def test_pair_bijection_two_element_example():
    g = GroupSpec((2,))
    pairs = enum_pairs(g, 1, 1, 0)
    assert pairs == [((1, 0), (1, 0)), ((0, 1), (0, 1))]
    images = [pair_bijection(g, g, v, b) for v, b in pairs]
    assert sorted(images) == sorted(pairs)
    for (v, b), (u, w) in zip(pairs, images):
        assert pair_bijection(g, g, u, w) == (v, b)


def test_pair_bijection_m0_degenerates_to_reciprocity():
    g7, g5 = GroupSpec((7,)), GroupSpec((5,))
    vec = (0, 0, 1, 1, 1, 0, 2)
    u, v = pair_bijection(g7, g5, vec, (0,) * 7)
    assert v == (0,) * 5
    assert u == reciprocity_bijection(g7, g5, vec)


def test_pair_bijection_exhaustive():
    for q in range(0, 4):
        for m in range(0, 4):
            if q + m < 1:
                continue
            for p in range(0, 4):
                if p + m < 1 or gcd(p, q + m) != 1 or gcd(q, p + m) != 1:
                    continue
                for g in all_abelian_groups(q + m):
                    for h in all_abelian_groups(p + m):
                        domain = enum_pairs(g, p, m, 0)
                        codomain = enum_pairs(h, q, m, 0)
                        assert len(domain) == pair_dimension(p, q, m, g)
                        assert len(codomain) == pair_dimension(q, p, m, h)
                        images = [pair_bijection(g, h, v, b) for v, b in domain]
                        assert sorted(images) == sorted(codomain), (p, q, m, g, h)
                        for (v, b), (u, w) in zip(domain, images):
                            assert sequence_sum(g, v) == g.negate(sequence_sum(g, b))
                            assert pair_bijection(h, g, u, w) == (v, b)


def test_pair_bijection_preconditions():
    g4 = GroupSpec((4,))
    g2 = GroupSpec((2,))
    with pytest.raises(ValueError):
        # p = 2 shares a factor with q + m = 4
        pair_bijection(g4, GroupSpec((5,)), (1, 1, 0, 0), (1, 1, 1, 0))
    with pytest.raises(ValueError):
        # pair sum is not zero
        pair_bijection(g2, g2, (0, 1), (1, 0))
