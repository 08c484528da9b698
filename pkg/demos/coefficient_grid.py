#!/usr/bin/env python3
"""The two-variable coefficient grid, and moving pairs between groups.

For a group G and target t, the grid entry at (p, k) counts pairs
(multiset of size p, subset of size k) whose combined weighted sum is t.
Row k = 0 is plain multiset counting, column p = 0 is plain subset
counting, and the whole grid is computed twice internally (closed form
and series expansion) with the routes asserted equal.

When the sizes p, q, m satisfy gcd(p, q + m) = gcd(q, p + m) = 1, the
zero-sum pairs of shape (size-p multiset, size-m subset) over a group
of order q + m biject with the pairs of shape (size-q multiset, size-m
subset) over any group of order p + m, via a three-color necklace.
"""

from zscomb import (
    GroupSpec,
    count_sequences,
    count_subsets,
    enum_pairs,
    pair_bijection,
    poincare_table,
)


def main() -> None:
    g = GroupSpec.parse("2,2")
    table = poincare_table(g, 0, 6, 4)
    print(f"pair counts over {g} with zero target  (rows k, columns p):")
    print("  k\\p " + "".join(f"{p:>6}" for p in range(7)))
    for k in range(5):
        print(f"  {k}   " + "".join(f"{table.entry(p, k):>6}" for p in range(7)))
    print("  row k=0 equals multiset counts:   ", [count_sequences(g, p, 0) for p in range(7)])
    print("  column p=0 equals subset counts:  ", [count_subsets(g, k, 0) for k in range(5)])

    g2 = GroupSpec.parse("2")
    g3 = GroupSpec.parse("4")
    p, q, m = 3, 1, 1
    print(f"\ntransporting ({p}-multiset, {m}-subset) pairs over {g2} "
          f"to ({q}-multiset, {m}-subset) pairs over {g3}:")
    for vec, bits in enum_pairs(g2, p, m, 0):
        u, w = pair_bijection(g2, g3, vec, bits)
        back = pair_bijection(g3, g2, u, w)
        print(f"  {vec} + {bits}  ->  {u} + {w}   (back: {back[0]} + {back[1]})")
    left = len(enum_pairs(g2, p, m, 0))
    right = len(enum_pairs(g3, q, m, 0))
    print(f"  domain size {left} = codomain size {right}")


if __name__ == "__main__":
    main()
