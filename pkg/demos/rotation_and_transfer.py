#!/usr/bin/env python3
"""A zero-sum multiset story in Z/7: one good rotation, one necklace,
and a free transfer to Z/5.

Take the multiset {0, 2, 2, 5, 6} in Z/7, written as the multiplicity
vector (1, 0, 2, 0, 0, 1, 1).  Its five elements sum to 15 = 1 mod 7,
so it is not zero-sum as written.  But the mass 5 is coprime to 7, and
that buys two facts:

  * among the 7 cyclic rotations of the vector, each possible sum value
    appears exactly once, so exactly one rotation is zero-sum;
  * the necklace drawn from that rotation can be re-read over Z/5 to
    give a zero-sum multiset of size 7 there, and the re-reading is a
    bijection.  Both sides are counted by the same rational Catalan
    number.
"""

from zscomb import (
    GroupSpec,
    count_sequences,
    cyclic_shift,
    necklace_to_sequence,
    rational_catalan,
    reciprocity_bijection,
    sequence_sum,
    sequence_to_necklace,
    zero_sum_shift,
)


def main() -> None:
    g7 = GroupSpec.parse("7")
    g5 = GroupSpec.parse("5")
    vec = (1, 0, 2, 0, 0, 1, 1)

    print(f"multiplicity vector over Z/7: {vec}")
    print("rotation  vector                 weighted sum mod 7")
    for l in range(7):
        rot = cyclic_shift(vec, l)
        print(f"  {l}       {rot}  {sequence_sum(g7, rot)}")

    shift, canonical = zero_sum_shift(g7, vec)
    print(f"\nunique zero-sum rotation: shift {shift} -> {canonical}")

    word = sequence_to_necklace(g7, canonical)
    print(f"two-color necklace (R = slot, B = bead): {word}")
    back = necklace_to_sequence(g7, word)
    print(f"reading the necklace back over Z/7:      {back}")

    other = reciprocity_bijection(g7, g5, canonical)
    print(f"\nre-reading with colors swapped, over Z/5: {other}")
    print(f"its weighted sum mod 5: {sequence_sum(g5, other)}")
    round_trip = reciprocity_bijection(g5, g7, other)
    print(f"transferring back to Z/7 recovers:        {round_trip}")

    a, b = 7, 5
    cat = rational_catalan(a, b)
    print(
        f"\ncounts agree: |size-5 zero-sum multisets in Z/7| = "
        f"{count_sequences(g7, b, 0)}, |size-7 in Z/5| = "
        f"{count_sequences(g5, a, 0)}, Cat(7,5) = {cat}"
    )


if __name__ == "__main__":
    main()
