#!/usr/bin/env python3
"""Rational Dyck paths, the cycle lemma, and the walk back to multisets.

A step word over {0, 1} with a ones (across) and b zeros (up), gcd(a, b)
= 1, is a Dyck word when every prefix satisfies a * (ups so far) >=
b * (acrosses so far): the staircase from (0, 0) to (a, b) never dips
below the diagonal.  There are Cat(a, b) = C(a+b, a) / (a+b) of them,
and among the a+b rotations of any fixed word exactly one is Dyck.
That last fact (the cycle lemma) is what turns path counting into
zero-sum counting: a size-m zero-sum multiset in Z/n with gcd(m, n) = 1
has exactly one rotation whose gap vector is an (n, m)-Dyck path.
"""

from zscomb import (
    GroupSpec,
    dyck_to_sequence,
    dyck_to_subset,
    enum_dyck,
    gaps_to_word,
    is_dyck,
    rational_catalan,
    sequence_to_dyck,
    subset_to_dyck,
)


def draw(a: int, b: int, word: str) -> str:
    """ASCII staircase for a step word: '_' across, '|' up."""
    rows = [[" "] * (2 * a + 1) for _ in range(b + 1)]
    x = y = 0
    for step in word:
        if step == "0":
            y += 1
            rows[y][2 * x] = "|"
        else:
            rows[y][2 * x + 1] = "_"
            rows[y][2 * x + 2] = "_"
            x += 1
    lines = ["".join(r).rstrip() for r in reversed(rows)]
    return "\n".join("    " + line for line in lines if line)


def main() -> None:
    a, b = 3, 2
    words = enum_dyck(a, b)
    print(f"all ({a},{b})-Dyck words  (Cat({a},{b}) = {rational_catalan(a, b)}):")
    for w in words:
        print(f"  {w}")
        print(draw(a, b, w))

    word = "01101"
    print(f"\ncycle lemma on rotations of {word}:")
    for l in range(len(word)):
        rot = word[l:] + word[:l]
        tag = "Dyck" if is_dyck(a, b, rot) else "dips below"
        print(f"  shift {l}: {rot}  {tag}")

    g7 = GroupSpec.parse("7")
    vec = (0, 0, 1, 1, 1, 0, 2)
    gaps, rot = sequence_to_dyck(g7, vec)
    print(f"\nzero-sum multiset {vec} over Z/7")
    print(f"  rotate left by {rot} -> Dyck gap vector {gaps}")
    print(f"  as a step word: {gaps_to_word(gaps)}")
    back, shift = dyck_to_sequence(g7, gaps)
    print(f"  walking back: rotation {shift} recovers {back}")

    g5 = GroupSpec.parse("5")
    bits = (0, 1, 0, 0, 1)
    sub_word, sub_rot = subset_to_dyck(g5, bits)
    print(f"\nzero-sum subset {{1, 4}} of Z/5, indicator {bits}")
    print(f"  rotate left by {sub_rot} -> Dyck step word {sub_word}")
    print(draw(2, 3, sub_word))
    sub_back, sub_shift = dyck_to_subset(g5, sub_word)
    print(f"  walking back: rotation {sub_shift} recovers {sub_back}")


if __name__ == "__main__":
    main()
