"""Rational Dyck paths and the rotation bijections onto zero-sum objects.

An (a, b)-Dyck path (gcd(a, b) = 1) runs from (0, 0) to (a, b) in unit north
and east steps while staying weakly above the diagonal y = (b/a) x.  Two
encodings are used:

* gap form: a tuple (x_0, ..., x_{a-1}) with sum b, where x_i is the number
  of north steps taken at x = i;
* step form: a string over '0' (north) and '1' (east) of length a + b.

All diagonal comparisons are the integer test a*y >= b*x, so no floating
point is involved anywhere.
"""

from __future__ import annotations

from itertools import accumulate
from math import comb, gcd

from .errors import EnumerationLimitError
from .groups import GroupSpec
from .zerosum import (
    check_indicator,
    check_vector,
    cyclic_shift,
    is_zero_sum,
    zero_sum_shift,
)

ENUM_DEFAULT_MAX = 24


def _check_shape(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise ValueError(f"need a, b >= 1, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) are not coprime")


def gaps_to_word(gaps) -> str:
    """Step word of a gap vector: x_i north steps, then one east step, per column."""
    return "".join("0" * x + "1" for x in gaps)


def word_to_gaps(word: str) -> tuple[int, ...]:
    """Inverse of :func:`gaps_to_word`; requires the word to end on an east step."""
    if word and not set(word) <= {"0", "1"}:
        raise ValueError("step words use characters '0' and '1' only")
    if not word.endswith("1"):
        raise ValueError("gap form needs the final step to be an east step")
    gaps = []
    run = 0
    for c in word:
        if c == "0":
            run += 1
        else:
            gaps.append(run)
            run = 0
    return tuple(gaps)


def is_dyck(a: int, b: int, path) -> bool:
    """Validity test for either encoding; str means step form, else gap form.

    Malformed inputs (wrong length or totals) raise; a well-formed path that
    dips below the diagonal returns False.
    """
    _check_shape(a, b)
    if isinstance(path, str):
        if len(path) != a + b or not set(path) <= {"0", "1"}:
            raise ValueError(f"step word must have {a + b} steps over '0'/'1'")
        if path.count("1") != a:
            raise ValueError(f"step word must contain {a} east steps")
        x = y = 0
        for c in path:
            if c == "0":
                y += 1
            else:
                x += 1
            if a * y < b * x:
                return False
        return True
    gaps = tuple(path)
    if len(gaps) != a:
        raise ValueError(f"gap vector must have {a} entries")
    if any(g < 0 for g in gaps):
        raise ValueError(f"gaps must be >= 0, got {gaps}")
    if sum(gaps) != b:
        raise ValueError(f"gaps must total {b}, got {sum(gaps)}")
    heights = list(accumulate(gaps))
    return all(a * heights[i - 1] >= b * i for i in range(1, a))


def enum_dyck(a: int, b: int, max_total: int = ENUM_DEFAULT_MAX) -> list[str]:
    """All (a, b)-Dyck paths as step words in lexicographic order ('0' < '1')."""
    _check_shape(a, b)
    if a + b > max_total:
        raise EnumerationLimitError(
            f"a + b = {a + b} exceeds the path enumeration cap {max_total}"
        )
    out: list[str] = []
    word: list[str] = []

    def walk(x: int, y: int) -> None:
        if x == a and y == b:
            out.append("".join(word))
            return
        if y < b:
            word.append("0")
            walk(x, y + 1)
            word.pop()
        if x < a and a * y >= b * (x + 1):
            word.append("1")
            walk(x + 1, y)
            word.pop()

    walk(0, 0)
    assert len(out) == comb(a + b, a) // (a + b)
    return out


def sequence_to_dyck(group: GroupSpec, vec) -> tuple[tuple[int, ...], int]:
    """Rotate a zero-sum multiset into its unique Dyck gap vector.

    With n = |G| and mass m coprime to n, the scaled heights
    h_i = n * (x_0 + ... + x_{i-1}) - m * i for i = 0..n-1 are pairwise
    distinct; rotating left by the argmin gives the one rotation that is an
    (n, m)-Dyck path.  Returns (gap vector, rotation amount).
    """
    vec = check_vector(group, vec)
    n = group.order
    m = sum(vec)
    _check_shape(n, m)
    if not is_zero_sum(group, vec):
        raise ValueError("sequence does not sum to the identity")
    heights = [0]
    run = 0
    for i in range(1, n):
        run += vec[i - 1]
        heights.append(n * run - m * i)
    assert len(set(heights)) == n
    lam = heights.index(min(heights))
    gaps = cyclic_shift(vec, lam)
    assert is_dyck(n, m, gaps)
    return gaps, lam


def dyck_to_sequence(group: GroupSpec, gaps) -> tuple[tuple[int, ...], int]:
    """Rotate a Dyck gap vector into its unique zero-sum multiset.

    Inverse direction of :func:`sequence_to_dyck`; the rotation is found by
    the staged congruence construction.  Returns (vector, rotation amount).
    """
    gaps = check_vector(group, gaps)
    n = group.order
    m = sum(gaps)
    _check_shape(n, m)
    if not is_dyck(n, m, gaps):
        raise ValueError(f"{gaps} is not a valid ({n}, {m})-Dyck gap vector")
    return _swap(zero_sum_shift(group, gaps))


def subset_to_dyck(group: GroupSpec, bits) -> tuple[str, int]:
    """Rotate a zero-sum k-subset indicator into its unique Dyck step word.

    The indicator is read directly as a step word (element k-subsets of a
    group of order n give (k, n-k)-paths).  Exactly one of the n rotations
    is a Dyck path; returns (word, rotation amount).
    """
    bits = check_indicator(group, bits)
    n = group.order
    k = sum(bits)
    _check_shape(k, n - k)
    if not is_zero_sum(group, bits):
        raise ValueError("subset does not sum to the identity")
    words = ["".join(map(str, cyclic_shift(bits, l))) for l in range(n)]
    hits = [l for l, w in enumerate(words) if is_dyck(k, n - k, w)]
    assert len(hits) == 1
    lam = hits[0]
    return words[lam], lam


def dyck_to_subset(group: GroupSpec, word: str) -> tuple[tuple[int, ...], int]:
    """Rotate a Dyck step word into its unique zero-sum subset indicator."""
    n = group.order
    if len(word) != n:
        raise ValueError(f"step word length {len(word)} must equal group order {n}")
    k = word.count("1")
    _check_shape(k, n - k)
    if not is_dyck(k, n - k, word):
        raise ValueError(f"{word!r} is not a valid ({k}, {n - k})-Dyck step word")
    bits = tuple(int(c) for c in word)
    return _swap(zero_sum_shift(group, bits))


def _swap(pair):
    shift, vec = pair
    return vec, shift
