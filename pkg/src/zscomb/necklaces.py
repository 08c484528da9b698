"""Necklace pictures of the rotation bijections.

A zero-sum multiset of size m over a group of order n is drawn as a necklace
of n red and m blue beads: reading clockwise, the number of blue beads
following each red bead is the multiplicity vector.  Swapping the roles of
the colors reads the same necklace as a multiset of size n over any group of
order m, and picking the unique zero-sum rotation on each side gives a
bijection between the two collections ("reciprocity").

Necklaces are serialized as strings over R, G, B in canonical rotation (the
lexicographically least one under R < G < B).  Green only appears in the
three-color pair bijection at the bottom of this module.
"""

from __future__ import annotations

from math import gcd

from .groups import GroupSpec
from .zerosum import (
    check_indicator,
    check_vector,
    cyclic_shift,
    is_zero_sum,
    sequence_sum,
    target_sum_shift,
    translate,
    zero_sum_shift,
)

_COLOR_RANK = {"R": 0, "G": 1, "B": 2}


def canonical_rotation(word: str) -> str:
    """Lexicographically least rotation of a color word under R < G < B."""
    if not set(word) <= set(_COLOR_RANK):
        raise ValueError(f"necklace words use R, G, B only, got {word!r}")
    key = lambda w: [_COLOR_RANK[c] for c in w]
    return min((word[i:] + word[:i] for i in range(len(word))), key=key, default=word)


def _gaps_after(word: str, marker: str) -> tuple[int, ...]:
    """Cyclic gap vector: count of non-marker beads after each marker bead."""
    positions = [i for i, c in enumerate(word) if c == marker]
    if not positions:
        raise ValueError(f"word {word!r} has no {marker!r} beads")
    n = len(word)
    gaps = []
    for here, there in zip(positions, positions[1:] + [positions[0] + n]):
        gaps.append(there - here - 1)
    return tuple(gaps)


def sequence_to_necklace(group: GroupSpec, vec) -> str:
    """Canonical two-color necklace of a zero-sum multiset."""
    vec = check_vector(group, vec)
    n = group.order
    m = sum(vec)
    if gcd(n, m) != 1:
        raise ValueError(f"mass {m} is not coprime to group order {n}")
    if not is_zero_sum(group, vec):
        raise ValueError("sequence does not sum to the identity")
    return canonical_rotation("".join("R" + "B" * x for x in vec))


def necklace_to_sequence(group: GroupSpec, word: str) -> tuple[int, ...]:
    """Zero-sum multiset encoded by a two-color necklace.

    The blue gaps are read from an arbitrary red bead; the unique zero-sum
    rotation of the gap vector makes the result independent of that choice.
    """
    if not set(word) <= {"R", "B"}:
        raise ValueError(f"expected a two-color R/B word, got {word!r}")
    n = word.count("R")
    m = word.count("B")
    if n != group.order:
        raise ValueError(f"{n} red beads do not match group order {group.order}")
    if gcd(n, m) != 1:
        raise ValueError(f"bead counts ({n}, {m}) are not coprime")
    _, vec = zero_sum_shift(group, _gaps_after(word, "R"))
    return vec


def reciprocity_bijection(group: GroupSpec, other: GroupSpec, vec) -> tuple[int, ...]:
    """Map a zero-sum multiset over `group` of size |other| to one over
    `other` of size |group| by re-reading its necklace with colors swapped.
    """
    n, m = group.order, other.order
    if gcd(n, m) != 1:
        raise ValueError(f"group orders ({n}, {m}) are not coprime")
    vec = check_vector(group, vec)
    if sum(vec) != m:
        raise ValueError(f"mass {sum(vec)} must equal the other group's order {m}")
    if not is_zero_sum(group, vec):
        raise ValueError("sequence does not sum to the identity")
    word = "".join("R" + "B" * x for x in vec)
    _, out = zero_sum_shift(other, _gaps_after(word, "B"))
    return out


def complement_bijection(group: GroupSpec, bits) -> tuple[tuple[int, ...], int]:
    """Map a zero-sum k-subset to a zero-sum (n-k)-subset for gcd(k, n) = 1.

    Complements the indicator and rotates to the unique zero-sum position.
    Applying the map twice returns the original subset.
    """
    bits = check_indicator(group, bits)
    n = group.order
    k = sum(bits)
    if gcd(k, n) != 1:
        raise ValueError(f"subset size {k} is not coprime to group order {n}")
    if not is_zero_sum(group, bits):
        raise ValueError("subset does not sum to the identity")
    comp = tuple(1 - b for b in bits)
    shift, out = zero_sum_shift(group, comp)
    return out, shift


def translate_complement_bijection(group: GroupSpec, bits) -> tuple[tuple[int, ...], int]:
    """Map a zero-sum k-subset to the zero-sum (n-k)-subset x + complement.

    When the sum of all group elements is zero the plain complement already
    works and x = 0.  Otherwise that sum is the unique element e of order 2;
    any x with k*x = e makes the translated complement zero-sum, and the
    smallest such label is used.  Returns (indicator, x).
    """
    bits = check_indicator(group, bits)
    n = group.order
    k = sum(bits)
    if not 1 <= k <= n - 1:
        raise ValueError(f"subset size {k} must be in [1, {n - 1}]")
    if not is_zero_sum(group, bits):
        raise ValueError("subset does not sum to the identity")
    comp = tuple(1 - b for b in bits)
    e = sequence_sum(group, [1] * n)
    if e == 0:
        return comp, 0
    xs = [x for x in group.elements() if group.scalar_mul(k, x) == e]
    if not xs:
        raise ValueError(
            f"k*x = e has no solution for k = {k} in group {group}"
        )
    x = min(xs)
    out = translate(group, comp, x)
    assert is_zero_sum(group, out)
    return out, x


# -- three-color pair bijection ---------------------------------------------


def _marker_reads(word: str, gap_color: str, markers: str):
    """(gap vector, marker pattern) at every rotation ending on a marker bead.

    For a rotation ending on a marker, each marker bead owns the run of
    gap-colored beads before it, so the reads are exact with no wrap-around.
    The third color's beads are markers too: only `gap_color` is counted in
    the gaps.
    """
    positions = [i for i, c in enumerate(word) if c in markers]
    reads = []
    for pos in positions:
        rotated = word[pos + 1 :] + word[: pos + 1]
        gaps = []
        pattern = []
        run = 0
        for c in rotated:
            if c == gap_color:
                run += 1
            else:
                gaps.append(run)
                pattern.append(1 if c == "G" else 0)
                run = 0
        reads.append((tuple(gaps), tuple(pattern)))
    return reads


def pair_bijection(
    group: GroupSpec, other: GroupSpec, seq_vec, subset_bits
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Bijection between zero-sum (multiset, subset) pairs over two groups.

    Input: a length-p multiset A and an m-subset B over `group` (order q+m)
    with sum(A) + sum(B) = 0; output: the corresponding length-q multiset and
    m-subset over `other` (order p+m).  Requires gcd(p, q+m) = gcd(q, p+m) = 1.

    The pair is drawn as a necklace with p red, m green and q blue beads: A's
    multiplicities are red runs hanging off the q+m green/blue beads, and B
    marks which of those beads are green.  First A is rotated so its sum is
    the identity, pinning one anchored necklace per pair.  Reading blue runs
    against the p+m red/green beads at the rotation where that gap vector
    sums to the identity recovers the output subset pattern; re-rotating the
    blue gap vector so the whole output pair sums to zero finishes the map.
    Running the same procedure from the other side inverts it.
    """
    seq_vec = check_vector(group, seq_vec)
    subset_bits = check_indicator(group, subset_bits)
    p = sum(seq_vec)
    m = sum(subset_bits)
    q = group.order - m
    if other.order != p + m:
        raise ValueError(
            f"other group's order {other.order} must equal p + m = {p + m}"
        )
    if gcd(p, q + m) != 1 or gcd(q, p + m) != 1:
        raise ValueError(
            f"need gcd(p, q+m) = gcd(q, p+m) = 1, got (p, q, m) = {(p, q, m)}"
        )
    if group.add(sequence_sum(group, seq_vec), sequence_sum(group, subset_bits)) != 0:
        raise ValueError("pair does not sum to the identity")

    _, pinned = zero_sum_shift(group, seq_vec)
    word = "".join(
        "R" * pinned[i] + ("G" if subset_bits[i] else "B")
        for i in range(group.order)
    )
    reads = _marker_reads(word, "B", "RG")
    _, pinned_out = zero_sum_shift(other, reads[0][0])
    matches = [pattern for gaps, pattern in reads if gaps == pinned_out]
    assert len(matches) == 1
    v_bits = matches[0]
    target = other.negate(sequence_sum(other, v_bits))
    _, u_vec = target_sum_shift(other, pinned_out, target)
    return u_vec, v_bits
