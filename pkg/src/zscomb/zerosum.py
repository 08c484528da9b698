"""Multiplicity vectors over a group and their zero-sum structure.

A sequence (unordered, repetition allowed) over a group G of order n is
stored as a multiplicity vector: a length-n tuple whose entry at position l
counts how often the element with label l occurs.  A subset is the special
case with entries in {0, 1} (an indicator vector).

The central tool is label rotation.  Rotating a vector left by l sends the
count at label i+l to label i.  For a vector of total mass w with
gcd(w, n) = 1, the group sum of the n rotations runs through every element
of G exactly once, which is what makes the cycle-lemma bijections work.
"""

from __future__ import annotations

from math import gcd, prod

from .groups import GroupSpec


def check_vector(group: GroupSpec, vec) -> tuple[int, ...]:
    vec = tuple(vec)
    if len(vec) != group.order:
        raise ValueError(
            f"vector length {len(vec)} does not match group order {group.order}"
        )
    if any(x < 0 for x in vec):
        raise ValueError(f"multiplicities must be >= 0, got {vec}")
    return vec


def check_indicator(group: GroupSpec, vec) -> tuple[int, ...]:
    vec = check_vector(group, vec)
    if any(x > 1 for x in vec):
        raise ValueError(f"indicator entries must be 0 or 1, got {vec}")
    return vec


def sequence_sum(group: GroupSpec, vec) -> int:
    """Group sum of the multiset encoded by vec, as an element label."""
    vec = check_vector(group, vec)
    ns = group.invariant_factors
    acc = [0] * group.rank
    for lab, mult in enumerate(vec):
        if mult:
            for i, a_i in enumerate(group.coords(lab)):
                acc[i] = (acc[i] + mult * a_i) % ns[i]
    return group.label(acc)


def is_zero_sum(group: GroupSpec, vec) -> bool:
    return sequence_sum(group, vec) == 0


def digit_totals(group: GroupSpec, vec, axis: int) -> tuple[int, ...]:
    """Total multiplicity per value of the axis-th mixed-radix digit."""
    vec = check_vector(group, vec)
    n_t = group.invariant_factors[axis]
    unit = prod(group.invariant_factors[:axis])
    totals = [0] * n_t
    for lab, mult in enumerate(vec):
        if mult:
            totals[(lab // unit) % n_t] += mult
    return tuple(totals)


def is_zero_sum_by_congruences(group: GroupSpec, vec) -> bool:
    """Zero-sum test through one weighted congruence per invariant factor.

    The multiset sums to the identity iff for every axis t the digit totals
    A_t(k) satisfy sum_k k*A_t(k) = 0 (mod n_t).  This is a deliberately
    separate code path from :func:`sequence_sum`; the test suite checks that
    the two always agree.
    """
    vec = check_vector(group, vec)
    for axis, n_t in enumerate(group.invariant_factors):
        totals = digit_totals(group, vec, axis)
        if sum(k * a for k, a in enumerate(totals)) % n_t:
            return False
    return True


def cyclic_shift(vec, l: int):
    """Rotate a vector left by l positions (entry at index i+l moves to i)."""
    vec = tuple(vec)
    if not vec:
        return vec
    l %= len(vec)
    return vec[l:] + vec[:l]


def translate(group: GroupSpec, vec, g: int):
    """Multiplicity vector of the translated multiset g + A.

    This is group translation, not label rotation: the count at label(h)
    moves to label(h + g).
    """
    vec = check_vector(group, vec)
    out = [0] * group.order
    for lab, mult in enumerate(vec):
        if mult:
            out[group.add(lab, g)] = mult
    return tuple(out)


def weighted_label_sum(vec) -> int:
    """sum_i i * vec[i]; the stage-0 invariant of the staged shift."""
    return sum(i * x for i, x in enumerate(vec))


def zero_sum_shift(group: GroupSpec, vec) -> tuple[int, tuple[int, ...]]:
    """The unique left rotation of vec whose multiset sums to the identity.

    Requires gcd(mass, |G|) = 1.  Runs the staged construction: stage 0
    rotates by the unique l in [0, n) with sum_i i*x_i = l*mass (mod n),
    which settles the first congruence; stage t (t = 2..r) then rotates by a
    multiple of n_1*...*n_{t-1}, fixing the mod-n_t congruence without
    disturbing the earlier ones.  Returns (total shift, rotated vector).
    """
    vec = check_vector(group, vec)
    n = group.order
    mass = sum(vec)
    if gcd(mass, n) != 1:
        raise ValueError(f"mass {mass} is not coprime to group order {n}")
    alpha = weighted_label_sum(vec) % n
    shift = alpha * pow(mass, -1, n) % n
    out = cyclic_shift(vec, shift)
    ns = group.invariant_factors
    for axis in range(1, group.rank):
        n_t = ns[axis]
        totals = digit_totals(group, out, axis)
        alpha_t = sum(k * a for k, a in enumerate(totals)) % n_t
        l_t = alpha_t * pow(mass, -1, n_t) % n_t
        delta = l_t * prod(ns[:axis])
        out = cyclic_shift(out, delta)
        shift = (shift + delta) % n
    assert is_zero_sum_by_congruences(group, out)
    return shift, out


def target_sum_shift(group: GroupSpec, vec, target: int) -> tuple[int, tuple[int, ...]]:
    """The unique left rotation of vec whose multiset sums to target.

    Same staged idea as :func:`zero_sum_shift` but driven one mixed-radix
    digit at a time: rotating by a multiple of n_1*...*n_{t-1} moves the t-th
    coordinate of the sum by -mass per unit while leaving coordinates below t
    unchanged.
    """
    vec = check_vector(group, vec)
    n = group.order
    mass = sum(vec)
    if gcd(mass, n) != 1:
        raise ValueError(f"mass {mass} is not coprime to group order {n}")
    goal = group.coords(target)
    ns = group.invariant_factors
    out = vec
    shift = 0
    for axis, n_t in enumerate(ns):
        totals = digit_totals(group, out, axis)
        alpha_t = sum(k * a for k, a in enumerate(totals)) % n_t
        l_t = (alpha_t - goal[axis]) * pow(mass, -1, n_t) % n_t
        delta = l_t * prod(ns[:axis])
        out = cyclic_shift(out, delta)
        shift = (shift + delta) % n
    assert sequence_sum(group, out) == target
    return shift, out


def rotations_with_sum(group: GroupSpec, vec, target: int) -> list[int]:
    """All shifts l whose rotation sums to target; brute scan for cross-checks."""
    vec = check_vector(group, vec)
    return [
        l
        for l in range(group.order)
        if sequence_sum(group, cyclic_shift(vec, l)) == target
    ]
