"""Closed-form counts of subsets, sequences and pairs with a prescribed sum.

All formulas are divisor sums weighted by integer character sums, divided
exactly by a group order; :func:`exact_div` turns any non-exact division
into a loud error because each value is a cardinality.
"""

from __future__ import annotations

from math import comb, gcd

from .errors import ExactDivisionError
from .groups import GroupSpec, character_sum, count_elements_of_order, divisors
from .zerosum import sequence_sum


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ExactDivisionError(f"{num} is not divisible by {den}")
    return q


def multinomial(n: int, *parts: int) -> int:
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise ValueError(f"bad multinomial arguments {n}; {parts}")
    out = 1
    rest = n
    for p in parts:
        out *= comb(rest, p)
        rest -= p
    return out


def count_subsets(group: GroupSpec, k: int, target: int = 0) -> int:
    """Number of k-element subsets of the group whose elements sum to target.

    For 1 <= k <= n-1 this is
        (1/n) * sum over d | gcd(n, k) of
            character_sum(target, d) * (-1)^(k + k/d) * C(n/d, k/d).
    The boundary sizes k = 0 and k = n are evaluated directly: the empty
    subset sums to 0 and the full subset sums to the sum of all elements.
    """
    n = group.order
    if not 0 <= k <= n:
        raise ValueError(f"subset size {k} out of range for order {n}")
    if k == 0:
        return 1 if target == 0 else 0
    if k == n:
        return 1 if sequence_sum(group, [1] * n) == target else 0
    total = 0
    for d in divisors(gcd(n, k)):
        chi = character_sum(group, target, d)
        if chi:
            sign = -1 if (k + k // d) % 2 else 1
            total += chi * sign * comb(n // d, k // d)
    return exact_div(total, n)


def count_sequences(group: GroupSpec, m: int, target: int = 0) -> int:
    """Number of length-m multisets over the group summing to target.

    Equals (1/(n+m)) * sum over d | gcd(n, m) of
        character_sum(target, d) * C(n/d + m/d, n/d).
    """
    n = group.order
    if m < 0:
        raise ValueError(f"length must be >= 0, got {m}")
    total = 0
    for d in divisors(gcd(n, m)):
        chi = character_sum(group, target, d)
        if chi:
            total += chi * comb(n // d + m // d, n // d)
    return exact_div(total, n + m)


def rational_catalan(a: int, b: int) -> int:
    """C(a+b, a) / (a+b) for coprime a, b >= 1."""
    if a < 1 or b < 1:
        raise ValueError(f"need a, b >= 1, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) are not coprime")
    return exact_div(comb(a + b, a), a + b)


def pair_dimension(p: int, q: int, m: int, group: GroupSpec) -> int:
    """Number of pairs (length-p multiset A, m-subset B) over the group with
    sum(A) + sum(B) = 0, for a group of order q + m.

    Equals (1/(p+q+m)) * sum over d | gcd(p, q, m) of
        (-1)^(m + m/d) * count_elements_of_order(d)
        * multinomial((p+q+m)/d; p/d, q/d, m/d),
    which reduces to multinomial(p+q+m; p,q,m)/(p+q+m) when gcd(p,q,m) = 1.
    """
    if min(p, q, m) < 0 or p + q + m < 1:
        raise ValueError(f"need p, q, m >= 0 and p+q+m >= 1, got {(p, q, m)}")
    if group.order != q + m:
        raise ValueError(f"group order {group.order} must equal q + m = {q + m}")
    total = 0
    for d in divisors(gcd(p, q, m)):
        phi = count_elements_of_order(group, d)
        if phi:
            sign = -1 if (m + m // d) % 2 else 1
            s = (p + q + m) // d
            total += sign * phi * multinomial(s, p // d, q // d, m // d)
    return exact_div(total, p + q + m)


def count_pairs_coefficient(group: GroupSpec, target: int, p: int, k: int) -> int:
    """Number of pairs (length-p multiset A, k-subset B) with sum = target.

    Equals (1/n) * sum over d | gcd(n, p, k) of
        character_sum(target, d) * (-1)^(k + k/d)
        * C(n/d + p/d - 1, p/d) * C(n/d, k/d),
    and is 0 for k > n.
    """
    n = group.order
    if p < 0 or k < 0:
        raise ValueError(f"need p, k >= 0, got ({p}, {k})")
    if k > n:
        return 0
    total = 0
    for d in divisors(gcd(n, gcd(p, k))):
        chi = character_sum(group, target, d)
        if chi:
            sign = -1 if (k + k // d) % 2 else 1
            nd, pd, kd = n // d, p // d, k // d
            total += chi * sign * comb(nd + pd - 1, pd) * comb(nd, kd)
    return exact_div(total, n)
