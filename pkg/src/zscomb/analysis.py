"""Decision procedures for count symmetries, with exhaustive verifiers.

Each predicate here states a structural condition on a group (its invariant
factors n_1 | ... | n_r) that is claimed to be equivalent to an equality of
zero-sum counts.  The verify_* functions sweep every abelian group up to a
given order, compare predicate against computed counts, and return a JSON-
ready report: {"theorem": ..., "scanned": N, "failures": [...], "rows": [...]}.
A failure entry means the claimed equivalence broke; verifiers never raise
on mathematical grounds.

Counts inside reports are decimal strings so arbitrary-precision values
survive any JSON consumer.
"""

from __future__ import annotations

from itertools import chain, product
from math import comb, gcd

from .brute import enum_sequences
from .counting import count_sequences, count_subsets, rational_catalan
from .groups import GroupSpec, factorize, is_prime, normalize_group

# Enumeration is only consulted when the candidate space is this small.
ORACLE_BUDGET = 200_000


def v2(m: int) -> int:
    """2-adic valuation: the largest t with 2^t dividing m; m >= 1."""
    if m < 1:
        raise ValueError(f"v2 needs m >= 1, got {m}")
    return (m & -m).bit_length() - 1


def _partitions(n: int, cap: int | None = None):
    """Partitions of n as non-increasing tuples."""
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def all_abelian_groups(order: int) -> list[GroupSpec]:
    """Every abelian group of the given order, canonically normalized.

    Per prime power p^e in the order, a group is a multiset of cyclic factors
    p^(lambda_i) over a partition lambda of e; structures combine freely
    across primes.  Output sorted by invariant factors.
    """
    per_prime = [
        [tuple(p**part for part in lam) for lam in _partitions(e)]
        for p, e in factorize(order)
    ]
    specs = {
        normalize_group(tuple(chain.from_iterable(combo)))
        for combo in product(*per_prime)
    }
    return sorted(specs, key=lambda g: g.invariant_factors)


def _groups_up_to(max_order: int) -> list[GroupSpec]:
    return [g for o in range(1, max_order + 1) for g in all_abelian_groups(o)]


def _report(theorem: str, rows: list, failures: list) -> dict:
    return {"theorem": theorem, "scanned": len(rows), "failures": failures, "rows": rows}


def subset_reci_predicate(group: GroupSpec, k: int) -> bool:
    """Whether the zero-sum k-subset count equals the (n-k)-subset count.

    True iff the order is odd, or the second-largest invariant factor is
    even, or v2(k) < v2(n_r).  For even-order groups failing the first two
    conditions the counts genuinely differ whenever v2(k) >= v2(n_r).
    """
    n = group.order
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= {n - 1}, got {k}")
    fs = group.invariant_factors
    if n % 2 == 1:
        return True
    if len(fs) >= 2 and fs[-2] % 2 == 0:
        return True
    return v2(k) < v2(fs[-1])


def sum_all_elements_is_zero(group: GroupSpec) -> bool:
    """Whether all group elements sum to the identity.

    Non-involutions cancel in inverse pairs, so the total is the sum of the
    2-torsion subgroup: zero unless the group has exactly one involution,
    i.e. unless exactly one invariant factor is even.  Checked structurally
    and by direct summation.
    """
    fs = group.invariant_factors
    structural = group.order % 2 == 1 or (len(fs) >= 2 and fs[-2] % 2 == 0)
    total = 0
    for g in group.elements():
        total = group.add(total, g)
    assert structural == (total == 0), "structural total-sum rule disagrees"
    return structural


def verify_subset_reciprocity(max_order: int = 16) -> dict:
    """Check the subset-count symmetry predicate against actual counts.

    For every group of order <= max_order and every 1 <= k <= n-1, the
    predicate must match count equality; when it fails, the deviation must
    have the proven direction: k-count < (n-k)-count if v2(k) = v2(n_r),
    and > if v2(k) > v2(n_r).
    """
    rows, failures = [], []
    for group in _groups_up_to(max_order):
        n = group.order
        for k in range(1, n):
            ck = count_subsets(group, k, 0)
            cnk = count_subsets(group, n - k, 0)
            pred = subset_reci_predicate(group, k)
            row = {
                "group": str(group),
                "k": k,
                "count_k": str(ck),
                "count_nk": str(cnk),
                "predicate": pred,
            }
            if pred != (ck == cnk):
                failures.append({**row, "reason": "predicate mismatch"})
            if not pred:
                top = group.invariant_factors[-1]
                want_less = v2(k) == v2(top)
                if (ck < cnk) != want_less:
                    failures.append({**row, "reason": "wrong inequality direction"})
            rows.append(row)
    return _report("subset-reci", rows, failures)


def gcp_predicate(group: GroupSpec, p: int) -> bool:
    """Whether zero-sum counts are reciprocal between the group and C_p.

    True iff the prime p divides none of the invariant factors below the
    top one; then p-multisets over G and |G|-multisets over C_p are
    equinumerous, otherwise G strictly wins.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    below_top = group.invariant_factors[:-1]
    return all(f % p for f in below_top)


def verify_gcp(max_order: int = 16, primes=(2, 3, 5, 7)) -> dict:
    """Check gcp_predicate against counts for all groups up to max_order."""
    rows, failures = [], []
    for group in _groups_up_to(max_order):
        for p in primes:
            left = count_sequences(group, p, 0)
            right = count_sequences(GroupSpec((p,)), group.order, 0)
            pred = gcp_predicate(group, p)
            row = {
                "group": str(group),
                "p": p,
                "left": str(left),
                "right": str(right),
                "predicate": pred,
            }
            if pred != (left == right):
                failures.append({**row, "reason": "predicate mismatch"})
            if not pred and not left > right:
                failures.append({**row, "reason": "expected strict left > right"})
            rows.append(row)
    return _report("gcp", rows, failures)


def cnr_reciprocity_check(n: int, m: int, r: int) -> dict:
    """Reciprocity between r-th power groups: C_n^r with m^r-multisets
    against C_m^r with n^r-multisets.

    Requires gcd(n, m^r) = gcd(n^r, m); both counts are computed by formula,
    re-derived by enumeration when the candidate space is small, and, in the
    coprime case, compared with the rational Catalan number.
    """
    if n < 1 or m < 1 or r < 1:
        raise ValueError(f"need n, m, r >= 1, got {(n, m, r)}")
    if gcd(n, m**r) != gcd(n**r, m):
        raise ValueError(
            f"condition gcd(n, m^r) = gcd(n^r, m) fails: "
            f"gcd({n}, {m}^{r}) = {gcd(n, m**r)} but gcd({n}^{r}, {m}) = {gcd(n**r, m)}"
        )
    sides = (
        (normalize_group((n,) * r), m**r),
        (normalize_group((m,) * r), n**r),
    )
    counts, oracle_checked = [], []
    failures = []
    for group, size in sides:
        count = count_sequences(group, size, 0)
        if comb(group.order + size - 1, size) <= ORACLE_BUDGET:
            oracle = len(enum_sequences(group, size, 0))
            oracle_checked.append(str(group))
            if oracle != count:
                failures.append(
                    {"group": str(group), "size": size,
                     "formula": str(count), "oracle": str(oracle)}
                )
        counts.append(count)
    left, right = counts
    row = {
        "n": n,
        "m": m,
        "r": r,
        "left": str(left),
        "right": str(right),
        "oracle_checked": oracle_checked,
    }
    if left != right:
        failures.append({**row, "reason": "sides differ"})
    if gcd(n**r, m**r) == 1:
        cat = rational_catalan(n**r, m**r)
        row["catalan"] = str(cat)
        if left != cat:
            failures.append({**row, "reason": "coprime case missed Catalan value"})
    return _report("cnr", [row], failures)


def reciprocity_scan(max_order: int = 10) -> dict:
    """Tabulate |M(G,|H|)| vs |M(H,|G|)| over all group pairs.

    Raw data collection: every unordered pair of abelian groups with orders
    <= max_order gets a row.  Coprime-order pairs must agree (those go to
    failures if not); non-coprime rows carry no verdict.
    """
    groups = _groups_up_to(max_order)
    rows, failures = [], []
    for i, g in enumerate(groups):
        for h in groups[i:]:
            left = count_sequences(g, h.order, 0)
            right = count_sequences(h, g.order, 0)
            row = {
                "group": str(g),
                "other": str(h),
                "left": str(left),
                "right": str(right),
                "equal": left == right,
                "coprime_orders": gcd(g.order, h.order) == 1,
            }
            if row["coprime_orders"] and not row["equal"]:
                failures.append({**row, "reason": "coprime pair must agree"})
            rows.append(row)
    return _report("reciprocity-scan", rows, failures)
