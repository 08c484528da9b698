"""Bigraded coefficient tables counting (multiset, subset) pairs by size.

For a group G of order n and a target element g, the table entry at (p, k)
is the number of pairs (length-p multiset, k-subset) over G whose total sum
is g.  These are the coefficients of a rational generating function in two
variables (s tracks multiset size, t tracks subset size):

    (1/n) * sum over d | exponent of
        character_sum(g, d) * ((1 - (-t)^d) / (1 - s^d))^(n/d).

Every table is computed twice, once entry-by-entry from the closed formula
and once by truncated power-series expansion of the sum above, and the two
must agree before a table is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .brute import sequences_by_sum, subsets_by_sum
from .counting import count_pairs_coefficient, exact_div
from .groups import GroupSpec, character_sum, divisors


@dataclass(frozen=True)
class CoeffTable:
    """Rows are multiset sizes 0..max_s, columns subset sizes 0..max_t."""

    group: GroupSpec
    target: int
    coeffs: tuple[tuple[int, ...], ...]

    @property
    def max_s(self) -> int:
        return len(self.coeffs) - 1

    @property
    def max_t(self) -> int:
        return len(self.coeffs[0]) - 1

    def entry(self, p: int, k: int) -> int:
        return self.coeffs[p][k]

    def to_json_dict(self) -> dict:
        return {
            "group": str(self.group),
            "target": self.target,
            "coeffs": [[str(c) for c in row] for row in self.coeffs],
        }


def _series_table(group: GroupSpec, target: int, max_s: int, max_t: int):
    """Table by truncated expansion of the generating function."""
    n = group.order
    acc = [[0] * (max_t + 1) for _ in range(max_s + 1)]
    for d in divisors(group.exponent):
        chi = character_sum(group, target, d)
        if chi == 0:
            continue
        nd = n // d
        # (1 - (-t)^d)^(n/d): the t^(d*j) coefficient is C(n/d, j) times
        # (-1)^j from the binomial and (-1)^(d*j) from (-t)^d, so the sign
        # is (-1)^(j*(d+1)); for even d the terms alternate.
        for j in range(0, min(nd, max_t // d) + 1):
            tcoef = comb(nd, j) if (j * (d + 1)) % 2 == 0 else -comb(nd, j)
            # 1/(1 - s^d)^(n/d) has s^(d*i) coefficient C(n/d + i - 1, i).
            for i in range(0, max_s // d + 1):
                acc[d * i][d * j] += chi * tcoef * comb(nd + i - 1, i)
    return [[exact_div(c, n) for c in row] for row in acc]


def poincare_table(group: GroupSpec, target: int, max_s: int, max_t: int) -> CoeffTable:
    """Coefficient table through degrees (max_s, max_t), doubly computed."""
    if max_s < 0 or max_t < 0:
        raise ValueError(f"bounds must be >= 0, got ({max_s}, {max_t})")
    closed = [
        [count_pairs_coefficient(group, target, p, k) for k in range(max_t + 1)]
        for p in range(max_s + 1)
    ]
    series = _series_table(group, target, max_s, max_t)
    assert closed == series, "closed-form and series tables disagree"
    return CoeffTable(group, target, tuple(tuple(row) for row in closed))


def series_cross_check(
    group: GroupSpec,
    target: int,
    max_s: int,
    max_t: int,
    limit: int | None = None,
) -> dict:
    """Compare a table against brute-force pair counts, entry by entry.

    The oracle side enumerates all multisets and subsets once per size,
    histograms them by group sum, and convolves the histograms.  Returns a
    report dict with any mismatching entries.
    """
    table = poincare_table(group, target, max_s, max_t)
    n = group.order
    seq_hists = [sequences_by_sum(group, p, limit) for p in range(max_s + 1)]
    sub_hists = [subsets_by_sum(group, k, limit) for k in range(min(max_t, n) + 1)]
    failures = []
    for p in range(max_s + 1):
        for k in range(max_t + 1):
            if k <= n:
                oracle = sum(
                    count * sub_hists[k][group.sub(target, s)]
                    for s, count in seq_hists[p].items()
                )
            else:
                oracle = 0
            if oracle != table.entry(p, k):
                failures.append(
                    {"p": p, "k": k,
                     "formula": str(table.entry(p, k)), "oracle": str(oracle)}
                )
    row = {
        "group": str(group),
        "target": target,
        "max_s": max_s,
        "max_t": max_t,
        "entries": (max_s + 1) * (max_t + 1),
        "ok": not failures,
    }
    return {
        "theorem": "series",
        "scanned": row["entries"],
        "failures": failures,
        "rows": [row],
    }
