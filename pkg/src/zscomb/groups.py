"""Finite abelian groups in invariant-factor form.

A group is a chain of invariant factors n_1 | n_2 | ... | n_r (each >= 2),
so G = C_{n_1} x ... x C_{n_r}.  The trivial group has an empty chain.
Elements are addressed by integer labels 0..|G|-1 in mixed radix, least
significant factor first:

    label = a_1 + n_1*(a_2 + n_2*(a_3 + ...))      with 0 <= a_i < n_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property
from math import gcd, lcm, prod


@cache
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, e), ...) by trial division."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@cache
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return tuple(sorted(ds))


@cache
def mobius(n: int) -> int:
    """Moebius function: 0 on non-squarefree n, else (-1)^(number of primes)."""
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group with a canonical invariant-factor chain.

    Construct through :func:`normalize_group` (or :meth:`parse`) unless the
    factors are already a divisibility chain with every entry >= 2.
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        fs = self.invariant_factors
        if any(f < 2 for f in fs):
            raise ValueError(f"invariant factors must be >= 2, got {fs}")
        for a, b in zip(fs, fs[1:]):
            if b % a:
                raise ValueError(f"{fs} is not a divisibility chain")

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse a comma-separated factor list; '' and '1' denote the trivial group."""
        text = text.strip()
        if text in ("", "1"):
            return normalize_group(())
        try:
            factors = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"bad group text {text!r}") from None
        return normalize_group(factors)

    def __str__(self) -> str:
        return ",".join(map(str, self.invariant_factors)) or "1"

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @cached_property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        """Largest element order; 1 for the trivial group."""
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def elements(self) -> range:
        return range(self.order)

    # -- label arithmetic ---------------------------------------------------

    def coords(self, label: int) -> tuple[int, ...]:
        """Mixed-radix digits (a_1, ..., a_r) of an element label."""
        if not 0 <= label < self.order:
            raise ValueError(f"label {label} out of range for order {self.order}")
        out = []
        for n_i in self.invariant_factors:
            out.append(label % n_i)
            label //= n_i
        return tuple(out)

    def label(self, coords) -> int:
        """Inverse of :meth:`coords`."""
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        out = 0
        for n_i, a_i in zip(reversed(self.invariant_factors), reversed(coords)):
            if not 0 <= a_i < n_i:
                raise ValueError(f"coordinate {a_i} out of range mod {n_i}")
            out = out * n_i + a_i
        return out

    def add(self, g: int, h: int) -> int:
        return self.label(
            (a + b) % n
            for a, b, n in zip(self.coords(g), self.coords(h), self.invariant_factors)
        )

    def negate(self, g: int) -> int:
        return self.label(
            (-a) % n for a, n in zip(self.coords(g), self.invariant_factors)
        )

    def sub(self, g: int, h: int) -> int:
        return self.add(g, self.negate(h))

    def scalar_mul(self, c: int, g: int) -> int:
        return self.label(
            (c * a) % n for a, n in zip(self.coords(g), self.invariant_factors)
        )

    def element_order(self, g: int) -> int:
        return lcm(
            *(n // gcd(n, a) for a, n in zip(self.coords(g), self.invariant_factors)),
            1,
        )


def normalize_group(factors) -> GroupSpec:
    """Build a GroupSpec from arbitrary cyclic factors.

    Repeatedly replaces a non-dividing pair (a, b) by (gcd, lcm); this keeps
    the product fixed and terminates with the invariant-factor chain.  Factors
    equal to 1 are dropped; the empty list gives the trivial group.
    """
    fs = sorted(f for f in factors if f != 1)
    if any(f < 1 for f in fs):
        raise ValueError(f"factors must be positive, got {tuple(factors)}")
    changed = True
    while changed:
        changed = False
        for i in range(len(fs)):
            for j in range(i + 1, len(fs)):
                if fs[j] % fs[i]:
                    fs[i], fs[j] = gcd(fs[i], fs[j]), lcm(fs[i], fs[j])
                    changed = True
        fs = sorted(f for f in fs if f != 1)
    return GroupSpec(tuple(fs))


def count_elements_of_order(group: GroupSpec, d: int) -> int:
    """Number of elements of order exactly d, by Moebius inversion.

    Elements of order dividing l form a subgroup of size prod_i gcd(n_i, l),
    so the exact count is sum over l | d of mobius(d/l) * prod_i gcd(n_i, l).
    Zero whenever d does not divide the exponent.
    """
    return character_sum(group, 0, d)


def character_sum(group: GroupSpec, g: int, d: int) -> int:
    """Integer value of the sum of all order-d characters evaluated at g.

    The characters of order dividing l that are trivial on g form either the
    full dual l-torsion (when every gcd(n_i, l) divides the i-th coordinate
    of g) or sum to zero; Moebius inversion over l | d isolates exact order d.
    The result is an integer, possibly negative, and 0 when d does not divide
    the group exponent.
    """
    if d < 1:
        raise ValueError(f"order must be >= 1, got {d}")
    coords = group.coords(g)
    ns = group.invariant_factors
    total = 0
    for l in divisors(d):
        mu = mobius(d // l)
        if mu == 0:
            continue
        term = 1
        for a_i, n_i in zip(coords, ns):
            gl = gcd(n_i, l)
            if a_i % gl:
                term = 0
                break
            term *= gl
        total += mu * term
    return total
