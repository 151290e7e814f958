"""Exact integer arithmetic underpinning the graph construction.

Factorization is deterministic trial division: inputs stay desk-scale
(n up to ~10**6 in full-graph mode), so nothing fancier is warranted.
All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt


@dataclass(frozen=True)
class Factorization:
    """n = p1^e1 * ... * pk^ek with primes strictly ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    @property
    def is_prime_power(self) -> bool:
        return len(self.factors) == 1


def factorize(n: int) -> Factorization:
    """Prime-power decomposition by trial division up to sqrt(n)."""
    if n < 2:
        raise ValueError(f"factorize requires n >= 2, got {n}")
    factors: list[tuple[int, int]] = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
        p = 3 if p == 2 else p + 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for p in range(3, isqrt(n) + 1, 2):
        if n % p == 0:
            return False
    return True


def totient(n: int) -> int:
    """Count of integers in [1, n] coprime to n, by the product formula."""
    if n < 1:
        raise ValueError(f"totient requires n >= 1, got {n}")
    if n == 1:
        return 1
    result = n
    for p, _ in factorize(n).factors:
        result = result // p * (p - 1)
    return result


def totient_prime_power(p: int, e: int) -> int:
    """phi(p^e) for prime p and e >= 0."""
    if e == 0:
        return 1
    return p ** (e - 1) * (p - 1)


def all_divisors(n: int) -> list[int]:
    """Every divisor of n including 1 and n, ascending."""
    if n < 1:
        raise ValueError(f"all_divisors requires n >= 1, got {n}")
    if n == 1:
        return [1]
    divs = [1]
    for p, e in factorize(n).factors:
        power = 1
        grown = list(divs)
        for _ in range(e):
            power *= p
            grown.extend(d * power for d in divs)
        divs = grown
    return sorted(divs)


def proper_divisors(n: int) -> list[int]:
    """Divisors d with 1 < d < n, ascending; empty when n is prime."""
    if n < 2:
        raise ValueError(f"proper_divisors requires n >= 2, got {n}")
    return [d for d in all_divisors(n) if 1 < d < n]


@dataclass(frozen=True)
class DivisorClass:
    divisor: int
    size: int


@dataclass(frozen=True)
class DivisorClassPartition:
    """Non-zero non-unit residues of Z_n grouped by gcd with n.

    The class of a proper divisor d holds the phi(n/d) residues x with
    gcd(x, n) == d. Prime n has no proper divisors and the partition is
    empty (is_empty marks that explicitly).
    """

    n: int
    classes: tuple[DivisorClass, ...]

    @property
    def is_empty(self) -> bool:
        return not self.classes

    @property
    def divisors(self) -> tuple[int, ...]:
        return tuple(c.divisor for c in self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    @property
    def total_size(self) -> int:
        return sum(c.size for c in self.classes)


def gcd_class_count(n: int, d: int) -> int:
    """|{x in [1, n-1] : gcd(x, n) == d}| by direct scan (verification oracle)."""
    return sum(1 for x in range(1, n) if gcd(x, n) == d)


def divisor_class_partition(n: int, verify: bool = False) -> DivisorClassPartition:
    """All divisor classes with their sizes, divisors ascending.

    verify recounts every class size by direct gcd scan and checks the
    total against n - phi(n) - 1.
    """
    if n < 2:
        raise ValueError(f"divisor_class_partition requires n >= 2, got {n}")
    classes = tuple(
        DivisorClass(d, totient(n // d)) for d in proper_divisors(n)
    )
    partition = DivisorClassPartition(n, classes)
    if verify:
        for c in classes:
            direct = gcd_class_count(n, c.divisor)
            if direct != c.size:
                raise AssertionError(
                    f"class size mismatch at n={n}, d={c.divisor}: "
                    f"phi gives {c.size}, direct count gives {direct}"
                )
        expected = n - totient(n) - 1
        if partition.total_size != expected:
            raise AssertionError(
                f"class sizes sum to {partition.total_size}, expected {expected}"
            )
    return partition
