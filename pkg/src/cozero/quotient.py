"""Proper-divisor quotient graph with totient weights.

Vertices are the proper divisors of n, adjacent under mutual
non-divisibility; vertex d carries weight phi(n/d), the size of its
divisor class. The weighted degree of d sums the weights of its
neighbours and equals the full-graph degree of every vertex in the class
of d (the partition is equitable). Two Laplacian reductions live here:
the integer zero-row-sum form and its symmetric conjugate, which share
one spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .eigen import _charpoly_float, characteristic_polynomial
from .numbers import factorize, is_prime, proper_divisors, totient


@dataclass(frozen=True)
class QuotientGraph:
    n: int
    divisors: tuple[int, ...]
    weights: tuple[int, ...]
    adjacency: np.ndarray

    @property
    def size(self) -> int:
        return len(self.divisors)

    @property
    def is_empty(self) -> bool:
        return self.size == 0

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if self.adjacency[i, j]:
                    out.append((self.divisors[i], self.divisors[j]))
        return out


def build_quotient(n: int) -> QuotientGraph:
    """Quotient graph on the proper divisors, ascending. Empty for prime n."""
    if n < 2:
        raise ValueError(f"build_quotient requires n >= 2, got {n}")
    divs = proper_divisors(n)
    weights = tuple(totient(n // d) for d in divs)
    dv = np.array(divs, dtype=np.int64)
    if len(divs):
        adjacency = (dv[:, None] % dv[None, :] != 0) & (dv[None, :] % dv[:, None] != 0)
    else:
        adjacency = np.zeros((0, 0), dtype=bool)
    adjacency.setflags(write=False)
    return QuotientGraph(n, tuple(divs), weights, adjacency)


def quotient_component_count(q: QuotientGraph) -> int:
    d = q.size
    if d == 0:
        return 0
    seen = np.zeros(d, dtype=bool)
    count = 0
    for start in range(d):
        if seen[start]:
            continue
        count += 1
        frontier = np.zeros(d, dtype=bool)
        frontier[start] = True
        seen[start] = True
        while frontier.any():
            reached = q.adjacency[frontier].any(axis=0) & ~seen
            seen |= reached
            frontier = reached
    return count


def is_connected_quotient(q: QuotientGraph) -> bool:
    """BFS reachability; a single vertex is connected, an empty quotient is not."""
    if q.size == 0:
        return False
    return quotient_component_count(q) == 1


def quotient_connectivity_state(q: QuotientGraph) -> str:
    if q.is_empty:
        return "empty"
    return "connected" if is_connected_quotient(q) else "disconnected"


def quotient_connected_predicate(n: int) -> bool | None:
    """Closed form: None for prime n (empty quotient); otherwise the
    quotient is connected unless n is a prime power p**t with t >= 3,
    whose divisors form a divisibility chain with no edges."""
    if n < 2:
        raise ValueError(f"predicate requires n >= 2, got {n}")
    f = factorize(n)
    if f.is_prime:
        return None
    return not (f.is_prime_power and f.factors[0][1] >= 3)


def weighted_degrees(q: QuotientGraph) -> list[int]:
    """Sum of neighbour weights per divisor; 0 for isolated vertices."""
    return [
        sum(w for w, adj in zip(q.weights, q.adjacency[j]) if adj)
        for j in range(q.size)
    ]


@dataclass(frozen=True)
class WeightedLaplacian:
    """Both Laplacian reductions of a weighted quotient graph.

    entries is the integer zero-row-sum form: diagonal holds the weighted
    degrees, entry (i, j) is -weight(j) on edges. symmetric_form has the
    same diagonal with -sqrt(weight(i) * weight(j)) on edges; it is the
    conjugate of entries by the square-root weight diagonal, so the two
    share one eigenvalue multiset.
    """

    dimension: int
    entries: np.ndarray
    symmetric_form: np.ndarray


def build_weighted_laplacian(q: QuotientGraph, verify: bool = False) -> WeightedLaplacian:
    if q.is_empty:
        raise ValueError(f"n = {q.n} is prime; the quotient has no Laplacian")
    d = q.size
    degrees = weighted_degrees(q)
    w = np.array(q.weights, dtype=np.float64)
    entries = np.zeros((d, d), dtype=np.int64)
    symmetric = np.zeros((d, d), dtype=np.float64)
    for i in range(d):
        entries[i, i] = degrees[i]
        symmetric[i, i] = degrees[i]
    root_w = np.sqrt(w)
    for i in range(d):
        for j in range(d):
            if i != j and q.adjacency[i, j]:
                entries[i, j] = -q.weights[j]
                symmetric[i, j] = -root_w[i] * root_w[j]

    if verify:
        row_sums = entries.sum(axis=1)
        if np.any(row_sums != 0):
            raise AssertionError(f"nonzero row sums at n = {q.n}: {row_sums}")
        # the similarity is explicit: conjugating by diag(sqrt(w)) must
        # reproduce the symmetric form entry for entry
        conj = (root_w[:, None] * entries.astype(np.float64)) / root_w[None, :]
        if float(np.max(np.abs(conj - symmetric))) > 1e-12 * max(1.0, float(np.max(np.abs(symmetric)))):
            raise AssertionError(f"symmetric form is not the conjugate at n = {q.n}")
        if d <= 16:
            exact = np.array(characteristic_polynomial(entries), dtype=np.float64)
            approx = _charpoly_float(symmetric)
            scale = np.maximum(np.abs(exact), 1.0)
            if float(np.max(np.abs(exact - approx) / scale)) > 1e-6:
                raise AssertionError(
                    f"characteristic polynomials of the two forms disagree at n = {q.n}"
                )

    entries.setflags(write=False)
    symmetric.setflags(write=False)
    return WeightedLaplacian(d, entries, symmetric)


def laplacian_in_order(
    q: QuotientGraph, wl: WeightedLaplacian, order: Sequence[int]
) -> np.ndarray:
    """The integer Laplacian permuted to a caller-chosen divisor order.

    Display helper: internal order is always ascending, but worked
    examples often index rows differently.
    """
    if sorted(order) != sorted(q.divisors):
        raise ValueError(f"{order} is not a permutation of the divisors {q.divisors}")
    idx = [q.divisors.index(d) for d in order]
    return wl.entries[np.ix_(idx, idx)].copy()


def to_dot(q: QuotientGraph, degrees: Sequence[int] | None = None) -> str:
    """DOT rendering with weight (and optionally weighted-degree) labels."""
    lines = [f"graph divisor_quotient_{q.n} {{"]
    for i, (d, w) in enumerate(zip(q.divisors, q.weights)):
        label = f"{d}\\nw={w}"
        if degrees is not None:
            label += f" D={degrees[i]}"
        lines.append(f'  d{d} [label="{label}"];')
    for a, b in q.edges():
        lines.append(f"  d{a} -- d{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def laplacian_csv(wl: WeightedLaplacian) -> str:
    """The integer Laplacian as bare CSV rows."""
    return "\n".join(",".join(str(int(x)) for x in row) for row in wl.entries) + "\n"
