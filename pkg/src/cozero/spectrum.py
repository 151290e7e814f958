"""Laplacian spectrum assembly and closed-form families.

Every divisor class induces an edgeless subgraph, so the join reduction
makes the class of divisor d contribute its weighted degree exactly
(class size - 1) times; those eigenvalues are exact integers and are
kept that way. The remaining d eigenvalues come from the small quotient
Laplacian, solved numerically. verify_against_oracle compares the whole
assembly against a brute-force eigensolve of the explicit vertex-level
Laplacian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import eigen
from .fullgraph import (
    DEFAULT_VERTEX_CAP,
    build_full_graph,
    connected_component_count,
    laplacian_matrix,
)
from .numbers import (
    factorize,
    is_prime,
    totient,
    totient_prime_power,
)
from .quotient import (
    build_quotient,
    build_weighted_laplacian,
    weighted_degrees,
)


@dataclass(frozen=True)
class ClassEigenvalue:
    """One divisor class's contribution: value repeated multiplicity times."""

    value: int
    multiplicity: int
    divisor: int


@dataclass(frozen=True)
class AssembledSpectrum:
    """Full Laplacian spectrum of the cozero-divisor graph of Z_n.

    integer_part has one entry per proper divisor (multiplicity may be 0
    when the class is a singleton); quotient_part holds the d eigenvalues
    of the weighted quotient Laplacian; combined is their multiset union.
    degenerate is "empty" for prime n, "null" for prime powers (edgeless
    graph, all-zero spectrum), None otherwise.
    """

    n: int
    integer_part: tuple[ClassEigenvalue, ...]
    quotient_part: eigen.SpectrumMultiset
    combined: eigen.SpectrumMultiset
    degenerate: str | None = None

    @property
    def vertex_count(self) -> int:
        return self.combined.total_multiplicity

    @property
    def integer_multiplicity_total(self) -> int:
        return sum(e.multiplicity for e in self.integer_part)

    def is_empty(self) -> bool:
        return self.degenerate == "empty"


def _degeneracy(n: int) -> str | None:
    f = factorize(n)
    if f.is_prime:
        return "empty"
    if f.is_prime_power:
        return "null"
    return None


def _combine(
    integer_part: tuple[ClassEigenvalue, ...],
    quotient_part: eigen.SpectrumMultiset,
    merge_tol: float,
) -> eigen.SpectrumMultiset:
    triples = [
        (float(e.value), e.multiplicity, True)
        for e in integer_part
        if e.multiplicity > 0
    ]
    triples.extend(
        (e.value, e.multiplicity, e.exact) for e in quotient_part.entries
    )
    return eigen.merge_spectrum(triples, merge_tol)


def assemble_spectrum(
    n: int,
    tol: float = eigen.DEFAULT_TOL,
    merge_tol: float = eigen.DEFAULT_MERGE_TOL,
) -> AssembledSpectrum:
    """Spectrum via the divisor-class join reduction.

    Prime n yields the empty spectrum (marked degenerate "empty");
    prime powers yield the all-zero spectrum of a null graph ("null").
    """
    if n < 2:
        raise ValueError(f"assemble_spectrum requires n >= 2, got {n}")
    if is_prime(n):
        empty = eigen.SpectrumMultiset(())
        return AssembledSpectrum(n, (), empty, empty, "empty")
    q = build_quotient(n)
    degrees = weighted_degrees(q)
    integer_part = tuple(
        ClassEigenvalue(deg, w - 1, d)
        for deg, w, d in zip(degrees, q.weights, q.divisors)
    )
    wl = build_weighted_laplacian(q)
    quotient_part = eigen.eigenvalues_symmetric(wl.symmetric_form, tol, merge_tol)
    combined = _combine(integer_part, quotient_part, merge_tol)
    expected = n - totient(n) - 1
    if combined.total_multiplicity != expected:
        raise AssertionError(
            f"assembled {combined.total_multiplicity} eigenvalues at n = {n}, "
            f"expected {expected}"
        )
    return AssembledSpectrum(n, integer_part, quotient_part, combined, _degeneracy(n))


# ---------------------------------------------------------------------------
# closed-form families

def _require_distinct_primes(p: int, q: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if p == q:
        raise ValueError(f"primes must be distinct, got {p} twice")


def closed_form_pq(p: int, q: int) -> AssembledSpectrum:
    """Exact spectrum for n = p*q: {0, p+q-2, (p-1)^(q-2), (q-1)^(p-2)}.

    No numerics anywhere; the quotient on two divisors is a single edge
    whose Laplacian has eigenvalues p+q-2 and 0. The result is always
    integral.
    """
    _require_distinct_primes(p, q)
    n = p * q
    lo, hi = min(p, q), max(p, q)
    # divisor lo has weight phi(hi) and weighted degree lo - 1, and vice versa
    integer_part = (
        ClassEigenvalue(lo - 1, hi - 2, lo),
        ClassEigenvalue(hi - 1, lo - 2, hi),
    )
    quotient_part = eigen.SpectrumMultiset(
        (
            eigen.SpectrumEntry(float(p + q - 2), 1, True),
            eigen.SpectrumEntry(0.0, 1, True),
        )
    )
    combined = _combine(integer_part, quotient_part, eigen.DEFAULT_MERGE_TOL)
    return AssembledSpectrum(n, integer_part, quotient_part, combined, None)


def charpoly_p2q(p: int, q: int) -> list[int]:
    """Characteristic polynomial of the 4x4 quotient Laplacian of n = p*p*q.

    Monic quartic with zero constant term, exact integer coefficients;
    must match characteristic_polynomial of the constructed matrix.
    """
    _require_distinct_primes(p, q)
    c3 = (p - 1) * (2 * p + 1) + (p + 1) * (q - 1)
    c2 = (
        p * (p - 1) ** 2 * (p + 1)
        + (p - 1) * (p + 1) ** 2 * (q - 1)
        + p * (q - 1) ** 2
        + (p - 1) ** 2 * (q - 1)
    )
    c1 = p * (p - 1) * (q - 1) * ((p - 1) * (p + 1) + p * (q - 1))
    return [1, -c3, c2, -c1, 0]


def closed_form_general(
    p: int,
    n1: int,
    q: int,
    n2: int,
    tol: float = eigen.DEFAULT_TOL,
    merge_tol: float = eigen.DEFAULT_MERGE_TOL,
) -> AssembledSpectrum:
    """Spectrum for n = p**n1 * q**n2 built from the two-prime divisor grid.

    Divisors are p**a * q**b over the exponent grid; two are adjacent
    exactly when one has more of p and less of q than the other. Weighted
    degrees and class sizes are exact integer sums over the grid, and the
    (n1+1)(n2+1)-2 quotient eigenvalues are solved numerically. The result
    must agree with assemble_spectrum(n) exactly on the integer part.
    """
    _require_distinct_primes(p, q)
    if n1 < 1 or n2 < 1:
        raise ValueError(f"exponents must be >= 1, got {n1}, {n2}")
    grid = [
        (a, b)
        for a in range(n1 + 1)
        for b in range(n2 + 1)
        if (a, b) not in ((0, 0), (n1, n2))
    ]
    grid.sort(key=lambda ab: p ** ab[0] * q ** ab[1])
    divisors = [p ** a * q ** b for a, b in grid]
    weights = [
        totient_prime_power(p, n1 - a) * totient_prime_power(q, n2 - b)
        for a, b in grid
    ]

    def adjacent(u: tuple[int, int], v: tuple[int, int]) -> bool:
        return (u[0] > v[0] and u[1] < v[1]) or (u[0] < v[0] and u[1] > v[1])

    d = len(grid)
    degrees = [
        sum(weights[j] for j in range(d) if adjacent(grid[i], grid[j]))
        for i in range(d)
    ]
    integer_part = tuple(
        ClassEigenvalue(degrees[i], weights[i] - 1, divisors[i]) for i in range(d)
    )
    symmetric = np.zeros((d, d))
    root_w = np.sqrt(np.array(weights, dtype=np.float64))
    for i in range(d):
        symmetric[i, i] = degrees[i]
        for j in range(i + 1, d):
            if adjacent(grid[i], grid[j]):
                symmetric[i, j] = symmetric[j, i] = -root_w[i] * root_w[j]
    quotient_part = eigen.eigenvalues_symmetric(symmetric, tol, merge_tol)
    combined = _combine(integer_part, quotient_part, merge_tol)
    n = p ** n1 * q ** n2
    return AssembledSpectrum(n, integer_part, quotient_part, combined, None)


def is_laplacian_integral(
    spectrum: AssembledSpectrum | eigen.SpectrumMultiset,
    tol: float = eigen.INTEGER_TOL,
) -> bool:
    """True iff every eigenvalue sits within tol of an integer."""
    multiset = spectrum.combined if isinstance(spectrum, AssembledSpectrum) else spectrum
    return all(abs(e.value - round(e.value)) <= tol for e in multiset.entries)


# ---------------------------------------------------------------------------
# multiset comparison and the brute-force oracle

@dataclass(frozen=True)
class MultisetComparison:
    matched: bool
    max_deviation: float
    size_a: int
    size_b: int
    multiplicity_mismatches: tuple[tuple[float, int, int], ...]


def compare_multisets(
    a: eigen.SpectrumMultiset, b: eigen.SpectrumMultiset, tol: float
) -> MultisetComparison:
    """Greedy descending pairing; reports the worst gap, not just a verdict."""
    va, vb = a.values(), b.values()
    if len(va) != len(vb):
        mismatches = _multiplicity_mismatches(a, b, tol)
        return MultisetComparison(False, math.inf, len(va), len(vb), mismatches)
    dev = float(np.max(np.abs(va - vb))) if len(va) else 0.0
    matched = dev <= tol
    mismatches = () if matched else _multiplicity_mismatches(a, b, tol)
    return MultisetComparison(matched, dev, len(va), len(vb), mismatches)


def _multiplicity_mismatches(
    a: eigen.SpectrumMultiset, b: eigen.SpectrumMultiset, tol: float
) -> tuple[tuple[float, int, int], ...]:
    out = []
    i = j = 0
    ea, eb = a.entries, b.entries
    while i < len(ea) or j < len(eb):
        if i < len(ea) and j < len(eb) and abs(ea[i].value - eb[j].value) <= tol:
            if ea[i].multiplicity != eb[j].multiplicity:
                out.append((ea[i].value, ea[i].multiplicity, eb[j].multiplicity))
            i += 1
            j += 1
        elif j >= len(eb) or (i < len(ea) and ea[i].value > eb[j].value):
            out.append((ea[i].value, ea[i].multiplicity, 0))
            i += 1
        else:
            out.append((eb[j].value, 0, eb[j].multiplicity))
            j += 1
    return tuple(out)


@dataclass(frozen=True)
class OracleReport:
    n: int
    vertex_count: int
    matched: bool
    max_deviation: float
    multiplicity_mismatches: tuple[tuple[float, int, int], ...]
    laplacian_integral: bool
    degenerate: str | None
    zero_multiplicity: int
    component_count: int


def verify_against_oracle(
    n: int,
    tol: float = 1e-6,
    merge_tol: float = eigen.DEFAULT_MERGE_TOL,
    cap: int = DEFAULT_VERTEX_CAP,
    solver_tol: float = eigen.DEFAULT_TOL,
) -> OracleReport:
    """Assembled spectrum versus a brute-force eigensolve of the full graph.

    The oracle builds the explicit vertex-level Laplacian and solves it
    with no knowledge of the join structure. Raises VertexCapError when
    the graph would exceed cap. Prime n verifies trivially (both sides
    empty) and is flagged degenerate.
    """
    if n < 2:
        raise ValueError(f"verify_against_oracle requires n >= 2, got {n}")
    if is_prime(n):
        return OracleReport(n, 0, True, 0.0, (), True, "empty", 0, 0)
    graph = build_full_graph(n, cap=cap)
    oracle = eigen.eigenvalues_symmetric(
        laplacian_matrix(graph), solver_tol, merge_tol
    )
    assembled = assemble_spectrum(n, solver_tol, merge_tol)
    comparison = compare_multisets(assembled.combined, oracle, tol)
    return OracleReport(
        n=n,
        vertex_count=graph.vertex_count,
        matched=comparison.matched,
        max_deviation=comparison.max_deviation,
        multiplicity_mismatches=comparison.multiplicity_mismatches,
        laplacian_integral=is_laplacian_integral(assembled, tol),
        degenerate=assembled.degenerate,
        zero_multiplicity=oracle.zero_multiplicity(),
        component_count=connected_component_count(graph),
    )


# ---------------------------------------------------------------------------
# export

def spectrum_report(
    n: int,
    oracle: bool = False,
    tol: float = 1e-6,
    merge_tol: float = eigen.DEFAULT_MERGE_TOL,
    cap: int = DEFAULT_VERTEX_CAP,
) -> dict:
    """JSON-ready result object for one n."""
    assembled = assemble_spectrum(n, merge_tol=merge_tol)
    if assembled.degenerate == "empty":
        classes = []
    else:
        q = build_quotient(n)
        degrees = weighted_degrees(q)
        classes = [
            {"d": d, "size": w, "D": deg}
            for d, w, deg in zip(q.divisors, q.weights, degrees)
        ]
    report = {
        "n": n,
        "vertex_count": assembled.vertex_count,
        "divisor_classes": classes,
        "spectrum": [
            {
                "value": int(e.value) if e.exact else e.value,
                "multiplicity": e.multiplicity,
                "exact": e.exact,
            }
            for e in assembled.combined.entries
        ],
        "laplacian_integral": is_laplacian_integral(assembled, tol),
        "oracle_checked": False,
        "max_deviation": None,
        "degenerate": assembled.degenerate,
    }
    if oracle and assembled.degenerate != "empty":
        check = verify_against_oracle(n, tol=tol, merge_tol=merge_tol, cap=cap)
        report["oracle_checked"] = True
        report["max_deviation"] = check.max_deviation
        report["oracle_matched"] = check.matched
    return report


def spectrum_csv(spectrum: AssembledSpectrum) -> str:
    """Flat CSV of the combined spectrum table."""
    lines = ["value,multiplicity,exact"]
    for e in spectrum.combined.entries:
        value = int(e.value) if e.exact else repr(e.value)
        lines.append(f"{value},{e.multiplicity},{str(e.exact).lower()}")
    return "\n".join(lines) + "\n"
