"""Laplacian spectra of cozero-divisor graphs of Z_n.

The graph on the non-zero non-unit residues of Z_n (adjacency: neither
element's ideal contains the other) decomposes as a join of edgeless
divisor classes over the proper-divisor quotient graph. That reduction
turns the n - phi(n) - 1 Laplacian eigenvalues into an exact integer part
plus the spectrum of a small weighted quotient matrix; everything here
can be cross-checked against a brute-force eigensolve of the explicit
graph. All public functions are pure and thread-safe.
"""

from .errors import ConvergenceError, EmptyGraphError, VertexCapError
from .numbers import (
    DivisorClass,
    DivisorClassPartition,
    Factorization,
    all_divisors,
    divisor_class_partition,
    factorize,
    gcd_class_count,
    is_prime,
    proper_divisors,
    totient,
)
from .fullgraph import (
    DEFAULT_VERTEX_CAP,
    FullGraph,
    build_full_graph,
    connected_component_count,
    full_graph_connected_predicate,
    is_adjacent_by_definition,
    is_adjacent_by_divisor,
    is_adjacent_exhaustive,
    is_connected_full,
    laplacian_matrix,
)
from .quotient import (
    QuotientGraph,
    WeightedLaplacian,
    build_quotient,
    build_weighted_laplacian,
    is_connected_quotient,
    laplacian_in_order,
    quotient_component_count,
    quotient_connected_predicate,
    quotient_connectivity_state,
    weighted_degrees,
)
from .eigen import (
    SpectrumEntry,
    SpectrumMultiset,
    characteristic_polynomial,
    eigenvalues_symmetric,
    merge_spectrum,
    polynomial_roots_real,
    spectrum_from_values,
)
from .spectrum import (
    AssembledSpectrum,
    ClassEigenvalue,
    MultisetComparison,
    OracleReport,
    assemble_spectrum,
    charpoly_p2q,
    closed_form_general,
    closed_form_pq,
    compare_multisets,
    is_laplacian_integral,
    spectrum_report,
    verify_against_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "AssembledSpectrum",
    "ClassEigenvalue",
    "ConvergenceError",
    "DEFAULT_VERTEX_CAP",
    "DivisorClass",
    "DivisorClassPartition",
    "EmptyGraphError",
    "Factorization",
    "FullGraph",
    "MultisetComparison",
    "OracleReport",
    "QuotientGraph",
    "SpectrumEntry",
    "SpectrumMultiset",
    "VertexCapError",
    "WeightedLaplacian",
    "all_divisors",
    "assemble_spectrum",
    "build_full_graph",
    "build_quotient",
    "build_weighted_laplacian",
    "characteristic_polynomial",
    "charpoly_p2q",
    "closed_form_general",
    "closed_form_pq",
    "compare_multisets",
    "connected_component_count",
    "divisor_class_partition",
    "eigenvalues_symmetric",
    "factorize",
    "full_graph_connected_predicate",
    "gcd_class_count",
    "is_adjacent_by_definition",
    "is_adjacent_by_divisor",
    "is_adjacent_exhaustive",
    "is_connected_full",
    "is_connected_quotient",
    "is_laplacian_integral",
    "is_prime",
    "laplacian_in_order",
    "laplacian_matrix",
    "merge_spectrum",
    "polynomial_roots_real",
    "proper_divisors",
    "quotient_component_count",
    "quotient_connected_predicate",
    "quotient_connectivity_state",
    "spectrum_from_values",
    "spectrum_report",
    "totient",
    "verify_against_oracle",
    "weighted_degrees",
]
