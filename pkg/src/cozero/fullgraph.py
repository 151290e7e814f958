"""Vertex-level cozero-divisor graph of the integers mod n.

This is the brute-force side of every spectral check. Adjacency is filled
from the divisor criterion (mutual non-divisibility of gcd classes); in
verification mode every pair is re-checked against the ring definition,
and for small n the ideal memberships can be enumerated outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import EmptyGraphError, VertexCapError
from .numbers import factorize, is_prime, totient

DEFAULT_VERTEX_CAP = 20_000

# qualitative palette cycled per divisor class in DOT output
_PALETTE = (
    "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3", "#a6d854",
    "#ffd92f", "#e5c494", "#b3b3b3", "#1f78b4", "#33a02c",
)


def _check_vertex(x: int, n: int) -> None:
    if not 0 < x < n:
        raise ValueError(f"{x} is not a canonical non-zero element of Z_{n}")
    if gcd(x, n) == 1:
        raise ValueError(f"{x} is a unit of Z_{n}")


def is_adjacent_by_definition(x: int, y: int, n: int) -> bool:
    """Ring definition: adjacent iff x lies outside the ideal of y and vice versa.

    Membership of x in the ideal of y reduces to divisibility of x by
    gcd(y, n), because y and gcd(y, n) generate the same ideal of Z_n.
    """
    _check_vertex(x, n)
    _check_vertex(y, n)
    return x % gcd(y, n) != 0 and y % gcd(x, n) != 0


def ideal_of(y: int, n: int) -> frozenset[int]:
    """The principal ideal {r*y mod n}, literally enumerated."""
    return frozenset(r * y % n for r in range(n))


def is_adjacent_exhaustive(x: int, y: int, n: int) -> bool:
    """Ring definition with enumerated ideals. O(n) per call; verification only."""
    _check_vertex(x, n)
    _check_vertex(y, n)
    return x not in ideal_of(y, n) and y not in ideal_of(x, n)


def is_adjacent_by_divisor(x: int, y: int, n: int) -> bool:
    """Class criterion: adjacent iff the gcd classes do not divide one another."""
    _check_vertex(x, n)
    _check_vertex(y, n)
    k1 = gcd(x, n)
    k2 = gcd(y, n)
    return k1 % k2 != 0 and k2 % k1 != 0


@dataclass(frozen=True)
class FullGraph:
    """Explicit graph on the non-zero non-unit residues of Z_n.

    vertices are ascending; classes[i] == gcd(vertices[i], n). The
    adjacency matrix is boolean, symmetric, hollow, and read-only, so
    built graphs are safe to share across threads.
    """

    n: int
    vertices: tuple[int, ...]
    classes: tuple[int, ...]
    adjacency: np.ndarray

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    @property
    def is_null(self) -> bool:
        """Edgeless but non-empty (n a prime power)."""
        return self.vertex_count > 0 and self.edge_count == 0

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1, dtype=np.int64)


def build_full_graph(
    n: int, cap: int = DEFAULT_VERTEX_CAP, verify: bool = False
) -> FullGraph:
    """Build the graph for composite n.

    Prime n raises EmptyGraphError (no vertices at all, distinct from the
    edgeless null graphs of prime powers). The cap bounds memory: a graph
    on m vertices stores an m x m boolean matrix.
    """
    if n < 2:
        raise ValueError(f"build_full_graph requires n >= 2, got {n}")
    if is_prime(n):
        raise EmptyGraphError(n)
    m = n - totient(n) - 1
    if m > cap:
        raise VertexCapError(n, m, cap)

    vertices = np.array([x for x in range(1, n) if gcd(x, n) > 1], dtype=np.int64)
    assert len(vertices) == m
    g = np.gcd(vertices, n)
    # the divisor criterion evaluated on every pair at once
    adjacency = (g[:, None] % g[None, :] != 0) & (g[None, :] % g[:, None] != 0)

    if verify:
        for i in range(m):
            for j in range(i + 1, m):
                by_def = is_adjacent_by_definition(int(vertices[i]), int(vertices[j]), n)
                if by_def != bool(adjacency[i, j]):
                    raise AssertionError(
                        f"adjacency mismatch at n={n}, pair "
                        f"({vertices[i]}, {vertices[j]}): definition gives {by_def}"
                    )

    adjacency.setflags(write=False)
    return FullGraph(n, tuple(int(v) for v in vertices), tuple(int(c) for c in g), adjacency)


def laplacian_matrix(graph: FullGraph) -> np.ndarray:
    """Degree matrix minus adjacency matrix, as float64."""
    a = graph.adjacency.astype(np.float64)
    return np.diag(graph.degrees().astype(np.float64)) - a


def connected_component_count(graph: FullGraph) -> int:
    m = graph.vertex_count
    if m == 0:
        return 0
    seen = np.zeros(m, dtype=bool)
    count = 0
    for start in range(m):
        if seen[start]:
            continue
        count += 1
        frontier = np.zeros(m, dtype=bool)
        frontier[start] = True
        seen[start] = True
        while frontier.any():
            reached = graph.adjacency[frontier].any(axis=0) & ~seen
            seen |= reached
            frontier = reached
    return count


def is_connected_full(graph: FullGraph) -> bool:
    """BFS reachability; a single vertex counts as connected, no vertices do not."""
    if graph.vertex_count == 0:
        return False
    return connected_component_count(graph) == 1


def full_graph_connected_predicate(n: int) -> bool | None:
    """Closed-form connectivity without building the graph.

    None for prime n (empty graph). Otherwise the graph is connected
    unless n is a prime power, with n = 4 as the single-vertex boundary
    case that still counts as connected.
    """
    if n < 2:
        raise ValueError(f"predicate requires n >= 2, got {n}")
    f = factorize(n)
    if f.is_prime:
        return None
    if not f.is_prime_power:
        return True
    return n == 4


def to_dot(graph: FullGraph) -> str:
    """DOT rendering: vertex label is the ring element, fill color marks the class."""
    class_order = sorted(set(graph.classes))
    color_of = {
        c: _PALETTE[i % len(_PALETTE)] for i, c in enumerate(class_order)
    }
    lines = [f"graph cozero_divisor_{graph.n} {{", "  node [style=filled];"]
    for v, c in zip(graph.vertices, graph.classes):
        lines.append(
            f'  v{v} [label="{v}", fillcolor="{color_of[c]}", tooltip="class {c}"];'
        )
    m = graph.vertex_count
    for i in range(m):
        for j in range(i + 1, m):
            if graph.adjacency[i, j]:
                lines.append(f"  v{graph.vertices[i]} -- v{graph.vertices[j]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
