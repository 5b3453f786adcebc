"""Small simple graphs with bitset adjacency.

A graph on n ≤ 64 vertices stores one integer per vertex whose set bits are the
neighbors of that vertex, so neighborhood intersections are a single AND.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import IO

import networkx as nx
from networkx.algorithms import isomorphism

from .config import Settings, resolve_settings
from .const import (
    GRAPH6_HEADER,
    GRAPH6_MAX_VERTICES,
    GRAPH6_OFFSET,
    MAX_OBJECTIVE,
    MAX_VERTICES,
)
from .errors import (
    InvalidParameterError,
    MalformedInputError,
    ObjectiveOverflowError,
    SizeLimitError,
)

_LOGGER = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Return the bitset holding the given vertices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1.

    Attributes:
        n: Number of vertices (1 ≤ n ≤ 64).
        adj: Neighborhood bitset of every vertex.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        """Check the vertex count, symmetry and absence of loops."""
        if not 1 <= self.n <= MAX_VERTICES:
            raise InvalidParameterError(
                f"Vertex count must be between 1 and {MAX_VERTICES}, got {self.n}"
            )
        if len(self.adj) != self.n:
            raise InvalidParameterError(
                f"Expected {self.n} adjacency rows, got {len(self.adj)}"
            )
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row < 0:
                raise InvalidParameterError(f"Row {v} names a vertex outside 0..n-1")
            if row >> v & 1:
                raise InvalidParameterError(f"Loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise InvalidParameterError(f"Edge {v}-{u} is not symmetric")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        """Build a graph from rows already known to be valid."""
        graph = object.__new__(cls)
        object.__setattr__(graph, "n", n)
        object.__setattr__(graph, "adj", adj)
        return graph

    @classmethod
    def empty(cls, n: int) -> Graph:
        """Return the edgeless graph on n vertices."""
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge list.

        Args:
            n: Number of vertices.
            edges: Pairs of distinct vertices; repeats are ignored.

        Returns:
            The graph.

        Raises:
            InvalidParameterError: If n is out of range or an edge is invalid.
        """
        if not 1 <= n <= MAX_VERTICES:
            raise InvalidParameterError(
                f"Vertex count must be between 1 and {MAX_VERTICES}, got {n}"
            )
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"Invalid edge ({u}, {v}) for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    def degree(self, v: int) -> int:
        """Return the degree of vertex v."""
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        """Return the degrees indexed by vertex."""
        return tuple(row.bit_count() for row in self.adj)

    @property
    def num_edges(self) -> int:
        """Number of edges."""
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Return the edges as sorted pairs (u, v) with u < v."""
        return [
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        ]

    def neighbors(self, v: int) -> list[int]:
        """Return the neighbors of v in increasing order."""
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        """Return whether u and v are adjacent."""
        return bool(self.adj[u] >> v & 1)

    def with_edge(self, u: int, v: int) -> Graph:
        """Return a copy with the edge uv added."""
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise InvalidParameterError(f"Invalid edge ({u}, {v}) for n={self.n}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> Graph:
        """Return a copy with the edge uv removed."""
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(rows))

    def with_vertex(self, attachment: int) -> Graph:
        """Return a copy with a new vertex n adjacent to the vertices in a mask."""
        if self.n >= MAX_VERTICES:
            raise SizeLimitError(f"Cannot grow beyond {MAX_VERTICES} vertices")
        new = self.n
        rows = [
            row | (1 << new) if attachment >> v & 1 else row
            for v, row in enumerate(self.adj)
        ]
        rows.append(attachment)
        return Graph._trusted(self.n + 1, tuple(rows))

    def relabel(self, order: Sequence[int]) -> Graph:
        """Return the graph whose vertex i is vertex order[i] of this graph."""
        position = [0] * self.n
        for i, v in enumerate(order):
            position[v] = i
        rows = []
        for v in order:
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << position[u]
            rows.append(row)
        return Graph._trusted(self.n, tuple(rows))

    def is_connected(self) -> bool:
        """Return whether every vertex is reachable from vertex 0."""
        reached = frontier = 1
        while frontier:
            grown = 0
            for v in iter_bits(frontier):
                grown |= self.adj[v]
            frontier = grown & ~reached
            reached |= frontier
        return reached == (1 << self.n) - 1

    def to_networkx(self) -> nx.Graph:
        """Return the graph as a networkx graph on nodes 0..n-1."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def __str__(self) -> str:
        """Return the graph6 string."""
        return graph6_encode(self).decode("ascii")


def degree_sequence(graph: Graph) -> tuple[int, ...]:
    """Return the degrees of a graph sorted in descending order."""
    return tuple(sorted(graph.degrees(), reverse=True))


def e_r(graph: Graph, r: int) -> int:
    """Return the sum of the r-th powers of the degrees.

    Args:
        graph: The graph.
        r: Exponent, at least 1.

    Returns:
        The degree-power sum.

    Raises:
        InvalidParameterError: If r < 1.
        ObjectiveOverflowError: If the sum exceeds the signed 64-bit range.
    """
    if r < 1:
        raise InvalidParameterError(f"Exponent r must be at least 1, got {r}")
    total = sum(d**r for d in graph.degrees())
    if total > MAX_OBJECTIVE:
        raise ObjectiveOverflowError(
            f"e_{r} of a {graph.n}-vertex graph exceeds the 64-bit result width; "
            "reduce n or r"
        )
    return total


def count_stars(graph: Graph, r: int) -> int:
    """Return the number of copies of the star with r leaves.

    Args:
        graph: The graph.
        r: Number of leaves, at least 2.

    Returns:
        The sum over vertices of C(degree, r).

    Raises:
        InvalidParameterError: If r < 2.
    """
    if r < 2:
        raise InvalidParameterError(f"Star size r must be at least 2, got {r}")
    return sum(math.comb(d, r) for d in graph.degrees())


def automorphism_count(graph: Graph) -> int:
    """Return the order of the automorphism group."""
    nx_graph = graph.to_networkx()
    matcher = isomorphism.GraphMatcher(nx_graph, nx_graph)
    return sum(1 for _ in matcher.isomorphisms_iter())


def count_subgraph_naive(
    host: Graph, pattern: Graph, settings: Settings | None = None
) -> int:
    """Count the unlabeled copies of a pattern in a host graph.

    Copies are not necessarily induced: the count is the number of injective
    edge-preserving maps divided by the number of automorphisms of the pattern.

    Args:
        host: The graph to search in.
        pattern: The graph to count.
        settings: Optional settings holding the oracle cap.

    Returns:
        The number of copies.

    Raises:
        SizeLimitError: If the host exceeds the oracle cap.
    """
    cap = resolve_settings(settings).oracle_cap
    if host.n > cap:
        raise SizeLimitError(
            f"Naive counting is limited to {cap} host vertices, got {host.n}"
        )
    if pattern.n > host.n:
        return 0

    matcher = isomorphism.GraphMatcher(host.to_networkx(), pattern.to_networkx())
    embeddings = sum(1 for _ in matcher.subgraph_monomorphisms_iter())
    return embeddings // automorphism_count(pattern)


def graph6_encode(graph: Graph) -> bytes:
    """Encode a graph in graph6 format without header or newline.

    Raises:
        SizeLimitError: If the graph has more than 62 vertices.
    """
    n = graph.n
    if n > GRAPH6_MAX_VERTICES:
        raise SizeLimitError(
            f"graph6 encoding supports at most {GRAPH6_MAX_VERTICES} vertices"
        )

    out = bytearray([n + GRAPH6_OFFSET])
    group = 0
    filled = 0
    for j in range(1, n):
        row = graph.adj[j]
        for i in range(j):
            group = group << 1 | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(group + GRAPH6_OFFSET)
                group = 0
                filled = 0
    if filled:
        out.append((group << (6 - filled)) + GRAPH6_OFFSET)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    """Decode one graph6 string.

    Surrounding whitespace and a leading ``>>graph6<<`` header are ignored.

    Raises:
        MalformedInputError: On a bad length byte, a byte outside 63..126, the
            wrong amount of data, or nonzero padding bits.
    """
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as err:
            raise MalformedInputError("graph6 data must be ASCII") from err
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER) :]
    if not data:
        raise MalformedInputError("Empty graph6 string")

    for byte in data:
        if not GRAPH6_OFFSET <= byte <= 126:
            raise MalformedInputError(f"Invalid graph6 byte 0x{byte:02x}")

    n = data[0] - GRAPH6_OFFSET
    if n == 0:
        raise MalformedInputError("graph6 string encodes a graph with no vertices")
    if n > GRAPH6_MAX_VERTICES:
        raise MalformedInputError("Long-form graph6 lengths are not supported")

    bit_count = n * (n - 1) // 2
    expected = -(-bit_count // 6)
    body = data[1:]
    if len(body) != expected:
        raise MalformedInputError(
            f"graph6 data for n={n} needs {expected} bytes, got {len(body)}"
        )

    value = 0
    for byte in body:
        value = value << 6 | (byte - GRAPH6_OFFSET)
    padding = expected * 6 - bit_count
    if value & ((1 << padding) - 1):
        raise MalformedInputError("Nonzero padding bits in graph6 data")
    value >>= padding

    rows = [0] * n
    position = bit_count - 1
    for j in range(1, n):
        for i in range(j):
            if value >> position & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            position -= 1
    return Graph._trusted(n, tuple(rows))


def read_graph6_lines(stream: IO[str] | IO[bytes] | Iterable[str]) -> Iterator[Graph]:
    """Decode one graph per line, skipping blank lines.

    Raises:
        MalformedInputError: Naming the first bad line.
    """
    header_text = GRAPH6_HEADER.decode("ascii")
    for number, line in enumerate(stream, start=1):
        stripped = line.strip()
        if not stripped or stripped in (GRAPH6_HEADER, header_text):
            continue
        try:
            yield graph6_decode(line)
        except MalformedInputError as err:
            raise MalformedInputError(f"Line {number}: {err}") from err
