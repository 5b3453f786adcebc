"""Exact broom containment.

G contains B(ell, s) exactly when some vertex c starts a path c, x1, ..., x_{ell-2}
on ell-1 vertices while keeping at least s+1 neighbors off that path: one of
them closes the path as its far endpoint and s more hang off c as leaves. The
search is a depth-first walk over simple paths with bitset visited masks.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import InvalidParameterError
from .families import BroomSpec
from .graph import Graph, iter_bits, mask_of

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class BroomEmbedding:
    """A copy of B(ell, s) inside a host graph.

    Attributes:
        path: Host vertices v1, ..., v_ell in path order.
        leaves: Host vertices attached to the center as extra leaves.
    """

    path: tuple[int, ...]
    leaves: tuple[int, ...]

    @property
    def center(self) -> int:
        """The penultimate path vertex carrying the leaves."""
        return self.path[-2]

    def validate(self, graph: Graph, spec: BroomSpec) -> bool:
        """Return whether this is a genuine copy of the broom in the graph."""
        vertices = (*self.path, *self.leaves)
        if len(self.path) != spec.ell or len(self.leaves) != spec.s:
            return False
        if len(set(vertices)) != len(vertices):
            return False
        if any(not 0 <= v < graph.n for v in vertices):
            return False
        if any(not graph.has_edge(a, b) for a, b in zip(self.path, self.path[1:])):
            return False
        return all(graph.has_edge(self.center, leaf) for leaf in self.leaves)

    def as_dict(self) -> dict[str, object]:
        """Return the embedding as plain data."""
        return {
            "path": list(self.path),
            "center": self.center,
            "leaves": list(self.leaves),
        }


def _by_degree(graph: Graph) -> list[int]:
    """Return the vertices ordered by increasing degree."""
    degrees = graph.degrees()
    return sorted(range(graph.n), key=lambda v: (degrees[v], v))


def _long_side(graph: Graph, spec: BroomSpec) -> tuple[int, ...] | None:
    """Find a center and the ell-1 vertex path leaving it with s+1 spare neighbors."""
    if spec.order > graph.n:
        return None

    adj = graph.adj
    order = _by_degree(graph)
    length = spec.ell - 1
    spare = spec.s + 1

    for center in order:
        center_row = adj[center]
        if center_row.bit_count() < spec.s + 2:
            continue

        def extend(last: int, used: int, size: int) -> tuple[int, ...] | None:
            if size == length:
                return ()
            candidates = adj[last] & ~used
            for x in order:
                if not candidates >> x & 1:
                    continue
                now_used = used | 1 << x
                if (center_row & ~now_used).bit_count() < spare:
                    continue
                rest = extend(x, now_used, size + 1)
                if rest is not None:
                    return (x, *rest)
            return None

        tail = extend(center, 1 << center, 1)
        if tail is not None:
            return (center, *tail)
    return None


def find_broom(graph: Graph, spec: BroomSpec) -> BroomEmbedding | None:
    """Return a copy of B(ell, s) in the graph, or None if the graph is broom-free."""
    side = _long_side(graph, spec)
    if side is None:
        return None
    center = side[0]
    spare = list(iter_bits(graph.adj[center] & ~mask_of(side)))
    embedding = BroomEmbedding(
        path=(*reversed(side), spare[0]),
        leaves=tuple(spare[1 : spec.s + 1]),
    )
    _LOGGER.debug("Found %s in %s at %s", spec, graph, embedding)
    return embedding


def contains_broom(graph: Graph, spec: BroomSpec) -> bool:
    """Return whether the graph contains B(ell, s) as a subgraph."""
    return _long_side(graph, spec) is not None


def is_broom_free(graph: Graph, spec: BroomSpec) -> bool:
    """Return whether the graph contains no copy of B(ell, s)."""
    return _long_side(graph, spec) is None


def find_heavy_path(graph: Graph, spec: BroomSpec) -> tuple[int, ...] | None:
    """Find a path on ell-1 vertices starting at a vertex of degree >= ell+s.

    Returns:
        The path, heavy endpoint first, or None.
    """
    adj = graph.adj
    order = _by_degree(graph)
    length = spec.ell - 1
    if length > graph.n:
        return None

    def extend(last: int, used: int, size: int) -> tuple[int, ...] | None:
        if size == length:
            return ()
        candidates = adj[last] & ~used
        for x in order:
            if candidates >> x & 1:
                rest = extend(x, used | 1 << x, size + 1)
                if rest is not None:
                    return (x, *rest)
        return None

    for v in reversed(order):
        if adj[v].bit_count() < spec.order:
            break
        tail = extend(v, 1 << v, 1)
        if tail is not None:
            return (v, *tail)
    return None


def has_heavy_path_endpoint(graph: Graph, spec: BroomSpec) -> bool:
    """Return whether a vertex of degree >= ell+s ends a path on ell-1 vertices."""
    return find_heavy_path(graph, spec) is not None


def broom_from_heavy_path(
    graph: Graph, path: Sequence[int], spec: BroomSpec
) -> BroomEmbedding:
    """Turn a path on ell-1 vertices with a heavy first vertex into a broom.

    The heavy vertex v has at most ell-2 neighbors on the path, so at least s+2
    off it: one extends the path past v and s more become leaves of v.

    Raises:
        InvalidParameterError: If the path is not a simple path on ell-1 vertices
            of the graph starting at a vertex of degree >= ell+s.
    """
    path = tuple(path)
    if len(path) != spec.ell - 1 or len(set(path)) != len(path):
        raise InvalidParameterError(f"Expected a simple path on {spec.ell - 1} vertices")
    if any(not graph.has_edge(a, b) for a, b in zip(path, path[1:])):
        raise InvalidParameterError(f"{path} is not a path of the graph")
    heavy = path[0]
    if graph.degree(heavy) < spec.order:
        raise InvalidParameterError(
            f"Vertex {heavy} has degree {graph.degree(heavy)} < {spec.order}"
        )

    spare = list(iter_bits(graph.adj[heavy] & ~mask_of(path)))
    return BroomEmbedding(
        path=(*reversed(path[1:]), heavy, spare[0]),
        leaves=tuple(spare[1 : spec.s + 1]),
    )
