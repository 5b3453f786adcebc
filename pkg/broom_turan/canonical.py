"""Canonical labeling of small graphs.

The canonical form of a graph is the graph6 string of its relabeling with the
lexicographically largest column-major upper triangle, taken over all labelings
that respect the degree-refined vertex partition. Equal forms mean isomorphic
graphs and vice versa.

The search fills positions one at a time. The column of a new position is fixed
as soon as its vertex is chosen, so only partial labelings reaching the largest
column survive each step. Twins (vertices whose neighborhoods agree apart from
each other) are interchangeable, so one per twin class is tried, and partial
labelings with identical futures are merged.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .config import Settings, resolve_settings
from .errors import InvalidParameterError, SizeLimitError
from .graph import Graph, graph6_encode, iter_bits

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True, order=True)
class CanonicalForm:
    """Isomorphism-invariant key of a graph.

    Attributes:
        key: graph6 bytes of the canonically labeled graph.
    """

    key: bytes

    def __str__(self) -> str:
        """Return the key as text."""
        return self.key.decode("ascii")


@dataclass(frozen=True, slots=True)
class CanonicalLabeling:
    """Result of a canonical labeling run.

    Attributes:
        form: The canonical form.
        order: order[i] is the vertex placed at canonical position i.
        colors: Refined color of every vertex, in original labels.
    """

    form: CanonicalForm
    order: tuple[int, ...]
    colors: tuple[int, ...]


def _rank(signatures: list) -> list[int]:
    """Replace each signature by its rank among the distinct signatures."""
    index = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
    return [index[sig] for sig in signatures]


def refine_partition(graph: Graph, marked: int | None = None) -> tuple[int, ...]:
    """Return the coarsest equitable coloring refining the degree partition.

    Args:
        graph: The graph.
        marked: Optional vertex given a color of its own, ranked first.

    Returns:
        A color per vertex; colors are ranks and are isomorphism-invariant.
    """
    adj = graph.adj
    colors = _rank(
        [(0 if v == marked else 1, row.bit_count()) for v, row in enumerate(adj)]
    )
    classes = max(colors) + 1
    while True:
        refined = _rank(
            [
                (colors[v], tuple(sorted(colors[u] for u in iter_bits(adj[v]))))
                for v in range(graph.n)
            ]
        )
        refined_classes = max(refined) + 1
        if refined_classes == classes:
            return tuple(colors)
        colors, classes = refined, refined_classes


def _are_twins(adj: tuple[int, ...], a: int, b: int) -> bool:
    """Return whether swapping a and b is an automorphism."""
    return adj[a] & ~(1 << b) == adj[b] & ~(1 << a)


def canonical_labeling(
    graph: Graph, marked: int | None = None, settings: Settings | None = None
) -> CanonicalLabeling:
    """Compute a canonical labeling.

    Args:
        graph: The graph.
        marked: Optional vertex that every labeling must place first.
        settings: Optional settings holding the canonicalization cap.

    Returns:
        The canonical form, the labeling achieving it and the refined colors.

    Raises:
        SizeLimitError: If the graph exceeds the canonicalization cap.
    """
    cap = resolve_settings(settings).canonical_cap
    n = graph.n
    if n > cap:
        raise SizeLimitError(f"Canonical labeling is limited to {cap} vertices, got {n}")
    if marked is not None and not 0 <= marked < n:
        raise InvalidParameterError(f"Marked vertex {marked} is not in the graph")

    adj = graph.adj
    colors = refine_partition(graph, marked)
    members: dict[int, list[int]] = {}
    for v in sorted(range(n), key=lambda v: colors[v]):
        members.setdefault(colors[v], []).append(v)
    cell_at = [color for color in sorted(members) for _ in members[color]]

    states: list[tuple[tuple[int, ...], int]] = [((), 0)]
    for j in range(n):
        cell = members[cell_at[j]]
        best = -1
        survivors: list[tuple[tuple[int, ...], int]] = []
        seen: set[tuple[int, tuple[int, ...]]] = set()
        for placed, used in states:
            tried: list[int] = []
            for c in cell:
                if used >> c & 1 or any(_are_twins(adj, c, t) for t in tried):
                    continue
                tried.append(c)
                row = adj[c]
                column = 0
                for p in placed:
                    column = column << 1 | (row >> p & 1)
                if column < best:
                    continue
                if column > best:
                    best = column
                    survivors = []
                    seen.clear()
                extended = (*placed, c)
                now_used = used | 1 << c
                # The rest of the key depends only on which vertices remain and
                # how each one attaches to the filled positions.
                future = tuple(
                    sum((adj[u] >> p & 1) << i for i, p in enumerate(extended))
                    for u in range(n)
                    if not now_used >> u & 1
                )
                signature = (now_used, future)
                if signature in seen:
                    continue
                seen.add(signature)
                survivors.append((extended, now_used))
        states = survivors

    order = states[0][0]
    form = CanonicalForm(graph6_encode(graph.relabel(order)))
    return CanonicalLabeling(form=form, order=order, colors=colors)


def canonical(graph: Graph, settings: Settings | None = None) -> CanonicalForm:
    """Return the canonical form of a graph.

    Raises:
        SizeLimitError: If the graph exceeds the canonicalization cap.
    """
    return canonical_labeling(graph, settings=settings).form


def canonical_graph(graph: Graph, settings: Settings | None = None) -> Graph:
    """Return the graph relabeled into canonical order."""
    return graph.relabel(canonical_labeling(graph, settings=settings).order)


def same_orbit(
    graph: Graph, u: int, v: int, settings: Settings | None = None
) -> bool:
    """Return whether some automorphism maps u to v."""
    if u == v:
        return True
    colors = refine_partition(graph)
    if colors[u] != colors[v]:
        return False
    return (
        canonical_labeling(graph, marked=u, settings=settings).form
        == canonical_labeling(graph, marked=v, settings=settings).form
    )


def is_isomorphic(first: Graph, second: Graph, settings: Settings | None = None) -> bool:
    """Return whether two graphs are isomorphic."""
    if first.n != second.n or sorted(first.degrees()) != sorted(second.degrees()):
        return False
    return canonical(first, settings) == canonical(second, settings)
