"""Isomorph-free generation of small graphs by canonical augmentation.

Every graph on m+1 vertices is produced from one graph on m vertices by adding
a vertex joined to some subset of the existing ones. A child is kept only when
the added vertex lies in the automorphism orbit of the vertex its canonical
labeling places last, so every isomorphism class has exactly one parent and no
global table of seen graphs is needed. Children of one parent are deduplicated
by canonical form and visited in key order.

With a broom filter, children containing the broom are dropped together with
their subtrees. This is sound because deleting a vertex never creates a broom,
so the canonical parent of a broom-free graph is broom-free too.
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Iterator
from dataclasses import dataclass

from .canonical import CanonicalForm, CanonicalLabeling, canonical_labeling, same_orbit
from .config import Settings, resolve_settings
from .detect import contains_broom
from .errors import InvalidParameterError, SizeLimitError
from .families import BroomSpec
from .graph import Graph
from .parallel import map_in_pool

_LOGGER = logging.getLogger(__name__)

ROOT = Graph.empty(1)


@dataclass(frozen=True, slots=True)
class Augmentation:
    """One accepted child of an augmentation step.

    Attributes:
        graph: The child in canonical labeling.
        attachment: Parent vertices (parent labels) joined to the new vertex.
        form: Canonical form of the child.
    """

    graph: Graph
    attachment: int
    form: CanonicalForm


def _is_canonical_augmentation(
    child: Graph, labeling: CanonicalLabeling, settings: Settings | None
) -> bool:
    """Return whether the new vertex is equivalent to the canonical last vertex."""
    return same_orbit(child, child.n - 1, labeling.order[-1], settings)


def augment(
    parent: Graph, spec: BroomSpec | None = None, settings: Settings | None = None
) -> list[Augmentation]:
    """Return the accepted children of a node, sorted by canonical key.

    Args:
        parent: A node of the augmentation tree (canonically labeled).
        spec: Optional broom; children containing it are dropped.
        settings: Optional settings holding the canonicalization cap.

    Returns:
        One child per isomorphism class whose canonical parent is this node.
    """
    accepted: dict[bytes, Augmentation] = {}
    for attachment in range(1 << parent.n):
        child = parent.with_vertex(attachment)
        if spec is not None and contains_broom(child, spec):
            continue
        labeling = canonical_labeling(child, settings=settings)
        key = labeling.form.key
        if key in accepted or not _is_canonical_augmentation(child, labeling, settings):
            continue
        accepted[key] = Augmentation(
            graph=child.relabel(labeling.order),
            attachment=attachment,
            form=labeling.form,
        )
    _LOGGER.debug("Node %s has %d children", parent, len(accepted))
    return [accepted[key] for key in sorted(accepted)]


def walk(
    node: Graph,
    n: int,
    spec: BroomSpec | None = None,
    settings: Settings | None = None,
) -> Iterator[Graph]:
    """Yield the n-vertex descendants of a node depth-first, in key order."""
    if node.n == n:
        yield node
        return
    for child in augment(node, spec, settings):
        yield from walk(child.graph, n, spec, settings)


def _check_order(n: int, settings: Settings) -> None:
    if n < 2:
        raise InvalidParameterError(f"Enumeration needs n >= 2, got {n}")
    if n > settings.enumeration_cap:
        raise SizeLimitError(
            f"Enumeration is limited to n <= {settings.enumeration_cap}, got {n}"
        )


def frontier(
    n: int,
    spec: BroomSpec | None = None,
    level: int | None = None,
    settings: Settings | None = None,
) -> list[Graph]:
    """Return the tree nodes on `level` vertices, the roots of independent subtrees."""
    settings = resolve_settings(settings)
    depth = min(level if level is not None else settings.split_level, n)
    return list(walk(ROOT, depth, spec, settings))


def _subtree_graphs(
    node: Graph,
    n: int,
    spec: BroomSpec | None,
    connected_only: bool,
    settings: Settings,
) -> list[Graph]:
    """Collect the n-vertex descendants of one node (runs in a worker)."""
    return [
        graph
        for graph in walk(node, n, spec, settings)
        if not connected_only or graph.is_connected()
    ]


def enumerate_graphs(
    n: int,
    spec: BroomSpec | None = None,
    connected_only: bool = False,
    settings: Settings | None = None,
) -> Iterator[Graph]:
    """Yield one graph per isomorphism class on n vertices.

    Args:
        n: Number of vertices.
        spec: Optional broom; only graphs free of it are produced.
        connected_only: Skip disconnected graphs.
        settings: Optional settings (enumeration cap, threads, split level).

    Yields:
        Canonically labeled graphs. Sequentially the order is fixed; with
        threads > 1 the set is the same but the order is not guaranteed.

    Raises:
        InvalidParameterError: If n < 2.
        SizeLimitError: If n exceeds the enumeration cap.
    """
    settings = resolve_settings(settings)
    _check_order(n, settings)

    if settings.threads <= 1:
        for graph in walk(ROOT, n, spec, settings):
            if not connected_only or graph.is_connected():
                yield graph
        return

    roots = frontier(n, spec, settings.split_level, settings)
    worker = functools.partial(
        _subtree_graphs,
        n=n,
        spec=spec,
        connected_only=connected_only,
        settings=settings,
    )
    for graphs in map_in_pool(worker, roots, settings.threads):
        yield from graphs


def enumerate_count(
    n: int,
    spec: BroomSpec | None = None,
    connected_only: bool = False,
    settings: Settings | None = None,
) -> int:
    """Return the number of graphs :func:`enumerate_graphs` yields."""
    return sum(1 for _ in enumerate_graphs(n, spec, connected_only, settings))
