"""Common-neighborhood hypergraphs of a host graph and Berge paths in them.

Every r-set S of host vertices is classified by the size of its common
neighborhood, the set of vertices adjacent to all of S:

    H1: more than k        H3: exactly k
    H2: more than ell+s    H4: fewer than k

A Berge path of length L in H2 would give a broom in the host: consecutive
path vertices share many common neighbors, which are threaded in between to
form a long path starting at a vertex of high degree.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from enum import StrEnum

from .config import Settings, resolve_settings
from .detect import BroomEmbedding, broom_from_heavy_path, contains_broom
from .errors import InvalidParameterError, SizeLimitError
from .families import BroomSpec
from .graph import Graph, iter_bits, mask_of

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class UniformHypergraph:
    """An r-uniform hypergraph on the vertices of a host graph.

    Attributes:
        r: Uniformity.
        n: Number of host vertices.
        edges: Hyperedges as vertex bitsets.
        payload: Common neighborhood in the host of each hyperedge, if known.
    """

    r: int
    n: int
    edges: tuple[int, ...]
    payload: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if any(edge.bit_count() != self.r for edge in self.edges):
            raise InvalidParameterError(f"Every hyperedge must have exactly {self.r} vertices")
        if any(edge >> self.n for edge in self.edges):
            raise InvalidParameterError(f"Hyperedge outside vertices 0..{self.n - 1}")
        if len(set(self.edges)) != len(self.edges):
            raise InvalidParameterError("Hyperedges must be distinct")
        if self.payload is not None and len(self.payload) != len(self.edges):
            raise InvalidParameterError("Payload must have one entry per hyperedge")

    @classmethod
    def from_sets(cls, r: int, n: int, sets: list[tuple[int, ...]]) -> UniformHypergraph:
        """Build a hypergraph from vertex tuples."""
        return cls(r, n, tuple(mask_of(vertices) for vertices in sets))

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True, slots=True)
class NbrhoodClassification:
    """The four common-neighborhood classes of the r-sets of a host graph."""

    spec: BroomSpec
    r: int
    n: int
    h1: UniformHypergraph
    h2: UniformHypergraph
    h3: UniformHypergraph
    h4: UniformHypergraph

    @property
    def k(self) -> int:
        return self.spec.k

    @property
    def sizes(self) -> dict[str, int]:
        return {
            "H1": len(self.h1),
            "H2": len(self.h2),
            "H3": len(self.h3),
            "H4": len(self.h4),
        }


def classify_rsets(
    graph: Graph, r: int, spec: BroomSpec, settings: Settings | None = None
) -> NbrhoodClassification:
    """Classify every r-set of the graph by the size of its common neighborhood.

    Raises:
        InvalidParameterError: If r < 2.
        SizeLimitError: If C(n, r) exceeds the configured r-set work cap.
    """
    settings = resolve_settings(settings)
    if r < 2:
        raise InvalidParameterError(f"Classification needs r >= 2, got {r}")
    work = math.comb(graph.n, r)
    if work > settings.rset_work_cap:
        raise SizeLimitError(
            f"C({graph.n},{r}) = {work} r-sets exceed the cap of {settings.rset_work_cap}"
        )

    k = spec.k
    classes: dict[str, tuple[list[int], list[int]]] = {
        name: ([], []) for name in ("h1", "h2", "h3", "h4")
    }
    adj = graph.adj
    full = (1 << graph.n) - 1
    for members in itertools.combinations(range(graph.n), r):
        common = full
        for v in members:
            common &= adj[v]
        size = common.bit_count()
        rset = mask_of(members)
        targets = []
        if size > k:
            targets.append("h1")
        elif size == k:
            targets.append("h3")
        else:
            targets.append("h4")
        if size > spec.order:
            targets.append("h2")
        for name in targets:
            edges, payload = classes[name]
            edges.append(rset)
            payload.append(common)

    hypergraphs = {
        name: UniformHypergraph(r, graph.n, tuple(edges), tuple(payload))
        for name, (edges, payload) in classes.items()
    }
    classification = NbrhoodClassification(spec=spec, r=r, n=graph.n, **hypergraphs)
    _LOGGER.debug("Classified %d %d-sets of %s: %s", work, r, graph, classification.sizes)
    return classification


@dataclass(frozen=True, slots=True)
class BergePath:
    """Distinct hyperedges h_1..h_L and distinct vertices v_1..v_{L+1}.

    Consecutive vertices v_i, v_{i+1} both lie in h_i. The length is the
    number of hyperedges.
    """

    hyperedges: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.hyperedges)

    def as_dict(self) -> dict[str, object]:
        return {
            "hyperedges": [list(iter_bits(edge)) for edge in self.hyperedges],
            "vertices": list(self.vertices),
        }


def find_berge_path(hypergraph: UniformHypergraph, length: int) -> BergePath | None:
    """Return a Berge path with `length` hyperedges, or None.

    Raises:
        InvalidParameterError: If length < 1.
    """
    if length < 1:
        raise InvalidParameterError(f"Berge path length must be >= 1, got {length}")
    edges = hypergraph.edges
    if len(edges) < length:
        return None

    def extend(
        vertices: tuple[int, ...], used: int, hyperedges: tuple[int, ...], taken: int
    ) -> BergePath | None:
        if len(hyperedges) == length:
            return BergePath(hyperedges, vertices)
        last = vertices[-1]
        for index, edge in enumerate(edges):
            if taken >> index & 1 or not edge >> last & 1:
                continue
            for nxt in iter_bits(edge & ~used):
                found = extend(
                    (*vertices, nxt),
                    used | 1 << nxt,
                    (*hyperedges, edge),
                    taken | 1 << index,
                )
                if found is not None:
                    return found
        return None

    for start in iter_bits(mask_of(v for edge in edges for v in iter_bits(edge))):
        found = extend((start,), 1 << start, (), 0)
        if found is not None:
            return found
    return None


def has_berge_path(hypergraph: UniformHypergraph, length: int) -> bool:
    """Return whether the hypergraph contains a Berge path with `length` hyperedges."""
    return find_berge_path(hypergraph, length) is not None


def broom_from_berge_path(
    graph: Graph, path: BergePath, spec: BroomSpec
) -> BroomEmbedding:
    """Build a broom in the host from a Berge path of length k+1 in H2.

    Each hyperedge h_i has more than ell+s common neighbors, all adjacent to
    v_i and v_{i+1}. Picking a fresh one u_i per hyperedge gives the host path
    v_1 u_1 v_2 u_2 ... u_{k+1} v_{k+2} on 2k+3 >= ell-1 vertices, and v_1 has
    degree above ell+s, so its first ell-1 vertices form a heavy path.

    Raises:
        InvalidParameterError: If the path is too short or some hyperedge has
            too few common neighbors.
    """
    if path.length < spec.k + 1:
        raise InvalidParameterError(
            f"Need a Berge path of length {spec.k + 1}, got {path.length}"
        )
    adj = graph.adj
    full = (1 << graph.n) - 1
    used = mask_of(path.vertices)
    walk: list[int] = [path.vertices[0]]
    for index, edge in enumerate(path.hyperedges[: spec.k + 1]):
        common = full
        for v in iter_bits(edge):
            common &= adj[v]
        fresh = common & ~used
        if not fresh:
            raise InvalidParameterError(
                f"Hyperedge {list(iter_bits(edge))} has no fresh common neighbor"
            )
        u = (fresh & -fresh).bit_length() - 1
        used |= 1 << u
        walk.extend((u, path.vertices[index + 1]))

    return broom_from_heavy_path(graph, walk[: spec.ell - 1], spec)


class ClaimStatus(StrEnum):
    """Outcome of the H2 Berge-path check on one host graph."""

    HOLDS = "holds"
    VIOLATED = "violated"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True, slots=True)
class Claim2Verdict:
    """Result of checking that H2 has no Berge path of length k+1.

    Attributes:
        status: holds, violated, or inapplicable (host contains the broom).
        berge_path: The offending Berge path when violated.
        broom: The broom built from it when violated.
    """

    status: ClaimStatus
    berge_path: BergePath | None = None
    broom: BroomEmbedding | None = None


def check_claim2(
    graph: Graph, r: int, spec: BroomSpec, settings: Settings | None = None
) -> Claim2Verdict:
    """Check that H2 of a broom-free graph has no Berge path of length k+1.

    Raises:
        SizeLimitError: If C(n, r) exceeds the configured r-set work cap.
    """
    if contains_broom(graph, spec):
        return Claim2Verdict(ClaimStatus.INAPPLICABLE)
    classification = classify_rsets(graph, r, spec, settings)
    path = find_berge_path(classification.h2, spec.k + 1)
    if path is None:
        return Claim2Verdict(ClaimStatus.HOLDS)

    broom = broom_from_berge_path(graph, path, spec)
    _LOGGER.error("Berge path %s in H2 of broom-free %s gives %s", path, graph, broom)
    return Claim2Verdict(ClaimStatus.VIOLATED, path, broom)


@dataclass(frozen=True, slots=True)
class DominantKSet:
    """The k-set that is the exact common neighborhood of the most r-sets."""

    vertices: int
    rsets: int

    def as_dict(self) -> dict[str, object]:
        return {"vertices": list(iter_bits(self.vertices)), "rsets": self.rsets}


def dominant_common_neighborhood(
    classification: NbrhoodClassification,
) -> DominantKSet | None:
    """Return the most frequent common neighborhood among H3 members.

    Ties go to the smallest bitset. None when H3 is empty.
    """
    payload = classification.h3.payload or ()
    if not payload:
        return None
    counts = Counter(payload)
    vertices, rsets = max(counts.items(), key=lambda item: (item[1], -item[0]))
    return DominantKSet(vertices, rsets)
