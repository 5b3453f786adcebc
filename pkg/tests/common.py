"""Shared helpers and reference oracles for the test suite."""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator

import networkx as nx

from broom_turan.canonical import canonical
from broom_turan.detect import is_broom_free
from broom_turan.families import BroomSpec
from broom_turan.graph import Graph
from broom_turan.search import objective_value

BATTERY_SPECS = (
    BroomSpec(4, 0),
    BroomSpec(4, 1),
    BroomSpec(5, 0),
    BroomSpec(5, 1),
    BroomSpec(6, 0),
)


def from_networkx(graph: nx.Graph) -> Graph:
    """Convert a networkx graph on nodes 0..n-1."""
    return Graph.from_edges(graph.number_of_nodes(), graph.edges())


def atlas_graphs(n: int) -> list[Graph]:
    """Return one graph per isomorphism class on n <= 7 vertices from the atlas."""
    return [
        from_networkx(graph)
        for graph in nx.graph_atlas_g()
        if graph.number_of_nodes() == n
    ]


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Yield every labeled graph on vertices 0..n-1."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(
            n, [pair for index, pair in enumerate(pairs) if mask >> index & 1]
        )


def brute_force_optimum(
    spec: BroomSpec, n: int, r: int, objective: str
) -> tuple[int, set[str]]:
    """Return the optimum and canonical optimizer keys over the atlas."""
    best = -1
    keys: set[str] = set()
    for graph in atlas_graphs(n):
        if not is_broom_free(graph, spec):
            continue
        value = objective_value(graph, r, objective)
        if value > best:
            best, keys = value, set()
        if value == best:
            keys.add(str(canonical(graph)))
    return best, keys


def disjoint_union(*graphs: Graph) -> Graph:
    """Return the disjoint union, relabeling each part after the previous ones."""
    edges: list[tuple[int, int]] = []
    offset = 0
    for graph in graphs:
        edges += [(u + offset, v + offset) for u, v in graph.edges()]
        offset += graph.n
    return Graph.from_edges(offset, edges)


def complete(n: int) -> Graph:
    """Return K_n."""
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def random_graphs(rng: random.Random, count: int, max_n: int = 10) -> list[Graph]:
    """Return seeded random graphs on 2..max_n vertices with varying density."""
    graphs = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        density = rng.random()
        edges = [
            pair for pair in itertools.combinations(range(n), 2) if rng.random() < density
        ]
        graphs.append(Graph.from_edges(n, edges))
    return graphs
