"""Named graph families and the predicted extremal values for forbidden brooms."""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from enum import StrEnum

from .const import MAX_VERTICES, MIN_BROOM_LENGTH, OBJECTIVE_ER, OBJECTIVE_STARS
from .errors import InvalidParameterError
from .graph import Graph

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class BroomSpec:
    """The forbidden broom B(ell, s).

    Attributes:
        ell: Number of vertices on the path, at least 4.
        s: Number of extra leaves on the center.
    """

    ell: int
    s: int

    def __post_init__(self) -> None:
        """Reject parameters outside the supported regime."""
        if self.ell < MIN_BROOM_LENGTH:
            raise InvalidParameterError(
                f"Broom path length must be at least {MIN_BROOM_LENGTH}, got {self.ell}"
            )
        if self.s < 0:
            raise InvalidParameterError(f"Leaf count must be nonnegative, got {self.s}")
        if self.ell + self.s > MAX_VERTICES:
            raise InvalidParameterError(
                f"B({self.ell},{self.s}) has more than {MAX_VERTICES} vertices"
            )

    @property
    def k(self) -> int:
        """Clique size of the predicted extremal family."""
        return (self.ell - 2) // 2

    @property
    def order(self) -> int:
        """Number of vertices of the broom."""
        return self.ell + self.s

    def __str__(self) -> str:
        """Return the broom name."""
        return f"B({self.ell},{self.s})"


class FamilyTag(StrEnum):
    """Graph families that can be constructed."""

    H = "H"
    HSTAR = "Hstar"
    F = "F"
    STAR = "star"
    PATH = "path"
    COMPLETE_SPLIT = "CompleteSplit"
    BROOM = "broom"


@dataclass(frozen=True, slots=True)
class FamilyId:
    """A family member identified by tag and parameters.

    Attributes:
        tag: The family.
        n: Number of vertices (for brooms, derived from ell and s).
        k: Clique size for H, Hstar and CompleteSplit.
        ell: Path length for brooms.
        s: Leaf count for brooms.
    """

    tag: FamilyTag
    n: int
    k: int | None = None
    ell: int | None = None
    s: int | None = None

    def build(self) -> Graph:
        """Construct the graph.

        Raises:
            InvalidParameterError: If a required parameter is missing or out of range.
        """
        match self.tag:
            case FamilyTag.H | FamilyTag.COMPLETE_SPLIT:
                return make_H(self._need(self.k, "k"), self.n)
            case FamilyTag.HSTAR:
                return make_Hstar(self._need(self.k, "k"), self.n)
            case FamilyTag.F:
                return make_F(self.n)
            case FamilyTag.STAR:
                return make_star(self.n)
            case FamilyTag.PATH:
                return make_path(self.n)
            case FamilyTag.BROOM:
                return make_broom(
                    BroomSpec(self._need(self.ell, "ell"), self._need(self.s, "s"))
                )
        raise InvalidParameterError(f"Unknown family {self.tag}")

    def _need(self, value: int | None, name: str) -> int:
        if value is None:
            raise InvalidParameterError(f"Family {self.tag} needs parameter {name}")
        return value

    def __str__(self) -> str:
        """Return the conventional name, e.g. ``H(2,20)`` or ``F(20)``."""
        match self.tag:
            case FamilyTag.H | FamilyTag.HSTAR | FamilyTag.COMPLETE_SPLIT:
                return f"{self.tag.value}({self.k},{self.n})"
            case FamilyTag.F:
                return f"F({self.n})"
            case FamilyTag.STAR:
                return f"S({self.n})"
            case FamilyTag.PATH:
                return f"P({self.n})"
            case FamilyTag.BROOM:
                return f"B({self.ell},{self.s})"
        return f"{self.tag.value}({self.n})"


def make_broom(spec: BroomSpec) -> Graph:
    """Construct B(ell, s).

    Vertices 0..ell-1 form the path in order, vertex ell-2 is the center and
    vertices ell..ell+s-1 are its extra leaves.
    """
    center = spec.ell - 2
    edges = [(v, v + 1) for v in range(spec.ell - 1)]
    edges += [(center, leaf) for leaf in range(spec.ell, spec.order)]
    return Graph.from_edges(spec.order, edges)


def _check_order(n: int, minimum: int, name: str) -> None:
    if not minimum <= n <= MAX_VERTICES:
        raise InvalidParameterError(
            f"{name} needs {minimum} <= n <= {MAX_VERTICES}, got n={n}"
        )


def make_H(k: int, n: int) -> Graph:
    """Construct H(k, n): a k-clique joined to an independent set of n-k vertices.

    Raises:
        InvalidParameterError: Unless 1 <= k <= n-1 and n <= 64.
    """
    _check_order(n, 2, "H(k,n)")
    if not 1 <= k <= n - 1:
        raise InvalidParameterError(f"H(k,n) needs 1 <= k <= n-1, got k={k}, n={n}")
    edges = [(u, v) for u in range(k) for v in range(u + 1, n)]
    return Graph.from_edges(n, edges)


def make_Hstar(k: int, n: int) -> Graph:
    """Construct H*(k, n): H(k, n) plus the edge {k, k+1}.

    Raises:
        InvalidParameterError: Unless 1 <= k <= n-3 and n <= 64.
    """
    _check_order(n, 4, "H*(k,n)")
    if not 1 <= k <= n - 3:
        raise InvalidParameterError(f"H*(k,n) needs 1 <= k <= n-3, got k={k}, n={n}")
    return make_H(k, n).with_edge(k, k + 1)


def make_F(n: int) -> Graph:
    """Construct F_n: the star S_n plus the matching {1,2}, {3,4}, ... on its leaves."""
    _check_order(n, 2, "F_n")
    edges = [(0, v) for v in range(1, n)]
    edges += [(v, v + 1) for v in range(1, n - 1, 2)]
    return Graph.from_edges(n, edges)


def make_star(n: int) -> Graph:
    """Construct the star S_n on n vertices with center 0."""
    _check_order(n, 2, "S_n")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def make_path(n: int) -> Graph:
    """Construct the path P_n on vertices 0-1-...-(n-1)."""
    _check_order(n, 1, "P_n")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def predicted_tag(spec: BroomSpec) -> FamilyTag:
    """Return the family the theorem predicts to be extremal for a broom."""
    if spec.ell % 2 == 0:
        return FamilyTag.H
    if spec.ell == 5 and spec.s > 0:
        return FamilyTag.F
    return FamilyTag.HSTAR


def family_min_n(spec: BroomSpec) -> int:
    """Return the least n at which the predicted family exists."""
    match predicted_tag(spec):
        case FamilyTag.HSTAR:
            return spec.k + 3
        case FamilyTag.F:
            return 2
    return spec.k + 1


def predicted_family(spec: BroomSpec, n: int) -> FamilyId:
    """Return the identifier of the predicted extremal graph on n vertices.

    Raises:
        InvalidParameterError: If the family does not exist at n.
    """
    minimum = family_min_n(spec)
    tag = predicted_tag(spec)
    if not minimum <= n <= MAX_VERTICES:
        raise InvalidParameterError(
            f"Predicted family {tag.value} for {spec} needs "
            f"{minimum} <= n <= {MAX_VERTICES}, got n={n}"
        )
    if tag is FamilyTag.F:
        return FamilyId(tag, n)
    return FamilyId(tag, n, k=spec.k)


def predicted_extremal(spec: BroomSpec, n: int) -> tuple[FamilyId, Graph]:
    """Return the predicted extremal family member and its graph.

    Raises:
        InvalidParameterError: If the family does not exist at n.
    """
    family = predicted_family(spec, n)
    return family, family.build()


def check_objective(r: int, objective: str) -> None:
    """Validate an objective name and its exponent.

    Raises:
        InvalidParameterError: On an unknown objective, r < 1, or r < 2 for stars.
    """
    if objective == OBJECTIVE_ER:
        if r < 1:
            raise InvalidParameterError(f"Objective er needs r >= 1, got {r}")
    elif objective == OBJECTIVE_STARS:
        if r < 2:
            raise InvalidParameterError(f"Objective stars needs r >= 2, got {r}")
    else:
        raise InvalidParameterError(f"Unknown objective {objective!r}")


def degree_weight(d: int, r: int, objective: str) -> int:
    """Return the contribution of one vertex of degree d to the objective."""
    return d**r if objective == OBJECTIVE_ER else math.comb(d, r)


def closed_form_value(spec: BroomSpec, n: int, r: int, objective: str) -> int:
    """Evaluate the objective on the predicted extremal graph by formula.

    Args:
        spec: The forbidden broom.
        n: Number of vertices.
        r: Exponent (er) or star size (stars).
        objective: ``"er"`` or ``"stars"``.

    Returns:
        The objective value of H(k,n), H*(k,n) or F_n as predicted.

    Raises:
        InvalidParameterError: If the family does not exist at n or r is invalid.
    """
    check_objective(r, objective)
    family = predicted_family(spec, n)

    def f(d: int) -> int:
        return degree_weight(d, r, objective)

    k = spec.k
    match family.tag:
        case FamilyTag.H:
            return k * f(n - 1) + (n - k) * f(k)
        case FamilyTag.HSTAR:
            return k * f(n - 1) + (n - k - 2) * f(k) + 2 * f(k + 1)
    matched = (n - 1) // 2
    return f(n - 1) + 2 * matched * f(2) + ((n - 1) % 2) * f(1)


def fits_family_structure(graph: Graph, spec: BroomSpec) -> bool:
    """Return whether a graph is a spanning subgraph of the predicted family.

    The graph fits when some k-set B touches every edge except none (ell even),
    at most one edge (ell odd, H* case) or a matching (ell = 5, s > 0).
    """
    tag = predicted_tag(spec)
    k = spec.k
    if graph.n < k:
        return False
    edges = graph.edges()
    for hub in itertools.combinations(range(graph.n), k):
        hub_mask = sum(1 << v for v in hub)
        outside = [
            (u, v) for u, v in edges if not (hub_mask >> u & 1 or hub_mask >> v & 1)
        ]
        if tag is FamilyTag.H and not outside:
            return True
        if tag is FamilyTag.HSTAR and len(outside) <= 1:
            return True
        if tag is FamilyTag.F:
            ends = [v for edge in outside for v in edge]
            if len(ends) == len(set(ends)):
                return True
    return False
