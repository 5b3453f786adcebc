"""Exact extremal search over broom-free graphs.

The search walks the broom-filtered augmentation tree, carrying the objective
value incrementally from the degree changes of each added vertex, and keeps
every maximizer. A node is abandoned only when an upper bound on all of its
descendants is strictly below the best value seen, so ties always survive.
"""

from __future__ import annotations

import asyncio
import logging
from dataclasses import dataclass, field

from tqdm import tqdm

from .canonical import canonical
from .config import Settings, resolve_settings
from .const import MAX_OBJECTIVE, OBJECTIVE_ER, OBJECTIVE_STARS
from .detect import is_broom_free
from .enumeration import ROOT, augment, frontier
from .errors import (
    BroomTuranError,
    InvalidParameterError,
    ObjectiveOverflowError,
    SizeLimitError,
)
from .families import (
    BroomSpec,
    FamilyId,
    FamilyTag,
    check_objective,
    closed_form_value,
    degree_weight,
    family_min_n,
    predicted_extremal,
    predicted_tag,
)
from .graph import Graph, count_stars, e_r, graph6_decode, graph6_encode, iter_bits
from .parallel import async_map_in_pool

_LOGGER = logging.getLogger(__name__)


def objective_value(graph: Graph, r: int, objective: str) -> int:
    """Evaluate ``"er"`` (degree-power sum) or ``"stars"`` (star count)."""
    check_objective(r, objective)
    if objective == OBJECTIVE_ER:
        return e_r(graph, r)
    return count_stars(graph, r)


def strict_deletion_profile(
    graph: Graph, r: int, objective: str
) -> list[tuple[int, int]]:
    """Return the edges whose deletion does not strictly lower the objective."""
    value = objective_value(graph, r, objective)
    return [
        (u, v)
        for u, v in graph.edges()
        if objective_value(graph.without_edge(u, v), r, objective) >= value
    ]


@dataclass(frozen=True, slots=True)
class ExtremalReport:
    """Exhaustive optimum for one (spec, n, r, objective) and its comparison.

    Attributes:
        spec: The forbidden broom.
        n: Number of vertices.
        r: Exponent or star size.
        objective: ``"er"`` or ``"stars"``.
        optimum: Largest objective value over broom-free n-vertex graphs.
        optimizers: Canonical graph6 strings of all maximizers, sorted.
        predicted_value: Closed-form value of the predicted family.
        predicted_family: The predicted family member.
        agrees: Whether optimum equals the predicted value.
        unique_and_matches: Whether the predicted graph is the only maximizer.
    """

    spec: BroomSpec
    n: int
    r: int
    objective: str
    optimum: int
    optimizers: tuple[str, ...]
    predicted_value: int
    predicted_family: FamilyId
    agrees: bool
    unique_and_matches: bool

    def as_dict(self) -> dict[str, object]:
        """Return the report in its JSON layout."""
        return {
            "spec": {"ell": self.spec.ell, "s": self.spec.s},
            "n": self.n,
            "r": self.r,
            "objective": self.objective,
            "optimum": self.optimum,
            "predicted_value": self.predicted_value,
            "predicted_family": str(self.predicted_family),
            "agrees": self.agrees,
            "unique_and_matches": self.unique_and_matches,
            "optimizers": list(self.optimizers),
        }


@dataclass(frozen=True, slots=True)
class _Best:
    """Partial search state; merging is associative and commutative."""

    optimum: int
    keys: frozenset[bytes] = frozenset()

    def merge(self, other: _Best) -> _Best:
        if self.optimum != other.optimum:
            return self if self.optimum > other.optimum else other
        return _Best(self.optimum, self.keys | other.keys)


@dataclass(frozen=True, slots=True)
class _SearchTask:
    """Search of one augmentation subtree; picklable for worker processes."""

    n: int
    spec: BroomSpec
    r: int
    objective: str
    floor: int
    prune: bool
    settings: Settings = field(default_factory=Settings)

    def weight(self, d: int) -> int:
        return degree_weight(d, self.r, self.objective)

    def bound(self, node: Graph) -> int:
        """Upper bound on the objective of any n-vertex descendant of a node.

        Descendants only add vertices and edges. Each existing degree grows by
        at most one per added vertex and never passes n-1, every added vertex
        has degree at most n-1, and the weight is nondecreasing in the degree,
        so no descendant can score more than this.
        """
        extra = self.n - node.n
        top = self.weight(self.n - 1)
        return (
            sum(self.weight(min(d + extra, self.n - 1)) for d in node.degrees())
            + extra * top
        )

    def __call__(self, node: Graph) -> _Best:
        best = _Best(self.floor)
        value = sum(self.weight(d) for d in node.degrees())
        return self._visit(node, value, best)

    def _visit(self, node: Graph, value: int, best: _Best) -> _Best:
        if node.n == self.n:
            return best.merge(_Best(value, frozenset({graph6_encode(node)})))
        if self.prune and self.bound(node) < best.optimum:
            return best

        degrees = node.degrees()
        for child in augment(node, self.spec, self.settings):
            attached = list(iter_bits(child.attachment))
            child_value = (
                value
                + sum(self.weight(degrees[v] + 1) - self.weight(degrees[v]) for v in attached)
                + self.weight(len(attached))
            )
            best = self._visit(child.graph, child_value, best)
        return best


def uniqueness_claimed(spec: BroomSpec, objective: str) -> bool:
    """Return whether the theorem claims a unique extremal graph for this case.

    Uniqueness is claimed for every e_r case, and for the star count only when
    the predicted graph is H(k,n) or H*(k,n).
    """
    if objective == OBJECTIVE_STARS:
        return predicted_tag(spec) is not FamilyTag.F
    return True


def _prepare(
    spec: BroomSpec, n: int, r: int, objective: str, settings: Settings, prune: bool
) -> tuple[_SearchTask, FamilyId, Graph]:
    check_objective(r, objective)
    if n > settings.enumeration_cap:
        raise SizeLimitError(
            f"Search is limited to n <= {settings.enumeration_cap}, got {n}"
        )
    minimum = max(2, family_min_n(spec))
    if n < minimum:
        raise InvalidParameterError(
            f"The predicted family for {spec} needs n >= {minimum}, got {n}"
        )

    family, predicted = predicted_extremal(spec, n)
    floor = objective_value(predicted, r, objective) if is_broom_free(predicted, spec) else -1
    task = _SearchTask(n, spec, r, objective, floor, prune, settings)
    return task, family, predicted


def _finish(
    task: _SearchTask, family: FamilyId, predicted: Graph, best: _Best
) -> ExtremalReport:
    spec, n, r, objective = task.spec, task.n, task.r, task.objective
    if best.optimum > MAX_OBJECTIVE:
        raise ObjectiveOverflowError(f"Optimum for {spec}, n={n}, r={r} overflows")
    if not best.keys:
        raise BroomTuranError(f"Search for {spec} at n={n} found no candidate")

    for key in best.keys:
        graph = graph6_decode(key)
        if not is_broom_free(graph, spec) or objective_value(graph, r, objective) != best.optimum:
            raise BroomTuranError(f"Optimizer {key!r} failed the recheck")

    optimizers = tuple(sorted(key.decode("ascii") for key in best.keys))
    predicted_value = closed_form_value(spec, n, r, objective)
    predicted_key = str(canonical(predicted, task.settings))
    report = ExtremalReport(
        spec=spec,
        n=n,
        r=r,
        objective=objective,
        optimum=best.optimum,
        optimizers=optimizers,
        predicted_value=predicted_value,
        predicted_family=family,
        agrees=best.optimum == predicted_value,
        unique_and_matches=optimizers == (predicted_key,),
    )
    _LOGGER.info(
        "%s n=%d r=%d %s: optimum %d (%d optimizers), predicted %d",
        spec,
        n,
        r,
        objective,
        report.optimum,
        len(optimizers),
        predicted_value,
    )
    return report


def extremal_search(
    spec: BroomSpec,
    n: int,
    r: int,
    objective: str,
    settings: Settings | None = None,
    *,
    prune: bool = True,
) -> ExtremalReport:
    """Compute the exact optimum and all optimizers over broom-free graphs.

    Args:
        spec: The forbidden broom.
        n: Number of vertices.
        r: Exponent (er, r >= 1) or star size (stars, r >= 2).
        objective: ``"er"`` or ``"stars"``.
        settings: Optional settings; threads > 1 searches subtrees in parallel.
        prune: Use the upper-bound prune (disable to cross-check it).

    Returns:
        The report comparing the optimum with the predicted family.

    Raises:
        InvalidParameterError: On invalid r/objective or n below the family minimum.
        SizeLimitError: If n exceeds the enumeration cap.
    """
    settings = resolve_settings(settings)
    if settings.threads > 1:
        return asyncio.run(
            async_extremal_search(spec, n, r, objective, settings, prune=prune)
        )

    task, family, predicted = _prepare(spec, n, r, objective, settings, prune)
    return _finish(task, family, predicted, task(ROOT))


async def async_extremal_search(
    spec: BroomSpec,
    n: int,
    r: int,
    objective: str,
    settings: Settings | None = None,
    *,
    prune: bool = True,
) -> ExtremalReport:
    """Parallel :func:`extremal_search` over worker processes.

    The tree is cut at the configured split level and each subtree is searched
    independently; partial (optimum, optimizer set) states are max-merged, so
    the report equals the sequential one.
    """
    settings = resolve_settings(settings)
    task, family, predicted = _prepare(spec, n, r, objective, settings, prune)
    roots = frontier(n, spec, settings.split_level, settings)
    partials = await async_map_in_pool(task, roots, max(settings.threads, 1))
    best = _Best(task.floor)
    for partial in partials:
        best = best.merge(partial)
    return _finish(task, family, predicted, best)


@dataclass(frozen=True, slots=True)
class SweepResult:
    """Reports for consecutive n and the least n from which all agree.

    Attributes:
        spec: The forbidden broom.
        r: Exponent or star size.
        objective: ``"er"`` or ``"stars"``.
        reports: One report per n, increasing.
        threshold: Least n0 such that every report with n >= n0 agrees (and is
            unique, when required), or None.
        require_unique: Whether uniqueness was part of the agreement test.
    """

    spec: BroomSpec
    r: int
    objective: str
    reports: tuple[ExtremalReport, ...]
    threshold: int | None
    require_unique: bool


def empirical_threshold(
    reports: tuple[ExtremalReport, ...], require_unique: bool = True
) -> int | None:
    """Return the least n from which every later report agrees."""
    threshold = None
    for report in reversed(reports):
        if not report.agrees or (require_unique and not report.unique_and_matches):
            break
        threshold = report.n
    return threshold


def agreement_sweep(
    spec: BroomSpec,
    r: int,
    objective: str,
    n_min: int,
    n_max: int,
    settings: Settings | None = None,
    *,
    require_unique: bool = True,
    progress: bool = False,
) -> SweepResult:
    """Run :func:`extremal_search` for every n in a range.

    Values of n below the predicted family's minimum are skipped.

    Raises:
        SizeLimitError: If n_max exceeds the enumeration cap.
    """
    settings = resolve_settings(settings)
    check_objective(r, objective)
    if n_min <= n_max and n_max > settings.enumeration_cap:
        raise SizeLimitError(
            f"Sweep is limited to n <= {settings.enumeration_cap}, got {n_max}"
        )

    start = max(n_min, family_min_n(spec), 2)
    if start > n_min:
        _LOGGER.warning(
            "Skipping n < %d: the predicted family for %s does not exist", start, spec
        )

    reports = tuple(
        extremal_search(spec, n, r, objective, settings)
        for n in tqdm(
            range(start, n_max + 1),
            desc=f"{spec} {objective} r={r}",
            disable=not progress,
        )
    )
    return SweepResult(
        spec=spec,
        r=r,
        objective=objective,
        reports=reports,
        threshold=empirical_threshold(reports, require_unique),
        require_unique=require_unique,
    )


@dataclass(frozen=True, slots=True)
class TheoremVerdict:
    """Sweeps for both objectives against the theorem's predictions.

    Attributes:
        spec: The forbidden broom.
        r: Exponent or star size.
        n_min: First n requested.
        n_max: Last n requested.
        sweeps: Sweep per objective.
    """

    spec: BroomSpec
    r: int
    n_min: int
    n_max: int
    sweeps: dict[str, SweepResult]

    @property
    def holds(self) -> bool:
        """Whether every objective reaches agreement somewhere in the range."""
        return all(sweep.threshold is not None for sweep in self.sweeps.values())

    def as_dict(self) -> dict[str, object]:
        """Return the verdict in its JSON layout (without schema version)."""
        return {
            "spec": {"ell": self.spec.ell, "s": self.spec.s},
            "r": self.r,
            "nmin": self.n_min,
            "nmax": self.n_max,
            "holds": self.holds,
            "objectives": {
                objective: {
                    "threshold": sweep.threshold,
                    "uniqueness_claimed": sweep.require_unique,
                    "reports": [report.as_dict() for report in sweep.reports],
                }
                for objective, sweep in self.sweeps.items()
            },
        }


def verify_theorem(
    spec: BroomSpec,
    r: int,
    n_min: int,
    n_max: int,
    settings: Settings | None = None,
    *,
    progress: bool = False,
) -> TheoremVerdict:
    """Sweep both objectives and check agreement and claimed uniqueness.

    The star count is skipped for r = 1, where it is undefined. Uniqueness is
    demanded only where the theorem claims it.
    """
    objectives = [OBJECTIVE_ER] + ([OBJECTIVE_STARS] if r >= 2 else [])
    sweeps = {
        objective: agreement_sweep(
            spec,
            r,
            objective,
            n_min,
            n_max,
            settings,
            require_unique=uniqueness_claimed(spec, objective),
            progress=progress,
        )
        for objective in objectives
    }
    return TheoremVerdict(spec=spec, r=r, n_min=n_min, n_max=n_max, sweeps=sweeps)
