"""Tests for the exact extremal search."""

from __future__ import annotations

import pytest

from broom_turan.canonical import canonical
from broom_turan.config import Settings
from broom_turan.const import OBJECTIVE_ER, OBJECTIVE_STARS
from broom_turan.errors import InvalidParameterError, SizeLimitError
from broom_turan.families import (
    BroomSpec,
    FamilyTag,
    family_min_n,
    fits_family_structure,
    make_star,
    predicted_extremal,
    predicted_tag,
)
from broom_turan.graph import Graph, graph6_decode
from broom_turan.search import (
    SweepResult,
    agreement_sweep,
    async_extremal_search,
    empirical_threshold,
    extremal_search,
    objective_value,
    strict_deletion_profile,
    uniqueness_claimed,
    verify_theorem,
)

from .common import BATTERY_SPECS, brute_force_optimum, complete, disjoint_union


def _key(graph: Graph) -> str:
    return str(canonical(graph))


def _assert_optimizers_fit(sweep: SweepResult) -> None:
    if sweep.threshold is None:
        return
    for report in sweep.reports:
        if report.n >= sweep.threshold:
            for key in report.optimizers:
                assert fits_family_structure(graph6_decode(key), sweep.spec), key


def test_objective_value(star5: Graph) -> None:
    """Test objective dispatch."""
    assert objective_value(star5, 2, OBJECTIVE_ER) == 20
    assert objective_value(star5, 2, OBJECTIVE_STARS) == 6
    with pytest.raises(InvalidParameterError):
        objective_value(star5, 1, OBJECTIVE_STARS)


def test_search_star_wins_without_p4() -> None:
    """Test P4-free graphs on 5 vertices: the star is the unique optimum."""
    report = extremal_search(BroomSpec(4, 0), 5, 2, OBJECTIVE_ER)
    assert report.optimum == 20
    assert report.predicted_value == 20
    assert str(report.predicted_family) == "H(1,5)"
    assert report.optimizers == (_key(make_star(5)),)
    assert report.agrees
    assert report.unique_and_matches


def test_search_reports_ties() -> None:
    """Test all tied optimizers are kept: S4 and K3+K1 at n=4."""
    report = extremal_search(BroomSpec(4, 0), 4, 2, OBJECTIVE_ER)
    assert report.optimum == 12
    assert set(report.optimizers) == {
        _key(make_star(4)),
        _key(disjoint_union(complete(3), Graph.empty(1))),
    }
    assert report.agrees
    assert not report.unique_and_matches


@pytest.mark.parametrize(
    ("n", "objective", "optimum", "predicted", "optimizers"),
    [
        (7, OBJECTIVE_ER, 48, 42, [(complete(4), complete(3))]),
        (8, OBJECTIVE_ER, 72, 56, [(complete(4), complete(4))]),
        (7, OBJECTIVE_STARS, 15, 15, [(make_star(7),), (complete(4), complete(3))]),
        (8, OBJECTIVE_STARS, 24, 21, [(complete(4), complete(4))]),
    ],
)
def test_disjoint_cliques_beat_the_star(
    n: int,
    objective: str,
    optimum: int,
    predicted: int,
    optimizers: list[tuple[Graph, ...]],
) -> None:
    """Test B(4,1)-free optima at small n, where disjoint K4's win."""
    report = extremal_search(BroomSpec(4, 1), n, 2, objective)
    assert report.optimum == optimum
    assert report.predicted_value == predicted
    assert report.agrees == (optimum == predicted)
    assert not report.unique_and_matches
    assert set(report.optimizers) == {
        _key(disjoint_union(*parts)) for parts in optimizers
    }


@pytest.mark.slow
def test_star_wins_from_ten_vertices() -> None:
    """Test the B(4,1) sweep: a tie at n=9, then the star alone."""
    sweep = agreement_sweep(BroomSpec(4, 1), 2, OBJECTIVE_ER, 7, 10)
    values = {report.n: report for report in sweep.reports}
    assert values[9].optimum == 72
    assert set(values[9].optimizers) == {
        _key(make_star(9)),
        _key(disjoint_union(complete(4), complete(4), Graph.empty(1))),
    }
    assert values[9].agrees and not values[9].unique_and_matches
    assert values[10].optimum == 90
    assert values[10].unique_and_matches
    assert sweep.threshold == 10


@pytest.mark.parametrize("spec", BATTERY_SPECS, ids=str)
@pytest.mark.parametrize("objective", [OBJECTIVE_ER, OBJECTIVE_STARS])
def test_search_matches_brute_force(spec: BroomSpec, objective: str) -> None:
    """Test the search against a scan of every graph up to 6 vertices."""
    for n in range(max(family_min_n(spec), 2), 7):
        report = extremal_search(spec, n, 2, objective)
        optimum, keys = brute_force_optimum(spec, n, 2, objective)
        assert report.optimum == optimum, f"{spec} n={n}"
        assert set(report.optimizers) == keys, f"{spec} n={n}"


@pytest.mark.parametrize(
    "spec", [BroomSpec(4, 0), BroomSpec(5, 0), BroomSpec(5, 1)], ids=str
)
@pytest.mark.parametrize("objective", [OBJECTIVE_ER, OBJECTIVE_STARS])
def test_pruning_keeps_every_optimizer(spec: BroomSpec, objective: str) -> None:
    """Test the pruned search equals the unpruned one."""
    for n in (6, 7):
        pruned = extremal_search(spec, n, 2, objective)
        unpruned = extremal_search(spec, n, 2, objective, prune=False)
        assert pruned == unpruned


def test_search_with_linear_objective() -> None:
    """Test r=1, where e_1 is twice the edge count."""
    report = extremal_search(BroomSpec(4, 0), 6, 1, OBJECTIVE_ER)
    assert report.optimum == 2 * 6
    assert report.optimum <= 2 * BroomSpec(4, 0).order * 6


def test_search_parameters() -> None:
    """Test invalid parameters and caps."""
    with pytest.raises(InvalidParameterError):
        extremal_search(BroomSpec(6, 0), 2, 2, OBJECTIVE_ER)
    with pytest.raises(InvalidParameterError):
        extremal_search(BroomSpec(5, 0), 3, 2, OBJECTIVE_ER)
    with pytest.raises(InvalidParameterError):
        extremal_search(BroomSpec(4, 0), 5, 1, OBJECTIVE_STARS)
    with pytest.raises(SizeLimitError):
        extremal_search(BroomSpec(4, 0), 11, 2, OBJECTIVE_ER)


async def test_async_search_matches_sequential(parallel_settings: Settings) -> None:
    """Test the parallel search merges to the sequential report."""
    spec = BroomSpec(5, 1)
    sequential = extremal_search(spec, 7, 2, OBJECTIVE_ER)
    parallel = await async_extremal_search(spec, 7, 2, OBJECTIVE_ER, parallel_settings)
    assert parallel == sequential


def test_threaded_search_matches_sequential(parallel_settings: Settings) -> None:
    """Test the synchronous entry point dispatches to worker processes."""
    spec = BroomSpec(4, 0)
    assert extremal_search(spec, 6, 2, OBJECTIVE_STARS, parallel_settings) == (
        extremal_search(spec, 6, 2, OBJECTIVE_STARS)
    )


def test_report_as_dict() -> None:
    """Test the JSON layout of a report."""
    data = extremal_search(BroomSpec(4, 0), 5, 2, OBJECTIVE_ER).as_dict()
    assert list(data) == [
        "spec",
        "n",
        "r",
        "objective",
        "optimum",
        "predicted_value",
        "predicted_family",
        "agrees",
        "unique_and_matches",
        "optimizers",
    ]
    assert data["spec"] == {"ell": 4, "s": 0}
    assert data["predicted_family"] == "H(1,5)"


def test_agreement_sweep() -> None:
    """Test the P4-free sweep: a tie at n=4, agreement from n=5 on."""
    for objective in (OBJECTIVE_ER, OBJECTIVE_STARS):
        sweep = agreement_sweep(BroomSpec(4, 0), 2, objective, 4, 7)
        assert [report.n for report in sweep.reports] == [4, 5, 6, 7]
        assert not sweep.reports[0].unique_and_matches
        assert sweep.threshold == 5
        _assert_optimizers_fit(sweep)


def test_tied_optimizer_below_threshold_need_not_fit() -> None:
    """Test K3+K1 ties the star at n=4 without a single hub vertex."""
    spec = BroomSpec(4, 0)
    report = extremal_search(spec, 4, 2, OBJECTIVE_ER)
    assert report.agrees
    fits = {
        key: fits_family_structure(graph6_decode(key), spec) for key in report.optimizers
    }
    assert fits == {
        _key(make_star(4)): True,
        _key(disjoint_union(complete(3), Graph.empty(1))): False,
    }


def test_agreement_sweep_edges() -> None:
    """Test empty ranges and ranges starting below the family minimum."""
    empty = agreement_sweep(BroomSpec(4, 0), 2, OBJECTIVE_ER, 6, 5)
    assert empty.reports == ()
    assert empty.threshold is None

    clipped = agreement_sweep(BroomSpec(5, 0), 2, OBJECTIVE_ER, 2, 5)
    assert [report.n for report in clipped.reports] == [4, 5]

    with pytest.raises(SizeLimitError):
        agreement_sweep(BroomSpec(4, 0), 2, OBJECTIVE_ER, 5, 11)


def test_empirical_threshold_needs_a_suffix() -> None:
    """Test the threshold is the start of the agreeing suffix."""
    sweep = agreement_sweep(BroomSpec(4, 0), 2, OBJECTIVE_ER, 4, 6)
    reports = sweep.reports
    assert empirical_threshold(reports) == 5
    assert empirical_threshold(reports, require_unique=False) == 4
    assert empirical_threshold(reports[:1]) is None
    assert empirical_threshold(()) is None


def test_uniqueness_claims() -> None:
    """Test uniqueness is not claimed for star counts of F_n."""
    assert uniqueness_claimed(BroomSpec(5, 1), OBJECTIVE_ER)
    assert not uniqueness_claimed(BroomSpec(5, 1), OBJECTIVE_STARS)
    assert uniqueness_claimed(BroomSpec(5, 0), OBJECTIVE_STARS)
    assert uniqueness_claimed(BroomSpec(6, 0), OBJECTIVE_STARS)


def test_verify_theorem() -> None:
    """Test both objectives are swept and summarized."""
    verdict = verify_theorem(BroomSpec(4, 0), 2, 4, 6)
    assert set(verdict.sweeps) == {OBJECTIVE_ER, OBJECTIVE_STARS}
    assert verdict.holds
    data = verdict.as_dict()
    assert data["objectives"]["er"]["threshold"] == 5
    assert data["objectives"]["stars"]["uniqueness_claimed"] is True
    assert len(data["objectives"]["stars"]["reports"]) == 3

    linear = verify_theorem(BroomSpec(4, 0), 1, 5, 5)
    assert set(linear.sweeps) == {OBJECTIVE_ER}


@pytest.mark.slow
@pytest.mark.parametrize(
    ("spec", "er_threshold", "stars_threshold"),
    [
        (BroomSpec(4, 0), 5, 5),
        (BroomSpec(5, 0), 9, 9),
        (BroomSpec(5, 1), None, None),
        (BroomSpec(6, 0), 7, 7),
    ],
    ids=str,
)
def test_theorem_sweeps_complete(
    spec: BroomSpec, er_threshold: int | None, stars_threshold: int | None
) -> None:
    """Test the sweeps up to n=9 report the measured thresholds."""
    verdict = verify_theorem(spec, 2, family_min_n(spec), 9)
    for objective, sweep in verdict.sweeps.items():
        assert sweep.reports[-1].n == 9
        for report in sweep.reports:
            assert report.optimum >= report.predicted_value, f"{objective} {report.n}"
            assert report.agrees == (report.optimum == report.predicted_value)
        _assert_optimizers_fit(sweep)
    assert verdict.sweeps[OBJECTIVE_ER].threshold == er_threshold
    assert verdict.sweeps[OBJECTIVE_STARS].threshold == stars_threshold


@pytest.mark.slow
def test_disjoint_cliques_win_at_nine_vertices() -> None:
    """Test K5+K4 beats F_9 when B(5,1) is forbidden."""
    report = extremal_search(BroomSpec(5, 1), 9, 2, OBJECTIVE_ER)
    assert report.predicted_value == 96
    assert report.optimum == 116
    assert _key(disjoint_union(complete(5), complete(4))) in report.optimizers


@pytest.mark.parametrize("spec", BATTERY_SPECS, ids=str)
def test_deleting_an_edge_lowers_e2(spec: BroomSpec) -> None:
    """Test every edge of the predicted graphs is needed for e_2."""
    for n in range(family_min_n(spec), 11):
        _, graph = predicted_extremal(spec, n)
        assert strict_deletion_profile(graph, 2, OBJECTIVE_ER) == []


@pytest.mark.parametrize("spec", BATTERY_SPECS, ids=str)
def test_deleting_an_edge_lowers_star_count(spec: BroomSpec) -> None:
    """Test every edge of H and H* is needed for the cherry count."""
    if predicted_tag(spec) is FamilyTag.F:
        pytest.skip("uniqueness is not claimed for F_n")
    for n in range(max(family_min_n(spec), 4), 11):
        _, graph = predicted_extremal(spec, n)
        assert strict_deletion_profile(graph, 2, OBJECTIVE_STARS) == []


def test_strict_deletion_profile_reports_loose_edges() -> None:
    """Test an isolated edge does not change the cherry count."""
    graph = disjoint_union(make_star(4), complete(2))
    assert strict_deletion_profile(graph, 2, OBJECTIVE_STARS) == [(4, 5)]
