import json
from fractions import Fraction
from itertools import permutations

import pytest

from src.enumeration.domain.exceptions import EnumerationCapException
from src.graphs.domain.services.families import complete_graph, cycle_graph, labeled_cycle_count
from src.graphs.domain.services.structure import classify
from src.graphs.domain.value_objects.graph import Graph
from src.graphs.infrastructure.codecs.graph6 import encode_graph6, parse_graph6
from src.resistance.domain.services.resistance_engine import analyze
from src.shared.domain.exceptions.base import ValidationException
from src.verification.application.dto.record_dto import VerificationRecordDTO
from src.verification.application.services.verification_application_service import VerificationApplicationService
from src.verification.domain.value_objects.verification_record import PopulationSource

F = Fraction
K5 = encode_graph6(complete_graph(5))


@pytest.fixture()
def service(settings):
    return VerificationApplicationService(settings)


@pytest.fixture()
def exact_service(settings):
    return VerificationApplicationService(settings, exact_only=True)


def labeled_cycles(n: int) -> set[str]:
    cycles = set()
    for order in permutations(range(n)):
        edges = [(order[k], order[(k + 1) % n]) for k in range(n)]
        cycles.add(encode_graph6(Graph.from_edges(n, edges)))
    return cycles


class TestEccentricityBound:

    def test_three_vertices(self, service):
        record = service.verify_eccentricity_bound(3)
        assert record.passed
        assert record.population == 1
        assert record.equality_witnesses == ("Bw",)
        assert record.extremal_value == F(4, 3)
        assert record.population_source is PopulationSource.ENUMERATION

    def test_witnesses_are_the_labeled_cycles(self, service):
        record = service.verify_eccentricity_bound(5)
        assert record.passed
        assert len(record.equality_witnesses) == 12 == labeled_cycle_count(5)
        assert set(record.equality_witnesses) == labeled_cycles(5)
        assert record.extremal_value == 4

    def test_witnesses_reverify(self, service):
        record = service.verify_eccentricity_bound(4)
        assert record.population == 10
        for witness in record.equality_witnesses:
            assert analyze(parse_graph6(witness)).max_eccentricity == record.extremal_value

    def test_below_three_rejected(self, service):
        with pytest.raises(ValidationException):
            service.verify_eccentricity_bound(2)


def test_constant_curvature_graphs_are_two_connected(service):
    record = service.verify_constant_curvature_two_connected(4)
    assert record.passed
    assert record.population == 38
    assert encode_graph6(complete_graph(4)) in record.regular_graphs
    assert set(record.regular_graphs) >= labeled_cycles(4)
    assert record.equality_witnesses == ()
    assert record.extremal_value is None
    small = service.verify_constant_curvature_two_connected(3)
    assert small.population == 4
    assert small.regular_graphs == ("Bw",)


class TestCurvatureSandwich:

    def test_five_vertices(self, service):
        lower, upper = service.verify_curvature_sandwich(5)
        assert lower.theorem_id == "curvature-lower"
        assert upper.theorem_id == "curvature-upper"
        assert lower.passed and upper.passed
        assert lower.extremal_value == F(1, 4)
        assert set(lower.equality_witnesses) == labeled_cycles(5)
        assert upper.extremal_value == F(5, 8)
        assert upper.equality_witnesses == (K5,)

    def test_triangle_is_both_extremes(self, service):
        lower, upper = service.verify_curvature_sandwich(3)
        assert lower.extremal_value == upper.extremal_value == F(3, 4)
        assert lower.equality_witnesses == upper.equality_witnesses == ("Bw",)


class TestKirchhoffSandwich:

    def test_four_vertices(self, service):
        records = service.verify_kirchhoff_sandwich(4)
        upper, lower, regular_lower, regular_upper = records
        assert [r.theorem_id for r in records] == [
            "kirchhoff-upper",
            "kirchhoff-lower",
            "kirchhoff-regular-lower",
            "kirchhoff-regular-upper",
        ]
        assert all(r.passed for r in records)
        assert upper.extremal_value == 5
        assert set(upper.equality_witnesses) == labeled_cycles(4)
        assert lower.extremal_value == 3
        assert lower.equality_witnesses == ("C~",)
        assert regular_lower.extremal_value == 3
        assert regular_lower.equality_witnesses == ("C~",)
        assert regular_upper.extremal_value == 5
        assert set(regular_upper.equality_witnesses) == labeled_cycles(4)

    def test_runner_up_is_the_diamond(self, service):
        upper = service.verify_kirchhoff_sandwich(4)[0]
        assert upper.runner_up_value == 4
        assert len(upper.runner_up_witnesses) == 6

    def test_five_vertices(self, service):
        upper, lower, _, _ = service.verify_kirchhoff_sandwich(5)
        assert upper.extremal_value == 10
        assert len(upper.equality_witnesses) == 12
        assert lower.equality_witnesses == (K5,)


def test_closed_forms(service):
    record = service.verify_closed_forms(12)
    assert record.passed
    assert record.population == 20
    assert record.population_source is PopulationSource.CONSTRUCTION
    with pytest.raises(ValidationException):
        service.verify_closed_forms(2)


@pytest.mark.parametrize("n, population", [(3, 0), (4, 2), (6, 9)])
def test_chord_reduction(service, n, population):
    record = service.verify_chord_reduction(n)
    assert record.theorem_id == "chord-reduction"
    assert record.passed
    assert record.population == population


class TestRunSuite:

    def test_eccentricity_range(self, service):
        records = service.run_suite(range(3, 6), ["eccentricity"])
        assert [r.n for r in records] == [3, 4, 5]
        assert all(r.passed for r in records)

    def test_empty_suites(self, service):
        assert service.run_suite(range(3, 6), []) == []

    def test_suite_major_order(self, service):
        records = service.run_suite([3, 4], ["curvature", "eccentricity"])
        assert [(r.theorem_id, r.n) for r in records] == [
            ("curvature-lower", 3),
            ("curvature-upper", 3),
            ("curvature-lower", 4),
            ("curvature-upper", 4),
            ("eccentricity-bound", 3),
            ("eccentricity-bound", 4),
        ]

    def test_all_suites_pass_up_to_five(self, service):
        records = service.run_suite(range(3, 6), ["all"])
        assert records
        assert all(r.passed for r in records)

    def test_property_suites_pass(self, service):
        records = service.run_suite(range(3, 6), ["properties"])
        assert {r.theorem_id for r in records} == {
            "metric-axioms",
            "rayleigh-monotonicity",
            "deletion-formula",
            "block-composition",
            "chord-reduction",
        }
        assert all(r.passed for r in records)

    def test_property_sweeps_accept_tiny_orders(self, service):
        records = service.run_suite([1, 2], ["metric", "blocks"])
        assert [r.population for r in records] == [1, 1, 1, 1]

    def test_theorem_suites_need_three_vertices(self, service):
        with pytest.raises(ValidationException):
            service.run_suite([2, 3], ["eccentricity"])

    def test_unknown_suite(self, service):
        with pytest.raises(ValidationException):
            service.run_suite([3], ["planarity"])

    def test_cap_without_stream(self, service):
        with pytest.raises(EnumerationCapException):
            service.run_suite([9], ["eccentricity"])

    def test_constructions_ignore_cap(self, service):
        (record,) = service.run_suite([20], ["closed-forms"])
        assert record.passed

    def test_stream_orders_replace_range(self, service):
        stream = [parse_graph6("Bw"), parse_graph6("Bg"), cycle_graph(4)]
        records = service.run_suite([7], ["eccentricity"], stream=stream)
        assert [(r.n, r.population) for r in records] == [(3, 1), (4, 1)]
        assert all(r.population_source is PopulationSource.STREAM for r in records)
        assert records[1].equality_witnesses == (encode_graph6(cycle_graph(4)),)


@pytest.mark.parametrize("suite", ["eccentricity", "two-connected", "curvature", "kirchhoff"])
def test_screening_never_changes_records(service, exact_service, suite):
    screened = service.run_suite(range(3, 6), [suite])
    exact = exact_service.run_suite(range(3, 6), [suite])
    assert screened == exact
    assert [VerificationRecordDTO.from_record(r).to_json(include_timing=False) for r in screened] == [
        VerificationRecordDTO.from_record(r).to_json(include_timing=False) for r in exact
    ]


def test_small_batches_give_the_same_records(settings):
    tiny = settings.model_copy(update={"screen_batch_size": 7})
    default = VerificationApplicationService(settings).run_suite([5], ["kirchhoff"])
    assert VerificationApplicationService(tiny).run_suite([5], ["kirchhoff"]) == default


def test_parallel_sweep_matches_serial(settings):
    serial = VerificationApplicationService(settings, jobs=1).run_suite([5], ["eccentricity", "kirchhoff"])
    parallel = VerificationApplicationService(settings, jobs=2).run_suite([5], ["eccentricity", "kirchhoff"])
    assert parallel == serial


def test_record_json(service):
    record = service.verify_eccentricity_bound(4)
    document = json.loads(VerificationRecordDTO.from_record(record).to_json())
    assert document["theorem_id"] == "eccentricity-bound"
    assert document["extremal_value"] == "5/2"
    assert document["population_source"] == "enumeration"
    assert document["passed"] is True
    assert document["violations"] == []
    assert document["equality_witnesses"] == sorted(document["equality_witnesses"])
    assert "elapsed_seconds" in document
    untimed = json.loads(VerificationRecordDTO.from_record(record).to_json(include_timing=False))
    assert "elapsed_seconds" not in untimed


def test_witnesses_classify_as_cycles(service):
    record = service.verify_eccentricity_bound(5)
    assert all(classify(parse_graph6(w)).is_cycle for w in record.equality_witnesses)


# report quantity each record's equality witnesses must reproduce
WITNESS_VALUE = {
    "eccentricity-bound": lambda report: report.max_eccentricity,
    "curvature-lower": lambda report: report.constant_curvature,
    "curvature-upper": lambda report: report.constant_curvature,
    "kirchhoff-upper": lambda report: report.kf,
    "kirchhoff-lower": lambda report: report.kf,
    "kirchhoff-regular-lower": lambda report: report.kf,
    "kirchhoff-regular-upper": lambda report: report.kf,
}


def assert_witnesses_reverify(records):
    for record in records:
        if record.extremal_value is None:
            assert record.equality_witnesses == ()
        for witness in record.equality_witnesses:
            report = analyze(parse_graph6(witness))
            assert WITNESS_VALUE[record.theorem_id](report) == record.extremal_value, (record.theorem_id, witness)
        for witness in record.runner_up_witnesses:
            assert analyze(parse_graph6(witness)).kf == record.runner_up_value
        for graph6 in record.regular_graphs:
            assert analyze(parse_graph6(graph6)).resistance_regular


def test_every_witness_reproduces_its_extremal_value(service):
    records = service.run_suite(range(3, 6), ["all"])
    assert {r.theorem_id for r in records if r.equality_witnesses} == set(WITNESS_VALUE)
    assert_witnesses_reverify(records)


# Exhaustive runs at the largest enumerated orders; opt in with --runslow.

@pytest.mark.slow
def test_every_witness_reproduces_its_extremal_value_at_six(service):
    assert_witnesses_reverify(service.run_suite([6], ["eccentricity", "two-connected", "curvature", "kirchhoff"]))


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["eccentricity", "two-connected", "curvature", "kirchhoff", "metric", "blocks"])
def test_screening_never_changes_records_at_six(service, exact_service, suite):
    assert service.run_suite([6], [suite]) == exact_service.run_suite([6], [suite])


@pytest.mark.slow
def test_property_sweeps_pass_at_six(service):
    records = service.run_suite([6], ["metric", "rayleigh", "deletion", "blocks"])
    assert all(r.population == 26704 for r in records)
    assert all(r.passed for r in records)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_eccentricity_witnesses_are_the_labeled_cycles(settings, n):
    record = VerificationApplicationService(settings, jobs=4).verify_eccentricity_bound(n)
    assert record.passed
    assert len(record.equality_witnesses) == labeled_cycle_count(n)
    assert set(record.equality_witnesses) == labeled_cycles(n)


@pytest.mark.slow
def test_theorem_suites_pass_at_seven(settings):
    records = VerificationApplicationService(settings, jobs=4).run_suite(
        [7], ["two-connected", "curvature", "kirchhoff"]
    )
    assert all(r.passed for r in records)
    assert_witnesses_reverify(records)


@pytest.mark.slow
def test_block_composition_at_seven(settings):
    (record,) = VerificationApplicationService(settings, jobs=4).run_suite([7], ["blocks"])
    assert record.population == 1866256
    assert record.passed


@pytest.mark.slow
def test_closed_forms_up_to_fifty(service):
    record = service.verify_closed_forms(50)
    assert record.passed
    assert record.population == 96
