import json

import pytest

import permdual.verify as verify
from permdual.bijection import StructuralReport, enumerate_Fdown
from permdual.chord import PropertyCheck
from permdual.dual import DualReport, dual_equivalence_report
from permdual.fixtures import get_fixture
from permdual.perm import TranspositionSequence
from permdual.trails import CoverReport, LabeledMultigraph, TrailDoubleCover, Violation
from permdual.verify import SUITES, run_suite


def test_duals_suite():
    report = run_suite("duals", (3, 4), sample_size=50)
    assert report.passed, report.to_string()
    exhaustive = report.checks[(report.checks["check"] == "four-way agreement") & (report.checks["n"] > 0)]
    assert exhaustive["checked"].tolist() == [3, 16]


@pytest.mark.parametrize("suite", SUITES)
def test_each_suite_passes(suite):
    report = run_suite(suite, (3, 4), sample_size=30)
    assert report.passed, report.to_string()
    assert set(report.checks["suite"]) == {suite}


def test_all_suites():
    report = run_suite("all", (3, 5), sample_size=100)
    assert report.passed, report.to_string()
    assert set(report.checks["suite"]) == set(SUITES)


def test_tdc_suite_on_the_non_realizable_cover():
    report = run_suite("tdc", fixture="two_triangles")
    assert not report.passed
    failure = report.failures.iloc[0]
    assert failure["check"] == "realizable"
    assert failure["detail"] == "not realizable: 1 -> 2 -> 3 -> 4 -> 5 -> 6 -> 1"
    assert TrailDoubleCover.parse(failure["counterexample"]) == get_fixture("two_triangles")
    assert "result: fail" in report.to_string()


def test_tdc_suite_on_the_realizable_cover():
    assert run_suite("tdc", fixture="four_vertex_migts").passed


def test_reports_are_reproducible():
    first = run_suite("duals", (3, 4), seed=7, sample_size=40)
    second = run_suite("duals", (3, 4), seed=7, sample_size=40)
    assert first.to_json() == second.to_json()
    assert first.to_string() == second.to_string()


def test_timing_is_only_reported_on_request():
    assert "seconds" not in json.loads(run_suite("count", (3, 3)).to_json())
    assert "seconds" in json.loads(run_suite("count", (3, 3), timing=True).to_json())


def test_json_report():
    report = json.loads(run_suite("count", (3, 4)).to_json())
    assert report["result"] == "pass"
    assert report["command"] == "verify --suite count --n 3..4"
    assert {check["scope"] for check in report["checks"]} == {"F↓3", "F↓4"}


def test_invalid_suite():
    with pytest.raises(ValueError, match="suite"):
        run_suite("everything")
    with pytest.raises(ValueError, match="fixture"):
        run_suite("duals", fixture="two_triangles")


def test_sampled_suites_warn_when_the_sample_is_too_large(caplog, monkeypatch):
    import permdual.options as opt

    monkeypatch.setattr(opt, "exhaustive_limit", 3)
    report = run_suite("structural", (4, 4), sample_size=100)
    assert report.checks["checked"].tolist() == [16]
    assert "larger than F↓4" in caplog.text


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["duals", "tdc"])
def test_random_suites_at_acceptance_size(suite):
    assert run_suite(suite, (3, 6), sample_size=10000).passed


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["structural", "chord", "bijection"])
def test_sampled_suites_at_acceptance_size(suite):
    assert run_suite(suite, (7, 8), sample_size=10000).passed


def _first_failure(report, check):
    failures = report.failures
    return failures[failures["check"] == check].iloc[0]


def test_dual_counterexamples_are_sequences(monkeypatch):
    def report_with_a_wrong_trail_dual(s):
        report = dual_equivalence_report(s)
        return DualReport(s, {**report.duals, "trail": s})

    monkeypatch.setattr(verify, "dual_equivalence_report", report_with_a_wrong_trail_dual)
    failure = _first_failure(run_suite("duals", (3, 3), sample_size=5), "four-way agreement")
    assert TranspositionSequence.parse(failure["counterexample"]) in set(enumerate_Fdown(3))
    assert "trail" in failure["detail"]


def test_cover_counterexamples_are_graphs(monkeypatch):
    monkeypatch.setattr(verify, "tdc_validate", lambda cover: CoverReport((Violation("end", "forced"),)))
    failure = _first_failure(run_suite("tdc", (3, 3), sample_size=5), "MIGTs form a Trail Double Cover")
    assert LabeledMultigraph.parse(failure["counterexample"]).n >= 2
    assert failure["detail"] == "end: forced"


def test_structural_counterexamples_are_sequences(monkeypatch):
    monkeypatch.setattr(verify, "verify_structural", lambda s: StructuralReport(s, "forced"))
    failure = _first_failure(run_suite("structural", (4, 4)), "partitions and indices")
    assert TranspositionSequence.parse(failure["counterexample"]).n == 4
    assert failure["detail"] == "forced"


def test_chord_counterexamples_are_sequences(monkeypatch):
    monkeypatch.setattr(verify, "check_noncrossing", lambda diagram: PropertyCheck("non-crossing", (1, 2)))
    failure = _first_failure(run_suite("chord", (4, 4)), "non-crossing")
    assert TranspositionSequence.parse(failure["counterexample"]).n == 4
    assert failure["detail"] == "non-crossing: fails at (1, 2)"


def test_bijection_counterexamples_are_sequences(monkeypatch):
    monkeypatch.setattr(verify, "bijection_B_inverse", lambda tree: TranspositionSequence(tree.n, []))
    failure = _first_failure(run_suite("bijection", (4, 4)), "B⁻¹ ∘ B is the identity")
    assert len(TranspositionSequence.parse(failure["counterexample"])) == 3


def test_failures_are_printed_with_their_detail():
    text = run_suite("tdc", fixture="two_triangles").to_string()
    assert str(get_fixture("two_triangles")) in text
    assert text.index("trails:") < text.index("not realizable")
