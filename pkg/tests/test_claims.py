"""End-to-end claim verification through the verifier service"""

import pytest

from grasschar import __version__
from grasschar.core.exceptions import AlignmentError, UnknownClaimError, UnsupportedParameterError
from grasschar.services.ring_registry import RingRegistry
from grasschar.services.verifier_service import VerifierService, evaluate
from grasschar.verifier.catalog import ClaimDefinition, get_claim, load_manifest
from grasschar.verifier.claims import Evidence
from grasschar.verifier.models import ClaimParams, ClaimStatus


@pytest.fixture(scope="module")
def service() -> VerifierService:
    svc = VerifierService(registry=RingRegistry())
    svc.initialize()
    yield svc
    svc.shutdown()


@pytest.fixture(scope="module")
def reports_t3(service):
    return service.run_all(3, 3)


class TestRunAll:
    def test_nothing_fails_at_t3(self, reports_t3):
        failed = [(r.claim_id, r.params.describe(), r.witnesses) for r in reports_t3 if r.status is ClaimStatus.FAIL]
        assert failed == []

    def test_every_parameter_set_reported(self, reports_t3):
        assert len(reports_t3) == 35
        assert reports_t3 == sorted(reports_t3, key=lambda r: r.sort_key())

    def test_vacuous_range_is_skipped(self, reports_t3):
        [report] = [r for r in reports_t3 if r.claim_id == "lemma-3.5"]
        assert report.status is ClaimStatus.SKIPPED
        assert report.witnesses[0].label == "reason"

    def test_kernel_claims_report_dimensions(self, reports_t3):
        for claim_id in ("prop-3.2", "prop-3.4", "prop-4.1", "prop-5.1"):
            [report] = [r for r in reports_t3 if r.claim_id == claim_id]
            assert report.status is ClaimStatus.PASS
            assert any("kernel dimension 0" in w.value for w in report.witnesses)

    def test_a_cubed_depends_on_gamma(self, reports_t3):
        by_gamma = {r.params.gamma: r for r in reports_t3 if r.claim_id == "prop-3.6"}
        assert set(by_gamma) == {0, 1}
        assert all(r.status is ClaimStatus.PASS for r in by_gamma.values())
        assert any(w.label == "NF(a^3)" and w.value != "NF(a^3) = 0" for w in by_gamma[0].witnesses)

    def test_status_reported(self, service, reports_t3):
        status = service.get_status()
        assert status["version"] == __version__
        assert status["initialized"]
        assert status["claims"] == 23
        assert status["reports_run"] >= len(reports_t3)

    def test_rerun_on_shared_registry_is_identical(self, service, reports_t3):
        rings_before = dict(service.registry.rings)
        sealed = {key: ring.sealed_to for key, ring in rings_before.items()}
        again = service.run_all(3, 3)
        assert [r.stable_json() for r in again] == [r.stable_json() for r in reports_t3]
        assert dict(service.registry.rings) == rings_before
        assert {key: ring.sealed_to for key, ring in service.registry.rings.items()} == sealed

    @pytest.mark.slow
    def test_rerun_through_t4_is_identical(self):
        registry = RingRegistry()
        svc = VerifierService(registry=registry)
        first = [r.stable_json() for r in svc.run_all(3, 4)]
        sealed = {key: ring.sealed_to for key, ring in registry.rings.items()}
        second = [r.stable_json() for r in svc.run_all(3, 4)]
        assert second == first
        assert {key: ring.sealed_to for key, ring in registry.rings.items()} == sealed

    @pytest.mark.slow
    def test_nothing_fails_at_t4(self, service):
        reports = service.run_all(4, 4)
        assert [r.claim_id for r in reports if r.status is ClaimStatus.FAIL] == []


class TestRunClaim:
    def test_cap_skips_without_computing(self, service):
        report = service.run_claim("prop-3.2", ClaimParams(t=6))
        assert report.status is ClaimStatus.SKIPPED
        assert report.witnesses[0].value == "cap"

    def test_global_claim(self, service):
        assert service.run_claim("g-recurrence").status is ClaimStatus.PASS

    def test_needs_t(self, service):
        with pytest.raises(UnsupportedParameterError):
            service.run_claim("g-vanish")
        with pytest.raises(UnsupportedParameterError):
            service.run_claim("g-vanish", ClaimParams(t=9))

    def test_unknown(self, service):
        with pytest.raises(UnknownClaimError):
            service.run_claim("prop-0.0", ClaimParams(t=3))

    def test_subset_in_parallel_matches_sequential(self, tmp_path):
        from grasschar.services.gb_cache import GbCacheStore

        ids = ["g-vanish", "fukaya-lm", "ideal-eq-2t"]
        sequential = VerifierService(registry=RingRegistry()).run_all(3, 4, ids)
        parallel = VerifierService(registry=RingRegistry(cache=GbCacheStore(tmp_path))).run_all(3, 4, ids, workers=2)
        assert [r.stable_json() for r in parallel] == [r.stable_json() for r in sequential]


class TestEvaluate:
    entry = load_manifest()["g-vanish"]

    def test_failed_check_carries_witnesses(self):
        def check(ctx, params, ev: Evidence):
            ev.check(False, "identity", "always fails")

        report = evaluate(ClaimDefinition(self.entry, check), ClaimParams(t=3), RingRegistry())
        assert report.status is ClaimStatus.FAIL
        assert report.witnesses[0].value == "always fails"

    def test_library_errors_become_failures(self):
        def check(ctx, params, ev: Evidence):
            ev.note("step", "before")
            raise AlignmentError("mismatched tables")

        report = evaluate(ClaimDefinition(self.entry, check), ClaimParams(t=3), RingRegistry())
        assert report.status is ClaimStatus.FAIL
        assert report.witnesses[-1].label == "error"
        assert "mismatched tables" in report.witnesses[-1].value

    def test_lookup_errors_become_failures(self):
        def check(ctx, params, ev: Evidence):
            return {}[params.t]

        report = evaluate(ClaimDefinition(self.entry, check), ClaimParams(t=3), RingRegistry())
        assert report.status is ClaimStatus.FAIL
        assert report.witnesses[-1].value.startswith("KeyError")

    def test_registered_check_runs_directly(self):
        report = evaluate(get_claim("g-c-div-4"), ClaimParams(t=5), RingRegistry())
        assert report.status is ClaimStatus.PASS
