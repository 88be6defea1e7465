import os
import tempfile
import unittest
from unittest import mock

from schreier.counting.params import SchreierParams
from schreier.graphs import construct
from schreier.graphs.partite_graph import MIDDLE, GrowthCase, StepRecord, classify
from schreier.utilities import logger
from schreier.verify import identity
from schreier.verify.identity import (FAIL, PASS, SweepSummary, VerificationReport, check_step, load_reports,
                                      policy_divergence, save_reports, sweep, verify_cell,
                                      verify_identity)

PUBLISHED_SR_2_2 = [1, 2, 4, 6, 8, 11, 14, 18, 22, 26, 31, 36, 42, 48, 54, 61, 68, 76, 84]


class TestVerifyIdentity(unittest.TestCase):

    def test_smallest(self):
        report = verify_identity(SchreierParams(1, 1, 1))
        self.assertTrue(report.passed)
        self.assertEqual((report.sr_bf, report.sr_sum, report.t_edges), (1, 1, 1))

    def test_published_terms(self):
        report = verify_identity(SchreierParams(6, 2, 2))
        self.assertEqual(report.status, PASS)
        self.assertEqual(report.t_edges, 11)
        report = verify_identity(SchreierParams(19, 2, 2))
        self.assertEqual((report.sr_bf, report.sr_sum, report.t_edges), (84, 84, 84))
        self.assertEqual(report.graph_delta, 8)
        self.assertEqual(report.sr_diff, 8)

    def test_cell(self):
        reports = verify_cell(2, 2, 19)
        self.assertEqual([r.t_edges for r in reports], PUBLISHED_SR_2_2)
        self.assertEqual([r.sr_bf for r in reports], PUBLISHED_SR_2_2)
        self.assertTrue(all(r.passed for r in reports))


class TestCheckStep(unittest.TestCase):

    def test_constructed_steps_pass(self):
        for p in range(1, 5):
            for q in range(1, 5):
                grower = construct.Grower(p * q + 1, q, construct.T).grow_to(30)
                for record in grower.steps:
                    self.assertIsNone(check_step(record, p, q))

    def test_wrong_candidate_count(self):
        record = StepRecord(4, classify(3, 5, 2), 3, None, [1, 2], [1])
        self.assertIn("size census", check_step(record, 2, 2))

    def test_wrong_numbering(self):
        record = StepRecord(4, classify(3, 5, 2), 3, None, [1, 2, 3], [1])
        self.assertIn("lemma1_count", check_step(record, 2, 2))

    def test_first_step(self):
        record = StepRecord(2, classify(1, 5, 2), 1, None, [1], [1])
        self.assertIsNone(check_step(record, 2, 2))


class TestFailures(unittest.TestCase):

    def test_report_detail(self):
        report = VerificationReport(SchreierParams(3, 1, 1), 4, 4, 5, 2, 2, True)
        self.assertEqual(report.status, FAIL)
        self.assertIn("graph edges 5", report.detail)

    @mock.patch.object(identity, 'growth_delta', return_value=0)
    def test_step_failure_is_recorded(self, growth_delta):
        reports = verify_cell(2, 2, 5)
        self.assertTrue(reports[0].passed)
        self.assertFalse(reports[1].passed)
        self.assertIn("growth_delta", reports[1].detail)
        self.assertFalse(any(r.passed for r in reports[1:]))
        # the counts themselves still agree
        self.assertEqual([r.t_edges for r in reports], PUBLISHED_SR_2_2[:5])

    @mock.patch.object(logger, 'error')
    @mock.patch.object(construct, 'classify', return_value=GrowthCase(1, 3, 3, 1, 1, MIDDLE))
    def test_construction_failure_is_recorded(self, classify, error):
        reports = verify_cell(1, 2, 3)
        self.assertEqual(len(reports), 3)
        self.assertTrue(all(r.t_edges is None for r in reports))
        self.assertTrue(all(r.status == FAIL for r in reports))
        self.assertIn("construction of T(2, 3, 2) failed", reports[2].detail)

    @mock.patch.object(logger, 'warning')
    @mock.patch.object(logger, 'error')
    @mock.patch.object(identity, 'verify_cell', side_effect=RuntimeError("boom"))
    def test_cell_exception_is_recorded(self, verify, error, warning):
        reports = sweep(3, 1, 2, threads=1)
        self.assertEqual(len(reports), 6)
        self.assertTrue(all("boom" in r.detail for r in reports))
        self.assertEqual(error.call_count, 2)
        warning.assert_called_once()


class TestPolicies(unittest.TestCase):

    def test_no_divergence(self):
        for p in range(1, 4):
            for q in range(1, 4):
                self.assertIsNone(policy_divergence(p, q, 25, 10, seed=0))

    @mock.patch.object(identity, 'policy_divergence', return_value=(3, "Mq(4, 5, 2) differs"))
    def test_divergence_fails_later_reports(self, divergence):
        reports = verify_cell(2, 2, 6, policies=5, seed=1)
        divergence.assert_called_once_with(2, 2, 6, 5, 1)
        self.assertTrue(all(r.passed for r in reports[:2]))
        self.assertFalse(any(r.passed for r in reports[2:]))
        self.assertEqual(reports[2].detail, "Mq(4, 5, 2) differs")

    @mock.patch.object(identity, 'policy_divergence', return_value=None)
    def test_seed_from_settings(self, divergence):
        settings = mock.Mock()
        settings.sweep_seed.return_value = 7
        with mock.patch.object(identity.schreier_settings, 'get_instance', return_value=settings):
            reports = verify_cell(1, 1, 3, policies=2)
        divergence.assert_called_once_with(1, 1, 3, 2, 7)
        self.assertTrue(all(r.passed for r in reports))

    def test_sweep_with_policies(self):
        summary = SweepSummary(sweep(12, 2, 2, threads=2, policies=5, seed=3))
        self.assertEqual(summary.total, 48)
        self.assertTrue(summary.ok)


class TestSweep(unittest.TestCase):

    def test_single_cell(self):
        reports = sweep(1, 1, 1, threads=1)
        self.assertEqual(len(reports), 1)
        self.assertTrue(reports[0].passed)

    def test_order(self):
        reports = sweep(19, 2, 2, threads=2)
        self.assertEqual(len(reports), 76)
        params = [r.params for r in reports]
        self.assertEqual(params, sorted(params))
        self.assertTrue(SweepSummary(reports).ok)

    def test_medium_grid(self):
        summary = SweepSummary(sweep(50, 4, 4, threads=4))
        self.assertEqual(summary.total, 800)
        self.assertEqual(summary.passed, 800)
        self.assertIsNone(summary.first_failure)

    def test_full_grid(self):
        summary = SweepSummary(sweep(100, 5, 5))
        self.assertEqual(summary.total, 2500)
        self.assertTrue(summary.ok)

    def test_threads_from_settings(self):
        settings = mock.Mock()
        settings.sweep_threads.return_value = 3
        with mock.patch.object(identity.schreier_settings, 'get_instance', return_value=settings):
            reports = sweep(4, 2, 1)
        settings.sweep_threads.assert_called_once_with()
        self.assertEqual(len(reports), 8)

    def test_summary_of_failures(self):
        good = VerificationReport(SchreierParams(1, 1, 1), 1, 1, 1, 1, 1, True)
        bad = VerificationReport(SchreierParams(2, 1, 1), 2, 2, 3, 2, 2, True)
        summary = SweepSummary([good, bad, bad])
        self.assertFalse(summary.ok)
        self.assertEqual(summary.passed, 1)
        self.assertIs(summary.first_failure, bad)


class TestPersistence(unittest.TestCase):

    def test_save_and_load(self):
        reports = verify_cell(2, 1, 6)
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'reports.json')
            save_reports(reports, path)
            loaded = load_reports(path)
        self.assertEqual([r.params for r in loaded], [r.params for r in reports])
        self.assertEqual([r.t_edges for r in loaded], [r.t_edges for r in reports])
        self.assertTrue(all(r.passed for r in loaded))


if __name__ == '__main__':
    unittest.main()
