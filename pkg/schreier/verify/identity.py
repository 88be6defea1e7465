"""
Cross-checks Sr(n, p, q) = T(n + 1, pq + 1, q) along every computation path.

For each (n, p, q) a report holds the brute force count, the partial sum of the
closed form steps and the edge count of the constructed graph. Every growth
step of the graph is audited too: its edge increment must equal growth_delta,
sr_difference, the floor closed form and lemma1_count of its candidate set.

Mismatches are recorded in the reports, never raised, so one bad cell does not
hide the rest of a sweep.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, List, Optional, Tuple

import jsonpickle

from schreier.counting.params import SchreierParams, validate
from schreier.counting.schreier_sets import sr_bruteforce, sr_difference, sr_difference_floor, sr_partial_sum
from schreier.graphs.construct import FAMILIES, ConstructionError, Grower, T
from schreier.graphs.partite_graph import StepRecord
from schreier.graphs.policy import PolicyError, RandomPolicy
from schreier.graphs.turan import growth_delta
from schreier.settings import schreier_settings
from schreier.utilities import logger
from schreier.verify.lemmas import lemma1_count

log_name = "verify.identity"  # Used for identifying the origin of the log message.

PASS = "pass"
FAIL = "fail"


class VerificationReport(object):
    """
    The values every computation path produced for one parameter triple.
    """

    def __init__(self, params: SchreierParams, sr_bf: int, sr_sum: int, t_edges: Optional[int],
                 sr_diff: int, graph_delta: Optional[int], deltas_ok: bool, detail: str = ""):
        self.params = params
        self.sr_bf = sr_bf
        self.sr_sum = sr_sum
        self.t_edges = t_edges
        self.sr_diff = sr_diff
        self.graph_delta = graph_delta
        self.deltas_ok = deltas_ok
        if not detail and not sr_bf == sr_sum == t_edges:
            detail = "Sr brute force %d, partial sum %d, graph edges %s" % (sr_bf, sr_sum, t_edges)
        self.detail = detail
        self.status = PASS if sr_bf == sr_sum == t_edges and deltas_ok else FAIL

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def fail(self, detail: str):
        self.status = FAIL
        self.detail = self.detail or detail

    def __repr__(self):
        n, p, q = self.params.as_tuple()
        text = "VerificationReport(n=%d, p=%d, q=%d, %s" % (n, p, q, self.status)
        return text + (": %s)" % self.detail if self.detail else ")")


class SweepSummary(object):

    def __init__(self, reports: List[VerificationReport]):
        self.total = len(reports)
        self.failures = [report for report in reports if not report.passed]
        self.passed = self.total - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Optional[VerificationReport]:
        return self.failures[0] if self.failures else None


def check_step(record: StepRecord, p: int, q: int) -> Optional[str]:
    """
    Audits one growth step of T(., pq + 1, q).
    :param record: the step adding vertex record.vertex
    :return: a description of the first disagreement, None when the step is consistent
    """
    added = record.new_edges
    size = len(record.candidates)
    if size != record.case.candidate_count():
        return "vertex %d: %d candidates, size census gives %d" % (record.vertex, size, record.case.candidate_count())
    if size and added != lemma1_count(size, q):
        return "vertex %d: %d new edges, lemma1_count(%d, %d) = %d" % (
            record.vertex, added, size, q, lemma1_count(size, q))
    n = record.vertex - 2
    if n == 0:
        # T(2, pq + 1, q) = Sr(1, p, q) = 1
        return None if added == 1 else "vertex 2: %d new edges, expected 1" % added
    expected = (("growth_delta", growth_delta(n, p, q)),
                ("sr_difference", sr_difference(n, p, q)),
                ("floor form", sr_difference_floor(n, p, q)))
    for name, value in expected:
        if added != value:
            return "vertex %d: %d new edges, %s(%d, %d, %d) = %d" % (record.vertex, added, name, n, p, q, value)
    return None


def _walk_cell(p: int, q: int, n_max: int) -> Iterator[Tuple[int, Optional[int], Optional[int], Optional[str]]]:
    """
    Grows T(n_max + 1, pq + 1, q) once and yields (n, edges of T(n + 1), last increment,
    first step failure so far) for n = 1..n_max.
    """
    grower = Grower(p * q + 1, q, T)
    failure = None
    broken = False
    for n in range(1, n_max + 1):
        if broken:
            yield n, None, None, failure
            continue
        try:
            record = grower.grow()
        except (ConstructionError, PolicyError) as e:
            failure = failure or "construction of T(%d, %d, %d) failed: %s" % (n + 1, p * q + 1, q, e)
            broken = True
            yield n, None, None, failure
            continue
        failure = failure or check_step(record, p, q)
        yield n, grower.edge_counts[-1], record.new_edges, failure


def _report(params: SchreierParams, t_edges, graph_delta, failure) -> VerificationReport:
    n, p, q = params.as_tuple()
    return VerificationReport(params,
                              sr_bf=sr_bruteforce(params),
                              sr_sum=sr_partial_sum(params),
                              t_edges=t_edges,
                              sr_diff=sr_difference_floor(n, p, q),
                              graph_delta=graph_delta,
                              deltas_ok=failure is None,
                              detail=failure or "")


def verify_identity(params: SchreierParams) -> VerificationReport:
    """
    Compares Sr(n, p, q) by brute force and by partial sums with the edge count of
    T(n + 1, pq + 1, q) grown with the canonical policy, auditing every step.
    """
    n, p, q = params.as_tuple()
    last = None
    for last in _walk_cell(p, q, n):
        pass
    _, t_edges, graph_delta, failure = last
    return _report(params, t_edges, graph_delta, failure)


def policy_divergence(p: int, q: int, n_max: int, count: int, seed: int = 0) -> Optional[Tuple[int, str]]:
    """
    Grows every family on pq + 1 parts under count random policies and compares the
    edge counts with the canonical construction.
    :param seed: the policies use the seeds seed, seed + 1, ..., seed + count - 1
    :return: the first n where the edge count of an (n + 1)-vertex graph differs and a
             description, None when no policy changed any count
    """
    parts = p * q + 1
    for family in FAMILIES:
        reference = Grower(parts, q, family).grow_to(n_max + 1).edge_counts
        for offset in range(count):
            policy = RandomPolicy(seed + offset)
            counts = Grower(parts, q, family, policy).grow_to(n_max + 1).edge_counts
            for n, (edges, expected) in enumerate(zip(counts, reference)):
                if edges != expected:
                    return n, "%s(%d, %d, %d) has %d edges under %r, %d canonically" % (
                        family, n + 1, parts, q, edges, policy, expected)
    return None


def verify_cell(p: int, q: int, n_max: int, policies: int = 0, seed: Optional[int] = None) -> List[VerificationReport]:
    """
    Verifies every n <= n_max for one (p, q), reusing a single incremental construction.
    :param policies: number of random policies the edge counts must not depend on, 0 skips the check
    :param seed: seed of the first random policy, from the settings when omitted
    """
    validate(n_max, p, q)
    reports = [_report(SchreierParams(n, p, q), t_edges, graph_delta, failure)
               for n, t_edges, graph_delta, failure in _walk_cell(p, q, n_max)]
    if policies > 0:
        if seed is None:
            seed = schreier_settings.get_instance().sweep_seed()
        divergence = policy_divergence(p, q, n_max, policies, seed)
        if divergence:
            n, detail = divergence
            for report in reports[n - 1:]:
                report.fail(detail)
    return reports


def _safe_cell(cell) -> List[VerificationReport]:
    p, q, n_max, policies, seed = cell
    try:
        return verify_cell(p, q, n_max, policies, seed)
    except Exception as e:
        logger.error("cell p=%d q=%d failed: %r" % (p, q, e), log_name)
        params = [SchreierParams(n, p, q) for n in range(1, n_max + 1)]
        return [VerificationReport(x, -1, -1, None, -1, None, False, "cell raised %r" % e) for x in params]


def sweep(n_max: int, p_max: int, q_max: int, threads: Optional[int] = None,
          policies: int = 0, seed: Optional[int] = None) -> List[VerificationReport]:
    """
    Runs the verification over 1 <= n <= n_max, 1 <= p <= p_max, 1 <= q <= q_max.
    :param threads: worker count, from the settings when omitted
    :param policies: random policies per cell, see verify_cell
    :param seed: seed of the first random policy, from the settings when omitted
    :return: the reports ordered by (p, q, n)
    """
    validate(n_max, p_max, q_max)
    if threads is None:
        threads = schreier_settings.get_instance().sweep_threads()
    if policies > 0 and seed is None:
        seed = schreier_settings.get_instance().sweep_seed()
    cells = [(p, q, n_max, policies, seed) for p in range(1, p_max + 1) for q in range(1, q_max + 1)]

    logger.log("sweeping n<=%d p<=%d q<=%d on %d threads" % (n_max, p_max, q_max, threads), log_name)
    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        reports = [report for cell in executor.map(_safe_cell, cells) for report in cell]

    summary = SweepSummary(reports)
    if summary.ok:
        logger.success("%d of %d reports passed" % (summary.passed, summary.total), log_name)
    else:
        logger.warning("%d of %d reports failed, first: %r" % (len(summary.failures), summary.total,
                                                               summary.first_failure), log_name)
    return reports


def save_reports(reports: List[VerificationReport], path: str):
    with open(path, 'w') as json_file:
        json_file.write(jsonpickle.encode(reports, indent=2))


def load_reports(path: str) -> List[VerificationReport]:
    with open(path) as json_file:
        return jsonpickle.decode(json_file.read())
