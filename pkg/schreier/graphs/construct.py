"""
Grows the graphs M(n, p), M(n, p, q) and T(n, p, q) one vertex at a time.

All three start from one vertex in one of p parts. The step adding vertex
n + 1 depends on the growth case of n (see partite_graph.classify):

- FULL: the vertex may join any part. It is joined to its own part and to
  every other part except a chosen part P.
- MIDDLE: the vertex joins a smallest part. It is joined to its own part and
  to every other part except a chosen part P of size ell + 1.
- LOW: the vertex joins a smallest part and is joined to every other part.

The vertices it would be joined to form the candidate set V. For M graphs all
of V become neighbours; for T graphs V is numbered 1..q cyclically in policy
order and only the vertices numbered 1 become neighbours.
"""

from typing import List, Optional

from schreier.counting.params import validate
from schreier.graphs.partite_graph import FULL, LOW, MIDDLE, PartiteGraph, StepRecord, classify
from schreier.graphs.policy import ChoicePolicy, PolicyError, canonical
from schreier.utilities import logger

log_name = "graphs.construct"  # Used for identifying the origin of the log message.

M = "M"
MQ = "Mq"
T = "T"
FAMILIES = (M, MQ, T)


class ConstructionError(ValueError):
    """
    Raised when the growth rule asks for a part that does not exist.
    """


class Grower(object):
    """
    Incremental construction of one graph of a family.
    """

    def __init__(self, p: int, q: int = 1, family: str = T, policy: Optional[ChoicePolicy] = None):
        """
        Creates the one-vertex graph with p parts.
        :param p: number of parts
        :param q: progression difference, ignored for the M family
        :param family: one of M, MQ or T
        :param policy: resolution of the free choices, canonical when omitted
        """
        validate(1, p, q)
        if family not in FAMILIES:
            raise ValueError("unknown family %r, expected one of %s" % (family, ", ".join(FAMILIES)))
        self.p = p
        self.q = 1 if family == M else q
        self.family = family
        self.policy = policy or canonical

        self.parts = [[] for _ in range(p)]
        self.edges = set()
        self.steps = []
        # edge_counts[i] is the edge count of the graph on i + 1 vertices
        self.edge_counts = [0]

        first = self._choose_host(list(range(p)))
        self.parts[first].append(1)

    @property
    def vertex_count(self) -> int:
        return len(self.edge_counts)

    def sizes(self) -> List[int]:
        return [len(part) for part in self.parts]

    def _choose_host(self, eligible):
        host = self.policy.host_part(eligible, self.sizes())
        if host not in eligible:
            raise PolicyError("host part %r is not eligible, expected one of %s" % (host, eligible))
        return host

    def _choose_excluded(self, candidates, host):
        excluded = self.policy.excluded_part(candidates, host, self.sizes())
        if excluded not in candidates:
            raise PolicyError("excluded part %r is not valid, expected one of %s" % (excluded, candidates))
        return excluded

    def _order(self, candidates):
        ordered = list(self.policy.order_candidates(candidates))
        if sorted(ordered) != candidates:
            raise PolicyError("candidate order is not a permutation of the candidate set")
        return ordered

    def grow(self) -> StepRecord:
        """
        Adds the next vertex.
        :return: the record of the step
        """
        n = self.vertex_count
        case = classify(n, self.p, self.q)
        sizes = self.sizes()

        if case.case_tag == FULL:
            host = self._choose_host(list(range(self.p)))
            others = [i for i in range(self.p) if i != host]
            # with a single part the own part is the one skipped
            excluded = self._choose_excluded(others, host) if others else host
        else:
            host = self._choose_host([i for i in range(self.p) if sizes[i] == case.ell])
            excluded = None
            if case.case_tag == MIDDLE:
                larger = [i for i in range(self.p) if sizes[i] == case.ell + 1]
                if not larger:
                    logger.error("no part of size %d at %r" % (case.ell + 1, case), log_name)
                    raise ConstructionError("no part of size %d to exclude at %r" % (case.ell + 1, case))
                excluded = self._choose_excluded(larger, host)

        if case.case_tag == LOW:
            joined = [i for i in range(self.p) if i != host]
        else:
            joined = [i for i in range(self.p) if i != excluded]
        candidates = sorted(vertex for i in joined for vertex in self.parts[i])

        ordered = self._order(candidates)
        neighbours = ordered[::self.q] if self.family == T else ordered

        vertex = n + 1
        self.parts[host].append(vertex)
        self.edges.update((u, vertex) for u in neighbours)
        self.edge_counts.append(self.edge_counts[-1] + len(neighbours))

        record = StepRecord(vertex, case, host, excluded, ordered, neighbours)
        self.steps.append(record)
        return record

    def grow_to(self, n: int) -> 'Grower':
        while self.vertex_count < n:
            self.grow()
        return self

    def graph(self) -> PartiteGraph:
        return PartiteGraph(self.parts, self.edges, self.steps)


def build(family: str, n: int, p: int, q: int = 1, policy: Optional[ChoicePolicy] = None) -> PartiteGraph:
    validate(n, p, q)
    return Grower(p, q, family, policy).grow_to(n).graph()


def build_M(n: int, p: int, policy: Optional[ChoicePolicy] = None) -> PartiteGraph:
    """
    The graph M(n, p): a Turán graph where full steps trade one other part for the own part.
    """
    return build(M, n, p, 1, policy)


def build_Mq(n: int, p: int, q: int, policy: Optional[ChoicePolicy] = None) -> PartiteGraph:
    """
    The graph M(n, p, q), with the three-case growth rule.
    """
    return build(MQ, n, p, q, policy)


def build_T(n: int, p: int, q: int, policy: Optional[ChoicePolicy] = None) -> PartiteGraph:
    """
    The graph T(n, p, q): M(n, p, q) keeping only every q-th candidate.
    """
    return build(T, n, p, q, policy)


def edge_count(g: PartiteGraph) -> int:
    return len(g.edges)


def t_sequence(p: int, q: int, n_max: int) -> List[int]:
    """
    Returns [T(2, pq + 1, q), ..., T(n_max + 1, pq + 1, q)] from a single construction.
    """
    validate(n_max, p, q)
    grower = Grower(p * q + 1, q, T).grow_to(n_max + 1)
    return grower.edge_counts[1:]
