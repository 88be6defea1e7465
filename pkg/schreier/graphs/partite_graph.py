"""
Value types of the grown multipartite graphs.

Vertex ids are 1-based insertion indices. Parts are referred to by their
0-based index in the part list; empty parts are kept so indices never shift.
"""

from typing import List, Optional, Sequence, Tuple

import networkx as nx

from schreier.counting.params import ONE_BASED, decompose, validate

FULL = "FULL"
MIDDLE = "MIDDLE"
LOW = "LOW"


class GrowthCase(object):
    """
    The branch of the growth rule that adds vertex n + 1 to an n-vertex graph with p parts.

    Writing n = p * ell + k with 1 <= k <= p, there are k parts of size ell + 1
    and p - k parts of size ell. The step is FULL when k = p, MIDDLE when
    p - q < k < p and LOW when k <= p - q.
    """

    __slots__ = ('n', 'parts', 'q', 'ell', 'k', 'case_tag')

    def __init__(self, n: int, parts: int, q: int, ell: int, k: int, case_tag: str):
        self.n = n
        self.parts = parts
        self.q = q
        self.ell = ell
        self.k = k
        self.case_tag = case_tag

    def candidate_count(self) -> int:
        """
        Size of the candidate set V, which only depends on the size census.
        """
        if self.case_tag == FULL:
            return (self.parts - 1) * (self.ell + 1)
        if self.case_tag == MIDDLE:
            return (self.parts - self.k) * self.ell + (self.k - 1) * (self.ell + 1)
        return self.n - self.ell

    def __eq__(self, o: object) -> bool:
        return isinstance(o, GrowthCase) and all(getattr(o, s) == getattr(self, s) for s in self.__slots__)

    def __repr__(self):
        return "GrowthCase(%s, n=%d, ell=%d, k=%d)" % (self.case_tag, self.n, self.ell, self.k)


def classify(n: int, parts: int, q: int = 1) -> GrowthCase:
    """
    Returns the growth case of the step from n to n + 1 vertices.
    """
    validate(n, parts, q)
    ell, k = decompose(n, parts, ONE_BASED)
    if k == parts:
        tag = FULL
    elif parts - q < k:
        tag = MIDDLE
    else:
        tag = LOW
    return GrowthCase(n, parts, q, ell, k, tag)


class StepRecord(object):
    """
    What happened when one vertex was added.
    """

    __slots__ = ('vertex', 'case', 'host', 'excluded', 'candidates', 'neighbours')

    def __init__(self, vertex: int, case: GrowthCase, host: int, excluded: Optional[int],
                 candidates: Sequence[int], neighbours: Sequence[int]):
        self.vertex = vertex
        self.case = case
        self.host = host
        self.excluded = excluded
        self.candidates = tuple(candidates)
        self.neighbours = tuple(neighbours)

    @property
    def new_edges(self) -> int:
        return len(self.neighbours)

    def __repr__(self):
        return "StepRecord(vertex=%d, %s, +%d)" % (self.vertex, self.case.case_tag, self.new_edges)


class PartiteGraph(object):
    """
    An immutable snapshot of a grown graph.

    Edges are stored as a sorted tuple of (smaller id, larger id) pairs, so two
    graphs with the same parts and edges compare and serialize identically.
    """

    def __init__(self, parts: Sequence[Sequence[int]], edges, steps: Sequence[StepRecord] = ()):
        self._parts = tuple(tuple(part) for part in parts)
        self._edges = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
        self._steps = tuple(steps)

    @property
    def parts(self) -> Tuple[Tuple[int, ...], ...]:
        return self._parts

    @property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        return self._edges

    @property
    def steps(self) -> Tuple[StepRecord, ...]:
        return self._steps

    @property
    def vertex_order(self) -> Tuple[int, ...]:
        return tuple(range(1, self.vertex_count + 1))

    @property
    def vertex_count(self) -> int:
        return sum(len(part) for part in self._parts)

    def part_sizes(self) -> List[int]:
        return [len(part) for part in self._parts]

    def part_of(self, vertex: int) -> int:
        for index, part in enumerate(self._parts):
            if vertex in part:
                return index
        raise KeyError(vertex)

    def is_balanced(self) -> bool:
        sizes = self.part_sizes()
        return max(sizes) - min(sizes) <= 1

    def to_networkx(self) -> nx.Graph:
        """
        The graph as a networkx.Graph whose nodes carry their part index.
        """
        graph = nx.Graph()
        for index, part in enumerate(self._parts):
            graph.add_nodes_from(part, part=index)
        graph.add_edges_from(self._edges)
        return graph

    def __eq__(self, o: object) -> bool:
        return isinstance(o, PartiteGraph) and o.parts == self.parts and o.edges == self.edges

    def __hash__(self):
        return hash((self._parts, self._edges))

    def __repr__(self):
        return "PartiteGraph(vertices=%d, parts=%d, edges=%d)" % (
            self.vertex_count, len(self._parts), len(self._edges))
