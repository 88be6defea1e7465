"""
Policies resolving the free choices of the graph growth rule.

A growth step may leave three things open: which eligible part receives the
new vertex, which part is skipped, and in which order the candidate vertices
are numbered. The edge counts do not depend on these choices; the concrete
graphs do.
"""

import random
from abc import ABCMeta, abstractmethod
from typing import List, Sequence


class PolicyError(ValueError):
    """
    Raised when a policy returns a choice the growth rule does not allow.
    """


class ChoicePolicy(metaclass=ABCMeta):

    @abstractmethod
    def host_part(self, eligible: Sequence[int], sizes: Sequence[int]) -> int:
        """
        Chooses the part receiving the new vertex.
        :param eligible: indices of the parts the vertex may join
        :param sizes: current size of every part
        :return: one of the eligible indices
        """

    @abstractmethod
    def excluded_part(self, candidates: Sequence[int], host: int, sizes: Sequence[int]) -> int:
        """
        Chooses the part P whose vertices are skipped.
        :param candidates: indices of the parts that may be skipped
        :param host: index of the part receiving the new vertex
        :param sizes: current size of every part
        :return: one of the candidate indices
        """

    @abstractmethod
    def order_candidates(self, candidates: Sequence[int]) -> List[int]:
        """
        Orders the candidate set V before it is numbered 1..q cyclically.
        :param candidates: the vertex ids of V in ascending order
        :return: a permutation of candidates
        """


class CanonicalPolicy(ChoicePolicy):
    """
    Lowest index host, lowest index excluded part, ascending vertex ids.
    """

    def host_part(self, eligible, sizes):
        return min(eligible)

    def excluded_part(self, candidates, host, sizes):
        return min(candidates)

    def order_candidates(self, candidates):
        return sorted(candidates)

    def __repr__(self):
        return "CanonicalPolicy()"


class RandomPolicy(ChoicePolicy):
    """
    Uniform random choices from a seeded generator, reproducible per seed.
    """

    def __init__(self, seed=None):
        self.seed = seed
        self.random = random.Random(seed)

    def host_part(self, eligible, sizes):
        return self.random.choice(list(eligible))

    def excluded_part(self, candidates, host, sizes):
        return self.random.choice(list(candidates))

    def order_candidates(self, candidates):
        ordered = list(candidates)
        self.random.shuffle(ordered)
        return ordered

    def __repr__(self):
        return "RandomPolicy(seed=%r)" % (self.seed,)


canonical = CanonicalPolicy()
