"""
The two counting lemmas behind the identities, as directly testable predicates.
"""

from schreier.counting.params import ParameterError, validate


class LemmaHypothesisError(ParameterError):
    """
    Raised when a lemma is evaluated outside the range it is stated for.
    """


def lemma1_count(N: int, q: int) -> int:
    """
    Number of positions among 1..N numbered 1 when numbering cyclically 1..q.
    """
    validate(N, q)
    return (N - 1) // q + 1


def lemma2_holds(k: int, p: int, q: int) -> bool:
    """
    Checks floor(k / q) == floor((pk + p - 1) / (pq + 1)) for 1 <= k <= (p - 1)q.
    :raises LemmaHypothesisError: when k is outside [1, (p - 1)q]
    """
    validate(k, p, q)
    if k > (p - 1) * q:
        raise LemmaHypothesisError("k=%d outside [1, %d]" % (k, (p - 1) * q))
    return k // q == (p * k + p - 1) // (p * q + 1)


def lemma2_boundary_holds(k: int, p: int, q: int) -> bool:
    """
    Checks floor((pk + p - 1) / (pq + 1)) == floor((k - 1) / q) == p - 1 for (p - 1)q < k <= pq.
    :raises LemmaHypothesisError: when k is outside ((p - 1)q, pq]
    """
    validate(k, p, q)
    if not (p - 1) * q < k <= p * q:
        raise LemmaHypothesisError("k=%d outside (%d, %d]" % (k, (p - 1) * q, p * q))
    return (p * k + p - 1) // (p * q + 1) == (k - 1) // q == p - 1
