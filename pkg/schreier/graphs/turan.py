"""
Closed forms for edge counts, used as oracles for the constructed graphs.
"""

from schreier.counting.params import ParameterError, ZERO_BASED, decompose, validate


def turan_edge_count(n: int, p: int) -> int:
    """
    Edge count of the Turán graph T(n, p), the complete p-partite graph with balanced parts.

    With n = p * ell + k and 0 <= k < p there are k parts of size ell + 1 and
    p - k parts of size ell; every pair of vertices in different parts is an edge.
    """
    if not isinstance(n, int) or n < 0:
        raise ParameterError("n must be a non-negative integer, got %r" % (n,))
    validate(1, p)
    ell, k = decompose(n, p, ZERO_BASED)
    return (n * n - k * (ell + 1) ** 2 - (p - k) * ell ** 2) // 2


def turan_delta(n: int, p: int) -> int:
    """
    Returns T(n + 2, p + 1) - T(n + 1, p + 1).

    With n = (p + 1) * ell + k and 0 <= k <= p the new vertex adds n - ell edges
    when k = p and n - ell + 1 edges otherwise.
    """
    validate(n, p)
    ell, k = decompose(n, p + 1, ZERO_BASED)
    if k == p:
        return n - ell
    return n - ell + 1


def growth_delta(n: int, p: int, q: int) -> int:
    """
    Returns T(n + 2, pq + 1, q) - T(n + 1, pq + 1, q).

    With n = (pq + 1) * ell + k and 0 <= k <= pq, the step from n + 1 vertices is
    FULL when k = pq, MIDDLE when (p - 1)q < k < pq and LOW otherwise. FULL and
    MIDDLE steps add floor((n - ell - 1) / q) + 1 edges, LOW steps
    floor((n - ell) / q) + 1.
    """
    validate(n, p, q)
    ell, k = decompose(n, p * q + 1, ZERO_BASED)
    if k == p * q:
        return (p * q * (ell + 1) - 1) // q + 1
    if (p - 1) * q < k:
        return (n - ell - 1) // q + 1
    return (n - ell) // q + 1
