"""
Counts Schreier sets that are singletons or arithmetic progressions with a fixed difference.

Sr(n, p, q) is the number of sets F in [n] with p * min F >= |F| that are either
a singleton or an arithmetic progression with difference q. Three ways of
computing it live here: exhaustive enumeration (the reference every other path
is checked against), the partial sum of the step sizes, and the step sizes
themselves written per residue class.

All arithmetic is on python integers; floors and ceilings are integer
divisions, so no value is ever rounded.
"""

from itertools import accumulate
from typing import Iterator, List

from schreier.counting.params import (APSet, FamilyMismatchError, ParameterError, SchreierParams,
                                      ZERO_BASED, decompose, validate)

BRUTE = "brute"
SUM = "sum"
METHODS = (BRUTE, SUM)


def is_admissible(f: APSet, params: SchreierParams) -> bool:
    """
    Checks whether F lies in [n] and satisfies p * min F >= |F|.
    :param f: the candidate set
    :param params: the counting parameters, params.q must be the difference of f
    :return: True when F is counted by Sr(n, p, q)
    :raises FamilyMismatchError: when f is a progression with another difference
    """
    if f.length > 1 and f.difference != params.q:
        raise FamilyMismatchError("progression with difference %d checked against q=%d"
                                  % (f.difference, params.q))
    return f.maximum <= params.n and params.p * f.minimum >= f.length


def _max_length(start: int, params: SchreierParams) -> int:
    # longest progression from start that stays in [n] and keeps p * start >= length
    return min(params.p * start, (params.n - start) // params.q + 1)


def enumerate_admissible(params: SchreierParams) -> Iterator[APSet]:
    """
    Yields every counted set once, ordered by (start, length).

    Singletons are yielded once, as length one progressions, whatever q is.
    """
    for start in range(1, params.n + 1):
        for length in range(1, _max_length(start, params) + 1):
            yield APSet(start, length, params.q)


def sr_bruteforce(params: SchreierParams) -> int:
    """
    Counts the sets yielded by enumerate_admissible.
    """
    return sum(1 for _ in enumerate_admissible(params))


def sr_partial_sum(params: SchreierParams) -> int:
    """
    Returns 1 + sum over 1 <= i < n of floor(p(i + q + 1) / (pq + 1)).
    """
    p, q = params.p, params.q
    return 1 + sum(sr_difference_floor(i, p, q) for i in range(1, params.n))


def sr_difference_floor(n: int, p: int, q: int) -> int:
    """
    The closed form floor(p(n + q + 1) / (pq + 1)) of Sr(n + 1, p, q) - Sr(n, p, q).
    """
    validate(n, p, q)
    return p * (n + q + 1) // (p * q + 1)


def sr_difference(n: int, p: int, q: int) -> int:
    """
    Returns Sr(n + 1, p, q) - Sr(n, p, q) by the residue of n modulo pq + 1.

    With n = (pq + 1) * ell + k and 0 <= k <= pq the step is
    floor((n - ell - 1) / q) + 1 when (p - 1)q < k <= pq, and
    floor((n - ell) / q) + 1 otherwise.
    """
    validate(n, p, q)
    ell, k = decompose(n, p * q + 1, ZERO_BASED)
    if (p - 1) * q < k <= p * q:
        return (n - ell - 1) // q + 1
    return (n - ell) // q + 1


def largest_tail_set(n: int, p: int, q: int) -> APSet:
    """
    The largest counted set of [n + 1] whose maximum is n + 1.

    Every set added when the universe grows from [n] to [n + 1] is obtained from
    this one by dropping its smallest elements, so its length is the step size.
    """
    validate(n, p, q)
    # p * a >= (n + 1 - a) / q + 1  <=>  a * (pq + 1) >= n + 1 + q
    lowest = -(-(n + 1 + q) // (p * q + 1))
    length = (n + 1 - lowest) // q + 1
    return APSet(n + 1 - (length - 1) * q, length, q)


def sr_interval_bruteforce(n: int, p: int) -> int:
    """
    Counts the intervals {a, ..., b} in [n] with p * a >= b - a + 1.

    Independent of the progression machinery above; Sr(n, p, 1) must agree with it.
    """
    validate(n, p, 1)
    count = 0
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            if p * a >= b - a + 1:
                count += 1
    return count


def sr_interval_difference(n: int, p: int) -> int:
    """
    Returns Sr(n + 1, p) - Sr(n, p) = n + 2 - ceil((n + 2) / (p + 1)).
    """
    validate(n, p, 1)
    return n + 2 - (-(-(n + 2) // (p + 1)))


def sr_sequence(p: int, q: int, n_max: int, method: str = SUM) -> List[int]:
    """
    Returns [Sr(1, p, q), ..., Sr(n_max, p, q)].
    :param method: BRUTE enumerates the sets of [n_max] once and counts them by maximum,
                   SUM accumulates the closed form steps
    """
    params = validate(n_max, p, q)
    if method == BRUTE:
        # the sets of [n] are exactly the sets of [n_max] with maximum <= n
        by_maximum = [0] * (n_max + 1)
        for f in enumerate_admissible(params):
            by_maximum[f.maximum] += 1
        return list(accumulate(by_maximum[1:]))
    if method == SUM:
        values = [1]
        for n in range(1, n_max):
            values.append(values[-1] + sr_difference_floor(n, p, q))
        return values
    raise ParameterError("unknown method %r, expected one of %s" % (method, ", ".join(METHODS)))
