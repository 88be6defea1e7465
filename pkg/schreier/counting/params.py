"""
Value types shared by the counting and the graph code.

A counting problem is parameterized by a triple (n, p, q): the universe is
[n] = {1, ..., n}, a set F is Schreier when p * min F >= |F|, and only sets
that are singletons or arithmetic progressions with difference q are counted.
"""

ONE_BASED = "one_based"
ZERO_BASED = "zero_based"


class ParameterError(ValueError):
    """
    Raised for parameters outside the range a computation is defined on.
    """


class FamilyMismatchError(ParameterError):
    """
    Raised when a progression of another difference is checked against q.
    """


def _require_positive(**values):
    for name, value in values.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ParameterError("%s must be a positive integer, got %r" % (name, value))


class SchreierParams(object):
    """
    The triple (n, p, q) of positive integers.
    """

    def __init__(self, n: int, p: int, q: int):
        _require_positive(n=n, p=p, q=q)
        self.n = n
        self.p = p
        self.q = q

    @property
    def parts(self) -> int:
        """
        Number of parts of the graph T(n+1, pq+1, q) matching these parameters.
        """
        return self.p * self.q + 1

    def as_tuple(self):
        return self.n, self.p, self.q

    def __eq__(self, o: object) -> bool:
        return isinstance(o, SchreierParams) and o.as_tuple() == self.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __lt__(self, o):
        # sweeps report in (p, q, n) order
        return (self.p, self.q, self.n) < (o.p, o.q, o.n)

    def __repr__(self):
        return "SchreierParams(n=%d, p=%d, q=%d)" % self.as_tuple()


class APSet(object):
    """
    The set {start, start + difference, ..., start + (length - 1) * difference}.

    A set of length one is a singleton and carries no meaningful difference,
    so two singletons compare equal whatever difference they were built with.
    """

    __slots__ = ('start', 'length', 'difference')

    def __init__(self, start: int, length: int, difference: int = 1):
        _require_positive(start=start, length=length, difference=difference)
        self.start = start
        self.length = length
        self.difference = difference

    @property
    def minimum(self) -> int:
        return self.start

    @property
    def maximum(self) -> int:
        return self.start + (self.length - 1) * self.difference

    def elements(self):
        return list(range(self.start, self.maximum + 1, self.difference))

    def _key(self):
        if self.length == 1:
            return self.start, 1, None
        return self.start, self.length, self.difference

    def __eq__(self, o: object) -> bool:
        return isinstance(o, APSet) and o._key() == self._key()

    def __hash__(self):
        return hash(self._key())

    def __len__(self):
        return self.length

    def __repr__(self):
        return "{%s}" % ", ".join(str(e) for e in self.elements())


def decompose(n: int, parts: int, convention: str = ONE_BASED):
    """
    Writes n = parts * ell + k.
    :param n: the number to divide
    :param parts: the modulus
    :param convention: ONE_BASED gives 1 <= k <= parts, ZERO_BASED gives 0 <= k < parts
    :return: the tuple (ell, k)
    """
    _require_positive(parts=parts)
    if convention == ONE_BASED:
        _require_positive(n=n)
        ell = (n - 1) // parts
        return ell, n - parts * ell
    if convention == ZERO_BASED:
        if not isinstance(n, int) or n < 0:
            raise ParameterError("n must be a non-negative integer, got %r" % (n,))
        return divmod(n, parts)
    raise ParameterError("unknown convention %r" % (convention,))


def validate(n: int, p: int, q: int = 1) -> SchreierParams:
    """
    Checks that n, p and q are positive integers.
    :return: the parameters as a SchreierParams
    :raises ParameterError: for any non-positive or non-integer value
    """
    return SchreierParams(n, p, q)
