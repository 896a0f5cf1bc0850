import logging
import pprint
from .errors import DomainError, GuardExceededError
from .object import JsonSerializedObject
from .subset import check_subset, dominates, format_subset, full_subset, subset_from_indices, subset_to_indices

DEFAULT_MAX_SEQUENCE_N = 4

logger = logging.getLogger(__name__)


class SetSequence(JsonSerializedObject):
    """ A sequence (X_1, ..., X_n) of subsets of {1..n}; an element of M_n when monotone

    """
    __slots__ = ("n", "parts")

    def __init__(self, n, parts):
        """

        :param n: the length of the sequence and the size of the ground set
        :type n: int
        :param parts: n bitmasks
        :type parts: Iterable[int]
        """

        super().__init__()
        parts = tuple(parts)
        if len(parts) != n:
            raise DomainError("Error: a sequence of M_%d needs %d parts, but %d are given." % (n, n, len(parts)))
        for bits in parts:
            check_subset(bits, n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, key, value):
        raise AttributeError("SetSequence is immutable")

    def __reduce__(self):
        return SetSequence, (self.n, self.parts)

    def __eq__(self, other):
        return isinstance(other, SetSequence) and self.n == other.n and self.parts == other.parts

    def __hash__(self):
        return hash((self.n, self.parts))

    def __lt__(self, other):
        return self.parts < other.parts

    def __getitem__(self, i):
        """ The 1-based part X_i

        """
        return self.parts[i - 1]

    @classmethod
    def from_indices(cls, parts):
        """ Build a sequence from lists of 1-based indices, e.g. [[1, 2], [2]]

        :param parts: lists of indices
        :type parts: List[List[int]]
        :return: the sequence
        :rtype: kiselman.sequence.SetSequence
        """

        n = len(parts)
        return cls(n, [subset_from_indices(p, n) for p in parts])

    def to_indices(self):
        return [subset_to_indices(bits) for bits in self.parts]

    def to_dict(self, **kw):
        return {"n": self.n, "parts": self.to_indices()}

    @classmethod
    def from_dict(cls, d, **kw):
        if isinstance(d, list):
            return cls.from_indices(d)
        seq = cls.from_indices(d["parts"])
        if seq.n != d["n"]:
            raise DomainError("Error: n = %d does not match %d parts." % (d["n"], seq.n))
        return seq

    def __str__(self):
        return pprint.pformat(self.to_indices())

    def __repr__(self):
        return "(" + ",".join(format_subset(bits) for bits in self.parts) + ")"


def is_monotone(s):
    """ Check the monotonicity of a sequence

    For all j > i, every element of X_j \\ X_i exceeds every element of X_i \\ X_j. All pairs are checked
    since the relation is not transitive.

    :param s: a sequence
    :type s: kiselman.sequence.SetSequence
    :return: whether s lies in M_n
    :rtype: bool
    """

    parts = s.parts
    for j in range(1, len(parts)):
        for i in range(j):
            if not dominates(parts[j], parts[i]):
                return False
    return True


def check_monotone(s):
    if not is_monotone(s):
        raise DomainError("Error: %r is not monotone." % (s))
    return s


def unit_sequence(n):
    """ The unit ({1}, {2}, ..., {n}) of M_n

    :param n: the size
    :type n: int
    :return: the unit sequence
    :rtype: kiselman.sequence.SetSequence
    """

    if n < 1:
        raise DomainError("Error: n = %d should be positive." % (n))
    return SetSequence(n, [1 << i for i in range(n)])


def star(x, y):
    """ The product X * Y with Z_i the union of X_j over j in Y_i

    :param x: the left operand
    :type x: kiselman.sequence.SetSequence
    :param y: the right operand
    :type y: kiselman.sequence.SetSequence
    :return: the product
    :rtype: kiselman.sequence.SetSequence
    """

    if x.n != y.n:
        raise DomainError("Error: cannot multiply sequences of M_%d and M_%d." % (x.n, y.n))
    check_monotone(x)
    check_monotone(y)
    return SetSequence(x.n, [union_of_parts(x.parts, bits) for bits in y.parts])


def union_of_parts(parts, bits):
    """ The union of parts[j - 1] over the indices j in a bitmask

    :param parts: 0-based list of bitmasks
    :type parts: Sequence[int]
    :param bits: the selecting bitmask
    :type bits: int
    :return: the union
    :rtype: int
    """

    z = 0
    j = 0
    while bits:
        if bits & 1:
            z |= parts[j]
        bits >>= 1
        j += 1
    return z


def enumerate_mn(n, max_n=DEFAULT_MAX_SEQUENCE_N):
    """ All monotone sequences of length n

    Parts are chosen one at a time in ascending bitmask order and a prefix is abandoned as soon as its last
    part breaks monotonicity with an earlier one, so the output is lexicographic on the bitmask tuple with
    X_1 most significant.

    :param n: the size
    :type n: int
    :param max_n: the enumeration guard
    :type max_n: int
    :return: M_n in lexicographic order
    :rtype: List[kiselman.sequence.SetSequence]
    """

    if n < 1:
        raise DomainError("Error: n = %d should be positive." % (n))
    if n > max_n:
        raise GuardExceededError("Error: enumerating M_%d exceeds the guard n <= %d." % (n, max_n))
    subsets = range(full_subset(n) + 1)
    results = []
    prefix = []

    def extend():
        if len(prefix) == n:
            results.append(SetSequence(n, prefix))
            return
        for bits in subsets:
            if all(dominates(bits, earlier) for earlier in prefix):
                prefix.append(bits)
                extend()
                prefix.pop()

    extend()
    logger.info("M_%d has %d elements." % (n, len(results)))
    return results
