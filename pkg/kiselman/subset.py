""" Subsets of {1, ..., n} stored as integer bitmasks

Index k (1-based) lives at bit k - 1. The empty set is 0.
"""

from .errors import DomainError


def full_subset(n):
    """ The bitmask of {1, ..., n}

    :param n: the number of generators
    :type n: int
    :return: the full bitmask
    :rtype: int
    """

    return (1 << n) - 1


def check_subset(bits, n):
    """ Validate that only bits 1..n are set

    :param bits: a bitmask
    :type bits: int
    :param n: the number of generators
    :type n: int
    :return: the same bitmask
    :rtype: int
    """

    if bits < 0 or bits >> n:
        raise DomainError("Error: subset %s is not contained in {1..%d}." % (format_subset(bits), n))
    return bits


def subset_from_indices(indices, n=None):
    """ Build a bitmask from 1-based indices

    :param indices: 1-based indices
    :type indices: Iterable[int]
    :param n: when given, every index must lie in 1..n
    :type n: Union[int, None]
    :return: the bitmask
    :rtype: int
    """

    bits = 0
    for k in indices:
        if k < 1 or (n is not None and k > n):
            raise DomainError("Error: index %d is out of range 1..%s." % (k, n if n is not None else "n"))
        bits |= 1 << (k - 1)
    return bits


def subset_to_indices(bits):
    """ The 1-based indices of a bitmask in ascending order

    :param bits: a bitmask
    :type bits: int
    :return: sorted indices
    :rtype: List[int]
    """

    indices = []
    k = 1
    while bits:
        if bits & 1:
            indices.append(k)
        bits >>= 1
        k += 1
    return indices


def lowest_index(bits):
    return (bits & -bits).bit_length()


def highest_index(bits):
    return bits.bit_length()


def dominates(x_bits, y_bits):
    """ Check that every element of X \\ Y exceeds every element of Y \\ X

    :param x_bits: the bitmask of X
    :type x_bits: int
    :param y_bits: the bitmask of Y
    :type y_bits: int
    :return: whether the condition holds (vacuously true if either difference is empty)
    :rtype: bool
    """

    only_x = x_bits & ~y_bits
    only_y = y_bits & ~x_bits
    if only_x == 0 or only_y == 0:
        return True
    return lowest_index(only_x) > highest_index(only_y)


def format_subset(bits):
    return "{" + ",".join(str(k) for k in subset_to_indices(bits)) + "}"
