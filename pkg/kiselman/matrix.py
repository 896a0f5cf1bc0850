import logging
import pprint
from functools import lru_cache
from itertools import permutations
import numpy as np
from .errors import DomainError, GuardExceededError
from .object import JsonSerializedObject
from .subset import highest_index, lowest_index

DEFAULT_MAX_MATRIX_N = 5
DEFAULT_MAX_UNITS_N = 8
DEFAULT_MAX_EXHAUSTIVE_UNITS_N = 3

logger = logging.getLogger(__name__)


class BoolMatrix(JsonSerializedObject):
    """ An m x n boolean matrix stored as row bitmasks

    Entry (x, i) is bit i - 1 of data[x - 1]; both indices are 1-based.
    """
    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data):
        """

        :param rows: the number of rows m
        :type rows: int
        :param cols: the number of columns n
        :type cols: int
        :param data: m row bitmasks over columns 1..n
        :type data: Iterable[int]
        """

        super().__init__()
        data = tuple(data)
        if len(data) != rows:
            raise DomainError("Error: %d row bitmasks given for %d rows." % (len(data), rows))
        for row in data:
            if row < 0 or row >> cols:
                raise DomainError("Error: row bitmask %d has bits beyond column %d." % (row, cols))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, key, value):
        raise AttributeError("BoolMatrix is immutable")

    def __reduce__(self):
        return BoolMatrix, (self.rows, self.cols, self.data)

    def __eq__(self, other):
        return isinstance(other, BoolMatrix) and (self.rows, self.cols, self.data) == (other.rows, other.cols, other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __lt__(self, other):
        return to_flat(self) < to_flat(other)

    @property
    def is_square(self):
        return self.rows == self.cols

    def entry(self, x, i):
        return (self.data[x - 1] >> (i - 1)) & 1

    def column_masks(self):
        """ Column bitmasks over rows: bit x - 1 of column i is entry (x, i)

        :return: n column bitmasks
        :rtype: List[int]
        """

        cols = [0] * self.cols
        for x, row in enumerate(self.data):
            i = 0
            while row:
                if row & 1:
                    cols[i] |= 1 << x
                row >>= 1
                i += 1
        return cols

    @classmethod
    def from_rows(cls, rows):
        """ Build a matrix from lists of 0/1 entries

        :param rows: a list of rows
        :type rows: List[List[int]]
        :return: the matrix
        :rtype: kiselman.matrix.BoolMatrix
        """

        m = len(rows)
        n = len(rows[0]) if m else 0
        data = []
        for row in rows:
            if len(row) != n:
                raise DomainError("Error: rows of unequal length %d and %d." % (len(row), n))
            bits = 0
            for i, value in enumerate(row):
                if value not in (0, 1):
                    raise DomainError("Error: entry %r is not boolean." % (value))
                bits |= value << i
            data.append(bits)
        return cls(m, n, data)

    def to_rows(self):
        return [[(row >> i) & 1 for i in range(self.cols)] for row in self.data]

    def to_dict(self, **kw):
        return {"rows": self.to_rows()}

    @classmethod
    def from_dict(cls, d, **kw):
        if isinstance(d, list):
            return cls.from_rows(d)
        return cls.from_rows(d["rows"])

    def __str__(self):
        return pprint.pformat(self.to_rows())

    def __repr__(self):
        return "[" + ",".join("".join(str(v) for v in row) for row in self.to_rows()) + "]"


def to_flat(matrix):
    """ Flatten row-major into one integer: entry (x, i) is bit (x - 1) * n + (i - 1)

    :param matrix: a matrix
    :type matrix: kiselman.matrix.BoolMatrix
    :return: the flattened value
    :rtype: int
    """

    value = 0
    for x, row in enumerate(matrix.data):
        value |= row << (x * matrix.cols)
    return value


def from_flat(value, m, n):
    width = (1 << n) - 1
    return BoolMatrix(m, n, [(value >> (x * n)) & width for x in range(m)])


def to_csv_bits(matrix):
    return "|".join("".join(str(v) for v in row) for row in matrix.to_rows())


def transpose(matrix):
    return BoolMatrix(matrix.cols, matrix.rows, matrix.column_masks())


def identity_matrix(n):
    if n < 1:
        raise DomainError("Error: n = %d should be positive." % (n))
    return BoolMatrix(n, n, [1 << x for x in range(n)])


def avoids_pattern(matrix):
    """ Check that no rows x < y and columns i < j carry the submatrix [[0, 1], [1, 0]]

    For every column pair i < j the rows reading (0, 1) must all lie below the rows reading (1, 0).

    :param matrix: a matrix of any shape
    :type matrix: kiselman.matrix.BoolMatrix
    :return: whether the pattern is avoided
    :rtype: bool
    """

    cols = matrix.column_masks()
    for j in range(1, len(cols)):
        for i in range(j):
            upper = cols[j] & ~cols[i]
            lower = cols[i] & ~cols[j]
            if upper and lower and lowest_index(upper) < highest_index(lower):
                return False
    return True


def rows_compatible(upper, lower):
    """ Row-pair form of the pattern check for an upper row above a lower row

    :param upper: the row bitmask with the smaller index
    :type upper: int
    :param lower: the row bitmask with the larger index
    :type lower: int
    :return: whether the two rows avoid the pattern
    :rtype: bool
    """

    only_upper = upper & ~lower
    only_lower = lower & ~upper
    if only_upper == 0 or only_lower == 0:
        return True
    return lowest_index(only_lower) > highest_index(only_upper)


@lru_cache(maxsize=None)
def _index_tables(n):
    size = 1 << n
    low = np.zeros(size, dtype=np.int64)
    high = np.zeros(size, dtype=np.int64)
    for bits in range(1, size):
        low[bits] = lowest_index(bits)
        high[bits] = highest_index(bits)
    return low, high


def avoids_pattern_batch(flat, m, n):
    """ Vectorized pattern check over a block of row-major flattened m x n matrices

    :param flat: flattened matrices
    :type flat: numpy.ndarray
    :param m: the number of rows
    :type m: int
    :param n: the number of columns
    :type n: int
    :return: a boolean mask, True where the matrix avoids the pattern
    :rtype: numpy.ndarray
    """

    flat = np.asarray(flat, dtype=np.uint64)
    ok = np.ones(flat.shape, dtype=bool)
    if m < 2 or n < 2:
        return ok
    width = np.uint64((1 << n) - 1)
    low, high = _index_tables(n)
    rows = [(flat >> np.uint64(x * n)) & width for x in range(m)]
    for x in range(m):
        for y in range(x + 1, m):
            only_upper = (rows[x] & ~rows[y] & width).astype(np.intp)
            only_lower = (rows[y] & ~rows[x] & width).astype(np.intp)
            bad = (only_upper != 0) & (only_lower != 0) & (low[only_lower] < high[only_upper])
            ok &= ~bad
    return ok


def in_dn(matrix):
    return matrix.is_square and avoids_pattern(matrix)


def check_dn(matrix):
    if not in_dn(matrix):
        raise DomainError("Error: %r is not a member of D_%d." % (matrix, matrix.rows))
    return matrix


def bool_mul(a, b):
    """ Boolean matrix product: c_ij is the OR over k of a_ik AND b_kj

    :param a: the left factor
    :type a: kiselman.matrix.BoolMatrix
    :param b: the right factor
    :type b: kiselman.matrix.BoolMatrix
    :return: the product
    :rtype: kiselman.matrix.BoolMatrix
    """

    if a.cols != b.rows:
        raise DomainError("Error: cannot multiply %dx%d by %dx%d." % (a.rows, a.cols, b.rows, b.cols))
    data = []
    for row in a.data:
        acc = 0
        k = 0
        while row:
            if row & 1:
                acc |= b.data[k]
            row >>= 1
            k += 1
        data.append(acc)
    return BoolMatrix(a.rows, b.cols, data)


def enumerate_dn(n, max_n=DEFAULT_MAX_MATRIX_N):
    """ All members of D_n in ascending flattened order

    Rows are fixed from the most significant (row n) down to row 1, each in ascending order, and a row is
    only placed if it is compatible with every row already below it.

    :param n: the size
    :type n: int
    :param max_n: the enumeration guard
    :type max_n: int
    :return: D_n sorted by the flattened value
    :rtype: List[kiselman.matrix.BoolMatrix]
    """

    if n < 1:
        raise DomainError("Error: n = %d should be positive." % (n))
    if n > max_n:
        raise GuardExceededError("Error: enumerating D_%d exceeds the guard n <= %d." % (n, max_n))
    size = 1 << n
    compatible = [[rows_compatible(upper, lower) for lower in range(size)] for upper in range(size)]
    results = []
    chosen = [0] * n

    def fill(x):
        if x < 0:
            results.append(BoolMatrix(n, n, chosen))
            return
        for row in range(size):
            if all(compatible[row][chosen[y]] for y in range(x + 1, n)):
                chosen[x] = row
                fill(x - 1)

    fill(n - 1)
    logger.info("D_%d has %d elements." % (n, len(results)))
    return results


def is_permutation_matrix(matrix):
    """ Check that every row and every column holds exactly one 1

    :param matrix: a square matrix
    :type matrix: kiselman.matrix.BoolMatrix
    :return: whether it is a permutation matrix
    :rtype: bool
    """

    if not matrix.is_square:
        raise DomainError("Error: a %dx%d matrix is not square." % (matrix.rows, matrix.cols))

    def single(bits):
        return bits != 0 and bits & (bits - 1) == 0

    return all(single(row) for row in matrix.data) and all(single(col) for col in matrix.column_masks())


def permutation_matrix(perm):
    """ The matrix with a 1 in row x at column perm[x - 1] (1-based images)

    """
    return BoolMatrix(len(perm), len(perm), [1 << (p - 1) for p in perm])


def _is_unit_pair(a, b, identity):
    return bool_mul(a, b) == identity and bool_mul(b, a) == identity


def find_units(n, max_n=DEFAULT_MAX_UNITS_N):
    """ The invertible elements of D_n

    Only permutation matrices are invertible boolean matrices, so candidates are the n! permutation matrices
    that avoid the pattern and whose inverse (the transpose) also lies in D_n.

    :param n: the size
    :type n: int
    :param max_n: the guard on n
    :type max_n: int
    :return: the units in ascending flattened order
    :rtype: List[kiselman.matrix.BoolMatrix]
    """

    if n > max_n:
        raise GuardExceededError("Error: searching units of D_%d exceeds the guard n <= %d." % (n, max_n))
    identity = identity_matrix(n)
    units = []
    for perm in permutations(range(1, n + 1)):
        candidate = permutation_matrix(perm)
        inverse = transpose(candidate)
        if in_dn(candidate) and in_dn(inverse) and _is_unit_pair(candidate, inverse, identity):
            units.append(candidate)
    return sorted(units)


def find_units_exhaustive(n, max_n=DEFAULT_MAX_EXHAUSTIVE_UNITS_N):
    """ The invertible elements of D_n by searching all pairs (slow oracle)

    :param n: the size
    :type n: int
    :param max_n: the guard on n
    :type max_n: int
    :return: the units in ascending flattened order
    :rtype: List[kiselman.matrix.BoolMatrix]
    """

    if n > max_n:
        raise GuardExceededError("Error: the exhaustive unit search of D_%d exceeds the guard n <= %d." % (n, max_n))
    identity = identity_matrix(n)
    members = enumerate_dn(n, max_n=max_n)
    return [a for a in members if any(_is_unit_pair(a, b, identity) for b in members)]
