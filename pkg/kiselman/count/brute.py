import logging
import multiprocessing
import numpy as np
from tqdm import tqdm
from .formula import CLOSED_FORMULAS, closed_count
from .result import BRUTE_FORCE, CountResult
from ..errors import DomainError, GuardExceededError
from ..matrix import avoids_pattern_batch

DEFAULT_GUARD_BITS = 25
BLOCK_SIZE = 1 << 20
MAX_DN_CARDINALITY_N = 5

logger = logging.getLogger(__name__)


def count_block(m, n, start, stop):
    """ Count the avoiding matrices among the flattened values [start, stop)

    :param m: the number of rows
    :type m: int
    :param n: the number of columns
    :type n: int
    :param start: the first flattened value
    :type start: int
    :param stop: the end of the range
    :type stop: int
    :return: the count
    :rtype: int
    """

    total = 0
    for i in range(start, stop, BLOCK_SIZE):
        flat = np.arange(i, min(i + BLOCK_SIZE, stop), dtype=np.uint64)
        total += int(np.count_nonzero(avoids_pattern_batch(flat, m, n)))
    return total


def brute_count(m, n, guard_bits=DEFAULT_GUARD_BITS, n_workers=1, progress=False):
    """ c_{m,n} by checking all 2^(m*n) matrices

    :param m: the number of rows
    :type m: int
    :param n: the number of columns
    :type n: int
    :param guard_bits: the largest admissible m * n
    :type guard_bits: int
    :param n_workers: the number of worker processes
    :type n_workers: int
    :param progress: whether to show a progress bar
    :type progress: bool
    :return: the count
    :rtype: kiselman.count.result.CountResult
    """

    if m < 1 or n < 1:
        raise DomainError("Error: shape %dx%d should be positive." % (m, n))
    if m * n > guard_bits:
        raise GuardExceededError("Error: %dx%d needs %d bits, beyond the guard of %d." % (m, n, m * n, guard_bits))
    total = 1 << (m * n)
    ranges = [(i, min(i + BLOCK_SIZE, total)) for i in range(0, total, BLOCK_SIZE)]
    value = 0
    desc = "c_{%d,%d}" % (m, n)
    if n_workers > 1 and len(ranges) > 1:
        with multiprocessing.Pool(n_workers) as pool:
            results = [pool.apply_async(count_block, args=(m, n, i, j)) for i, j in ranges]
            pool.close()
            for x in tqdm(results, disable=not progress, desc=desc):
                value += x.get()
    else:
        for i, j in tqdm(ranges, disable=not progress, desc=desc):
            value += count_block(m, n, i, j)
    logger.debug("%s = %d by brute force" % (desc, value))
    return CountResult(m, n, value, BRUTE_FORCE)


def dn_cardinality(n):
    """ |D_n| = |End(K_n)| from the closed formulas

    :param n: the size, 1..5
    :type n: int
    :return: the count
    :rtype: kiselman.count.result.CountResult
    """

    if n < 1:
        raise DomainError("Error: n = %d should be positive." % (n))
    if n > MAX_DN_CARDINALITY_N:
        raise DomainError("Error: no closed formula is available for |D_%d|." % (n))
    if n == 1:
        return brute_count(1, 1)
    return closed_count(n, n)


def dn_cardinalities():
    return [dn_cardinality(n) for n in range(1, MAX_DN_CARDINALITY_N + 1)]


def count_grid(max_bits=DEFAULT_GUARD_BITS, n_workers=1, progress=False, include_brute_only=False):
    """ Closed-formula and brute-force counts side by side

    Rows cover m in 2..5 and n in 1..floor(max_bits / m); with include_brute_only, m = 1 rows (no closed
    formula) are added as well.

    :param max_bits: the largest m * n
    :type max_bits: int
    :param n_workers: the number of worker processes for brute force
    :type n_workers: int
    :param progress: whether to show progress bars
    :type progress: bool
    :param include_brute_only: whether to add shapes without a closed formula
    :type include_brute_only: bool
    :return: rows with keys m, n, closed, brute, agree
    :rtype: List[Dict[str, object]]
    """

    shapes = [(m, n) for m in sorted(CLOSED_FORMULAS) for n in range(1, max_bits // m + 1)]
    if include_brute_only:
        shapes = [(1, n) for n in range(1, max_bits + 1)] + shapes
    rows = []
    for m, n in shapes:
        row = compare_counts(m, n, guard_bits=max_bits, n_workers=n_workers, progress=progress)
        if not row["agree"]:
            logger.error("c_{%d,%d}: closed formula gives %d, brute force gives %d" % (m, n, row["closed"], row["brute"]))
        rows.append(row)
    return rows


def compare_counts(m, n, guard_bits=DEFAULT_GUARD_BITS, n_workers=1, progress=False):
    """ Closed-formula and brute-force counts of a single shape

    :return: a row with keys m, n, closed, brute, agree
    :rtype: Dict[str, object]
    """

    closed = closed_count(m, n).value if m in CLOSED_FORMULAS else None
    brute = brute_count(m, n, guard_bits=guard_bits, n_workers=n_workers, progress=progress).value
    return {"m": m, "n": n, "closed": closed, "brute": brute, "agree": closed is None or closed == brute}
