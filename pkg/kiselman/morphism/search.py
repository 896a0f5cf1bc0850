import logging
import math
import multiprocessing
from tqdm import tqdm
from .maps import endo_from_sequence, is_endomorphism
from ..endomorphism import CandidateMap, Endomorphism
from ..errors import DomainError, GuardExceededError
from ..rewrite import DEFAULT_MAX_RULES
from ..semigroup import get_semigroup
from ..sequence import enumerate_mn

DEFAULT_MAX_END_N = 4
MAX_TASKS = 1024

logger = logging.getLogger(__name__)


def candidate_images(n, index):
    """ Decode a candidate index into n bitmasks, X_1 in the most significant digit

    :param n: the number of generators
    :type n: int
    :param index: an integer in [0, 2^(n*n))
    :type index: int
    :return: the images
    :rtype: Tuple[int]
    """

    width = (1 << n) - 1
    return tuple((index >> ((n - 1 - i) * n)) & width for i in range(n))


def search_candidates(n, start, stop, max_rules=DEFAULT_MAX_RULES):
    """ Keep the candidates with index in [start, stop) that respect the relations of K_n

    :param n: the number of generators
    :type n: int
    :param start: the first candidate index
    :type start: int
    :param stop: the end of the range
    :type stop: int
    :param max_rules: the completion rule cap
    :type max_rules: int
    :return: image tuples in ascending index order
    :rtype: List[Tuple[int]]
    """

    sg = get_semigroup(n, max_rules)
    found = []
    for index in range(start, stop):
        images = candidate_images(n, index)
        if is_endomorphism(CandidateMap(n, images), sg=sg):
            found.append(images)
    return found


def brute_force_enumerate_end(n, max_n=DEFAULT_MAX_END_N, n_workers=1, max_rules=DEFAULT_MAX_RULES, progress=False):
    """ All endomorphisms of K_n by checking every one of the (2^n)^n candidate maps

    The candidate range is cut into chunks; with several workers the chunks are checked in a process pool and
    merged in submission order, so the result does not depend on the number of workers.

    :param n: the number of generators
    :type n: int
    :param max_n: the guard on n
    :type max_n: int
    :param n_workers: the number of worker processes
    :type n_workers: int
    :param max_rules: the completion rule cap
    :type max_rules: int
    :param progress: whether to show a progress bar
    :type progress: bool
    :return: End(K_n) in lexicographic order of the image tuples
    :rtype: List[kiselman.endomorphism.Endomorphism]
    """

    if n < 1:
        raise DomainError("Error: n = %d should be positive." % (n))
    if n > max_n:
        raise GuardExceededError("Error: brute force over End(K_%d) exceeds the guard n <= %d." % (n, max_n))
    total = 1 << (n * n)
    chunk_size = 1
    while math.ceil(total / chunk_size) > MAX_TASKS:
        chunk_size *= 2
    ranges = [(i, min(i + chunk_size, total)) for i in range(0, total, chunk_size)]

    found = []
    if n_workers > 1:
        with multiprocessing.Pool(n_workers) as pool:
            results = [pool.apply_async(search_candidates, args=(n, i, j, max_rules)) for i, j in ranges]
            pool.close()
            for x in tqdm(results, disable=not progress, desc="End(K_%d)" % (n)):
                found.extend(x.get())
    else:
        for i, j in tqdm(ranges, disable=not progress, desc="End(K_%d)" % (n)):
            found.extend(search_candidates(n, i, j, max_rules))
    logger.info("End(K_%d): %d of %d candidate maps are endomorphisms." % (n, len(found), total))
    return [Endomorphism(n, images, validate=False) for images in found]


def monotone_enumerate_end(n, max_n=DEFAULT_MAX_END_N):
    """ All endomorphisms of K_n, one per monotone sequence

    :param n: the number of generators
    :type n: int
    :param max_n: the guard on n
    :type max_n: int
    :return: End(K_n) in lexicographic order of the image tuples
    :rtype: List[kiselman.endomorphism.Endomorphism]
    """

    return [endo_from_sequence(s) for s in enumerate_mn(n, max_n=max_n)]
