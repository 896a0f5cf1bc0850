import logging
from collections import deque
from functools import lru_cache
from ..element import EMPTY_WORD, Element, check_word, content, shortlex_key
from ..errors import DomainError, GuardExceededError
from ..rewrite import DEFAULT_MAX_RULES, complete, make_presentation
from ..subset import check_subset, dominates, full_subset, subset_to_indices

DEFAULT_MAX_ELEMENTS = 100000

logger = logging.getLogger(__name__)


def idempotent_word(bits):
    """ The word e_X: the generators indexed by X in strictly descending order

    :param bits: the bitmask of X
    :type bits: int
    :return: the word (empty for X = {})
    :rtype: Tuple[int]
    """

    return tuple(reversed(subset_to_indices(bits)))


class KiselmanSemigroup(object):
    """ Arithmetic in K_n on top of a completed rewriting system

    """
    def __init__(self, rs):
        """

        :param rs: a completed rewriting system
        :type rs: kiselman.rewrite.system.RewriteSystem
        """

        if not rs.complete:
            raise DomainError("Error: K_%d needs a completed rewriting system to compute normal forms." % (rs.n))
        self.rs = rs
        self.n = rs.n
        self._relation_cache = dict()

    def reduce(self, word):
        """ The element represented by a word

        :param word: a word over 1..n
        :type word: Iterable[int]
        :return: the element in normal form
        :rtype: kiselman.element.Element
        """

        return Element(self.n, self.rs.reduce_word(word))

    @property
    def unit(self):
        return Element(self.n, EMPTY_WORD)

    def generator(self, i):
        return self.reduce((i,))

    def multiply(self, a, b):
        """ Multiply two elements: concatenate normal forms and reduce

        :param a: the left factor
        :type a: kiselman.element.Element
        :param b: the right factor
        :type b: kiselman.element.Element
        :return: the product
        :rtype: kiselman.element.Element
        """

        if a.n != self.n or b.n != self.n:
            raise DomainError("Error: cannot multiply elements of K_%d and K_%d in K_%d." % (a.n, b.n, self.n))
        return Element(self.n, self.rs.reduce_word(a.nf + b.nf))

    def product(self, words):
        """ The element represented by the concatenation of several words

        :param words: words over 1..n
        :type words: Iterable[Iterable[int]]
        :return: the product in normal form
        :rtype: kiselman.element.Element
        """

        word = []
        for w in words:
            word.extend(w)
        return self.reduce(word)

    def content(self, x):
        """ The content of an element or a word

        :param x: an element or a word
        :type x: Union[kiselman.element.Element, Iterable[int]]
        :return: the bitmask of the content
        :rtype: int
        """

        if isinstance(x, Element):
            return content(x.nf)
        return content(check_word(x, self.n))

    def idempotent(self, bits):
        """ The idempotent e_X as an element

        :param bits: the bitmask of X
        :type bits: int
        :return: e_X
        :rtype: kiselman.element.Element
        """

        return self.reduce(idempotent_word(check_subset(bits, self.n)))

    def is_idempotent(self, x):
        return self.multiply(x, x) == x

    def idempotents(self):
        """ The 2^n idempotents e_X, ordered by the bitmask of X

        :return: a list of idempotents
        :rtype: List[kiselman.element.Element]
        """

        return [self.idempotent(bits) for bits in range(full_subset(self.n) + 1)]

    def enumerate_elements(self, cap=DEFAULT_MAX_ELEMENTS):
        """ All elements of K_n by closure under right multiplication with generators

        :param cap: the maximal number of elements before giving up
        :type cap: int
        :return: the elements in shortlex order of their normal forms
        :rtype: List[kiselman.element.Element]
        """

        seen = {EMPTY_WORD}
        queue = deque([EMPTY_WORD])
        while queue:
            nf = queue.popleft()
            for i in range(1, self.n + 1):
                succ = self.rs.reduce_word(nf + (i,))
                if succ not in seen:
                    seen.add(succ)
                    if len(seen) > cap:
                        raise GuardExceededError(
                            "Error: K_%d has more than %d elements; raise the element guard to enumerate it." % (self.n, cap)
                        )
                    queue.append(succ)
        logger.info("K_%d has %d elements." % (self.n, len(seen)))
        return [Element(self.n, nf) for nf in sorted(seen, key=shortlex_key)]

    def tfae_check(self, x_bits, y_bits):
        """ Evaluate the three equivalent conditions on e_X e_Y independently

        (1) e_X e_Y is an idempotent, (2) e_X e_Y = e_{X u Y} (both by normal forms) and (3) every x in X \\ Y
        exceeds every y in Y \\ X (combinatorially).

        :param x_bits: the bitmask of X
        :type x_bits: int
        :param y_bits: the bitmask of Y
        :type y_bits: int
        :return: the three booleans
        :rtype: Tuple[bool, bool, bool]
        """

        check_subset(x_bits, self.n)
        check_subset(y_bits, self.n)
        xy = self.product([idempotent_word(x_bits), idempotent_word(y_bits)])
        cond1 = self.is_idempotent(xy)
        cond2 = xy == self.idempotent(x_bits | y_bits)
        cond3 = dominates(x_bits, y_bits)
        return cond1, cond2, cond3

    def braid_check(self, x_bits, y_bits):
        """ Evaluate both sides of the braid equivalence for idempotents

        Component 1 is the combinatorial condition; component 2 holds iff e_X e_Y is an idempotent and
        e_X e_Y e_X = e_Y e_X e_Y = e_X e_Y, decided by normal forms.

        :param x_bits: the bitmask of X
        :type x_bits: int
        :param y_bits: the bitmask of Y
        :type y_bits: int
        :return: the two booleans
        :rtype: Tuple[bool, bool]
        """

        check_subset(x_bits, self.n)
        check_subset(y_bits, self.n)
        e_x, e_y = idempotent_word(x_bits), idempotent_word(y_bits)
        xy = self.product([e_x, e_y])
        xyx = self.product([e_x, e_y, e_x])
        yxy = self.product([e_y, e_x, e_y])
        return dominates(x_bits, y_bits), self.is_idempotent(xy) and xyx == yxy == xy

    def images_satisfy_relations(self, lower_bits, upper_bits):
        """ Check the relations of a pair of generators a_i, a_j (i < j) on the images b_i = e_X, b_j = e_Y

        b_i^2 = b_i, b_j^2 = b_j and b_j b_i b_j = b_i b_j b_i = b_j b_i, all decided by normal forms.

        :param lower_bits: the content X of the image of a_i
        :type lower_bits: int
        :param upper_bits: the content Y of the image of a_j
        :type upper_bits: int
        :return: whether the relations hold
        :rtype: bool
        """

        key = (lower_bits, upper_bits)
        cached = self._relation_cache.get(key)
        if cached is not None:
            return cached
        b_i, b_j = idempotent_word(lower_bits), idempotent_word(upper_bits)
        ji = self.product([b_j, b_i])
        holds = (
            self.is_idempotent(self.reduce(b_i))
            and self.is_idempotent(self.reduce(b_j))
            and self.product([b_j, b_i, b_j]) == ji
            and self.product([b_i, b_j, b_i]) == ji
        )
        self._relation_cache[key] = holds
        return holds

    def content_is_onto(self, cap=DEFAULT_MAX_ELEMENTS):
        """ Check that every subset of {1..n} is the content of some element

        :param cap: the element guard
        :type cap: int
        :return: whether the content map is surjective
        :rtype: bool
        """

        contents = {self.content(x) for x in self.enumerate_elements(cap)}
        return contents == set(range(full_subset(self.n) + 1))


@lru_cache(maxsize=None)
def get_semigroup(n, max_rules=DEFAULT_MAX_RULES):
    """ The K_n arithmetic for n generators, completed once per process

    :param n: the number of generators
    :type n: int
    :param max_rules: the completion rule cap
    :type max_rules: int
    :return: the semigroup
    :rtype: kiselman.semigroup.kiselman.KiselmanSemigroup
    """

    return KiselmanSemigroup(complete(make_presentation(n), max_rules=max_rules))
