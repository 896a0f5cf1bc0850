import numbers
import pprint
from .errors import DomainError
from .object import JsonSerializedObject
from .subset import subset_from_indices

EMPTY_WORD = ()
UNIT_SYMBOL = "ε"


def check_word(word, n):
    """ Validate a word over the generators a_1, ..., a_n

    :param word: 1-based generator indices
    :type word: Iterable[int]
    :param n: the number of generators
    :type n: int
    :return: the word as a tuple of plain ints
    :rtype: Tuple[int]
    """

    checked = []
    for letter in word:
        # bool is an Integral subclass but never a letter
        if isinstance(letter, bool) or not isinstance(letter, numbers.Integral) or not 1 <= letter <= n:
            raise DomainError("Error: letter %r is out of range 1..%d." % (letter, n))
        checked.append(int(letter))
    return tuple(checked)


def shortlex_key(word):
    """ Sort key of the shortlex order: length first, then lexicographic on indices

    :param word: a word
    :type word: Tuple[int]
    :return: the sort key
    :rtype: Tuple[int, Tuple[int]]
    """

    return len(word), word


def content(word):
    """ The content c(w): the set of indices occurring in w

    :param word: a word
    :type word: Iterable[int]
    :return: the bitmask of the content
    :rtype: int
    """

    return subset_from_indices(word)


def format_word(word):
    """ Render a word as `a3a1`, or `ε` for the empty word

    :param word: a word
    :type word: Tuple[int]
    :return: the display form
    :rtype: str
    """

    if len(word) == 0:
        return UNIT_SYMBOL
    return "".join("a%d" % letter for letter in word)


def word_to_csv(word):
    return ".".join(str(letter) for letter in word)


class Element(JsonSerializedObject):
    """ An element of K_n, identified by its shortlex normal form

    """
    __slots__ = ("n", "nf")

    def __init__(self, n, nf):
        """

        :param n: the number of generators
        :type n: int
        :param nf: the normal form (already reduced)
        :type nf: Tuple[int]
        """

        super().__init__()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "nf", tuple(nf))

    def __setattr__(self, key, value):
        raise AttributeError("Element is immutable")

    def __reduce__(self):
        return Element, (self.n, self.nf)

    def __eq__(self, other):
        return isinstance(other, Element) and self.n == other.n and self.nf == other.nf

    def __hash__(self):
        return hash((self.n, self.nf))

    def __lt__(self, other):
        return shortlex_key(self.nf) < shortlex_key(other.nf)

    def __len__(self):
        return len(self.nf)

    @property
    def content(self):
        return content(self.nf)

    def to_dict(self, **kw):
        return {"n": self.n, "nf": list(self.nf)}

    @classmethod
    def from_dict(cls, d, **kw):
        n = d["n"]
        return cls(n, check_word(d["nf"], n))

    def __str__(self):
        return pprint.pformat(self.to_dict())

    def __repr__(self):
        return format_word(self.nf)
