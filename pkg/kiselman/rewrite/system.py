import pprint
from ..element import check_word, format_word, shortlex_key
from ..errors import DomainError
from ..object import JsonSerializedObject


class RuleIndex(object):
    """ A mutable lhs -> rhs table with a stack-based reducer

    """
    def __init__(self, rules=None):
        self._rules = dict()
        self.max_lhs_len = 0
        for lhs, rhs in rules or []:
            self.add(lhs, rhs)

    def __len__(self):
        return len(self._rules)

    def items(self):
        return self._rules.items()

    def add(self, lhs, rhs):
        self._rules[lhs] = rhs
        self.max_lhs_len = max(self.max_lhs_len, len(lhs))

    def remove(self, lhs):
        del self._rules[lhs]

    def reduce(self, word):
        """ Rewrite a word until no lhs occurs in it

        Letters are pushed one at a time onto an irreducible prefix, so a new redex can only end at the
        top of the stack; the shortest matching suffix is rewritten first and the rhs is pushed back onto
        the input.

        :param word: the word to reduce
        :type word: Tuple[int]
        :return: the irreducible word
        :rtype: Tuple[int]
        """

        rules = self._rules
        max_len = self.max_lhs_len
        stack = []
        todo = list(reversed(word))
        while todo:
            stack.append(todo.pop())
            top = len(stack)
            for k in range(1, min(max_len, top) + 1):
                rhs = rules.get(tuple(stack[top - k:]))
                if rhs is not None:
                    del stack[top - k:]
                    todo.extend(reversed(rhs))
                    break
        return tuple(stack)


class RewriteSystem(JsonSerializedObject):
    """ A string rewriting system for K_n, oriented by shortlex with a_1 < a_2 < ... < a_n

    """
    def __init__(self, n, rules, complete=False):
        """

        :param n: the number of generators
        :type n: int
        :param rules: (lhs, rhs) pairs where rhs strictly precedes lhs in shortlex order
        :type rules: Iterable[Tuple[Tuple[int], Tuple[int]]]
        :param complete: whether every critical pair has been verified to resolve
        :type complete: bool
        """

        super().__init__()
        self.n = n
        checked = []
        for lhs, rhs in rules:
            lhs, rhs = check_word(lhs, n), check_word(rhs, n)
            if not shortlex_key(rhs) < shortlex_key(lhs):
                raise DomainError(
                    "Error: rule %s -> %s does not decrease in shortlex order." % (format_word(lhs), format_word(rhs))
                )
            checked.append((lhs, rhs))
        self.rules = tuple(checked)
        self.complete = complete
        self._index = RuleIndex(self.rules)

    def __len__(self):
        return len(self.rules)

    def reduce_word(self, word):
        """ Reduce a word with the rules of this system (leftmost-innermost)

        :param word: a word over 1..n
        :type word: Iterable[int]
        :return: the irreducible word
        :rtype: Tuple[int]
        """

        return self._index.reduce(check_word(word, self.n))

    def is_irreducible(self, word):
        word = tuple(word)
        return all(
            word[i:i + len(lhs)] != lhs for lhs, _ in self.rules for i in range(len(word) - len(lhs) + 1)
        )

    def to_dict(self, **kw):
        return {
            "n": self.n,
            "complete": self.complete,
            "rules": [{"lhs": list(lhs), "rhs": list(rhs)} for lhs, rhs in self.rules],
        }

    @classmethod
    def from_dict(cls, d, **kw):
        rules = [(tuple(r["lhs"]), tuple(r["rhs"])) for r in d["rules"]]
        return cls(d["n"], rules, complete=d.get("complete", False))

    def __str__(self):
        return pprint.pformat(self.to_dict())

    def __repr__(self):
        return "RewriteSystem(n=%d, rules=%d, complete=%s)" % (self.n, len(self.rules), self.complete)


def make_presentation(n):
    """ The defining relations of K_n oriented into length-decreasing rules

    a_i a_i -> a_i for every i, and for i < j both a_j a_i a_j -> a_j a_i and a_i a_j a_i -> a_j a_i.

    :param n: the number of generators
    :type n: int
    :return: the initial (not yet completed) system
    :rtype: kiselman.rewrite.system.RewriteSystem
    """

    if not isinstance(n, int) or n < 1:
        raise DomainError("Error: n = %r, but K_n needs at least one generator." % (n))
    rules = [((i, i), (i,)) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rules.append(((j, i, j), (j, i)))
            rules.append(((i, j, i), (j, i)))
    return RewriteSystem(n, rules)


def defining_relations(n):
    """ The defining relations of K_n as unoriented word pairs

    :param n: the number of generators
    :type n: int
    :return: pairs of words that are equal in K_n
    :rtype: List[Tuple[Tuple[int], Tuple[int]]]
    """

    relations = [((i, i), (i,)) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            relations.append(((i, j, i), (j, i, j)))
            relations.append(((j, i, j), (j, i)))
    return relations
