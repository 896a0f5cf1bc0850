import logging
from collections import deque
from .system import RewriteSystem, RuleIndex, defining_relations
from ..element import format_word, shortlex_key
from ..errors import CompletionError, DomainError, VerificationError

DEFAULT_MAX_RULES = 10000

logger = logging.getLogger(__name__)


def shortlex_oriented(u, v):
    """ Orient a pair of words so that the shortlex-larger word comes first

    :param u: one word
    :type u: Tuple[int]
    :param v: the other word
    :type v: Tuple[int]
    :return: (larger, smaller)
    :rtype: Tuple[Tuple[int], Tuple[int]]
    """

    if shortlex_key(u) > shortlex_key(v):
        return u, v
    return v, u


def occurs_in(pattern, word):
    k = len(pattern)
    return any(word[i:i + k] == pattern for i in range(len(word) - k + 1))


def iter_overlaps(rules):
    """ Enumerate the critical overlaps of a rule set

    Yields (overlap word, one side, other side) for every proper suffix/prefix overlap of two left sides
    (a rule overlapping itself included) and for every left side occurring inside another one.

    :param rules: (lhs, rhs) pairs
    :type rules: Iterable[Tuple[Tuple[int], Tuple[int]]]
    :return: a generator of critical overlaps
    :rtype: Generator[Tuple[Tuple[int], Tuple[int], Tuple[int]]]
    """

    rules = list(rules)
    for l1, r1 in rules:
        for l2, r2 in rules:
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    yield l1 + l2[k:], r1 + l2[k:], l1[:-k] + r2
            if l1 != l2 and len(l2) <= len(l1):
                for p in range(len(l1) - len(l2) + 1):
                    if l1[p:p + len(l2)] == l2:
                        yield l1, r1, l1[:p] + r2 + l1[p + len(l2):]


def _unresolved(index, rules):
    pairs = []
    for word, u, v in iter_overlaps(rules):
        u_nf, v_nf = index.reduce(u), index.reduce(v)
        if u_nf != v_nf:
            pairs.append((word, u_nf, v_nf))
    return pairs


def critical_pairs(rs):
    """ Critical pairs of a rewriting system that do not reduce to a common normal form

    :param rs: a rewriting system
    :type rs: kiselman.rewrite.system.RewriteSystem
    :return: a list of (overlap word, normal form of one side, normal form of the other side)
    :rtype: List[Tuple[Tuple[int], Tuple[int], Tuple[int]]]
    """

    return _unresolved(RuleIndex(rs.rules), rs.rules)


def relations_hold(rs):
    """ Check that both sides of every defining relation of K_n share a normal form

    :param rs: a rewriting system
    :type rs: kiselman.rewrite.system.RewriteSystem
    :return: whether all relations hold
    :rtype: bool
    """

    return all(rs.reduce_word(u) == rs.reduce_word(v) for u, v in defining_relations(rs.n))


def complete(rs, max_rules=DEFAULT_MAX_RULES):
    """ Knuth-Bendix completion under shortlex order

    New rules are interreduced against the table (rules whose left side contains the new left side are
    re-queued; right sides are kept reduced) and critical pairs are added until none remain.

    :param rs: an initial presentation system
    :type rs: kiselman.rewrite.system.RewriteSystem
    :param max_rules: the rule cap
    :type max_rules: int
    :return: a completed system
    :rtype: kiselman.rewrite.system.RewriteSystem
    """

    if max_rules < 1:
        raise DomainError("Error: max_rules = %d should be positive." % (max_rules))
    if rs.complete:
        return rs

    index = RuleIndex()
    pending = deque(rs.rules)
    rounds = 0
    while True:
        rounds += 1
        while pending:
            u, v = pending.popleft()
            u, v = index.reduce(u), index.reduce(v)
            if u == v:
                continue
            lhs, rhs = shortlex_oriented(u, v)
            for l2, r2 in list(index.items()):
                if occurs_in(lhs, l2):
                    index.remove(l2)
                    pending.append((l2, r2))
            index.add(lhs, rhs)
            for l2, r2 in list(index.items()):
                r2_nf = index.reduce(r2)
                if r2_nf != r2:
                    index.add(l2, r2_nf)
            if len(index) > max_rules:
                raise CompletionError(
                    "Error: completion of K_%d exceeded %d rules; no finite complete system was found within the cap."
                    % (rs.n, max_rules)
                )
        unresolved = _unresolved(index, list(index.items()))
        logger.debug("completion round %d: %d rules, %d unresolved pairs" % (rounds, len(index), len(unresolved)))
        if not unresolved:
            break
        for _, u, v in unresolved:
            pending.append((u, v))

    rules = sorted(index.items(), key=lambda rule: (shortlex_key(rule[0]), shortlex_key(rule[1])))
    completed = RewriteSystem(rs.n, rules, complete=True)
    remaining = critical_pairs(completed)
    if remaining:
        word, u, v = remaining[0]
        raise VerificationError(
            "Error: overlap %s of the completed system reduces to both %s and %s."
            % (format_word(word), format_word(u), format_word(v))
        )
    if not relations_hold(completed):
        raise VerificationError("Error: the completed system of K_%d does not satisfy its defining relations." % (rs.n))
    logger.info("Completed K_%d: %d rules after %d rounds." % (rs.n, len(completed), rounds))
    return completed
