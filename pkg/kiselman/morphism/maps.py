from ..element import check_word
from ..endomorphism import Endomorphism
from ..errors import DomainError, VerificationError
from ..matrix import BoolMatrix, check_dn, transpose
from ..semigroup import get_semigroup, idempotent_word
from ..sequence import SetSequence, check_monotone, union_of_parts
from ..subset import format_subset


def _semigroup(n, sg):
    return sg if sg is not None else get_semigroup(n)


def phi(f):
    """ Phi(f) = (c(f(a_1)), ..., c(f(a_n)))

    :param f: an endomorphism
    :type f: kiselman.endomorphism.Endomorphism
    :return: the monotone sequence of contents
    :rtype: kiselman.sequence.SetSequence
    """

    return SetSequence(f.n, f.images)


def endo_from_sequence(s):
    """ The unique endomorphism with a_i -> e_{X_i}

    :param s: a monotone sequence
    :type s: kiselman.sequence.SetSequence
    :return: the endomorphism
    :rtype: kiselman.endomorphism.Endomorphism
    """

    check_monotone(s)
    return Endomorphism(s.n, s.parts)


def apply(f, word, sg=None):
    """ Evaluate an endomorphism on a word: substitute a_k by e_{images[k]} and reduce

    :param f: a map a_i -> e_{images[i]}
    :type f: kiselman.endomorphism.CandidateMap
    :param word: a word over 1..n
    :type word: Iterable[int]
    :param sg: the semigroup K_n (looked up when omitted)
    :type sg: kiselman.semigroup.KiselmanSemigroup
    :return: the image element
    :rtype: kiselman.element.Element
    """

    sg = _semigroup(f.n, sg)
    word = check_word(word, f.n)
    return sg.product([idempotent_word(f.images[k - 1]) for k in word])


def is_endomorphism(candidate, sg=None):
    """ Check whether a_i -> e_{images[i]} respects every defining relation of K_n

    Decided by normal forms in K_n only; monotonicity is not consulted.

    :param candidate: a candidate map
    :type candidate: kiselman.endomorphism.CandidateMap
    :param sg: the semigroup K_n (looked up when omitted)
    :type sg: kiselman.semigroup.KiselmanSemigroup
    :return: whether it extends to an endomorphism
    :rtype: bool
    """

    sg = _semigroup(candidate.n, sg)
    images = candidate.images
    if candidate.n == 1:
        return sg.is_idempotent(sg.idempotent(images[0]))
    for j in range(1, candidate.n):
        for i in range(j):
            if not sg.images_satisfy_relations(images[i], images[j]):
                return False
    return True


def compose(g, f, verify=False, sg=None):
    """ The composition g o f by the union formula: (g o f)_i is the union of g_j over j in f_i

    :param g: the outer endomorphism
    :type g: kiselman.endomorphism.Endomorphism
    :param f: the inner endomorphism
    :type f: kiselman.endomorphism.Endomorphism
    :param verify: whether to recompute every image by substitution and compare
    :type verify: bool
    :param sg: the semigroup K_n used when verifying
    :type sg: kiselman.semigroup.KiselmanSemigroup
    :return: the composition
    :rtype: kiselman.endomorphism.Endomorphism
    """

    if g.n != f.n:
        raise DomainError("Error: cannot compose endomorphisms of K_%d and K_%d." % (g.n, f.n))
    composed = Endomorphism(g.n, [union_of_parts(g.images, bits) for bits in f.images], validate=False)
    if verify:
        substituted = compose_by_substitution(g, f, sg=sg)
        if substituted != composed:
            raise VerificationError("Error: %r o %r is %r by unions but %r by substitution." % (g, f, composed, substituted))
    return composed


def compose_by_substitution(g, f, sg=None):
    """ The composition g o f with images c(g(e_{f_i})), computed in K_n

    :param g: the outer endomorphism
    :type g: kiselman.endomorphism.Endomorphism
    :param f: the inner endomorphism
    :type f: kiselman.endomorphism.Endomorphism
    :param sg: the semigroup K_n (looked up when omitted)
    :type sg: kiselman.semigroup.KiselmanSemigroup
    :return: the composition
    :rtype: kiselman.endomorphism.Endomorphism
    """

    sg = _semigroup(g.n, sg)
    images = []
    for bits in f.images:
        image = apply(g, idempotent_word(bits), sg=sg)
        if not sg.is_idempotent(image):
            raise VerificationError("Error: %r maps the idempotent e_%s to a non-idempotent %r." % (g, format_subset(bits), image))
        images.append(sg.content(image))
    return Endomorphism(g.n, images, validate=False)


def psi(s):
    """ Psi(X_1, ..., X_n): the matrix whose i-th column is the characteristic vector of X_i

    :param s: a monotone sequence
    :type s: kiselman.sequence.SetSequence
    :return: the matrix in D_n
    :rtype: kiselman.matrix.BoolMatrix
    """

    check_monotone(s)
    return transpose(BoolMatrix(s.n, s.n, s.parts))


def psi_inv(matrix):
    """ The sequence of column supports X_i = {x | M_xi = 1}

    :param matrix: a member of D_n
    :type matrix: kiselman.matrix.BoolMatrix
    :return: the monotone sequence
    :rtype: kiselman.sequence.SetSequence
    """

    check_dn(matrix)
    return SetSequence(matrix.cols, matrix.column_masks())


def endomorphism_to_matrix(f):
    return psi(phi(f))


def matrix_to_endomorphism(matrix):
    return endo_from_sequence(psi_inv(matrix))
