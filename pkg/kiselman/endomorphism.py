import pprint
from .errors import DomainError
from .object import JsonSerializedObject
from .sequence import SetSequence, is_monotone
from .subset import check_subset, format_subset, subset_from_indices, subset_to_indices


class CandidateMap(JsonSerializedObject):
    """ An assignment a_i -> e_{images[i]} that has not been checked against the relations of K_n

    """
    def __init__(self, n, images):
        """

        :param n: the number of generators
        :type n: int
        :param images: n bitmasks, the contents of the images of a_1, ..., a_n
        :type images: Iterable[int]
        """

        super().__init__()
        images = tuple(images)
        if len(images) != n:
            raise DomainError("Error: a map on K_%d needs %d images, but %d are given." % (n, n, len(images)))
        for bits in images:
            check_subset(bits, n)
        self.n = n
        self.images = images

    def __eq__(self, other):
        return type(self) is type(other) and self.n == other.n and self.images == other.images

    def __hash__(self):
        return hash((type(self).__name__, self.n, self.images))

    def __lt__(self, other):
        return self.images < other.images

    def to_dict(self, **kw):
        return {"n": self.n, "images": [subset_to_indices(bits) for bits in self.images]}

    @classmethod
    def from_dict(cls, d, **kw):
        n = d["n"]
        return cls(n, [subset_from_indices(image, n) for image in d["images"]])

    def __str__(self):
        return pprint.pformat(self.to_dict())

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, ",".join(format_subset(bits) for bits in self.images))


class Endomorphism(CandidateMap):
    """ A monoid endomorphism of K_n, stored by the contents c(phi(a_i)) of the generator images

    Since an idempotent is determined by its content, phi(a_i) = e_{images[i]}.
    """
    def __init__(self, n, images, validate=True):
        """

        :param n: the number of generators
        :type n: int
        :param images: n bitmasks
        :type images: Iterable[int]
        :param validate: whether to reject image tuples that are not monotone
        :type validate: bool
        """

        super().__init__(n, images)
        if validate and not is_monotone(SetSequence(n, self.images)):
            raise DomainError("Error: images %r do not define an endomorphism of K_%d." % (self.images, n))


def identity_endomorphism(n):
    return Endomorphism(n, [1 << i for i in range(n)])
