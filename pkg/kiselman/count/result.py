import pprint
from ..errors import DomainError
from ..object import JsonSerializedObject

CLOSED_FORMULA = "closed_formula"
BRUTE_FORCE = "brute_force"
SOURCES = (CLOSED_FORMULA, BRUTE_FORCE)


class CountResult(JsonSerializedObject):
    """ The number c_{m,n} of m x n boolean matrices avoiding [[0, 1], [1, 0]], with its provenance

    """
    def __init__(self, m, n, value, source):
        """

        :param m: the number of rows
        :type m: int
        :param n: the number of columns
        :type n: int
        :param value: the count
        :type value: int
        :param source: either "closed_formula" or "brute_force"
        :type source: str
        """

        super().__init__()
        if source not in SOURCES:
            raise DomainError("Error: unknown count source %r." % (source))
        if not 1 <= value <= 1 << (m * n):
            raise DomainError("Error: c_{%d,%d} = %d lies outside [1, 2^%d]." % (m, n, value, m * n))
        self.m = m
        self.n = n
        self.value = value
        self.source = source

    def __eq__(self, other):
        return isinstance(other, CountResult) and (self.m, self.n, self.value) == (other.m, other.n, other.value)

    def __hash__(self):
        return hash((self.m, self.n, self.value))

    def to_dict(self, **kw):
        return {"m": self.m, "n": self.n, "value": str(self.value), "source": self.source}

    @classmethod
    def from_dict(cls, d, **kw):
        return cls(d["m"], d["n"], int(d["value"]), d["source"])

    def __str__(self):
        return pprint.pformat(self.to_dict())

    def __repr__(self):
        return "c_{%d,%d}=%d (%s)" % (self.m, self.n, self.value, self.source)
