import pprint
import time
from ..object import JsonSerializedObject


def serialize(value):
    """ Render a counterexample into JSON-compatible data

    :param value: a value type, a container of them, or a plain value
    :type value: object
    :return: JSON-compatible data
    :rtype: object
    """

    if isinstance(value, JsonSerializedObject):
        return value.to_dict()
    if isinstance(value, dict):
        return {str(k): serialize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [serialize(v) for v in value]
    if isinstance(value, (bool, str, float)) or value is None:
        return value
    if isinstance(value, int):
        return value if abs(value) < 1 << 53 else str(value)
    return repr(value)


class CheckResult(JsonSerializedObject):
    """ One verified property at one scale

    """
    def __init__(self, property_id, scope, passed, counterexample=None):
        """

        :param property_id: a dotted property name, e.g. "morphisms.phi_homomorphism"
        :type property_id: str
        :param scope: what was covered, e.g. "n=3, exhaustive, 108900 pairs"
        :type scope: str
        :param passed: whether the property held
        :type passed: bool
        :param counterexample: a witness of the failure (required when failed)
        :type counterexample: object
        """

        super().__init__()
        if not passed and counterexample is None:
            raise ValueError("Error: failing check %s carries no counterexample." % (property_id))
        self.property_id = property_id
        self.scope = scope
        self.passed = passed
        self.counterexample = counterexample

    def to_dict(self, **kw):
        d = {"property": self.property_id, "scope": self.scope, "passed": self.passed}
        if not self.passed:
            d["counterexample"] = serialize(self.counterexample)
        return d

    @classmethod
    def from_dict(cls, d, **kw):
        return cls(d["property"], d["scope"], d["passed"], d.get("counterexample"))

    def __repr__(self):
        return "%s [%s] %s" % (self.property_id, self.scope, "pass" if self.passed else "FAIL")


class VerificationReport(JsonSerializedObject):
    """ The checks of one suite with their wall time

    """
    def __init__(self, suite, checks=None, wall_time=None):
        super().__init__()
        self.suite = suite
        self.checks = list(checks) if checks else []
        self.wall_time = wall_time
        self._start = time.perf_counter()

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def record(self, property_id, scope, counterexample=None):
        """ Record a check; it passed iff no counterexample was found

        :param property_id: the property name
        :type property_id: str
        :param scope: the covered scale
        :type scope: str
        :param counterexample: the first witness of a failure, or None
        :type counterexample: object
        :return: the recorded check
        :rtype: kiselman.verify.report.CheckResult
        """

        check = CheckResult(property_id, scope, counterexample is None, counterexample)
        self.checks.append(check)
        return check

    def finish(self):
        self.wall_time = time.perf_counter() - self._start
        return self

    def to_dict(self, timestamp=True, **kw):
        d = {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }
        if timestamp:
            d["wall_time"] = round(self.wall_time, 3) if self.wall_time is not None else None
        return d

    @classmethod
    def from_dict(cls, d, **kw):
        return cls(d["suite"], [CheckResult.from_dict(c) for c in d["checks"]], d.get("wall_time"))

    def __str__(self):
        return pprint.pformat(self.to_dict())

    def __repr__(self):
        return "%s: %d checks, %s" % (self.suite, len(self.checks), "pass" if self.passed else "FAIL")


def first_failure(items, predicate):
    """ The first item violating a predicate, or None

    :param items: candidates
    :type items: Iterable[object]
    :param predicate: the property to check
    :type predicate: Callable[[object], bool]
    :return: the first counterexample
    :rtype: object
    """

    for item in items:
        if not predicate(item):
            return item
    return None
