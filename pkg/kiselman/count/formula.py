""" Closed formulas for c_{m,n}, m = 2..5, evaluated in exact rational arithmetic

Each formula has the shape c_{m,n} = (1 / d) * P(n) * b^(n - k); for n < k the power is a fraction, so
intermediate values are Fractions and only the final value must be a positive integer.
"""

from collections import namedtuple
from fractions import Fraction
from .result import CLOSED_FORMULA, CountResult
from ..errors import DomainError, FormulaError

ClosedFormula = namedtuple("ClosedFormula", ["divisor", "coefficients", "base", "offset"])

# coefficients of P(n) in ascending powers of n
CLOSED_FORMULAS = {
    # (3 + n) 3^(n - 1)
    2: ClosedFormula(1, (3, 1), 3, 1),
    # (2 + n)(96 + 31 n + n^2) = 192 + 158 n + 33 n^2 + n^3
    3: ClosedFormula(3, (192, 158, 33, 1), 4, 3),
    4: ClosedFormula(36, (2812500, 3963450, 1862971, 339300, 21265, 510, 4), 5, 7),
    5: ClosedFormula(
        350,
        (
            4571242905600, 9431397663120, 7249916118636, 2618093085240, 466294991825, 41039857215,
            1926425298, 50381010, 729825, 5415, 16
        ),
        6,
        13,
    ),
}


def evaluate_polynomial(coefficients, n):
    value = 0
    for c in reversed(coefficients):
        value = value * n + c
    return value


def closed_value(m, n):
    """ Evaluate the closed formula for c_{m,n} as a Fraction

    :param m: the number of rows, 2..5
    :type m: int
    :param n: the number of columns
    :type n: int
    :return: the exact value
    :rtype: fractions.Fraction
    """

    if m not in CLOSED_FORMULAS:
        raise DomainError("Error: no closed formula for m = %d; closed formulas exist for m in 2..5." % (m))
    if n < 1:
        raise DomainError("Error: n = %d should be positive." % (n))
    formula = CLOSED_FORMULAS[m]
    value = Fraction(evaluate_polynomial(formula.coefficients, n), formula.divisor)
    return value * Fraction(formula.base) ** (n - formula.offset)


def closed_count(m, n):
    """ c_{m,n} from its closed formula

    :param m: the number of rows, 2..5
    :type m: int
    :param n: the number of columns
    :type n: int
    :return: the count
    :rtype: kiselman.count.result.CountResult
    """

    value = closed_value(m, n)
    if value.denominator != 1 or value < 1:
        raise FormulaError("Error: the closed formula for c_{%d,%d} evaluates to %s, not a positive integer." % (m, n, value))
    return CountResult(m, n, value.numerator, CLOSED_FORMULA)
