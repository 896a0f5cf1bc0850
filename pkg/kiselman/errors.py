class KiselmanError(ValueError):
    """ Base error of the kiselman package

    """
    exit_code = 2


class DomainError(KiselmanError):
    """ A value lies outside the carrier it is used in (letters out of range, mismatched n,
    non-monotone sequences, matrices outside D_n)

    """
    exit_code = 2


class GuardExceededError(KiselmanError):
    """ A resource guard (element cap, enumeration size, bit budget) was tripped

    """
    exit_code = 3


class CompletionError(GuardExceededError):
    """ The rule cap was exceeded before the rewriting system became confluent

    """
    exit_code = 3


class FormulaError(KiselmanError):
    """ A closed counting formula did not evaluate to a positive integer

    """
    exit_code = 1


class VerificationError(KiselmanError):
    """ A computed object failed its own consistency check (an unresolved overlap after completion,
    a composition disagreeing with substitution, a Cayley table leaving its carrier)

    """
    exit_code = 1
