"""
errors.py
---------

Description:
    Exceptions raised by the toolkit. Each class carries the exit code the
    command-line front end reports for it, so that cli.py can turn any
    library failure into a message and a status without a lookup table.

    Exit codes: 2 input error, 4 unsupported shape, 5 numerical failure.
    (3 is reserved for a verification mismatch, which is a result rather
    than an exception.)
"""


class CayleyError(Exception):
    """Base class for every error the toolkit raises on purpose."""

    exit_code = 5


class InvalidInput(CayleyError, ValueError):
    exit_code = 2


class GrammarError(InvalidInput):
    """A group or connection-set string could not be parsed."""

    def __init__(self, token, reason):
        self.token = token
        super().__init__(f"cannot parse '{token}': {reason}")


class IdentityInConnectionSet(InvalidInput):
    pass


class NotInverseClosed(InvalidInput):
    def __init__(self, element):
        self.element = element
        super().__init__(f"connection set is not inverse-closed: the inverse of {element} is missing")


class EmptyFactorSet(InvalidInput):
    pass


class NotSymmetric(InvalidInput):
    pass


class UnsupportedShape(CayleyError):
    exit_code = 4


class UnsupportedDegree(UnsupportedShape):
    pass


class UnsupportedPowerIndex(UnsupportedShape):
    pass


class TooLargeForDenseOracle(UnsupportedShape):
    pass


class ExactFormUnavailable(UnsupportedShape):
    pass


class NumericalFailure(CayleyError):
    exit_code = 5


class InternalInconsistency(NumericalFailure):
    pass


class InconsistentPowerSums(NumericalFailure):
    pass


class ConvergenceFailure(NumericalFailure):
    pass
