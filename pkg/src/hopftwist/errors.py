"""Exception hierarchy shared by every module of the package."""


class HopfError(Exception):
    """Base class for all errors raised by hopftwist."""


class DivisionByZero(HopfError, ZeroDivisionError):
    pass


class ConductorNotMultiple(HopfError, ValueError):
    pass


class ConductorOverflow(HopfError, ValueError):
    pass


class NotCoprime(HopfError, ValueError):
    pass


class ParseError(HopfError, ValueError):
    """Malformed cyclotomic literal or input file.

    ``position`` is the character offset of the offending token when the
    error comes from the literal parser, otherwise ``None``.
    """

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DimensionMismatch(HopfError, ValueError):
    pass


class SingularMatrix(HopfError, ValueError):
    pass


class SingularAntipode(SingularMatrix):
    pass


class OrderBoundExceeded(HopfError):
    """No power up to ``bound`` reached the identity; the order may be infinite."""

    def __init__(self, bound, what="map"):
        self.bound = bound
        super().__init__(
            f"{what} did not reach the identity within bound {bound}; "
            "bound exceeded; order may be infinite"
        )


class ExponentBoundExceeded(OrderBoundExceeded):
    def __init__(self, bound):
        self.bound = bound
        HopfError.__init__(
            self, f"no k <= {bound} works: bound exceeded; exponent may be infinite"
        )


class InvalidAlgebra(HopfError):
    """Hopf axioms fail for a structure that was required to be verified."""

    def __init__(self, report):
        self.report = report
        bad = report.first_failure
        super().__init__(f"Hopf axiom check failed: {bad}")


class InvalidAutomorphism(HopfError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"not a Hopf algebra automorphism: {report.first_failure}")


class InvalidRepresentation(HopfError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"not a representation: {report.first_failure}")


class NotAGroup(HopfError, ValueError):
    pass


class NotAGroupAutomorphism(HopfError, ValueError):
    pass


class NotGrouplike(HopfError, ValueError):
    pass


class NoNormalizedIntegral(HopfError):
    pass


class NotInvolutory(HopfError):
    pass


class MNotDivisibleByOrder(HopfError, ValueError):
    pass


class MethodDisagreement(HopfError):
    """Two independent computation paths produced different answers."""


class UnknownName(HopfError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownAutomorphism(UnknownName):
    pass


class UnknownBuiltin(UnknownName):
    pass


class UnknownModule(UnknownName):
    pass
