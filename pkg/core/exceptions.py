class SymtestError(Exception):
    """Base class of every error raised by symtest."""


class DimensionMismatch(SymtestError, ValueError):
    pass


class DegreeMismatch(SymtestError, ValueError):
    pass


class FormSyntaxError(SymtestError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = f'line {line}, column {column}: {message}'
        super().__init__(message)


class KostkaWeightMismatch(SymtestError, ValueError):
    pass


class SchurDivisionError(SymtestError, ArithmeticError):
    """The alternant was not divisible by the Vandermonde determinant."""


class NonPositiveCoordinate(SymtestError, ValueError):
    pass


class PatternError(SymtestError, ValueError):
    pass


class ParameterError(SymtestError, ValueError):
    pass


class ConditionsNotSatisfied(SymtestError):
    def __init__(self, report):
        self.report = report
        violations = '; '.join(report.violations) or 'unknown'
        super().__init__(f'{report.theorem} conditions violated: {violations}')


class ZeroMinorError(SymtestError, ArithmeticError):
    """Every summand of the requested minor is the zero polynomial."""


class BaseSearchExhausted(SymtestError):
    pass


class CertificateFailure(SymtestError):
    pass


class PowerMeanBoundError(SymtestError, ArithmeticError):
    pass
