"""Exception hierarchy shared by every module of the package."""


class HasseError(Exception):
    """Base class for all errors raised by hassebuild."""


class ParameterTooLarge(HasseError, ValueError):
    pass


class InputNotJoinSemilattice(HasseError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InputSyntaxError(HasseError, ValueError):
    """Malformed input text; carries a 1-based line and column when known."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)
        self.line = line
        self.column = column


class LatticeValidationError(HasseError, ValueError):
    """The input relation does not define a finite lattice."""

    def __init__(self, report):
        first = report.failures[0] if report.failures else ("unknown", ())
        super().__init__(f"not a lattice: {first[0]} at {', '.join(map(str, first[1]))}")
        self.report = report


class UnknownAttribute(HasseError, KeyError):
    pass


class NotAPermutation(HasseError, ValueError):
    pass


class InvalidRankKey(HasseError, ValueError):
    pass


class InvalidOrder(HasseError, ValueError):
    pass


class EmbeddingInvalid(HasseError, ValueError):
    def __init__(self, report):
        first = report.failures[0] if report.failures else ("unknown", ())
        super().__init__(f"invalid embedding: {first[0]} at {', '.join(map(str, first[1]))}")
        self.report = report
