"""Exception hierarchy shared by every ftpie module."""


class FaultTreeError(Exception):
    """Base class. ``line``/``column`` are filled in when the error comes from a parsed file."""

    def __init__(self, message, *, node=None, line=None, column=None):
        super().__init__(message)
        self.message = message
        self.node = node
        self.line = line
        self.column = column

    def __str__(self):
        if self.line is None:
            return self.message
        if self.column is None:
            return f"line {self.line}: {self.message}"
        return f"line {self.line}, col {self.column}: {self.message}"


# -- tree validation (build_tree) --------------------------------------------

class ValidationError(FaultTreeError):
    pass


class DuplicateIdError(ValidationError):
    pass


class UnknownReferenceError(ValidationError):
    pass


class CycleError(ValidationError):
    pass


class BadArityError(ValidationError):
    pass


class IncompleteStateError(FaultTreeError, KeyError):
    __str__ = FaultTreeError.__str__


# -- parsing -------------------------------------------------------------------

class ParseError(FaultTreeError):
    pass


class NandTildeOutsideNandError(ParseError):
    pass


class NandMissingTildeError(ParseError):
    pass


# -- analysis ------------------------------------------------------------------

class AnalysisError(FaultTreeError):
    """Raised when a valid tree cannot be analysed by the requested method."""


class OutOfRangeError(AnalysisError, ValueError):
    pass


class NonCoherentError(AnalysisError):
    pass


class CutSetExplosionError(AnalysisError):
    pass


class MissingEventError(AnalysisError, KeyError):
    __str__ = FaultTreeError.__str__


class TooManyCutSetsError(AnalysisError):
    pass


class EnumTooLargeError(AnalysisError):
    pass


class NumericalError(AnalysisError):
    pass
