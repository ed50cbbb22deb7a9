"""Exception hierarchy.

Every error raised on bad input derives from :class:`CageError` (itself a
``ValueError``) so callers and the command line can separate input problems
from mathematical verdicts, which are reported rather than raised.
"""


class CageError(ValueError):
    pass


class DegreeOverflowError(CageError):
    pass


class DegreeMismatchError(CageError):
    pass


class InvalidPointError(CageError):
    pass


class InvalidDivisorError(CageError):
    pass


class CoincidentLinesError(CageError):
    pass


class NonGenericCageError(CageError):
    pass


class GenerationError(CageError):
    pass


class SingularPointError(CageError):
    pass


class PreconditionError(CageError):
    pass


class DuplicatePointError(CageError):
    pass


class SquareCageRequiredError(CageError):
    pass


class NodeInputError(CageError):
    pass


class NotIncidentError(CageError):
    pass


class DegenerateComponentError(CageError):
    pass


class InvalidViewportError(CageError):
    pass


class TooSmallError(CageError):
    pass


class InternalConsistencyError(AssertionError):
    """A computed object failed its own exact re-check; indicates a bug."""
