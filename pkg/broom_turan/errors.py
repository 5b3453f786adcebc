"""Exceptions raised by the broom-turan package."""


class BroomTuranError(Exception):
    """Base exception for domain errors."""


class InvalidParameterError(BroomTuranError, ValueError):
    """A parameter is outside the range an operation accepts."""


class SizeLimitError(BroomTuranError):
    """Input exceeds a configured cap."""


class MalformedInputError(BroomTuranError, ValueError):
    """Input data (graph6 or configuration) cannot be parsed."""


class ObjectiveOverflowError(BroomTuranError, OverflowError):
    """An objective value does not fit the result width."""
