"""
Unified exception hierarchy for argdial

This module provides a comprehensive exception hierarchy for consistent
error handling across schemes, evaluation, dialogues and formats.
"""

from typing import Any


class ArgdialError(Exception):
    """Base exception for all argdial errors"""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        if self.details:
            return f"{self.message} - Details: {self.details}"
        return self.message


class ConfigurationError(ArgdialError):
    """Errors related to package configuration"""

    pass


# Scheme-model errors
class SchemeError(ArgdialError):
    """Base exception for scheme and form errors"""

    pass


class MalformedFormError(SchemeError):
    """Template has unbalanced or empty slot delimiters"""

    pass


class AmbiguousMatchError(SchemeError):
    """A sentence matches a form under more than one substitution"""

    def __init__(self, message: str, candidates: list[dict[str, str]]):
        super().__init__(message, {"candidates": candidates})
        self.candidates = candidates


class SubstitutionConflictError(SchemeError):
    """Same variable bound to two different ground terms"""

    def __init__(self, variable: str, first: str, second: str):
        super().__init__(
            f"Conflicting bindings for variable '{variable}'",
            {"variable": variable, "bindings": [first, second]},
        )
        self.variable = variable


class IncompleteSubstitutionError(SchemeError):
    """Substitution leaves scheme variables unbound"""

    def __init__(self, scheme_id: str, unbound: list[str]):
        super().__init__(
            f"Incomplete substitution for scheme '{scheme_id}': unbound {', '.join(unbound)}",
            {"scheme_id": scheme_id, "unbound": unbound},
        )
        self.unbound = unbound


class SchemeValidationError(SchemeError):
    """Scheme or instance violates a structural condition"""

    pass


# Registry errors
class RegistryError(ArgdialError):
    """Base exception for scheme registry errors"""

    pass


class SchemeNotFoundError(RegistryError):
    """Lookup of an unknown scheme id"""

    def __init__(self, scheme_id: str):
        super().__init__(f"Scheme not found: '{scheme_id}'", {"scheme_id": scheme_id})
        self.scheme_id = scheme_id


class DuplicateSchemeError(RegistryError):
    """Registration under an id already in use"""

    def __init__(self, scheme_id: str):
        super().__init__(f"Scheme id already registered: '{scheme_id}'", {"scheme_id": scheme_id})
        self.scheme_id = scheme_id


class ClassificationError(RegistryError):
    """Scheme class and default qualifier disagree"""

    pass


# Evaluation errors
class EvaluationError(ArgdialError):
    """Base exception for argument graph errors"""

    pass


class UnknownArgumentError(EvaluationError):
    """Argument id not present in the graph"""

    def __init__(self, argument_id: str):
        super().__init__(f"Unknown argument: '{argument_id}'", {"argument_id": argument_id})
        self.argument_id = argument_id


class InvalidCQIndexError(EvaluationError):
    """Critical question index out of range for the argument's scheme"""

    pass


class DuplicateCQError(EvaluationError):
    """Critical question already posed against the argument"""

    pass


class CQStateError(EvaluationError):
    """Answering a question that was never posed or was already answered"""

    pass


class GraphSizeError(EvaluationError):
    """Graph exceeds the brute-force enumeration cap"""

    pass


# Dialogue errors
class DialogueError(ArgdialError):
    """Base exception for dialogue errors"""

    pass


class IncoherentDialogueError(DialogueError):
    """Dialogue type, situation and goal do not form a valid combination"""

    pass


class RuleViolationError(DialogueError):
    """Move not permitted in the current dialogue state"""

    def __init__(self, message: str, permission: str, details: dict[str, Any] | None = None):
        super().__init__(message, {"permission": permission, **(details or {})})
        self.permission = permission


class ShiftError(DialogueError):
    """Dialectical shift or embedding failure"""

    pass


class ClosedDialogueError(DialogueError):
    """Operation on a dialogue that has already closed"""

    pass


# Format errors
class FormatError(ArgdialError):
    """Text document could not be turned into a model"""

    pass


def wrap_exception(
    original_exception: Exception,
    new_exception_class: type[ArgdialError],
    message: str | None = None,
    details: dict[str, Any] | None = None,
) -> ArgdialError:
    """
    Wrap an external exception in an argdial exception.

    Args:
        original_exception: The original exception to wrap
        new_exception_class: The argdial exception class to use
        message: Optional custom message (uses original message if not provided)
        details: Additional details to include

    Returns:
        New argdial exception with original exception details
    """
    error_message = message or str(original_exception)
    error_details = dict(details or {})
    error_details["original_exception"] = {
        "type": type(original_exception).__name__,
        "message": str(original_exception),
    }

    wrapped = new_exception_class(error_message, error_details)
    wrapped.__cause__ = original_exception
    return wrapped


def create_error_response(exception: ArgdialError) -> dict[str, Any]:
    """
    Create a standardized error response dictionary.

    No timestamp is included so reports built from it stay reproducible.
    """
    response: dict[str, Any] = {
        "error": True,
        "error_type": type(exception).__name__,
        "message": exception.message,
    }

    if exception.details:
        response["details"] = exception.details

    return response


class ErrorHandler:
    """
    Context manager converting foreign exceptions into argdial ones.

    Example:
        with ErrorHandler("Reading scheme file", FormatError):
            text = path.read_text(encoding="utf-8")
    """

    def __init__(
        self,
        operation_description: str,
        exception_class: type[ArgdialError] = ArgdialError,
        details: dict[str, Any] | None = None,
        reraise: bool = True,
    ):
        self.operation_description = operation_description
        self.exception_class = exception_class
        self.details = details or {}
        self.reraise = reraise
        self.error: ArgdialError | None = None

    def __enter__(self) -> "ErrorHandler":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> bool:
        if exc_type is None:
            return False

        # Already properly typed
        if isinstance(exc_val, ArgdialError):
            if self.reraise:
                return False
            self.error = exc_val
            return True

        if not isinstance(exc_val, Exception):
            return False

        wrapped_exception = wrap_exception(
            exc_val, self.exception_class, self.operation_description, self.details
        )

        if self.reraise:
            raise wrapped_exception from exc_val

        self.error = wrapped_exception
        return True
