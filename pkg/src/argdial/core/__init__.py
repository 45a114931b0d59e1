"""
Core plumbing shared by every argdial component
"""

from .config import ArgdialConfig
from .exceptions import (
    AmbiguousMatchError,
    ArgdialError,
    ClassificationError,
    ClosedDialogueError,
    ConfigurationError,
    CQStateError,
    DialogueError,
    DuplicateCQError,
    DuplicateSchemeError,
    ErrorHandler,
    EvaluationError,
    FormatError,
    GraphSizeError,
    IncoherentDialogueError,
    IncompleteSubstitutionError,
    InvalidCQIndexError,
    MalformedFormError,
    RegistryError,
    RuleViolationError,
    SchemeError,
    SchemeNotFoundError,
    SchemeValidationError,
    ShiftError,
    SubstitutionConflictError,
    UnknownArgumentError,
    create_error_response,
    wrap_exception,
)

__all__ = [
    "ArgdialConfig",
    "ArgdialError",
    "ConfigurationError",
    "SchemeError",
    "MalformedFormError",
    "AmbiguousMatchError",
    "SubstitutionConflictError",
    "IncompleteSubstitutionError",
    "SchemeValidationError",
    "RegistryError",
    "SchemeNotFoundError",
    "DuplicateSchemeError",
    "ClassificationError",
    "EvaluationError",
    "UnknownArgumentError",
    "InvalidCQIndexError",
    "DuplicateCQError",
    "CQStateError",
    "GraphSizeError",
    "DialogueError",
    "IncoherentDialogueError",
    "RuleViolationError",
    "ShiftError",
    "ClosedDialogueError",
    "FormatError",
    "ErrorHandler",
    "create_error_response",
    "wrap_exception",
]
