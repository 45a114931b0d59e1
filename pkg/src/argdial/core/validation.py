"""
Input validation utilities for argdial.

Identifiers, template text and ground terms all pass through here so the
model layers share one notion of well-formed input.
"""

import re
import unicodedata
from typing import Any

from .exceptions import SchemeValidationError


class StringLimits:
    """Common string length limits"""

    MIN_IDENTIFIER_LENGTH = 1
    MAX_IDENTIFIER_LENGTH = 128

    MAX_TEMPLATE_LENGTH = 4096
    MAX_TERM_LENGTH = 4096


IDENTIFIER_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_.\-]*$")
VARIABLE_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def normalize_text(value: str) -> str:
    """Normalize to composed Unicode form; templates are compared after this"""
    return unicodedata.normalize("NFC", value)


def quote_text(value: str) -> str:
    """
    Double-quote text for the line formats.

    Backslashes, quotes and line breaks are escaped, so the result always
    fits on one line.
    """
    escaped = value.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n").replace("\r", "\\r")
    return f'"{escaped}"'


def validate_identifier(value: Any, field_name: str = "Identifier") -> str:
    """
    Validate an identifier (scheme id, argument id, participant id).

    Raises:
        SchemeValidationError: If the identifier is invalid
    """
    if not isinstance(value, str):
        raise SchemeValidationError(f"{field_name} must be a string, got {type(value).__name__}")

    if not (StringLimits.MIN_IDENTIFIER_LENGTH <= len(value) <= StringLimits.MAX_IDENTIFIER_LENGTH):
        raise SchemeValidationError(
            f"{field_name} must be between {StringLimits.MIN_IDENTIFIER_LENGTH} and "
            f"{StringLimits.MAX_IDENTIFIER_LENGTH} characters",
            {"value": value},
        )

    if not IDENTIFIER_RE.match(value):
        raise SchemeValidationError(
            f"{field_name} '{value}' contains invalid characters. "
            "Must start with a letter or underscore and contain only letters, digits, "
            "underscores, dots and hyphens.",
            {"value": value},
        )

    return value


def validate_variable_name(value: Any) -> str:
    """Schematic variable names are plain identifiers without dots or hyphens"""
    if not isinstance(value, str) or not VARIABLE_RE.match(value):
        raise SchemeValidationError(f"Invalid schematic variable name: {value!r}", {"value": value})
    return value


def validate_ground_term(variable: str, value: Any) -> str:
    """
    Validate a ground term bound to a schematic variable.

    Ground terms are opaque non-empty text and may not contain slot braces.
    """
    if not isinstance(value, str):
        raise SchemeValidationError(
            f"Binding for '{variable}' must be text, got {type(value).__name__}",
            {"variable": variable},
        )

    value = normalize_text(value)

    if not value:
        raise SchemeValidationError(f"Binding for '{variable}' is empty", {"variable": variable})

    if len(value) > StringLimits.MAX_TERM_LENGTH:
        raise SchemeValidationError(
            f"Binding for '{variable}' exceeds {StringLimits.MAX_TERM_LENGTH} characters",
            {"variable": variable},
        )

    if "{" in value or "}" in value:
        raise SchemeValidationError(
            f"Binding for '{variable}' contains slot delimiters", {"variable": variable}
        )

    return value


def sanitize_for_logging(value: Any, max_length: int = 100) -> str:
    """
    Sanitize value for safe logging.

    Args:
        value: Value to sanitize
        max_length: Maximum length for string representation

    Returns:
        Safe string representation
    """
    str_value = str(value)

    if len(str_value) > max_length:
        str_value = str_value[:max_length] + "..."

    str_value = "".join(char for char in str_value if char.isprintable() or char.isspace())

    return str_value
