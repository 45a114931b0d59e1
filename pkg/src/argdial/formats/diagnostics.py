"""
Located diagnostics for argdial text formats
"""

from typing import Any

from pydantic import BaseModel, ConfigDict

from .grammar import LineError


class Diagnostic(BaseModel):
    """A located problem found while reading a document"""

    model_config = ConfigDict(frozen=True)

    line: int
    column: int = 1
    message: str
    source: str = "<input>"

    def __str__(self) -> str:
        return f"{self.source}:{self.line}:{self.column}: {self.message}"

    def to_dict(self) -> dict[str, Any]:
        return self.model_dump()

    @classmethod
    def at(cls, line: int, error: LineError, source: str) -> "Diagnostic":
        return cls(line=line, column=error.column, message=error.message, source=source)
