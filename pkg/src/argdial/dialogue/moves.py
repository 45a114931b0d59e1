"""
Dialogue moves and their payloads
"""

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.validation import quote_text
from ..schemes.model import ArgumentInstance, Scheme
from .types import DialogueTypeId, MoveKind


class ShiftMode(Enum):
    REPLACE = "replace"
    EMBED = "embed"
    POP = "pop"


# payload fields each kind requires; everything else must be absent
_REQUIRED: dict[MoveKind, frozenset[str]] = {
    MoveKind.ASSERT: frozenset({"statement"}),
    MoveKind.ARGUE: frozenset({"argument", "scheme"}),
    MoveKind.POSE_CQ: frozenset(),
    MoveKind.ANSWER_CQ: frozenset({"argument_id", "cq_index", "statement"}),
    MoveKind.CONCEDE: frozenset({"statement"}),
    MoveKind.RETRACT: frozenset({"statement"}),
    MoveKind.OFFER: frozenset({"statement"}),
    MoveKind.ACCEPT: frozenset(),
    MoveKind.PROPOSE_SHIFT: frozenset({"shift_mode", "shift_target"}),
    MoveKind.ACCEPT_SHIFT: frozenset(),
    MoveKind.CLOSE: frozenset(),
}
_OPTIONAL: dict[MoveKind, frozenset[str]] = {
    # a critical question of an argument, or a challenge of an asserted statement
    MoveKind.POSE_CQ: frozenset({"argument_id", "cq_index", "statement"}),
    MoveKind.OFFER: frozenset({"cost"}),
    MoveKind.ACCEPT: frozenset({"statement"}),
}
_PAYLOAD_FIELDS = (
    "statement",
    "argument",
    "scheme",
    "argument_id",
    "cq_index",
    "shift_mode",
    "shift_target",
    "cost",
)


class Move(BaseModel):
    """
    One dialogue act.

    A move with no speaker is resolved to whoever holds the turn when it is
    replayed; `apply_move` only accepts moves with a speaker.
    """

    model_config = ConfigDict(frozen=True)

    speaker: str | None = None
    kind: MoveKind
    statement: str | None = None
    argument: ArgumentInstance | None = None
    scheme: Scheme | None = None
    argument_id: str | None = None
    cq_index: int | None = Field(default=None, ge=1)
    shift_mode: ShiftMode | None = None
    shift_target: DialogueTypeId | None = None
    cost: float | None = Field(default=None, ge=0)

    @model_validator(mode="after")
    def check_payload(self) -> "Move":
        present = {name for name in _PAYLOAD_FIELDS if getattr(self, name) is not None}
        required = _REQUIRED[self.kind]
        allowed = required | _OPTIONAL.get(self.kind, frozenset())
        missing = required - present
        if missing:
            raise ValueError(f"{self.kind.value} needs {', '.join(sorted(missing))}")
        extra = present - allowed
        if extra:
            raise ValueError(f"{self.kind.value} does not take {', '.join(sorted(extra))}")
        if self.kind is MoveKind.POSE_CQ:
            partial = (self.argument_id is None) != (self.cq_index is None)
            question = self.argument_id is not None and self.cq_index is not None
            if partial or question == (self.statement is not None):
                raise ValueError("pose-cq needs an argument id and question number, or a statement")
        if self.shift_mode is ShiftMode.POP:
            raise ValueError("pop is not a proposable shift mode")
        if self.statement is not None and not self.statement.strip():
            raise ValueError("statement must not be empty")
        return self

    def by(self, speaker: str) -> "Move":
        return self.model_copy(update={"speaker": speaker})

    @property
    def target_argument(self) -> str | None:
        if self.argument is not None:
            return self.argument.id
        return self.argument_id

    def describe(self) -> str:
        """Single-line rendering without the speaker"""
        parts = [self.kind.value]
        if self.kind is MoveKind.ARGUE and self.argument is not None:
            parts.append(self.argument.id)
        if self.kind is MoveKind.PROPOSE_SHIFT and self.shift_mode and self.shift_target:
            parts += [self.shift_mode.value, self.shift_target.value]
        if self.argument_id is not None:
            parts += [self.argument_id, str(self.cq_index)]
        if self.statement is not None:
            parts.append(quote_text(self.statement))
        if self.cost is not None:
            parts += ["cost", format_cost(self.cost)]
        return " ".join(parts)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"speaker": self.speaker, "kind": self.kind.value}
        if self.argument is not None:
            data["argument"] = self.argument.id
        for name in ("statement", "argument_id", "cq_index", "cost"):
            if (value := getattr(self, name)) is not None:
                data[name] = value
        if self.shift_mode is not None:
            data["shift_mode"] = self.shift_mode.value
        if self.shift_target is not None:
            data["shift_target"] = self.shift_target.value
        return data


def format_cost(cost: float) -> str:
    return str(int(cost)) if float(cost).is_integer() else repr(cost)
