"""
Dialogue state: a stack of frames plus the shift log

All values are immutable; the engine derives new states with
`dataclasses.replace`.
"""

from dataclasses import dataclass, field
from typing import Any

from ..evaluation.graph import ArgumentGraph
from .moves import Move, ShiftMode
from .types import DialogueType, ParticipantRole


@dataclass(frozen=True)
class Offer:
    speaker: str
    statement: str
    cost: float | None = None


@dataclass(frozen=True)
class Challenge:
    """An open challenge of a statement `defender` asserted"""

    challenger: str
    defender: str
    statement: str


@dataclass(frozen=True)
class PendingShift:
    proposer: str
    mode: ShiftMode
    target: DialogueType


@dataclass(frozen=True)
class ShiftLogEntry:
    """One dialectical shift; `turn` is the global index of the triggering move"""

    turn: int
    from_type: str
    to_type: str
    mode: ShiftMode
    degraded: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "turn": self.turn,
            "from": self.from_type,
            "to": self.to_type,
            "mode": self.mode.value,
            "degraded": self.degraded,
        }


@dataclass(frozen=True)
class Frame:
    """
    One dialogue on the stack.

    `stores` hold only what was committed inside this frame; commitments of
    enclosing frames are visible as read-only background.
    """

    dialogue_type: DialogueType
    stores: tuple[tuple[str, frozenset[str]], ...]
    history: tuple[Move, ...] = ()
    graph: ArgumentGraph = field(default_factory=ArgumentGraph)
    owners: tuple[tuple[str, str], ...] = ()
    offers: tuple[Offer, ...] = ()
    challenges: tuple[Challenge, ...] = ()
    pending_shift: PendingShift | None = None
    concessions: int = 0
    closed: bool = False

    @classmethod
    def open(cls, dialogue_type: DialogueType, participants: tuple[str, str]) -> "Frame":
        return cls(dialogue_type=dialogue_type, stores=tuple((p, frozenset()) for p in participants))

    def store(self, participant: str) -> frozenset[str]:
        return dict(self.stores)[participant]

    def owner(self, argument_id: str) -> str | None:
        return dict(self.owners).get(argument_id)


@dataclass(frozen=True)
class DialogueState:
    """
    Two participants, a non-empty frame stack and an append-only shift log.

    `moves` is every accepted move in order, across all frames.
    """

    participants: tuple[str, str]
    frames: tuple[Frame, ...]
    turn: str
    shift_log: tuple[ShiftLogEntry, ...] = ()
    moves: tuple[Move, ...] = ()
    archived: tuple[Frame, ...] = ()
    closed: bool = False
    max_depth: int = 8

    @property
    def proponent(self) -> str:
        return self.participants[0]

    @property
    def respondent(self) -> str:
        return self.participants[1]

    @property
    def top(self) -> Frame:
        return self.frames[-1]

    @property
    def depth(self) -> int:
        return len(self.frames)

    @property
    def dialogue_type(self) -> DialogueType:
        return self.top.dialogue_type

    def role(self, participant: str) -> ParticipantRole:
        if participant == self.proponent:
            return ParticipantRole.PROPONENT
        return ParticipantRole.RESPONDENT

    def other(self, participant: str) -> str:
        return self.respondent if participant == self.proponent else self.proponent

    def background(self, participant: str) -> frozenset[str]:
        """Commitments inherited from enclosing frames"""
        inherited: frozenset[str] = frozenset()
        for frame in self.frames[:-1]:
            inherited |= frame.store(participant)
        return inherited

    def commitments(self, participant: str) -> frozenset[str]:
        """Everything `participant` is committed to at the current frame"""
        return self.background(participant) | self.top.store(participant)

    def to_dict(self) -> dict[str, Any]:
        return {
            "participants": list(self.participants),
            "turn": self.turn,
            "closed": self.closed,
            "stack": [
                {
                    "type": frame.dialogue_type.id.value,
                    "closed": frame.closed,
                    "stores": {p: sorted(s) for p, s in frame.stores},
                }
                for frame in self.frames
            ],
            "shift_log": [entry.to_dict() for entry in self.shift_log],
        }
