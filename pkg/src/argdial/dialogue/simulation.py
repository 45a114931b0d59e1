"""
Scripted agents and the simulation loop
"""

from abc import ABC, abstractmethod
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ..core.exceptions import DialogueError, RuleViolationError, ShiftError
from ..evaluation.graph import CQEvent
from ..evaluation.labelling import Label, grounded_labelling
from ..logging import get_logger
from ..schemes.model import ArgumentInstance, Scheme
from .engine import apply_move, legal_moves
from .moves import Move
from .state import DialogueState, ShiftLogEntry
from .types import MoveKind

log = get_logger("argdial.simulation")


class SimulationStatus(Enum):
    CLOSED = "closed"
    TIMEOUT = "timeout"
    STALLED = "stalled"
    VIOLATION = "violation"


class Policy(ABC):
    """Chooses the next move for whoever holds the turn"""

    name: str = "policy"

    @abstractmethod
    def next_move(self, state: DialogueState) -> Move | None:
        """Return a move, or None when the policy has nothing left to say"""


class ReplayPolicy(Policy):
    """
    Replays scripted moves in order.

    One instance may drive both participants; moves without a speaker are
    attributed to the turn holder.
    """

    name = "replay"

    def __init__(self, moves: Sequence[Move] = ()):
        self.moves = tuple(moves)
        self.position = 0

    def next_move(self, state: DialogueState) -> Move | None:
        if self.position >= len(self.moves):
            return None
        move = self.moves[self.position]
        self.position += 1
        return move if move.speaker is not None else move.by(state.turn)


def _permitted(state: DialogueState) -> set[MoveKind]:
    return {p.kind for p in legal_moves(state)}


class ExhaustiveSceptic(Policy):
    """
    Poses every critical question it is allowed to, then concedes the claims
    of opposing arguments that survived, then closes.
    """

    name = "exhaustive-sceptic"

    def next_move(self, state: DialogueState) -> Move | None:
        permitted = _permitted(state)
        me = state.turn
        frame = state.top

        if MoveKind.POSE_CQ in permitted:
            for argument_id, owner in frame.owners:
                if owner == me:
                    continue
                for question in frame.graph.scheme_of(argument_id).cqs:
                    if frame.graph.event(argument_id, question.index) is None:
                        return Move(speaker=me, kind=MoveKind.POSE_CQ, argument_id=argument_id, cq_index=question.index)

        if MoveKind.CONCEDE in permitted and frame.owners:
            labels = grounded_labelling(frame.graph)
            mine = state.commitments(me)
            theirs = state.commitments(state.other(me))
            for argument_id, owner in frame.owners:
                claim = frame.graph.argument(argument_id).claim
                if owner != me and labels[argument_id] is Label.IN and claim in theirs and claim not in mine:
                    return Move(speaker=me, kind=MoveKind.CONCEDE, statement=claim)

        if MoveKind.CLOSE in permitted:
            return Move(speaker=me, kind=MoveKind.CLOSE)
        return None


def default_answer(event: CQEvent) -> str:
    return f"Critical question {event.cq_index} on {event.target_argument} is answered."


class CompliantProver(Policy):
    """
    Answers every open question against its arguments, puts forward its
    remaining arguments one at a time, then closes.
    """

    name = "compliant-prover"

    def __init__(
        self,
        arguments: Sequence[tuple[ArgumentInstance, Scheme]] = (),
        answer: Callable[[CQEvent], str] = default_answer,
    ):
        self.arguments = tuple(arguments)
        self.answer = answer

    def next_move(self, state: DialogueState) -> Move | None:
        permitted = _permitted(state)
        me = state.turn
        frame = state.top

        if MoveKind.ANSWER_CQ in permitted:
            for event in frame.graph.cq_events:
                if event.is_open and frame.owner(event.target_argument) == me:
                    return Move(
                        speaker=me,
                        kind=MoveKind.ANSWER_CQ,
                        argument_id=event.target_argument,
                        cq_index=event.cq_index,
                        statement=self.answer(event),
                    )

        if MoveKind.ARGUE in permitted:
            for instance, scheme in self.arguments:
                if instance.id not in frame.graph:
                    return Move(speaker=me, kind=MoveKind.ARGUE, argument=instance, scheme=scheme)

        if MoveKind.CLOSE in permitted:
            return Move(speaker=me, kind=MoveKind.CLOSE)
        return None


@dataclass(frozen=True)
class TranscriptStep:
    """An accepted move with the commitments it added and removed"""

    index: int
    move: Move
    added: tuple[tuple[str, str], ...] = ()
    removed: tuple[tuple[str, str], ...] = ()
    shifts: tuple[ShiftLogEntry, ...] = ()


@dataclass(frozen=True)
class Transcript:
    initial: DialogueState
    final: DialogueState
    steps: tuple[TranscriptStep, ...] = ()
    status: SimulationStatus = SimulationStatus.TIMEOUT
    violation: dict[str, Any] | None = None
    labels: dict[str, Label] = field(default_factory=dict)

    @property
    def shift_log(self) -> tuple[ShiftLogEntry, ...]:
        return self.final.shift_log

    def __len__(self) -> int:
        return len(self.steps)


def _deltas(before: DialogueState, after: DialogueState) -> tuple[tuple, tuple]:
    added, removed = [], []
    for participant in before.participants:
        old, new = before.commitments(participant), after.commitments(participant)
        added += [(participant, s) for s in sorted(new - old)]
        removed += [(participant, s) for s in sorted(old - new)]
    return tuple(added), tuple(removed)


def argument_labels(state: DialogueState) -> dict[str, Label]:
    """Grounded labels of every argued instance, closed embeddings included"""
    labels: dict[str, Label] = {}
    for frame in (*state.archived, *state.frames):
        if not frame.graph.arguments:
            continue
        labelling = grounded_labelling(frame.graph)
        for argument_id in frame.graph.arguments:
            labels[argument_id] = labelling[argument_id]
    return labels


def run_simulation(
    initial_state: DialogueState,
    proponent_policy: Policy,
    respondent_policy: Policy,
    max_turns: int = 200,
) -> Transcript:
    """
    Query the turn holder's policy until the dialogue closes, no move is
    legal, a policy runs dry or `max_turns` moves were made.

    An illegal move ends the run with status VIOLATION instead of raising.
    """
    if max_turns < 1:
        raise DialogueError("max_turns must be at least 1", {"max_turns": max_turns})

    state = initial_state
    steps: list[TranscriptStep] = []
    status = SimulationStatus.TIMEOUT
    violation: dict[str, Any] | None = None

    while len(steps) < max_turns:
        if state.closed:
            break
        if not legal_moves(state):
            status = SimulationStatus.STALLED
            break

        policy = proponent_policy if state.turn == state.proponent else respondent_policy
        move = policy.next_move(state)
        if move is None:
            break

        try:
            after = apply_move(state, move)
        except (RuleViolationError, ShiftError) as e:
            status = SimulationStatus.VIOLATION
            violation = {
                "index": len(steps),
                "move": move.to_dict(),
                "error": type(e).__name__,
                "message": e.message,
                "details": e.details,
            }
            log.warning("Simulation stopped on illegal move", policy=policy.name, violation=violation)
            break

        added, removed = _deltas(state, after)
        steps.append(
            TranscriptStep(
                index=len(steps),
                move=move,
                added=added,
                removed=removed,
                shifts=after.shift_log[len(state.shift_log) :],
            )
        )
        state = after

    if state.closed:
        status = SimulationStatus.CLOSED

    log.debug("Simulation finished", status=status.value, moves=len(steps))
    return Transcript(
        initial=initial_state,
        final=state,
        steps=tuple(steps),
        status=status,
        violation=violation,
        labels=argument_labels(state),
    )


def replay_moves(state: DialogueState, moves: Sequence[Move]) -> DialogueState:
    """Apply moves in order, attributing speakerless moves to the turn holder"""
    for move in moves:
        state = apply_move(state, move if move.speaker is not None else move.by(state.turn))
    return state


def shift_report(transcript: Transcript | Sequence[ShiftLogEntry]) -> list[ShiftLogEntry]:
    """Ordered shift entries of a transcript"""
    if isinstance(transcript, Transcript):
        return list(transcript.shift_log)
    return list(transcript)


POLICIES = {
    ReplayPolicy.name: ReplayPolicy,
    ExhaustiveSceptic.name: ExhaustiveSceptic,
    CompliantProver.name: CompliantProver,
}
