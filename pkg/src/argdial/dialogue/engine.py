"""
Move legality, state transitions and dialectical shifts

Legality is decided in two steps: the dialogue type's static permission
matrix for the speaker's role, then whether the current state offers
anything to act on (an opposing argument or unsupported assertion to
question, a pending offer to accept, and so on). A move kind is accepted
exactly when it is listed by `legal_moves`, provided its payload fits the
state. A challenged assertion must be argued for or retracted before its
owner may close.
"""

from dataclasses import dataclass, replace

from ..core.exceptions import (
    ArgdialError,
    ClosedDialogueError,
    DialogueError,
    EvaluationError,
    IncoherentDialogueError,
    RuleViolationError,
    ShiftError,
)
from ..core.validation import sanitize_for_logging, validate_identifier
from ..evaluation.graph import add_argument, answer_cq, pose_cq
from ..evaluation.labelling import Label, grounded_labelling
from ..logging import get_logger
from .moves import Move, ShiftMode
from .state import Challenge, DialogueState, Frame, Offer, PendingShift, ShiftLogEntry
from .types import (
    DialogueType,
    DialogueTypeId,
    InitialSituation,
    MainGoal,
    MoveKind,
    check_coherence,
    dialogue_type,
)

log = get_logger("argdial.dialogue")

DEFAULT_MAX_DEPTH = 8


@dataclass(frozen=True)
class Permission:
    speaker: str
    kind: MoveKind

    def __str__(self) -> str:
        return f"{self.speaker} {self.kind.value}"


def _enum(enum_cls, value, what: str):
    if value is None or isinstance(value, enum_cls):
        return value
    try:
        return enum_cls(value)
    except ValueError:
        raise IncoherentDialogueError(
            f"Unknown {what}: '{value}'", {what: str(value), "known": [e.value for e in enum_cls]}
        ) from None


def new_dialogue(
    type_id: DialogueTypeId | str,
    situation: InitialSituation | str | None = None,
    goal: MainGoal | str | None = None,
    participants: tuple[str, str] = ("P1", "P2"),
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> DialogueState:
    """
    Open a dialogue with one frame; the proponent is `participants[0]` and
    moves first. Omitted situation or goal default to the type's own cell.

    Raises:
        IncoherentDialogueError: For an N/A cell or a cell of another type
        DialogueError: Unless there are exactly two distinct participants
    """
    dtype = dialogue_type(type_id)
    situation = _enum(InitialSituation, situation, "situation") or dtype.situation
    goal = _enum(MainGoal, goal, "goal") or dtype.goal
    check_coherence(dtype.id, situation, goal)

    participants = tuple(participants)
    if len(participants) != 2 or participants[0] == participants[1]:
        raise DialogueError(
            "A dialogue needs exactly two distinct participants",
            {"participants": list(participants)},
        )
    for participant in participants:
        validate_identifier(participant, "Participant id")

    log.debug("Opened dialogue", dialogue_type=dtype.id.value, participants=list(participants))
    return DialogueState(
        participants=participants,
        frames=(Frame.open(dtype, participants),),
        turn=participants[0],
        max_depth=max_depth,
    )


def _open_questions_against(state: DialogueState, owner: str) -> bool:
    frame = state.top
    return any(e.is_open and frame.owner(e.target_argument) == owner for e in frame.graph.cq_events)


def _questionable(state: DialogueState, owner: str) -> bool:
    frame = state.top
    for argument_id, argument_owner in frame.owners:
        if argument_owner != owner:
            continue
        scheme = frame.graph.scheme_of(argument_id)
        if any(frame.graph.event(argument_id, q.index) is None for q in scheme.cqs):
            return True
    return False


def challengeable(state: DialogueState, speaker: str) -> list[str]:
    """
    Statements of the other party that `speaker` may challenge with pose-cq.

    These are the other party's commitments in the current frame that no
    argument of theirs puts forward, that `speaker` does not hold and that
    are not already challenged. Oracle assertions are never challengeable.
    """
    frame = state.top
    if frame.dialogue_type.oracle_mode:
        return []
    other = state.other(speaker)
    supported = {
        text
        for argument_id, owner in frame.owners
        if owner == other
        for text in frame.graph.argument(argument_id).texts
    }
    challenged = {c.statement for c in frame.challenges if c.defender == other}
    return sorted(frame.store(other) - state.commitments(speaker) - supported - challenged)


def _defending(frame: Frame, participant: str) -> bool:
    return any(c.defender == participant for c in frame.challenges)


def _available(state: DialogueState, speaker: str, kind: MoveKind) -> bool:
    frame = state.top
    other = state.other(speaker)
    match kind:
        case MoveKind.POSE_CQ:
            return _questionable(state, other) or bool(challengeable(state, speaker))
        case MoveKind.ANSWER_CQ:
            return _open_questions_against(state, speaker)
        case MoveKind.CONCEDE:
            return bool(state.commitments(other) - state.commitments(speaker))
        case MoveKind.RETRACT:
            return bool(frame.store(speaker))
        case MoveKind.ACCEPT:
            return any(o.speaker == other for o in frame.offers)
        case MoveKind.PROPOSE_SHIFT:
            return frame.pending_shift is None
        case MoveKind.ACCEPT_SHIFT:
            return frame.pending_shift is not None and frame.pending_shift.proposer == other
        case MoveKind.CLOSE:
            if _defending(frame, speaker):
                return False
            if frame.dialogue_type.id is DialogueTypeId.DELIBERATION:
                return frame.concessions > 0
            return True
        case _:
            return True


def legal_moves(state: DialogueState, participant: str | None = None) -> list[Permission]:
    """
    Permissions of `participant`, by default the one holding the turn.

    For the other participant the list says what they could do if they held
    the floor in this state; `apply_move` still only accepts the turn holder.

    Raises:
        ClosedDialogueError: If the dialogue is over
        DialogueError: If `participant` is not in the dialogue
    """
    if state.closed:
        raise ClosedDialogueError("Dialogue is closed", {"moves": len(state.moves)})
    speaker = state.turn if participant is None else participant
    if speaker not in state.participants:
        raise DialogueError(f"'{speaker}' is not a participant", {"participants": list(state.participants)})
    allowed = state.dialogue_type.moves_for(state.role(speaker))
    return [Permission(speaker, kind) for kind in MoveKind if kind in allowed and _available(state, speaker, kind)]


def permissions(state: DialogueState) -> dict[str, list[Permission]]:
    """`legal_moves` for both participants, proponent first"""
    return {participant: legal_moves(state, participant) for participant in state.participants}


def _permission_name(state: DialogueState, speaker: str, kind: MoveKind) -> str:
    return f"{state.dialogue_type.id.value}:{state.role(speaker).value}:{kind.value}"


def _violation(state: DialogueState, move: Move, message: str, permission: str, **details) -> RuleViolationError:
    return RuleViolationError(
        message,
        permission,
        {"speaker": move.speaker, "kind": move.kind.value, "type": state.dialogue_type.id.value, **details},
    )


def _with_store(frame: Frame, participant: str, update) -> Frame:
    return replace(frame, stores=tuple((p, update(s) if p == participant else s) for p, s in frame.stores))


def _commit(frame: Frame, participant: str, *statements: str) -> Frame:
    return _with_store(frame, participant, lambda s: s | frozenset(statements))


def _discharge(frame: Frame, defender: str, statements: set[str]) -> Frame:
    """Drop challenges against `defender` that an argument or retraction has met"""
    kept = tuple(c for c in frame.challenges if c.defender != defender or c.statement not in statements)
    return replace(frame, challenges=kept) if len(kept) != len(frame.challenges) else frame


def _apply_to_frame(state: DialogueState, move: Move) -> Frame:
    frame = state.top
    speaker = move.speaker
    other = state.other(speaker)

    match move.kind:
        case MoveKind.ASSERT:
            return _commit(frame, speaker, move.statement)

        case MoveKind.ARGUE:
            try:
                graph = add_argument(frame.graph, move.argument, move.scheme)
            except ArgdialError as e:
                raise _violation(state, move, e.message, "argue:argument", argument_id=move.argument.id) from e
            return replace(
                _discharge(_commit(frame, speaker, *move.argument.texts), speaker, {move.argument.claim}),
                graph=graph,
                owners=(*frame.owners, (move.argument.id, speaker)),
            )

        case MoveKind.POSE_CQ if move.statement is not None:
            if move.statement not in challengeable(state, speaker):
                reason = (
                    "Oracle assertions cannot be challenged"
                    if frame.dialogue_type.oracle_mode
                    else f"{other} holds no unsupported statement to challenge"
                )
                raise _violation(state, move, reason, "pose-cq:statement")
            challenge = Challenge(challenger=speaker, defender=other, statement=move.statement)
            return replace(frame, challenges=(*frame.challenges, challenge))

        case MoveKind.POSE_CQ:
            owner = frame.owner(move.argument_id)
            if owner != other:
                raise _violation(
                    state,
                    move,
                    f"No argument '{move.argument_id}' by {other} to question",
                    "pose-cq:target",
                    argument_id=move.argument_id,
                )
            try:
                graph = pose_cq(frame.graph, move.argument_id, move.cq_index)
            except EvaluationError as e:
                raise _violation(state, move, e.message, "pose-cq:question", **e.details) from e
            return replace(frame, graph=graph)

        case MoveKind.ANSWER_CQ:
            if frame.owner(move.argument_id) != speaker:
                raise _violation(
                    state,
                    move,
                    f"{speaker} can only answer questions against own arguments",
                    "answer-cq:target",
                    argument_id=move.argument_id,
                )
            try:
                graph = answer_cq(frame.graph, move.argument_id, move.cq_index, move.statement)
            except EvaluationError as e:
                raise _violation(state, move, e.message, "answer-cq:question", **e.details) from e
            return replace(_commit(frame, speaker, move.statement), graph=graph)

        case MoveKind.CONCEDE:
            if move.statement not in state.commitments(other):
                raise _violation(
                    state, move, f"{other} is not committed to the conceded statement", "concede:opponent-commitment"
                )
            if move.statement in state.commitments(speaker):
                raise _violation(state, move, f"{speaker} is already committed", "concede:new")
            frame = replace(
                frame,
                challenges=tuple(
                    c for c in frame.challenges if (c.challenger, c.statement) != (speaker, move.statement)
                ),
            )
            return replace(_commit(frame, speaker, move.statement), concessions=frame.concessions + 1)

        case MoveKind.RETRACT:
            if move.statement not in frame.store(speaker):
                background = move.statement in state.background(speaker)
                raise _violation(
                    state,
                    move,
                    "Cannot retract an inherited commitment"
                    if background
                    else f"{speaker} never committed to the retracted statement",
                    "retract:committed",
                    inherited=background,
                )
            return _discharge(_with_store(frame, speaker, lambda s: s - {move.statement}), speaker, {move.statement})

        case MoveKind.OFFER:
            offer = Offer(speaker=speaker, statement=move.statement, cost=move.cost)
            return replace(frame, offers=(*frame.offers, offer))

        case MoveKind.ACCEPT:
            candidates = [o for o in frame.offers if o.speaker == other]
            if move.statement is not None:
                candidates = [o for o in candidates if o.statement == move.statement]
            if not candidates:
                raise _violation(state, move, f"No matching offer by {other}", "accept:offer")
            accepted = candidates[-1]
            frame = replace(frame, offers=tuple(o for o in frame.offers if o is not accepted))
            return _commit(_commit(frame, speaker, accepted.statement), other, accepted.statement)

        case MoveKind.PROPOSE_SHIFT:
            target = dialogue_type(move.shift_target)
            if move.shift_mode is ShiftMode.EMBED and state.depth >= state.max_depth:
                raise _violation(
                    state,
                    move,
                    f"Embedding depth is capped at {state.max_depth}",
                    "propose-shift:depth",
                    depth=state.depth,
                )
            return replace(frame, pending_shift=PendingShift(proposer=speaker, mode=move.shift_mode, target=target))

        case MoveKind.ACCEPT_SHIFT | MoveKind.CLOSE:
            return frame

    raise _violation(state, move, f"Unhandled move kind {move.kind.value}", move.kind.value)


def _forced_retractions(frame: Frame, speaker: str) -> Frame:
    # defeated arguments may not keep their claims at the end of their owner's turn
    if frame.dialogue_type.id is not DialogueTypeId.INQUIRY or not frame.owners:
        return frame
    labels = grounded_labelling(frame.graph)
    defeated = {
        frame.graph.argument(arg_id).claim
        for arg_id, owner in frame.owners
        if owner == speaker and labels[arg_id] is Label.OUT
    }
    if not defeated & frame.store(speaker):
        return frame
    log.debug("Forced retraction", speaker=speaker, statements=sorted(defeated))
    return _discharge(_with_store(frame, speaker, lambda s: s - defeated), speaker, defeated)


def apply_move(state: DialogueState, move: Move) -> DialogueState:
    """
    Apply a move by the participant holding the turn.

    Raises:
        ClosedDialogueError: If the dialogue is over
        RuleViolationError: Naming the permission the move violates
        ShiftError: If an accepted shift cannot be carried out
    """
    if state.closed:
        raise ClosedDialogueError("Dialogue is closed", {"moves": len(state.moves)})
    speaker = move.speaker
    if speaker not in state.participants:
        raise _violation(state, move, f"'{speaker}' is not a participant", "participant")
    if speaker != state.turn:
        raise _violation(state, move, f"It is {state.turn}'s turn", "turn", turn=state.turn)

    permission = _permission_name(state, speaker, move.kind)
    if move.kind not in state.dialogue_type.moves_for(state.role(speaker)):
        raise _violation(
            state, move, f"{move.kind.value} is not permitted to the {state.role(speaker).value}", permission
        )
    if not _available(state, speaker, move.kind):
        raise _violation(state, move, f"Nothing to {move.kind.value} at this point", permission)

    frame = _apply_to_frame(state, move)
    if frame.pending_shift is not None and frame.pending_shift.proposer != speaker and move.kind is not MoveKind.ACCEPT_SHIFT:
        frame = replace(frame, pending_shift=None)
    frame = _forced_retractions(replace(frame, history=(*frame.history, move)), speaker)

    if move.kind is MoveKind.POSE_CQ:
        turn = frame.owner(move.argument_id) or state.other(speaker)
    else:
        turn = state.other(speaker)

    updated = replace(state, frames=(*state.frames[:-1], frame), moves=(*state.moves, move), turn=turn)
    log.debug(
        "Applied move",
        dialogue_type=state.dialogue_type.id.value,
        turn_index=len(updated.moves) - 1,
        speaker=speaker,
        kind=move.kind.value,
        statement=sanitize_for_logging(move.statement) if move.statement is not None else None,
    )

    if move.kind is MoveKind.ACCEPT_SHIFT:
        pending = state.top.pending_shift
        updated = shift(updated, pending.target.id, pending.mode)
    elif move.kind is MoveKind.CLOSE:
        updated = _close(updated)
    return updated


def _close(state: DialogueState) -> DialogueState:
    frame = replace(state.top, closed=True)
    closed = replace(state, frames=(*state.frames[:-1], frame))
    if state.depth == 1:
        log.debug("Closed dialogue", moves=len(state.moves))
        return replace(closed, closed=True)
    return pop_embedding(closed)


def shift(state: DialogueState, new_type_id: DialogueTypeId | str, mode: ShiftMode | str) -> DialogueState:
    """
    Carry out a shift both parties agreed to: the last two moves of the top
    frame must be a matching propose-shift and an accept-shift by the other
    participant.

    Raises:
        ShiftError: Without mutual acceptance, or beyond the embedding cap
    """
    target = dialogue_type(new_type_id)
    mode = ShiftMode(mode)
    history = state.top.history
    agreed = (
        len(history) >= 2
        and history[-1].kind is MoveKind.ACCEPT_SHIFT
        and history[-2].kind is MoveKind.PROPOSE_SHIFT
        and history[-2].speaker != history[-1].speaker
        and history[-2].shift_target is target.id
        and history[-2].shift_mode is mode
    )
    details = {"from": state.dialogue_type.id.value, "to": target.id.value, "mode": mode.value}
    if not agreed:
        raise ShiftError("Shift needs a proposal accepted by the other participant", details)

    if mode is ShiftMode.EMBED:
        if state.depth >= state.max_depth:
            raise ShiftError(f"Embedding depth is capped at {state.max_depth}", {**details, "depth": state.depth})
        parent = replace(state.top, pending_shift=None)
        frames = (*state.frames[:-1], parent, Frame.open(target, state.participants))
    elif mode is ShiftMode.REPLACE:
        frames = (*state.frames[:-1], replace(state.top, dialogue_type=target, pending_shift=None))
    else:
        raise ShiftError("Pop is not an agreed shift; close the embedded dialogue instead", details)

    entry = ShiftLogEntry(
        turn=len(state.moves) - 1,
        from_type=state.dialogue_type.id.value,
        to_type=target.id.value,
        mode=mode,
        degraded=target.degrading,
    )
    if entry.degraded:
        log.warning("Shift into eristic dialogue", **entry.to_dict())
    else:
        log.debug("Dialectical shift", **entry.to_dict())
    return replace(state, frames=frames, shift_log=(*state.shift_log, entry))


def pop_embedding(state: DialogueState) -> DialogueState:
    """
    Leave a closed embedded dialogue. Statements both parties hold in it are
    added to both parties' stores in the enclosing frame.

    Raises:
        ShiftError: At the root frame or if the embedded frame is still open
    """
    if state.depth < 2:
        raise ShiftError("Cannot pop the root dialogue", {"depth": state.depth})
    top = state.top
    if not top.closed:
        raise ShiftError("Embedded dialogue is still open", {"type": top.dialogue_type.id.value})

    shared = top.store(state.proponent) & top.store(state.respondent)
    parent = state.frames[-2]
    for participant in state.participants:
        parent = _commit(parent, participant, *shared)

    entry = ShiftLogEntry(
        turn=len(state.moves) - 1,
        from_type=top.dialogue_type.id.value,
        to_type=parent.dialogue_type.id.value,
        mode=ShiftMode.POP,
    )
    log.debug("Popped embedded dialogue", transferred=sorted(shared), **entry.to_dict())
    return replace(
        state,
        frames=(*state.frames[:-2], parent),
        archived=(*state.archived, top),
        shift_log=(*state.shift_log, entry),
    )


def is_coherent(state: DialogueState) -> bool:
    """Every frame's type occupies its own survey cell"""
    try:
        for frame in state.frames:
            dtype: DialogueType = frame.dialogue_type
            check_coherence(dtype.id, dtype.situation, dtype.goal)
    except IncoherentDialogueError:
        return False
    return True
