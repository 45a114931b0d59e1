"""
Dialogue types, rule-checked moves, shifts and simulation
"""

from .engine import (
    Permission,
    apply_move,
    is_coherent,
    legal_moves,
    new_dialogue,
    permissions,
    pop_embedding,
    shift,
)
from .moves import Move, ShiftMode
from .simulation import (
    POLICIES,
    CompliantProver,
    ExhaustiveSceptic,
    Policy,
    ReplayPolicy,
    SimulationStatus,
    Transcript,
    TranscriptStep,
    argument_labels,
    replay_moves,
    run_simulation,
    shift_report,
)
from .state import Challenge, DialogueState, Frame, Offer, PendingShift, ShiftLogEntry
from .types import (
    SURVEY_CELLS,
    DialogueType,
    DialogueTypeId,
    InitialSituation,
    MainGoal,
    MoveKind,
    ParticipantRole,
    check_coherence,
    dialogue_type,
    dialogue_types,
)

__all__ = [
    # Types
    "DialogueType",
    "DialogueTypeId",
    "InitialSituation",
    "MainGoal",
    "MoveKind",
    "ParticipantRole",
    "SURVEY_CELLS",
    "check_coherence",
    "dialogue_type",
    "dialogue_types",
    # Moves and state
    "Move",
    "ShiftMode",
    "DialogueState",
    "Frame",
    "Offer",
    "Challenge",
    "PendingShift",
    "ShiftLogEntry",
    # Engine
    "Permission",
    "new_dialogue",
    "legal_moves",
    "permissions",
    "apply_move",
    "shift",
    "pop_embedding",
    "is_coherent",
    # Simulation
    "Policy",
    "ReplayPolicy",
    "ExhaustiveSceptic",
    "CompliantProver",
    "POLICIES",
    "SimulationStatus",
    "Transcript",
    "TranscriptStep",
    "run_simulation",
    "replay_moves",
    "argument_labels",
    "shift_report",
]
