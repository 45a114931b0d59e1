"""
argdial: argumentation schemes, critical questions and dialogue protocols

Schemes are registered and instantiated, critical questions become
attacks in an argument graph labelled under grounded semantics, and
dialogues between two parties are played move by move under the rules of
their dialogue type, with shifts between types recorded as they happen.
"""

__version__ = "0.1.0"

from .core import ArgdialConfig, ArgdialError
from .dialogue import (
    DialogueState,
    DialogueTypeId,
    Move,
    MoveKind,
    ShiftMode,
    apply_move,
    legal_moves,
    new_dialogue,
    run_simulation,
    shift,
)
from .evaluation import ArgumentGraph, Label, evaluate_argument, grounded_labelling
from .logging import LoggingConfig, get_logger
from .schemes import Scheme, SchemeRegistry, Substitution, default_registry, instantiate_scheme

__all__ = [
    "__version__",
    "ArgdialConfig",
    "ArgdialError",
    "LoggingConfig",
    "get_logger",
    "Scheme",
    "SchemeRegistry",
    "Substitution",
    "default_registry",
    "instantiate_scheme",
    "ArgumentGraph",
    "Label",
    "grounded_labelling",
    "evaluate_argument",
    "DialogueTypeId",
    "DialogueState",
    "Move",
    "MoveKind",
    "ShiftMode",
    "new_dialogue",
    "apply_move",
    "legal_moves",
    "shift",
    "run_simulation",
]
