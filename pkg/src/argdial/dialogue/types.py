"""
Dialogue type registry

Each type sits in one cell of the situation x goal survey; three cells are
empty and any dialogue claiming them is incoherent. Goals and benefits are
carried as descriptive metadata, permissions drive the engine.
"""

from enum import Enum
from functools import cache

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.exceptions import IncoherentDialogueError


class InitialSituation(Enum):
    CONFLICT = "conflict"
    OPEN_PROBLEM = "open-problem"
    INFO_ASYMMETRY = "info-asymmetry"


class MainGoal(Enum):
    STABLE_RESOLUTION = "stable-resolution"
    PRACTICAL_SETTLEMENT = "practical-settlement"
    PROVISIONAL_ACCOMMODATION = "provisional-accommodation"


class DialogueTypeId(Enum):
    PERSUASION = "persuasion"
    INQUIRY = "inquiry"
    PEDAGOGICAL = "information-seeking-pedagogical"
    ORACULAR = "information-seeking-oracular"
    DELIBERATION = "deliberation"
    NEGOTIATION = "negotiation"
    ERISTIC = "eristic"


class ParticipantRole(Enum):
    PROPONENT = "proponent"
    RESPONDENT = "respondent"


class MoveKind(Enum):
    ASSERT = "assert"
    ARGUE = "argue"
    POSE_CQ = "pose-cq"
    ANSWER_CQ = "answer-cq"
    CONCEDE = "concede"
    RETRACT = "retract"
    OFFER = "offer"
    ACCEPT = "accept"
    PROPOSE_SHIFT = "propose-shift"
    ACCEPT_SHIFT = "accept-shift"
    CLOSE = "close"


# (goal, situation) -> family of types occupying that cell; absent cells are N/A
SURVEY_CELLS: dict[tuple[MainGoal, InitialSituation], frozenset[DialogueTypeId]] = {
    (MainGoal.STABLE_RESOLUTION, InitialSituation.CONFLICT): frozenset({DialogueTypeId.PERSUASION}),
    (MainGoal.STABLE_RESOLUTION, InitialSituation.OPEN_PROBLEM): frozenset({DialogueTypeId.INQUIRY}),
    (MainGoal.STABLE_RESOLUTION, InitialSituation.INFO_ASYMMETRY): frozenset(
        {DialogueTypeId.PEDAGOGICAL, DialogueTypeId.ORACULAR}
    ),
    (MainGoal.PRACTICAL_SETTLEMENT, InitialSituation.CONFLICT): frozenset({DialogueTypeId.NEGOTIATION}),
    (MainGoal.PRACTICAL_SETTLEMENT, InitialSituation.OPEN_PROBLEM): frozenset({DialogueTypeId.DELIBERATION}),
    (MainGoal.PROVISIONAL_ACCOMMODATION, InitialSituation.CONFLICT): frozenset({DialogueTypeId.ERISTIC}),
}

_SHIFTS = frozenset({MoveKind.PROPOSE_SHIFT, MoveKind.ACCEPT_SHIFT})
_CRITICAL = frozenset(
    {
        MoveKind.ASSERT,
        MoveKind.ARGUE,
        MoveKind.POSE_CQ,
        MoveKind.ANSWER_CQ,
        MoveKind.CONCEDE,
        MoveKind.RETRACT,
        MoveKind.CLOSE,
    }
)


class DialogueType(BaseModel):
    """A dialogue type with its survey cell, goals and permission matrix"""

    model_config = ConfigDict(frozen=True)

    id: DialogueTypeId
    situation: InitialSituation
    goal: MainGoal
    proponent_goal: str
    respondent_goal: str
    # Participants' individual goals, collective goal and benefits as listed
    # in the general survey of dialogue types
    individual_goals: str
    collective_goal: str
    benefits: str
    proponent_moves: frozenset[MoveKind]
    respondent_moves: frozenset[MoveKind]
    oracle_mode: bool = False

    @model_validator(mode="after")
    def check_cell(self) -> "DialogueType":
        check_coherence(self.id, self.situation, self.goal)
        if self.oracle_mode != (self.id is DialogueTypeId.ORACULAR):
            raise ValueError("oracle_mode is reserved for oracular information seeking")
        return self

    @property
    def degrading(self) -> bool:
        """Shifting into this type is flagged in the shift log"""
        return self.id is DialogueTypeId.ERISTIC

    def moves_for(self, role: ParticipantRole) -> frozenset[MoveKind]:
        if role is ParticipantRole.PROPONENT:
            return self.proponent_moves
        return self.respondent_moves


def check_coherence(type_id: DialogueTypeId, situation: InitialSituation, goal: MainGoal) -> None:
    """
    Raises:
        IncoherentDialogueError: If (goal, situation) is an empty cell or
            belongs to another type
    """
    family = SURVEY_CELLS.get((goal, situation))
    details = {"type": type_id.value, "situation": situation.value, "goal": goal.value}
    if family is None:
        raise IncoherentDialogueError(
            f"No dialogue type pursues {goal.value} from {situation.value} (N/A cell)", details
        )
    if type_id not in family:
        raise IncoherentDialogueError(
            f"{type_id.value} does not occupy the {goal.value} / {situation.value} cell",
            {**details, "cell": sorted(t.value for t in family)},
        )


def _both(moves: frozenset[MoveKind]) -> dict[str, frozenset[MoveKind]]:
    return {"proponent_moves": moves | _SHIFTS, "respondent_moves": moves | _SHIFTS}


@cache
def dialogue_types() -> tuple[DialogueType, ...]:
    """Every modelled dialogue type, in survey order"""
    return (
        DialogueType(
            id=DialogueTypeId.PERSUASION,
            situation=InitialSituation.CONFLICT,
            goal=MainGoal.STABLE_RESOLUTION,
            proponent_goal="Persuade respondent",
            respondent_goal="Persuade proponent",
            individual_goals="Persuade other party",
            collective_goal="Resolve difference of opinion",
            benefits="Understand positions",
            **_both(_CRITICAL),
        ),
        DialogueType(
            id=DialogueTypeId.INQUIRY,
            situation=InitialSituation.OPEN_PROBLEM,
            goal=MainGoal.STABLE_RESOLUTION,
            proponent_goal="Contribute to main goal",
            respondent_goal="Obtain knowledge",
            individual_goals="Contribute findings",
            collective_goal="Prove or disprove conjecture",
            benefits="Obtain knowledge",
            **_both(_CRITICAL),
        ),
        DialogueType(
            id=DialogueTypeId.PEDAGOGICAL,
            situation=InitialSituation.INFO_ASYMMETRY,
            goal=MainGoal.STABLE_RESOLUTION,
            proponent_goal="Disseminate knowledge of results and methods",
            respondent_goal="Obtain knowledge",
            individual_goals="Teaching and learning",
            collective_goal="Transfer of knowledge",
            benefits="Reserve transfer",
            proponent_moves=frozenset(
                {MoveKind.ASSERT, MoveKind.ARGUE, MoveKind.ANSWER_CQ, MoveKind.RETRACT, MoveKind.CLOSE}
            )
            | _SHIFTS,
            respondent_moves=frozenset({MoveKind.POSE_CQ, MoveKind.CONCEDE, MoveKind.CLOSE}) | _SHIFTS,
        ),
        DialogueType(
            id=DialogueTypeId.ORACULAR,
            situation=InitialSituation.INFO_ASYMMETRY,
            goal=MainGoal.STABLE_RESOLUTION,
            proponent_goal="Obtain information",
            respondent_goal="Inscrutable",
            individual_goals="Obtain information",
            collective_goal="Transfer of knowledge",
            benefits="Help in goal activity",
            proponent_moves=frozenset({MoveKind.CONCEDE, MoveKind.CLOSE}) | _SHIFTS,
            respondent_moves=frozenset({MoveKind.ASSERT, MoveKind.ARGUE, MoveKind.CLOSE}) | _SHIFTS,
            oracle_mode=True,
        ),
        DialogueType(
            id=DialogueTypeId.DELIBERATION,
            situation=InitialSituation.OPEN_PROBLEM,
            goal=MainGoal.PRACTICAL_SETTLEMENT,
            proponent_goal="Contribute to main goal",
            respondent_goal="Obtain warranted belief",
            individual_goals="Promote personal goals",
            collective_goal="Act on a thoughtful basis",
            benefits="Formulate personal priorities",
            **_both(_CRITICAL),
        ),
        DialogueType(
            id=DialogueTypeId.NEGOTIATION,
            situation=InitialSituation.CONFLICT,
            goal=MainGoal.PRACTICAL_SETTLEMENT,
            proponent_goal="Contribute to main goal",
            respondent_goal="Maximize value of exchange",
            individual_goals="Maximize gains (self-interest)",
            collective_goal="Settlement (without undue inequity)",
            benefits="Harmony",
            **_both(
                frozenset(
                    {MoveKind.ASSERT, MoveKind.OFFER, MoveKind.ACCEPT, MoveKind.RETRACT, MoveKind.CLOSE}
                )
            ),
        ),
        DialogueType(
            id=DialogueTypeId.ERISTIC,
            situation=InitialSituation.CONFLICT,
            goal=MainGoal.PROVISIONAL_ACCOMMODATION,
            proponent_goal="Verbally hit out at and humiliate opponent",
            respondent_goal="Verbally hit out at and humiliate opponent",
            individual_goals="Verbally hit out at and humiliate opponent",
            collective_goal="Reveal deeper conflict",
            benefits="Vent emotions",
            **_both(frozenset({MoveKind.ASSERT, MoveKind.RETRACT, MoveKind.CLOSE})),
        ),
    )


def dialogue_type(type_id: DialogueTypeId | str) -> DialogueType:
    """
    Look up a dialogue type by id or id string.

    Raises:
        IncoherentDialogueError: For unknown ids
    """
    try:
        wanted = DialogueTypeId(type_id)
    except ValueError:
        raise IncoherentDialogueError(
            f"Unknown dialogue type: '{type_id}'",
            {"type": str(type_id), "known": [t.value for t in DialogueTypeId]},
        ) from None
    for dtype in dialogue_types():
        if dtype.id is wanted:
            return dtype
    raise IncoherentDialogueError(f"Unknown dialogue type: '{type_id}'", {"type": str(type_id)})
