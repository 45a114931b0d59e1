"""
Unit tests for the dialogue type registry and cell coherence
"""

import itertools

import pytest

from argdial.core import IncoherentDialogueError
from argdial.dialogue import (
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
    new_dialogue,
)

VALID_CELLS = {
    (MainGoal.STABLE_RESOLUTION, InitialSituation.CONFLICT): {DialogueTypeId.PERSUASION},
    (MainGoal.STABLE_RESOLUTION, InitialSituation.OPEN_PROBLEM): {DialogueTypeId.INQUIRY},
    (MainGoal.STABLE_RESOLUTION, InitialSituation.INFO_ASYMMETRY): {
        DialogueTypeId.PEDAGOGICAL,
        DialogueTypeId.ORACULAR,
    },
    (MainGoal.PRACTICAL_SETTLEMENT, InitialSituation.CONFLICT): {DialogueTypeId.NEGOTIATION},
    (MainGoal.PRACTICAL_SETTLEMENT, InitialSituation.OPEN_PROBLEM): {DialogueTypeId.DELIBERATION},
    (MainGoal.PROVISIONAL_ACCOMMODATION, InitialSituation.CONFLICT): {DialogueTypeId.ERISTIC},
}
EMPTY_CELLS = [
    (MainGoal.PRACTICAL_SETTLEMENT, InitialSituation.INFO_ASYMMETRY),
    (MainGoal.PROVISIONAL_ACCOMMODATION, InitialSituation.OPEN_PROBLEM),
    (MainGoal.PROVISIONAL_ACCOMMODATION, InitialSituation.INFO_ASYMMETRY),
]


class TestSurveyCells:
    """Test the situation x goal grid"""

    def test_six_cells_occupied(self):
        """Test which cells hold which types"""
        assert {cell: set(family) for cell, family in SURVEY_CELLS.items()} == VALID_CELLS

    @pytest.mark.parametrize(("goal", "situation"), EMPTY_CELLS)
    def test_empty_cells_incoherent(self, goal, situation):
        """Test that every type is refused in an empty cell"""
        for type_id in DialogueTypeId:
            with pytest.raises(IncoherentDialogueError, match="N/A cell"):
                check_coherence(type_id, situation, goal)

    def test_each_type_only_in_its_cell(self):
        """Test coherence across the whole grid"""
        for type_id, goal, situation in itertools.product(DialogueTypeId, MainGoal, InitialSituation):
            family = VALID_CELLS.get((goal, situation), set())
            if type_id in family:
                check_coherence(type_id, situation, goal)
            else:
                with pytest.raises(IncoherentDialogueError):
                    check_coherence(type_id, situation, goal)

    def test_new_dialogue_checks_cell(self):
        """Test that opening an incoherent dialogue fails"""
        with pytest.raises(IncoherentDialogueError):
            new_dialogue("persuasion", "open-problem", "stable-resolution")


class TestDialogueTypes:
    """Test the dialogue type records"""

    def test_seven_types(self):
        """Test that every id has exactly one record"""
        assert [t.id for t in dialogue_types()] == list(DialogueTypeId)

    def test_lookup_by_string(self):
        """Test lookup by id string"""
        dtype = dialogue_type("information-seeking-oracular")

        assert dtype.id is DialogueTypeId.ORACULAR
        assert dtype.oracle_mode is True

    def test_unknown_type(self):
        """Test lookup of an unknown id"""
        with pytest.raises(IncoherentDialogueError):
            dialogue_type("interrogation")

    def test_goals_carried(self):
        """Test the descriptive goal metadata"""
        inquiry = dialogue_type(DialogueTypeId.INQUIRY)

        assert inquiry.collective_goal == "Prove or disprove conjecture"
        assert inquiry.benefits == "Obtain knowledge"
        assert dialogue_type(DialogueTypeId.NEGOTIATION).respondent_goal == "Maximize value of exchange"

    def test_oracular_respondent_cannot_question(self):
        """Test the oracular permission matrix"""
        oracle = dialogue_type(DialogueTypeId.ORACULAR)

        assert MoveKind.POSE_CQ not in oracle.moves_for(ParticipantRole.PROPONENT)
        assert MoveKind.POSE_CQ not in oracle.moves_for(ParticipantRole.RESPONDENT)
        assert MoveKind.ARGUE in oracle.moves_for(ParticipantRole.RESPONDENT)

    def test_only_eristic_degrades(self):
        """Test which shifts are flagged as degrading"""
        assert [t.id for t in dialogue_types() if t.degrading] == [DialogueTypeId.ERISTIC]

    def test_shift_moves_everywhere(self):
        """Test that every type lets both roles negotiate a shift"""
        for dtype in dialogue_types():
            for role in ParticipantRole:
                assert {MoveKind.PROPOSE_SHIFT, MoveKind.ACCEPT_SHIFT} <= dtype.moves_for(role)

    def test_record_must_match_cell(self):
        """Test that a record in the wrong cell cannot be built"""
        with pytest.raises(IncoherentDialogueError):
            DialogueType(
                id=DialogueTypeId.ERISTIC,
                situation=InitialSituation.OPEN_PROBLEM,
                goal=MainGoal.PROVISIONAL_ACCOMMODATION,
                proponent_goal="x",
                respondent_goal="x",
                individual_goals="x",
                collective_goal="x",
                benefits="x",
                proponent_moves=frozenset(),
                respondent_moves=frozenset(),
            )
