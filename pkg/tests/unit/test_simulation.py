"""
Unit tests for scripted policies and the simulation loop
"""

import pytest

from argdial.core import DialogueError
from argdial.dialogue import (
    POLICIES,
    CompliantProver,
    DialogueState,
    DialogueTypeId,
    ExhaustiveSceptic,
    Frame,
    Move,
    MoveKind,
    ReplayPolicy,
    SimulationStatus,
    new_dialogue,
    run_simulation,
    shift_report,
)
from argdial.evaluation import Label
from argdial.schemes import Substitution, instantiate_scheme


class TestProverAgainstSceptic:
    """Test the two built-in reasoning policies"""

    def test_answered_argument_survives(self, persuasion, lemma_argument, dmp):
        """Test that an argument whose questions are all answered ends IN"""
        transcript = run_simulation(
            persuasion,
            CompliantProver([(lemma_argument, dmp)]),
            ExhaustiveSceptic(),
        )

        kinds = [step.move.kind for step in transcript.steps]
        assert transcript.status is SimulationStatus.CLOSED
        assert transcript.labels == {"arg1": Label.IN}
        assert kinds.count(MoveKind.POSE_CQ) == 2
        assert kinds.count(MoveKind.ANSWER_CQ) == 2
        assert MoveKind.CONCEDE in kinds
        assert "the conjecture holds." in transcript.final.commitments("P2")

    def test_every_builtin_survives(self, registry):
        """Test the prover against the sceptic for each built-in scheme"""
        for scheme in registry:
            bindings = {v.name: f"term {v.name}" for v in scheme.variables}
            instance = instantiate_scheme(scheme, Substitution(bindings=bindings), "a1")
            transcript = run_simulation(
                new_dialogue(DialogueTypeId.PERSUASION),
                CompliantProver([(instance, scheme)]),
                ExhaustiveSceptic(),
            )

            assert transcript.labels["a1"] is Label.IN, scheme.id
            assert transcript.status is SimulationStatus.CLOSED

    def test_oracular_sceptic_cannot_question(self, lemma_argument, dmp):
        """Test that in oracular seeking the oracle argues and the seeker only concedes or closes"""
        state = new_dialogue(DialogueTypeId.ORACULAR)
        transcript = run_simulation(state, ExhaustiveSceptic(), CompliantProver([(lemma_argument, dmp)]))

        kinds = {step.move.kind for step in transcript.steps}
        assert MoveKind.POSE_CQ not in kinds
        assert transcript.status is SimulationStatus.CLOSED


class TestRunSimulation:
    """Test loop termination"""

    def test_empty_script_times_out(self, persuasion):
        """Test that a policy with nothing to say ends the run"""
        replay = ReplayPolicy()
        transcript = run_simulation(persuasion, replay, replay)

        assert transcript.status is SimulationStatus.TIMEOUT
        assert len(transcript) == 0

    def test_max_turns(self, persuasion):
        """Test the turn limit"""
        moves = [Move(kind=MoveKind.ASSERT, statement=f"s{i}") for i in range(10)]
        replay = ReplayPolicy(moves)

        transcript = run_simulation(persuasion, replay, replay, max_turns=3)

        assert transcript.status is SimulationStatus.TIMEOUT
        assert len(transcript) == 3

    def test_violation_stops(self, persuasion):
        """Test that an illegal move is reported rather than raised"""
        replay = ReplayPolicy([Move(kind=MoveKind.RETRACT, statement="never said")])

        transcript = run_simulation(persuasion, replay, replay)

        assert transcript.status is SimulationStatus.VIOLATION
        assert transcript.violation["error"] == "RuleViolationError"
        assert transcript.violation["details"]["permission"] == "persuasion:proponent:retract"

    def test_stalled(self):
        """Test a state where the turn holder has no legal move"""
        oracle = new_dialogue(DialogueTypeId.ORACULAR)
        muted = oracle.dialogue_type.model_copy(update={"proponent_moves": frozenset({MoveKind.CONCEDE})})
        state = DialogueState(
            participants=oracle.participants,
            frames=(Frame(dialogue_type=muted, stores=oracle.top.stores),),
            turn="P1",
        )

        transcript = run_simulation(state, ExhaustiveSceptic(), ExhaustiveSceptic())

        assert transcript.status is SimulationStatus.STALLED

    def test_deltas_recorded(self, persuasion):
        """Test that steps carry commitment changes"""
        replay = ReplayPolicy(
            [
                Move(kind=MoveKind.ASSERT, statement="x"),
                Move(kind=MoveKind.CONCEDE, statement="x"),
                Move(kind=MoveKind.RETRACT, statement="x"),
            ]
        )

        transcript = run_simulation(persuasion, replay, replay)

        assert [step.added for step in transcript.steps] == [(("P1", "x"),), (("P2", "x"),), ()]
        assert transcript.steps[2].removed == (("P1", "x"),)

    def test_bad_turn_limit(self, persuasion):
        """Test that the turn limit must be positive"""
        with pytest.raises(DialogueError):
            run_simulation(persuasion, ReplayPolicy(), ReplayPolicy(), max_turns=0)

    def test_shift_report(self, inquiry):
        """Test that the shift report lists shifts in order"""
        replay = ReplayPolicy(
            [
                Move(kind=MoveKind.PROPOSE_SHIFT, shift_mode="replace", shift_target="deliberation"),
                Move(kind=MoveKind.ACCEPT_SHIFT),
            ]
        )

        transcript = run_simulation(inquiry, replay, replay)

        assert [(e.turn, e.from_type, e.to_type) for e in shift_report(transcript)] == [
            (1, "inquiry", "deliberation")
        ]
        assert transcript.steps[1].shifts == transcript.shift_log

    def test_policy_names(self):
        """Test the policy lookup table"""
        assert set(POLICIES) == {"replay", "exhaustive-sceptic", "compliant-prover"}
