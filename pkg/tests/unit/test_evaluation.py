"""
Unit tests for argument graphs, grounded labelling and assessment
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from argdial.core import (
    CQStateError,
    DuplicateCQError,
    EvaluationError,
    GraphSizeError,
    InvalidCQIndexError,
    UnknownArgumentError,
)
from argdial.evaluation import (
    ArgumentGraph,
    CQStatus,
    EdgeKind,
    Label,
    add_argument,
    add_attack,
    add_node,
    answer_cq,
    answer_node_id,
    attacker_node_id,
    brute_force_labelling,
    effective_qualifier,
    evaluate_argument,
    grounded_labelling,
    pose_cq,
)
from argdial.schemes import (
    ETHOTIC,
    CQKind,
    Qualifier,
    Role,
    SchemeClass,
    Substitution,
    build_scheme,
    builtin_schemes,
    instantiate_scheme,
)


def _abstract(count: int, attacks: list[tuple[int, int]]) -> ArgumentGraph:
    graph = ArgumentGraph()
    for i in range(count):
        graph = add_node(graph, f"n{i}")
    for attacker, target in attacks:
        graph = add_attack(graph, f"n{attacker}", f"n{target}")
    return graph


def _bindings(scheme) -> Substitution:
    return Substitution(bindings={v.name: f"term {v.name}" for v in scheme.variables})


@st.composite
def abstract_graphs(draw):
    count = draw(st.integers(min_value=0, max_value=12))
    if count == 0:
        return ArgumentGraph()
    pairs = st.tuples(st.integers(0, count - 1), st.integers(0, count - 1))
    attacks = draw(st.lists(pairs, max_size=count * 3))
    return _abstract(count, attacks)


class TestArgumentGraph:
    """Test graph construction"""

    def test_graphs_are_persistent(self, lemma_graph):
        """Test that operations leave their input untouched"""
        posed = pose_cq(lemma_graph, "arg1", 1)

        assert lemma_graph.cq_events == ()
        assert len(lemma_graph) == 1
        assert len(posed) == 2

    def test_duplicate_node(self, lemma_graph):
        """Test that node ids are unique"""
        with pytest.raises(EvaluationError):
            add_node(lemma_graph, "arg1")

    def test_attack_needs_nodes(self, lemma_graph):
        """Test that attacks reference existing nodes"""
        with pytest.raises(UnknownArgumentError):
            add_attack(lemma_graph, "ghost", "arg1")

    def test_self_attack_allowed(self):
        """Test that a node may attack itself"""
        graph = add_attack(add_node(ArgumentGraph(), "a"), "a", "a")

        assert grounded_labelling(graph)["a"] is Label.UNDEC

    def test_unknown_argument(self, lemma_graph):
        """Test lookups of absent arguments"""
        with pytest.raises(UnknownArgumentError):
            lemma_graph.argument("arg2")


class TestCriticalQuestions:
    """Test posing and answering critical questions"""

    def test_pose_adds_attacker(self, lemma_graph):
        """Test that a backing challenge undermines the warrant"""
        graph = pose_cq(lemma_graph, "arg1", 1)
        edge = graph.edges[0]

        assert attacker_node_id("arg1", 1) == "arg1#cq1"
        assert graph.derived_nodes == ("arg1#cq1",)
        assert edge.kind is EdgeKind.UNDERMINE
        assert edge.premise == "As a rule, if the lemma holds, then the conjecture holds."
        assert graph.event("arg1", 1).question.startswith("What reason is there to accept that")
        assert grounded_labelling(graph)["arg1"] is Label.OUT

    def test_undercut_kind(self, lemma_graph):
        """Test that an undercutting question yields an undercut edge"""
        graph = pose_cq(lemma_graph, "arg1", 2)

        assert graph.edges[0].kind is EdgeKind.UNDERCUT
        assert graph.edges[0].premise is None

    def test_answer_reinstates(self, lemma_graph):
        """Test that answering attacks the attacker and reinstates the argument"""
        graph = answer_cq(pose_cq(lemma_graph, "arg1", 1), "arg1", 1, "the rule is a proved theorem.")
        labels = grounded_labelling(graph)

        assert graph.event("arg1", 1).status is CQStatus.ANSWERED
        assert labels[answer_node_id("arg1", 1)] is Label.IN
        assert labels["arg1#cq1"] is Label.OUT
        assert labels["arg1"] is Label.IN

    def test_invalid_index(self, lemma_graph):
        """Test that questions beyond the scheme's list are refused"""
        with pytest.raises(InvalidCQIndexError):
            pose_cq(lemma_graph, "arg1", 3)

    def test_duplicate_question(self, lemma_graph):
        """Test that a question is posed once"""
        with pytest.raises(DuplicateCQError):
            pose_cq(pose_cq(lemma_graph, "arg1", 1), "arg1", 1)

    def test_answer_unposed(self, lemma_graph):
        """Test answering a question never asked"""
        with pytest.raises(CQStateError):
            answer_cq(lemma_graph, "arg1", 1, "because")

    def test_answer_twice(self, lemma_graph):
        """Test that an answered question stays answered"""
        graph = answer_cq(pose_cq(lemma_graph, "arg1", 1), "arg1", 1, "because")

        with pytest.raises(CQStateError):
            answer_cq(graph, "arg1", 1, "again")

    def test_empty_answer(self, lemma_graph):
        """Test that an answer needs text"""
        with pytest.raises(CQStateError):
            answer_cq(pose_cq(lemma_graph, "arg1", 1), "arg1", 1, "  ")

    def test_qualifier_challenge_adds_no_attack(self, registry):
        """Test that qualifier challenges only weaken"""
        scheme = registry.get(ETHOTIC)
        instance = instantiate_scheme(scheme, _bindings(scheme), "e1")
        graph = pose_cq(add_argument(ArgumentGraph(), instance, scheme), "e1", 3)

        assert graph.edges == ()
        assert grounded_labelling(graph)["e1"] is Label.IN
        assert effective_qualifier(graph, "e1") is Qualifier.PLAUSIBLE

        answered = answer_cq(graph, "e1", 3, "the evidence is strong")
        assert answered.edges == ()
        assert effective_qualifier(answered, "e1") is Qualifier.PRESUMABLE

    @pytest.mark.parametrize("scheme", builtin_schemes(), ids=lambda s: s.id)
    def test_reinstatement_for_every_question(self, scheme):
        """Test pose-then-answer leaves every argument IN for every question"""
        instance = instantiate_scheme(scheme, _bindings(scheme), "a1")
        base = add_argument(ArgumentGraph(), instance, scheme)

        for question in scheme.cqs:
            posed = pose_cq(base, "a1", question.index)
            if question.kind is not CQKind.QUALIFIER_CHALLENGE:
                assert grounded_labelling(posed)["a1"] is Label.OUT
            answered = answer_cq(posed, "a1", question.index, "answered")
            assert grounded_labelling(answered)["a1"] is Label.IN


class TestGroundedLabelling:
    """Test grounded semantics"""

    def test_unattacked_in(self):
        """Test that unattacked nodes are IN"""
        labels = grounded_labelling(_abstract(2, []))

        assert labels.accepted == frozenset({"n0", "n1"})

    def test_chain(self):
        """Test a three node chain"""
        labels = grounded_labelling(_abstract(3, [(0, 1), (1, 2)]))

        assert labels.to_dict() == {"n0": "IN", "n1": "OUT", "n2": "IN"}

    def test_mutual_attack_undecided(self):
        """Test that a two-cycle is undecided"""
        labels = grounded_labelling(_abstract(2, [(0, 1), (1, 0)]))

        assert labels.with_label(Label.UNDEC) == frozenset({"n0", "n1"})

    def test_odd_cycle_undecided(self):
        """Test that a three-cycle is undecided"""
        labels = grounded_labelling(_abstract(3, [(0, 1), (1, 2), (2, 0)]))

        assert labels.with_label(Label.UNDEC) == frozenset({"n0", "n1", "n2"})

    def test_empty_graph(self):
        """Test the empty graph"""
        assert len(grounded_labelling(ArgumentGraph())) == 0

    @pytest.mark.slow
    @settings(max_examples=1000, deadline=None)
    @given(abstract_graphs())
    def test_matches_exhaustive_oracle(self, graph):
        """Test that the fixpoint agrees with the smallest complete labelling"""
        assert grounded_labelling(graph) == brute_force_labelling(graph)

    @settings(max_examples=100, deadline=None)
    @given(abstract_graphs())
    def test_labelling_is_complete(self, graph):
        """Test the completeness conditions on every node"""
        labels = grounded_labelling(graph)
        attackers = graph.attackers()
        for node, node_attackers in attackers.items():
            if labels[node] is Label.IN:
                assert all(labels[a] is Label.OUT for a in node_attackers)
            elif labels[node] is Label.OUT:
                assert any(labels[a] is Label.IN for a in node_attackers)

    @settings(max_examples=300, deadline=None)
    @given(st.data())
    def test_insertion_order_irrelevant(self, data):
        """Test that the labelling depends on the attacks, not the order they were added"""
        count = data.draw(st.integers(min_value=1, max_value=10))
        pairs = st.tuples(st.integers(0, count - 1), st.integers(0, count - 1))
        attacks = sorted(set(data.draw(st.lists(pairs, max_size=count * 3))))
        nodes = data.draw(st.permutations(range(count)))
        shuffled = data.draw(st.permutations(attacks))

        reordered = ArgumentGraph()
        for i in nodes:
            reordered = add_node(reordered, f"n{i}")
        for attacker, target in shuffled:
            reordered = add_attack(reordered, f"n{attacker}", f"n{target}")

        assert grounded_labelling(reordered).to_dict() == grounded_labelling(_abstract(count, attacks)).to_dict()

    def test_oracle_cap(self):
        """Test that the exhaustive oracle refuses large graphs"""
        with pytest.raises(GraphSizeError):
            brute_force_labelling(_abstract(21, []))
        assert len(brute_force_labelling(_abstract(3, []), node_cap=3)) == 3

def _challenged_scheme():
    """Presumable scheme with three qualifier challenges and one undercut"""
    return build_scheme(
        "challenged",
        "Challenged",
        ["P", "Q"],
        [(Role.DATA, "{P}."), (Role.WARRANT, "As a rule, if {P}, then {Q}.")],
        (Role.CLAIM, "{Q}."),
        [
            (CQKind.QUALIFIER_CHALLENGE, "Is {P} well attested?"),
            (CQKind.UNDERCUT, "Is this case an exception?"),
            (CQKind.QUALIFIER_CHALLENGE, "Is the rule from {P} to {Q} strong?"),
            (CQKind.QUALIFIER_CHALLENGE, "Is {Q} claimed too strongly?"),
        ],
    )


CHALLENGE_STEPS = st.lists(st.tuples(st.sampled_from(["pose", "answer"]), st.integers(1, 4)), max_size=16)


class TestQualifierLaws:
    """Test effective qualifiers under any order of posing and answering"""

    @settings(max_examples=300, deadline=None)
    @given(st.sampled_from(list(Qualifier)), CHALLENGE_STEPS)
    def test_open_challenges_weaken(self, start, steps):
        """Test one step down per open qualifier challenge, floored at plausible"""
        scheme = _challenged_scheme()
        instance = instantiate_scheme(scheme, Substitution.of(P="p", Q="q"), "c1", start)
        graph = add_argument(ArgumentGraph(), instance, scheme)
        posed: set[int] = set()
        answered: set[int] = set()

        for action, index in steps:
            if action == "pose" and index not in posed:
                graph = pose_cq(graph, "c1", index)
                posed.add(index)
            elif action == "answer" and index in posed - answered:
                graph = answer_cq(graph, "c1", index, "answered")
                answered.add(index)

            open_challenges = len((posed - answered) & {1, 3, 4})
            qualifier = effective_qualifier(graph, "c1")
            assert qualifier is start.downgrade(open_challenges)
            assert qualifier <= start
            if not open_challenges:
                assert qualifier is start
            undercut_open = 2 in posed - answered
            assert (grounded_labelling(graph)["c1"] is Label.OUT) is undercut_open

    @settings(max_examples=200, deadline=None)
    @given(st.permutations([1, 2, 3, 4]), st.permutations([1, 2, 3, 4]))
    def test_answering_everything_restores(self, pose_order, answer_order):
        """Test that once every question is answered the instance qualifier is back"""
        scheme = _challenged_scheme()
        instance = instantiate_scheme(scheme, Substitution.of(P="p", Q="q"), "c1")
        graph = add_argument(ArgumentGraph(), instance, scheme)
        for index in pose_order:
            graph = pose_cq(graph, "c1", index)
        assert effective_qualifier(graph, "c1") is Qualifier.PLAUSIBLE

        for index in answer_order:
            graph = answer_cq(graph, "c1", index, "answered")

        assert effective_qualifier(graph, "c1") is Qualifier.PRESUMABLE
        assert grounded_labelling(graph)["c1"] is Label.IN



class TestAssessment:
    """Test qualifiers and verdicts"""

    def test_instance_qualifier_kept(self, dmp):
        """Test that an unchallenged argument keeps its qualifier"""
        instance = instantiate_scheme(dmp, Substitution.of(P="a", Q="b"), "a1", Qualifier.PROBABLE)
        graph = add_argument(ArgumentGraph(), instance, dmp)

        assert effective_qualifier(graph, "a1") is Qualifier.PROBABLE

    def test_deductive_always_certain(self):
        """Test that class A arguments are certain whatever is posed"""
        scheme = build_scheme(
            "modus_ponens",
            "Modus Ponens",
            ["P", "Q"],
            [(Role.DATA, "{P}."), (Role.WARRANT, "If {P}, then {Q}.")],
            (Role.CLAIM, "{Q}."),
            [(CQKind.QUALIFIER_CHALLENGE, "Is the derivation sound?")],
            scheme_class=SchemeClass.A,
            qualifier=Qualifier.CERTAIN,
        )
        instance = instantiate_scheme(scheme, Substitution.of(P="a", Q="b"), "d1")
        graph = pose_cq(add_argument(ArgumentGraph(), instance, scheme), "d1", 1)

        assert effective_qualifier(graph, "d1") is Qualifier.CERTAIN

    def test_downgrade_floor(self):
        """Test that qualifiers never drop below plausible"""
        assert Qualifier.CERTAIN.downgrade() is Qualifier.PROBABLE
        assert Qualifier.PLAUSIBLE.downgrade(3) is Qualifier.PLAUSIBLE
        assert Qualifier.PLAUSIBLE < Qualifier.PRESUMABLE < Qualifier.CERTAIN

    def test_evaluate_argument(self, lemma_graph):
        """Test the verdict bundle"""
        graph = pose_cq(pose_cq(lemma_graph, "arg1", 2), "arg1", 1)
        graph = answer_cq(graph, "arg1", 1, "proved")

        verdict = evaluate_argument(graph, "arg1")

        assert verdict.label is Label.OUT
        assert verdict.qualifier is Qualifier.PRESUMABLE
        assert verdict.open_cqs == (2,)
        assert verdict.to_dict() == {
            "argument": "arg1",
            "label": "OUT",
            "qualifier": "presumable",
            "open_cqs": [2],
        }
