"""
Qualifiers and verdicts for single arguments
"""

from typing import Any

from pydantic import BaseModel, ConfigDict

from ..schemes.model import CQKind, Qualifier
from .graph import ArgumentGraph
from .labelling import Label, Labelling, grounded_labelling


def effective_qualifier(graph: ArgumentGraph, argument_id: str) -> Qualifier:
    """
    The instance qualifier weakened one step per open qualifier challenge.

    Class A and B instances are always certain.
    """
    instance = graph.argument(argument_id)
    scheme = graph.scheme_of(argument_id)
    if scheme.scheme_class.deductive:
        return Qualifier.CERTAIN

    open_challenges = sum(
        1
        for event in graph.events_for(argument_id)
        if event.is_open and event.kind is CQKind.QUALIFIER_CHALLENGE
    )
    return instance.qualifier.downgrade(open_challenges)


class ArgumentAssessment(BaseModel):
    """Label, effective qualifier and unanswered questions of one argument"""

    model_config = ConfigDict(frozen=True)

    argument_id: str
    label: Label
    qualifier: Qualifier
    open_cqs: tuple[int, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "argument": self.argument_id,
            "label": self.label.value,
            "qualifier": self.qualifier.value,
            "open_cqs": list(self.open_cqs),
        }


def evaluate_argument(
    graph: ArgumentGraph, argument_id: str, labelling: Labelling | None = None
) -> ArgumentAssessment:
    """
    Bundle the grounded label, effective qualifier and open questions.

    Pass `labelling` to reuse one computed for the same graph.
    """
    graph.argument(argument_id)
    labelling = labelling or grounded_labelling(graph)
    open_cqs = tuple(sorted(e.cq_index for e in graph.events_for(argument_id) if e.is_open))
    return ArgumentAssessment(
        argument_id=argument_id,
        label=labelling[argument_id],
        qualifier=effective_qualifier(graph, argument_id),
        open_cqs=open_cqs,
    )
