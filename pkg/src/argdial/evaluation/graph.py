"""
Attack graphs built from argument instances and critical question events

Graphs are persistent: every operation returns a new graph and leaves its
input untouched, so labellings of older versions stay valid.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from types import MappingProxyType
from typing import Any, Mapping

from ..core.exceptions import (
    CQStateError,
    DuplicateCQError,
    EvaluationError,
    InvalidCQIndexError,
    UnknownArgumentError,
)
from ..core.validation import validate_identifier
from ..logging import get_logger
from ..schemes.forms import question_text
from ..schemes.model import ArgumentInstance, CQKind, Scheme

log = get_logger("argdial.evaluation")


class CQStatus(Enum):
    POSED = "posed"
    ANSWERED = "answered"


class EdgeKind(Enum):
    UNDERMINE = "undermine"
    REBUT = "rebut"
    UNDERCUT = "undercut"


# qualifier challenges weaken instead of attacking
CQ_EDGE_KIND: dict[CQKind, EdgeKind | None] = {
    CQKind.PREMISE_CHALLENGE: EdgeKind.UNDERMINE,
    CQKind.BACKING_CHALLENGE: EdgeKind.UNDERMINE,
    CQKind.REBUT: EdgeKind.REBUT,
    CQKind.UNDERCUT: EdgeKind.UNDERCUT,
    CQKind.QUALIFIER_CHALLENGE: None,
}


def attacker_node_id(argument_id: str, cq_index: int) -> str:
    return f"{argument_id}#cq{cq_index}"


def answer_node_id(argument_id: str, cq_index: int) -> str:
    return f"{attacker_node_id(argument_id, cq_index)}.answer"


@dataclass(frozen=True)
class CQEvent:
    """A critical question posed against an argument, possibly answered"""

    target_argument: str
    cq_index: int
    kind: CQKind
    status: CQStatus = CQStatus.POSED
    question: str = ""
    answer_text: str | None = None

    def __post_init__(self):
        if self.status is CQStatus.ANSWERED and not self.answer_text:
            raise CQStateError(
                "Answered critical question needs answer text",
                {"argument_id": self.target_argument, "cq_index": self.cq_index},
            )

    @property
    def key(self) -> tuple[str, int]:
        return (self.target_argument, self.cq_index)

    @property
    def is_open(self) -> bool:
        return self.status is CQStatus.POSED


@dataclass(frozen=True)
class AttackEdge:
    """
    attacker defeats target unless attacker is itself defeated.

    `premise` names the undermined premise text, `cq_index` the question that
    generated the edge (None for user edges).
    """

    attacker: str
    target: str
    kind: EdgeKind
    premise: str | None = None
    cq_index: int | None = None

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "attacker": self.attacker,
            "target": self.target,
            "kind": self.kind.value,
        }
        if self.premise is not None:
            data["premise"] = self.premise
        if self.cq_index is not None:
            data["cq"] = self.cq_index
        return data


def _frozen(mapping: Mapping) -> Mapping:
    return MappingProxyType(dict(mapping))


@dataclass(frozen=True)
class ArgumentGraph:
    """
    Arguments, abstract user nodes, CQ-derived nodes and attack edges.

    Node order is insertion order: arguments and user nodes as added,
    derived nodes after the event that created them.
    """

    arguments: Mapping[str, ArgumentInstance] = field(default_factory=lambda: _frozen({}))
    schemes: Mapping[str, Scheme] = field(default_factory=lambda: _frozen({}))
    extra_nodes: tuple[str, ...] = ()
    cq_events: tuple[CQEvent, ...] = ()
    derived_nodes: tuple[str, ...] = ()
    edges: tuple[AttackEdge, ...] = ()

    @property
    def nodes(self) -> tuple[str, ...]:
        return (*self.arguments, *self.extra_nodes, *self.derived_nodes)

    def __contains__(self, node_id: object) -> bool:
        return node_id in self.arguments or node_id in self.extra_nodes or node_id in self.derived_nodes

    def __len__(self) -> int:
        return len(self.arguments) + len(self.extra_nodes) + len(self.derived_nodes)

    def argument(self, argument_id: str) -> ArgumentInstance:
        try:
            return self.arguments[argument_id]
        except KeyError:
            raise UnknownArgumentError(argument_id) from None

    def scheme_of(self, argument_id: str) -> Scheme:
        return self.schemes[self.argument(argument_id).scheme_id]

    def event(self, argument_id: str, cq_index: int) -> CQEvent | None:
        for event in self.cq_events:
            if event.key == (argument_id, cq_index):
                return event
        return None

    def events_for(self, argument_id: str) -> tuple[CQEvent, ...]:
        return tuple(e for e in self.cq_events if e.target_argument == argument_id)

    def attackers(self) -> dict[str, list[str]]:
        """Node id to the ids of its attackers, every node present"""
        result: dict[str, list[str]] = {node: [] for node in self.nodes}
        for edge in self.edges:
            result[edge.target].append(edge.attacker)
        return result

    def to_dict(self) -> dict[str, Any]:
        return {
            "arguments": {
                arg_id: {
                    "scheme": inst.scheme_id,
                    "bindings": dict(sorted(inst.substitution.bindings.items())),
                    "qualifier": inst.qualifier.value,
                    "claim": inst.claim,
                }
                for arg_id, inst in self.arguments.items()
            },
            "nodes": list(self.extra_nodes),
            "cq_events": [
                {
                    "argument": e.target_argument,
                    "cq": e.cq_index,
                    "kind": e.kind.value,
                    "status": e.status.value,
                    **({"answer": e.answer_text} if e.answer_text is not None else {}),
                }
                for e in self.cq_events
            ],
            "edges": [e.to_dict() for e in self.edges],
        }


def _check_new_node(graph: ArgumentGraph, node_id: str) -> None:
    validate_identifier(node_id, "Node id")
    if node_id in graph:
        raise EvaluationError(f"Node already in graph: '{node_id}'", {"node_id": node_id})


def add_argument(graph: ArgumentGraph, instance: ArgumentInstance, scheme: Scheme) -> ArgumentGraph:
    """Add an argument node for `instance`, remembering its scheme for CQ lookups"""
    _check_new_node(graph, instance.id)
    if scheme.id != instance.scheme_id:
        raise EvaluationError(
            f"Instance '{instance.id}' was not built from scheme '{scheme.id}'",
            {"argument_id": instance.id, "scheme_id": scheme.id},
        )
    return replace(
        graph,
        arguments=_frozen({**graph.arguments, instance.id: instance}),
        schemes=_frozen({**graph.schemes, scheme.id: scheme}),
    )


def add_node(graph: ArgumentGraph, node_id: str) -> ArgumentGraph:
    """Add an abstract node with no scheme behind it"""
    _check_new_node(graph, node_id)
    return replace(graph, extra_nodes=(*graph.extra_nodes, node_id))


def add_attack(
    graph: ArgumentGraph, attacker: str, target: str, kind: EdgeKind = EdgeKind.REBUT
) -> ArgumentGraph:
    """Add a user attack between existing nodes; self-attacks are allowed"""
    for node in (attacker, target):
        if node not in graph:
            raise UnknownArgumentError(node)
    edge = AttackEdge(attacker=attacker, target=target, kind=kind)
    if edge in graph.edges:
        return graph
    return replace(graph, edges=(*graph.edges, edge))


def _undermined_premise(instance: ArgumentInstance, kind: CQKind) -> str | None:
    wanted = instance.warrant if kind is CQKind.BACKING_CHALLENGE else instance.data
    fallback = instance.data if kind is CQKind.BACKING_CHALLENGE else instance.warrant
    texts = wanted or fallback
    return texts[0] if texts else None


def pose_cq(graph: ArgumentGraph, argument_id: str, cq_index: int) -> ArgumentGraph:
    """
    Pose a critical question against an argument.

    Non-qualifier questions add an attacker node `<arg>#cq<n>` and one edge
    onto the argument. Qualifier challenges are only recorded.

    Raises:
        UnknownArgumentError: No such argument
        InvalidCQIndexError: The scheme has no question with that index
        DuplicateCQError: The question was already posed
    """
    instance = graph.argument(argument_id)
    scheme = graph.schemes[instance.scheme_id]
    question = scheme.cq(cq_index)
    if question is None:
        raise InvalidCQIndexError(
            f"Scheme '{scheme.id}' has no critical question {cq_index}",
            {"argument_id": argument_id, "cq_index": cq_index, "available": len(scheme.cqs)},
        )
    if graph.event(argument_id, cq_index) is not None:
        raise DuplicateCQError(
            f"Critical question {cq_index} already posed on '{argument_id}'",
            {"argument_id": argument_id, "cq_index": cq_index},
        )

    event = CQEvent(
        target_argument=argument_id,
        cq_index=cq_index,
        kind=question.kind,
        question=question_text(scheme, cq_index, instance.substitution),
    )
    updated = replace(graph, cq_events=(*graph.cq_events, event))

    edge_kind = CQ_EDGE_KIND[question.kind]
    if edge_kind is not None:
        node = attacker_node_id(argument_id, cq_index)
        premise = _undermined_premise(instance, question.kind) if edge_kind is EdgeKind.UNDERMINE else None
        edge = AttackEdge(
            attacker=node, target=argument_id, kind=edge_kind, premise=premise, cq_index=cq_index
        )
        updated = replace(
            updated,
            derived_nodes=(*updated.derived_nodes, node),
            edges=(*updated.edges, edge),
        )

    log.debug(
        "Posed critical question",
        argument_id=argument_id,
        cq_index=cq_index,
        kind=question.kind.value,
    )
    return updated


def answer_cq(graph: ArgumentGraph, argument_id: str, cq_index: int, answer_text: str) -> ArgumentGraph:
    """
    Answer a posed critical question.

    Any answer counts: an answer node attacks the question's attacker node.

    Raises:
        UnknownArgumentError: No such argument
        CQStateError: The question was never posed or is already answered
    """
    graph.argument(argument_id)
    event = graph.event(argument_id, cq_index)
    if event is None:
        raise CQStateError(
            f"Critical question {cq_index} on '{argument_id}' was never posed",
            {"argument_id": argument_id, "cq_index": cq_index},
        )
    if not event.is_open:
        raise CQStateError(
            f"Critical question {cq_index} on '{argument_id}' is already answered",
            {"argument_id": argument_id, "cq_index": cq_index},
        )
    if not answer_text.strip():
        raise CQStateError("Answer text is empty", {"argument_id": argument_id, "cq_index": cq_index})

    answered = replace(event, status=CQStatus.ANSWERED, answer_text=answer_text)
    updated = replace(
        graph,
        cq_events=tuple(answered if e.key == event.key else e for e in graph.cq_events),
    )

    attacker = attacker_node_id(argument_id, cq_index)
    if attacker in graph.derived_nodes:
        node = answer_node_id(argument_id, cq_index)
        edge = AttackEdge(attacker=node, target=attacker, kind=EdgeKind.REBUT, cq_index=cq_index)
        updated = replace(
            updated,
            derived_nodes=(*updated.derived_nodes, node),
            edges=(*updated.edges, edge),
        )

    log.debug("Answered critical question", argument_id=argument_id, cq_index=cq_index)
    return updated
