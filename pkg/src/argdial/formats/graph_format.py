"""
Argument graph files (.arg)

    argument s1 argument_from_sign A="a rash" B="measles" qualifier presumable
    node n1
    attack n1 s1 rebut
    pose s1 2
    answer s1 2 "no other event explains the rash"

Lines are applied in order. Exports end with the computed labels as
comments, or use `machine` format for a JSON document.
"""

import json
from dataclasses import dataclass, field
from typing import Literal

import pyparsing as pp

from ..core.exceptions import ArgdialError
from ..core.validation import quote_text
from ..evaluation.graph import (
    ArgumentGraph,
    CQEvent,
    EdgeKind,
    add_argument,
    add_attack,
    add_node,
    answer_cq,
    answer_node_id,
    attacker_node_id,
    pose_cq,
)
from ..evaluation.labelling import Labelling, grounded_labelling
from ..schemes.forms import instantiate_scheme
from ..schemes.model import Substitution
from ..schemes.registry import SchemeRegistry, default_registry
from .diagnostics import Diagnostic
from .grammar import (
    ARGUMENT,
    INDEX,
    LineError,
    bindings_of,
    enum_word,
    is_blank,
    keyword,
    line_grammar,
    parse_line,
    quoted,
    split_lines,
    unknown,
    word,
)

ExportFormat = Literal["text", "machine"]

GRAPH_LINE = line_grammar(
    ARGUMENT
    | (keyword("node")("keyword") - word("node id")("node"))
    | (
        keyword("attack")("keyword")
        - (
            word("attacker")("attacker")
            + word("target")("target")
            + pp.Optional(enum_word(EdgeKind, "attack kind")("kind"))
        )
    )
    | (keyword("pose")("keyword") - (word("argument id")("argument_id") + INDEX("index")))
    | (
        keyword("answer")("keyword")
        - (word("argument id")("argument_id") + INDEX("index") + quoted("quoted answer")("answer"))
    )
    | unknown("keyword"),
    "keyword",
)


@dataclass
class GraphDocument:
    source: str
    graph: ArgumentGraph = field(default_factory=ArgumentGraph)
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.diagnostics


def _apply_line(graph: ArgumentGraph, results: pp.ParseResults, registry: SchemeRegistry) -> ArgumentGraph:
    match results["keyword"]:
        case "argument":
            scheme = registry.get(results["scheme_id"].text)
            instance = instantiate_scheme(
                scheme,
                Substitution(bindings=bindings_of(results)),
                results["argument_id"].text,
                results.get("qualifier"),
            )
            return add_argument(graph, instance, scheme)
        case "node":
            return add_node(graph, results["node"])
        case "attack":
            return add_attack(graph, results["attacker"], results["target"], results.get("kind", EdgeKind.REBUT))
        case "pose":
            return pose_cq(graph, results["argument_id"], results["index"])
        case _:
            return answer_cq(graph, results["argument_id"], results["index"], results["answer"])


def parse_graph(
    text: str | bytes, registry: SchemeRegistry | None = None, source: str = "<input>"
) -> GraphDocument:
    """Build a graph line by line; a failing line is reported and skipped"""
    registry = registry or default_registry()
    document = GraphDocument(source=source)
    graph = ArgumentGraph()

    for number, raw in enumerate(split_lines(text), start=1):
        if is_blank(raw):
            continue
        try:
            graph = _apply_line(graph, parse_line(GRAPH_LINE, raw), registry)
        except LineError as e:
            document.diagnostics.append(Diagnostic.at(number, e, source))
        except ArgdialError as e:
            document.diagnostics.append(Diagnostic(line=number, message=e.message, source=source))
        except ValueError as e:
            document.diagnostics.append(Diagnostic(line=number, message=str(e).splitlines()[0], source=source))

    document.graph = graph
    return document


def _pose_line(event: CQEvent) -> str:
    return f"pose {event.target_argument} {event.cq_index}"


def _answer_line(event: CQEvent) -> str:
    return f"answer {event.target_argument} {event.cq_index} {quote_text(event.answer_text or '')}"


def _history_lines(graph: ArgumentGraph) -> list[str]:
    """
    Attack, pose and answer lines in the order their edges were created.

    Questions that create no edge are posed just before the next later
    question, so replaying the lines rebuilds the same event and edge order.
    """
    events = graph.cq_events
    position = {event.key: i for i, event in enumerate(events)}
    posing = {attacker_node_id(*event.key): event for event in events}
    answering = {answer_node_id(*event.key): event for event in events}
    lines: list[str] = []
    posed = 0

    def pose_through(index: int) -> None:
        nonlocal posed
        while posed <= index:
            lines.append(_pose_line(events[posed]))
            posed += 1

    for edge in graph.edges:
        if edge.cq_index is None:
            lines.append(f"attack {edge.attacker} {edge.target} {edge.kind.value}")
        elif edge.attacker in posing:
            pose_through(position[posing[edge.attacker].key])
        elif edge.attacker in answering:
            lines.append(_answer_line(answering[edge.attacker]))

    pose_through(len(events) - 1)
    derived = set(graph.derived_nodes)
    lines += [
        _answer_line(event)
        for event in events
        if event.answer_text is not None and answer_node_id(*event.key) not in derived
    ]
    return lines


def _text_export(graph: ArgumentGraph, labelling: Labelling) -> str:
    lines = []
    for argument_id, instance in graph.arguments.items():
        bindings = " ".join(f"{k}={quote_text(v)}" for k, v in sorted(instance.substitution.bindings.items()))
        line = f"argument {argument_id} {instance.scheme_id} {bindings}".rstrip()
        scheme = graph.schemes[instance.scheme_id]
        if instance.qualifier is not scheme.default_qualifier:
            line += f" qualifier {instance.qualifier.value}"
        lines.append(line)
    lines += [f"node {node}" for node in graph.extra_nodes]
    lines += _history_lines(graph)
    lines += [f"# label {node} {labelling[node].value}" for node in graph.nodes]
    return "\n".join(lines) + "\n" if lines else ""


def export_graph(graph: ArgumentGraph, fmt: ExportFormat = "text", labelling: Labelling | None = None) -> str:
    """Serialize a graph with its grounded labels"""
    labelling = labelling or grounded_labelling(graph)
    if fmt == "machine":
        return json.dumps({**graph.to_dict(), "labels": labelling.to_dict()}, indent=2, sort_keys=True) + "\n"
    return _text_export(graph, labelling)
