"""
Grounded labelling of attack graphs, plus an exhaustive oracle
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from ..core.exceptions import GraphSizeError
from .graph import ArgumentGraph

DEFAULT_NODE_CAP = 20


class Label(Enum):
    IN = "IN"
    OUT = "OUT"
    UNDEC = "UNDEC"


@dataclass(frozen=True)
class Labelling:
    """Node id to IN/OUT/UNDEC"""

    labels: dict[str, Label] = field(default_factory=dict)

    def __getitem__(self, node_id: str) -> Label:
        return self.labels[node_id]

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Labelling):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self) -> int:
        return hash(frozenset(self.labels.items()))

    def with_label(self, label: Label) -> frozenset[str]:
        return frozenset(n for n, lab in self.labels.items() if lab is label)

    @property
    def accepted(self) -> frozenset[str]:
        return self.with_label(Label.IN)

    def to_dict(self) -> dict[str, str]:
        return {node: label.value for node, label in sorted(self.labels.items())}


def grounded_labelling(graph: ArgumentGraph) -> Labelling:
    """
    Least fixpoint: IN when every attacker is OUT, OUT when some attacker is
    IN, repeated until nothing changes; the remainder is UNDEC.
    """
    attackers = graph.attackers()
    labels: dict[str, Label] = {}
    changed = True
    while changed:
        changed = False
        for node, node_attackers in attackers.items():
            if node in labels:
                continue
            if all(labels.get(a) is Label.OUT for a in node_attackers):
                labels[node] = Label.IN
                changed = True
            elif any(labels.get(a) is Label.IN for a in node_attackers):
                labels[node] = Label.OUT
                changed = True

    return Labelling({node: labels.get(node, Label.UNDEC) for node in attackers})


def _complete_from(in_set: frozenset[str], attackers: dict[str, list[str]]) -> dict[str, Label] | None:
    labels: dict[str, Label] = {}
    for node, node_attackers in attackers.items():
        if node in in_set:
            labels[node] = Label.IN
        elif any(a in in_set for a in node_attackers):
            labels[node] = Label.OUT
        else:
            labels[node] = Label.UNDEC

    for node, node_attackers in attackers.items():
        label = labels[node]
        if label is Label.IN and not all(labels[a] is Label.OUT for a in node_attackers):
            return None
        if label is Label.UNDEC and all(labels[a] is Label.OUT for a in node_attackers):
            return None
    return labels


def brute_force_labelling(graph: ArgumentGraph, node_cap: int = DEFAULT_NODE_CAP) -> Labelling:
    """
    Enumerate candidate IN sets by increasing size and return the first one
    that induces a complete labelling. The grounded labelling is the complete
    labelling with the least IN set, so the two functions agree.

    Raises:
        GraphSizeError: If the graph has more than `node_cap` nodes
    """
    nodes = graph.nodes
    if len(nodes) > node_cap:
        raise GraphSizeError(
            f"Graph has {len(nodes)} nodes, exhaustive labelling is capped at {node_cap}",
            {"nodes": len(nodes), "cap": node_cap},
        )

    attackers = graph.attackers()
    for size in range(len(nodes) + 1):
        for chosen in combinations(nodes, size):
            labels = _complete_from(frozenset(chosen), attackers)
            if labels is not None:
                return Labelling(labels)

    # unreachable: every finite graph has a complete labelling
    raise GraphSizeError("No complete labelling found", {"nodes": len(nodes)})
