"""
Attack graphs, grounded labelling and argument assessment
"""

from .assessment import ArgumentAssessment, effective_qualifier, evaluate_argument
from .graph import (
    CQ_EDGE_KIND,
    ArgumentGraph,
    AttackEdge,
    CQEvent,
    CQStatus,
    EdgeKind,
    add_argument,
    add_attack,
    add_node,
    answer_cq,
    answer_node_id,
    attacker_node_id,
    pose_cq,
)
from .labelling import Label, Labelling, brute_force_labelling, grounded_labelling

__all__ = [
    "ArgumentGraph",
    "AttackEdge",
    "CQEvent",
    "CQStatus",
    "EdgeKind",
    "CQ_EDGE_KIND",
    "add_argument",
    "add_attack",
    "add_node",
    "pose_cq",
    "answer_cq",
    "attacker_node_id",
    "answer_node_id",
    "Label",
    "Labelling",
    "grounded_labelling",
    "brute_force_labelling",
    "effective_qualifier",
    "evaluate_argument",
    "ArgumentAssessment",
]
