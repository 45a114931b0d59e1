"""
Argumentation schemes: model, forms, validation, built-ins and registry
"""

from .builtins import (
    ARGUMENT_FROM_AN_ESTABLISHED_RULE,
    ARGUMENT_FROM_SIGN,
    BUILTIN_IDS,
    DEFEASIBLE_MODUS_PONENS,
    ETHOTIC,
    ETHOTIC_MATHEMATICAL,
    PRACTICAL_INFERENCE,
    build_scheme,
    builtin_schemes,
)
from .forms import (
    apply_substitution,
    instantiate_scheme,
    match_form,
    merge_substitutions,
    parse_form,
    parse_question,
    question_text,
    render_conclusion_line,
    render_toulmin,
)
from .model import (
    ArgumentInstance,
    ConditionResult,
    CQKind,
    CriticalQuestion,
    Qualifier,
    Role,
    SchematicVariable,
    Scheme,
    SchemeCategory,
    SchemeClass,
    SententialForm,
    Statement,
    Substitution,
    ValidationReport,
    structurally_equal,
)
from .registry import (
    LocalizationResult,
    Provenance,
    SchemeRegistry,
    TermMap,
    classify,
    default_registry,
    localize_scheme,
    lookup,
)
from .validation import validate_scheme

__all__ = [
    # Model
    "ArgumentInstance",
    "ConditionResult",
    "CQKind",
    "CriticalQuestion",
    "Qualifier",
    "Role",
    "SchematicVariable",
    "Scheme",
    "SchemeCategory",
    "SchemeClass",
    "SententialForm",
    "Statement",
    "Substitution",
    "ValidationReport",
    "structurally_equal",
    # Forms
    "parse_form",
    "parse_question",
    "match_form",
    "merge_substitutions",
    "apply_substitution",
    "instantiate_scheme",
    "question_text",
    "render_toulmin",
    "render_conclusion_line",
    "validate_scheme",
    # Built-ins
    "builtin_schemes",
    "build_scheme",
    "BUILTIN_IDS",
    "DEFEASIBLE_MODUS_PONENS",
    "ARGUMENT_FROM_SIGN",
    "ARGUMENT_FROM_AN_ESTABLISHED_RULE",
    "PRACTICAL_INFERENCE",
    "ETHOTIC",
    "ETHOTIC_MATHEMATICAL",
    # Registry
    "SchemeRegistry",
    "Provenance",
    "TermMap",
    "LocalizationResult",
    "default_registry",
    "lookup",
    "classify",
    "localize_scheme",
]
