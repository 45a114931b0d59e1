"""
Built-in schemes

Premise, conclusion and critical question texts are kept as they are
usually printed, with schematic letters written as `{Name}` slots.
Conclusion indicators ("Therefore") are scheme metadata, not template text.
"""

from functools import cache

from .forms import parse_form, parse_question
from .model import (
    CQKind,
    Qualifier,
    Role,
    Scheme,
    SchemeCategory,
    SchemeClass,
    SchematicVariable,
)

DEFEASIBLE_MODUS_PONENS = "defeasible_modus_ponens"
ARGUMENT_FROM_SIGN = "argument_from_sign"
ARGUMENT_FROM_AN_ESTABLISHED_RULE = "argument_from_an_established_rule"
PRACTICAL_INFERENCE = "practical_inference"
ETHOTIC = "ethotic"
ETHOTIC_MATHEMATICAL = "ethotic_mathematical"


def build_scheme(
    scheme_id: str,
    name: str,
    variables: list[str],
    premises: list[tuple[Role, str]],
    conclusion: tuple[Role, str],
    cqs: list[tuple[CQKind, str]],
    scheme_class: SchemeClass = SchemeClass.C,
    qualifier: Qualifier = Qualifier.PRESUMABLE,
    indicator: str | None = None,
    category: SchemeCategory | None = None,
) -> Scheme:
    """Assemble a scheme from plain templates"""
    return Scheme(
        id=scheme_id,
        name=name,
        scheme_class=scheme_class,
        default_qualifier=qualifier,
        variables=tuple(SchematicVariable(name=v) for v in variables),
        premises=tuple(parse_form(template, role) for role, template in premises),
        conclusion=parse_form(conclusion[1], conclusion[0]),
        cqs=tuple(parse_question(i, kind, text) for i, (kind, text) in enumerate(cqs, start=1)),
        indicator=indicator,
        category=category,
    )


def _defeasible_modus_ponens() -> Scheme:
    return build_scheme(
        DEFEASIBLE_MODUS_PONENS,
        "Defeasible Modus Ponens",
        ["P", "Q"],
        [
            (Role.DATA, "{P}."),
            (Role.WARRANT, "As a rule, if {P}, then {Q}."),
        ],
        (Role.CLAIM, "{Q}."),
        [
            (CQKind.BACKING_CHALLENGE, "What reason is there to accept that, as a rule, if {P}, then {Q}?"),
            (CQKind.UNDERCUT, "Is the present case an exception to the rule that if {P}, then {Q}?"),
        ],
        indicator="Therefore",
        category=SchemeCategory.GENERAL,
    )


def _argument_from_sign() -> Scheme:
    return build_scheme(
        ARGUMENT_FROM_SIGN,
        "Argument from Sign",
        ["A", "B"],
        [
            (Role.SPECIFIC_PREMISE, "{A} (a finding) is true in this situation."),
            (Role.GENERAL_PREMISE, "{B} is generally indicated as true when its sign, {A}, is true."),
        ],
        (Role.CONCLUSION, "{B} is true in this situation."),
        [
            (CQKind.BACKING_CHALLENGE, "What is the strength of the correlation of the sign with the event signified?"),
            (CQKind.REBUT, "Are there other events that would more reliably account for the sign?"),
        ],
        category=SchemeCategory.DISCOVERY,
    )


def _argument_from_an_established_rule() -> Scheme:
    return build_scheme(
        ARGUMENT_FROM_AN_ESTABLISHED_RULE,
        "Argument from an Established Rule",
        ["x", "a", "A"],
        [
            (
                Role.MAJOR_PREMISE,
                "If carrying out types of actions including {A} is the established rule for {x}, "
                "then (unless the case is an exception), {x} must carry out {A}.",
            ),
            (Role.MINOR_PREMISE, "Carrying out types of actions including {A} is the established rule for {a}."),
        ],
        (Role.CONCLUSION, "{a} must carry out {A}."),
        [
            (CQKind.PREMISE_CHALLENGE, "Does the rule require carrying out types of actions that include {A} as an instance?"),
            (CQKind.REBUT, "Are there other established rules that might conflict with or override this one?"),
            (
                CQKind.UNDERCUT,
                "Is this case an exceptional one, that is, could there be extenuating circumstances "
                "or an excuse for noncompliance?",
            ),
        ],
        indicator="Therefore",
        category=SchemeCategory.RULES_TO_CASES,
    )


def _practical_inference() -> Scheme:
    return build_scheme(
        PRACTICAL_INFERENCE,
        "Practical Inference",
        ["G", "A"],
        [
            (Role.MAJOR_PREMISE, "I have a goal {G}."),
            (Role.MINOR_PREMISE, "Carrying out this action {A} is a means to realise {G}."),
        ],
        (Role.CONCLUSION, "I ought (practically speaking) to carry out this action {A}."),
        [
            (CQKind.REBUT, "What other goals that I have that might conflict with {G} should be considered?"),
            (
                CQKind.UNDERCUT,
                "What alternative actions to my bringing about {A} that would also bring about {G} "
                "should be considered?",
            ),
            (CQKind.UNDERCUT, "Among bringing about {A} and these alternative actions, which is arguably the most efficient?"),
            (CQKind.PREMISE_CHALLENGE, "What grounds are there for arguing it is practically possible for me to bring about {A}?"),
            (CQKind.REBUT, "What consequences of my bringing about {A} should also be taken into account?"),
        ],
        indicator="Therefore",
        category=SchemeCategory.PRACTICAL,
    )


def _ethotic(character: str, scheme_id: str, name: str) -> Scheme:
    """
    Ethotic scheme for one kind of character.

    CQ2 names the kind of character: the moral scheme asks "Is moral
    character relevant in the dialogue?" where it is usually printed as "Is
    character relevant in the dialogue?". Localizing moral to mathematical
    therefore reproduces the mathematical scheme word for word.
    """
    return build_scheme(
        scheme_id,
        name,
        ["x", "a"],
        [
            (
                Role.MAJOR_PREMISE,
                f"If {{x}} is a person of good (bad) {character} character, then what {{x}} says "
                "should be accepted as more plausible (rejected as less plausible).",
            ),
            (Role.MINOR_PREMISE, f"{{a}} is a person of good (bad) {character} character."),
        ],
        (
            Role.CONCLUSION,
            "what {a} says should be accepted as more plausible (rejected as less plausible).",
        ),
        [
            (CQKind.PREMISE_CHALLENGE, f"Is {{a}} a person of good (bad) {character} character?"),
            (CQKind.UNDERCUT, f"Is {character} character relevant in the dialogue?"),
            (
                CQKind.QUALIFIER_CHALLENGE,
                "Is the weight of presumption claimed strongly enough warranted by the evidence given?",
            ),
        ],
        indicator="Therefore",
        category=SchemeCategory.SOURCE_DEPENDENT,
    )


@cache
def builtin_schemes() -> tuple[Scheme, ...]:
    """The six shipped schemes, all class C with a presumable default"""
    return (
        _defeasible_modus_ponens(),
        _argument_from_sign(),
        _argument_from_an_established_rule(),
        _practical_inference(),
        _ethotic("moral", ETHOTIC, "Ethotic Argument"),
        _ethotic("mathematical", ETHOTIC_MATHEMATICAL, "Ethotic Mathematical Argument"),
    )


BUILTIN_IDS = (
    DEFEASIBLE_MODUS_PONENS,
    ARGUMENT_FROM_SIGN,
    ARGUMENT_FROM_AN_ESTABLISHED_RULE,
    PRACTICAL_INFERENCE,
    ETHOTIC,
    ETHOTIC_MATHEMATICAL,
)
