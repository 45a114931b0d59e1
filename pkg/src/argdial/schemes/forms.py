"""
Slot extraction, matching and instantiation of sentential forms

Slot syntax is `{Name}`. Matching searches the ways of splitting a sentence between the fixed text
runs of a form and refuses to choose when more than one substitution fits.
"""

import hashlib
from collections.abc import Iterable, Iterator
from functools import lru_cache

from ..core.exceptions import (
    AmbiguousMatchError,
    IncompleteSubstitutionError,
    MalformedFormError,
    SchemeValidationError,
    SubstitutionConflictError,
)
from ..core.validation import VARIABLE_RE, StringLimits, normalize_text
from ..logging import get_logger
from .model import (
    ArgumentInstance,
    CriticalQuestion,
    CQKind,
    Qualifier,
    Role,
    Scheme,
    SententialForm,
    Statement,
    Substitution,
)

log = get_logger("argdial.schemes")

# (is_slot, text): literal runs carry their text, slots carry the variable name
Segment = tuple[bool, str]


@lru_cache(maxsize=1024)
def segments(template: str) -> tuple[Segment, ...]:
    """Split a template into literal runs and slots"""
    result: list[Segment] = []
    literal: list[str] = []
    i = 0
    while i < len(template):
        ch = template[i]
        if ch == "}":
            raise MalformedFormError(
                f"Unbalanced '}}' at column {i + 1}", {"template": template, "column": i + 1}
            )
        if ch != "{":
            literal.append(ch)
            i += 1
            continue

        end = template.find("}", i + 1)
        nested = template.find("{", i + 1)
        if end == -1 or (nested != -1 and nested < end):
            raise MalformedFormError(
                f"Unclosed '{{' at column {i + 1}", {"template": template, "column": i + 1}
            )
        name = template[i + 1 : end]
        if not name:
            raise MalformedFormError(
                f"Empty slot at column {i + 1}", {"template": template, "column": i + 1}
            )
        if not VARIABLE_RE.match(name):
            raise MalformedFormError(
                f"Invalid slot name '{name}' at column {i + 1}",
                {"template": template, "column": i + 1},
            )
        if literal:
            result.append((False, "".join(literal)))
            literal = []
        result.append((True, name))
        i = end + 1

    if literal:
        result.append((False, "".join(literal)))
    return tuple(result)


def slot_names(template: str) -> frozenset[str]:
    return frozenset(text for is_slot, text in segments(template) if is_slot)


def _check_length(template: str) -> None:
    if len(template) > StringLimits.MAX_TEMPLATE_LENGTH:
        raise MalformedFormError(
            f"Template exceeds {StringLimits.MAX_TEMPLATE_LENGTH} characters",
            {"length": len(template)},
        )


def parse_form(template: str, role: Role | None = None) -> SententialForm:
    """
    Parse template text into a sentential form.

    Raises:
        MalformedFormError: On empty or overlong templates and bad slot delimiters
    """
    template = normalize_text(template)
    if not template.strip():
        raise MalformedFormError("Template is empty", {"template": template})
    _check_length(template)
    return SententialForm(role=role, template=template, variables=slot_names(template))


def parse_question(index: int, kind: CQKind, template: str) -> CriticalQuestion:
    """Build a critical question whose template may carry slots"""
    template = normalize_text(template)
    if not template.strip():
        raise MalformedFormError("Critical question text is empty", {"index": index})
    _check_length(template)
    return CriticalQuestion(index=index, kind=kind, template=template, variables=slot_names(template))


def apply_substitution(template: str, bindings: dict[str, str]) -> str:
    """Replace every slot; unbound slots are left as written"""
    parts = []
    for is_slot, text in segments(template):
        if is_slot:
            parts.append(bindings.get(text, "{" + text + "}"))
        else:
            parts.append(text)
    return "".join(parts)


# matches listed in an ambiguity error; the search stops once this many are found
MAX_REPORTED_MATCHES = 8


def _latest_starts(segs: tuple[Segment, ...], sentence: str) -> list[int] | None:
    """
    Latest position each segment may start at and still leave room for the
    rest of the form, or None when the literals cannot all fit.
    """
    latest = [0] * len(segs) + [len(sentence)]
    for k in range(len(segs) - 1, -1, -1):
        is_slot, text = segs[k]
        if is_slot:
            latest[k] = latest[k + 1] - 1
        else:
            latest[k] = sentence.rfind(text, 0, latest[k + 1])
        if latest[k] < 0:
            return None
    return latest


def _match_all(
    segs: tuple[Segment, ...], sentence: str, limit: int = MAX_REPORTED_MATCHES
) -> list[dict[str, str]]:
    """Depth-first search over split points with an explicit stack; at most `limit` matches"""
    latest = _latest_starts(segs, sentence)
    if latest is None:
        return []

    later: list[frozenset[str]] = [frozenset()] * (len(segs) + 1)
    for k in range(len(segs) - 1, -1, -1):
        is_slot, text = segs[k]
        later[k] = later[k + 1] | {text} if is_slot else later[k + 1]

    found: list[dict[str, str]] = []
    # states whose whole subtree produced no match
    dead: set[tuple] = set()

    def successors(k: int, pos: int, bound: dict[str, str]) -> Iterator[tuple[int, int, dict[str, str]]]:
        is_slot, text = segs[k]
        if not is_slot:
            if sentence.startswith(text, pos):
                yield k + 1, pos + len(text), bound
            return

        if text in bound:
            value = bound[text]
            if sentence.startswith(value, pos):
                yield k + 1, pos + len(value), bound
            return

        if k + 1 == len(segs):
            ends: Iterable[int] = [len(sentence)] if pos < len(sentence) else []
        elif not segs[k + 1][0]:
            ends = _occurrences(sentence, segs[k + 1][1], pos + 1, latest[k + 1])
        else:
            ends = range(pos + 1, latest[k + 1] + 1)

        for end in ends:
            value = sentence[pos:end]
            if "{" in value or "}" in value:
                continue
            yield k + 1, end, {**bound, text: value}

    def enter(k: int, pos: int, bound: dict[str, str]) -> list | None:
        if k == len(segs):
            if pos == len(sentence):
                found.append(bound)
            return None
        if pos > latest[k]:
            return None
        key = (k, pos, tuple(sorted((v, t) for v, t in bound.items() if v in later[k])))
        if key in dead:
            return None
        return [key, len(found), successors(k, pos, bound)]

    root = enter(0, 0, {})
    stack = [root] if root is not None else []
    while stack and len(found) < limit:
        key, found_before, pending = stack[-1]
        step = next(pending, None)
        if step is None:
            stack.pop()
            if len(found) == found_before:
                dead.add(key)
            continue
        frame = enter(*step)
        if frame is not None:
            stack.append(frame)
    return found


def _occurrences(sentence: str, anchor: str, start: int, last: int) -> Iterator[int]:
    """Start positions of `anchor` in `sentence` between `start` and `last` inclusive"""
    at = sentence.find(anchor, start)
    while at != -1 and at <= last:
        yield at
        at = sentence.find(anchor, at + 1)


def match_form(form: SententialForm, sentence: str) -> Substitution | None:
    """
    Find the unique substitution turning `form` into `sentence`.

    Returns:
        The substitution, or None when the sentence does not fit the form

    Raises:
        AmbiguousMatchError: When several substitutions fit
    """
    sentence = normalize_text(sentence)
    found = _match_all(segments(form.template), sentence)
    if not found:
        return None
    if len(found) > 1:
        candidates = sorted(found, key=lambda d: sorted(d.items()))
        ways = f"at least {len(found)}" if len(found) >= MAX_REPORTED_MATCHES else str(len(found))
        raise AmbiguousMatchError(f"Sentence matches form '{form.template}' in {ways} ways", candidates)
    return Substitution(bindings=found[0])


def merge_substitutions(s1: Substitution, s2: Substitution) -> Substitution:
    """
    Union of two substitutions.

    Raises:
        SubstitutionConflictError: Same variable bound to different terms
    """
    merged = dict(s1.bindings)
    for name, term in s2.bindings.items():
        if name in merged and merged[name] != term:
            raise SubstitutionConflictError(name, merged[name], term)
        merged[name] = term
    return Substitution(bindings=merged)


def default_argument_id(scheme: Scheme, sub: Substitution) -> str:
    """Deterministic id derived from the scheme and its bindings"""
    digest = hashlib.sha1(
        "\x1f".join(f"{k}={v}" for k, v in sorted(sub.bindings.items())).encode("utf-8")
    ).hexdigest()[:8]
    return f"{scheme.id}-{digest}"


def instantiate_scheme(
    scheme: Scheme,
    sub: Substitution,
    argument_id: str | None = None,
    qualifier: Qualifier | None = None,
) -> ArgumentInstance:
    """
    Apply a total substitution to every form of a scheme.

    Args:
        scheme: The scheme to instantiate
        sub: Bindings for every scheme variable
        argument_id: Instance id (derived from the bindings when omitted)
        qualifier: Instance-specific qualifier; A/B schemes only accept certain

    Raises:
        IncompleteSubstitutionError: If a scheme variable is unbound
        SchemeValidationError: On bindings for undeclared variables, a missing
            conclusion, or a non-certain qualifier for an A/B scheme
    """
    unbound = sorted(scheme.variable_names - set(sub.bindings))
    if unbound:
        raise IncompleteSubstitutionError(scheme.id, unbound)

    unknown = sorted(set(sub.bindings) - scheme.variable_names)
    if unknown:
        raise SchemeValidationError(
            f"Bindings for undeclared variables of '{scheme.id}': {', '.join(unknown)}",
            {"scheme_id": scheme.id, "unknown": unknown},
        )

    if scheme.conclusion is None:
        raise SchemeValidationError(f"Scheme '{scheme.id}' has no conclusion", {"scheme_id": scheme.id})

    if qualifier is None:
        qualifier = scheme.default_qualifier
    elif scheme.scheme_class.deductive and qualifier is not Qualifier.CERTAIN:
        raise SchemeValidationError(
            f"Class {scheme.scheme_class.value} scheme '{scheme.id}' only admits certain instances",
            {"scheme_id": scheme.id, "qualifier": qualifier.value},
        )

    statements = tuple(
        Statement(role=form.role or Role.CONCLUSION, text=apply_substitution(form.template, sub.bindings))
        for form in scheme.forms
    )
    instance = ArgumentInstance(
        id=argument_id or default_argument_id(scheme, sub),
        scheme_id=scheme.id,
        substitution=sub,
        statements=statements,
        qualifier=qualifier,
    )
    log.debug("Instantiated scheme", scheme_id=scheme.id, argument_id=instance.id)
    return instance


def question_text(scheme: Scheme, index: int, sub: Substitution) -> str:
    question = scheme.cq(index)
    if question is None:
        raise SchemeValidationError(
            f"Scheme '{scheme.id}' has no critical question {index}",
            {"scheme_id": scheme.id, "index": index},
        )
    return apply_substitution(question.template, sub.bindings)


def _with_indicator(indicator: str | None, claim: str) -> str:
    if not indicator:
        return claim
    if claim.lower().startswith(indicator.lower()):
        return claim
    return f"{indicator}, {claim}"


def render_toulmin(instance: ArgumentInstance, scheme: Scheme) -> str:
    """Render an instance as Data / Warrant / Qualifier / Claim lines"""
    lines = []
    for statement in instance.premises:
        label = statement.role.toulmin.capitalize()
        if statement.role not in (Role.DATA, Role.WARRANT):
            label = f"{label} ({statement.role.value})"
        lines.append(f"{label}: {statement.text}")
    lines.append(f"Qualifier: {instance.qualifier.adverb}")
    lines.append(f"Claim: {_with_indicator(scheme.indicator, instance.claim)}")
    return "\n".join(lines)


def render_conclusion_line(scheme: Scheme) -> str:
    """Conclusion template with its indicator, as a scheme is usually printed"""
    if scheme.conclusion is None:
        return ""
    return _with_indicator(scheme.indicator, scheme.conclusion.template)
