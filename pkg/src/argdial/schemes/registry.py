"""
Scheme registry, classification and localization
"""

import re
import threading
from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum

from pydantic import BaseModel, ConfigDict, field_validator

from ..core.exceptions import (
    ClassificationError,
    DuplicateSchemeError,
    SchemeNotFoundError,
    SchemeValidationError,
)
from ..core.validation import validate_identifier
from ..logging import get_logger
from .builtins import builtin_schemes
from .forms import parse_form, parse_question, segments
from .model import Qualifier, Scheme, SchemeClass
from .validation import STRUCTURAL_CONDITIONS, validate_scheme

log = get_logger("argdial.registry")


class Provenance(Enum):
    BUILTIN = "builtin"
    USER = "user"


class SchemeRegistry:
    """
    Schemes by id.

    Reads need no coordination; registrations are serialized by a lock.
    Only schemes passing the structural conditions are admitted.
    """

    def __init__(self, schemes: list[Scheme] | tuple[Scheme, ...] = ()):
        self._schemes: dict[str, Scheme] = {}
        self._provenance: dict[str, Provenance] = {}
        self._lock = threading.Lock()
        for scheme in schemes:
            self.register(scheme, Provenance.BUILTIN)

    def register(self, scheme: Scheme, provenance: Provenance = Provenance.USER) -> Scheme:
        """
        Admit a scheme.

        Raises:
            DuplicateSchemeError: If the id is taken
            SchemeValidationError: If a structural condition fails
        """
        validate_identifier(scheme.id, "Scheme id")
        report = validate_scheme(scheme)
        failed = [r for r in report.failures if r.condition in STRUCTURAL_CONDITIONS]
        if failed:
            raise SchemeValidationError(
                f"Scheme '{scheme.id}' fails condition(s) {', '.join(r.condition for r in failed)}",
                {"scheme_id": scheme.id, "failures": [r.model_dump() for r in failed]},
            )

        with self._lock:
            if scheme.id in self._schemes:
                raise DuplicateSchemeError(scheme.id)
            # copy-on-write keeps concurrent readers on a consistent mapping
            self._schemes = {**self._schemes, scheme.id: scheme}
            self._provenance = {**self._provenance, scheme.id: provenance}

        log.debug("Registered scheme", scheme_id=scheme.id, provenance=provenance.value)
        return scheme

    def get(self, scheme_id: str) -> Scheme:
        try:
            return self._schemes[scheme_id]
        except KeyError:
            raise SchemeNotFoundError(scheme_id) from None

    def provenance(self, scheme_id: str) -> Provenance:
        self.get(scheme_id)
        return self._provenance[scheme_id]

    def ids(self) -> list[str]:
        return list(self._schemes)

    def __contains__(self, scheme_id: object) -> bool:
        return scheme_id in self._schemes

    def __iter__(self) -> Iterator[Scheme]:
        return iter(list(self._schemes.values()))

    def __len__(self) -> int:
        return len(self._schemes)


def default_registry() -> SchemeRegistry:
    """A fresh registry holding the built-in schemes"""
    return SchemeRegistry(builtin_schemes())


def lookup(registry: SchemeRegistry, scheme_id: str) -> Scheme:
    """Return the scheme registered under `scheme_id`"""
    return registry.get(scheme_id)


def classify(scheme: Scheme) -> SchemeClass:
    """
    Return the scheme's class after checking it against its qualifier.

    Raises:
        ClassificationError: A/B scheme whose default qualifier is not certain
    """
    if scheme.scheme_class.deductive and scheme.default_qualifier is not Qualifier.CERTAIN:
        raise ClassificationError(
            f"Class {scheme.scheme_class.value} scheme '{scheme.id}' must default to certain",
            {
                "scheme_id": scheme.id,
                "scheme_class": scheme.scheme_class.value,
                "qualifier": scheme.default_qualifier.value,
            },
        )
    return scheme.scheme_class


class TermMap(BaseModel):
    """Whole-word replacements applied by localization"""

    model_config = ConfigDict(frozen=True)

    replacements: dict[str, str]

    @field_validator("replacements")
    @classmethod
    def validate_replacements(cls, v: dict[str, str]) -> dict[str, str]:
        if not v:
            raise ValueError("Term map must not be empty")
        lowered = [k.lower() for k in v]
        if len(set(lowered)) != len(lowered):
            raise ValueError("Term map keys must be distinct")
        for key, target in v.items():
            if not key.strip() or not target.strip():
                raise ValueError("Term map entries must be non-empty words")
        return v

    @classmethod
    def of(cls, **replacements: str) -> "TermMap":
        return cls(replacements=replacements)


@dataclass(frozen=True)
class LocalizationResult:
    """A localized scheme plus warnings about map entries that did nothing"""

    scheme: Scheme
    warnings: tuple[str, ...] = field(default_factory=tuple)


def _match_case(source: str, target: str) -> str:
    if source[:1].isupper():
        return target[:1].upper() + target[1:]
    return target


def _replace_words(text: str, term_map: TermMap) -> tuple[str, set[str]]:
    used: set[str] = set()
    # single pass so targets are never re-replaced
    lookup_table = {k.lower(): (k, v) for k, v in term_map.replacements.items()}
    pattern = re.compile(
        r"\b(" + "|".join(re.escape(k) for k in sorted(lookup_table, key=len, reverse=True)) + r")\b",
        re.IGNORECASE,
    )

    def substitute(m: re.Match) -> str:
        key, target = lookup_table[m.group(0).lower()]
        used.add(key)
        return _match_case(m.group(0), target)

    return pattern.sub(substitute, text), used


def localize_scheme(
    scheme: Scheme,
    term_map: TermMap,
    new_id: str,
    registry: SchemeRegistry | None = None,
    new_name: str | None = None,
) -> LocalizationResult:
    """
    Replace whole words in every form and critical question of a scheme.

    Class, qualifier, roles, slots and CQ kinds are preserved. Map keys found
    in no template are reported as warnings rather than errors.

    Raises:
        DuplicateSchemeError: If `new_id` is already registered
    """
    validate_identifier(new_id, "Scheme id")
    if registry is not None and new_id in registry:
        raise DuplicateSchemeError(new_id)

    used: set[str] = set()

    def localize(text: str) -> str:
        # slot names are never rewritten, only the literal runs around them
        parts = []
        for is_slot, chunk in segments(text):
            if is_slot:
                parts.append("{" + chunk + "}")
                continue
            replaced, hits = _replace_words(chunk, term_map)
            used.update(hits)
            parts.append(replaced)
        return "".join(parts)

    premises = tuple(parse_form(localize(f.template), f.role) for f in scheme.premises)
    conclusion = (
        parse_form(localize(scheme.conclusion.template), scheme.conclusion.role)
        if scheme.conclusion is not None
        else None
    )
    cqs = tuple(parse_question(q.index, q.kind, localize(q.template)) for q in scheme.cqs)

    localized = scheme.model_copy(
        update={
            "id": new_id,
            "name": new_name or f"{scheme.name} (localized)",
            "premises": premises,
            "conclusion": conclusion,
            "cqs": cqs,
        }
    )

    warnings = tuple(
        f"term '{key}' does not occur in scheme '{scheme.id}'; no-op"
        for key in term_map.replacements
        if key not in used
    )
    for warning in warnings:
        log.warning(warning, scheme_id=scheme.id)

    return LocalizationResult(scheme=localized, warnings=warnings)
