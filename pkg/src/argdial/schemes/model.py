"""
Argumentation scheme data model

Schemes are patterns of sentential forms over schematic variables, with
critical questions attached. Everything here is an immutable value.
"""

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..core.validation import validate_ground_term, validate_variable_name


class Qualifier(Enum):
    """Modal strength of a claim, strongest first"""

    CERTAIN = "certain"
    PROBABLE = "probable"
    PRESUMABLE = "presumable"
    PLAUSIBLE = "plausible"

    @property
    def rank(self) -> int:
        return _QUALIFIER_RANK[self]

    @property
    def adverb(self) -> str:
        return _QUALIFIER_ADVERB[self]

    def __lt__(self, other: "Qualifier") -> bool:
        if not isinstance(other, Qualifier):
            return NotImplemented
        return self.rank < other.rank

    def __le__(self, other: "Qualifier") -> bool:
        if not isinstance(other, Qualifier):
            return NotImplemented
        return self.rank <= other.rank

    def downgrade(self, steps: int = 1) -> "Qualifier":
        """Weaken by `steps` lattice steps, never below plausible"""
        rank = max(self.rank - max(steps, 0), Qualifier.PLAUSIBLE.rank)
        return _QUALIFIER_BY_RANK[rank]


_QUALIFIER_RANK = {
    Qualifier.CERTAIN: 3,
    Qualifier.PROBABLE: 2,
    Qualifier.PRESUMABLE: 1,
    Qualifier.PLAUSIBLE: 0,
}
_QUALIFIER_BY_RANK = {rank: q for q, rank in _QUALIFIER_RANK.items()}
_QUALIFIER_ADVERB = {
    Qualifier.CERTAIN: "certainly",
    Qualifier.PROBABLE: "probably",
    Qualifier.PRESUMABLE: "presumably",
    Qualifier.PLAUSIBLE: "plausibly",
}


class SchemeClass(Enum):
    """Relationship of a scheme to formal derivations"""

    A = "A"  # derivation rules
    B = "B"  # mathematical macros over derivations
    C = "C"  # data-claim link need not be deductive

    @property
    def deductive(self) -> bool:
        return self in (SchemeClass.A, SchemeClass.B)


class SchemeCategory(Enum):
    """Top-level grouping of general-purpose schemes"""

    DISCOVERY = "discovery"
    RULES_TO_CASES = "rules-to-cases"
    PRACTICAL = "practical"
    SOURCE_DEPENDENT = "source-dependent"
    GENERAL = "general"


class Role(Enum):
    """Premise-role tag of a sentential form"""

    DATA = "data"
    WARRANT = "warrant"
    SPECIFIC_PREMISE = "specific-premise"
    GENERAL_PREMISE = "general-premise"
    MAJOR_PREMISE = "major-premise"
    MINOR_PREMISE = "minor-premise"
    CONCLUSION = "conclusion"
    CLAIM = "claim"

    @property
    def is_conclusion(self) -> bool:
        return self in (Role.CONCLUSION, Role.CLAIM)

    @property
    def toulmin(self) -> str:
        """Toulmin layout slot this role occupies"""
        return _TOULMIN_SLOT[self]


_TOULMIN_SLOT = {
    Role.DATA: "data",
    Role.SPECIFIC_PREMISE: "data",
    Role.MINOR_PREMISE: "data",
    Role.WARRANT: "warrant",
    Role.GENERAL_PREMISE: "warrant",
    Role.MAJOR_PREMISE: "warrant",
    Role.CONCLUSION: "claim",
    Role.CLAIM: "claim",
}


class CQKind(Enum):
    """How a critical question attacks an instance"""

    BACKING_CHALLENGE = "backing-challenge"
    PREMISE_CHALLENGE = "premise-challenge"
    REBUT = "rebut"
    UNDERCUT = "undercut"
    QUALIFIER_CHALLENGE = "qualifier-challenge"


class SchematicVariable(BaseModel):
    """A schematic letter such as P, Q, A, x or a"""

    model_config = ConfigDict(frozen=True)

    name: str

    @field_validator("name")
    @classmethod
    def validate_name(cls, v: str) -> str:
        return validate_variable_name(v)


class SententialForm(BaseModel):
    """Template text with embedded `{Name}` slots; build with `parse_form`"""

    model_config = ConfigDict(frozen=True)

    role: Role | None = None
    template: str
    variables: frozenset[str] = Field(default_factory=frozenset)


class CriticalQuestion(BaseModel):
    """A canonical challenge attached to a scheme"""

    model_config = ConfigDict(frozen=True)

    index: int = Field(ge=1)
    kind: CQKind
    template: str
    variables: frozenset[str] = Field(default_factory=frozenset)


class Scheme(BaseModel):
    """
    A named argumentation scheme.

    Construction is permissive so that `validate_scheme` can report on
    ill-formed schemes; the registry refuses the ones that fail.
    """

    model_config = ConfigDict(frozen=True)

    id: str
    name: str
    scheme_class: SchemeClass = SchemeClass.C
    default_qualifier: Qualifier = Qualifier.PRESUMABLE
    variables: tuple[SchematicVariable, ...] = ()
    premises: tuple[SententialForm, ...] = ()
    conclusion: SententialForm | None = None
    cqs: tuple[CriticalQuestion, ...] = ()
    # Conclusion indicator ("so", "therefore"); metadata, never matched
    indicator: str | None = None
    category: SchemeCategory | None = None

    @property
    def variable_names(self) -> frozenset[str]:
        return frozenset(v.name for v in self.variables)

    @property
    def forms(self) -> tuple[SententialForm, ...]:
        if self.conclusion is None:
            return self.premises
        return (*self.premises, self.conclusion)

    def cq(self, index: int) -> CriticalQuestion | None:
        for question in self.cqs:
            if question.index == index:
                return question
        return None


class Substitution(BaseModel):
    """Bindings from variable names to opaque ground text"""

    model_config = ConfigDict(frozen=True)

    bindings: dict[str, str] = Field(default_factory=dict)

    @field_validator("bindings")
    @classmethod
    def validate_bindings(cls, v: dict[str, str]) -> dict[str, str]:
        return {
            validate_variable_name(name): validate_ground_term(name, term)
            for name, term in v.items()
        }

    @classmethod
    def of(cls, **bindings: str) -> "Substitution":
        return cls(bindings=bindings)

    def __getitem__(self, name: str) -> str:
        return self.bindings[name]

    def __contains__(self, name: object) -> bool:
        return name in self.bindings

    def __len__(self) -> int:
        return len(self.bindings)

    def __hash__(self) -> int:
        return hash(frozenset(self.bindings.items()))


class Statement(BaseModel):
    """A ground sentence occupying one role of an instance"""

    model_config = ConfigDict(frozen=True)

    role: Role
    text: str


class ArgumentInstance(BaseModel):
    """A scheme applied to a total substitution, laid out Toulmin-style"""

    model_config = ConfigDict(frozen=True)

    id: str
    scheme_id: str
    substitution: Substitution
    statements: tuple[Statement, ...]
    qualifier: Qualifier

    @property
    def claim(self) -> str:
        for statement in self.statements:
            if statement.role.is_conclusion:
                return statement.text
        raise ValueError(f"Instance {self.id} has no claim")

    @property
    def premises(self) -> tuple[Statement, ...]:
        return tuple(s for s in self.statements if not s.role.is_conclusion)

    @property
    def data(self) -> tuple[str, ...]:
        return tuple(s.text for s in self.statements if s.role.toulmin == "data")

    @property
    def warrant(self) -> tuple[str, ...]:
        return tuple(s.text for s in self.statements if s.role.toulmin == "warrant")

    @property
    def texts(self) -> tuple[str, ...]:
        return tuple(s.text for s in self.statements)


class ConditionResult(BaseModel):
    """One line of a validation report"""

    model_config = ConfigDict(frozen=True)

    condition: str
    passed: bool
    message: str = ""


class ValidationReport(BaseModel):
    """Pass/fail per structural condition of a scheme"""

    model_config = ConfigDict(frozen=True)

    scheme_id: str
    results: tuple[ConditionResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> tuple[ConditionResult, ...]:
        return tuple(r for r in self.results if not r.passed)

    def passed(self, condition: str) -> bool:
        return all(r.passed for r in self.results if r.condition == condition)

    def to_dict(self) -> dict[str, Any]:
        return {
            "scheme_id": self.scheme_id,
            "ok": self.ok,
            "results": [r.model_dump() for r in self.results],
        }


def structurally_equal(left: Scheme, right: Scheme) -> bool:
    """Same roles, slot sets, CQ kinds, texts, class and qualifier; ids and names ignored"""

    def shape(scheme: Scheme) -> tuple:
        return (
            scheme.scheme_class,
            scheme.default_qualifier,
            scheme.variable_names,
            tuple((f.role, f.template, f.variables) for f in scheme.forms),
            tuple((q.index, q.kind, q.template, q.variables) for q in scheme.cqs),
            scheme.indicator,
        )

    return shape(left) == shape(right)
