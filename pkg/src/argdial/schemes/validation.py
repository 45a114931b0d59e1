"""
Structural validation of schemes

Conditions checked:
  (i)   the scheme is a pattern: at least one premise form
  (ii)  every form is well parsed and only uses declared variables
  (iii) at least one form contains a variable slot
  (iv)  exactly one conclusion form
plus class/qualifier consistency and consecutive critical question indices.
Failures are report entries, never exceptions.
"""

from ..core.exceptions import MalformedFormError
from .forms import slot_names
from .model import ConditionResult, Qualifier, Scheme, ValidationReport

PATTERN = "i"
WELL_FORMED = "ii"
SCHEMATIC = "iii"
CONCLUSION = "iv"
CLASS_QUALIFIER = "class-qualifier"
CQ_INDICES = "cq-indices"

STRUCTURAL_CONDITIONS = (PATTERN, WELL_FORMED, SCHEMATIC, CONCLUSION)


def _check_pattern(scheme: Scheme) -> ConditionResult:
    if scheme.premises:
        return ConditionResult(condition=PATTERN, passed=True)
    return ConditionResult(condition=PATTERN, passed=False, message="no premise forms")


def _check_well_formed(scheme: Scheme) -> ConditionResult:
    problems: list[str] = []
    declared = [v.name for v in scheme.variables]
    duplicates = sorted({n for n in declared if declared.count(n) > 1})
    if duplicates:
        problems.append(f"variables declared twice: {', '.join(duplicates)}")

    templates = [(f"form {i + 1}", f.template, f.variables) for i, f in enumerate(scheme.forms)]
    templates += [(f"cq {q.index}", q.template, q.variables) for q in scheme.cqs]

    for label, template, recorded in templates:
        if not template.strip():
            problems.append(f"{label} is empty")
            continue
        try:
            found = slot_names(template)
        except MalformedFormError as e:
            problems.append(f"{label}: {e.message}")
            continue
        if found != recorded:
            problems.append(f"{label}: recorded variables disagree with template slots")
        undeclared = sorted(found - set(declared))
        if undeclared:
            problems.append(f"{label}: undeclared variables {', '.join(undeclared)}")

    for i, form in enumerate(scheme.premises):
        if form.role is None:
            problems.append(f"premise {i + 1} has no role")

    if problems:
        return ConditionResult(condition=WELL_FORMED, passed=False, message="; ".join(problems))
    return ConditionResult(condition=WELL_FORMED, passed=True)


def _check_schematic(scheme: Scheme) -> ConditionResult:
    if any(form.variables for form in scheme.forms):
        return ConditionResult(condition=SCHEMATIC, passed=True)
    return ConditionResult(
        condition=SCHEMATIC, passed=False, message="no form contains a variable slot"
    )


def _check_conclusion(scheme: Scheme) -> ConditionResult:
    extra = [f for f in scheme.premises if f.role is not None and f.role.is_conclusion]
    if scheme.conclusion is None:
        return ConditionResult(condition=CONCLUSION, passed=False, message="no conclusion form")
    if extra:
        return ConditionResult(
            condition=CONCLUSION,
            passed=False,
            message=f"{len(extra) + 1} conclusion forms, expected exactly one",
        )
    return ConditionResult(condition=CONCLUSION, passed=True)


def _check_class_qualifier(scheme: Scheme) -> ConditionResult:
    if scheme.scheme_class.deductive and scheme.default_qualifier is not Qualifier.CERTAIN:
        return ConditionResult(
            condition=CLASS_QUALIFIER,
            passed=False,
            message=(
                f"class {scheme.scheme_class.value} requires qualifier certain, "
                f"got {scheme.default_qualifier.value}"
            ),
        )
    return ConditionResult(condition=CLASS_QUALIFIER, passed=True)


def _check_cq_indices(scheme: Scheme) -> ConditionResult:
    indices = [q.index for q in scheme.cqs]
    if indices != list(range(1, len(indices) + 1)):
        return ConditionResult(
            condition=CQ_INDICES,
            passed=False,
            message=f"critical question indices {indices} are not consecutive from 1",
        )
    return ConditionResult(condition=CQ_INDICES, passed=True)


def validate_scheme(scheme: Scheme) -> ValidationReport:
    """Report pass/fail for every structural condition of `scheme`"""
    return ValidationReport(
        scheme_id=scheme.id,
        results=(
            _check_pattern(scheme),
            _check_well_formed(scheme),
            _check_schematic(scheme),
            _check_conclusion(scheme),
            _check_class_qualifier(scheme),
            _check_cq_indices(scheme),
        ),
    )
