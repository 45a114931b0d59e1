"""
Line-oriented scheme definition language

    scheme "argument_from_sign" name "Argument from Sign" class C qualifier presumable {
        category discovery;
        var A B;
        premise specific-premise: "{A} (a finding) is true in this situation.";
        premise general-premise: "{B} is generally indicated as true when its sign, {A}, is true.";
        conclusion: "{B} is true in this situation.";
        cq 1 backing-challenge: "What is the strength of the correlation ...?";
    }

Parsing never raises. Every problem, including a scheme that fails
structural validation, becomes a located diagnostic; only schemes that pass
every check are returned.
"""

from dataclasses import dataclass, field
from pathlib import Path

import pyparsing as pp
from pydantic import ValidationError

from ..core.exceptions import ArgdialError, ErrorHandler, FormatError, MalformedFormError
from ..core.validation import quote_text, validate_identifier
from ..logging import get_logger
from ..schemes.forms import parse_form, parse_question
from ..schemes.model import (
    CQKind,
    CriticalQuestion,
    Qualifier,
    Role,
    SchematicVariable,
    Scheme,
    SchemeCategory,
    SchemeClass,
    SententialForm,
)
from ..schemes.registry import Provenance, SchemeRegistry
from ..schemes.validation import STRUCTURAL_CONDITIONS, validate_scheme
from .diagnostics import Diagnostic
from .grammar import (
    INDEX,
    VARIABLE,
    LineError,
    enum_word,
    is_blank,
    keyword,
    line_grammar,
    parse_line,
    quoted,
    reject,
    split_lines,
    unknown,
)

log = get_logger("argdial.formats")

SCHEME_SUFFIX = ".scheme"


def _check_template(s: str, loc: int, toks: pp.ParseResults) -> None:
    try:
        parse_form(toks[0])
    except MalformedFormError as e:
        reject(s, loc, e.message)


_COLON = pp.Suppress(":").set_name("':'")
_SEMI = pp.Suppress(";").set_name("';' at end of statement")
_TEMPLATE = quoted("quoted template").set_parse_action(_check_template)
_ROLE = enum_word(Role, "role")

HEADER_LINE = line_grammar(
    keyword("scheme")
    - (
        quoted("quoted scheme id")("id")
        + pp.ZeroOrMore(
            (keyword("name") - quoted("quoted scheme name")("name"))
            | (keyword("class") - enum_word(SchemeClass, "class")("scheme_class"))
            | (keyword("qualifier") - enum_word(Qualifier, "qualifier")("qualifier"))
        )
        + pp.Suppress("{").set_name("'{'")
    ),
    "scheme header",
)

STATEMENT_LINE = line_grammar(
    (keyword("name")("statement") - (quoted("quoted name")("value") + _SEMI))
    | (keyword("indicator")("statement") - (quoted("quoted indicator")("value") + _SEMI))
    | (keyword("category")("statement") - (enum_word(SchemeCategory, "category")("value") + _SEMI))
    | (keyword("var")("statement") - (pp.Group(pp.OneOrMore(VARIABLE))("names") + _SEMI))
    | (keyword("premise")("statement") - (_ROLE("role") + _COLON + _TEMPLATE("template") + _SEMI))
    | (
        keyword("conclusion")("statement")
        - (pp.Optional(_ROLE("role")) + _COLON + _TEMPLATE("template") + _SEMI)
    )
    | (
        keyword("cq")("statement")
        - (
            INDEX("index")
            + enum_word(CQKind, "critical question kind")("kind")
            + _COLON
            + _TEMPLATE("template")
            + _SEMI
        )
    )
    | unknown("statement"),
    "statement",
)

CLOSE_LINE = line_grammar(pp.Suppress("}"), "'}'")


@dataclass
class SchemeDocument:
    source: str
    text: str
    schemes: list[Scheme] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.diagnostics


@dataclass
class _Block:
    """A scheme under construction"""

    line: int
    id: str
    name: str | None = None
    scheme_class: SchemeClass = SchemeClass.C
    qualifier: Qualifier = Qualifier.PRESUMABLE
    indicator: str | None = None
    category: SchemeCategory | None = None
    variables: list[str] = field(default_factory=list)
    premises: list[SententialForm] = field(default_factory=list)
    conclusions: list[SententialForm] = field(default_factory=list)
    cqs: list[CriticalQuestion] = field(default_factory=list)

    @classmethod
    def from_header(cls, results: pp.ParseResults, line: int) -> "_Block":
        return cls(
            line=line,
            id=results["id"],
            name=results.get("name"),
            scheme_class=results.get("scheme_class", SchemeClass.C),
            qualifier=results.get("qualifier", Qualifier.PRESUMABLE),
        )

    def add(self, results: pp.ParseResults) -> None:
        match results["statement"]:
            case "name":
                self.name = results["value"]
            case "indicator":
                self.indicator = results["value"]
            case "category":
                self.category = results["value"]
            case "var":
                self.variables.extend(results["names"])
            case "premise":
                self.premises.append(parse_form(results["template"], results["role"]))
            case "conclusion":
                self.conclusions.append(parse_form(results["template"], results.get("role", Role.CONCLUSION)))
            case "cq":
                self.cqs.append(parse_question(results["index"], results["kind"], results["template"]))


def _condition_message(condition: str, message: str) -> str:
    if condition in STRUCTURAL_CONDITIONS:
        return f"condition ({condition}) failed: {message}"
    return f"{condition} failed: {message}"


def _finish(block: _Block, source: str) -> tuple[Scheme | None, list[Diagnostic]]:
    premises = list(block.premises)
    conclusion = None
    if block.conclusions:
        conclusion = block.conclusions[-1]
        # extra conclusions stay visible to the validator as misplaced premises
        premises += block.conclusions[:-1]

    try:
        validate_identifier(block.id, "Scheme id")
        scheme = Scheme(
            id=block.id,
            name=block.name or block.id,
            scheme_class=block.scheme_class,
            default_qualifier=block.qualifier,
            variables=tuple(SchematicVariable(name=v) for v in block.variables),
            premises=tuple(premises),
            conclusion=conclusion,
            cqs=tuple(block.cqs),
            indicator=block.indicator,
            category=block.category,
        )
    except ValidationError as e:
        first = e.errors()[0]
        message = first.get("msg", str(e))
        return None, [Diagnostic(line=block.line, message=f"scheme '{block.id}': {message}", source=source)]
    except ArgdialError as e:
        return None, [Diagnostic(line=block.line, message=f"scheme '{block.id}': {e.message}", source=source)]

    report = validate_scheme(scheme)
    diagnostics = [
        Diagnostic(
            line=block.line,
            message=f"scheme '{block.id}': {_condition_message(r.condition, r.message)}",
            source=source,
        )
        for r in report.failures
    ]
    return (scheme if report.ok else None), diagnostics


def parse_scheme_dsl(text: str | bytes, source: str = "<input>") -> SchemeDocument:
    """Parse scheme definitions, collecting diagnostics instead of raising"""
    lines = split_lines(text)
    document = SchemeDocument(source=source, text="\n".join(lines))
    seen: set[str] = set()
    block: _Block | None = None

    def report(line: int, message: str, column: int = 1) -> None:
        document.diagnostics.append(Diagnostic(line=line, column=column, message=message, source=source))

    for number, raw in enumerate(lines, start=1):
        if is_blank(raw):
            continue
        try:
            if block is None:
                block = _Block.from_header(parse_line(HEADER_LINE, raw), number)
                continue

            if raw.lstrip().startswith("}"):
                try:
                    parse_line(CLOSE_LINE, raw)
                except LineError as e:
                    document.diagnostics.append(Diagnostic.at(number, e, source))
                scheme, problems = _finish(block, source)
                document.diagnostics.extend(problems)
                if scheme is not None:
                    if scheme.id in seen:
                        report(block.line, f"duplicate id '{scheme.id}'")
                    else:
                        seen.add(scheme.id)
                        document.schemes.append(scheme)
                block = None
                continue

            block.add(parse_line(STATEMENT_LINE, raw))
        except LineError as e:
            document.diagnostics.append(Diagnostic.at(number, e, source))
        except ArgdialError as e:
            report(number, e.message)
        except ValueError as e:
            report(number, str(e).splitlines()[0])

    if block is not None:
        report(block.line, f"scheme '{block.id}' is not closed with '}}'")

    log.debug(
        "Parsed scheme document",
        source=source,
        schemes=len(document.schemes),
        diagnostics=len(document.diagnostics),
    )
    return document


def serialize_scheme(scheme: Scheme) -> str:
    """Canonical DSL text; parsing it yields a structurally equal scheme"""
    lines = [
        f"scheme {quote_text(scheme.id)} name {quote_text(scheme.name)} "
        f"class {scheme.scheme_class.value} qualifier {scheme.default_qualifier.value} {{"
    ]
    if scheme.indicator is not None:
        lines.append(f"    indicator {quote_text(scheme.indicator)};")
    if scheme.category is not None:
        lines.append(f"    category {scheme.category.value};")
    if scheme.variables:
        lines.append("    var " + " ".join(v.name for v in scheme.variables) + ";")
    for form in scheme.premises:
        role = form.role.value if form.role is not None else Role.DATA.value
        lines.append(f"    premise {role}: {quote_text(form.template)};")
    if scheme.conclusion is not None:
        role = scheme.conclusion.role or Role.CONCLUSION
        prefix = "conclusion" if role is Role.CONCLUSION else f"conclusion {role.value}"
        lines.append(f"    {prefix}: {quote_text(scheme.conclusion.template)};")
    for question in scheme.cqs:
        lines.append(f"    cq {question.index} {question.kind.value}: {quote_text(question.template)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def serialize_schemes(schemes: list[Scheme] | tuple[Scheme, ...]) -> str:
    return "\n".join(serialize_scheme(s) for s in schemes)


def load_scheme_file(path: Path | str) -> SchemeDocument:
    """Read and parse one file; unreadable files yield a diagnostic"""
    path = Path(path)
    with ErrorHandler("cannot read file", FormatError, {"path": str(path)}, reraise=False) as handler:
        data = path.read_bytes()
    if handler.error is not None:
        reason = handler.error.details["original_exception"]["message"]
        document = SchemeDocument(source=str(path), text="")
        document.diagnostics.append(Diagnostic(line=1, message=f"cannot read file: {reason}", source=str(path)))
        return document
    return parse_scheme_dsl(data, source=str(path))


def load_scheme_path(registry: SchemeRegistry, dirs: list[Path] | tuple[Path, ...]) -> list[Diagnostic]:
    """
    Register every valid scheme found in `*.scheme` files under `dirs`.

    Files are visited in sorted order per directory. Problems, including id
    clashes with already registered schemes, are returned as diagnostics.
    """
    diagnostics: list[Diagnostic] = []
    for directory in dirs:
        directory = Path(directory)
        if not directory.is_dir():
            diagnostics.append(Diagnostic(line=1, message="scheme path entry is not a directory", source=str(directory)))
            continue
        for path in sorted(directory.glob(f"*{SCHEME_SUFFIX}")):
            document = load_scheme_file(path)
            diagnostics.extend(document.diagnostics)
            for scheme in document.schemes:
                try:
                    registry.register(scheme, Provenance.USER)
                except ArgdialError as e:
                    diagnostics.append(Diagnostic(line=1, message=e.message, source=str(path)))
    if diagnostics:
        log.warning("Scheme path produced diagnostics", count=len(diagnostics))
    return diagnostics
