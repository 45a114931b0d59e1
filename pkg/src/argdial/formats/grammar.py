"""
pyparsing elements shared by the argdial line formats

Every format is read one line at a time. `parse_line` matches a whole line
against a grammar built with `line_grammar` and turns pyparsing's exceptions
into `LineError`s that keep the column, so a bad line is reported and the
rest of the document still loads.
"""

from dataclasses import dataclass
from enum import Enum
from typing import NoReturn

import pyparsing as pp

from ..schemes.model import Qualifier

# a keyword never matches the front of a longer word made of these
KEYWORD_CHARS = pp.alphanums + "_-."

COMMENT = pp.Suppress(pp.Regex(r"#.*")).set_name("comment")
QUOTED = pp.QuotedString('"', esc_char="\\").set_name("quoted text")
WORD = pp.Regex(r'[^\s{}:;"#=][^\s{}:;"=]*').set_name("word")
VARIABLE = pp.Regex(r"[A-Za-z_][A-Za-z0-9_]*").set_name("variable name")
END_OF_LINE = pp.StringEnd().set_name("end of line")


class LineError(Exception):
    """A problem located on one line"""

    def __init__(self, message: str, column: int = 1):
        super().__init__(message)
        self.message = message
        self.column = column


@dataclass(frozen=True)
class Located:
    text: str
    column: int


@dataclass(frozen=True)
class Binding:
    """`VAR="text"` as written, with the column of the variable"""

    name: str
    value: str
    column: int


def reject(text: str, loc: int, message: str) -> NoReturn:
    raise pp.ParseFatalException(text, loc, message)


def keyword(text: str) -> pp.ParserElement:
    return pp.Keyword(text, ident_chars=KEYWORD_CHARS).set_name(f"'{text}'")


def word(what: str) -> pp.ParserElement:
    return WORD.copy().set_name(what)


def quoted(what: str) -> pp.ParserElement:
    return QUOTED.copy().set_name(what)


def located(expr: pp.ParserElement) -> pp.ParserElement:
    """Copy of `expr` whose token is a `Located` carrying its 1-based column"""
    return expr.copy().add_parse_action(lambda s, loc, toks: Located(toks[0], pp.col(loc, s)))


def enum_word(enum_cls: type[Enum], what: str) -> pp.ParserElement:
    """A word converted to a member of `enum_cls`; unknown values are fatal"""
    known = ", ".join(member.value for member in enum_cls)

    def convert(s: str, loc: int, toks: pp.ParseResults) -> Enum:
        try:
            return enum_cls(toks[0])
        except ValueError:
            reject(s, loc, f"unknown {what} '{toks[0]}' (expected one of: {known})")

    return word(what).set_parse_action(convert)


def _positive_index(s: str, loc: int, toks: pp.ParseResults) -> int:
    text = toks[0]
    if not (text.isascii() and text.isdigit()) or int(text) < 1:
        reject(s, loc, f"critical question number must be positive, got '{text}'")
    return int(text)


INDEX = word("critical question number").set_parse_action(_positive_index)

BINDING = (VARIABLE + (pp.Suppress("=") - (QUOTED | WORD).set_name("binding value"))).set_parse_action(
    lambda s, loc, toks: Binding(toks[0], toks[1], pp.col(loc, s))
)

# argument <id> <scheme> VAR="text" ... [qualifier <q>]
ARGUMENT = keyword("argument")("keyword") - (
    located(word("argument id"))("argument_id")
    + located(word("scheme id"))("scheme_id")
    + pp.Group(pp.ZeroOrMore(BINDING))("bindings")
    + pp.Optional(keyword("qualifier") - enum_word(Qualifier, "qualifier")("qualifier"))
)


def unknown(what: str) -> pp.ParserElement:
    """Catch-all alternative that reports an unrecognised leading word"""
    return word(what).set_parse_action(lambda s, loc, toks: reject(s, loc, f"unknown {what} '{toks[0]}'"))


def line_grammar(expr: pp.ParserElement, name: str) -> pp.ParserElement:
    """`expr` spanning a whole line, with `#` comments skipped"""
    return (expr.set_name(name) + END_OF_LINE).ignore(COMMENT)


def bindings_of(results: pp.ParseResults) -> dict[str, str]:
    """Bindings of an `argument` line; a variable may be bound once"""
    bindings: dict[str, str] = {}
    for binding in results.get("bindings", []):
        if binding.name in bindings:
            raise LineError(f"variable '{binding.name}' bound twice", binding.column)
        bindings[binding.name] = binding.value
    return bindings


def is_blank(line: str) -> bool:
    stripped = line.strip()
    return not stripped or stripped.startswith("#")


def _describe(error: pp.ParseBaseException) -> str:
    message = error.msg
    if not message.startswith("Expected"):
        return message
    rest = error.pstr[error.loc :].split()
    found = f"'{rest[0]}'" if rest else "end of line"
    if message.startswith(f"Expected {END_OF_LINE.name}"):
        return f"unexpected {found}"
    return f"expected{message[len('Expected'):]}, found {found}"


def parse_line(grammar: pp.ParserElement, line: str) -> pp.ParseResults:
    """
    Match one line.

    Raises:
        LineError: With pyparsing's message and column
    """
    try:
        return grammar.parse_string(line)
    except pp.ParseBaseException as e:
        raise LineError(_describe(e), e.column) from None


def split_lines(text: str | bytes) -> list[str]:
    """Decode input as UTF-8 (undecodable bytes replaced) and split into lines"""
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    return text.replace("\r\n", "\n").replace("\r", "\n").split("\n")
