"""
Dialogue scripts (.dlg) and rendered transcripts (.transcript)

    dialogue inquiry situation open-problem goal stable-resolution
    participants P1 P2
    argument arg1 defeasible_modus_ponens P="the lemma holds" Q="the conjecture holds"
    P1 propose-shift embed persuasion
    P2 accept-shift
    P1 argue arg1
    P2 pose-cq arg1 1
    close

A move line without a speaker belongs to whoever holds the turn. Parsing
checks syntax and references only; whether a move is legal is decided when
the script is replayed.
"""

from dataclasses import dataclass, field
from typing import Any

import pyparsing as pp

from ..core.exceptions import ArgdialError
from ..core.validation import IDENTIFIER_RE, quote_text
from ..dialogue.engine import new_dialogue
from ..dialogue.moves import Move, ShiftMode
from ..dialogue.simulation import Transcript
from ..dialogue.state import DialogueState, ShiftLogEntry
from ..dialogue.types import (
    DialogueTypeId,
    InitialSituation,
    MainGoal,
    MoveKind,
    check_coherence,
    dialogue_type,
)
from ..schemes.forms import instantiate_scheme
from ..schemes.model import ArgumentInstance, Scheme, Substitution
from ..schemes.registry import SchemeRegistry, default_registry
from .diagnostics import Diagnostic
from .grammar import (
    ARGUMENT,
    INDEX,
    LineError,
    Located,
    bindings_of,
    enum_word,
    is_blank,
    keyword,
    line_grammar,
    located,
    parse_line,
    quoted,
    reject,
    split_lines,
    word,
)


def _cost(s: str, loc: int, toks: pp.ParseResults) -> float:
    text = toks[0]
    try:
        cost = float(text)
    except ValueError:
        reject(s, loc, f"cost must be a number, got '{text}'")
    if not cost >= 0 or cost == float("inf"):
        reject(s, loc, f"cost must be a non-negative number, got '{text}'")
    return cost


def _proposable_mode(s: str, loc: int, toks: pp.ParseResults) -> ShiftMode:
    if toks[0] not in (ShiftMode.REPLACE.value, ShiftMode.EMBED.value):
        reject(s, loc, f"shift mode must be 'replace' or 'embed', got '{toks[0]}'")
    return ShiftMode(toks[0])


def _turn(s: str, loc: int, toks: pp.ParseResults) -> int:
    if not (toks[0].isascii() and toks[0].isdigit()):
        reject(s, loc, f"turn must be a number, got '{toks[0]}'")
    return int(toks[0])


def _move(kind: MoveKind, body: pp.ParserElement | None = None) -> pp.ParserElement:
    head = keyword(kind.value)("kind")
    return head - body if body is not None else head


_DIALOGUE_TYPE = enum_word(DialogueTypeId, "dialogue type")
_STATEMENT = quoted("quoted statement")("statement")
_REFERENCE = located(word("argument id"))
_QUESTION = _REFERENCE("argument_id") + INDEX("cq_index")

_MOVE = pp.MatchFirst(
    [
        _move(MoveKind.ASSERT, _STATEMENT),
        _move(MoveKind.ARGUE, _REFERENCE("argument")),
        _move(MoveKind.POSE_CQ, (_QUESTION | _STATEMENT).set_name("question or quoted statement")),
        _move(MoveKind.ANSWER_CQ, _QUESTION + quoted("quoted answer")("statement")),
        _move(MoveKind.CONCEDE, _STATEMENT),
        _move(MoveKind.RETRACT, _STATEMENT),
        _move(
            MoveKind.OFFER,
            quoted("quoted offer")("statement")
            + pp.Optional(keyword("cost") - word("cost").set_parse_action(_cost)("cost")),
        ),
        _move(MoveKind.ACCEPT, pp.Optional(_STATEMENT)),
        _move(
            MoveKind.PROPOSE_SHIFT,
            word("'replace' or 'embed'").set_parse_action(_proposable_mode)("shift_mode")
            + _DIALOGUE_TYPE("shift_target"),
        ),
        _move(MoveKind.ACCEPT_SHIFT),
        _move(MoveKind.CLOSE),
    ]
).set_name("move kind")

_MOVE_KINDS = pp.MatchFirst([keyword(kind.value) for kind in MoveKind])

_HEADER = keyword("dialogue")("keyword") - (
    _DIALOGUE_TYPE("dialogue_type")
    + pp.ZeroOrMore(
        (keyword("situation") - enum_word(InitialSituation, "situation")("situation"))
        | (keyword("goal") - enum_word(MainGoal, "goal")("goal"))
    )
)

HEADER_LINE = line_grammar(_HEADER, "dialogue header")

SCRIPT_LINE = line_grammar(
    _HEADER
    | (
        keyword("participants")("keyword")
        - (located(word("participant id"))("first") + located(word("participant id"))("second"))
    )
    | ARGUMENT
    | (pp.Optional(~_MOVE_KINDS + located(word("speaker"))("speaker")) + _MOVE),
    "script line",
)

SHIFT_LINE = line_grammar(
    keyword("shift")
    - (
        word("turn number").set_parse_action(_turn)("turn")
        + _DIALOGUE_TYPE("from_type")
        + _DIALOGUE_TYPE("to_type")
        + enum_word(ShiftMode, "shift mode")("mode")
        + pp.Optional(keyword("degraded")("degraded"))
    ),
    "shift line",
)


@dataclass
class ScriptDocument:
    source: str = "<input>"
    dialogue_type: DialogueTypeId | None = None
    situation: InitialSituation | None = None
    goal: MainGoal | None = None
    participants: tuple[str, str] = ("P1", "P2")
    arguments: dict[str, tuple[ArgumentInstance, Scheme]] = field(default_factory=dict)
    moves: list[Move] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.diagnostics

    def initial_state(self, max_depth: int = 8) -> DialogueState:
        if self.dialogue_type is None:
            raise ArgdialError("Script has no dialogue header", {"source": self.source})
        return new_dialogue(self.dialogue_type, self.situation, self.goal, self.participants, max_depth)


def _apply_header(results: pp.ParseResults, doc: ScriptDocument, column: int) -> None:
    dtype = results["dialogue_type"]
    doc.dialogue_type = dtype
    doc.situation = results.get("situation")
    doc.goal = results.get("goal")
    try:
        cell = dialogue_type(dtype)
        check_coherence(dtype, doc.situation or cell.situation, doc.goal or cell.goal)
    except ArgdialError as e:
        raise LineError(e.message, column) from None


def _apply_participants(results: pp.ParseResults, doc: ScriptDocument) -> None:
    first: Located = results["first"]
    second: Located = results["second"]
    for name in (first, second):
        if not IDENTIFIER_RE.match(name.text):
            raise LineError(f"invalid participant id '{name.text}'", name.column)
    if first.text == second.text:
        raise LineError("participants must be distinct", second.column)
    doc.participants = (first.text, second.text)


def _apply_argument(results: pp.ParseResults, doc: ScriptDocument, registry: SchemeRegistry) -> None:
    argument_id: Located = results["argument_id"]
    if argument_id.text in doc.arguments:
        raise LineError(f"argument '{argument_id.text}' declared twice", argument_id.column)
    scheme = registry.get(results["scheme_id"].text)
    instance = instantiate_scheme(
        scheme, Substitution(bindings=bindings_of(results)), argument_id.text, results.get("qualifier")
    )
    doc.arguments[instance.id] = (instance, scheme)


def _declared(doc: ScriptDocument, reference: Located) -> str:
    if reference.text not in doc.arguments:
        raise LineError(f"undeclared argument '{reference.text}'", reference.column)
    return reference.text


def _build_move(results: pp.ParseResults, doc: ScriptDocument) -> Move:
    speaker: Located | None = results.get("speaker")
    if speaker is not None and speaker.text not in doc.participants:
        raise LineError(f"'{speaker.text}' is not a declared participant", speaker.column)

    payload: dict[str, Any] = {}
    for name in ("statement", "cost", "shift_mode", "shift_target", "cq_index"):
        if name in results:
            payload[name] = results[name]
    if "argument" in results:
        payload["argument"], payload["scheme"] = doc.arguments[_declared(doc, results["argument"])]
    if "argument_id" in results:
        payload["argument_id"] = _declared(doc, results["argument_id"])
    return Move(speaker=speaker.text if speaker else None, kind=MoveKind(results["kind"]), **payload)


def parse_script(
    text: str | bytes, registry: SchemeRegistry | None = None, source: str = "<input>"
) -> ScriptDocument:
    """Parse a dialogue script; problems become diagnostics"""
    registry = registry or default_registry()
    doc = ScriptDocument(source=source)
    seen_participants = False

    for number, raw in enumerate(split_lines(text), start=1):
        if is_blank(raw):
            continue
        column = len(raw) - len(raw.lstrip()) + 1
        try:
            if doc.dialogue_type is None:
                if raw.split(None, 1)[0] != "dialogue":
                    raise LineError("script must start with a 'dialogue' header", column)
                _apply_header(parse_line(HEADER_LINE, raw), doc, column)
                continue

            results = parse_line(SCRIPT_LINE, raw)
            match results.get("keyword"):
                case "dialogue":
                    raise LineError("duplicate 'dialogue' header", column)
                case "participants":
                    if seen_participants or doc.moves:
                        raise LineError("'participants' must directly follow the header", column)
                    _apply_participants(results, doc)
                    seen_participants = True
                case "argument":
                    _apply_argument(results, doc, registry)
                case _:
                    doc.moves.append(_build_move(results, doc))
        except LineError as e:
            doc.diagnostics.append(Diagnostic.at(number, e, source))
        except ArgdialError as e:
            doc.diagnostics.append(Diagnostic(line=number, message=e.message, source=source))
        except ValueError as e:
            doc.diagnostics.append(Diagnostic(line=number, message=str(e).splitlines()[0], source=source))

    if doc.dialogue_type is None:
        doc.diagnostics.append(Diagnostic(line=1, message="missing 'dialogue' header", source=source))
    return doc


def _move_line(move: Move) -> str:
    described = move.describe()
    return f"{move.speaker} {described}" if move.speaker is not None else described


def serialize_script(doc: ScriptDocument) -> str:
    """Canonical script text; parsing it yields the same header, arguments and moves"""
    header = f"dialogue {doc.dialogue_type.value}" if doc.dialogue_type else "dialogue"
    if doc.situation is not None:
        header += f" situation {doc.situation.value}"
    if doc.goal is not None:
        header += f" goal {doc.goal.value}"
    lines = [header, f"participants {doc.participants[0]} {doc.participants[1]}"]
    for argument_id, (instance, scheme) in doc.arguments.items():
        bindings = " ".join(f"{k}={quote_text(v)}" for k, v in sorted(instance.substitution.bindings.items()))
        line = f"argument {argument_id} {scheme.id} {bindings}".rstrip()
        if instance.qualifier is not scheme.default_qualifier:
            line += f" qualifier {instance.qualifier.value}"
        lines.append(line)
    lines += [_move_line(move) for move in doc.moves]
    return "\n".join(lines) + "\n"


def _shift_line(entry: ShiftLogEntry) -> str:
    line = f"shift {entry.turn} {entry.from_type} {entry.to_type} {entry.mode.value}"
    return line + " degraded" if entry.degraded else line


def render_transcript(transcript: Transcript) -> str:
    """
    Deterministic transcript text: one `turn` line per move with the
    commitment deltas it caused, the outcome, argument labels and the shift
    report.
    """
    initial = transcript.initial
    dtype = initial.dialogue_type
    lines = [
        f"dialogue {dtype.id.value} situation {dtype.situation.value} goal {dtype.goal.value}",
        f"participants {initial.proponent} {initial.respondent}",
    ]
    for step in transcript.steps:
        lines.append(f"turn {step.index} {_move_line(step.move)}")
        lines += [f"  + {who} {quote_text(text)}" for who, text in step.added]
        lines += [f"  - {who} {quote_text(text)}" for who, text in step.removed]
    lines.append(f"status {transcript.status.value}")
    if transcript.violation is not None:
        message = " ".join(str(transcript.violation["message"]).splitlines())
        lines.append(f"violation {transcript.violation['error']}: {message}")
    lines += [f"label {arg} {label.value}" for arg, label in transcript.labels.items()]
    lines += [_shift_line(entry) for entry in transcript.shift_log]
    return "\n".join(lines) + "\n"


@dataclass
class TranscriptDocument:
    source: str = "<input>"
    shifts: list[ShiftLogEntry] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)


def parse_transcript(text: str | bytes, source: str = "<input>") -> TranscriptDocument:
    """Recover the shift report from rendered transcript text; other lines are ignored"""
    doc = TranscriptDocument(source=source)
    for number, raw in enumerate(split_lines(text), start=1):
        if raw.split(None, 1)[:1] != ["shift"]:
            continue
        try:
            results = parse_line(SHIFT_LINE, raw)
        except LineError as e:
            doc.diagnostics.append(Diagnostic.at(number, e, source))
            continue
        doc.shifts.append(
            ShiftLogEntry(
                turn=results["turn"],
                from_type=results["from_type"].value,
                to_type=results["to_type"].value,
                mode=results["mode"],
                degraded="degraded" in results,
            )
        )
    return doc


def format_shift_report(entries: list[ShiftLogEntry]) -> str:
    return "".join(_shift_line(entry) + "\n" for entry in entries)

