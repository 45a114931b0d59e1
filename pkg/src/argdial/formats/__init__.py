"""
Text formats: scheme DSL, argument graphs, dialogue scripts and transcripts
"""

from .diagnostics import Diagnostic
from .graph_format import GraphDocument, export_graph, parse_graph
from .scheme_dsl import (
    SchemeDocument,
    load_scheme_file,
    load_scheme_path,
    parse_scheme_dsl,
    serialize_scheme,
    serialize_schemes,
)
from .script_format import (
    ScriptDocument,
    TranscriptDocument,
    format_shift_report,
    parse_script,
    parse_transcript,
    render_transcript,
    serialize_script,
)

__all__ = [
    "Diagnostic",
    "SchemeDocument",
    "parse_scheme_dsl",
    "serialize_scheme",
    "serialize_schemes",
    "load_scheme_file",
    "load_scheme_path",
    "GraphDocument",
    "parse_graph",
    "export_graph",
    "ScriptDocument",
    "TranscriptDocument",
    "parse_script",
    "serialize_script",
    "render_transcript",
    "parse_transcript",
    "format_shift_report",
]
