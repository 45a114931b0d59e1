"""
argdial command line

Report bodies go to stdout, diagnostics and logs to stderr. Exit status is
0 on success, 1 when diagnostics were reported and 2 on usage errors.
"""

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from ..core.config import LOG_LEVEL_ENV, ArgdialConfig
from ..core.exceptions import ArgdialError, ConfigurationError, create_error_response
from ..dialogue.simulation import POLICIES, CompliantProver, ReplayPolicy, run_simulation, shift_report
from ..dialogue.types import dialogue_types
from ..evaluation.assessment import evaluate_argument
from ..evaluation.labelling import grounded_labelling
from ..formats.graph_format import export_graph, parse_graph
from ..formats.scheme_dsl import SchemeDocument, load_scheme_file, load_scheme_path, serialize_scheme
from ..formats.script_format import format_shift_report, parse_script, parse_transcript, render_transcript
from ..logging import LoggingConfig, get_logger
from ..schemes.forms import instantiate_scheme, render_conclusion_line, render_toulmin
from ..schemes.model import Qualifier, Substitution
from ..schemes.registry import TermMap, default_registry, localize_scheme

EXIT_OK = 0
EXIT_DIAGNOSTICS = 1
EXIT_USAGE = 2

log = get_logger("argdial.cli")


def _error(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _report_diagnostics(diagnostics) -> None:
    for diagnostic in diagnostics:
        print(str(diagnostic), file=sys.stderr)


def _read(path: str) -> bytes | None:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        _error(f"cannot read {path}: {e.strerror or e}")
        return None


def _pairs(values: list[str], flag: str) -> dict[str, str]:
    pairs: dict[str, str] = {}
    for value in values or []:
        key, sep, text = value.partition("=")
        if not sep or not key:
            raise ArgdialError(f"{flag} expects KEY=TEXT, got '{value}'", {"value": value})
        pairs[key] = text
    return pairs


# schemes list | show


def create_schemes_parser(subparsers):
    """Create schemes CLI parser."""
    parser = subparsers.add_parser("schemes", help="List or show registered schemes")
    actions = parser.add_subparsers(dest="schemes_action", required=True)

    list_parser = actions.add_parser("list", help="List scheme ids")
    list_parser.add_argument("--long", action="store_true", help="Also show class, qualifier and origin")
    list_parser.set_defaults(func=schemes_list_command)

    show_parser = actions.add_parser("show", help="Print one scheme")
    show_parser.add_argument("scheme_id")
    show_parser.add_argument(
        "--format", choices=["dsl", "toulmin"], default="dsl", help="DSL text or a Toulmin outline"
    )
    show_parser.set_defaults(func=schemes_show_command)


def schemes_list_command(args) -> int:
    registry = args.registry
    for scheme in registry:
        if args.long:
            print(
                f"{scheme.id}\t{scheme.scheme_class.value}\t{scheme.default_qualifier.value}"
                f"\t{registry.provenance(scheme.id).value}\t{scheme.name}"
            )
        else:
            print(scheme.id)
    return EXIT_OK


def schemes_show_command(args) -> int:
    scheme = args.registry.get(args.scheme_id)
    if args.format == "dsl":
        sys.stdout.write(serialize_scheme(scheme))
        return EXIT_OK

    for form in scheme.premises:
        role = form.role.value if form.role else "premise"
        print(f"{role}: {form.template}")
    print(f"qualifier: {scheme.default_qualifier.adverb}")
    print(f"conclusion: {render_conclusion_line(scheme)}")
    for question in scheme.cqs:
        print(f"CQ{question.index} ({question.kind.value}): {question.template}")
    return EXIT_OK


# validate


def create_validate_parser(subparsers):
    parser = subparsers.add_parser("validate", help="Check scheme definition files")
    parser.add_argument("files", nargs="+", help="*.scheme files")
    parser.set_defaults(func=validate_command)


def validate_command(args) -> int:
    workers = min(args.config.parallel_workers, len(args.files))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        documents: list[SchemeDocument] = list(pool.map(load_scheme_file, args.files))

    status = EXIT_OK
    for document in documents:
        if document.ok:
            ids = ", ".join(s.id for s in document.schemes)
            print(f"{document.source}: ok ({len(document.schemes)} scheme(s){': ' + ids if ids else ''})")
        else:
            print(f"{document.source}: {len(document.diagnostics)} diagnostic(s)")
            _report_diagnostics(document.diagnostics)
            status = EXIT_DIAGNOSTICS
    return status


# instantiate


def create_instantiate_parser(subparsers):
    parser = subparsers.add_parser("instantiate", help="Apply a scheme to bindings")
    parser.add_argument("scheme_id")
    parser.add_argument("--bind", action="append", metavar="VAR=TEXT", default=[], help="Bind a variable")
    parser.add_argument("--qualifier", choices=[q.value for q in Qualifier], help="Instance qualifier")
    parser.add_argument("--id", dest="argument_id", help="Argument id")
    parser.set_defaults(func=instantiate_command)


def instantiate_command(args) -> int:
    scheme = args.registry.get(args.scheme_id)
    substitution = Substitution(bindings=_pairs(args.bind, "--bind"))
    qualifier = Qualifier(args.qualifier) if args.qualifier else None
    instance = instantiate_scheme(scheme, substitution, args.argument_id, qualifier)
    print(render_toulmin(instance, scheme))
    return EXIT_OK


# evaluate


def create_evaluate_parser(subparsers):
    parser = subparsers.add_parser("evaluate", help="Label an argument graph file")
    parser.add_argument("graph_file", help="*.arg file")
    parser.add_argument("--report", action="store_true", help="Add a verdict per argument")
    parser.add_argument("--format", choices=["text", "machine"], default="text", help="Output format")
    parser.set_defaults(func=evaluate_command)


def evaluate_command(args) -> int:
    data = _read(args.graph_file)
    if data is None:
        return EXIT_DIAGNOSTICS
    document = parse_graph(data, args.registry, source=args.graph_file)
    _report_diagnostics(document.diagnostics)

    graph = document.graph
    labelling = grounded_labelling(graph)
    sys.stdout.write(export_graph(graph, args.format, labelling))
    if args.report:
        for argument_id in graph.arguments:
            verdict = evaluate_argument(graph, argument_id, labelling)
            open_cqs = ",".join(str(i) for i in verdict.open_cqs) or "-"
            print(f"verdict {argument_id} {verdict.label.value} {verdict.qualifier.value} open {open_cqs}")
    return EXIT_OK if document.ok else EXIT_DIAGNOSTICS


# simulate


def create_simulate_parser(subparsers):
    parser = subparsers.add_parser("simulate", help="Run a dialogue script")
    parser.add_argument("script_file", help="*.dlg file")
    parser.add_argument("--max-turns", type=int, default=None, help="Stop after this many moves")
    parser.add_argument("--policy-proponent", choices=sorted(POLICIES), default="replay")
    parser.add_argument("--policy-respondent", choices=sorted(POLICIES), default="replay")
    parser.add_argument("--output", help="Also write the transcript to this file")
    parser.set_defaults(func=simulate_command)


def _policy(name: str, arguments, shared: ReplayPolicy):
    if name == ReplayPolicy.name:
        return shared
    if name == CompliantProver.name:
        return CompliantProver(list(arguments.values()))
    return POLICIES[name]()


def simulate_command(args) -> int:
    data = _read(args.script_file)
    if data is None:
        return EXIT_DIAGNOSTICS
    document = parse_script(data, args.registry, source=args.script_file)
    if not document.ok:
        _report_diagnostics(document.diagnostics)
        return EXIT_DIAGNOSTICS

    max_turns = args.max_turns if args.max_turns is not None else args.config.default_max_turns
    if max_turns < 1:
        _error("--max-turns must be at least 1")
        return EXIT_USAGE

    # replaying policies share one cursor over the script
    shared = ReplayPolicy(document.moves)
    transcript = run_simulation(
        document.initial_state(args.config.max_embedding_depth),
        _policy(args.policy_proponent, document.arguments, shared),
        _policy(args.policy_respondent, document.arguments, shared),
        max_turns,
    )
    text = render_transcript(transcript)
    sys.stdout.write(text)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    if transcript.violation is not None:
        _error(f"{transcript.violation['error']}: {transcript.violation['message']}")
        return EXIT_DIAGNOSTICS
    return EXIT_OK


# shift-report


def create_shift_report_parser(subparsers):
    parser = subparsers.add_parser("shift-report", help="List the dialectical shifts of a transcript")
    parser.add_argument("transcript_file", help="*.transcript file, or a *.dlg script to replay")
    parser.set_defaults(func=shift_report_command)


def shift_report_command(args) -> int:
    data = _read(args.transcript_file)
    if data is None:
        return EXIT_DIAGNOSTICS

    if args.transcript_file.endswith(".dlg"):
        document = parse_script(data, args.registry, source=args.transcript_file)
        if not document.ok:
            _report_diagnostics(document.diagnostics)
            return EXIT_DIAGNOSTICS
        shared = ReplayPolicy(document.moves)
        transcript = run_simulation(
            document.initial_state(args.config.max_embedding_depth),
            shared,
            shared,
            args.config.default_max_turns,
        )
        sys.stdout.write(format_shift_report(shift_report(transcript)))
        return EXIT_OK

    parsed = parse_transcript(data, source=args.transcript_file)
    _report_diagnostics(parsed.diagnostics)
    sys.stdout.write(format_shift_report(shift_report(parsed.shifts)))
    return EXIT_OK if not parsed.diagnostics else EXIT_DIAGNOSTICS


# localize


def create_localize_parser(subparsers):
    parser = subparsers.add_parser("localize", help="Derive a scheme by whole-word replacement")
    parser.add_argument("scheme_id")
    parser.add_argument("--map", action="append", metavar="SRC=DST", default=[], required=True)
    parser.add_argument("--as", dest="new_id", required=True, help="Id of the new scheme")
    parser.add_argument("--name", help="Name of the new scheme")
    parser.set_defaults(func=localize_command)


def localize_command(args) -> int:
    scheme = args.registry.get(args.scheme_id)
    term_map = TermMap(replacements=_pairs(args.map, "--map"))
    result = localize_scheme(scheme, term_map, args.new_id, args.registry, args.name)
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    sys.stdout.write(serialize_scheme(result.scheme))
    return EXIT_OK


# dialogues list


def create_dialogues_parser(subparsers):
    parser = subparsers.add_parser("dialogues", help="Describe the dialogue types")
    actions = parser.add_subparsers(dest="dialogues_action", required=True)
    list_parser = actions.add_parser("list", help="List dialogue types with their cells")
    list_parser.set_defaults(func=dialogues_list_command)


def dialogues_list_command(args) -> int:
    for dtype in dialogue_types():
        print(f"{dtype.id.value}\t{dtype.situation.value}\t{dtype.goal.value}\t{dtype.collective_goal}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="argdial", description="Argumentation schemes, critical questions and dialogues"
    )
    parser.add_argument("--log-level", help="Log level (default INFO, or ARGDIAL_LOG_LEVEL)")
    parser.add_argument("--structured-logs", action="store_true", help="Log JSON records to stderr")
    parser.add_argument(
        "--scheme-path", action="append", default=[], metavar="DIR", help="Extra *.scheme directory"
    )

    subparsers = parser.add_subparsers(dest="command")
    create_schemes_parser(subparsers)
    create_validate_parser(subparsers)
    create_instantiate_parser(subparsers)
    create_evaluate_parser(subparsers)
    create_simulate_parser(subparsers)
    create_shift_report_parser(subparsers)
    create_localize_parser(subparsers)
    create_dialogues_parser(subparsers)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the argdial CLI."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        config = ArgdialConfig.from_env(
            log_level=args.log_level or (None if os.getenv(LOG_LEVEL_ENV) else "INFO"),
            structured_logs=args.structured_logs or None,
        )
    except ConfigurationError as e:
        _error(e.message)
        return EXIT_USAGE
    LoggingConfig.configure("argdial", config.log_level, structured=config.structured_logs)

    registry = default_registry()
    scheme_dirs = [*config.scheme_path, *(Path(p) for p in args.scheme_path)]
    if scheme_dirs:
        _report_diagnostics(load_scheme_path(registry, scheme_dirs))

    args.config = config
    args.registry = registry
    try:
        return args.func(args)
    except ArgdialError as e:
        log.debug("Command failed", command=args.command, response=create_error_response(e))
        _error(e.message)
        return EXIT_DIAGNOSTICS
    except ValueError as e:
        # pydantic rejects malformed bindings and term maps
        _error(str(e).splitlines()[0])
        return EXIT_DIAGNOSTICS


if __name__ == "__main__":
    sys.exit(main())
