"""Command-line entry point.

Exit codes: 0 success, 1 data-level failure (invalid lexicon, unknown class or
lemma, malformed annotation graphs), 2 environment or parse failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .annotate import RelativeIRIError, annotate_document
from .bindings import BindingFormatError, UnknownBindingClassError, export_bindings_turtle, parse_bindings
from .lexicon_io import (
    LexiconFormatError,
    LexiconValidationError,
    export_instances_turtle,
    export_schema_turtle,
    parse_lexicon,
    read_lexicon,
    seed_text,
)
from .linker import MalformedGraphError, export_links_turtle, link
from .normalize import PosFileError, read_pos_hints
from .ontology import (
    Lexicon,
    LexiconError,
    ancestors,
    classes_of_verb,
    deepest_common_class,
    validate,
    verbs_of_class,
)
from .rdf import TurtleError, parse_turtle, write_turtle

EXIT_OK, EXIT_DATA, EXIT_ENV = 0, 1, 2


class CommandError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror or exc}", EXIT_ENV) from None
    except UnicodeDecodeError:
        raise CommandError(f"{path} is not valid UTF-8", EXIT_ENV) from None


def _lexicon_text(args: argparse.Namespace) -> tuple[str, str]:
    if args.lexicon and args.seed_lexicon:
        raise CommandError("--lexicon and --seed-lexicon are mutually exclusive", EXIT_ENV)
    if args.lexicon:
        return args.lexicon, _read(args.lexicon)
    return "<seed>", seed_text()


def _load(args: argparse.Namespace) -> Lexicon:
    name, text = _lexicon_text(args)
    try:
        lexicon = parse_lexicon(text)
    except LexiconFormatError as exc:
        raise CommandError(f"{name}: {exc}", EXIT_ENV) from None
    except LexiconValidationError as exc:
        raise CommandError(f"{name}: {exc}", EXIT_ENV) from None
    if args.base_iri:
        lexicon = lexicon.with_base(args.base_iri)
    return lexicon


def _parse_graph(path: str):
    try:
        return parse_turtle(_read(path))
    except TurtleError as exc:
        raise CommandError(f"{path}: {exc}", EXIT_ENV) from None


def cmd_validate(args: argparse.Namespace) -> tuple[str, int]:
    name, text = _lexicon_text(args)
    try:
        lexicon = read_lexicon(text)
    except LexiconFormatError as exc:
        raise CommandError(f"{name}: {exc}", EXIT_ENV) from None
    report = validate(lexicon)
    if not report:
        return "OK\n", EXIT_OK
    return "".join(f"{v}\n" for v in report), EXIT_DATA


def cmd_export(args: argparse.Namespace) -> tuple[str, int]:
    lexicon = _load(args)
    if args.which == "schema":
        g = export_schema_turtle(lexicon)
    elif args.which == "instances":
        g = export_instances_turtle(lexicon)
    else:
        g = export_schema_turtle(lexicon) | export_instances_turtle(lexicon)
    return write_turtle(g), EXIT_OK


def cmd_annotate(args: argparse.Namespace) -> tuple[str, int]:
    lexicon = _load(args)
    text = _read(args.document)
    hints = None
    if args.pos:
        try:
            hints = read_pos_hints(_read(args.pos))
        except PosFileError as exc:
            raise CommandError(f"{args.pos}: {exc}", EXIT_ENV) from None
    try:
        g = annotate_document(lexicon, args.doc_iri, text, hints)
    except RelativeIRIError as exc:
        raise CommandError(str(exc), EXIT_ENV) from None
    return write_turtle(g), EXIT_OK


def cmd_bind(args: argparse.Namespace) -> tuple[str, int]:
    lexicon = _load(args)
    text = _read(args.bindings)
    try:
        found = parse_bindings(text, lexicon)
    except UnknownBindingClassError as exc:
        raise CommandError(f"{args.bindings}: {exc}", EXIT_DATA) from None
    except BindingFormatError as exc:
        raise CommandError(f"{args.bindings}: {exc}", EXIT_ENV) from None
    return write_turtle(export_bindings_turtle(found, lexicon)), EXIT_OK


def cmd_link(args: argparse.Namespace) -> tuple[str, int]:
    lexicon = _load(args)
    annotations = _parse_graph(args.annotations)
    bindings = _parse_graph(args.bindings)
    try:
        links = link(lexicon, annotations, bindings, best_only=args.best_only, strict=args.strict)
    except MalformedGraphError as exc:
        raise CommandError(f"malformed graph: {exc}", EXIT_DATA) from None
    return write_turtle(export_links_turtle(links, wadm=args.wadm, base_iri=lexicon.base_iri)), EXIT_OK


_QUERY_ARITY = {"classes-of": 1, "verbs-of": 1, "ancestors": 1, "lca": 2}


def cmd_query(args: argparse.Namespace) -> tuple[str, int]:
    lexicon = _load(args)
    want = _QUERY_ARITY[args.mode]
    if len(args.args) != want:
        raise CommandError(f"query {args.mode} takes {want} argument(s)", EXIT_ENV)
    try:
        if args.mode == "classes-of":
            result = classes_of_verb(lexicon, args.args[0], transitive=args.transitive)
        elif args.mode == "verbs-of":
            result = verbs_of_class(lexicon, args.args[0], include_subclasses=args.include_subclasses)
        elif args.mode == "ancestors":
            result = ancestors(lexicon, args.args[0])
        else:
            result = [deepest_common_class(lexicon, *args.args)]
    except LexiconError as exc:
        raise CommandError(str(exc), EXIT_DATA) from None
    return "".join(f"{r}\n" for r in result), EXIT_OK


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--lexicon", metavar="PATH", default=default, help="lexicon file (default: bundled seed)")
    parser.add_argument(
        "--seed-lexicon", action="store_true", default=argparse.SUPPRESS if suppress else False,
        help="use the bundled seed lexicon",
    )
    parser.add_argument("--out", metavar="PATH", default=default, help="write output here instead of stdout")
    parser.add_argument("--base-iri", metavar="IRI", default=default, help="override the lexicon base IRI")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cevo", description="CEVO event ontology tools")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    p = sub.add_parser("validate", parents=[common], help="check lexicon invariants")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("export", parents=[common], help="export the ontology as Turtle")
    p.add_argument("which", choices=("schema", "instances", "all"), nargs="?", default="all")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("annotate", parents=[common], help="NIF-annotate main verbs in a text file")
    p.add_argument("document", help="UTF-8 text file")
    p.add_argument("--doc-iri", required=True, help="absolute IRI of the document")
    p.add_argument("--pos", metavar="PATH", help="sidecar file of 'begin end TAG' lines")
    p.set_defaults(func=cmd_annotate)

    p = sub.add_parser("bind", parents=[common], help="WADM-annotate ontology properties")
    p.add_argument("bindings", help="bindings file")
    p.set_defaults(func=cmd_bind)

    p = sub.add_parser("link", parents=[common], help="link text annotations to bound properties")
    p.add_argument("annotations", help="Turtle output of 'annotate'")
    p.add_argument("bindings", help="Turtle output of 'bind'")
    p.add_argument("--best-only", action="store_true", help="keep only the most specific links per occurrence")
    p.add_argument("--strict", action="store_true", help="match on direct classes only")
    p.add_argument("--wadm", action="store_true", help="also emit an oa:Annotation per link")
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("query", parents=[common], help="explore the lexicon")
    p.add_argument("mode", choices=tuple(_QUERY_ARITY))
    p.add_argument("args", nargs="+")
    p.add_argument("--transitive", action="store_true", help="classes-of: include ancestor classes")
    p.add_argument("--include-subclasses", action="store_true", help="verbs-of: include subclass members")
    p.set_defaults(func=cmd_query)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ENV if exc.code else EXIT_OK
    try:
        output, code = args.func(args)
    except CommandError as exc:
        print(f"cevo: {exc}", file=sys.stderr)
        return exc.code
    if args.out:
        try:
            Path(args.out).write_text(output, encoding="utf-8", newline="\n")
        except OSError as exc:
            print(f"cevo: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
            return EXIT_ENV
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
