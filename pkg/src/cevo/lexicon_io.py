"""Line-oriented lexicon files and Turtle export of the ontology.

Lexicon format (UTF-8, ``#`` starts a comment line)::

    base <http://eventontology.org/>
    class Communication parents=Event label="communication" comment="..." props="p1|p2"
    verb say classes=Communication

The root ``Event`` class is added automatically when a file omits it.
"""

from __future__ import annotations

import shlex
from importlib import resources
from pathlib import Path

from .ontology import (
    MAIN_VERB,
    ROOT,
    EventClass,
    Lexicon,
    VerbEntry,
    Violation,
    root_class,
    validate,
)
from .rdf import IRI, OLIA, OWL, RDF_TYPE, RDFS, CEVO_BASE, Graph, Literal, builtin_prefixes, is_absolute_iri

SEED_RESOURCE = "seed.lex"


class LexiconFormatError(ValueError):
    def __init__(self, line: int, reason: str) -> None:
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class LexiconValidationError(ValueError):
    def __init__(self, report: list[Violation]) -> None:
        super().__init__("invalid lexicon:\n" + "\n".join(str(v) for v in report))
        self.report = report


_CLASS_KEYS = {"parents", "label", "comment", "props"}
_VERB_KEYS = {"classes"}


def _fields(words: list[str], allowed: set[str], lineno: int) -> dict[str, str]:
    out: dict[str, str] = {}
    for w in words:
        key, sep, value = w.partition("=")
        if not sep:
            raise LexiconFormatError(lineno, f"expected key=value, got {w!r}")
        if key not in allowed:
            raise LexiconFormatError(lineno, f"unknown field {key!r}")
        if key in out:
            raise LexiconFormatError(lineno, f"field {key!r} given twice")
        out[key] = value
    return out


def _split_list(value: str, sep: str = ",") -> list[str]:
    return [x.strip() for x in value.split(sep) if x.strip()]


def read_lexicon(text: str) -> Lexicon:
    """Parse lexicon text without validating it (the root is still injected)."""
    base = CEVO_BASE
    classes: list[EventClass] = []
    verbs: list[VerbEntry] = []
    seen_base = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        directive, _, rest = line.partition(" ")
        if directive == "base":
            value = rest.strip()
            if value.startswith("<") and value.endswith(">"):
                value = value[1:-1]
            if not is_absolute_iri(value):
                raise LexiconFormatError(lineno, f"base must be an absolute IRI, got {rest.strip()!r}")
            if seen_base:
                raise LexiconFormatError(lineno, "base given twice")
            base, seen_base = value, True
            continue
        try:
            words = shlex.split(rest)
        except ValueError as exc:
            raise LexiconFormatError(lineno, str(exc)) from None
        if directive not in ("class", "verb"):
            raise LexiconFormatError(lineno, f"unknown directive {directive!r}")
        if not words:
            raise LexiconFormatError(lineno, f"{directive} directive needs a name")
        name, words = words[0], words[1:]
        if "=" in name:
            raise LexiconFormatError(lineno, f"{directive} directive needs a name before its fields")
        if directive == "class":
            f = _fields(words, _CLASS_KEYS, lineno)
            classes.append(
                EventClass(
                    id=name,
                    label=f.get("label", ""),
                    comment=f.get("comment", ""),
                    parents=frozenset(_split_list(f.get("parents", ""))),
                    meaning_properties=tuple(_split_list(f.get("props", ""), "|")),
                )
            )
        else:
            f = _fields(words, _VERB_KEYS, lineno)
            verbs.append(VerbEntry(name, frozenset(_split_list(f.get("classes", "")))))

    if not any(c.id == ROOT for c in classes):
        classes.insert(0, root_class())
    return Lexicon(tuple(classes), tuple(verbs), base)


def parse_lexicon(text: str) -> Lexicon:
    """Parse and validate; raises :class:`LexiconValidationError` on bad data."""
    lexicon = read_lexicon(text)
    report = validate(lexicon)
    if report:
        raise LexiconValidationError(report)
    return lexicon


def load_lexicon(path: str | Path) -> Lexicon:
    return parse_lexicon(Path(path).read_text(encoding="utf-8"))


def seed_text() -> str:
    return resources.files("cevo").joinpath("data", SEED_RESOURCE).read_text(encoding="utf-8")


def seed_lexicon() -> Lexicon:
    """The bundled lexicon of classes and verbs named in the CEVO paper."""
    return parse_lexicon(seed_text())


def _quote(value: str) -> str:
    return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_lexicon(lexicon: Lexicon) -> str:
    lines = [f"base <{lexicon.base_iri}>", ""]
    for c in sorted(lexicon.classes, key=lambda c: c.id):
        parts = [f"class {c.id}"]
        if c.parents:
            parts.append("parents=" + ",".join(sorted(c.parents)))
        parts.append("label=" + _quote(c.label))
        if c.comment:
            parts.append("comment=" + _quote(c.comment))
        if c.meaning_properties:
            parts.append("props=" + _quote("|".join(c.meaning_properties)))
        lines.append(" ".join(parts))
    lines.append("")
    for v in sorted(lexicon.verbs, key=lambda v: v.lemma):
        lines.append(f"verb {v.lemma} classes=" + ",".join(sorted(v.classes)))
    return "\n".join(lines) + "\n"


# -- Turtle export -----------------------------------------------------------


def export_schema_turtle(lexicon: Lexicon) -> Graph:
    g = Graph(prefixes=builtin_prefixes(lexicon.base_iri))
    rdf_type = IRI(RDF_TYPE)
    owl_class = IRI(OWL + "Class")
    for c in lexicon.classes:
        node = IRI(lexicon.iri(c.id))
        g.add(node, rdf_type, owl_class)
        g.add(node, IRI(RDFS + "label"), Literal(c.label))
        if c.comment:
            g.add(node, IRI(RDFS + "comment"), Literal(c.comment))
        for p in c.parents:
            g.add(node, IRI(RDFS + "subClassOf"), IRI(lexicon.iri(p)))
    main_verb = IRI(lexicon.iri(MAIN_VERB))
    g.add(main_verb, rdf_type, owl_class)
    g.add(main_verb, IRI(OWL + "equivalentClass"), IRI(OLIA + "MainVerb"))
    return g


def export_instances_turtle(lexicon: Lexicon) -> Graph:
    # direct memberships only; ancestor closure is a query-time concern
    g = Graph(prefixes=builtin_prefixes(lexicon.base_iri))
    rdf_type = IRI(RDF_TYPE)
    main_verb = IRI(lexicon.iri(MAIN_VERB))
    for v in lexicon.verbs:
        node = IRI(lexicon.iri(v.lemma))
        g.add(node, rdf_type, main_verb)
        for c in v.classes:
            g.add(node, rdf_type, IRI(lexicon.iri(c)))
    return g
