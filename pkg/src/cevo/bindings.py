"""WADM annotations that tag external ontology properties with CEVO classes.

Bindings file: one ``<property-IRI> <ClassId> [annotation-IRI]`` per line.
IRIs may be bare, wrapped in ``<...>``, or use a built-in prefix
(``dbo:spouse``).  Blank lines and ``#`` lines are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ontology import Lexicon
from .rdf import IRI, OA, RDF_TYPE, Graph, builtin_prefixes, is_absolute_iri


@dataclass(frozen=True)
class PropertyBinding:
    annotation_iri: str
    property_iri: str
    class_id: str


class BindingFormatError(ValueError):
    def __init__(self, line: int, reason: str) -> None:
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class UnknownBindingClassError(BindingFormatError):
    def __init__(self, line: int, class_id: str) -> None:
        super().__init__(line, f"unknown class {class_id!r}")
        self.class_id = class_id


def _resolve(value: str, lineno: int, prefixes: dict[str, str]) -> str:
    if value.startswith("<") and value.endswith(">"):
        value = value[1:-1]
    else:
        label, sep, local = value.partition(":")
        if sep and label in prefixes and not local.startswith("//"):
            value = prefixes[label] + local
    if not is_absolute_iri(value):
        raise BindingFormatError(lineno, f"not an absolute IRI: {value!r}")
    return value


def parse_bindings(text: str, lexicon: Lexicon) -> list[PropertyBinding]:
    prefixes = builtin_prefixes(lexicon.base_iri)
    out: list[PropertyBinding] = []
    seen: set[str] = set()
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        n += 1
        parts = line.split()
        if len(parts) not in (2, 3):
            raise BindingFormatError(lineno, "expected '<property-IRI> <ClassId> [annotation-IRI]'")
        prop = _resolve(parts[0], lineno, prefixes)
        class_id = parts[1]
        if class_id not in lexicon.class_map:
            raise UnknownBindingClassError(lineno, class_id)
        if len(parts) == 3:
            ann = _resolve(parts[2], lineno, prefixes)
        else:
            ann = f"{lexicon.base_iri}annotation/{n}"
        if ann in seen:
            raise BindingFormatError(lineno, f"duplicate annotation IRI {ann!r}")
        seen.add(ann)
        out.append(PropertyBinding(ann, prop, class_id))
    return out


def render_bindings(bindings: list[PropertyBinding]) -> str:
    return "".join(f"<{b.property_iri}> {b.class_id} <{b.annotation_iri}>\n" for b in bindings)


def export_bindings_turtle(bindings: list[PropertyBinding], lexicon: Lexicon) -> Graph:
    """Three triples per binding: ``oa:Annotation`` type, target and body."""
    g = Graph(prefixes=builtin_prefixes(lexicon.base_iri))
    for b in bindings:
        ann = IRI(b.annotation_iri)
        g.add(ann, IRI(RDF_TYPE), IRI(OA + "Annotation"))
        g.add(ann, IRI(OA + "hasTarget"), IRI(b.property_iri))
        g.add(ann, IRI(OA + "hasBody"), IRI(lexicon.iri(b.class_id)))
    return g
