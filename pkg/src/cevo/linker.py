"""Link verb occurrences in text to ontology properties through shared CEVO classes."""

from __future__ import annotations

from dataclasses import dataclass

from .ontology import ROOT, Lexicon
from .rdf import CEVO_BASE, IRI, ITSRDF, NIF, OA, RDF_TYPE, Graph, Term, builtin_prefixes


@dataclass(frozen=True)
class RelationLink:
    occurrence_iri: str
    property_iri: str
    via_class: str
    specificity: int


class MalformedGraphError(ValueError):
    def __init__(self, subject: str, reason: str) -> None:
        super().__init__(f"{subject}: {reason}")
        self.subject = subject
        self.reason = reason


def _index(graph: Graph) -> dict[IRI, dict[IRI, list[Term]]]:
    idx: dict[IRI, dict[IRI, list[Term]]] = {}
    for t in graph.triples:
        idx.setdefault(t.subject, {}).setdefault(t.predicate, []).append(t.object)
    return idx


def read_occurrences(lexicon: Lexicon, annotations: Graph) -> dict[str, set[str]]:
    """Map each ``nif:String`` subject to its CEVO classes."""
    rdf_type, nif_string = IRI(RDF_TYPE), IRI(NIF + "String")
    found: dict[str, set[str]] = {}
    idx = _index(annotations)
    for subject in sorted(idx):
        types = idx[subject].get(rdf_type, [])
        if nif_string not in types:
            continue
        classes = set()
        for obj in types:
            if isinstance(obj, IRI) and (name := lexicon.local_name(obj.value)) is not None:
                if name not in lexicon.class_map:
                    raise MalformedGraphError(subject.value, f"unknown event class {name!r}")
                classes.add(name)
        if not classes:
            raise MalformedGraphError(subject.value, "occurrence has no event class type")
        found[subject.value] = classes
    return found


def read_property_classes(lexicon: Lexicon, bindings: Graph) -> dict[str, set[str]]:
    """Map each annotated property IRI to the CEVO classes bound to it."""
    rdf_type, annotation = IRI(RDF_TYPE), IRI(OA + "Annotation")
    found: dict[str, set[str]] = {}
    idx = _index(bindings)
    for ann in sorted(idx):
        preds = idx[ann]
        if annotation not in preds.get(rdf_type, []):
            continue
        targets = preds.get(IRI(OA + "hasTarget"), [])
        bodies = preds.get(IRI(OA + "hasBody"), [])
        if len(targets) != 1 or not isinstance(targets[0], IRI):
            raise MalformedGraphError(ann.value, "annotation needs exactly one IRI oa:hasTarget")
        if len(bodies) != 1 or not isinstance(bodies[0], IRI):
            raise MalformedGraphError(ann.value, "annotation needs exactly one IRI oa:hasBody")
        name = lexicon.local_name(bodies[0].value)
        if name is None or name not in lexicon.class_map:
            raise MalformedGraphError(ann.value, f"body {bodies[0].value} is not an event class")
        found.setdefault(targets[0].value, set()).add(name)
    return found


def _sort_key(link: RelationLink) -> tuple:
    return (link.occurrence_iri, -link.specificity, link.property_iri, link.via_class)


def match_links(
    lexicon: Lexicon,
    occurrences: dict[str, set[str]],
    properties: dict[str, set[str]],
    best_only: bool = False,
    strict: bool = False,
) -> list[RelationLink]:
    """Join occurrences and properties on shared classes.

    An occurrence matches a property through class ``c`` when ``c`` is bound to
    the property and is one of the occurrence's classes or (unless ``strict``)
    an ancestor of one.  The root never matches.  ``best_only`` keeps, per
    occurrence, only the links of greatest depth.
    """
    by_class: dict[str, list[str]] = {}
    for prop, classes in properties.items():
        for c in classes:
            by_class.setdefault(c, []).append(prop)

    links: list[RelationLink] = []
    for occ, direct in occurrences.items():
        reach = set(direct)
        if not strict:
            for c in direct:
                reach |= lexicon.ancestor_set(c)
        reach.discard(ROOT)
        found = [
            RelationLink(occ, prop, c, lexicon.depths[c])
            for c in reach
            for prop in by_class.get(c, ())
        ]
        if best_only and found:
            top = max(l.specificity for l in found)
            found = [l for l in found if l.specificity == top]
        links.extend(found)
    return sorted(links, key=_sort_key)


def link(
    lexicon: Lexicon,
    text_annotations: Graph,
    bindings: Graph,
    best_only: bool = False,
    strict: bool = False,
) -> list[RelationLink]:
    return match_links(
        lexicon,
        read_occurrences(lexicon, text_annotations),
        read_property_classes(lexicon, bindings),
        best_only=best_only,
        strict=strict,
    )


def export_links_turtle(links: list[RelationLink], wadm: bool = False, base_iri: str | None = None) -> Graph:
    """One ``itsrdf:taIdentRef`` triple per link; with ``wadm`` also an
    ``oa:Annotation`` per linked (occurrence, property) pair."""
    base = base_iri or CEVO_BASE
    g = Graph(prefixes=builtin_prefixes(base))
    for l in links:
        g.add(IRI(l.occurrence_iri), IRI(ITSRDF + "taIdentRef"), IRI(l.property_iri))
    if wadm:
        pairs = dict.fromkeys((l.occurrence_iri, l.property_iri) for l in links)
        for n, (occ, prop) in enumerate(pairs, start=1):
            ann = IRI(f"{base}link/{n}")
            g.add(ann, IRI(RDF_TYPE), IRI(OA + "Annotation"))
            g.add(ann, IRI(OA + "hasTarget"), IRI(occ))
            g.add(ann, IRI(OA + "hasBody"), IRI(prop))
    return g
