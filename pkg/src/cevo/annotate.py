"""NIF stand-off annotation of main verbs, typed with CEVO event classes."""

from __future__ import annotations

from typing import Mapping

from .normalize import VerbOccurrence, apply_pos_hints, detect_verbs, tokenize
from .ontology import Lexicon
from .rdf import IRI, NIF, OLIA, RDF_TYPE, Graph, Literal, builtin_prefixes, is_absolute_iri


class RelativeIRIError(ValueError):
    def __init__(self, iri: str) -> None:
        super().__init__(f"document IRI must be absolute: {iri!r}")
        self.iri = iri


def occurrences(
    lexicon: Lexicon,
    document_iri: str,
    text: str,
    pos_hints: Mapping[tuple[int, int], str] | None = None,
) -> list[VerbOccurrence]:
    if not is_absolute_iri(document_iri):
        raise RelativeIRIError(document_iri)
    tokens = tokenize(text)
    if pos_hints:
        tokens = apply_pos_hints(tokens, dict(pos_hints))
    return detect_verbs(lexicon, tokens, document_iri)


def occurrence_graph(lexicon: Lexicon, found: list[VerbOccurrence]) -> Graph:
    g = Graph(prefixes=builtin_prefixes(lexicon.base_iri))
    rdf_type = IRI(RDF_TYPE)
    for occ in found:
        node = IRI(occ.iri)
        g.add(node, rdf_type, IRI(NIF + "String"))
        g.add(node, IRI(NIF + "beginIndex"), Literal.integer(occ.begin))
        g.add(node, IRI(NIF + "endIndex"), Literal.integer(occ.end))
        g.add(node, IRI(NIF + "anchorOf"), Literal(occ.anchor))
        g.add(node, IRI(NIF + "oliaCategory"), IRI(OLIA + "MainVerb"))
        # not in the original listings; needed to resolve the offsets
        g.add(node, IRI(NIF + "referenceContext"), IRI(occ.document_iri))
        for c in occ.classes:
            g.add(node, rdf_type, IRI(lexicon.iri(c)))
    return g


def annotate_document(
    lexicon: Lexicon,
    document_iri: str,
    text: str,
    pos_hints: Mapping[tuple[int, int], str] | None = None,
) -> Graph:
    """Annotate every detected main verb in ``text``.

    Each occurrence ``<document_iri>#char=b,e`` (begin inclusive, end
    exclusive, in code points) gets 6 NIF triples plus one ``rdf:type`` per
    event class of its lemma.
    """
    return occurrence_graph(lexicon, occurrences(lexicon, document_iri, text, pos_hints))
