"""CEVO: an event ontology over Levin-style verb classes, with tools to
annotate verbs in text, tag ontology properties and link the two."""

__version__ = "0.1.0"

from .annotate import annotate_document
from .bindings import PropertyBinding, export_bindings_turtle, parse_bindings
from .lexicon_io import (
    export_instances_turtle,
    export_schema_turtle,
    load_lexicon,
    parse_lexicon,
    seed_lexicon,
    write_lexicon,
)
from .linker import RelationLink, export_links_turtle, link
from .normalize import Token, VerbOccurrence, detect_verbs, lemma_candidates, tokenize
from .ontology import (
    EventClass,
    Lexicon,
    VerbEntry,
    ancestors,
    classes_of_verb,
    deepest_common_class,
    validate,
    verbs_of_class,
)
from .rdf import IRI, Graph, Literal, Triple, parse_turtle, write_turtle

__all__ = [
    "EventClass", "Graph", "IRI", "Lexicon", "Literal", "PropertyBinding", "RelationLink",
    "Token", "Triple", "VerbEntry", "VerbOccurrence", "ancestors", "annotate_document",
    "classes_of_verb", "deepest_common_class", "detect_verbs", "export_bindings_turtle",
    "export_instances_turtle", "export_links_turtle", "export_schema_turtle", "lemma_candidates",
    "link", "load_lexicon", "parse_bindings", "parse_lexicon", "parse_turtle", "seed_lexicon",
    "tokenize", "validate", "verbs_of_class", "write_lexicon", "write_turtle",
]
