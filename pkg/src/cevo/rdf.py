"""Minimal RDF model with a deterministic Turtle writer and a Turtle-subset reader.

The reader understands ``@prefix`` directives, ``a``, prefixed names,
``<absolute-IRI>`` references, double-quoted strings (``\\"``, ``\\\\``,
``\\n``, ``\\r``, ``\\t`` escapes, optional ``^^`` datatype), bare integers,
``;`` / ``,`` continuations, ``.`` terminators and ``#`` comments.  Blank
nodes, collections, language tags, long strings and ``@base`` are rejected
with :class:`UnsupportedTurtleError`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"
XSD = "http://www.w3.org/2001/XMLSchema#"
NIF = "http://persistence.uni-leipzig.org/nlp2rdf/ontologies/nif-core#"
OA = "http://www.w3.org/ns/oa#"
OLIA = "http://nachhalt.sfb632.uni-potsdam.de/owl/olia.owl#"
ITSRDF = "http://www.w3.org/2005/11/its/rdf#"
DBO = "http://dbpedia.org/ontology/"
EXAMPLE = "http://example.org/"
CEVO_BASE = "http://eventontology.org/"

RDF_TYPE = RDF + "type"
XSD_INTEGER = XSD + "integer"


def cevo_namespace(base_iri: str = CEVO_BASE) -> str:
    """Namespace that class and verb local names attach to (``<base>#``)."""
    return base_iri + "#"


def builtin_prefixes(base_iri: str = CEVO_BASE) -> dict[str, str]:
    return {
        "cevo": cevo_namespace(base_iri),
        "rdf": RDF,
        "rdfs": RDFS,
        "owl": OWL,
        "nif": NIF,
        "oa": OA,
        "olia": OLIA,
        "itsrdf": ITSRDF,
        "dbo": DBO,
        "exam": EXAMPLE,
        "example": EXAMPLE,
    }


_SCHEME = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_INTEGER = re.compile(r"^-?[0-9]+$")
_PREFIX_LABEL = re.compile(r"^([A-Za-z]([A-Za-z0-9_\-.]*[A-Za-z0-9_\-])?)?$")
_LOCAL_NAME = re.compile(r"^[A-Za-z0-9_]([A-Za-z0-9_\-.]*[A-Za-z0-9_\-])?$")


def is_absolute_iri(value: str) -> bool:
    return bool(_SCHEME.match(value)) and not any(c in value for c in '<>" {}|\\^`\n')


@dataclass(frozen=True, order=True)
class IRI:
    value: str

    def __post_init__(self) -> None:
        if not is_absolute_iri(self.value):
            raise ValueError(f"not an absolute IRI: {self.value!r}")

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class Literal:
    lexical: str
    datatype: str | None = None

    def __post_init__(self) -> None:
        if self.datatype == XSD_INTEGER and not _INTEGER.match(self.lexical):
            raise ValueError(f"invalid integer lexical form: {self.lexical!r}")

    @classmethod
    def integer(cls, value: int) -> "Literal":
        return cls(str(value), XSD_INTEGER)

    def __str__(self) -> str:
        return self.lexical


Term = Union[IRI, Literal]


class Triple(NamedTuple):
    subject: IRI
    predicate: IRI
    object: Term


def _term_key(term: Term) -> tuple:
    if isinstance(term, IRI):
        return (0, term.value, "")
    return (1, term.lexical, term.datatype or "")


@dataclass
class Graph:
    """A set of triples plus the prefix table used when writing it."""

    triples: set[Triple] = field(default_factory=set)
    prefixes: dict[str, str] = field(default_factory=builtin_prefixes)

    def __post_init__(self) -> None:
        for label in self.prefixes:
            if not _PREFIX_LABEL.match(label):
                raise ValueError(f"invalid prefix label: {label!r}")
        self.triples = set(self.triples)
        for t in self.triples:
            _check_triple(t)

    def add(self, subject: IRI, predicate: IRI, obj: Term) -> None:
        t = Triple(subject, predicate, obj)
        _check_triple(t)
        self.triples.add(t)

    def update(self, triples: Iterable[Triple]) -> None:
        for t in triples:
            self.add(*t)

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(sorted(self.triples, key=lambda t: (t.subject.value, t.predicate.value, _term_key(t.object))))

    def __contains__(self, triple: object) -> bool:
        return triple in self.triples

    def __or__(self, other: "Graph") -> "Graph":
        merged = dict(self.prefixes)
        merged.update(other.prefixes)
        return Graph(self.triples | other.triples, merged)

    def subjects(self, predicate: IRI | None = None, obj: Term | None = None) -> list[IRI]:
        found = {
            t.subject
            for t in self.triples
            if (predicate is None or t.predicate == predicate) and (obj is None or t.object == obj)
        }
        return sorted(found)

    def objects(self, subject: IRI, predicate: IRI) -> list[Term]:
        found = [t.object for t in self.triples if t.subject == subject and t.predicate == predicate]
        return sorted(found, key=_term_key)


def _check_triple(t: Triple) -> None:
    if not isinstance(t.subject, IRI) or not isinstance(t.predicate, IRI):
        raise TypeError(f"subject and predicate must be IRIs: {t!r}")
    if not isinstance(t.object, (IRI, Literal)):
        raise TypeError(f"object must be an IRI or Literal: {t!r}")


# -- writer ------------------------------------------------------------------


def _escape(text: str) -> str:
    return (
        text.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\n", "\\n")
        .replace("\r", "\\r")
        .replace("\t", "\\t")
    )


class _Abbreviator:
    def __init__(self, prefixes: Mapping[str, str]) -> None:
        # longest namespace wins; equal namespaces resolve to the smallest label
        self._order = sorted(prefixes.items(), key=lambda kv: (-len(kv[1]), kv[0]))

    def iri(self, value: str) -> str:
        for label, ns in self._order:
            if value.startswith(ns) and _LOCAL_NAME.match(value[len(ns):]):
                return f"{label}:{value[len(ns):]}"
        return f"<{value}>"

    def term(self, term: Term) -> str:
        if isinstance(term, IRI):
            return self.iri(term.value)
        if term.datatype == XSD_INTEGER:
            return term.lexical
        text = f'"{_escape(term.lexical)}"'
        if term.datatype is not None:
            text += "^^" + self.iri(term.datatype)
        return text


def write_turtle(graph: Graph) -> str:
    """Serialize ``graph`` deterministically.

    Subjects are sorted by IRI, ``rdf:type`` comes first (written ``a``) and
    the remaining predicates follow in IRI order; objects are sorted too.
    Equal graphs always produce byte-identical text.
    """
    abbr = _Abbreviator(graph.prefixes)
    lines = [f"@prefix {label}: <{ns}> ." for label, ns in sorted(graph.prefixes.items())]

    by_subject: dict[IRI, dict[IRI, list[Term]]] = {}
    for t in graph.triples:
        by_subject.setdefault(t.subject, {}).setdefault(t.predicate, []).append(t.object)

    for subject in sorted(by_subject):
        preds = by_subject[subject]
        ordered = sorted(preds, key=lambda p: (p.value != RDF_TYPE, p.value))
        chunks = []
        for p in ordered:
            verb = "a" if p.value == RDF_TYPE else abbr.iri(p.value)
            objs = " , ".join(abbr.term(o) for o in sorted(preds[p], key=_term_key))
            chunks.append(f"{verb} {objs}")
        lines.append("")
        lines.append(abbr.iri(subject.value) + " " + " ;\n    ".join(chunks) + " .")
    return "\n".join(lines) + "\n"


# -- reader ------------------------------------------------------------------


class TurtleError(ValueError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class TurtleSyntaxError(TurtleError):
    pass


class UnsupportedTurtleError(TurtleError):
    pass


class _Tok(NamedTuple):
    kind: str
    value: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<long>\"\"\"|''')
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<sstring>'(?:[^'\\\n]|\\.)*')
  | (?P<iriref><[^<>"{}|^`\\\s]*>)
  | (?P<directive>@[A-Za-z]+)
  | (?P<dtmark>\^\^)
  | (?P<bnode>_:[^\s;,.]*|\[)
  | (?P<collection>\()
  | (?P<number>[+-]?(?:[0-9]*\.[0-9]+|[0-9]+)(?:[eE][+-]?[0-9]+)?)
  | (?P<pname>(?:[A-Za-z][A-Za-z0-9_\-.]*)?:(?:[A-Za-z0-9_](?:[A-Za-z0-9_\-.]*[A-Za-z0-9_\-])?)?)
  | (?P<word>[A-Za-z][A-Za-z0-9_\-]*)
  | (?P<punct>[;,.])
    """,
    re.VERBOSE,
)

_UNSUPPORTED = {
    "long": "long (triple-quoted) strings",
    "sstring": "single-quoted strings",
    "bnode": "blank nodes",
    "collection": "collections",
}

_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "r": "\r", "t": "\t"}


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise TurtleSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind in _UNSUPPORTED:
            raise UnsupportedTurtleError(f"{_UNSUPPORTED[kind]} are not supported", line, col)
        if kind not in ("ws", "comment"):
            toks.append(_Tok(kind, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rindex("\n") + 1
        pos = m.end()
    return toks


def _unescape(body: str, tok: _Tok) -> str:
    out = []
    i = 0
    while i < len(body):
        c = body[i]
        if c == "\\":
            nxt = body[i + 1]
            if nxt not in _ESCAPES:
                raise UnsupportedTurtleError(f"escape sequence \\{nxt} is not supported", tok.line, tok.col + i + 1)
            out.append(_ESCAPES[nxt])
            i += 2
        else:
            out.append(c)
            i += 1
    return "".join(out)


class _Parser:
    def __init__(self, text: str, fallback: Mapping[str, str]) -> None:
        self.toks = _tokenize(text)
        self.i = 0
        self.prefixes: dict[str, str] = {}
        self.fallback = fallback
        self.triples: set[Triple] = set()
        lines = text.split("\n")
        self.eof = (len(lines), len(lines[-1]) + 1)

    def peek(self) -> _Tok | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self, what: str) -> _Tok:
        tok = self.peek()
        if tok is None:
            raise TurtleSyntaxError(f"unexpected end of input at end of statement, expected {what}", *self.eof)
        self.i += 1
        return tok

    def expect_punct(self, char: str, what: str) -> None:
        tok = self.next(what)
        if tok.kind != "punct" or tok.value != char:
            raise TurtleSyntaxError(f"expected {what}, found {tok.value!r}", tok.line, tok.col)

    def parse(self) -> Graph:
        while self.peek() is not None:
            tok = self.peek()
            if tok.kind == "directive":
                self.directive()
            elif tok.kind == "word" and tok.value.upper() in ("PREFIX", "BASE"):
                raise UnsupportedTurtleError(f"SPARQL-style {tok.value} is not supported", tok.line, tok.col)
            else:
                self.statement()
        return Graph(self.triples, self.prefixes)

    def directive(self) -> None:
        tok = self.next("directive")
        if tok.value != "@prefix":
            raise UnsupportedTurtleError(f"{tok.value} is not supported", tok.line, tok.col)
        label = self.next("prefix label")
        if label.kind != "pname" or not label.value.endswith(":") or label.value.count(":") != 1:
            raise TurtleSyntaxError(f"expected prefix label, found {label.value!r}", label.line, label.col)
        ns = self.next("namespace IRI")
        if ns.kind != "iriref":
            raise TurtleSyntaxError(f"expected namespace IRI, found {ns.value!r}", ns.line, ns.col)
        self.prefixes[label.value[:-1]] = self._absolute(ns)
        self.expect_punct(".", "'.' after @prefix")

    def _absolute(self, tok: _Tok) -> str:
        value = tok.value[1:-1]
        if not is_absolute_iri(value):
            raise UnsupportedTurtleError(f"relative IRI <{value}> is not supported", tok.line, tok.col)
        return value

    def iri(self, tok: _Tok) -> IRI:
        if tok.kind == "iriref":
            return IRI(self._absolute(tok))
        if tok.kind == "pname":
            label, local = tok.value.split(":", 1)
            ns = self.prefixes.get(label, self.fallback.get(label))
            if ns is None:
                raise TurtleSyntaxError(f"undeclared prefix {label!r}", tok.line, tok.col)
            return IRI(ns + local)
        raise TurtleSyntaxError(f"expected IRI, found {tok.value!r}", tok.line, tok.col)

    def obj(self) -> Term:
        tok = self.next("object")
        if tok.kind == "string":
            lexical = _unescape(tok.value[1:-1], tok)
            after = self.peek()
            if after is not None and after.kind == "dtmark":
                self.i += 1
                dt = self.iri(self.next("datatype IRI"))
                return self._literal(lexical, dt.value, tok)
            if after is not None and after.kind == "directive":
                raise UnsupportedTurtleError("language tags are not supported", after.line, after.col)
            return Literal(lexical)
        if tok.kind == "number":
            if not _INTEGER.match(tok.value):
                raise UnsupportedTurtleError(f"non-integer number {tok.value!r} is not supported", tok.line, tok.col)
            return Literal(tok.value, XSD_INTEGER)
        if tok.kind == "word":
            if tok.value in ("true", "false"):
                raise UnsupportedTurtleError("boolean literals are not supported", tok.line, tok.col)
            raise TurtleSyntaxError(f"unexpected word {tok.value!r}", tok.line, tok.col)
        return self.iri(tok)

    def _literal(self, lexical: str, datatype: str, tok: _Tok) -> Literal:
        try:
            return Literal(lexical, datatype)
        except ValueError as exc:
            raise TurtleSyntaxError(str(exc), tok.line, tok.col) from None

    def statement(self) -> None:
        subject = self.iri(self.next("subject"))
        while True:
            ptok = self.next("predicate")
            predicate = IRI(RDF_TYPE) if (ptok.kind == "word" and ptok.value == "a") else self.iri(ptok)
            while True:
                self.triples.add(Triple(subject, predicate, self.obj()))
                sep = self.next("',', ';' or '.' at end of statement")
                if sep.kind != "punct":
                    raise TurtleSyntaxError(
                        f"expected ',', ';' or '.' at end of statement, found {sep.value!r}", sep.line, sep.col
                    )
                if sep.value == ",":
                    continue
                break
            if sep.value == ".":
                return
            # ';' may be repeated or directly followed by '.'
            while (nxt := self.peek()) is not None and nxt.kind == "punct" and nxt.value == ";":
                self.i += 1
            nxt = self.peek()
            if nxt is not None and nxt.kind == "punct" and nxt.value == ".":
                self.i += 1
                return


def parse_turtle(text: str, fallback_prefixes: Mapping[str, str] | None = None) -> Graph:
    """Parse the supported Turtle subset into a :class:`Graph`.

    Prefixes used without an ``@prefix`` directive resolve against
    ``fallback_prefixes`` (the built-in table by default), which lets bare
    listings such as ``ex:a a oa:Annotation .`` load without a header.
    The returned graph's prefix map holds only the declared prefixes.
    """
    if fallback_prefixes is None:
        fallback_prefixes = builtin_prefixes()
    return _Parser(text, fallback_prefixes).parse()
