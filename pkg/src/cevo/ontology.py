"""Event-class hierarchy and verb lexicon.

A :class:`Lexicon` is a rooted DAG of :class:`EventClass` nodes (the root is
the generic ``Event``) plus a table of :class:`VerbEntry` lemmas, each a
member of one or more classes.  Construction never fails; call
:func:`validate` to get the list of broken invariants.  Query functions
assume a valid lexicon.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .rdf import CEVO_BASE, cevo_namespace

ROOT = "Event"
ROOT_LABEL = "generic event"
ROOT_COMMENT = "something that happens"
MAIN_VERB = "MainVerb"

CLASS_ID = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def is_valid_lemma(lemma: str) -> bool:
    return bool(lemma) and lemma == lemma.lower() and not any(ch.isspace() for ch in lemma)


class LexiconError(LookupError):
    pass


class UnknownLemmaError(LexiconError):
    def __init__(self, lemma: str) -> None:
        super().__init__(f"unknown lemma: {lemma!r}")
        self.lemma = lemma


class UnknownClassError(LexiconError):
    def __init__(self, class_id: str) -> None:
        super().__init__(f"unknown class: {class_id!r}")
        self.class_id = class_id


@dataclass(frozen=True)
class EventClass:
    id: str
    label: str = ""
    comment: str = ""
    parents: frozenset[str] = frozenset()
    meaning_properties: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "parents", frozenset(self.parents))
        object.__setattr__(self, "meaning_properties", tuple(self.meaning_properties))
        if not self.label:
            object.__setattr__(self, "label", self.id.replace("_", " ").lower())


def root_class() -> EventClass:
    return EventClass(ROOT, ROOT_LABEL, ROOT_COMMENT)


@dataclass(frozen=True)
class VerbEntry:
    lemma: str
    classes: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "classes", frozenset(self.classes))


@dataclass(frozen=True)
class Violation:
    kind: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.subject}: {self.message}"


@dataclass(frozen=True, eq=False)
class Lexicon:
    """Candidate or validated lexicon.

    ``classes`` and ``verbs`` are kept as sequences so that duplicate ids in a
    candidate survive until :func:`validate` reports them.
    """

    classes: tuple[EventClass, ...] = ()
    verbs: tuple[VerbEntry, ...] = ()
    base_iri: str = CEVO_BASE

    def __post_init__(self) -> None:
        object.__setattr__(self, "classes", tuple(self.classes))
        object.__setattr__(self, "verbs", tuple(self.verbs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return (
            self.base_iri == other.base_iri
            and set(self.classes) == set(other.classes)
            and set(self.verbs) == set(other.verbs)
        )

    __hash__ = None  # type: ignore[assignment]

    @cached_property
    def class_map(self) -> dict[str, EventClass]:
        return {c.id: c for c in self.classes}

    @cached_property
    def verb_map(self) -> dict[str, VerbEntry]:
        return {v.lemma: v for v in self.verbs}

    @cached_property
    def namespace(self) -> str:
        return cevo_namespace(self.base_iri)

    def iri(self, local_name: str) -> str:
        return self.namespace + local_name

    def local_name(self, iri: str) -> str | None:
        """Inverse of :meth:`iri`; ``None`` for IRIs outside the namespace."""
        if iri.startswith(self.namespace):
            return iri[len(self.namespace):]
        return None

    @cached_property
    def children(self) -> dict[str, tuple[str, ...]]:
        kids: dict[str, list[str]] = {c.id: [] for c in self.classes}
        for c in self.classes:
            for p in c.parents:
                if p in kids:
                    kids[p].append(c.id)
        return {k: tuple(sorted(v)) for k, v in kids.items()}

    @cached_property
    def depths(self) -> dict[str, int]:
        """Longest path length from the root, for every class."""
        memo: dict[str, int] = {}
        for cid in _topological(self):
            parents = self.class_map[cid].parents
            memo[cid] = 0 if not parents else 1 + max(memo[p] for p in parents)
        return memo

    @cached_property
    def _ancestor_sets(self) -> dict[str, frozenset[str]]:
        memo: dict[str, frozenset[str]] = {}
        for cid in _topological(self):
            acc: set[str] = set()
            for p in self.class_map[cid].parents:
                acc.add(p)
                acc |= memo[p]
            memo[cid] = frozenset(acc)
        return memo

    def ancestor_set(self, class_id: str) -> frozenset[str]:
        self._require_class(class_id)
        return self._ancestor_sets[class_id]

    def depth(self, class_id: str) -> int:
        self._require_class(class_id)
        return self.depths[class_id]

    def _require_class(self, class_id: str) -> None:
        if class_id not in self.class_map:
            raise UnknownClassError(class_id)

    def _require_verb(self, lemma: str) -> VerbEntry:
        try:
            return self.verb_map[lemma]
        except KeyError:
            raise UnknownLemmaError(lemma) from None

    def with_base(self, base_iri: str) -> "Lexicon":
        return Lexicon(self.classes, self.verbs, base_iri)


def _topological(lexicon: Lexicon) -> list[str]:
    # parents before children; assumes an acyclic hierarchy
    order: list[str] = []
    seen: set[str] = set()
    cmap = lexicon.class_map
    for start in sorted(cmap):
        if start in seen:
            continue
        stack = [(start, iter(sorted(cmap[start].parents)))]
        seen.add(start)
        while stack:
            node, it = stack[-1]
            for p in it:
                if p not in seen and p in cmap:
                    seen.add(p)
                    stack.append((p, iter(sorted(cmap[p].parents))))
                    break
            else:
                stack.pop()
                order.append(node)
    return order


# -- validation --------------------------------------------------------------


def _find_cycles(classes: dict[str, EventClass]) -> list[list[str]]:
    """Strongly connected components that contain a cycle (Tarjan)."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    cycles: list[list[str]] = []
    counter = 0

    for start in sorted(classes):
        if start in index:
            continue
        work = [(start, iter(sorted(classes[start].parents)))]
        index[start] = low[start] = counter
        counter += 1
        stack.append(start)
        on_stack.add(start)
        while work:
            node, it = work[-1]
            advanced = False
            for p in it:
                if p not in classes:
                    continue
                if p not in index:
                    index[p] = low[p] = counter
                    counter += 1
                    stack.append(p)
                    on_stack.add(p)
                    work.append((p, iter(sorted(classes[p].parents))))
                    advanced = True
                    break
                if p in on_stack:
                    low[node] = min(low[node], index[p])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == node:
                        break
                if len(comp) > 1 or node in classes[node].parents:
                    cycles.append(sorted(comp))
    return sorted(cycles)


def validate(lexicon: Lexicon) -> list[Violation]:
    """Return every broken lexicon invariant; an empty list means valid."""
    out: list[Violation] = []
    classes: dict[str, EventClass] = {}

    for c in lexicon.classes:
        if c.id in classes:
            out.append(Violation("duplicate-class", c.id, "class id declared more than once"))
            continue
        classes[c.id] = c
        if not CLASS_ID.match(c.id):
            out.append(Violation("invalid-class-id", c.id, "class id must match [A-Za-z_][A-Za-z0-9_]*"))

    root = classes.get(ROOT)
    if root is None:
        out.append(Violation("missing-root", ROOT, "root class Event is absent"))
    else:
        if root.parents:
            out.append(Violation("root-has-parents", ROOT, f"root lists parents {sorted(root.parents)}"))
        if root.label != ROOT_LABEL:
            out.append(Violation("root-label", ROOT, f"root label must be {ROOT_LABEL!r}, got {root.label!r}"))
        if root.comment != ROOT_COMMENT:
            out.append(Violation("root-comment", ROOT, f"root comment must be {ROOT_COMMENT!r}, got {root.comment!r}"))

    for cid, c in sorted(classes.items()):
        if cid == ROOT:
            continue
        if not c.parents:
            out.append(Violation("no-parent", cid, "non-root class has no parent"))
        for p in sorted(c.parents):
            if p not in classes:
                out.append(Violation("dangling-parent", cid, f"parent {p!r} does not exist"))

    for comp in _find_cycles(classes):
        out.append(Violation("cycle", comp[0], "parent cycle through " + " -> ".join(comp)))

    reachable: set[str] = set()
    if root is not None:
        kids: dict[str, list[str]] = {}
        for cid, c in classes.items():
            for p in c.parents:
                kids.setdefault(p, []).append(cid)
        todo = [ROOT]
        while todo:
            n = todo.pop()
            if n in reachable:
                continue
            reachable.add(n)
            todo.extend(kids.get(n, ()))
    for cid in sorted(classes):
        if cid not in reachable:
            out.append(Violation("unreachable", cid, "class is not reachable from root Event"))

    lemmas: set[str] = set()
    for v in lexicon.verbs:
        if v.lemma in lemmas:
            out.append(Violation("duplicate-verb", v.lemma, "lemma declared more than once"))
            continue
        lemmas.add(v.lemma)
        if not is_valid_lemma(v.lemma):
            out.append(Violation("invalid-lemma", v.lemma, "lemma must be non-empty, lowercase, without whitespace"))
        if not v.classes:
            out.append(Violation("empty-verb-classes", v.lemma, "verb belongs to no class"))
        for c in sorted(v.classes):
            if c not in classes:
                out.append(Violation("dangling-verb-class", v.lemma, f"class {c!r} does not exist"))
    return out


# -- queries -----------------------------------------------------------------


def classes_of_verb(lexicon: Lexicon, lemma: str, transitive: bool = False) -> list[str]:
    """Classes a verb belongs to, optionally closed under ancestors (root excluded)."""
    entry = lexicon._require_verb(lemma)
    found = set(entry.classes)
    if transitive:
        for c in entry.classes:
            found |= lexicon.ancestor_set(c)
        found.discard(ROOT)
    return sorted(found)


def verbs_of_class(lexicon: Lexicon, class_id: str, include_subclasses: bool = False) -> list[str]:
    lexicon._require_class(class_id)
    wanted = {class_id}
    if include_subclasses:
        wanted |= descendants(lexicon, class_id)
    return sorted(v.lemma for v in lexicon.verb_map.values() if v.classes & wanted)


def descendants(lexicon: Lexicon, class_id: str) -> set[str]:
    lexicon._require_class(class_id)
    seen: set[str] = set()
    todo = list(lexicon.children[class_id])
    while todo:
        n = todo.pop()
        if n not in seen:
            seen.add(n)
            todo.extend(lexicon.children[n])
    return seen


def ancestors(lexicon: Lexicon, class_id: str) -> list[str]:
    """Proper ancestors, most specific first (by descending depth, then name)."""
    found = lexicon.ancestor_set(class_id)
    return sorted(found, key=lambda c: (-lexicon.depths[c], c))


def deepest_common_class(lexicon: Lexicon, a: str, b: str) -> str:
    """The deepest shared ancestor-or-self of ``a`` and ``b``; ties go to the smaller name."""
    common = (lexicon.ancestor_set(a) | {a}) & (lexicon.ancestor_set(b) | {b})
    return min(common, key=lambda c: (-lexicon.depths[c], c))
