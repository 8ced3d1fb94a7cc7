"""Tokenization, inflection stripping and lexicon-guided main-verb detection."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .ontology import Lexicon, classes_of_verb

VERB = "VERB"
OTHER = "OTHER"
POS_TAGS = (VERB, OTHER)

_WORD = re.compile(r"(?:[^\W_]|['’])+")
_VOWELS = set("aeiou")


@dataclass(frozen=True)
class Token:
    surface: str
    begin: int
    end: int
    pos_hint: str | None = None


@dataclass(frozen=True)
class VerbOccurrence:
    anchor: str
    lemma: str
    begin: int
    end: int
    classes: tuple[str, ...]
    document_iri: str = ""

    @property
    def iri(self) -> str:
        return f"{self.document_iri}#char={self.begin},{self.end}"


def tokenize(document: str) -> list[Token]:
    """Maximal runs of letters, digits and apostrophes, with code-point offsets."""
    return [Token(m.group(), m.start(), m.end()) for m in _WORD.finditer(document)]


def _undouble(stem: str) -> str | None:
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in _VOWELS and stem[-1].isalpha():
        return stem[:-1]
    return None


def lemma_candidates(surface: str) -> list[str]:
    """Possible base forms of ``surface``, most specific first.

    >>> lemma_candidates("says")
    ['says', 'say']
    """
    word = surface.lower().replace("’", "'")
    out = [word]

    def stem(suffix: str) -> str | None:
        # keep at least two characters of stem
        if word.endswith(suffix) and len(word) - len(suffix) >= 2:
            return word[: -len(suffix)]
        return None

    if (s := stem("ies")) is not None:
        out.append(s + "y")
    if (s := stem("es")) is not None:
        out += [s, s + "e"]
    if (s := stem("s")) is not None and not word.endswith("ss"):
        out.append(s)
    if (s := stem("ied")) is not None:
        out.append(s + "y")
    if (s := stem("ed")) is not None:
        out += [s + "e", s]
    for suffix in ("ed", "ing"):
        if (s := stem(suffix)) is not None and (u := _undouble(s)) is not None:
            out.append(u)
    if (s := stem("ing")) is not None:
        out += [s, s + "e"]
        if s.endswith("y") and len(s) >= 2:
            out.append(s[:-1] + "ie")
    return list(dict.fromkeys(out))


def detect_verbs(lexicon: Lexicon, tokens: Iterable[Token], document_iri: str = "") -> list[VerbOccurrence]:
    """Tokens whose first lexicon-known lemma candidate marks them as main verbs.

    Tokens carrying a ``pos_hint`` are only considered when it is ``VERB``;
    without hints every token is a candidate, so noun homographs such as
    "cook" are reported too.
    """
    found = []
    verbs = lexicon.verb_map
    for tok in tokens:
        if tok.pos_hint is not None and tok.pos_hint != VERB:
            continue
        for cand in lemma_candidates(tok.surface):
            if cand in verbs:
                classes = tuple(classes_of_verb(lexicon, cand))
                found.append(VerbOccurrence(tok.surface, cand, tok.begin, tok.end, classes, document_iri))
                break
    return found


class PosFileError(ValueError):
    pass


def read_pos_hints(text: str) -> dict[tuple[int, int], str]:
    """Parse a ``begin end TAG`` sidecar file into an offset-keyed map."""
    hints: dict[tuple[int, int], str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise PosFileError(f"line {lineno}: expected 'begin end TAG'")
        try:
            begin, end = int(parts[0]), int(parts[1])
        except ValueError:
            raise PosFileError(f"line {lineno}: offsets must be integers") from None
        tag = parts[2].upper()
        if tag not in POS_TAGS:
            raise PosFileError(f"line {lineno}: tag must be one of {', '.join(POS_TAGS)}")
        hints[(begin, end)] = tag
    return hints


def load_pos_hints(path: str | Path) -> dict[tuple[int, int], str]:
    return read_pos_hints(Path(path).read_text(encoding="utf-8"))


def apply_pos_hints(tokens: Sequence[Token], hints: dict[tuple[int, int], str]) -> list[Token]:
    """Attach hints to tokens whose offsets match exactly; others stay unhinted."""
    return [Token(t.surface, t.begin, t.end, hints.get((t.begin, t.end), t.pos_hint)) for t in tokens]
