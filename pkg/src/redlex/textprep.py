"""Text normalization, tokenization, stopword removal, and lemmatization.

The preprocessing chain is deliberately simple and fully deterministic:
lowercase, strip punctuation and digits, split on whitespace, drop stopwords,
then map each surface form onto a (lemma, part-of-speech) pair through a
lookup table.  The lemma table stands in for a statistical tagger: it is a
plain TSV that any morphological tool can export, which keeps runs
reproducible and the pipeline language-agnostic.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, NamedTuple


class Upos(str, Enum):
    NOUN = "NOUN"
    VERB = "VERB"
    ADJ = "ADJ"
    OTHER = "OTHER"

    @classmethod
    def parse(cls, tag: str) -> "Upos":
        # Anything outside the three content classes collapses to OTHER.
        try:
            return cls(tag.strip().upper())
        except ValueError:
            return cls.OTHER


class Token(NamedTuple):
    surface: str
    position: int


class LemmaItem(NamedTuple):
    lemma: str
    upos: Upos


@dataclass(frozen=True)
class LemmaSequence:
    doc_id: str
    items: tuple[LemmaItem, ...]

    def __len__(self) -> int:
        return len(self.items)

    def lemmas(self) -> tuple[str, ...]:
        return tuple(item.lemma for item in self.items)


@dataclass(frozen=True)
class LemmaLexicon:
    """Surface form -> (lemma, upos) lookup table.

    Keys must be normalized forms (lowercase, accents kept), i.e. whatever
    :func:`normalize` produces.
    """

    entries: dict[str, LemmaItem]

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, surface: str) -> LemmaItem | None:
        return self.entries.get(surface)


# Punctuation (non-word, non-space) or digit/underscore runs become spaces.
_NON_LETTER = re.compile(r"[^\w\s]|[\d_]+", re.UNICODE)
_SPACES = re.compile(r"\s+")


def _strip_diacritics(text: str) -> str:
    decomposed = unicodedata.normalize("NFD", text)
    return "".join(ch for ch in decomposed if unicodedata.category(ch) != "Mn")


def normalize(text: str, fold_diacritics: bool = False) -> str:
    """Lowercase, replace punctuation/digit runs with spaces, collapse spaces.

    Diacritics are preserved by default because the lexicon keys carry them;
    ``fold_diacritics`` strips them for degraded (unaccented) transcripts.
    """
    text = text.lower()
    if fold_diacritics:
        text = _strip_diacritics(text)
    text = _NON_LETTER.sub(" ", text)
    return _SPACES.sub(" ", text).strip()


def tokenize(text: str) -> list[Token]:
    """Whitespace-split an already normalized text into positioned tokens."""
    return [Token(surface, i) for i, surface in enumerate(text.split())]


def remove_stopwords(tokens: Iterable[Token], stoplist: set[str]) -> list[Token]:
    """Drop stoplist members and re-index the survivors consecutively.

    Re-indexing means that pairs formed afterwards span the removed words,
    which is the stopwords-first ordering used for co-occurrence extraction.
    """
    kept = (tok.surface for tok in tokens if tok.surface not in stoplist)
    return [Token(surface, i) for i, surface in enumerate(kept)]


def lemmatize(tokens: Iterable[Token], lexicon: LemmaLexicon, doc_id: str = "") -> LemmaSequence:
    """Map tokens through the lexicon; unknown surfaces pass through as OTHER."""
    items = []
    for tok in tokens:
        entry = lexicon.get(tok.surface)
        if entry is None:
            entry = LemmaItem(tok.surface, Upos.OTHER)
        items.append(entry)
    return LemmaSequence(doc_id=doc_id, items=tuple(items))


def lexicon_coverage(tokens: Iterable[Token], lexicon: LemmaLexicon) -> float:
    """Fraction of tokens found in the lemma lexicon (1.0 for empty input)."""
    total = 0
    known = 0
    for tok in tokens:
        total += 1
        if lexicon.get(tok.surface) is not None:
            known += 1
    return known / total if total else 1.0


def load_stopwords(path) -> set[str]:
    """One word per line, UTF-8; ``#`` starts a comment."""
    words: set[str] = set()
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            words.add(line)
    return words


def load_lemma_lexicon(path) -> LemmaLexicon:
    """TSV with columns ``surface<TAB>lemma<TAB>upos``."""
    entries: dict[str, LemmaItem] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"{path}:{lineno}: expected 3 tab-separated fields")
        surface, lemma, tag = (p.strip() for p in parts)
        if not surface or not lemma:
            raise ValueError(f"{path}:{lineno}: empty surface or lemma")
        entries[surface] = LemmaItem(lemma, Upos.parse(tag))
    return LemmaLexicon(entries=entries)


def preprocess(
    text: str,
    stoplist: set[str],
    lexicon: LemmaLexicon,
    doc_id: str = "",
    fold_diacritics: bool = False,
) -> LemmaSequence:
    """Full chain: normalize -> tokenize -> remove stopwords -> lemmatize."""
    tokens = tokenize(normalize(text, fold_diacritics=fold_diacritics))
    return lemmatize(remove_stopwords(tokens, stoplist), lexicon, doc_id=doc_id)
