"""Transcript corpus loading, filtering, and role/subcase bookkeeping.

A corpus is a flat collection of transcribed hearing documents, each tagged
with the territorial subcase it belongs to and the procedural role of the
speaker (victim or appearer).  Documents arrive as JSON-lines files; this
module validates them, normalizes the metadata vocabulary, and answers the
count queries the rest of the pipeline needs (who is eligible for a
role-split analysis, how many documents per cell, and so on).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Iterator, Optional, Sequence


class Subcase(str, Enum):
    ANTIOQUIA = "Antioquia"
    CASANARE = "Casanare"
    COSTA_CARIBE = "CostaCaribe"
    HUILA = "Huila"
    META = "Meta"
    NORTE_DE_SANTANDER = "NorteDeSantander"
    UNASSIGNED = "Unassigned"


class Role(str, Enum):
    VICTIM = "Victim"
    APPEARER = "Appearer"
    UNKNOWN = "Unknown"


#: The six territorial subcases, in a fixed reporting order.
REGIONS: tuple[Subcase, ...] = (
    Subcase.ANTIOQUIA,
    Subcase.CASANARE,
    Subcase.COSTA_CARIBE,
    Subcase.HUILA,
    Subcase.META,
    Subcase.NORTE_DE_SANTANDER,
)

# Wire strings as they appear in transcript files.  Lookup is case- and
# whitespace-insensitive; both the display form ("Costa Caribe") and the
# compact form ("CostaCaribe") are accepted.
_SUBCASE_WIRE = {
    "antioquia": Subcase.ANTIOQUIA,
    "casanare": Subcase.CASANARE,
    "costa caribe": Subcase.COSTA_CARIBE,
    "costacaribe": Subcase.COSTA_CARIBE,
    "huila": Subcase.HUILA,
    "meta": Subcase.META,
    "norte de santander": Subcase.NORTE_DE_SANTANDER,
    "nortedesantander": Subcase.NORTE_DE_SANTANDER,
}

_SUBCASE_DISPLAY = {
    Subcase.ANTIOQUIA: "Antioquia",
    Subcase.CASANARE: "Casanare",
    Subcase.COSTA_CARIBE: "Costa Caribe",
    Subcase.HUILA: "Huila",
    Subcase.META: "Meta",
    Subcase.NORTE_DE_SANTANDER: "Norte de Santander",
}

_ROLE_WIRE = {
    "victima": Role.VICTIM,
    "víctima": Role.VICTIM,
    "compareciente": Role.APPEARER,
}

_ROLE_DISPLAY = {
    Role.VICTIM: "victima",
    Role.APPEARER: "compareciente",
}


class CorpusError(Exception):
    """Raised for unreadable paths, malformed records, or duplicate ids."""


@dataclass(frozen=True)
class Document:
    """One transcript plus its metadata.

    ``skipped`` marks documents whose text is empty; they are retained for
    bookkeeping but excluded from analysis.
    """

    id: str
    title: str
    subcase: Subcase
    role: Role
    text: str
    skipped: bool = False


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...]
    source_path: str = ""

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)

    def count(self, subcase: Optional[Subcase] = None, role: Optional[Role] = None) -> int:
        return sum(1 for _ in _select(self.documents, subcase, role))

    def subcase_role_counts(self) -> dict[tuple[Subcase, Role], int]:
        counts: dict[tuple[Subcase, Role], int] = {}
        for doc in self.documents:
            key = (doc.subcase, doc.role)
            counts[key] = counts.get(key, 0) + 1
        return counts


def _select(docs: Sequence[Document], subcase: Optional[Subcase], role: Optional[Role]):
    for doc in docs:
        if subcase is not None and doc.subcase is not subcase:
            continue
        if role is not None and doc.role is not role:
            continue
        yield doc


def parse_subcase(value) -> Subcase:
    """Map a wire value (region string or None) onto the subcase enum."""
    if value is None:
        return Subcase.UNASSIGNED
    if isinstance(value, str):
        sc = _SUBCASE_WIRE.get(" ".join(value.lower().split()))
        if sc is not None:
            return sc
    raise ValueError(f"unknown subcase {value!r}")


def parse_role(value) -> Role:
    if value is None:
        return Role.UNKNOWN
    if isinstance(value, str):
        role = _ROLE_WIRE.get(value.strip().lower())
        if role is not None:
            return role
    raise ValueError(f"unknown role {value!r}")


def subcase_display(subcase: Subcase) -> Optional[str]:
    """Region string used on the wire; None for unassigned documents."""
    return _SUBCASE_DISPLAY.get(subcase)


def _parse_record(record: dict, where: str) -> Document:
    doc_id = record.get("id")
    if not isinstance(doc_id, str) or not doc_id:
        raise CorpusError(f"{where}: missing or empty 'id'")
    title = record.get("title") or ""
    if not isinstance(title, str):
        raise CorpusError(f"{where}: 'title' must be a string")
    try:
        subcase = parse_subcase(record.get("subcase"))
        role = parse_role(record.get("role"))
    except ValueError as exc:
        raise CorpusError(f"{where}: {exc}") from None
    text = record.get("text")
    if text is None:
        text = ""
    if not isinstance(text, str):
        raise CorpusError(f"{where}: 'text' must be a string")
    return Document(
        id=doc_id,
        title=title,
        subcase=subcase,
        role=role,
        text=text,
        skipped=not text.strip(),
    )


def _iter_corpus_files(path: Path) -> list[Path]:
    if path.is_file():
        return [path]
    if path.is_dir():
        files = sorted(p for p in path.iterdir() if p.suffix in (".jsonl", ".json"))
        if not files:
            raise CorpusError(f"no .jsonl/.json files under {path}")
        return files
    raise CorpusError(f"corpus path does not exist: {path}")


def load_corpus(path) -> Corpus:
    """Load a transcript file or a directory of transcript files.

    The format is one JSON object per line with fields ``id``, ``title``,
    ``subcase``, ``role``, ``text``.  Malformed lines and duplicate ids are
    reported as :class:`CorpusError` with file and line number.
    """
    path = Path(path)
    documents: list[Document] = []
    seen: set[str] = set()
    for file in _iter_corpus_files(path):
        try:
            lines = file.read_text(encoding="utf-8").splitlines()
        except OSError as exc:
            raise CorpusError(f"cannot read {file}: {exc}") from exc
        for lineno, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            where = f"{file.name}:{lineno}"
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{where}: invalid JSON ({exc.msg})") from None
            if not isinstance(record, dict):
                raise CorpusError(f"{where}: record must be a JSON object")
            doc = _parse_record(record, where)
            if doc.id in seen:
                raise CorpusError(f"{where}: duplicate document id {doc.id!r}")
            seen.add(doc.id)
            documents.append(doc)
    return Corpus(documents=tuple(documents), source_path=str(path))


def save_corpus(corpus: Corpus, path) -> None:
    """Write a corpus back out in the transcript wire format (one file)."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        for doc in corpus:
            record = {
                "id": doc.id,
                "title": doc.title,
                "subcase": subcase_display(doc.subcase),
                "role": _ROLE_DISPLAY.get(doc.role),
                "text": doc.text,
            }
            fh.write(json.dumps(record, ensure_ascii=False, sort_keys=True))
            fh.write("\n")


def filter_corpus(
    corpus: Corpus,
    subcase: Optional[Subcase] = None,
    role: Optional[Role] = None,
) -> Corpus:
    """Documents matching all given criteria, in their original order."""
    return replace(corpus, documents=tuple(_select(corpus.documents, subcase, role)))


def role_analysis_eligibility(
    corpus: Corpus, min_docs: int = 3
) -> list[tuple[Subcase, Role, bool]]:
    """Which (subcase, role) cells carry enough documents for a role split.

    A cell is eligible iff it holds at least ``min_docs`` documents.  The
    default of 3 keeps thin cells (a role with one or two hearings in a
    region) out of the comparative analyses.
    """
    if min_docs < 1:
        raise ValueError("min_docs must be >= 1")
    counts = corpus.subcase_role_counts()
    rows = []
    for subcase in REGIONS:
        for role in (Role.APPEARER, Role.VICTIM):
            n = counts.get((subcase, role), 0)
            rows.append((subcase, role, n >= min_docs))
    return rows
