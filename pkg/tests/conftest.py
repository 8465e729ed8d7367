from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from redlex.pipeline import default_data_file


@pytest.fixture(scope="session")
def mini_corpus_path() -> Path:
    return default_data_file("mini_corpus.jsonl")


@pytest.fixture()
def write_corpus(tmp_path):
    """Write records to a JSONL transcript file and return its path."""

    def _write(records, name="corpus.jsonl"):
        path = tmp_path / name
        with path.open("w", encoding="utf-8") as fh:
            for record in records:
                fh.write(json.dumps(record, ensure_ascii=False) + "\n")
        return path

    return _write
