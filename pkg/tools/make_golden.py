#!/usr/bin/env python3
"""Regenerate the golden report used by the end-to-end determinism check.

Mirrors the acceptance test exactly: the bundled mini corpus is copied into a
scratch directory and analysed with a relative corpus path, so the echoed
config is machine-independent.
"""

from __future__ import annotations

import os
import shutil
import tempfile
from pathlib import Path

from redlex.pipeline import AnalysisConfig, default_data_file, run_all

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "data" / "golden_report.json"


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        cwd = os.getcwd()
        try:
            os.chdir(tmp)
            shutil.copy(default_data_file("mini_corpus.jsonl"), "mini_corpus.jsonl")
            bundle = run_all(AnalysisConfig(corpus_path="mini_corpus.jsonl", seed=0))
        finally:
            os.chdir(cwd)
    GOLDEN.parent.mkdir(parents=True, exist_ok=True)
    GOLDEN.write_text(bundle.to_json() + "\n", encoding="utf-8", newline="\n")
    print(f"wrote {GOLDEN} ({GOLDEN.stat().st_size} bytes)")


if __name__ == "__main__":
    main()
