"""Paths to the bundled sample data.

The seed dictionary is a small hand-picked sample (~40 entries) meant for
demos and tests, not a complete inventory of the field; the demo corpus is
synthetic.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def _data_path(name: str) -> Path:
    return Path(str(resources.files("algoscope.data").joinpath(name)))


def seed_dictionary_path() -> Path:
    return _data_path("seed_dictionary.json")


def demo_corpus_path() -> Path:
    return _data_path("demo_corpus.jsonl")
