"""Email corpora: a directory of plaintext files, one message per file.

A 200-message synthetic corpus ships with the package for reproducible
tests; real mail folders (e.g. the Enron sent-mail dumps) can be pointed
at directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path


class CorpusError(Exception):
    pass


class EmptyCorpus(CorpusError):
    pass


@dataclass(frozen=True)
class EmailCorpus:
    messages: tuple
    source: str

    def __post_init__(self):
        if not self.messages:
            raise EmptyCorpus(f"no messages in {self.source}")
        if any(not m for m in self.messages):
            raise ValueError("corpus messages must be non-empty")

    def __len__(self):
        return len(self.messages)


def load_corpus(path) -> EmailCorpus:
    """Load every regular file under ``path`` (sorted by name) as a message."""
    root = Path(path)
    if not root.is_dir():
        raise CorpusError(f"not a directory: {root}")
    messages = []
    for f in sorted(root.rglob("*")):
        if f.is_file():
            data = f.read_bytes()
            if data:
                messages.append(data)
    if not messages:
        raise EmptyCorpus(f"no non-empty files under {root}")
    return EmailCorpus(messages=tuple(messages), source=str(root))


def bundled_corpus() -> EmailCorpus:
    ref = resources.files("petcarbon").joinpath("data/corpus")
    with resources.as_file(ref) as path:
        return load_corpus(path)
