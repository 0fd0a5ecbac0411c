"""Bundled classification corpus: the 58 four-dimensional associative classes.

Each class is one definition file; ``index.json`` lists them in class order
together with the dimensions printed in the source tables.  Those numbers are
metadata for comparison only and never feed into a computation.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping

from ..algebra import ParameterBinding, StructureConstants
from ..errors import AlgkitError, CorpusError
from ..parsing import parse_algebra

ENV_VAR = "ALGKIT_CORPUS_DIR"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    definition: str
    parameters: tuple[ParameterBinding, ...]
    expected_dim_der: int | None
    expected_dim_centroid: int | None

    @property
    def index(self) -> int:
        """Class number taken from the trailing digits of the name."""
        m = re.search(r"(\d+)$", self.name)
        return int(m.group(1)) if m else 0

    def algebra(self, overrides: Mapping[str, object] | None = None) -> StructureConstants:
        return parse_algebra(self.definition, name=self.name, overrides=overrides)


def default_corpus_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(str(resources.files(__package__).joinpath("data")))


def load_corpus(path: str | os.PathLike | None = None, strict: bool = True) -> list[CorpusEntry]:
    """Read ``index.json`` and every definition file it lists, in index order.

    With ``strict=False`` an unparsable definition is kept (with no
    parameters) so that a report can record the failure for that entry alone.
    """
    root = Path(path) if path is not None else default_corpus_dir()
    index_file = root / "index.json"
    try:
        index = json.loads(index_file.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise CorpusError(f"corpus index not found: {index_file}") from exc
    except json.JSONDecodeError as exc:
        raise CorpusError(f"corpus index is not valid JSON: {index_file}: {exc}") from exc

    entries = []
    seen = set()
    for item in index["entries"]:
        name = item["name"]
        if name in seen:
            raise CorpusError(f"duplicate corpus entry {name}")
        seen.add(name)
        try:
            text = (root / item["file"]).read_text(encoding="utf-8")
        except OSError as exc:
            raise CorpusError(f"{name}: cannot read {item['file']}: {exc}") from exc
        try:
            sc = parse_algebra(text, name=name)
        except AlgkitError as exc:
            if strict:
                raise CorpusError(f"{name}: {exc}") from exc
            sc = None
        entries.append(CorpusEntry(name, text, sc.parameters if sc else (),
                                   item.get("expected_dim_der"), item.get("expected_dim_centroid")))
    return entries


def get_entry(name: str, path: str | os.PathLike | None = None) -> CorpusEntry:
    for e in load_corpus(path):
        if e.name == name:
            return e
    raise KeyError(name)
