"""Published JSON schemas for the CLI's JSON output."""

import json
from importlib import resources


def load_schema(name: str) -> dict:
    """``name`` is ``"report"`` or ``"space"``."""
    return json.loads(resources.files(__package__).joinpath(f"{name}.schema.json").read_text(encoding="utf-8"))
