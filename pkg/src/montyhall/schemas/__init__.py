"""Published JSON schemas for every wire format, plus a validator loader."""

from __future__ import annotations

import json
from importlib import resources

SCHEMA_NAMES = (
    "defs",
    "matrix_output",
    "solve_report",
    "elimination_trace",
    "minimax_sets",
    "nash_result",
    "best_response",
    "sim_result",
    "paper_report",
    "session",
)


def load_schema(name: str) -> dict:
    """Load one shipped schema document by short name (e.g. "solve_report")."""
    if name not in SCHEMA_NAMES:
        raise ValueError(f"unknown schema {name!r}; expected one of {SCHEMA_NAMES}")
    path = resources.files(__package__).joinpath(f"{name}.schema.json")
    return json.loads(path.read_text())


def validator_for(name: str, pointer: str | None = None):
    """A Draft 2020-12 validator for one schema, cross-file refs resolved.

    `pointer` selects a subschema, e.g. validator_for("session",
    "$defs/advice").  Imports jsonschema lazily; it is only needed by
    callers that validate.
    """
    import jsonschema
    from referencing import Registry, Resource

    resources_list = [
        (doc["$id"], Resource.from_contents(doc))
        for doc in (load_schema(n) for n in SCHEMA_NAMES)
    ]
    registry = Registry().with_resources(resources_list)
    if pointer is None:
        schema: dict = load_schema(name)
    else:
        schema = {"$ref": f"urn:montyhall:{name}#/{pointer}"}
    return jsonschema.Draft202012Validator(schema, registry=registry)
