"""Versioned JSON documents for computed bases.

Output is byte-deterministic: keys are sorted and polynomials are written
in their canonical text form, which reparses to an equal polynomial.
"""

from __future__ import annotations

import json
from typing import Sequence

from .algebra import Alphabet, Polynomial
from .errors import ParseError
from .groebner import RelationSet
from .parse import parse_poly

SCHEMA_NAME = "gdnbasis/basis"
SCHEMA_VERSION = 1

BASIS_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "version", "generators", "mode", "status", "relations"],
    "properties": {
        "schema": {"const": SCHEMA_NAME},
        "version": {"const": SCHEMA_VERSION},
        "generators": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "mode": {"enum": ["stage", "cap", "input"]},
        "stage": {"type": "integer", "minimum": 0},
        "cap": {"type": "integer", "minimum": 0},
        "status": {"type": "string"},
        "relations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["poly", "leading", "dx_length"],
                "properties": {
                    "poly": {"type": "string"},
                    "leading": {"type": "string"},
                    "dx_length": {"type": "integer"},
                    "provenance": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}


def basis_document(
    basis: RelationSet,
    *,
    mode: str,
    status: str,
    stage: int | None = None,
    cap: int | None = None,
    provenance: Sequence[str] | None = None,
) -> dict:
    A = basis.alphabet
    rels = []
    for k, r in enumerate(basis):
        item = {
            "poly": A.format(r),
            "leading": A.format_monomial(r.lm),
            "dx_length": r.lm.dx_length,
        }
        if provenance is not None:
            item["provenance"] = provenance[k]
        rels.append(item)
    doc = {
        "schema": SCHEMA_NAME,
        "version": SCHEMA_VERSION,
        "generators": list(A.names),
        "mode": mode,
        "status": status,
        "relations": rels,
    }
    if stage is not None:
        doc["stage"] = stage
    if cap is not None:
        doc["cap"] = cap
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads_basis(text: str) -> tuple[RelationSet, dict]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err.msg}", err.lineno, err.colno) from None
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA_NAME:
        raise ParseError(f"not a {SCHEMA_NAME} document")
    if doc.get("version") != SCHEMA_VERSION:
        raise ParseError(f"unsupported version {doc.get('version')!r}")
    A = Alphabet(doc["generators"])
    polys: list[Polynomial] = [parse_poly(r["poly"], A) for r in doc["relations"]]
    return RelationSet(A, polys), doc


__all__ = ["SCHEMA_NAME", "SCHEMA_VERSION", "BASIS_SCHEMA", "basis_document", "dumps", "loads_basis"]
