"""JSON Schemas (draft 2020-12) for everything the CLI emits with ``--json``.

The library does not depend on a validator; the test suite checks emitted
documents with ``jsonschema``.
"""
from __future__ import annotations

_NAT = {"type": "integer", "minimum": 0}
_NATS = {"type": "array", "items": _NAT}

DFA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Dfa",
    "type": "object",
    "required": ["alphabet", "states", "initial", "finals", "delta"],
    "additionalProperties": False,
    "properties": {
        "alphabet": {"type": "array", "items": {"type": "string", "minLength": 1, "maxLength": 1},
                     "uniqueItems": True},
        "states": {"type": "integer", "minimum": 1},
        "initial": _NAT,
        "finals": {**_NATS, "uniqueItems": True},
        "delta": {"type": "array", "items": _NATS,
                  "description": "one row per state, one column per alphabet index"},
    },
}

ORDERED_MONOID = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "OrderedMonoid",
    "type": "object",
    "required": ["n", "identity", "mult", "leq", "names"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "identity": _NAT,
        "mult": {"type": "array", "items": _NATS},
        "leq": {"type": "array", "items": {"type": "array", "items": {"type": "boolean"}}},
        "names": {"type": "array", "items": {"type": "string"}},
    },
}

EPSET = {
    "type": "object",
    "required": ["exceptions", "threshold", "period", "residues", "text"],
    "additionalProperties": False,
    "properties": {
        "exceptions": _NATS,
        "threshold": _NAT,
        "period": {"type": "integer", "minimum": 1},
        "residues": _NATS,
        "text": {"type": "string"},
    },
}

_PAIRS = {"type": "array", "items": {"type": "array", "items": _NAT, "minItems": 2, "maxItems": 2}}

ORDER = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "SyntacticOrder",
    "type": "object",
    "required": ["covers", "strict", "names"],
    "additionalProperties": False,
    "properties": {
        "covers": {**_PAIRS, "description": "pairs [x, y] with x < y and nothing strictly between"},
        "strict": _PAIRS,
        "names": {"type": "array", "items": {"type": "string"}},
    },
}

DOWNSET_MONOID = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "DownsetMonoid",
    "type": "object",
    "required": ["monoid", "downsets"],
    "additionalProperties": False,
    "properties": {
        "monoid": ORDERED_MONOID,
        "downsets": {"type": "array", "items": _NATS,
                     "description": "element i of the monoid as a sorted list of base elements"},
    },
}

CHECK = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "CheckReport",
    "type": "object",
    "required": ["mode", "results"],
    "additionalProperties": False,
    "properties": {
        "mode": {"enum": ["monoid", "lp", "ld"]},
        "results": {"type": "array", "items": {
            "type": "object",
            "required": ["inequality", "holds", "counterexample"],
            "additionalProperties": False,
            "properties": {
                "inequality": {"type": "string"},
                "holds": {"type": "boolean"},
                "counterexample": {"oneOf": [
                    {"type": "null"},
                    {"type": "object", "additionalProperties": {"type": "string"}},
                ]},
            },
        }},
    },
}

CLOSURE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ClosureFamily",
    "type": "object",
    "required": ["alphabet", "ops", "count", "languages"],
    "additionalProperties": False,
    "properties": {
        "alphabet": {"type": "array", "items": {"type": "string"}},
        "ops": {"type": "array", "items": {"type": "string"}},
        "count": _NAT,
        "languages": {"type": "array", "items": {"type": "string"}},
    },
}

DECOMPOSITION = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ShuffleDecomposition",
    "type": "object",
    "required": ["alphabet", "terms"],
    "additionalProperties": False,
    "properties": {
        "alphabet": {"type": "array", "items": {"type": "string"}},
        "terms": {"type": "array", "items": {"type": "object", "additionalProperties": EPSET}},
    },
}

NUMSG = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "NumericalSemigroupReport",
    "type": "object",
    "required": ["generators", "minimal_generators", "gcd", "conductor", "language", "rows"],
    "additionalProperties": False,
    "properties": {
        "generators": _NATS,
        "minimal_generators": _NATS,
        "gcd": _NAT,
        "conductor": {"oneOf": [_NAT, {"type": "null"}]},
        "language": {"type": "string"},
        "rows": {"type": "array", "items": {
            "type": "object",
            "required": ["m", "member", "holds"],
            "additionalProperties": False,
            "properties": {"m": _NAT, "member": {"type": "boolean"},
                           "holds": {"type": ["boolean", "null"]}},
        }},
    },
}

REPRODUCE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ReproduceReport",
    "type": "object",
    "required": ["passed", "criteria"],
    "additionalProperties": False,
    "properties": {
        "passed": {"type": "boolean"},
        "criteria": {"type": "array", "items": {
            "type": "object",
            "required": ["id", "title", "passed", "checks"],
            "additionalProperties": False,
            "properties": {
                "id": {"type": "integer"},
                "title": {"type": "string"},
                "passed": {"type": "boolean"},
                "checks": {"type": "array", "items": {
                    "type": "object",
                    "required": ["label", "passed"],
                    "additionalProperties": False,
                    "properties": {"label": {"type": "string"}, "passed": {"type": "boolean"}},
                }},
            },
        }},
    },
}

ALL = {
    "dfa": DFA,
    "monoid": ORDERED_MONOID,
    "order": ORDER,
    "downset": DOWNSET_MONOID,
    "check": CHECK,
    "closure": CLOSURE,
    "decomposition": DECOMPOSITION,
    "numsg": NUMSG,
    "reproduce": REPRODUCE,
}
