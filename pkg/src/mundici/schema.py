"""JSON Schema of the ``--json`` output of the command-line tool."""

REPORT = {
    "type": "object",
    "required": ["check", "subject", "status", "checked", "exhaustive", "seed", "axiom", "witness", "note"],
    "properties": {
        "check": {"type": "string"},
        "subject": {"type": "string"},
        "status": {"enum": ["pass", "fail", "unknown"]},
        "checked": {"type": "integer", "minimum": 0},
        "exhaustive": {"type": "boolean"},
        "seed": {"type": ["integer", "null"]},
        "axiom": {"type": ["integer", "string", "null"]},
        "witness": {"type": ["object", "null"]},
        "note": {"type": "string"},
        "details": {"type": "array", "items": {"$ref": "#/$defs/report"}},
    },
    "additionalProperties": False,
}

OUTPUT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "status", "seed", "budget", "reports"],
    "properties": {
        "command": {"type": "string"},
        "status": {"enum": ["pass", "fail", "unknown"]},
        "seed": {"type": "integer"},
        "budget": {"type": "integer"},
        "max_len": {"type": "integer"},
        "reports": {"type": "array", "items": {"$ref": "#/$defs/report"}},
        "output": {"type": "array", "items": {"type": "string"}},
    },
    "additionalProperties": False,
    "$defs": {"report": REPORT},
}
