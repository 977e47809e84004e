"""JSON Schemas (draft 2020-12) for every ``--format json`` output of the CLI."""

_num = {"type": "number"}
_int = {"type": "integer"}
_opt_num = {"type": ["number", "null"]}

ASSUMPTION_REPORT = {
    "type": "object",
    "required": ["which", "alpha", "n0", "holds", "margin", "details"],
    "properties": {
        "which": {"enum": ["A", "B"]},
        "alpha": _num,
        "n0": _int,
        "holds": {"type": "boolean"},
        "margin": _num,
        "details": {"type": "object"},
    },
}

S0_APPROXIMATION = {
    "type": "object",
    "required": ["alpha", "value", "epsilon", "gap", "degree_used", "n0", "certificate",
                 "root_tol", "skipped_degrees", "root_sequence",
                 "assumption_a", "assumption_b"],
    "properties": {
        "alpha": _num,
        "value": _num,
        "epsilon": _num,
        "gap": _num,
        "degree_used": _int,
        "n0": _int,
        "certificate": {"enum": ["certified", "heuristic"]},
        "root_tol": _num,
        "skipped_degrees": {"type": "array", "items": _int},
        "root_sequence": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["degree", "root"],
                "properties": {"degree": _int, "root": _num},
            },
        },
        "assumption_a": ASSUMPTION_REPORT,
        "assumption_b": ASSUMPTION_REPORT,
    },
}

EXISTENCE_REPORT = {
    "type": "object",
    "required": ["alpha", "max_degree_checked", "even_root_found", "odd_roots", "verdict",
                 "even_degrees_without_root"],
    "properties": {
        "alpha": _num,
        "max_degree_checked": _int,
        "even_root_found": {
            "oneOf": [
                {"type": "null"},
                {"type": "object", "required": ["degree", "root"],
                 "properties": {"degree": _int, "root": _num}},
            ]
        },
        "odd_roots": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["m", "root", "bound", "condition_ok"],
                "properties": {"m": _int, "root": _opt_num, "bound": _num,
                               "condition_ok": {"type": "boolean"}},
            },
        },
        "verdict": {"enum": ["exists", "no-evidence-of-root", "inconclusive"]},
        "even_degrees_without_root": {"type": "array", "items": _int},
    },
}

SOLVE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "status", "s0"],
    "properties": {"command": {"const": "solve"}, "status": {"const": "exists"},
                   "s0": S0_APPROXIMATION},
}

NO_ROOT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "status", "message", "existence"],
    "properties": {"command": {"type": "string"}, "status": {"const": "no-root-found"},
                   "message": {"type": "string"}, "existence": EXISTENCE_REPORT},
}

SWEEP = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "entries"],
    "properties": {
        "command": {"const": "sweep"},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["alpha", "verdict", "result", "error"],
                "properties": {
                    "alpha": _num,
                    "verdict": {"enum": ["exists", "no-evidence-of-root", "inconclusive", "error"]},
                    "result": {"oneOf": [{"type": "null"}, S0_APPROXIMATION, EXISTENCE_REPORT]},
                    "error": {"type": ["string", "null"]},
                },
            },
        },
    },
}

LOAD = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "column", "load", "s0"],
    "properties": {
        "command": {"const": "load"},
        "column": {"type": "object", "required": ["E", "I", "l", "alpha", "b1"]},
        "load": {
            "type": "object",
            "required": ["P", "lambda", "s0", "epsilon", "certificate"],
            "properties": {"P": _num, "lambda": _num, "s0": _num},
        },
        "s0": S0_APPROXIMATION,
    },
}

CURVE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "alpha", "s0", "lambda", "x", "y"],
    "properties": {
        "command": {"const": "curve"},
        "x": {"type": "array", "items": _num},
        "y": {"type": "array", "items": _num},
        "w": {"type": "array", "items": _num},
    },
}

VERIFY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "checks"],
    "properties": {
        "command": {"const": "verify"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["check", "alpha", "passed", "detail"],
                "properties": {"check": {"type": "string"}, "alpha": _num,
                               "passed": {"type": "boolean"}, "detail": {"type": "string"}},
            },
        },
    },
}

TABLE1 = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "alpha", "rows"],
    "properties": {
        "command": {"const": "table1"},
        "rows": {"type": "array", "items": EXISTENCE_REPORT["properties"]["odd_roots"]["items"]},
    },
}

TABLE2 = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "rows"],
    "properties": {
        "command": {"const": "table2"},
        "rows": {
            "type": "array",
            "items": {"type": "object", "required": ["degree", "alpha", "root"],
                      "properties": {"degree": _int, "alpha": _num, "root": _opt_num}},
        },
    },
}

BY_COMMAND = {
    "solve": SOLVE, "sweep": SWEEP, "load": LOAD, "curve": CURVE,
    "verify": VERIFY, "table1": TABLE1, "table2": TABLE2,
}
