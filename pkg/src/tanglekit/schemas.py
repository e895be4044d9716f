"""JSON schemas for CLI requests and responses (draft 2020-12)."""
from __future__ import annotations

_STR = {"type": "string"}
_INT = {"type": "integer"}
_POS = {"type": "integer", "minimum": 1}
_BOOL = {"type": "boolean"}


def _obj(required: dict, optional: dict | None = None) -> dict:
    props = dict(required)
    props.update(optional or {})
    return {
        "type": "object",
        "properties": props,
        "required": sorted(required),
        "additionalProperties": False,
    }


ARG_SCHEMAS: dict[str, dict] = {
    "eval": _obj({"value": _STR}),
    "expand": _obj({"slope": _STR}),
    "pair-canon": _obj({"x": _STR, "y": _STR}),
    "classify-rsr": _obj({"x": _STR, "y": _STR, "d": _POS}, {"verbose": _BOOL}),
    "enumerate-family": _obj(
        {"base": _STR, "d": _POS, "family": {"enum": ["O", "I", "II", "III", "IV"]}, "bound": {"type": "integer", "minimum": 0}}
    ),
    "tb-rsr": _obj({"x": _STR, "y": _STR, "d": {"type": "integer", "minimum": 2}}, {"oriented": _BOOL}),
    "tb-site": _obj({"x": _STR, "y": _STR, "d": {"type": "integer", "minimum": 2}}, {"oriented": _BOOL}),
    "greene": _obj({"link": _STR}),
    "lisca": _obj({"link": _STR}),
    "surgery": _obj({"r": _INT, "s": _INT, "P": _INT, "Q": _INT, "n": _INT}),
    "surgery-solve": _obj({"source": _STR, "target": _STR, "d": _POS}, {"oriented": _BOOL}),
    "klein": _obj({"k": _INT, "bound": {"type": "integer", "minimum": 0}}),
    "catalog": _obj({"lens": _STR}),
    "render": _obj({"value": _STR}, {"format": {"enum": ["ascii", "svg"]}, "site": {"type": ["integer", "null"]}}),
}

COMMANDS = tuple(ARG_SCHEMAS)

REQUEST_SCHEMA = {
    "type": "object",
    "properties": {"command": {"enum": list(COMMANDS)}, "args": {"type": "object"}},
    "required": ["command", "args"],
    "additionalProperties": False,
}

_SLOPE = {"type": "string", "pattern": r"^-?\d+/\d+$"}
_CF = {"type": "string", "pattern": r"^\[(-?\d+(,-?\d+)*)?\]$"}
_PAIR = {"type": "array", "items": _INT, "minItems": 2, "maxItems": 2}
_ROWS = {"type": "array", "items": _PAIR, "minItems": 2, "maxItems": 2}
_WITNESS = {
    "type": "object",
    "properties": {
        "family": {"enum": ["O", "I", "II", "III", "IV"]},
        "d": _POS,
        "eps": {"enum": [1, -1]},
        "a": _INT,
        "b": _INT,
        "branch": {"enum": [1, -1, None]},
        "transport": {"oneOf": [_ROWS, {"type": "null"}]},
    },
    "required": ["family", "d", "eps", "a", "b", "branch", "transport"],
    "additionalProperties": False,
}
_LENS = _obj({"lens": _PAIR, "oriented": _BOOL})
_CHECK = _obj(
    {
        "link": _STR,
        "holds": _BOOL,
        "certificates": {
            "type": "array",
            "items": {"type": "object", "additionalProperties": _INT},
        },
    }
)

RESULT_SCHEMAS: dict[str, dict] = {
    "eval": _obj({"slope": _SLOPE}),
    "expand": _obj({"cf": _CF}),
    "pair-canon": _obj({"dist": {"type": "integer", "minimum": 0}, "residues": {"type": "array", "items": _INT}}),
    "classify-rsr": _obj({"families": {"type": "array", "items": _STR}, "witnesses": {"type": "array", "items": _WITNESS}}),
    "enumerate-family": _obj(
        {"members": {"type": "array", "items": _obj({"slope": _SLOPE, "witness": _WITNESS})}}
    ),
    "tb-rsr": _obj({"witness": {"oneOf": [_WITNESS, {"type": "null"}]}}),
    "tb-site": _obj({"witness": {"oneOf": [_WITNESS, {"type": "null"}]}, "before": {"type": ["string", "null"]}, "after": {"type": ["string", "null"]}}),
    "greene": _CHECK,
    "lisca": _CHECK,
    "surgery": _obj({"lens": _PAIR, "oriented": _BOOL, "core": _BOOL, "order": _INT}),
    "surgery-solve": _obj({"witnesses": {"type": "array", "items": _obj({"P": _INT, "Q": _INT, "n": _INT})}}),
    "klein": _obj(
        {
            "k": _INT,
            "type": {"enum": ["trivial-knot", "torus-knot", "toroidal-nonfibered"]},
            "surgeries": {"type": "array", "items": _obj({"slope": _SLOPE, "lens": _PAIR, "oriented": _BOOL})},
        }
    ),
    "catalog": _obj({"lens": _PAIR, "descriptors": {"type": "array", "items": {"type": "object"}}}),
    "render": _obj({"format": {"enum": ["ascii", "svg"]}, "text": _STR}),
}

RESPONSE_SCHEMA = {
    "type": "object",
    "properties": {
        "index": {"type": "integer", "minimum": 0},
        "command": {"type": ["string", "null"]},
        "ok": _BOOL,
        "result": {"type": "object"},
        "error": _STR,
    },
    "required": ["index", "command", "ok"],
    "additionalProperties": False,
    "oneOf": [
        {"properties": {"ok": {"const": True}}, "required": ["result"], "not": {"required": ["error"]}},
        {"properties": {"ok": {"const": False}}, "required": ["error"], "not": {"required": ["result"]}},
    ],
}
