"""JSON schemas for every file and report the command line reads or writes."""

_INT_LIST = {"type": "array", "items": {"type": "integer"}}
_COLORING = {"type": "array", "items": {"type": "integer", "minimum": 1}}
_NULLABLE_COLORING = {"anyOf": [_COLORING, {"type": "null"}]}
_LISTS = {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 1},
                                      "minItems": 1}}

RUN = {
    "type": "object",
    "required": ["command", "inputs", "wall_time", "budgets"],
    "properties": {
        "command": {"type": "array", "items": {"type": "string"}},
        "inputs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["path", "sha256"],
                "properties": {"path": {"type": "string"}, "sha256": {"type": "string"}},
            },
        },
        "wall_time": {"type": "number", "minimum": 0},
        "budgets": {"type": "object"},
    },
}


def _report(required: list[str], properties: dict) -> dict:
    return {
        "type": "object",
        "required": required + ["run"],
        "properties": dict(properties, run=RUN),
    }


CERTIFICATE = {
    "type": "object",
    "required": ["rule", "k", "params", "conclusion"],
    "properties": {
        "rule": {"enum": ["AvgDegree", "BlockM2", "PlanarM4", "TriangleFreePlanarM3",
                          "OuterplanarM3", "Surface", "InducedSubgraph", "RegularCorollary",
                          "VaryingListsNecessary", "Kk1Exception"]},
        "k": {"type": "integer", "minimum": 0},
        "params": {"type": "object"},
        "conclusion": {"type": "string"},
    },
}

WITNESS = {
    "type": "object",
    "required": ["status", "k", "t", "nodes", "definitive", "lists", "coloring"],
    "properties": {
        "status": {"enum": ["found", "exhausted_negative", "budget_exceeded"]},
        "k": {"type": "integer"},
        "t": {"type": "integer"},
        "nodes": {"type": "integer"},
        "definitive": {"type": "boolean"},
        "lists": {"anyOf": [_LISTS, {"type": "null"}]},
        "coloring": _NULLABLE_COLORING,
    },
}

MNUMBER = {
    "type": "object",
    "required": ["m_lower", "m_upper", "determined", "upper_source", "witnesses", "notes"],
    "properties": {
        "m_lower": {"type": "integer", "minimum": 2},
        "m_upper": {"type": "integer", "minimum": 2},
        "determined": {"type": "boolean"},
        "upper_source": {"type": "string"},
        "witnesses": {"type": "object", "additionalProperties": WITNESS},
        "chi_u_2": {"type": ["integer", "null"]},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}

SCHEMAS = {
    "lists": {
        "type": "object",
        "required": ["lists"],
        "properties": {"lists": _LISTS},
    },
    "coloring": {
        "type": "object",
        "required": ["colors"],
        "properties": {"colors": _COLORING},
    },
    "metadata": {
        "type": "object",
        "properties": {
            "planar": {"type": "boolean"},
            "outerplanar": {"type": "boolean"},
            "euler_genus": {"type": "integer", "minimum": 0},
            "triangle_free": {"type": "boolean"},
        },
        "additionalProperties": False,
    },
    "claims": {
        "type": "object",
        "required": ["family", "params", "claims"],
        "properties": {
            "family": {"type": "string"},
            "params": {"type": "object"},
            "claims": {
                "type": "array",
                "items": {"type": "object", "required": ["claim", "status"]},
            },
        },
    },
    "solve": _report(["colorings", "count", "exhausted"], {
        "colorings": {"type": "array", "items": _COLORING},
        "count": {"type": "integer"},
        "exhausted": {"type": "boolean"},
    }),
    "unique": _report(["verdict", "coloring"], {
        "verdict": {"enum": ["none", "unique", "multiple"]},
        "coloring": _NULLABLE_COLORING,
        "colorings": {"type": "array", "items": _COLORING},
    }),
    "count": _report(["count", "saturated"], {
        "count": {"type": "integer", "minimum": 0},
        "saturated": {"type": "boolean"},
    }),
    "direct": _report(["coloring", "orientation", "bidirectional", "violations", "flow"], {
        "coloring": _COLORING,
        "orientation": {
            "type": "object",
            "required": ["edges", "marks", "trace", "converged", "iterations"],
            "properties": {
                "edges": {"type": "array", "items": _INT_LIST},
                "marks": {"type": "array",
                          "items": {"enum": ["undirected", "a->b", "b->a", "both"]}},
                "trace": {"type": "array", "items": _INT_LIST},
                "converged": {"type": "boolean"},
                "iterations": {"type": "integer"},
            },
        },
        "bidirectional": {"type": "array", "items": _INT_LIST},
        "violations": {"type": "array", "items": _INT_LIST},
        "alternate_coloring": _NULLABLE_COLORING,
        "flow": {"anyOf": [{"type": "object"}, {"type": "null"}]},
    }),
    "certify": _report(["certificate", "notes"], {
        "certificate": {"anyOf": [CERTIFICATE, {"type": "null"}]},
        "notes": {"type": "array", "items": {"type": "string"}},
        "all": {"type": "array", "items": CERTIFICATE},
    }),
    "mnumber": _report(["bounds"], {"bounds": MNUMBER}),
    "witness": _report(["witness"], {"witness": WITNESS}),
    "conjecture": _report(["scan"], {
        "scan": {
            "type": "object",
            "required": ["k", "scanned", "at_boundary", "negatives", "definitive_negatives",
                         "budget_exceeded", "skipped", "counterexamples"],
        },
    }),
    "gen": _report(["family", "files"], {
        "family": {"type": "string"},
        "files": {"type": "array", "items": {"type": "string"}},
        "claims": {"type": "array"},
    }),
    "audit-tight": _report(["colors"], {
        "colors": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["color", "lhs", "rhs", "b_t", "d_t", "equal"],
            },
        },
    }),
    "audit-t5": _report(["bound", "count", "satisfied", "complete_identical_lists"], {
        "bound": {"type": "string"},
        "count": {"type": "integer"},
        "satisfied": {"type": "boolean"},
        "complete_identical_lists": {"type": "boolean"},
    }),
}
