"""Hypergraph Interchange Format: a JSON document for sharing hypergraphs.

Layout (canonical key order)::

    {
      "network-type": "undirected",
      "metadata": {"hif-version": "artifact-1", "name": ...},
      "nodes":      [{"node": id, "weight": w, "attrs": {...}}, ...],
      "edges":      [{"edge": id, "weight": w, "attrs": {...}}, ...],
      "incidences": [{"edge": id, "node": id, "weight": w, "attrs": {...}}, ...]
    }

Only ``incidences`` is required.  Ids may be JSON strings or numbers (numbers
are normalized to their text form).  Weights default to 1.0; canonical
emission omits default weights and empty attrs, sorts entities by id, and is
byte-stable.  Unknown keys are tolerated for forward compatibility: scalar
extras on an entity fold into its attrs, everything else is ignored with a
warning diagnostic.

``validate_hif`` reports all violations as diagnostics (JSON-pointer paths,
never raising); ``parse_hif`` raises on the first error-severity diagnostic,
so the two can never disagree about what is valid.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any

from .core import DEFAULT_WEIGHT, Hypergraph, Incidence, Properties
from .errors import (
    DuplicateIncidenceError,
    MalformedJsonError,
    NonFiniteWeightError,
    SchemaViolationError,
)

HIF_VERSION = "artifact-1"
NETWORK_TYPE = "undirected"

SEVERITY_ERROR = "error"
SEVERITY_WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    path: str  # JSON pointer
    message: str
    code: str = "schema"

    def __str__(self) -> str:
        return f"{self.severity} at {self.path or '<root>'}: {self.message}"


def _ptr(*tokens: Any) -> str:
    return "".join("/" + str(t).replace("~", "~0").replace("/", "~1") for t in tokens)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


class _Scan:
    """Single walk over a decoded document, shared by parse and validate."""

    def __init__(self, doc: Any):
        self.diagnostics: list[Diagnostic] = []
        self.name = ""
        self.node_props: dict[str, Properties] = {}
        self.edge_props: dict[str, Properties] = {}
        self.incidences: list[Incidence] = []
        self._walk(doc)

    def _error(self, path: str, message: str, code: str = "schema"):
        self.diagnostics.append(Diagnostic(SEVERITY_ERROR, path, message, code))

    def _warn(self, path: str, message: str, code: str = "ignored"):
        self.diagnostics.append(Diagnostic(SEVERITY_WARNING, path, message, code))

    def _walk(self, doc: Any):
        if not isinstance(doc, dict):
            self._error("", "top level must be a JSON object")
            return
        if NETWORK_TYPE != doc.get("network-type", NETWORK_TYPE):
            self._error(_ptr("network-type"), f"only {NETWORK_TYPE!r} networks are supported")
        metadata = doc.get("metadata", {})
        if not isinstance(metadata, dict):
            self._error(_ptr("metadata"), "metadata must be an object")
        elif "name" in metadata:
            if isinstance(metadata["name"], str):
                self.name = metadata["name"]
            else:
                self._error(_ptr("metadata", "name"), "name must be text")
        self._entity_list(doc, "nodes", "node", self.node_props)
        self._entity_list(doc, "edges", "edge", self.edge_props)
        self._incidence_list(doc)

    def _entity_list(self, doc: dict, key: str, id_key: str, store: dict[str, Properties]):
        if key not in doc:
            return
        items = doc[key]
        if not isinstance(items, list):
            self._error(_ptr(key), f"{key} must be an array")
            return
        for i, item in enumerate(items):
            path = _ptr(key, i)
            entity_id = self._entity_id(item, id_key, path)
            if entity_id is None:
                continue
            if entity_id in store:
                self._error(path, f"duplicate {id_key} id {entity_id!r}", code="duplicate-id")
                continue
            weight, attrs = self._weight_and_attrs(item, path, known=(id_key,))
            store[entity_id] = Properties(weight, attrs)

    def _incidence_list(self, doc: dict):
        if "incidences" not in doc:
            self._error("", "required key 'incidences' is missing")
            return
        items = doc["incidences"]
        if not isinstance(items, list):
            self._error(_ptr("incidences"), "incidences must be an array")
            return
        seen: set[tuple[str, str]] = set()
        for i, item in enumerate(items):
            path = _ptr("incidences", i)
            edge = self._entity_id(item, "edge", path)
            node = self._entity_id(item, "node", path) if edge is not None else None
            if edge is None or node is None:
                continue
            if (edge, node) in seen:
                self._error(path, f"duplicate incidence ({edge!r}, {node!r})", code="duplicate-incidence")
                continue
            seen.add((edge, node))
            weight, attrs = self._weight_and_attrs(item, path, known=("edge", "node"))
            self.incidences.append(Incidence(edge, node, weight, attrs))

    def _entity_id(self, item: Any, id_key: str, path: str) -> str | None:
        if not isinstance(item, dict):
            self._error(path, "entry must be an object")
            return None
        if id_key not in item:
            self._error(path, f"missing {id_key}")
            return None
        raw = item[id_key]
        if isinstance(raw, bool) or not isinstance(raw, (str, int, float)):
            self._error(_ptr_join(path, id_key), f"{id_key} id must be text or a number")
            return None
        text = raw if isinstance(raw, str) else str(raw)
        if not text.strip():
            self._error(_ptr_join(path, id_key), f"{id_key} id is empty", code="empty-identifier")
            return None
        return text

    def _weight_and_attrs(self, item: dict, path: str, known: tuple[str, ...]) -> tuple[float, dict]:
        weight = DEFAULT_WEIGHT
        if "weight" in item:
            raw = item["weight"]
            if not _is_number(raw):
                self._error(_ptr_join(path, "weight"), "weight must be a number")
            elif not math.isfinite(raw):
                self._error(_ptr_join(path, "weight"), "weight must be finite", code="non-finite-weight")
            else:
                weight = float(raw)
        attrs: dict[str, Any] = {}
        # scalar extras on the entity are treated as attributes
        for key in item:
            if key in known or key in ("weight", "attrs"):
                continue
            value = item[key]
            if self._is_scalar(value, _ptr_join(path, key)):
                attrs[key] = value
            else:
                self._warn(_ptr_join(path, key), f"ignored non-scalar extra key {key!r}")
        raw_attrs = item.get("attrs")
        if raw_attrs is not None:
            if not isinstance(raw_attrs, dict):
                self._error(_ptr_join(path, "attrs"), "attrs must be an object")
            else:
                for key, value in raw_attrs.items():
                    vpath = _ptr_join(path, "attrs") + _ptr(key)
                    if isinstance(value, (dict, list)):
                        self._error(vpath, "attribute values must be scalars")
                    elif self._is_scalar(value, vpath):
                        attrs[key] = value
        return weight, attrs

    def _is_scalar(self, value: Any, path: str) -> bool:
        if isinstance(value, (dict, list)):
            return False
        if _is_number(value) and not math.isfinite(value):
            self._error(path, "numeric attribute must be finite", code="non-finite-weight")
            return False
        return True

    def first_error(self) -> Diagnostic | None:
        for d in self.diagnostics:
            if d.severity == SEVERITY_ERROR:
                return d
        return None


def _ptr_join(path: str, token: Any) -> str:
    return path + _ptr(token)


def _decode(data: bytes | str) -> Any:
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    return json.loads(text)


def validate_hif(data: bytes | str) -> list[Diagnostic]:
    """All schema violations in the document; empty list means valid.

    Never raises on invalid content; undecodable input yields a single
    malformed-json diagnostic.
    """
    try:
        doc = _decode(data)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        return [Diagnostic(SEVERITY_ERROR, "", f"not valid UTF-8 JSON: {exc}", code="malformed-json")]
    return _Scan(doc).diagnostics


def parse_hif(data: bytes | str) -> Hypergraph:
    """Build a hypergraph from a HIF document, raising on the first violation."""
    try:
        doc = _decode(data)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise MalformedJsonError(f"not valid UTF-8 JSON: {exc}") from None
    scan = _Scan(doc)
    first = scan.first_error()
    if first is not None:
        if first.code == "duplicate-incidence":
            raise DuplicateIncidenceError(first.path, first.message)
        if first.code == "non-finite-weight":
            raise NonFiniteWeightError(str(first))
        raise SchemaViolationError(first.path, first.message)
    return Hypergraph(
        scan.incidences,
        node_props=scan.node_props,
        edge_props=scan.edge_props,
        name=scan.name,
    )


def _entity_obj(id_key: str, entity_id: str, props: Properties) -> dict:
    obj: dict[str, Any] = {id_key: entity_id}
    if props.weight != DEFAULT_WEIGHT:
        obj["weight"] = props.weight
    if props.attrs:
        obj["attrs"] = {k: props.attrs[k] for k in sorted(props.attrs)}
    return obj


def emit_hif(h: Hypergraph) -> bytes:
    """Canonical serialization: fixed key order, ids sorted, two-space indent,
    defaults omitted.  Byte-stable: equal hypergraphs emit identical bytes."""
    metadata: dict[str, Any] = {"hif-version": HIF_VERSION}
    if h.name:
        metadata["name"] = h.name
    doc = {
        "network-type": NETWORK_TYPE,
        "metadata": metadata,
        "nodes": [_entity_obj("node", n, h.node_properties(n)) for n in h.nodes],
        "edges": [_entity_obj("edge", e, h.edge_properties(e)) for e in h.edges],
        "incidences": [
            {
                "edge": inc.edge,
                "node": inc.node,
                **({"weight": inc.weight} if inc.weight != DEFAULT_WEIGHT else {}),
                **({"attrs": {k: inc.attrs[k] for k in sorted(inc.attrs)}} if inc.attrs else {}),
            }
            for inc in h.incidences
        ],
    }
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
