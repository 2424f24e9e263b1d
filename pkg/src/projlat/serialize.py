"""JSON document formats for every shared data shape.

Morphism payloads serialize as [re, im] pairs on the matrix backend and as
sorted [i, j] index pairs on the relational one, so documents are exact and
byte-stable. Reports round-trip through a kind-tagged registry; groupoid
documents are re-validated on load, which makes loading a law check.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import numpy as np

from .backend import (
    FHILB,
    REL,
    Morphism,
    ObjectRef,
    fhilb_morphism,
    fhilb_object,
    rel_morphism,
    rel_object,
)
from .errors import ParseError
from .frobenius import AxiomReport, FrobeniusAlgebra
from .groupoid import CopyablesReport, Groupoid, validate
from .order import (
    EquivalenceReport,
    LatticeReport,
    OrderComparison,
    OreReport,
    OrthogonalityReport,
    ProbeReport,
)
from .tensoralg import BiOrderReport


def object_to_doc(obj: ObjectRef) -> dict:
    doc: dict[str, Any] = {"backend": obj.backend, "size": obj.size}
    if obj.labels is not None:
        doc["labels"] = list(obj.labels)
    return doc


def object_from_doc(doc: dict) -> ObjectRef:
    try:
        backend, size = doc["backend"], int(doc["size"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed object document {doc!r}") from exc
    if backend == FHILB:
        if "labels" in doc and doc["labels"] is not None:
            raise ParseError("labels are a rel-only field")
        return fhilb_object(size)
    if backend == REL:
        labels = doc.get("labels")
        return rel_object(size, tuple(labels) if labels is not None else None)
    raise ParseError(f"unknown backend {backend!r}")


def morphism_to_doc(m: Morphism) -> dict:
    if m.dom.backend == FHILB:
        payload = [[[float(z.real), float(z.imag)] for z in row] for row in m.payload]
    else:
        payload = sorted([i, j] for i, j in m.payload)
    return {
        "kind": "morphism",
        "backend": m.dom.backend,
        "dom": object_to_doc(m.dom),
        "cod": object_to_doc(m.cod),
        "payload": payload,
    }


def morphism_from_doc(doc: dict) -> Morphism:
    try:
        backend = doc["backend"]
        dom = object_from_doc(doc["dom"])
        cod = object_from_doc(doc["cod"])
        payload = doc["payload"]
    except KeyError as exc:
        raise ParseError(f"morphism document missing field {exc}") from exc
    if backend != dom.backend:
        raise ParseError("backend tag disagrees with dom object")
    if backend == FHILB:
        try:
            arr = np.array(
                [[complex(re, im) for re, im in row] for row in payload],
                dtype=np.complex128,
            ).reshape(cod.size, dom.size)
        except (TypeError, ValueError) as exc:
            raise ParseError("malformed matrix payload") from exc
        return fhilb_morphism(dom, cod, arr)
    try:
        pairs = frozenset((int(i), int(j)) for i, j in payload)
    except (TypeError, ValueError) as exc:
        raise ParseError("malformed relation payload") from exc
    return rel_morphism(dom, cod, pairs)


def algebra_to_doc(alg: FrobeniusAlgebra) -> dict:
    return {
        "kind": "algebra",
        "backend": alg.backend,
        "carrier": object_to_doc(alg.carrier),
        "mult": morphism_to_doc(alg.mult),
        "unit": morphism_to_doc(alg.unit),
    }


def algebra_from_doc(doc: dict) -> FrobeniusAlgebra:
    for key in ("carrier", "mult", "unit"):
        if key not in doc:
            raise ParseError(f"algebra document missing field {key!r}")
    return FrobeniusAlgebra(
        object_from_doc(doc["carrier"]),
        morphism_from_doc(doc["mult"]),
        morphism_from_doc(doc["unit"]),
    )


def matrix_to_doc(mat: np.ndarray) -> dict:
    m = np.asarray(mat, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix document needs a square matrix, got {m.shape}")
    return {
        "kind": "matrix",
        "n": m.shape[0],
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    }


def matrix_from_doc(doc: dict) -> np.ndarray:
    try:
        n = int(doc["n"])
        arr = np.array(
            [[complex(re, im) for re, im in row] for row in doc["entries"]],
            dtype=np.complex128,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed matrix document") from exc
    if arr.shape != (n, n):
        raise ParseError(f"matrix entries shape {arr.shape} does not match n={n}")
    return arr


def groupoid_to_doc(g: Groupoid) -> dict:
    return g.to_doc()


def groupoid_from_doc(doc: dict) -> Groupoid:
    return validate(doc)


@dataclass(frozen=True)
class CliReport:
    """Envelope for command-level output: a command name plus nested reports."""

    command: str
    data: dict

    def to_dict(self) -> dict:
        return {"kind": "cli_report", "command": self.command, "data": self.data}

    @classmethod
    def from_dict(cls, doc: dict) -> "CliReport":
        return cls(doc["command"], doc["data"])


REPORT_KINDS = {
    "cli_report": CliReport,
    "axiom_report": AxiomReport,
    "copyables_report": CopyablesReport,
    "orthogonality_report": OrthogonalityReport,
    "equivalence_report": EquivalenceReport,
    "probe_report": ProbeReport,
    "lattice_report": LatticeReport,
    "order_comparison": OrderComparison,
    "ore_report": OreReport,
    "bi_order_report": BiOrderReport,
}


def parse_report(doc: dict):
    """Rebuild a report object from its kind-tagged document."""
    kind = doc.get("kind")
    cls = REPORT_KINDS.get(kind)
    if cls is None:
        raise ParseError(f"unknown report kind {kind!r}")
    return cls.from_dict(doc)


def detect_document(doc: dict) -> str:
    """Classify a loaded document: groupoid, algebra, matrix, morphism, report."""
    if not isinstance(doc, dict):
        raise ParseError("document must be a mapping")
    kind = doc.get("kind")
    if kind in ("algebra", "matrix", "morphism"):
        return kind
    if kind in REPORT_KINDS:
        return "report"
    if {"objects", "morphisms", "compose"} <= doc.keys():
        return "groupoid"
    raise ParseError("unrecognized document shape")


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_json(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
